"""
Report Builder Node.
Sorts the final basis and compares its degree against the bound chain
max(deg U, alpha*n) <= n*deg U <= eq3.
"""
import sys
from pathlib import Path
from typing import Any, Dict

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from graphs.state import TropicalBasisState
from tools.bounds import eq3_tropical_basis_bound
from tools.errors import ParameterError, UnitIdealError
from tools.groebner import krull_dimension, minimal_degree
from tools.logger import StageType
from tools.logging_middleware import log_stage, progress


def build_bound_chain(state: TropicalBasisState, degree: int, universal_degree: int, alpha: int) -> Dict[str, Any]:
    ideal = state["ideal"]
    n = ideal.n
    chain: Dict[str, Any] = {
        "observed": degree,
        "max_degU_alpha_n": max(universal_degree, alpha * n),
        "n_degU": n * universal_degree,
        "eq3": None
    }
    try:
        r = krull_dimension(ideal)
        report = eq3_tropical_basis_bound(universal_degree, alpha, n, minimal_degree(ideal), r)
        chain["eq3"] = report.last()
    except (UnitIdealError, ParameterError):
        # r = 0, the unit ideal, or a constant universal basis: no eq3 value
        pass
    return chain


@log_stage(StageType.REPORT_BUILDER)
def report_builder_node(state: TropicalBasisState) -> TropicalBasisState:
    progress("=== Report Builder Node ===")
    basis = sorted(set(state["basis"]), key=lambda p: (p.degree(), p.to_string()))
    degree = max(f.degree() for f in basis)
    universal_degree = max(f.degree() for f in state["universal_basis"])
    alpha = state["classification"].max_alpha()

    report = {
        "degree": degree,
        "universal_degree": universal_degree,
        "alpha": alpha,
        "basis_size": len(basis),
        "witness_count": len(state.get("witnesses") or []),
        "bound_chain": build_bound_chain(state, degree, universal_degree, alpha)
    }
    progress(f"Degree: {degree} (universal {universal_degree}, alpha {alpha})")
    return {
        **state,
        "basis": basis,
        "report": report
    }

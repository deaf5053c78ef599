"""
Universal Basis Node.
Traverses the Groebner fan and seeds the candidate basis with the union of
all reduced Groebner bases.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from configs.config import config
from graphs.state import TropicalBasisState
from tools.gfan import groebner_fan
from tools.logger import StageType
from tools.logging_middleware import log_stage, progress


@log_stage(StageType.UNIVERSAL_BASIS)
def universal_basis_node(state: TropicalBasisState) -> TropicalBasisState:
    """
    Compute the Groebner fan and the universal Groebner basis.

    Args:
        state: Current graph state with `ideal`

    Returns:
        Updated state with gfan, universal_basis and the initial candidate basis
    """
    progress("=== Universal Basis Node ===")
    ideal = state["ideal"]
    budget = state.get("budget") or config.get("gfan.max_cones")
    fan = groebner_fan(ideal, budget=budget, threads=state.get("threads") or 1)
    universal = fan.universal_basis()
    progress(f"Maximal cones: {len(fan.maximal_cones)}, universal basis size: {len(universal)}")

    return {
        **state,
        "gfan": fan,
        "universal_basis": universal,
        "basis": list(universal),
        "witnesses": [],
        "round": 0
    }

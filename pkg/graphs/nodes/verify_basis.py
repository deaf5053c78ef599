"""
Verify Basis Node.
Runs the full tropical basis check on the current candidate.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from graphs.state import TropicalBasisState
from tools.logger import StageType
from tools.logging_middleware import log_stage, progress
from tools.tropical import is_tropical_basis


@log_stage(StageType.VERIFY_BASIS)
def verify_basis_node(state: TropicalBasisState) -> TropicalBasisState:
    progress("=== Verify Basis Node ===")
    check = is_tropical_basis(state["ideal"], state["basis"], classified=state["classification"])
    progress(f"Tropical basis: {'✓' if check.result else '✗'}")
    return {
        **state,
        "verification": {
            "result": check.result,
            "certificate": check.certificate
        }
    }


def route_after_verify(state: TropicalBasisState) -> str:
    verification = state.get("verification") or {}
    return "report_builder" if verification.get("result") else "witness_search"

"""
Prevariety Check Node.
Collects relative-interior points of non-tropical Groebner cones that the
current candidate's prevariety still contains.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from graphs.state import TropicalBasisState
from tools.logger import StageType
from tools.logging_middleware import log_stage, progress
from tools.tropical import in_prevariety


@log_stage(StageType.PREVARIETY_CHECK)
def prevariety_check_node(state: TropicalBasisState) -> TropicalBasisState:
    progress("=== Prevariety Check Node ===")
    basis = state["basis"]
    pending = [
        C.interior for C in state["classification"].non_tropical_cones()
        if in_prevariety(basis, C.interior)
    ]
    progress(f"Pending points: {len(pending)}")
    return {
        **state,
        "pending": pending
    }


def route_after_prevariety(state: TropicalBasisState) -> str:
    return "witness_search" if state.get("pending") else "verify_basis"

"""
Tropical Variety Node.
Flags every Groebner cone whose initial ideal at its relative-interior point
is monomial-free.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from graphs.state import TropicalBasisState
from tools.logger import StageType
from tools.logging_middleware import log_stage, progress
from tools.tropical import classify_groebner_fan


@log_stage(StageType.TROPICAL_VARIETY)
def tropical_variety_node(state: TropicalBasisState) -> TropicalBasisState:
    progress("=== Tropical Variety Node ===")
    classified = classify_groebner_fan(state["ideal"], state["gfan"], threads=state.get("threads") or 1)
    progress(f"Tropical cones: {sum(classified.in_tropical)} of {len(classified.in_tropical)}")
    return {
        **state,
        "classification": classified
    }

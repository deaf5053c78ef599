"""
Witness Search Node.
Adds a polynomial with monomial initial form at every pending point, or at
the certificate left by a failed verification.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from configs.config import config
from graphs.state import TropicalBasisState
from tools.errors import BudgetExceededError
from tools.logger import StageType
from tools.logging_middleware import log_stage, progress
from tools.tropical import find_witness, in_prevariety


@log_stage(StageType.WITNESS_SEARCH)
def witness_search_node(state: TropicalBasisState) -> TropicalBasisState:
    """
    Lift one witness per target weight into the candidate basis.

    Targets are the pending points when there are any, otherwise the
    verification certificate. A target already cut out by an earlier witness
    of this round is skipped.

    Raises:
        BudgetExceededError: more rounds than tbasis.max_rounds
    """
    progress("=== Witness Search Node ===")
    round_number = state.get("round", 0) + 1
    max_rounds = config.get("tbasis.max_rounds", 50)
    if round_number > max_rounds:
        raise BudgetExceededError(f"no tropical basis after {max_rounds} witness rounds")

    targets = list(state.get("pending") or [])
    if not targets:
        certificate = (state.get("verification") or {}).get("certificate")
        if certificate is not None:
            targets = [certificate]

    ideal = state["ideal"]
    basis = list(state["basis"])
    witnesses = list(state.get("witnesses") or [])
    degree_cap = config.get("groebner.degree_cap_override")
    for w in targets:
        if not in_prevariety(basis, w):
            continue
        f = find_witness(ideal, w, degree_cap)
        progress(f"Witness at {[str(x) for x in w]}: {f}")
        if f not in basis:
            basis.append(f)
            witnesses.append(f)

    return {
        **state,
        "basis": basis,
        "witnesses": witnesses,
        "pending": [],
        "verification": None,
        "round": round_number
    }

"""
State definition for the tropical basis pipeline.
"""
from typing import TypedDict, Optional, List, Dict, Any, Tuple
from fractions import Fraction

from tools.gfan import GroebnerFanResult
from tools.groebner import Ideal
from tools.ring import Polynomial
from tools.tropical import ClassifiedFan


class TropicalBasisState(TypedDict):
    """
    State carried through the tropical basis graph.

    Stages:
    - universal_basis: Groebner fan and universal Groebner basis
    - tropical_variety: tropical flag per Groebner cone
    - prevariety_check: non-tropical cone points still in the current prevariety
    - witness_search: witnesses at pending points or at a certificate
    - verify_basis: full tropical basis check
    - report_builder: degree report and bound chain
    """
    # Input
    ideal: Ideal
    threads: int
    budget: Optional[int]

    # Metadata
    trace_id: Optional[str]
    round: int
    stage_timings: Optional[Dict[str, float]]

    # Universal basis
    gfan: Optional[GroebnerFanResult]
    universal_basis: Optional[List[Polynomial]]

    # Tropical variety
    classification: Optional[ClassifiedFan]

    # Current candidate and its growth
    basis: Optional[List[Polynomial]]
    pending: Optional[List[Tuple[Fraction, ...]]]
    witnesses: Optional[List[Polynomial]]

    # Verification
    verification: Optional[Dict[str, Any]]

    # Report
    report: Optional[Dict[str, Any]]

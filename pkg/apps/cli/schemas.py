"""
Report models for `--json` output.

Field order is the serialization order, so identical runs print identical
JSON. Exact rationals and large integers are carried as strings.
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel


class ConeReport(BaseModel):
    dim: int
    lineality_dim: int
    ineqs: List[List[int]]
    eqs: List[List[int]]
    interior: List[str]


class GroebnerBasisReport(BaseModel):
    ring: List[str]
    order: str
    basis: List[str]
    leading: List[str]
    degree: int


class GroebnerFanReport(BaseModel):
    ring: List[str]
    maximal_cones: int
    f_vector: List[int]
    cones: List[ConeReport]
    bases: List[List[str]]


class UniversalBasisReport(BaseModel):
    ring: List[str]
    basis: List[str]
    degree: int
    size: int


class TropicalReport(BaseModel):
    ring: List[str]
    source: str
    support_empty: bool
    dim: int
    f_vector: List[int]
    refinement_f_vector: Optional[List[int]] = None
    maximal: List[int]
    cones: List[ConeReport]


class BoundChain(BaseModel):
    observed: int
    max_degU_alpha_n: int
    n_degU: int
    eq3: Optional[str] = None


class TropicalBasisReport(BaseModel):
    ring: List[str]
    support_empty: bool
    dim: int
    f_vector: List[int]
    cones: List[ConeReport]
    basis: List[str]
    degree: int
    universal_degree: int
    witnesses: List[str]
    alpha: int
    rounds: int
    bound_chain: BoundChain


class TropicalBasisCheckReport(BaseModel):
    is_tropical_basis: bool
    certificate: Optional[List[str]] = None


class WitnessReport(BaseModel):
    weight: List[str]
    witness: str
    initial_form: str
    degree: int


class BoundReportModel(BaseModel):
    name: str
    inputs: Dict[str, int]
    value: str
    values: Dict[str, str] = {}
    chain: List[Dict[str, str]] = []
    consistent: bool = True


class LambdaReport(BaseModel):
    d: int
    n: int
    values: List[int]
    exact: bool
    nodes: int
    frontier: int
    witnesses: List[List[List[int]]]


class FVectorReport(BaseModel):
    ring: List[str]
    variety_f_vector: List[int]
    prevariety_refinement_f_vector: List[int]
    bound_by_dim: Dict[str, int]
    within_bound: bool


class FixtureCheck(BaseModel):
    name: str
    category: str
    passed: bool
    checks: Dict[str, bool]
    details: Dict[str, Any] = {}
    error: Optional[str] = None


class FixturesReport(BaseModel):
    total: int
    passed: int
    failed: int
    cases: List[FixtureCheck]


class LambdaTableReport(BaseModel):
    entries: List[LambdaReport]


class PlueckerIdealReport(BaseModel):
    D: int
    N: int
    three_term: bool
    ring: List[str]
    relations: List[str]

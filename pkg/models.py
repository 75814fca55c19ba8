from pydantic import BaseModel, Field
from typing import Any, Dict, List, Literal, Optional, Tuple, Union
from enum import Enum

# Vertex labels are residues, residue tuples or divisors
Label = Union[int, Tuple[int, ...]]
# Girth and diameter; "inf" stands for an infinite value
Distance = Union[int, Literal["inf"]]


class GraphFamily(str, Enum):
    RING = "ring"
    PRODUCT = "product"
    TYPEGRAPH = "typegraph"
    POSET = "poset"


class OutputFormat(str, Enum):
    DOT = "dot"
    JSON = "json"
    CSV = "csv"


class WitnessKind(str, Enum):
    HOLE = "hole"
    ANTIHOLE = "antihole"


class Status(str, Enum):
    PASS = "pass"
    COUNTEREXAMPLE = "counterexample"
    RESOURCE_LIMIT = "resource_limit"


class Expectation(str, Enum):
    HOLDS = "holds"
    REFUTED = "refuted"


class DomainKind(str, Enum):
    N = "n"
    DIMS = "dims"


class BasicInvariants(BaseModel):
    complete: bool
    regular: bool
    connected: bool
    eulerian: bool
    degree_sequence: List[int]


class MetricInvariants(BaseModel):
    girth: Distance
    diameter: Distance


class DominationStats(BaseModel):
    gamma: int
    min_count: int


class ChordalityResult(BaseModel):
    chordal: bool
    witness: Optional[List[Label]] = None


class PerfectnessResult(BaseModel):
    perfect: bool
    witness: Optional[List[Label]] = None
    witness_kind: Optional[WitnessKind] = None


class PropertyReport(BaseModel):
    """Oracle-computed properties of one graph; absent entries were not requested"""
    complete: Optional[bool] = None
    regular: Optional[bool] = None
    connected: Optional[bool] = None
    eulerian: Optional[bool] = None
    chromatic_number: Optional[Union[int, Literal["undefined"]]] = None
    complete_multipartite: Optional[List[List[Label]]] = None
    girth: Optional[Distance] = None
    diameter: Optional[Distance] = None
    clique_number: Optional[int] = None
    independence_number: Optional[int] = None
    domination_number: Optional[int] = None
    min_dominating_count: Optional[int] = None
    vertex_cover_number: Optional[int] = None
    chordal: Optional[bool] = None
    chordal_witness: Optional[List[Label]] = None
    planar: Optional[bool] = None
    perfect: Optional[bool] = None
    perfect_witness: Optional[List[Label]] = None
    perfect_witness_kind: Optional[WitnessKind] = None
    simplicial: Optional[List[Label]] = None


class TypeClassInfo(BaseModel):
    n: int
    a: int
    members: List[int]
    size: int


class ZnTheoremReport(BaseModel):
    n: int
    perfect: bool
    complete: bool
    chordal: bool
    clique_number: int
    gamma: int
    gamma_beta_perfect: bool
    simplicial_exists: bool
    kpartite_k_squarefree: Optional[int] = None
    min_dominating_count: Optional[int] = None


class ProductReport(BaseModel):
    dims: List[int]
    combined_signature: List[int]
    perfect: bool
    complete: bool
    complete_bipartite: Optional[bool] = None
    bipartite: Optional[bool] = None
    chordal: bool
    regular: Optional[bool] = None
    clique_lower_bound: int
    domination_bounds: Tuple[int, int]
    k_partite_k: Optional[int] = None
    simplicial_exists: bool


class DnReport(BaseModel):
    n: int
    trivial: bool
    diameter_class: Union[int, Literal["trivial"]]
    complete: bool
    complete_bipartite: bool
    clique_number: int
    clique_leading_coeff: Optional[int] = None
    clique_second_coeff: Optional[int] = None
    domination: int
    regular: bool
    girth_class: Union[int, Literal["inf", "trivial"]]
    perfect: bool
    chordal: bool
    simplicial: List[int]
    planar: bool
    eulerian: bool
    edge_count: int
    edge_count_squarefree: Optional[int] = None
    independence_lower_bound: Optional[int] = None


class ClaimSummary(BaseModel):
    id: str
    description: str
    domain: DomainKind
    default_range: Tuple[int, int]
    expect: Expectation


class Certificate(BaseModel):
    parameter: Union[int, List[int]]
    predicted: Any = None
    observed: Any = None
    witness: Any = None


class VerificationOutcome(BaseModel):
    claim_id: str
    instances_checked: int
    status: Status
    expected: Expectation
    as_expected: bool
    certificate: Optional[Certificate] = None
    notes: Optional[str] = None


class GraphDocument(BaseModel):
    family: GraphFamily
    n: Optional[int] = None
    dims: Optional[List[int]] = None
    strong: Optional[bool] = None
    vertices: List[Label]
    edges: List[Tuple[Label, Label]]
    loops: Optional[List[Label]] = None
    properties: Optional[Dict[str, Any]] = None
    closed_form: Optional[Dict[str, Any]] = None


class OutputDocument(BaseModel):
    format: OutputFormat
    payload: str = Field(default="")

"""
Zero-divisor graphs of finite products Z_n1 x ... x Z_nk, their type
graphs, and the closed-form product classification.
"""
import itertools
import logging
from dataclasses import dataclass
from math import gcd, prod
from typing import Dict, List, Sequence, Tuple

from models import ProductReport
from services.errors import InvalidInput, ResourceLimitExceeded
from services.graph import LabeledGraph
from services.numthy import (
    checked_product,
    combined_signature,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    star_pair,
)
from services.theorems import (
    closed_clique_number,
    closed_domination_number,
    is_smith_signature,
    simplicial_exists_closed,
    zn_report,
)
from services.zn import DEFAULT_CONSTRUCTION_CAP

logger = logging.getLogger(__name__)

Vertex = Tuple[int, ...]


@dataclass(frozen=True)
class ProductDims:
    dims: Tuple[int, ...]

    def __post_init__(self):
        if not self.dims:
            raise InvalidInput("dims must be nonempty")
        for d in self.dims:
            if isinstance(d, bool) or not isinstance(d, int) or d < 2:
                raise InvalidInput(f"every dim must be an integer >= 2, got {d!r}")
        checked_product(self.dims)

    @classmethod
    def of(cls, dims: Sequence[int]) -> "ProductDims":
        return cls(tuple(dims))

    @classmethod
    def parse(cls, text: str) -> "ProductDims":
        """Parse '4,9' or '4x9' into dims (4, 9)"""
        parts = [part.strip() for part in text.replace("x", ",").split(",")]
        try:
            return cls(tuple(int(part) for part in parts))
        except ValueError:
            raise InvalidInput(f"cannot parse dims from {text!r}") from None

    @property
    def k(self) -> int:
        return len(self.dims)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.dims)


def product_vertex_count(d: ProductDims) -> int:
    return prod(d.dims) - prod(euler_phi(n) for n in d.dims) - 1


def _is_product_vertex(a: Vertex, d: ProductDims) -> bool:
    return any(x != 0 for x in a) and any(gcd(x, n) > 1 for x, n in zip(a, d.dims))


def vertex_type(a: Vertex, d: ProductDims) -> Vertex:
    """Class label of a vertex: componentwise gcd, with 0 kept as 0"""
    if len(a) != d.k or not _is_product_vertex(a, d):
        raise InvalidInput(f"{a} is not a nonzero zero-divisor of Z_{d}")
    return tuple(0 if x == 0 else gcd(x, n) for x, n in zip(a, d.dims))


def build_product_graph(d: ProductDims, cap: int = DEFAULT_CONSTRUCTION_CAP) -> LabeledGraph:
    count = product_vertex_count(d)
    if count > cap:
        raise ResourceLimitExceeded(
            f"Gamma(Z_{d}) has {count} vertices, above the construction cap of {cap}", limit=cap
        )
    labels = [a for a in itertools.product(*(range(n) for n in d.dims)) if _is_product_vertex(a, d)]
    # per slot: bitmask of vertices whose component is a multiple of each step
    multiples: List[Dict[int, int]] = []
    for slot, n in enumerate(d.dims):
        by_value = [0] * n
        for i, a in enumerate(labels):
            by_value[a[slot]] |= 1 << i
        multiples.append(
            {step: sum(by_value[v] for v in range(0, n, step)) for step in divisors(n)}
        )
    adj = []
    for i, a in enumerate(labels):
        mask = ~(1 << i)
        for slot, (x, n) in enumerate(zip(a, d.dims)):
            mask &= multiples[slot][n // gcd(x, n)]
        adj.append(mask)
    logger.debug("built Gamma(Z_%s) with %d vertices", d, count)
    return LabeledGraph(labels, adj)


def product_type_labels(d: ProductDims) -> List[Vertex]:
    options = [[0] + [x for x in divisors(n) if x < n] for n in d.dims]
    zero = (0,) * d.k
    one = (1,) * d.k
    return sorted(t for t in itertools.product(*options) if t != zero and t != one)


def build_product_type_graph(
    d: ProductDims, strong: bool = False, cap: int = DEFAULT_CONSTRUCTION_CAP
) -> LabeledGraph:
    labels = product_type_labels(d)
    if len(labels) > cap:
        raise ResourceLimitExceeded(
            f"type graph of Z_{d} has {len(labels)} labels, above the cap of {cap}", limit=cap
        )

    def annihilate(x: Vertex, y: Vertex) -> bool:
        return all(a * b % n == 0 for a, b, n in zip(x, y, d.dims))

    return LabeledGraph.from_predicate(
        labels, annihilate, (lambda x: annihilate(x, x)) if strong else None
    )


def product_type_partition(d: ProductDims, cap: int = DEFAULT_CONSTRUCTION_CAP) -> Dict[Vertex, List[Vertex]]:
    classes: Dict[Vertex, List[Vertex]] = {label: [] for label in product_type_labels(d)}
    for a in build_product_graph(d, cap).labels:
        classes[vertex_type(a, d)].append(a)
    return classes


def canonical_type_signature(d: ProductDims) -> List[List[int]]:
    return sorted(factorize(n).signature.as_list() for n in d.dims)


def is_chordal_product_closed(d: ProductDims) -> bool:
    dims = tuple(sorted(d.dims))
    if dims == (2, 2, 2):
        return True
    if len(dims) != 2 or dims[0] != 2:
        return False
    other = factorize(dims[1])
    return other.is_prime_power and other.exponents[0] <= 2


def clique_lower_bound(d: ProductDims) -> int:
    """
    Sum of the slot clique numbers plus every product, over two or more
    slots, of the self-annihilating counts n_i/n_i* - 1.
    """
    sizes = [n // star_pair(n)[0] - 1 for n in d.dims]
    base = sum(closed_clique_number(n) for n in d.dims)
    return base + prod(1 + s for s in sizes) - 1 - sum(sizes)


def domination_bounds(d: ProductDims) -> Tuple[int, int]:
    gammas = [closed_domination_number(n) for n in d.dims]
    if d.k == 1:
        return gammas[0], gammas[0]
    upper = sum(1 if is_prime(n) else 2 * g + 1 for n, g in zip(d.dims, gammas))
    return sum(gammas), upper


def printed_domination_bounds(d: ProductDims) -> Tuple[int, int]:
    total = sum(closed_domination_number(n) for n in d.dims)
    return total, 2 * total


def product_report(d: ProductDims) -> ProductReport:
    signature = combined_signature(d.dims)
    dims = d.dims
    k = d.k
    all_prime = all(is_prime(n) for n in dims)
    if k == 1:
        single = zn_report(dims[0])
        complete = single.complete
        simplicial = single.simplicial_exists
        regular = None
        complete_bipartite = bipartite = None
    else:
        complete = k == 2 and dims == (2, 2)
        simplicial = any(n == 2 or simplicial_exists_closed(n) for n in dims)
        regular = False if not all_prime else None
        if k == 2:
            complete_bipartite = all_prime
            bipartite = all_prime or any(is_prime(a) and b == 4 for a, b in (dims, dims[::-1]))
        else:
            complete_bipartite = bipartite = False
    return ProductReport(
        dims=list(dims),
        combined_signature=signature.as_list(),
        perfect=is_smith_signature(signature),
        complete=complete,
        complete_bipartite=complete_bipartite,
        bipartite=bipartite,
        chordal=is_chordal_product_closed(d) if k >= 2 else zn_report(dims[0]).chordal,
        regular=regular,
        clique_lower_bound=clique_lower_bound(d),
        domination_bounds=domination_bounds(d),
        k_partite_k=k if all_prime else None,
        simplicial_exists=simplicial,
    )

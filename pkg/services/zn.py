"""Builders for the zero-divisor graph of Z_n, its type classes and type graphs."""
import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, List

from models import TypeClassInfo
from services.errors import InvalidInput, ResourceLimitExceeded
from services.graph import LabeledGraph
from services.numthy import divisors, euler_phi

logger = logging.getLogger(__name__)

DEFAULT_CONSTRUCTION_CAP = 5000


@dataclass(frozen=True)
class RingGraphSpec:
    n: int
    graph: LabeledGraph


def _check_modulus(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidInput(f"n must be an integer >= 2, got {n!r}")


def ring_vertex_count(n: int) -> int:
    _check_modulus(n)
    return n - euler_phi(n) - 1


def build_ring_graph(n: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> RingGraphSpec:
    """Gamma(Z_n): nonzero zero-divisors, adjacent when their product is 0 mod n"""
    count = ring_vertex_count(n)
    if count > cap:
        raise ResourceLimitExceeded(
            f"Gamma(Z_{n}) has {count} vertices, above the construction cap of {cap}", limit=cap
        )
    labels = [x for x in range(2, n) if gcd(x, n) > 1]
    index = {x: i for i, x in enumerate(labels)}
    adj = []
    for u in labels:
        # u*v = 0 mod n exactly when n/gcd(u, n) divides v
        step = n // gcd(u, n)
        adj.append(sum(1 << index[v] for v in range(step, n, step) if v != u))
    logger.debug("built Gamma(Z_%d) with %d vertices", n, count)
    return RingGraphSpec(n=n, graph=LabeledGraph(labels, adj))


def is_vertex(x: int, n: int) -> bool:
    return 0 < x < n and gcd(x, n) > 1


def vertex_type(x: int, n: int) -> int:
    if not is_vertex(x, n):
        raise InvalidInput(f"{x} is not a nonzero zero-divisor of Z_{n}")
    return gcd(x, n)


def is_self_annihilating(x: int, n: int) -> bool:
    return x * x % n == 0


def type_labels(n: int) -> List[int]:
    """Proper nontrivial divisors of n, the labels of the type classes"""
    _check_modulus(n)
    return [a for a in divisors(n) if 1 < a < n]


def type_class_info(n: int, a: int) -> TypeClassInfo:
    _check_modulus(n)
    if not (1 < a < n and n % a == 0):
        raise InvalidInput(f"{a} is not a proper nontrivial divisor of {n}")
    members = [x for x in range(a, n, a) if gcd(x, n) == a]
    return TypeClassInfo(n=n, a=a, members=members, size=euler_phi(n // a))


def type_partition(n: int) -> Dict[int, List[int]]:
    """Vertices of Gamma(Z_n) grouped by gcd with n"""
    _check_modulus(n)
    classes: Dict[int, List[int]] = {a: [] for a in type_labels(n)}
    for x in range(2, n):
        g = gcd(x, n)
        if g > 1:
            classes[g].append(x)
    return classes


def build_type_graph(n: int, strong: bool = False) -> LabeledGraph:
    """Type graph of Z_n; the strong variant marks self-annihilating classes with loops"""
    labels = type_labels(n)
    return LabeledGraph.from_predicate(
        labels,
        lambda a, b: a * b % n == 0,
        (lambda a: a * a % n == 0) if strong else None,
    )

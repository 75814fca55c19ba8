"""
Zero-divisor graph of the divisor poset D_n and its closed-form report.

A vertex is a divisor d > 1 missing some prime of n; two vertices are
adjacent when they are coprime. Everything about D_n depends only on the
supports of its vertices, which is what the closed forms below count.
"""
import logging
from dataclasses import dataclass
from math import comb, gcd, prod
from typing import List

from models import DnReport
from services.errors import InvalidInput, ResourceLimitExceeded
from services.graph import LabeledGraph
from services.numthy import divisors, factorize, radical
from services.zn import DEFAULT_CONSTRUCTION_CAP

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DnGraphSpec:
    n: int
    graph: LabeledGraph


def _check(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidInput(f"n must be an integer >= 2, got {n!r}")


def dn_vertex_count(n: int) -> int:
    _check(n)
    exps = factorize(n).exponents
    return prod(a + 1 for a in exps) - 1 - prod(exps)


def dn_vertices(n: int) -> List[int]:
    rad = radical(n)
    return [d for d in divisors(n) if d > 1 and d % rad != 0]


def build_dn_graph(n: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> DnGraphSpec:
    count = dn_vertex_count(n)
    if count > cap:
        raise ResourceLimitExceeded(
            f"D_{n} has {count} vertices, above the construction cap of {cap}", limit=cap
        )
    graph = LabeledGraph.from_predicate(dn_vertices(n), lambda d, e: gcd(d, e) == 1)
    return DnGraphSpec(n=n, graph=graph)


def dn_degree(d: int, n: int) -> int:
    """Number of vertices coprime to d: divisors built from the primes d misses, minus 1"""
    if d not in dn_vertices(n):
        raise InvalidInput(f"{d} is not a vertex of D_{n}")
    return prod(a + 1 for p, a in factorize(n).factors if d % p) - 1


def dn_edge_count(n: int) -> int:
    """Coprime ordered pairs of divisors, minus those using 1, halved"""
    exps = factorize(n).exponents
    return (prod(1 + 2 * a for a in exps) - 2 * prod(1 + a for a in exps) + 1) // 2


def squarefree_edge_count(r: int) -> int:
    return (3**r - 2 ** (r + 1) + 1) // 2


def printed_edge_count(r: int) -> int:
    """Edge count as printed for square-free n; negative at r = 2"""
    return sum(2 ** (r - i - 1) * comb(r, i) for i in range(1, r)) - 2 ** (r - 1) - 1


def dn_independence_bound(n: int) -> int:
    """Largest number of vertices divisible by a single prime of n"""
    fac = factorize(n)
    if fac.distinct_prime_count < 2:
        raise InvalidInput(f"D_{n} is trivial; n needs two distinct primes")
    exps = fac.exponents
    best = 0
    for i, a in enumerate(exps):
        rest = exps[:i] + exps[i + 1:]
        best = max(best, a * (prod(b + 1 for b in rest) - prod(rest)))
    return best


def printed_squarefree_independence_bound(r: int) -> int:
    return 2 ** (r - 1) - r


def clique_second_coeff(exps) -> int:
    total = prod(exps)
    return sum(total // a for a in exps) + comb(len(exps), 2) * total


def dn_simplicial_closed(n: int) -> List[int]:
    """Vertices whose support is every prime but one p, where p divides n exactly once"""
    fac = factorize(n)
    if fac.distinct_prime_count < 2:
        return []
    simple = [p for p, a in fac.factors if a == 1]
    rad = radical(n)
    result = []
    for d in dn_vertices(n):
        missing = [p for p in fac.primes if d % p]
        if len(missing) == 1 and missing[0] in simple and d % (rad // missing[0]) == 0:
            result.append(d)
    return result


def _is_planar_closed(exps) -> bool:
    r = len(exps)
    if r == 2:
        return min(exps) <= 2
    if r == 3:
        return tuple(sorted(exps, reverse=True)) in ((1, 1, 1), (2, 1, 1))
    return False


def dn_report(n: int) -> DnReport:
    _check(n)
    fac = factorize(n)
    r = fac.distinct_prime_count
    if r == 1:
        return DnReport(
            n=n,
            trivial=True,
            diameter_class="trivial",
            complete=True,
            complete_bipartite=False,
            clique_number=0,
            domination=0,
            regular=True,
            girth_class="trivial",
            perfect=True,
            chordal=True,
            simplicial=[],
            planar=True,
            eulerian=False,
            edge_count=0,
            independence_lower_bound=None,
        )
    exps = fac.exponents
    low = min(exps)
    if r == 2:
        diameter = 1 if exps == (1, 1) else 2
        girth = "inf" if low == 1 else 4
        domination = 1 if low == 1 else 2
    else:
        diameter, girth, domination = 3, 3, r
    return DnReport(
        n=n,
        trivial=False,
        diameter_class=diameter,
        complete=exps == (1, 1),
        complete_bipartite=r == 2,
        clique_number=r,
        clique_leading_coeff=prod(exps),
        clique_second_coeff=clique_second_coeff(exps) if r >= 3 else None,
        domination=domination,
        regular=r == 2 and exps[0] == exps[1],
        girth_class=girth,
        perfect=r <= 4,
        chordal=(r == 2 and low == 1) or (r == 3 and exps == (1, 1, 1)),
        simplicial=dn_simplicial_closed(n),
        planar=_is_planar_closed(exps),
        eulerian=all(a % 2 == 0 for a in exps),
        edge_count=dn_edge_count(n),
        edge_count_squarefree=squarefree_edge_count(r) if fac.is_squarefree else None,
        independence_lower_bound=dn_independence_bound(n),
    )

"""Claims about the zero-divisor graph of the divisor poset D_n."""
from functools import lru_cache
from typing import Dict, Tuple

from models import Expectation
from services import graph as oracles
from services.dn import (
    build_dn_graph,
    dn_degree,
    dn_independence_bound,
    dn_report,
    dn_vertex_count,
    dn_vertices,
    printed_edge_count,
    printed_squarefree_independence_bound,
    squarefree_edge_count,
)
from services.graph import LabeledGraph
from services.numthy import factorize
from services.verify import Claim, ClaimRegistry, NRange, Observation, OracleContext, at_least

MAX_DN_VERTICES = 120


@lru_cache(maxsize=256)
def _poset(n: int, cap: int) -> LabeledGraph:
    return build_dn_graph(n, cap).graph


def poset(n: int, ctx: OracleContext) -> LabeledGraph:
    return _poset(n, ctx.settings.construction_cap)


def _r(n: int) -> int:
    return factorize(n).distinct_prime_count


def _nontrivial(n: int) -> bool:
    return _r(n) >= 2 and dn_vertex_count(n) <= MAX_DN_VERTICES


def _squarefree(*ranks: int):
    return lambda n: factorize(n).is_squarefree and _r(n) in ranks


def _report(field: str):
    return lambda n: getattr(dn_report(n), field)


def _diameter(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.metric_invariants(poset(n, ctx)).diameter)


def _girth(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.metric_invariants(poset(n, ctx)).girth)


def _completeness(n: int, ctx: OracleContext) -> Observation:
    g = poset(n, ctx)
    parts = oracles.is_complete_multipartite(g)
    return Observation((oracles.basic_invariants(g).complete, parts is not None and len(parts) == 2), witness=parts)


def _clique_counts(n: int) -> Tuple[int, int, object]:
    report = dn_report(n)
    return report.clique_number, report.clique_leading_coeff, report.clique_second_coeff


def _clique_census(n: int, ctx: OracleContext) -> Observation:
    g = ctx.checked(poset(n, ctx))
    r = _r(n)
    size = oracles.clique_number(g, budget=ctx.budget)
    census = oracles.clique_census(g, r, ctx.budget)
    return Observation((size, census[r], census[r - 1] if r >= 3 else None), witness=census)


def _gamma(n: int, ctx: OracleContext) -> Observation:
    stats = oracles.domination_stats(ctx.checked(poset(n, ctx)), ctx.budget)
    return Observation(stats.gamma, witness=stats.min_count)


def _regular(n: int, ctx: OracleContext) -> Observation:
    basic = oracles.basic_invariants(poset(n, ctx))
    return Observation(basic.regular, witness=basic.degree_sequence)


def _perfect(n: int, ctx: OracleContext) -> Observation:
    result = oracles.is_perfect(ctx.checked(poset(n, ctx)), ctx.budget)
    return Observation(result.perfect, witness=result.witness)


def _chordal(n: int, ctx: OracleContext) -> Observation:
    result = oracles.is_chordal(poset(n, ctx))
    return Observation(result.chordal, witness=result.witness)


def _simplicial(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.simplicial_vertices(poset(n, ctx)))


def _planar(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.is_planar(poset(n, ctx)))


def _eulerian(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.basic_invariants(poset(n, ctx)).eulerian)


def _edge_count(n: int, ctx: OracleContext) -> Observation:
    return Observation(poset(n, ctx).edge_count)


def _independence(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.independence_number(ctx.checked(poset(n, ctx)), ctx.budget))


def _degrees_predicted(n: int) -> Dict[int, int]:
    return {d: dn_degree(d, n) for d in dn_vertices(n)}


def _degrees_observed(n: int, ctx: OracleContext) -> Observation:
    g = poset(n, ctx)
    return Observation({d: g.degree(d) for d in g.labels})


def _slack_bound(n: int) -> Tuple[int, int]:
    r = _r(n)
    return printed_squarefree_independence_bound(r), r - 1


def slack_by(predicted: Tuple[int, int], observed: int) -> bool:
    """Observed meets the bound and exceeds it by exactly the stated slack"""
    bound, slack = predicted
    return observed >= bound and observed - bound == slack


def register_claims(registry: ClaimRegistry) -> None:
    add = registry.register
    nontrivial = NRange(2, 2310, _nontrivial)
    add(Claim(
        "dn.item-i", "D_n is empty when n is a prime power",
        NRange(2, 2000, lambda n: _r(n) == 1),
        lambda n: 0,
        lambda n, ctx: Observation(poset(n, ctx).order),
    ))
    add(Claim(
        "dn.item-ii", "diameter 1 for pq, 2 for other two-prime n, 3 with three or more primes",
        nontrivial,
        _report("diameter_class"),
        _diameter,
    ))
    add(Claim(
        "dn.item-iii", "complete only for pq; complete bipartite iff n has two primes",
        nontrivial,
        lambda n: (dn_report(n).complete, dn_report(n).complete_bipartite),
        _completeness,
    ))
    add(Claim(
        "dn.item-iv", "clique number r, with r-clique and (r-1)-clique counts from the exponents",
        nontrivial,
        _clique_counts,
        _clique_census,
    ))
    add(Claim(
        "dn.item-v", "domination number r, or 1 for a two-prime star and 2 otherwise",
        nontrivial,
        _report("domination"),
        _gamma,
    ))
    add(Claim(
        "dn.item-vi", "regular iff n = (pq)^m",
        nontrivial,
        _report("regular"),
        _regular,
    ))
    add(Claim(
        "dn.item-vii", "girth infinite for p^m q, 4 for p^m q^s with both exponents above 1, else 3",
        nontrivial,
        _report("girth_class"),
        _girth,
    ))
    add(Claim(
        "dn.item-viii", "perfect iff n has at most four primes",
        nontrivial,
        _report("perfect"),
        _perfect,
    ))
    add(Claim(
        "dn.item-ix", "chordal iff n = p^m q or pqr",
        nontrivial,
        _report("chordal"),
        _chordal,
    ))
    add(Claim(
        "dn.item-x", "simplicial vertices miss exactly one prime, and that prime divides n once",
        nontrivial,
        _report("simplicial"),
        _simplicial,
    ))
    add(Claim(
        "dn.item-xi", "planar iff n = p^m q, p^m q^2, pqr or p^2 qr",
        nontrivial,
        _report("planar"),
        _planar,
    ))
    add(Claim(
        "dn.item-xii", "Eulerian iff every exponent of n is even",
        nontrivial,
        _report("eulerian"),
        _eulerian,
    ))
    add(Claim(
        "dn.item-xiii", "edge count (prod(1 + 2a) - 2 prod(1 + a) + 1) / 2",
        nontrivial,
        _report("edge_count"),
        _edge_count,
    ))
    add(Claim(
        "dn.item-xiii.squarefree", "square-free n with r primes has (3^r - 2^(r+1) + 1) / 2 edges",
        NRange(2, 2310, _squarefree(2, 3, 4, 5)),
        lambda n: squarefree_edge_count(_r(n)),
        _edge_count,
    ))
    add(Claim(
        "dn.item-xiv", "independence number is at least the vertices sharing one prime",
        nontrivial,
        dn_independence_bound,
        _independence,
        at_least,
    ))
    add(Claim(
        "dn.degree", "deg(d) = prod over primes missing from d of (a_p + 1), minus 1",
        nontrivial,
        _degrees_predicted,
        _degrees_observed,
    ))
    add(Claim(
        "dn.item-xv", "square-free independence number is at least 2^(r-1) - r",
        NRange(2, 2310, _squarefree(2, 3, 4, 5)),
        lambda n: printed_squarefree_independence_bound(_r(n)),
        _independence,
        at_least,
    ))
    add(Claim(
        "dn.xiii.paper-form", "printed square-free edge count",
        NRange(2, 2310, _squarefree(2, 3, 4, 5)),
        lambda n: printed_edge_count(_r(n)),
        _edge_count,
        expect=Expectation.REFUTED,
    ))
    add(Claim(
        "dn.xv.paper-form", "square-free independence bound 2^(r-1) - r holds with slack r - 1",
        NRange(2, 2310, _squarefree(3, 4)),
        _slack_bound,
        _independence,
        slack_by,
    ))
    add(Claim(
        "dn.v.paper-form", "domination number equals the number of primes",
        nontrivial,
        _r,
        _gamma,
        expect=Expectation.REFUTED,
    ))

"""Claims about Gamma(Z_n), its type classes and type graphs."""
from functools import lru_cache
from math import prod
from typing import Dict, List, Optional, Tuple

from services import graph as oracles
from services.graph import LabeledGraph
from services.numthy import canonical_representative, euler_phi, factorize, is_prime, star_pair
from services.theorems import (
    closed_clique_number,
    closed_domination_number,
    is_gamma_beta_perfect,
    is_smith_perfect,
    self_annihilator_closed,
    simplicial_exists_closed,
    simplicial_set_closed,
    zn_report,
)
from services.verify import (
    Claim,
    ClaimRegistry,
    NRange,
    Observation,
    OracleContext,
    at_most,
    implies,
)
from services.zn import (
    build_ring_graph,
    build_type_graph,
    is_vertex,
    type_class_info,
    type_labels,
    type_partition,
)


@lru_cache(maxsize=256)
def _ring(n: int, cap: int) -> LabeledGraph:
    return build_ring_graph(n, cap).graph


def ring(n: int, ctx: OracleContext) -> LabeledGraph:
    return _ring(n, ctx.settings.construction_cap)


def _composite(n: int) -> bool:
    return not is_prime(n)


def _distinct(n: int) -> int:
    return factorize(n).distinct_prime_count


def class_adjacency(g: LabeledGraph, classes: Dict) -> Tuple[list, Optional[list]]:
    """Class pairs joined by every cross edge; a mixed pair is returned as witness"""
    masks = {a: sum(1 << g.index_of(x) for x in members) for a, members in classes.items()}
    edges = []
    labels = sorted(classes)
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            target = masks[b]
            hits = {g.adj[g.index_of(x)] & target for x in classes[a]}
            if hits == {target}:
                edges.append((a, b))
            elif hits != {0}:
                return edges, [a, b]
    return edges, None


def shared_neighbourhoods(g: LabeledGraph, classes: Dict) -> Observation:
    """Members of one class see the same vertices outside the pair"""
    for members in classes.values():
        first = g.index_of(members[0])
        for other in members[1:]:
            j = g.index_of(other)
            if g.adj[first] & ~(1 << j) != g.adj[j] & ~(1 << first):
                return Observation(False, witness=[members[0], other])
    return Observation(True)


def _partition_oracle(n: int, ctx: OracleContext) -> Observation:
    g = ring(n, ctx)
    covered = sorted(x for members in type_partition(n).values() for x in members)
    if covered != list(g.labels):
        return Observation(-1, witness=sorted(set(covered) ^ set(g.labels)))
    return Observation(g.order)


def _adjacency_oracle(n: int, ctx: OracleContext) -> Observation:
    edges, mixed = class_adjacency(ring(n, ctx), type_partition(n))
    return Observation(edges, witness=mixed)


def _loop_oracle(n: int, ctx: OracleContext) -> Observation:
    g = ring(n, ctx)
    joined = []
    for a, members in type_partition(n).items():
        if len(members) >= 2:
            inside = {g.has_edge(x, y) for i, x in enumerate(members) for y in members[i + 1:]}
            if len(inside) > 1:
                return Observation(None, witness=a)
            if inside == {True}:
                joined.append(a)
    return Observation(joined)


def _loops_predicted(n: int) -> List[int]:
    return [a for a in type_labels(n) if a * a % n == 0 and euler_phi(n // a) >= 2]


def _singletons(n: int, ctx: OracleContext) -> Observation:
    return Observation([a for a, members in type_partition(n).items() if len(members) == 1])


def _prime_classes(n: int) -> Dict[int, int]:
    return {n // p: p - 1 for p in factorize(n).primes if n // p > 1}


def _prime_classes_observed(n: int, ctx: OracleContext) -> Observation:
    primes = [p for p in factorize(n).primes if n // p > 1]
    return Observation({n // p: len(type_class_info(n, n // p).members) for p in primes})


def _self_annihilating(n: int, ctx: OracleContext) -> Observation:
    return Observation([v for v in ring(n, ctx).labels if v * v % n == 0])


def _self_annihilating_closed(n: int) -> List[int]:
    return [v for v in range(2, n) if is_vertex(v, n) and self_annihilator_closed(v, n)]


def _multiples_of_n_star(n: int) -> List[int]:
    n_star, _ = star_pair(n)
    return list(range(n_star, n, n_star))


def _anchored_monotone(n: int, ctx: OracleContext) -> Observation:
    g = ctx.checked(ring(n, ctx))
    anchored = {v: oracles.clique_number(g, anchored_at=v, budget=ctx.budget) for v in g.labels}
    for u in g.labels:
        for v in range(2 * u, n, u):
            if anchored[v] < anchored[u]:
                return Observation(False, witness=[u, v, anchored[u], anchored[v]])
    return Observation(True)


def _n_star_clique(n: int, ctx: OracleContext) -> Observation:
    g = ring(n, ctx)
    clique = _multiples_of_n_star(n)
    is_clique = all(g.has_edge(x, y) for i, x in enumerate(clique) for y in clique[i + 1:])
    contains = all(v in clique for v in g.labels if v * v % n == 0)
    return Observation(is_clique and contains, witness=clique)


def _perfect_both_sides(n: int, ctx: OracleContext) -> Observation:
    whole = oracles.is_perfect(ctx.checked(ring(n, ctx)), ctx.budget)
    quotient = oracles.is_perfect(build_type_graph(n), ctx.budget)
    return Observation(whole.perfect == quotient.perfect, witness=whole.witness or quotient.witness)


def _type_graph_perfect(n: int, ctx: OracleContext) -> Observation:
    result = oracles.is_perfect(build_type_graph(n), ctx.budget)
    return Observation(result.perfect, witness=result.witness)


def _prime_replacement(n: int, ctx: OracleContext) -> Observation:
    m = canonical_representative(factorize(n).signature)
    same = oracles.are_isomorphic(build_type_graph(n), build_type_graph(m), ctx.settings.isomorphism_cap)
    return Observation(same, witness=m)


def _complete_nonempty(n: int, ctx: OracleContext) -> Observation:
    g = ring(n, ctx)
    return Observation(g.order > 0 and oracles.basic_invariants(g).complete)


def _chromatic(n: int, ctx: OracleContext) -> Observation:
    core = oracles.false_twin_core(ring(n, ctx))
    return Observation(oracles.chromatic_number(ctx.checked(core), ctx.budget))


def _strong_chromatic(n: int) -> Optional[int]:
    return oracles.chromatic_number(build_type_graph(n, strong=True))


def _weak_chromatic_with_half_loop(n: int) -> Optional[int]:
    strong = build_type_graph(n, strong=True)
    if strong.loop_labels() != [n // 2]:
        return None
    return oracles.chromatic_number(build_type_graph(n))


def _clique(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.clique_number(ctx.checked(ring(n, ctx)), budget=ctx.budget))


def _regular_implies_complete(n: int, ctx: OracleContext) -> Observation:
    g = ring(n, ctx)
    basic = oracles.basic_invariants(g)
    holds = not (g.order > 0 and basic.regular) or basic.complete
    return Observation(holds, witness=None if holds else basic.degree_sequence)


def _chordal(n: int, ctx: OracleContext) -> Observation:
    result = oracles.is_chordal(ring(n, ctx))
    return Observation(result.chordal, witness=result.witness)


def _simplicial(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.simplicial_vertices(ring(n, ctx)))


def _has_simplicial(n: int, ctx: OracleContext) -> Observation:
    found = oracles.simplicial_vertices(ring(n, ctx))
    return Observation(bool(found), witness=found[:1] or None)


def _gamma(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.domination_stats(ctx.checked(ring(n, ctx)), ctx.budget).gamma)


def _gamma_beta(n: int, ctx: OracleContext) -> Observation:
    g = ctx.checked(ring(n, ctx))
    gamma = oracles.domination_stats(g, ctx.budget).gamma
    beta = oracles.vertex_cover_number(g, ctx.budget)
    return Observation(gamma == beta, witness={"gamma": gamma, "beta": beta})


def _min_dominating_count(n: int, ctx: OracleContext) -> Observation:
    return Observation(oracles.domination_stats(ctx.checked(ring(n, ctx)), ctx.budget).min_count)


def register_claims(registry: ClaimRegistry) -> None:
    add = registry.register
    add(Claim(
        "zn.thm1.1", "type classes partition the vertices of Gamma(Z_n)",
        NRange(2, 2000),
        lambda n: sum(euler_phi(n // a) for a in type_labels(n)),
        _partition_oracle,
    ))
    add(Claim(
        "zn.thm1.2", "type-graph edges are exactly the all-or-nothing class adjacencies",
        NRange(2, 500, _composite),
        lambda n: build_type_graph(n).edges(),
        _adjacency_oracle,
    ))
    add(Claim(
        "zn.thm1.4", "members of one class have the same neighbours",
        NRange(2, 1000, _composite),
        lambda n: True,
        lambda n, ctx: shared_neighbourhoods(ring(n, ctx), type_partition(n)),
    ))
    add(Claim(
        "zn.lemma2.0", "members of one class are adjacent iff the class carries a strong loop",
        NRange(2, 500, _composite),
        _loops_predicted,
        _loop_oracle,
    ))
    add(Claim(
        "zn.lemma2.7", "the only singleton class is T_{n/2}",
        NRange(2, 2000),
        lambda n: [n // 2] if n % 2 == 0 and n > 2 else [],
        _singletons,
    ))
    add(Claim(
        "zn.lemma2.8", "at most one type class has a single member",
        NRange(2, 2000),
        lambda n: 1,
        lambda n, ctx: Observation(len(_singletons(n, ctx).value)),
        at_most,
    ))
    add(Claim(
        "zn.cor2.7", "class T_{n/p} has exactly p - 1 members",
        NRange(2, 2000, _composite),
        _prime_classes,
        _prime_classes_observed,
    ))
    add(Claim(
        "zn.lemma2.10", "a vertex annihilates itself iff it is a multiple of n*",
        NRange(2, 2000, _composite),
        _self_annihilating_closed,
        _self_annihilating,
    ))
    add(Claim(
        "zn.lemma2.11", "the largest clique through a multiple of u is at least that through u",
        NRange(2, 300, _composite),
        lambda n: True,
        _anchored_monotone,
    ))
    add(Claim(
        "zn.lemma3.7", "the multiples of n* form a clique holding every self-annihilating vertex",
        NRange(2, 2000, _composite),
        lambda n: True,
        _n_star_clique,
    ))
    add(Claim(
        "zn.thm1.8", "Gamma(Z_n) is perfect iff its type graph is",
        NRange(2, 200, _composite),
        lambda n: True,
        _perfect_both_sides,
    ))
    add(Claim(
        "zn.smith", "the type graph is perfect iff n has one of the four perfect forms",
        NRange(2, 400),
        is_smith_perfect,
        _type_graph_perfect,
    ))
    add(Claim(
        "zn.thm1.9", "type graphs depend only on the prime signature",
        NRange(2, 500, _composite),
        lambda n: True,
        _prime_replacement,
    ))
    add(Claim(
        "zn.thm2.3", "Gamma(Z_n) is a nonempty complete graph iff n = p^2",
        NRange(2, 500),
        lambda n: zn_report(n).complete,
        _complete_nonempty,
    ))
    add(Claim(
        "zn.thm2.4", "a k-colourable strong type graph bounds the chromatic number by k",
        NRange(2, 500, _composite),
        _strong_chromatic,
        _chromatic,
        at_most,
    ))
    add(Claim(
        "zn.thm2.9", "a k-colourable type graph whose only loop is T_{n/2} bounds the chromatic number by k",
        NRange(2, 500, _composite),
        _weak_chromatic_with_half_loop,
        _chromatic,
        at_most,
    ))
    add(Claim(
        "zn.thm2.6", "square-free n gives a k-partite graph, k the number of primes",
        NRange(2, 500, lambda n: factorize(n).is_squarefree),
        _distinct,
        _chromatic,
        at_most,
    ))
    add(Claim(
        "zn.thm2.14", "clique number equals n/n* + (odd exponents) - 1",
        NRange(2, 300),
        closed_clique_number,
        _clique,
    ))
    add(Claim(
        "zn.thm2.15", "a nonempty regular Gamma(Z_n) is complete",
        NRange(2, 1000),
        lambda n: True,
        _regular_implies_complete,
    ))
    add(Claim(
        "zn.thm2.16", "Gamma(Z_n) is chordal iff n = p^x, 2p or 2p^2",
        NRange(2, 400),
        lambda n: zn_report(n).chordal,
        _chordal,
    ))
    add(Claim(
        "zn.lemma2.17", "n* != n forces a simplicial vertex",
        NRange(2, 300),
        lambda n: star_pair(n)[0] != n,
        _has_simplicial,
        implies,
    ))
    add(Claim(
        "zn.lemma2.18", "simplicial vertices are T_2 and the classes T_g with g | n_*",
        NRange(2, 300),
        simplicial_set_closed,
        _simplicial,
    ))
    add(Claim(
        "zn.thm2.19", "a simplicial vertex exists iff n is even or not square-free",
        NRange(2, 300),
        simplicial_exists_closed,
        _has_simplicial,
    ))
    add(Claim(
        "zn.gamma", "domination number: 0 for p, 1 for p^a and 2p, else the number of primes",
        NRange(2, 300),
        closed_domination_number,
        _gamma,
    ))
    add(Claim(
        "zn.lemma2.20", "three or more primes rule out gamma = beta",
        NRange(2, 300, lambda n: _distinct(n) >= 3),
        lambda n: False,
        _gamma_beta,
    ))
    add(Claim(
        "zn.thm2.21", "gamma = beta exactly for n = 8, 9, p, 2p, 3p",
        NRange(2, 150),
        is_gamma_beta_perfect,
        _gamma_beta,
    ))
    add(Claim(
        "prod.thm3.20", "k >= 3 primes: (p1 - 1)...(pk - 1) minimum dominating sets",
        NRange(2, 105, lambda n: _distinct(n) >= 3),
        lambda n: prod(p - 1 for p in factorize(n).primes),
        _min_dominating_count,
    ))

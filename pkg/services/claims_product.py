"""Claims about products Z_n1 x ... x Z_nk and their type graphs."""
from functools import lru_cache
from math import gcd, prod

from models import Expectation
from services import graph as oracles
from services.claims_zn import class_adjacency, shared_neighbourhoods
from services.graph import LabeledGraph
from services.numthy import PrimeSignature, canonical_representative, factorize, is_prime
from services.product import (
    ProductDims,
    build_product_graph,
    build_product_type_graph,
    canonical_type_signature,
    clique_lower_bound,
    domination_bounds,
    printed_domination_bounds,
    product_report,
    product_type_labels,
    product_type_partition,
    vertex_type,
)
from services.theorems import is_chordal_closed, is_smith_perfect
from services.verify import (
    Claim,
    ClaimRegistry,
    DimsList,
    DimsSample,
    Observation,
    OracleContext,
    at_least,
    at_most,
    implies,
    within,
)
from services.zn import build_type_graph

PRINTED_HOLE = [(1, 1, 0, 0, 0), (0, 0, 1, 1, 0), (1, 0, 0, 0, 1), (0, 1, 1, 0, 0), (0, 0, 0, 1, 1)]


@lru_cache(maxsize=512)
def _product(dims: tuple, cap: int) -> LabeledGraph:
    return build_product_graph(ProductDims(dims), cap)


def product(dims: tuple, ctx: OracleContext) -> LabeledGraph:
    return _product(dims, ctx.settings.construction_cap)


def _type_graph(dims: tuple) -> LabeledGraph:
    return build_product_type_graph(ProductDims(dims))


def _label_count_at_most(limit: int):
    return lambda d: len(product_type_labels(d)) <= limit


def _pairwise_coprime(d: ProductDims) -> bool:
    dims = d.dims
    return all(gcd(a, b) == 1 for i, a in enumerate(dims) for b in dims[i + 1:])


def _some_composite(d: ProductDims) -> bool:
    return any(not is_prime(n) for n in d.dims)


def _observed_classes(dims: tuple, ctx: OracleContext) -> Observation:
    d = ProductDims(dims)
    return Observation(sorted({vertex_type(a, d) for a in product(dims, ctx).labels}))


def _adjacency_oracle(dims: tuple, ctx: OracleContext) -> Observation:
    d = ProductDims(dims)
    edges, mixed = class_adjacency(product(dims, ctx), product_type_partition(d, ctx.settings.construction_cap))
    return Observation(edges, witness=mixed)


def _twins_within_classes(dims: tuple, ctx: OracleContext) -> Observation:
    classes = product_type_partition(ProductDims(dims), ctx.settings.construction_cap)
    return shared_neighbourhoods(product(dims, ctx), classes)


def _perfect_both_sides(dims: tuple, ctx: OracleContext) -> Observation:
    whole = oracles.is_perfect(ctx.checked(product(dims, ctx)), ctx.budget)
    quotient = oracles.is_perfect(_type_graph(dims), ctx.budget)
    return Observation(whole.perfect == quotient.perfect, witness=whole.witness or quotient.witness)


def _type_graph_perfect(dims: tuple, ctx: OracleContext) -> Observation:
    result = oracles.is_perfect(ctx.checked(_type_graph(dims)), ctx.budget)
    return Observation(result.perfect, witness=result.witness)


def _type_graph_imperfect(dims: tuple, ctx: OracleContext) -> Observation:
    result = _type_graph_perfect(dims, ctx)
    return Observation(not result.value, witness=result.witness)


def _slotwise_replacement(dims: tuple, ctx: OracleContext) -> Observation:
    signatures = canonical_type_signature(ProductDims(dims))
    other = tuple(canonical_representative(PrimeSignature.of(s)) for s in signatures)
    same = oracles.are_isomorphic(_type_graph(dims), _type_graph(other), ctx.settings.isomorphism_cap)
    return Observation(same, witness=list(other))


def _crt_collapse(dims: tuple, ctx: OracleContext) -> Observation:
    total = prod(dims)
    same = oracles.are_isomorphic(_type_graph(dims), build_type_graph(total), ctx.settings.isomorphism_cap)
    return Observation(same, witness=total)


def _complete_nonempty(dims: tuple, ctx: OracleContext) -> Observation:
    g = product(dims, ctx)
    return Observation(g.order > 0 and oracles.basic_invariants(g).complete)


def _complete_bipartite(dims: tuple, ctx: OracleContext) -> Observation:
    parts = oracles.is_complete_multipartite(product(dims, ctx))
    return Observation(parts is not None and len(parts) == 2, witness=parts)


def _bipartite(dims: tuple, ctx: OracleContext) -> Observation:
    chi = oracles.chromatic_number(ctx.checked(product(dims, ctx)), ctx.budget)
    return Observation(chi <= 2, witness=chi)


def _printed_hole(dims: tuple, ctx: OracleContext) -> Observation:
    g = product(dims, ctx)
    found = oracles.find_odd_hole(g, budget=ctx.budget)
    return Observation(oracles.is_induced_cycle(g, PRINTED_HOLE) and found is not None, witness=found)


def _regular(dims: tuple, ctx: OracleContext) -> Observation:
    basic = oracles.basic_invariants(product(dims, ctx))
    return Observation(basic.regular, witness=basic.degree_sequence[:1] + basic.degree_sequence[-1:])


def _clique(dims: tuple, ctx: OracleContext) -> Observation:
    return Observation(oracles.clique_number(ctx.checked(product(dims, ctx)), budget=ctx.budget))


def _has_simplicial(dims: tuple, ctx: OracleContext) -> Observation:
    found = oracles.simplicial_vertices(product(dims, ctx))
    return Observation(bool(found), witness=found[:1] or None)


def _chordal(dims: tuple, ctx: OracleContext) -> Observation:
    result = oracles.is_chordal(product(dims, ctx))
    return Observation(result.chordal, witness=result.witness)


def _non_chordal(dims: tuple, ctx: OracleContext) -> Observation:
    result = oracles.is_chordal(product(dims, ctx))
    return Observation(not result.chordal, witness=result.witness)


def _gamma(dims: tuple, ctx: OracleContext) -> Observation:
    return Observation(oracles.domination_stats(ctx.checked(product(dims, ctx)), ctx.budget).gamma)


def _chromatic(dims: tuple, ctx: OracleContext) -> Observation:
    return Observation(oracles.chromatic_number(ctx.checked(product(dims, ctx)), ctx.budget))


def _imperfect_slot(dims: tuple) -> bool:
    return any(not is_smith_perfect(n) for n in dims)


def register_claims(registry: ClaimRegistry) -> None:
    add = registry.register
    sample = DimsSample()
    add(Claim(
        "prod.thm1.1a", "every product type label names a nonempty class and classes cover the vertices",
        sample,
        lambda dims: product_type_labels(ProductDims(dims)),
        _observed_classes,
    ))
    add(Claim(
        "prod.thm1.2a", "product type-graph edges are exactly the all-or-nothing class adjacencies",
        sample,
        lambda dims: _type_graph(dims).edges(),
        _adjacency_oracle,
    ))
    add(Claim(
        "prod.thm1.4a", "members of one class have the same neighbours",
        sample,
        lambda dims: True,
        _twins_within_classes,
    ))
    add(Claim(
        "prod.thm1.8", "a product graph is perfect iff its type graph is",
        DimsSample(where=_label_count_at_most(30)),
        lambda dims: True,
        _perfect_both_sides,
    ))
    add(Claim(
        "prod.thm1.10", "slotwise prime replacement keeps the type graph",
        DimsSample(max_vertices=5000, where=_label_count_at_most(40)),
        lambda dims: True,
        _slotwise_replacement,
    ))
    add(Claim(
        "prod.thm1.11", "coprime dims collapse to the type graph of Z_(n1...nk)",
        DimsSample(max_vertices=5000, where=lambda d: _pairwise_coprime(d) and len(product_type_labels(d)) <= 40),
        lambda dims: True,
        _crt_collapse,
    ))
    add(Claim(
        "prod.thm1.12", "perfect iff the combined signature has a perfect form",
        DimsSample(max_vertices=5000, where=_label_count_at_most(60)),
        lambda dims: product_report(ProductDims(dims)).perfect,
        _type_graph_perfect,
    ))
    add(Claim(
        "prod.thm3.1", "complete iff k = 2 and both factors have two elements",
        sample,
        lambda dims: product_report(ProductDims(dims)).complete,
        _complete_nonempty,
    ))
    add(Claim(
        "prod.thm3.2", "Z_n x Z_m is complete bipartite iff n and m are prime",
        DimsSample(ks=(2,)),
        lambda dims: product_report(ProductDims(dims)).complete_bipartite,
        _complete_bipartite,
    ))
    add(Claim(
        "prod.thm3.3", "bipartite iff k = 2 with both prime, or one prime and the other 4",
        sample,
        lambda dims: product_report(ProductDims(dims)).bipartite,
        _bipartite,
    ))
    add(Claim(
        "prod.thm3.4", "an imperfect factor graph makes the product imperfect",
        DimsList(((2, 180), (3, 180), (4, 180), (2, 2310))),
        _imperfect_slot,
        _type_graph_imperfect,
        implies,
    ))
    add(Claim(
        "prod.note3.4", "Z_2^5 contains the printed induced 5-cycle",
        DimsList(((2, 2, 2, 2, 2),)),
        lambda dims: True,
        _printed_hole,
    ))
    add(Claim(
        "prod.thm3.5", "a product with a nonempty factor graph is not regular",
        DimsSample(where=_some_composite),
        lambda dims: False,
        _regular,
    ))
    add(Claim(
        "prod.cor3.6", "clique number is at least the slot cliques plus the mixed self-annihilating cliques",
        sample,
        lambda dims: clique_lower_bound(ProductDims(dims)),
        _clique,
        at_least,
    ))
    add(Claim(
        "prod.thm3.8", "cl(Z_n x Z_m) >= cl(n) + cl(m) + (n/n* - 1)(m/m* - 1)",
        DimsSample(ks=(2,)),
        lambda dims: clique_lower_bound(ProductDims(dims)),
        _clique,
        at_least,
    ))
    add(Claim(
        "prod.thm3.11", "a simplicial vertex exists iff some factor is Z_2 or has one",
        sample,
        lambda dims: product_report(ProductDims(dims)).simplicial_exists,
        _has_simplicial,
    ))
    add(Claim(
        "prod.thm3.12", "a non-chordal factor graph makes the product non-chordal",
        DimsSample(max_vertices=80),
        lambda dims: any(not is_chordal_closed(n) for n in dims),
        _non_chordal,
        implies,
    ))
    add(Claim(
        "prod.lemma3.13", "two factors with at least three elements make the product non-chordal",
        DimsSample(max_vertices=80),
        lambda dims: sum(1 for n in dims if n >= 3) > 1,
        _non_chordal,
        implies,
    ))
    add(Claim(
        "prod.lemma3.14", "four or more factors make the product non-chordal",
        DimsSample(stop=4, ks=(4, 5), max_vertices=80),
        lambda dims: True,
        _non_chordal,
    ))
    add(Claim(
        "prod.lemma3.15", "three factors with one above 2 make the product non-chordal",
        DimsSample(ks=(3,), max_vertices=80),
        lambda dims: any(n > 2 for n in dims),
        _non_chordal,
        implies,
    ))
    add(Claim(
        "prod.thm3.16", "the chordal products are Z_2 x Z_p, Z_2 x Z_p^2 and Z_2^3",
        DimsSample(max_vertices=80),
        lambda dims: product_report(ProductDims(dims)).chordal,
        _chordal,
    ))
    add(Claim(
        "prod.thm3.19", "sum of factor dominations <= gamma <= sum of (2 gamma_i + 1, or 1 for prime factors)",
        sample,
        lambda dims: domination_bounds(ProductDims(dims)),
        _gamma,
        within,
    ))
    add(Claim(
        "prod.thm3.19.paper-form", "sum of factor dominations <= gamma <= twice that sum",
        sample,
        lambda dims: printed_domination_bounds(ProductDims(dims)),
        _gamma,
        within,
        expect=Expectation.REFUTED,
    ))
    add(Claim(
        "prod.thm3.21", "a product of prime fields is k-partite",
        DimsSample(where=lambda d: all(is_prime(n) for n in d.dims)),
        lambda dims: len(dims),
        _chromatic,
        at_most,
    ))

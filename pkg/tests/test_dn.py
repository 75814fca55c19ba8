import pytest

from services import graph as oracles
from services.dn import (
    build_dn_graph,
    clique_second_coeff,
    dn_degree,
    dn_edge_count,
    dn_independence_bound,
    dn_report,
    dn_simplicial_closed,
    dn_vertex_count,
    dn_vertices,
    printed_edge_count,
    printed_squarefree_independence_bound,
    squarefree_edge_count,
)
from services.errors import InvalidInput, ResourceLimitExceeded


def poset(n):
    return build_dn_graph(n).graph


class TestDnGraph:
    def test_d30(self):
        g = poset(30)
        assert g.labels == (2, 3, 5, 6, 10, 15)
        assert g.edge_count == 6
        metric = oracles.metric_invariants(g)
        assert (metric.girth, metric.diameter) == (3, 3)

    def test_d12_is_a_path(self):
        g = poset(12)
        assert g.edges() == [(2, 3), (3, 4)]

    def test_d36_is_a_four_cycle(self):
        g = poset(36)
        assert g.labels == (2, 3, 4, 9)
        assert oracles.basic_invariants(g).degree_sequence == [2, 2, 2, 2]

    def test_prime_power_is_trivial(self):
        assert poset(1024).order == 0
        assert dn_vertex_count(1024) == 0

    @pytest.mark.parametrize("n", [30, 12, 36, 360, 210])
    def test_vertex_count(self, n):
        assert dn_vertex_count(n) == len(dn_vertices(n))

    def test_cap(self):
        with pytest.raises(ResourceLimitExceeded):
            build_dn_graph(2 * 3 * 5 * 7 * 11 * 13, cap=20)

    def test_rejects_small_n(self):
        with pytest.raises(InvalidInput):
            build_dn_graph(1)


class TestCounts:
    @pytest.mark.parametrize("n", [6, 12, 30, 36, 72, 210, 360])
    def test_edge_count(self, n):
        assert dn_edge_count(n) == poset(n).edge_count

    def test_squarefree_edge_count(self):
        assert [squarefree_edge_count(r) for r in (2, 3, 4, 5)] == [1, 6, 25, 90]

    def test_printed_edge_count_is_negative_for_two_primes(self):
        assert printed_edge_count(2) == -1
        assert dn_edge_count(6) == 1

    def test_degree(self):
        assert dn_degree(2, 30) == 3
        assert dn_degree(4, 12) == 1
        g = poset(360)
        assert all(dn_degree(d, 360) == g.degree(d) for d in g.labels)

    def test_degree_rejects_non_vertex(self):
        with pytest.raises(InvalidInput):
            dn_degree(30, 30)

    def test_independence_bounds(self):
        assert dn_independence_bound(30) == 3
        assert printed_squarefree_independence_bound(3) == 1
        assert oracles.independence_number(poset(210)) == 7
        with pytest.raises(InvalidInput):
            dn_independence_bound(16)

    def test_clique_coefficients(self):
        assert clique_second_coeff((1, 1, 1)) == 6
        census = oracles.clique_census(poset(60), 3)
        report = dn_report(60)
        assert census[3] == report.clique_leading_coeff == 2
        assert census[2] == report.clique_second_coeff


class TestReport:
    def test_d30(self):
        report = dn_report(30)
        assert report.diameter_class == 3 and report.girth_class == 3
        assert report.clique_number == 3 and report.domination == 3
        assert report.perfect and report.chordal and report.planar
        assert not report.eulerian
        assert report.simplicial == [6, 10, 15]
        assert report.edge_count == 6
        assert report.independence_lower_bound == 3

    def test_d12(self):
        report = dn_report(12)
        assert report.complete_bipartite
        assert report.girth_class == "inf"
        assert report.chordal and report.planar
        assert report.simplicial == [2, 4]
        assert report.domination == 1

    def test_d36(self):
        report = dn_report(36)
        assert report.girth_class == 4
        assert report.eulerian and report.regular
        assert report.domination == 2
        assert report.simplicial == []

    def test_trivial(self):
        report = dn_report(49)
        assert report.trivial
        assert report.diameter_class == "trivial"
        assert report.clique_leading_coeff is None

    def test_simplicial_matches_oracle(self):
        for n in (60, 90, 210, 150):
            assert dn_simplicial_closed(n) == oracles.simplicial_vertices(poset(n))

    def test_d2310_is_imperfect(self):
        assert not dn_report(2310).perfect
        assert not oracles.is_perfect(poset(2310)).perfect

import pytest

from services import graph as oracles
from services.numthy import PrimeSignature
from services.theorems import (
    closed_clique_number,
    closed_domination_number,
    is_chordal_closed,
    is_gamma_beta_perfect,
    is_smith_perfect,
    is_smith_signature,
    self_annihilator_closed,
    simplicial_exists_closed,
    simplicial_set_closed,
    zn_report,
)
from services.zn import build_ring_graph


def ring(n):
    return build_ring_graph(n).graph


class TestPerfectForms:
    @pytest.mark.parametrize("n", [8, 36, 60, 210, 1024])
    def test_perfect(self, n):
        assert is_smith_perfect(n)

    @pytest.mark.parametrize("n", [180, 420, 2310])
    def test_imperfect(self, n):
        assert not is_smith_perfect(n)

    def test_signature_form(self):
        assert is_smith_signature(PrimeSignature((5, 1, 1)))
        assert not is_smith_signature(PrimeSignature((2, 1, 1, 1)))

    def test_imperfect_ring_has_odd_hole(self):
        assert not oracles.is_perfect(ring(180)).perfect


class TestCliqueAndDomination:
    @pytest.mark.parametrize("n, expected", [(12, 2), (8, 2), (25, 4), (72, 6), (7, 0), (30, 3)])
    def test_clique_number(self, n, expected):
        assert closed_clique_number(n) == expected
        assert oracles.clique_number(ring(n)) == expected

    @pytest.mark.parametrize("n, expected", [(7, 0), (8, 1), (4, 1), (10, 1), (12, 2), (15, 2), (30, 3)])
    def test_domination_number(self, n, expected):
        assert closed_domination_number(n) == expected
        assert oracles.domination_stats(ring(n)).gamma == expected

    def test_gamma_beta_list(self):
        assert [n for n in range(2, 40) if is_gamma_beta_perfect(n)] == [
            2, 3, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 31, 33, 34, 37, 38, 39,
        ]


class TestChordalAndSimplicial:
    def test_chordal_forms(self):
        assert [n for n in range(2, 40) if is_chordal_closed(n)] == [
            2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 22, 23, 25, 26, 27, 29, 31, 32, 34, 37, 38,
        ]

    @pytest.mark.parametrize("n", [12, 15, 20])
    def test_non_chordal_rings(self, n):
        assert not oracles.is_chordal(ring(n)).chordal

    def test_simplicial_exists(self):
        assert simplicial_exists_closed(12)
        assert simplicial_exists_closed(9)
        assert not simplicial_exists_closed(15)
        assert not simplicial_exists_closed(7)

    @pytest.mark.parametrize("n, expected", [(12, [2, 10]), (8, [2, 6]), (15, [])])
    def test_simplicial_set(self, n, expected):
        assert simplicial_set_closed(n) == expected
        assert oracles.simplicial_vertices(ring(n)) == expected

    def test_self_annihilator(self):
        assert self_annihilator_closed(6, 12)
        assert not self_annihilator_closed(4, 12)


class TestReport:
    def test_report_z30(self):
        report = zn_report(30)
        assert report.perfect and not report.complete and not report.chordal
        assert report.gamma == 3
        assert report.kpartite_k_squarefree == 3
        assert report.min_dominating_count == 8
        assert oracles.domination_stats(ring(30)).min_count == 8

    def test_report_p_squared(self):
        report = zn_report(49)
        assert report.complete
        assert report.min_dominating_count is None

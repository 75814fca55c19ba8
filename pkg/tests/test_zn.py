import pytest

from services import graph as oracles
from services.errors import InvalidInput, ResourceLimitExceeded
from services.zn import (
    build_ring_graph,
    build_type_graph,
    is_self_annihilating,
    ring_vertex_count,
    type_class_info,
    type_labels,
    type_partition,
    vertex_type,
)


class TestRingGraph:
    def test_gamma_z12(self):
        g = build_ring_graph(12).graph
        assert g.labels == (2, 3, 4, 6, 8, 9, 10)
        assert g.edges() == [(2, 6), (3, 4), (3, 8), (4, 6), (4, 9), (6, 8), (6, 10), (8, 9)]
        assert oracles.chromatic_number(g) == 2
        assert oracles.clique_number(g) == 2

    def test_prime_modulus_is_empty(self):
        g = build_ring_graph(13).graph
        assert g.order == 0

    @pytest.mark.parametrize("n, count", [(2, 0), (4, 1), (12, 7), (30, 21), (97, 0)])
    def test_vertex_count(self, n, count):
        assert ring_vertex_count(n) == count
        assert build_ring_graph(n).graph.order == count

    def test_p_squared_is_complete(self):
        g = build_ring_graph(25).graph
        assert g.order == 4
        assert oracles.basic_invariants(g).complete

    def test_no_loops(self):
        assert not build_ring_graph(16).graph.has_loops

    def test_construction_cap(self):
        with pytest.raises(ResourceLimitExceeded):
            build_ring_graph(1000, cap=100)

    @pytest.mark.parametrize("bad", [0, 1, -6])
    def test_rejects_small_n(self, bad):
        with pytest.raises(InvalidInput):
            build_ring_graph(bad)


class TestTypeClasses:
    def test_labels(self):
        assert type_labels(12) == [2, 3, 4, 6]
        assert type_labels(7) == []

    def test_partition(self):
        assert type_partition(12) == {2: [2, 10], 3: [3, 9], 4: [4, 8], 6: [6]}

    def test_class_info(self):
        info = type_class_info(12, 3)
        assert info.members == [3, 9]
        assert info.size == 2

    def test_class_info_rejects_non_divisor(self):
        with pytest.raises(InvalidInput):
            type_class_info(12, 5)

    def test_vertex_type(self):
        assert vertex_type(10, 12) == 2
        with pytest.raises(InvalidInput):
            vertex_type(5, 12)

    def test_self_annihilating(self):
        assert is_self_annihilating(6, 12)
        assert not is_self_annihilating(4, 12)


class TestTypeGraph:
    def test_weak_type_graph(self):
        g = build_type_graph(12)
        assert g.edges() == [(2, 6), (3, 4), (4, 6)]
        assert not g.has_loops

    def test_strong_type_graph(self):
        g = build_type_graph(12, strong=True)
        assert g.loop_labels() == [6]
        assert g.edges() == build_type_graph(12).edges()

    def test_looped_type_graph_refuses_colouring(self):
        g = build_type_graph(8, strong=True)
        assert g.loop_labels() == [4]
        assert oracles.chromatic_number(g) is None

import pytest

from services import graph as oracles
from services.errors import InvalidInput, ResourceLimitExceeded
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
    product_vertex_count,
    vertex_type,
)


def dims(*values):
    return ProductDims(tuple(values))


class TestProductDims:
    @pytest.mark.parametrize("text", ["4,9", "4x9", " 4 , 9 "])
    def test_parse(self, text):
        assert ProductDims.parse(text).dims == (4, 9)

    @pytest.mark.parametrize("text", ["", "4,,9", "a,b"])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidInput):
            ProductDims.parse(text)

    def test_rejects_small_dims(self):
        with pytest.raises(InvalidInput):
            dims(1, 4)
        with pytest.raises(InvalidInput):
            ProductDims(())

    def test_str(self):
        assert str(dims(12, 2)) == "12,2"


class TestProductGraph:
    def test_two_fields_make_an_edge(self):
        g = build_product_graph(dims(2, 2))
        assert g.labels == ((0, 1), (1, 0))
        assert g.edges() == [((0, 1), (1, 0))]

    def test_star(self):
        g = build_product_graph(dims(2, 3))
        assert g.order == 3
        assert g.degree((1, 0)) == 2

    @pytest.mark.parametrize("values, count", [((2, 2), 2), ((2, 3), 3), ((4, 4), 11), ((2, 2, 2), 6), ((12, 2), 19)])
    def test_vertex_count(self, values, count):
        d = dims(*values)
        assert product_vertex_count(d) == count
        assert build_product_graph(d).order == count

    def test_cap(self):
        with pytest.raises(ResourceLimitExceeded):
            build_product_graph(dims(30, 30), cap=100)

    def test_vertex_type(self):
        assert vertex_type((3, 0), dims(12, 2)) == (3, 0)
        assert vertex_type((10, 1), dims(12, 2)) == (2, 1)
        with pytest.raises(InvalidInput):
            vertex_type((1, 1), dims(12, 2))


class TestProductTypeGraph:
    def test_labels_for_12_2(self):
        labels = product_type_labels(dims(12, 2))
        assert len(labels) == 10
        assert (0, 0) not in labels and (1, 1) not in labels

    def test_partition_covers_vertices(self):
        d = dims(4, 6)
        classes = product_type_partition(d)
        assert all(classes.values())
        assert sum(len(m) for m in classes.values()) == product_vertex_count(d)

    def test_strong_loops(self):
        g = build_product_type_graph(dims(4, 2), strong=True)
        assert g.labels == ((0, 1), (1, 0), (2, 0), (2, 1))
        assert g.loop_labels() == [(2, 0)]

    def test_canonical_signature(self):
        assert canonical_type_signature(dims(12, 2)) == [[1], [2, 1]]


class TestProductClosedForms:
    def test_domination_bounds(self):
        assert domination_bounds(dims(2, 2)) == (0, 2)
        assert domination_bounds(dims(4, 6)) == (2, 6)
        assert domination_bounds(dims(12)) == (2, 2)

    def test_printed_bound_fails_on_two_fields(self):
        low, high = printed_domination_bounds(dims(2, 2))
        gamma = oracles.domination_stats(build_product_graph(dims(2, 2))).gamma
        assert (low, high) == (0, 0)
        assert gamma == 1

    @pytest.mark.parametrize("values", [(2, 2), (4, 4), (2, 4), (3, 9), (4, 4, 2)])
    def test_clique_lower_bound(self, values):
        d = dims(*values)
        assert oracles.clique_number(build_product_graph(d)) >= clique_lower_bound(d)

    def test_clique_lower_bound_value(self):
        assert clique_lower_bound(dims(4, 4)) == 3

    def test_report_two_fields(self):
        report = product_report(dims(2, 2))
        assert report.complete and report.complete_bipartite and report.bipartite
        assert report.chordal
        assert report.k_partite_k == 2
        assert report.regular is None

    def test_report_mixed(self):
        report = product_report(dims(12, 2))
        assert report.combined_signature == [2, 1, 1]
        assert report.perfect
        assert report.regular is False
        assert not report.chordal
        assert report.simplicial_exists

    def test_bipartite_prime_times_four(self):
        assert product_report(dims(3, 4)).bipartite
        assert oracles.chromatic_number(build_product_graph(dims(3, 4))) == 2

    @pytest.mark.parametrize("values, chordal", [((2, 5), True), ((2, 9), True), ((2, 8), False), ((2, 2, 2), True), ((3, 3), False)])
    def test_chordal_products(self, values, chordal):
        d = dims(*values)
        assert product_report(d).chordal is chordal
        assert oracles.is_chordal(build_product_graph(d)).chordal is chordal

    def test_single_slot_delegates(self):
        report = product_report(dims(25))
        assert report.complete
        assert report.domination_bounds == (1, 1)

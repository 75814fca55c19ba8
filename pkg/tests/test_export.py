import json

import pytest

from config import load_settings
from models import GraphFamily, OutputFormat, PropertyReport
from services.errors import InvalidInput
from services.export import document_csv, graph_document, render, survey_csv, to_dot, to_json
from services.graph import LabeledGraph


@pytest.fixture
def path_graph() -> LabeledGraph:
    return LabeledGraph.from_edges([4, 2, 6], [(2, 4), (4, 6)])


class TestDot:
    def test_lists_nodes_then_edges(self, path_graph):
        assert to_dot(path_graph) == (
            'graph G {\n  "2";\n  "4";\n  "6";\n  "2" -- "4";\n  "4" -- "6";\n}\n'
        )

    def test_loops_are_self_edges(self, looped_path):
        dot = to_dot(looped_path)
        assert '"b" -- "b";' in dot
        assert dot.count(" -- ") == 3

    def test_tuple_labels_are_quoted(self):
        g = LabeledGraph.from_edges([(0, 1), (1, 0)], [((0, 1), (1, 0))])
        assert '"0,1" -- "1,0";' in to_dot(g)


class TestDocuments:
    def test_json_omits_missing_fields(self, path_graph):
        payload = json.loads(to_json(graph_document(GraphFamily.RING, path_graph, n=8)))
        assert payload == {"family": "ring", "n": 8, "vertices": [2, 4, 6], "edges": [[2, 4], [4, 6]]}

    def test_csv_edge_rows(self):
        g = LabeledGraph.from_edges([2, 4, 6], [(2, 4), (4, 6)], loops=[4])
        document = graph_document(GraphFamily.TYPEGRAPH, g, n=8, strong=True)
        assert document.loops == [4]
        assert document_csv(document).splitlines() == ["u,v", "2,4", "4,6", "4,4"]

    def test_csv_property_rows(self, path_graph):
        document = graph_document(
            GraphFamily.RING, path_graph, n=8, properties=PropertyReport(clique_number=2, girth="inf")
        )
        assert document_csv(document).splitlines() == [
            "source,name,value",
            "property,girth,inf",
            "property,clique_number,2",
        ]

    def test_render_is_stable(self, path_graph):
        document = graph_document(GraphFamily.RING, path_graph, n=8)
        first = render(document, path_graph, OutputFormat.JSON)
        assert first == render(document, path_graph, OutputFormat.JSON)
        assert first.format == OutputFormat.JSON

    def test_survey_cells(self):
        rows = [{"n": 6, "planar": True, "simplicial": [2, 4], "girth": None}]
        assert survey_csv(rows, ["n", "planar", "simplicial", "girth"]).splitlines() == [
            "n,planar,simplicial,girth",
            '6,true,"[2,4]",',
        ]


class TestSettings:
    def test_defaults(self):
        settings = load_settings()
        assert settings.construction_cap == 5000
        assert settings.oracle_cap == 300

    def test_yaml_and_overrides(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("oracle_cap: 50\nclaim_ranges:\n  zn.thm2.16: [2, 30]\n", encoding="utf-8")
        settings = load_settings(str(path), search_budget=10, oracle_cap=None)
        assert settings.oracle_cap == 50
        assert settings.search_budget == 10
        assert settings.claim_ranges["zn.thm2.16"] == (2, 30)

    @pytest.mark.parametrize("text", ["oracle_cap: [", "- 1\n- 2\n", "claim_ranges:\n  zn.thm2.16: [9, 3]\n"])
    def test_rejects(self, tmp_path, text):
        path = tmp_path / "settings.yaml"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(InvalidInput):
            load_settings(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidInput):
            load_settings(str(tmp_path / "absent.yaml"))

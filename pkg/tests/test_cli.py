import json

import pytest
from click.testing import CliRunner

from main import cli, run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGraphCommands:
    def test_ring_report_json(self, capsys):
        code, out, _ = invoke(capsys, "ring", "12", "--report", "--format", "json")
        assert code == 0
        document = json.loads(out)
        assert document["family"] == "ring"
        assert document["n"] == 12
        assert document["properties"]["clique_number"] == 2
        assert document["closed_form"]["clique_number"] == 2
        assert document["edges"][0] == [2, 6]

    def test_poset_dot(self, capsys):
        code, out, _ = invoke(capsys, "poset", "30", "--export", "dot")
        assert code == 0
        assert out.startswith("graph G {")
        assert out.count(" -- ") == 6
        assert out.count(";") == 12
        assert '"2" -- "3";' in out

    def test_product_csv_edges(self, capsys):
        code, out, _ = invoke(capsys, "product", "2,3", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["u,v", '"0,1","1,0"', '"0,2","1,0"']

    def test_strong_typegraph_keeps_loops(self, capsys):
        code, out, _ = invoke(capsys, "typegraph", "12", "--strong", "--export", "dot")
        assert code == 0
        assert '"6" -- "6";' in out

    def test_strong_typegraph_report_is_undefined(self, capsys):
        code, out, _ = invoke(capsys, "typegraph", "8", "--strong", "--report")
        assert code == 0
        document = json.loads(out)
        assert document["loops"] == [4]
        assert document["properties"] == {"chromatic_number": "undefined"}

    def test_product_typegraph(self, capsys):
        code, out, _ = invoke(capsys, "typegraph", "12,2")
        assert code == 0
        assert len(json.loads(out)["vertices"]) == 10

    def test_output_is_deterministic(self, capsys):
        first = invoke(capsys, "ring", "36", "--report")
        second = invoke(capsys, "ring", "36", "--report")
        assert first == second

    def test_cap_maps_to_exit_3(self, capsys):
        code, _, err = invoke(capsys, "ring", "1000", "--cap", "10")
        assert code == 3
        assert "cap" in err

    def test_bad_input_maps_to_exit_2(self, capsys):
        code, _, err = invoke(capsys, "ring", "1")
        assert code == 2
        assert err

    def test_unknown_flag(self, capsys):
        code, _, err = invoke(capsys, "ring", "12", "--colour")
        assert code == 2
        assert "Usage" in err or "No such option" in err


class TestSurvey:
    def test_csv(self, capsys):
        code, out, _ = invoke(capsys, "survey", "--kind", "ring", "--from", "8", "--to", "10", "--props", "clique_number,girth")
        assert code == 0
        assert out.splitlines() == ["n,vertices,clique_number,girth", "8,3,2,inf", "9,2,2,inf", "10,5,2,inf"]

    def test_json_poset(self, capsys):
        code, out, _ = invoke(capsys, "survey", "--kind", "poset", "--from", "30", "--to", "30", "--props", "planar", "--format", "json")
        assert code == 0
        assert json.loads(out) == [{"n": 30, "vertices": 6, "planar": True}]

    def test_unknown_property(self, capsys):
        code, _, _ = invoke(capsys, "survey", "--to", "10", "--props", "sparkle")
        assert code == 2


class TestVerification:
    def test_verify_claim(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--claim", "zn.thm2.21", "--to", "60")
        assert code == 0
        outcome = json.loads(out)
        assert outcome["status"] == "pass"
        assert outcome["instances_checked"] == 59

    def test_registered_discrepancy_is_expected(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--claim", "dn.xiii.paper-form")
        assert code == 0
        outcome = json.loads(out)
        assert outcome["status"] == "counterexample"
        assert outcome["certificate"]["parameter"] == 6

    def test_budget_maps_to_exit_3(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--claim", "zn.thm2.14", "--to", "60", "--budget", "1")
        assert code == 3
        assert json.loads(out)["status"] == "resource_limit"

    def test_unknown_claim(self, capsys):
        code, _, err = invoke(capsys, "verify", "--claim", "zn.unheard-of")
        assert code == 2
        assert "zn.unheard-of" in err

    @pytest.mark.slow
    def test_full_verify_is_clean_and_repeatable(self, capsys):
        first = invoke(capsys, "verify")
        assert first[0] == 0, [line for line in first[1].splitlines() if '"as_expected":false' in line]
        assert first == invoke(capsys, "verify")

    def test_claims_listing(self, capsys):
        code, out, _ = invoke(capsys, "claims")
        assert code == 0
        ids = [json.loads(line)["id"] for line in out.splitlines()]
        assert "dn.xiii.paper-form" in ids
        assert len(ids) == len(set(ids))


class TestConfig:
    def test_config_file(self, tmp_path, capsys):
        path = tmp_path / "settings.yaml"
        path.write_text("construction_cap: 5\n", encoding="utf-8")
        code, _, _ = invoke(capsys, "--config", str(path), "ring", "12")
        assert code == 3

    def test_bad_config(self, tmp_path, capsys):
        path = tmp_path / "settings.yaml"
        path.write_text("oracle_cap: -1\n", encoding="utf-8")
        code, _, _ = invoke(capsys, "--config", str(path), "ring", "12")
        assert code == 2


class TestRunner:
    def test_click_runner(self):
        result = CliRunner().invoke(cli, ["poset", "12", "--format", "csv"])
        assert result.exit_code == 0
        assert result.output.splitlines() == ["u,v", "2,3", "3,4"]

    @pytest.mark.parametrize("argv, code", [(["ring", "4", "--cap", "0"], 2), (["poset", "2"], 0)])
    def test_exit_codes(self, argv, code):
        assert CliRunner().invoke(cli, argv).exit_code == code

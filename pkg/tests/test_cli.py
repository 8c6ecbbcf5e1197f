import json

from wkpdom import graph_from_json
from wkpdom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestGen:
    def test_json_round_trips(self, capsys):
        code, out = run(capsys, "gen", "--C", "3", "--L", "2")
        assert code == 0
        g = graph_from_json(out)
        assert (g.family, g.C, g.L, g.n) == ("WKP", 3, 2, 13)

    def test_wk_family(self, capsys):
        code, out = run(capsys, "gen", "--C", "2", "--L", "3", "--family", "wk")
        assert code == 0
        doc = json.loads(out)
        assert doc["family"] == "WK"
        assert len(doc["vertices"]) == 8
        assert len(doc["edges"]) == 7

    def test_dot(self, capsys):
        code, out = run(capsys, "gen", "--C", "2", "--L", "2", "--format", "dot")
        assert code == 0
        assert out.startswith('graph "WKP(2,2)"')
        assert out.count(" -- ") == 10
        assert out.rstrip().endswith("}")

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "g.json"
        code, _ = run(capsys, "gen", "--C", "2", "--L", "2", "-o", str(target))
        assert code == 0
        assert graph_from_json(target.read_bytes()).n == 7

    def test_bad_parameters_exit_2(self, capsys):
        code, _ = run(capsys, "gen", "--C", "0", "--L", "2")
        assert code == 2


class TestConstruct:
    def test_level2_example(self, capsys):
        code, out = run(capsys, "construct", "--C", "5", "--L", "2", "--k", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["set"] == ["(1,(1))", "(1,(2))", "(1,(3))", "(1,(4))"]
        assert doc["size"] == 4
        assert doc["is_kpds"] is True
        assert doc["radius"] == 3
        assert doc["provenance"] == "level2"
        assert doc["gamma_formula"] == {"exact": 4}

    def test_regime_violation_exit_4(self, capsys):
        code, _ = run(capsys, "construct", "--C", "3", "--L", "2", "--k", "0")
        assert code == 4


class TestVerify:
    def test_apex_is_not_enough(self, capsys):
        code, out = run(capsys, "verify", "--C", "3", "--L", "2", "--k", "1",
                        "--set", "(0,(1))")
        assert code == 0
        doc = json.loads(out)
        assert doc["is_kpds"] is False
        assert doc["radius"] is None

    def test_multi_address_literal(self, capsys):
        code, out = run(capsys, "verify", "--C", "3", "--L", "2", "--k", "1",
                        "--set", "(1,(1)); (1,(2))")
        assert code == 0
        doc = json.loads(out)
        assert doc["is_kpds"] is True
        assert doc["radius"] == 3

    def test_malformed_address_exit_2(self, capsys):
        code, _ = run(capsys, "verify", "--C", "3", "--L", "2", "--k", "1",
                      "--set", "(1,(9))")
        assert code == 2

    def test_unknown_vertex_exit_2(self, capsys):
        code, _ = run(capsys, "verify", "--C", "3", "--L", "2", "--k", "1",
                      "--set", "(3,(000))")
        assert code == 2


class TestExactAndRadius:
    def test_exact_output(self, capsys):
        code, out = run(capsys, "exact", "--C", "3", "--L", "2", "--k", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["gamma"] == 2
        assert doc["witness"] == ["(1,(0))", "(1,(1))"]
        assert doc["exhausted"] is True

    def test_radius_output(self, capsys):
        code, out = run(capsys, "radius", "--C", "3", "--L", "2", "--k", "3")
        assert code == 0
        assert json.loads(out)["radius"] == 2

    def test_budget_exhausted_exit_3(self, capsys):
        code, _ = run(capsys, "exact", "--C", "3", "--L", "3", "--k", "1",
                      "--budget", "50")
        assert code == 3

    def test_threads_flag_accepted(self, capsys):
        code, out = run(capsys, "exact", "--C", "2", "--L", "2", "--k", "1",
                        "--threads", "4")
        assert code == 0
        assert json.loads(out)["gamma"] == 1


class TestTrace:
    def test_trace_matches_schema(self, capsys):
        code, out = run(capsys, "trace", "--C", "2", "--L", "2", "--k", "1",
                        "--set", "(1,(1))")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"k", "seed", "rounds", "radius"}
        assert doc["radius"] == 3
        assert doc["rounds"][0] == ["(0,(1))", "(1,(0))", "(1,(1))", "(2,(10))", "(2,(11))"]
        assert len(doc["rounds"]) == 3


class TestCheckPaper:
    def test_full_report_passes(self, capsys):
        code, out = run(capsys, "check-paper")
        assert code == 0
        assert "fail" not in out
        assert "skipped-budget" in out

    def test_json_report_is_deterministic(self, capsys):
        code, out = run(capsys, "check-paper", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["failures"] == 0
        statuses = {row["status"] for row in doc["rows"]}
        assert statuses <= {"match", "bound-holds", "skipped-budget"}
        code2, out2 = run(capsys, "check-paper", "--format", "json")
        assert (code2, out2) == (code, out)


class TestEnvOverrides:
    def test_budget_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("WKPDOM_MAX_CHECKS", "50")
        code, _ = run(capsys, "exact", "--C", "3", "--L", "3", "--k", "1")
        assert code == 3

    def test_vertex_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("WKPDOM_MAX_VERTICES", "10")
        code, _ = run(capsys, "gen", "--C", "3", "--L", "2")
        assert code == 2

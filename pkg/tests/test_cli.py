import json

import pytest

from mananets.cli import main

ATP_DOC = """\
{
  "marking": {
    "ATP": 2,
    "H2O": 1
  },
  "places": [
    "ADP",
    "ATP",
    "H2O",
    "Pi"
  ],
  "transitions": {
    "hydrolysis": {
      "post": {
        "ADP": 1,
        "Pi": 1
      },
      "pre": {
        "ATP": 1,
        "H2O": 1
      }
    }
  }
}
"""

ABC_DSL = """\
u: A + B -> C mana: consume 1
marking: A + B
pool: u=2
"""


@pytest.fixture
def atp_path(tmp_path):
    path = tmp_path / "atp.json"
    path.write_text(ATP_DOC, encoding="utf-8")
    return str(path)


@pytest.fixture
def abc_path(tmp_path):
    path = tmp_path / "abc.crn"
    path.write_text(ABC_DSL, encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(capsys, atp_path):
    code, out, _ = run(capsys, "validate", atp_path)
    assert code == 0
    assert json.loads(out) == {"violations": []}


def test_validate_reports_and_fails(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"places": ["A"], "transitions": '
                    '{"u": {"pre": {"X": 1}, "post": {}}}}', encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    report = json.loads(out)
    assert report["violations"][0]["kind"] == "unknown-place"


def test_fire(capsys, atp_path):
    code, out, _ = run(capsys, "fire", atp_path, "--transition", "hydrolysis")
    assert code == 0
    assert json.loads(out) == {"marking": {"ADP": 1, "ATP": 1, "Pi": 1}}


def test_fire_not_enabled(capsys, tmp_path):
    path = tmp_path / "dry.crn"
    path.write_text("u: A -> B\nmarking: 0", encoding="utf-8")
    code, out, err = run(capsys, "fire", str(path), "--transition", "u")
    assert code == 1
    assert "not enabled" in err


def test_run_lex_is_deterministic(capsys, atp_path):
    code, out, _ = run(capsys, "run", atp_path, "--steps", "3")
    assert code == 0
    first = json.loads(out)
    code, out, _ = run(capsys, "run", atp_path, "--steps", "3")
    assert json.loads(out) == first
    assert first["steps"] == ["hydrolysis"]
    assert first["final"] == {"ADP": 1, "ATP": 1, "Pi": 1}


def test_run_seeded_reproducible(capsys, atp_path):
    code, out1, _ = run(capsys, "run", atp_path, "--steps", "3", "--seed", "7")
    code, out2, _ = run(capsys, "run", atp_path, "--steps", "3", "--seed", "7")
    assert out1 == out2


def test_run_mana_mode(capsys, abc_path):
    code, out, _ = run(capsys, "run", abc_path, "--steps", "5", "--mana")
    assert code == 0
    result = json.loads(out)
    assert result["steps"] == ["u"]
    assert result["final"] == {"marking": {"C": 1}, "pool": {"u": 1}}


def test_run_seed_conflicts_with_policy(capsys, atp_path):
    with pytest.raises(SystemExit) as err:
        main(["run", atp_path, "--steps", "1", "--seed", "1", "--policy", "lex"])
    assert err.value.code == 2


def test_reach_output(capsys, atp_path):
    code, out, _ = run(capsys, "reach", atp_path, "--depth", "3", "--max-tokens", "10")
    assert code == 0
    graph = json.loads(out)
    assert len(graph["nodes"]) == 2
    assert graph["edges"] == [[1, "hydrolysis", 0]]
    assert graph["truncated"] is False


def test_internalize_externalize_inverse(capsys, abc_path, tmp_path):
    built_path = str(tmp_path / "built.json")
    code, out, _ = run(capsys, "internalize", abc_path, "-o", built_path)
    assert code == 0 and out == ""
    built = json.loads(open(built_path).read())
    assert "mana:u" in built["places"]
    assert built["marking"] == {"A": 1, "B": 1, "mana:u": 2}

    code, out, _ = run(capsys, "externalize", built_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["places"] == ["A", "B", "C"]
    assert doc["mana"] == {"u": {"consume": 1, "produce": {}}}
    assert doc["marking"] == {"A": 1, "B": 1}
    assert doc["pool"] == {"u": 2}


def test_externalize_rejects_policy_documents(capsys, abc_path):
    code, _, err = run(capsys, "externalize", abc_path)
    assert code == 2
    assert "mana block" in err


def test_externalize_flags_unlabelled_nets(capsys, atp_path):
    code, _, err = run(capsys, "externalize", atp_path)
    assert code == 1
    assert "mana place" in err


def test_check_laws_all_pass(capsys, abc_path):
    code, out, _ = run(capsys, "check-laws", abc_path, "--samples", "8", "--seed", "5")
    assert code == 0
    report = json.loads(out)
    assert report["seed"] == 5 and report["samples"] == 8
    assert report["notes"]
    assert {entry["law"] for entry in report["laws"]} >= {
        "left-counit", "right-counit", "coassociativity", "identity",
        "composition", "laxator-naturality"}
    assert all(entry["status"] == "pass" for entry in report["laws"])


def test_check_laws_single_mode(capsys, abc_path):
    code, out, _ = run(capsys, "check-laws", abc_path, "--functor",
                       "--samples", "5", "--seed", "1")
    assert code == 0
    laws = {entry["law"] for entry in json.loads(out)["laws"]}
    assert laws == {"identity", "composition"}


def test_equiv(capsys, abc_path):
    code, out, _ = run(capsys, "equiv", abc_path, "--depth", "5", "--max-tokens", "12")
    assert code == 0
    report = json.loads(out)
    assert report["isomorphic"] is True
    assert report["ext_nodes"] == report["int_nodes"]


def test_export_dot(capsys, abc_path, tmp_path):
    out_path = tmp_path / "net.dot"
    code, _, _ = run(capsys, "export-dot", abc_path, "-o", str(out_path))
    assert code == 0
    dot = out_path.read_text()
    assert dot.startswith("digraph net {")
    assert '"u" [shape=box];' in dot


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "validate", "no-such-file.json")
    assert code == 2
    assert "cannot read" in err


def test_malformed_document_is_usage_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"places": [], "transitions": {}, "wat": 1}', encoding="utf-8")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "unknown key" in err


def test_unknown_flag_is_usage_error(atp_path):
    with pytest.raises(SystemExit) as err:
        main(["validate", atp_path, "--frobnicate"])
    assert err.value.code == 2

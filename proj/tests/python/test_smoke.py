import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

import valab

FIXTURES = Path(os.environ.get("VALAB_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))
CLI = os.environ.get("VALAB_CLI")


def entry(report, check_id):
    return next(e for e in report["entries"] if e["check_id"] == check_id)


def test_corpus_ids():
    ids = valab.corpus_ids()
    assert "ex62_alpha1" in ids
    assert "semisimple_l1" in ids


def test_check_ex62():
    report = valab.check(valab.ex62("1"))
    assert report["exit_code"] == 0
    assert report["summary"]["fail"] == 0


def test_check_ex63_reports_leibniz_failure():
    report = valab.check(valab.ex63("0"))
    assert report["exit_code"] == 1
    assert entry(report, "leibniz.identity")["status"] == "fail"


def test_ring_invariants():
    f = valab.ex61(3)
    assert valab.socle(f) == [[0, 0, 0, 1]]
    assert valab.jacobson_radical(f) == [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert valab.is_gorenstein(f)
    assert not valab.is_gorenstein(valab.semisimple(1))


def test_l1_family_and_heisenberg():
    f = valab.ex62("1")
    sol = valab.solve_l1(f)
    assert sol["particular"] == [-1, 0, 0, 0]
    (d,) = sol["directions"]
    # spans the line through (-1/2, 1, 0, 0)
    assert d[1] != 0 and [x / d[1] for x in d] == [Fraction(-1, 2), 1, 0, 0]
    w = valab.heisenberg(f)
    assert w["g"] == [1, 0]
    assert w["beta"] == Fraction(1, 2)
    assert w["h_prime"] == [1, Fraction(-1, 2)]
    assert not w["normalized"]


def test_heisenberg_error_kind():
    with pytest.raises(valab.ValabError) as info:
        valab.heisenberg(valab.ex62("0"))
    assert info.value.args[0] == "BetaZero"


def test_round_trip_and_load():
    f = valab.ex62("1")
    again = valab.parse_file(f.serialize())
    assert again.serialize() == f.serialize()
    loaded = valab.load_file(str(FIXTURES / "ex62_alpha1.json"))
    assert loaded.id == "ex62_alpha1"
    assert loaded.serialize() == f.serialize()


def test_parse_error():
    with pytest.raises(valab.ValabError) as info:
        valab.parse_file("{")
    assert info.value.args[0] == "ParseError"


@pytest.mark.skipif(CLI is None, reason="VALAB_CLI not set")
def test_cli_json_and_exit_codes(tmp_path):
    out = subprocess.run([CLI, "--json", "invariants", str(FIXTURES / "ex62_alpha1.json")], capture_output=True, text=True)
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["command"] == "invariants"
    assert entry(report, "forms.M")["values"]["basis"] == "span{da}"

    bad = json.loads((FIXTURES / "ex62_alpha1.json").read_text())
    bad["algebra"]["mul"][0][0] = ["1"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    out = subprocess.run([CLI, "check", str(path)], capture_output=True, text=True)
    assert out.returncode == 2
    assert "DimensionMismatch" in out.stderr

    out = subprocess.run([CLI, "semiconformal", str(FIXTURES / "semisimple_l1.json")], capture_output=True, text=True)
    assert out.returncode == 3

    out = subprocess.run([CLI, "--json", "mutate", "--seed", "7", "--count", "5", str(FIXTURES / "ex62_alpha1.json")],
                         capture_output=True, text=True)
    assert json.loads(out.stdout)["command"] == "mutate"

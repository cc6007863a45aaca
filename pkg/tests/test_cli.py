import json
import shutil
import subprocess
import sys

import pytest

from gvcat import cli
from gvcat.corpus import CORPUS, bundled_path, corpus_text
from gvcat.corpus import load_bundled
from gvcat.fileformat import dump
from gvcat.mutation import mutations

FILE_COMMANDS = ["validate", "coherence", "dualizing", "gv-report", "rigidity", "pivotal"]
BRAIDED = [n for n in CORPUS if load_bundled(n).braiding is not None]


def call(capsys, *argv):
    code = cli.main([str(a) for a in argv] + ["--json"])
    out = capsys.readouterr().out
    report = json.loads(out)
    assert report["schema"] == cli.REPORT_SCHEMA
    assert report["exit_code"] == code
    return code, report


@pytest.mark.parametrize("name", list(CORPUS))
@pytest.mark.parametrize("command", FILE_COMMANDS)
def test_file_commands_succeed(capsys, name, command):
    code, report = call(capsys, command, bundled_path(name))
    assert code == cli.EXIT_OK, report.get("error")
    assert report["status"] == "ok" and report["command"] == command


@pytest.mark.parametrize("name", BRAIDED)
@pytest.mark.parametrize("command", ["twists", "ribbon"])
def test_braided_commands_succeed(capsys, name, command):
    code, _ = call(capsys, command, bundled_path(name))
    assert code == cli.EXIT_OK


@pytest.mark.parametrize("command", ["twists", "ribbon"])
def test_missing_braiding_is_invalid(capsys, command):
    code, report = call(capsys, command, bundled_path("e1_z5"))
    assert code == cli.EXIT_INVALID
    assert "braiding" in report["error"]


def test_pivotal_e1_counts(capsys):
    code, report = call(capsys, "pivotal", bundled_path("e1_z5"))
    assert code == 0
    assert report["result"]["counts"] == {"natural_isos": 16, "monoidal_isos": 4, "pivotal": 1}
    assert report["result"]["pivotal"] == [{"0": "0@0>0", "1": "1@1>1", "K": "1@K>K"}]


def test_twists_e2(capsys):
    _, report = call(capsys, "twists", bundled_path("e2_minus"))
    assert report["result"]["counts"]["twists"] == 2
    _, report = call(capsys, "ribbon", bundled_path("e2_minus"))
    assert report["result"]["counts"] == {"twists": 2, "ribbon": 2}


def test_mutated_file_names_the_violation(capsys, tmp_path):
    mu = mutations(load_bundled("e2_minus"), "assoc", 1, 0)[0]
    p = tmp_path / "bad.cat"
    dump(mu.cf, p)
    code, report = call(capsys, "validate", p)
    assert code == cli.EXIT_INVALID
    violations = report["result"]["validation"]["violations"]
    assert any("pentagon" in v for v in violations)
    code, _ = call(capsys, "pivotal", p)
    assert code == cli.EXIT_INVALID


def test_unparsable_file(capsys, tmp_path):
    p = tmp_path / "x.cat"
    p.write_text("not a category\n")
    code, report = call(capsys, "validate", p)
    assert code == cli.EXIT_INVALID and "line 1" in report["error"]


def test_missing_file(capsys, tmp_path):
    code, _ = call(capsys, "validate", tmp_path / "nope.cat")
    assert code == cli.EXIT_INVALID


def test_bad_K(capsys):
    code, report = call(capsys, "pivotal", bundled_path("e1_z5"), "--K", "0")
    assert code == cli.EXIT_INVALID and "dualizing" in report["error"]


def test_theorem_violation_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "enumerate_ribbon", lambda gv, b: [])
    code, report = call(capsys, "ribbon", bundled_path("e2_minus"))
    assert code == cli.EXIT_VIOLATION and report["status"] == "violation"


def test_hecke(capsys):
    code, report = call(capsys, "hecke", bundled_path("e1_extension"),
                        "--object", "1", "--arrow", "1@1>1.p")
    assert code == 0
    assert report["result"]["objects"] == ["0", "1", "K"]
    assert report["result"]["triple"] == {"K": "K", "f": "0@K>1"}


def test_hecke_rejects_non_idempotent(capsys):
    code, report = call(capsys, "hecke", bundled_path("e1_extension"),
                        "--object", "1", "--arrow", "0@1>1.p")
    assert code == cli.EXIT_INVALID and "idempotent" in report["error"]


def test_extend_writes_bundled_extension(capsys, tmp_path):
    out = tmp_path / "ext.cat"
    code, report = call(capsys, "extend", bundled_path("e1_z5"), "--f", "0@K>1", "--output", out)
    assert code == 0
    assert report["result"] == {"objects": ["0", "1", "K", "I"], "unit": "I",
                                "hom_unit_unit": 2, "rigid": False}
    assert out.read_text(encoding="utf-8") == corpus_text("e1_extension")


def test_extend_rejects_unknown_label(capsys):
    code, report = call(capsys, "extend", bundled_path("e1_z5"), "--f", "zz")
    assert code == cli.EXIT_INVALID and "zz" in report["error"]


def test_roundtrip(capsys):
    code, report = call(capsys, "roundtrip", bundled_path("e1_z5"), "--f", "0@K>1")
    assert code == 0
    assert report["result"]["roundtrip"]["info"]["hom_one_one"] == 2


def test_text_output(capsys):
    assert cli.main(["pivotal", str(bundled_path("e1_z5"))]) == 0
    out = capsys.readouterr().out
    assert out.startswith("pivotal: ok")
    assert '"monoidal_isos": 4' in out


def test_selftest_single_entry(capsys):
    code, report = call(capsys, "selftest", "--only", "e1_z5", "--mutations", "5")
    assert code == 0


@pytest.mark.skipif(shutil.which("gvcat") is None, reason="console script not installed")
def test_console_script():
    r = subprocess.run(["gvcat", "validate", str(bundled_path("trivial")), "--json"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["status"] == "ok"


def test_module_entry():
    r = subprocess.run([sys.executable, "-m", "gvcat.cli", "validate", str(bundled_path("trivial"))],
                       capture_output=True, text=True)
    assert r.returncode == 0

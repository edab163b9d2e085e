"""Smoke tests for the python module and the CLI.

The module is looked up on PYTHONPATH (the CMake build tree places it under
build/python); the CLI path comes from LCSKT_CLI or the default build layout.
"""

import json
import os
import subprocess
from pathlib import Path

import pytest

lcskt = pytest.importorskip("lcskt")

ROOT = Path(__file__).resolve().parents[2]
CLI = Path(os.environ.get("LCSKT_CLI", ROOT / "build" / "lcskt"))
DATA = ROOT / "tests" / "data"


def test_check_nilpotent():
    report = lcskt.check("(0,0,0,12,14,24)")
    assert report["jacobi"] is True
    assert report["step"] == 3
    assert report["unimodular"] is True
    assert report["lower_central_series"] == [6, 3, 2, 0]


def test_check_rejects_non_jacobi():
    report = lcskt.check("(0,13+23,12)")
    assert report["jacobi"] is False
    assert tuple(report["violation"]) == (1, 2, 3)


def test_parse_errors():
    with pytest.raises(ValueError):
        lcskt.canonical("(0,0,12")
    with pytest.raises(KeyError):
        lcskt.canonical("(q*12,0)")


def test_canonical_round_trip():
    out = lcskt.canonical("( 0 , 0 ,0, 0,0, 12 )")
    assert out["canonical"] == "(0,0,0,0,0,12)"
    again = lcskt.canonical(out["canonical"])
    assert again["canonical"] == out["canonical"]


def test_solve_three_step_coframe():
    text = "d2 = 11'\nd3 = 12 - 12'"
    out = lcskt.solve(text, metric="params:r=1,s=1,t=1")
    assert out["classification"] == "NONTRIVIAL_LCSKT"
    assert out["particular"] == "4*3"
    assert out["solution_dim"] == 0


def test_solve_trivial_family():
    out = lcskt.solve("d3 = 11'", metric="params:r=2,s=3,t=5")
    assert out["classification"] == "TRIVIAL_LCSKT"
    assert out["homogeneous_basis"] == ["1", "2"]


def test_hermitian_flags_on_catalog_example():
    out = lcskt.hermitian("(26,-16,46,0,0,0)", J="pairs:1>2,3>5,4>6")
    assert out["flags"]["skt"] is True
    assert out["flags"]["balanced"] is False
    assert out["flags"]["lcb"] is True


def test_almost_abelian_catalog():
    report = lcskt.almost_abelian_catalog("l23_0")
    assert report["hermitian"]["torsion"] == "136"
    assert report["hermitian"]["dH"] == "0"
    assert report["ricci"] == {"chern": "0", "bismut": "-16"}
    assert report["lee_form_trace_formula"] == "-5"
    assert report["solution"]["classification"] == "TRIVIAL_LCSKT"

    l8 = lcskt.almost_abelian_catalog("l8", {"p": "4", "q": "-1", "s": "-1"})
    assert l8["hermitian"]["torsion"] == "2*123+2*145"
    assert l8["nondegenerate_decision"]["lambda"] == "-2"


def test_almost_abelian_explicit_data():
    report = lcskt.almost_abelian(
        n=3, a="0", v=["0", "0", "0", "0"],
        A=[["0", "-1", "0", "0"], ["1", "0", "0", "0"], ["0", "0", "0", "-1"], ["0", "0", "1", "0"]],
    )
    assert report["solution"]["classification"] == "KAHLER_LIKE"
    assert report["skt_certificate"] is True


def test_lattice_screen():
    assert lcskt.lattice_screen("l23_0")["all_integral"] is True
    assert lcskt.lattice_screen("l23_0", t0=1.0)["all_integral"] is False


def test_scenarios_and_sweeps():
    assert set(lcskt.sweep_families()) == {"nonnil", "nil-e0", "nil-e1", "almost-abelian"}
    result = lcskt.run_scenario("h16-alpha-formula")
    assert result["match"] is True
    assert all(r["match"] for r in lcskt.run_all_scenarios())
    sweep = lcskt.sweep("nonnil", draws=5, seed=42)
    assert sweep["ok"] is True and sweep["passes"] == 5


cli_missing = not CLI.exists()


@pytest.mark.skipif(cli_missing, reason="CLI binary not built")
class TestCli:
    def run(self, *args, expect=0):
        proc = subprocess.run([str(CLI), *args], capture_output=True, text=True)
        assert proc.returncode == expect, proc.stderr
        return proc.stdout

    def test_check_json(self):
        out = json.loads(self.run("check", str(DATA / "h16.alg"), "--json"))
        assert out["step"] == 3 and out["unimodular"] is True

    def test_solve_coframe_file(self):
        out = json.loads(
            self.run("solve", str(DATA / "h16_coframe.alg"), "--metric", "params:r=1,s=1,t=1",
                     "--json"))
        assert out["solution"]["classification"] == "NONTRIVIAL_LCSKT"
        assert out["solution"]["particular"] == "4*3"

    def test_parametric_file_with_override(self):
        out = json.loads(self.run("check", str(DATA / "l8.alg"), "--json"))
        assert out["unimodular"] is True
        out2 = json.loads(
            self.run("check", str(DATA / "l8.alg"), "--param", "s=1", "--json"))
        assert out2["unimodular"] is False

    def test_exit_codes(self):
        self.run("check", str(DATA / "broken.alg"), expect=2)
        self.run("check", str(DATA / "non_jacobi.alg"), expect=3)

    def test_hermitian_flags(self):
        out = json.loads(
            self.run("hermitian", str(DATA / "l8.alg"), "--J", "pairs:1>6,2>3,4>5", "--json"))
        assert out["hermitian"]["flags"]["skt"] is False
        assert out["hermitian"]["flags"]["lcb"] is True

    def test_abelian_step(self):
        proc = subprocess.run([str(CLI), "check", "-", "--json"], input="(0,0,0,0)",
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["step"] == 1

    def test_solve_l8(self):
        out = json.loads(
            self.run("solve", str(DATA / "l8.alg"), "--J", "pairs:1>6,2>3,4>5", "--json"))
        assert out["solution"]["classification"] == "NONTRIVIAL_LCSKT"
        assert out["solution"]["particular"] == "-2*6"

    def test_reproduce_all(self):
        out = json.loads(self.run("reproduce", "--all", "--json"))
        assert out["mismatches"] == 0

    def test_json_reports_are_deterministic(self):
        a = self.run("sweep", "--family", "almost-abelian", "--draws", "5", "--seed", "11", "--json")
        b = self.run("sweep", "--family", "almost-abelian", "--draws", "5", "--seed", "11", "--json")
        assert a == b

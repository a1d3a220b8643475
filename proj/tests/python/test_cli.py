"""End-to-end CLI checks: output values, JSON validity, exact exit codes."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("RS_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="RS_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_vcount_table():
    r = run("vcount", "--p", "5", "--poly", "0,0,1")
    assert r.returncode == 0
    assert "count: 3" in r.stdout


def test_vcount_profile_json():
    r = run("--format", "json", "vcount", "--p", "5", "--poly", "0,0,1", "--laurent", "2",
            "--profile")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["count"] == 3
    assert doc["profile"] == {"0": 1, "3": 2, "4": 1}


def test_invalid_inputs_exit_2():
    assert run("vcount", "--p", "4", "--poly", "0,1").returncode == 2
    assert run("curve", "--p", "3", "--m", "1", "--n", "1").returncode == 2
    assert run("decompose", "--p", "11").returncode == 2
    assert run("eta", "--level", "13", "--at", "2").returncode == 2
    assert run("verify", "--pmin", "4", "--pmax", "50").returncode == 2
    assert run("verify", "--statement", "thm9_9", "--pmax", "50").returncode == 2
    assert run("forms", "--coeffs", "1,1,7", "--n", "2").returncode == 2


def test_curve_json():
    r = run("--format", "json", "curve", "--p", "11", "--m", "-3", "--n", "-322")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["count"] == 8  # p + 1 - (p/3) a_15(p) = 12 - (-1)(-4)
    assert doc["singular"] is False


def test_eta_csv_dump():
    r = run("--format", "csv", "eta", "--level", "14", "--nmax", "4")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "n,a"
    assert lines[1] == "1,1"
    assert lines[2] == "2,-1"
    assert lines[4] == "4,1"


def test_decompose_values():
    r = run("--format", "json", "decompose", "--p", "13")
    doc = json.loads(r.stdout)
    assert (doc["A"], doc["B"], doc["L"], doc["M"]) == (1, 2, -5, 1)
    assert doc["jacobi_A"] and doc["jacobi_L"]


def test_verify_all_small_range():
    r = run("--format", "json", "verify", "--all", "--pmax", "60")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["total_failures"] == 0
    for statement in doc["statements"]:
        assert statement["failures"] == []


def test_verify_single_statement_exit_0():
    r = run("verify", "--statement", "thm3_2", "--pmax", "2000")
    assert r.returncode == 0

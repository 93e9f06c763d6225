"""
Tests de la CLI
run(argv) en proceso con ficheros temporales y una ida y vuelta en subprocesos
"""
import io
import json
import os
import subprocess
import sys
from itertools import combinations

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

import pytest

from app import run
from modules.minor_embed import petersen_graph
from utils.helpers import format_edge_list


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """Sin hyperminor.yaml ni variables HYPERMINOR_* del entorno"""
    monkeypatch.chdir(tmp_path)
    for var in ("HYPERMINOR_CONFIG", "HYPERMINOR_SEED", "HYPERMINOR_BETA",
                "HYPERMINOR_OUTPUT", "HYPERMINOR_LOG_LEVEL"):
        monkeypatch.delenv(var, raising=False)


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


def petersen_file(tmp_path):
    return write(tmp_path / "petersen.txt", format_edge_list(petersen_graph().edges, "petersen"))


def k4_file(tmp_path):
    return write(tmp_path / "k4.txt", format_edge_list(combinations(range(4), 2)))


# ============================================================================
# PARÁMETROS
# ============================================================================

def test_params_and_capacity(capsys):
    assert run(["params", "--m", "15"]) == 0
    assert "a=5 L=10 k_t=4 d=13" in capsys.readouterr().out
    assert run(["capacity", "--d", "13"]) == 0
    assert "m_max=16" in capsys.readouterr().out


def test_params_infeasible_exits_2(capsys):
    assert run(["params", "--m", "15", "-d", "12"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:") and "13" in err


def test_run_twice_after_stderr_is_closed(monkeypatch):
    """run sigue devolviendo un código aunque el stderr de la llamada anterior esté cerrado"""
    first = io.TextIOWrapper(io.BytesIO(), encoding="utf-8")
    monkeypatch.setattr(sys, "stderr", first)
    assert run(["-vv", "bound", "tail", "--d", "4"]) == 0
    first.close()

    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    assert run(["-vv", "bound", "tail", "--d", "4"]) == 0
    assert "DEBUG hyperminor.cli" in second.getvalue()
    assert run(["params", "--m", "15", "-d", "12"]) == 2


def test_usage_errors():
    assert run([]) == 2
    assert run(["embed"]) == 2
    assert run(["--help"]) == 0


# ============================================================================
# EMBED / VERIFY
# ============================================================================

def test_embed_then_verify_petersen(tmp_path, capsys):
    graph = petersen_file(tmp_path)
    model = str(tmp_path / "model.json")
    assert run(["embed", "-i", graph, "-d", "13", "-o", model]) == 0
    assert "a=5 L=10 k_t=4 d=13" in capsys.readouterr().out
    assert run(["verify", "-i", graph, "-m", model]) == 0
    data = json.loads((tmp_path / "model.json").read_text(encoding="utf-8"))
    assert data["d"] == 13 and len(data["paths"]) == 15


def test_embed_output_is_deterministic(tmp_path):
    graph = k4_file(tmp_path)
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["embed", "-i", graph, "-o", str(first)]) == 0
    assert run(["embed", "-i", graph, "-o", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_verify_corrupted_model(tmp_path, capsys):
    graph = k4_file(tmp_path)
    model = tmp_path / "model.json"
    assert run(["embed", "-i", graph, "-o", str(model)]) == 0
    data = json.loads(model.read_text(encoding="utf-8"))
    data["branch_sets"]["1"].append(data["branch_sets"]["0"][0])
    model.write_text(json.dumps(data), encoding="utf-8")
    capsys.readouterr()

    assert run(["verify", "-i", graph, "-m", str(model)]) == 1
    assert "BranchOverlap" in capsys.readouterr().err


def test_verify_rejects_duplicated_path_entry(tmp_path, capsys):
    graph = k4_file(tmp_path)
    model = tmp_path / "model.json"
    assert run(["embed", "-i", graph, "-o", str(model)]) == 0
    data = json.loads(model.read_text(encoding="utf-8"))
    data["paths"].insert(0, dict(data["paths"][0]))
    model.write_text(json.dumps(data), encoding="utf-8")
    capsys.readouterr()

    assert run(["verify", "-i", graph, "-m", str(model)]) == 2
    assert "más de un camino" in capsys.readouterr().err


def test_verify_json_report(tmp_path, capsys):
    graph = k4_file(tmp_path)
    model = str(tmp_path / "model.json")
    run(["embed", "-i", graph, "-o", model])
    capsys.readouterr()
    assert run(["--json", "verify", "-i", graph, "-m", model]) == 0
    assert json.loads(capsys.readouterr().out) == {"valid": True, "violations": []}


def test_bad_inputs_exit_2(tmp_path, capsys):
    bad = write(tmp_path / "bad.txt", "0 1\n1 x\n")
    assert run(["embed", "-i", bad, "-o", str(tmp_path / "m.json")]) == 2
    assert "Línea 2" in capsys.readouterr().err
    assert run(["embed", "-i", str(tmp_path / "missing.txt"), "-o", "m.json"]) == 2
    broken = write(tmp_path / "broken.json", "{not json")
    assert run(["verify", "-i", k4_file(tmp_path), "-m", broken]) == 2


# ============================================================================
# DECOMPOSE
# ============================================================================

def test_decompose_with_check(tmp_path, capsys):
    perm = write(tmp_path / "perm.txt", "# 2x2\n1\n3\n0\n2\n")
    out = tmp_path / "factors.txt"
    assert run(["decompose", "--shape", "2,2", "-i", perm, "-o", str(out), "--check"]) == 0
    assert "correcta" in capsys.readouterr().out
    headers = [l for l in out.read_text(encoding="utf-8").splitlines() if l.startswith("#")]
    assert len(headers) == 3


def test_decompose_rejects_bad_permutation(tmp_path):
    perm = write(tmp_path / "perm.txt", "0\n0\n1\n2\n")
    assert run(["decompose", "--shape", "2,2", "-i", perm, "-o", str(tmp_path / "f.txt")]) == 2


# ============================================================================
# EXPANDER
# ============================================================================

def test_expander_gen_and_check(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(["expander", "gen", "--n2", "10", "--seed", "3", "-o", str(out)]) == 0
    assert len([l for l in out.read_text(encoding="utf-8").splitlines()
                if l and not l.startswith("#")]) == 15

    k33 = write(tmp_path / "k33.txt", format_edge_list([(a, b) for a in range(3) for b in range(3, 6)]))
    assert run(["expander", "check", "-i", k33]) == 0
    assert "peor razón=1" in capsys.readouterr().out

    pairs = list(combinations(range(4), 2)) + list(combinations(range(4, 8), 2))
    two_k4 = write(tmp_path / "two_k4.txt", format_edge_list(pairs))
    assert run(["expander", "check", "-i", two_k4, "--beta", "9/50"]) == 1


def test_expander_check_rejects_non_cubic(tmp_path):
    path = petersen_file(tmp_path)
    assert run(["expander", "check", "-i", path]) == 0
    assert run(["expander", "check", "-i", k4_file(tmp_path), "--beta", "abc"]) == 2
    star = write(tmp_path / "star.txt", "0 1\n0 2\n0 3\n")
    assert run(["expander", "check", "-i", star]) == 2


def test_expander_survey_json(capsys):
    assert run(["--json", "expander", "survey", "--sizes", "10", "--samples", "5"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[0]["two_n"] == 10 and rows[0]["samples"] == 5


# ============================================================================
# BOUND
# ============================================================================

def test_bound_theorem_2001(capsys):
    assert run(["--json", "bound", "theorem", "--d", "2001"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["holds"] is True and report["tail_ok"] is True
    assert run(["bound", "theorem", "--d", "100"]) == 0
    assert "holds=false" in capsys.readouterr().out


def test_bound_tail_and_scan(capsys):
    assert run(["bound", "tail", "--d", "8"]) == 0
    assert "weight_tail=37" in capsys.readouterr().out
    assert run(["--json", "bound", "scan", "--max-d", "64"]) == 0
    scan = json.loads(capsys.readouterr().out)
    assert scan == {"max_d": 64, "theorem_min_d": None, "tail_first_d": 1, "tail_stable_from": 9}


def test_bound_place_and_certify(tmp_path, capsys):
    graph = k4_file(tmp_path)
    placement = write(tmp_path / "p.txt", "0 00\n1 10\n2 11\n3 01\n")
    assert run(["bound", "place", "-i", graph, "-p", placement, "--d", "2"]) == 0
    assert "hamming_sum=8 lower_bound=6 host_capacity=4" in capsys.readouterr().out

    assert run(["--json", "bound", "certify", "-i", graph, "--d", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["certified"] is True and report["min_lower_bound"] == 6

    duplicate = write(tmp_path / "dup.txt", "0 00\n1 00\n2 11\n3 01\n")
    assert run(["bound", "place", "-i", graph, "-p", duplicate, "--d", "2"]) == 2


# ============================================================================
# SUBPROCESOS
# ============================================================================

def test_round_trip_in_separate_processes(tmp_path):
    """Lo que escribe embed lo acepta verify lanzado como otro proceso"""
    graph = petersen_file(tmp_path)
    model = str(tmp_path / "model.json")
    app = os.path.join(ROOT, "app.py")
    done = subprocess.run([sys.executable, app, "embed", "-i", graph, "-o", model],
                          capture_output=True, text=True, cwd=ROOT)
    assert done.returncode == 0, done.stderr
    done = subprocess.run([sys.executable, app, "verify", "-i", graph, "-m", model],
                          capture_output=True, text=True, cwd=ROOT)
    assert done.returncode == 0, done.stderr

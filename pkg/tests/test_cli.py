from __future__ import annotations

import csv
import io
import json
import logging
import subprocess
import sys

import pytest

from anspaces import cache
from anspaces.cli import run
from anspaces.trees import FacePoset


def invoke(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_order():
    code, out = invoke("order", "--n", "2")
    assert code == 0
    assert out.strip() == '{"odd_part":45,"v2_lower":2,"v2_upper":4}'


def test_classify():
    code, out = invoke("classify", "--n", "1", "--k", "5", "--k2", "7")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "Equivalent"
    assert set(doc) == {"invariant_k", "invariant_k2", "verdict"}
    _, out = invoke("classify", "--n", "3", "--k", "12", "--k2", "20")
    assert json.loads(out)["verdict"] == "Inconclusive"


def test_census_csv():
    code, out = invoke("census", "--n", "1", "--kmax", "100")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["invariant", "count", "representative"]
    assert len(rows) == 7


def test_verify_exit_codes():
    code, out = invoke("verify", "--kind", "K", "--n-max", "6")
    doc = json.loads(out)
    assert code == 0 and doc["failures"] == [] and doc["instances"] > 0
    code, _ = invoke("verify", "--kind", "J", "--n-max", "4", "--format", "text")
    assert code == 0


def test_verify_failure_exit_code(monkeypatch):
    from anspaces import cli
    from anspaces.facemaps import FaceMapReport

    def broken(kind, n_max):
        rep = FaceMapReport("broken", n_max)
        rep.check("demo", False, 1, 2, 3)
        return rep

    monkeypatch.setattr(cli, "verify_relations", broken)
    code, out = invoke("verify", "--kind", "K", "--n-max", "3")
    assert code == 1 and json.loads(out)["failures"]


@pytest.mark.parametrize("argv", [["bogus"], ["order"], ["verify", "--kind", "X", "--n-max", "3"],
                                  ["order", "--n", "0"], ["verify", "--kind", "K", "--n-max", "40"],
                                  ["enumerate", "--kind", "K", "--n", "12"],
                                  ["steenrod", "P^1.P^1", "--prime", "4"]])
def test_usage_errors(argv, capsys):
    code, _ = invoke(*argv)
    assert code == 2
    assert "usage" in capsys.readouterr().err


def test_steenrod_subcommand():
    code, out = invoke("steenrod", "P^1.P^1", "--prime", "3")
    assert code == 0 and out.strip() == "2*P^2"
    code, out = invoke("steenrod", "P^1.P^1", "--prime", "7", "--format", "json")
    doc = json.loads(out)
    assert doc["normal_form"] == "2*P^2" and doc["terms"] == [{"word": [2], "coeff": 2}]


def test_probe_subcommand():
    code, out = invoke("probe", "--prime", "5", "--trials", "200", "--seed", "3")
    assert code == 0 and json.loads(out)["ok"]


def test_realize():
    code, out = invoke("realize", "--n", "3")
    assert code == 0
    assert list(csv.reader(io.StringIO(out))) == [
        ["tree", "x_1", "x_2"], ["m(m(x,x),x)", "1", "2"], ["m(x,m(x,x))", "2", "1"]]
    code, out = invoke("realize", "--n", "6", "--check", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["affine_dimension"] == 4


def test_spheres():
    code, out = invoke("spheres", "--kind", "J", "--n-max", "4")
    assert code == 0 and all(r["ok"] for r in json.loads(out))


def test_enumerate_formats(tmp_path):
    code, out = invoke("enumerate", "--kind", "J", "--n", "3", "--cache-dir", str(tmp_path))
    doc = json.loads(out)
    assert code == 0 and doc["f_vector"] == [6, 6, 1] and doc["schema_version"] == 1
    code, out = invoke("enumerate", "--kind", "K", "--n", "5", "--dim", "0", "--format", "csv", "--no-cache")
    assert len(out.splitlines()) == 15
    code, out = invoke("enumerate", "--kind", "K", "--n", "11", "--vertices-only")
    assert json.loads(out)["count"] == 16796


def test_cache_hot_and_cold_identical(tmp_path):
    argv = ["enumerate", "--kind", "K", "--n", "6", "--cache-dir", str(tmp_path)]
    _, cold = invoke(*argv)
    assert cache.cache_path(tmp_path, "K", 6).exists()
    _, hot = invoke(*argv)
    _, uncached = invoke("enumerate", "--kind", "K", "--n", "6", "--no-cache")
    assert cold == hot == uncached


def test_cache_roundtrip(tmp_path):
    built = cache.load_or_build("J", 4, tmp_path)
    loaded = cache.load_or_build("J", 4, tmp_path)
    assert loaded == built == FacePoset.build("J", 4)


def test_corrupt_cache_is_rebuilt(tmp_path, caplog):
    path = cache.cache_path(tmp_path, "K", 5)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(b"not a pickle")
    with caplog.at_level(logging.WARNING):
        poset = cache.load_or_build("K", 5, tmp_path)
    assert poset.f_vector == [14, 21, 9, 1]
    assert "rebuilding" in caplog.text
    assert cache.load_or_build("K", 5, tmp_path) == poset


def test_env_var_sets_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("ANSPACES_CACHE_DIR", str(tmp_path / "c"))
    invoke("enumerate", "--kind", "K", "--n", "4")
    assert cache.cache_path(tmp_path / "c", "K", 4).exists()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "anspaces", "order", "--n", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"odd_part": 3, "v2_lower": 1, "v2_upper": 2}

"""JSON serialization round-trips and command-line behavior."""
from __future__ import annotations

import json

import pytest

from fusionbench import io as fio
from fusionbench.catalog import CATALOG, render, write_examples
from fusionbench.cli import group_name, run
from fusionbench.groups import cyclic_group, direct_product, symmetric_group_3


@pytest.fixture(scope="module")
def example_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("examples")
    write_examples(d)
    return d


def test_catalog_has_at_least_eight_entries():
    assert len(CATALOG) >= 8


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_serialization_is_a_fixed_point(name):
    text = render(name)
    d = json.loads(text)
    kind = fio.detect_kind(d)
    to_dict, from_dict = fio.KIND_SERIALIZERS[kind]
    assert fio.dumps_canonical(to_dict(from_dict(d))) == text


def test_detect_kind_rejects_unknown():
    from fusionbench import InputError
    with pytest.raises(InputError):
        fio.detect_kind({"foo": 1})


@pytest.mark.parametrize("G, expected", [
    (cyclic_group(4), "C4"),
    (direct_product(cyclic_group(2), cyclic_group(2)), "C2xC2"),
    (direct_product(cyclic_group(2), cyclic_group(3)), "C6"),
    (symmetric_group_3(), "S3"),
])
def test_group_name(G, expected):
    assert group_name(G) == expected


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_cli_validate_examples(name, example_dir):
    assert run(["validate", str(example_dir / f"{name}.json")]) == 0


def test_cli_examples_listing(capsys):
    assert run(["examples"]) == 0
    out = capsys.readouterr().out
    assert "ising" in out and len(out.strip().splitlines()) >= 8


def test_cli_make_reproduces_shipped_ising(example_dir, tmp_path):
    out = tmp_path / "ising.json"
    assert run(["make", "ty", "--group", "C2", "--chi", "-1",
                "--tau", "+", "-o", str(out)]) == 0
    assert out.read_bytes() == (example_dir / "ising.json").read_bytes()


def test_cli_make_reproduces_shipped_ty_ty(example_dir, tmp_path):
    out = tmp_path / "tyty.json"
    assert run(["make", "ty-ty", "-o", str(out)]) == 0
    assert out.read_bytes() == (example_dir / "ty_ty_c2_c2.json").read_bytes()


def test_cli_pentagon_and_triangle(example_dir):
    assert run(["pentagon", str(example_dir / "ising.json")]) == 0
    assert run(["triangle", str(example_dir / "ising.json")]) == 0


def test_cli_pentagon_json_report(example_dir, capsys):
    assert run(["pentagon", str(example_dir / "ty_ty_c2_c2.json"),
                "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True


def test_cli_tolerance_env_override(example_dir, monkeypatch):
    monkeypatch.setenv("FUSIONBENCH_TOL", "1e-30")
    assert run(["pentagon", str(example_dir / "ising.json")]) == 1
    monkeypatch.setenv("FUSIONBENCH_TOL", "not-a-number")
    assert run(["pentagon", str(example_dir / "ising.json")]) == 2


def test_cli_invariants(example_dir, capsys):
    assert run(["invariants", str(example_dir / "ty_c2_ring.json")]) == 0
    out = capsys.readouterr().out
    assert "FPdim: 4" in out
    assert "U(R): C2" in out
    assert "nilpotent: yes (depth 2)" in out


def test_cli_validate_broken_ring_exits_1(example_dir, tmp_path, capsys):
    d = json.loads((example_dir / "ty_c2_ring.json").read_text())
    d["N"] = [e for e in d["N"] if e[:3] != [2, 2, 0]] + [[2, 2, 0, 2]]
    bad = tmp_path / "broken.json"
    bad.write_text(json.dumps(d))
    assert run(["validate", str(bad)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_cli_usage_errors_exit_2(example_dir, capsys):
    assert run(["validate", "/nonexistent/file.json"]) == 2
    assert run(["pentagon", str(example_dir / "ty_c2_ring.json")]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["make", "ty", "--group", "Q8"]) == 2
    capsys.readouterr()


def test_cli_bicrossed_factorize_roundtrip(example_dir, tmp_path, capsys):
    B = tmp_path / "B.json"
    mp = tmp_path / "mp.json"
    assert run(["bicrossed", str(example_dir / "ty_vec_matched_pair.json"),
                "-o", str(B)]) == 0
    assert run(["factorize", str(B), "--a", "0,2,4", "--c", "0,1",
                "-o", str(mp)]) == 0
    B2 = tmp_path / "B2.json"
    assert run(["bicrossed", str(mp), "-o", str(B2)]) == 0
    d1 = json.loads(B.read_text())
    d2 = json.loads(B2.read_text())
    assert d1["N"] == d2["N"] and d1["dual"] == d2["dual"]
    capsys.readouterr()


def test_cli_factorize_by_labels(example_dir, capsys):
    path = str(example_dir / "zc6_ring.json")
    assert run(["factorize", path, "--a", "e,g3", "--c", "e,g2,g4"]) == 0
    capsys.readouterr()

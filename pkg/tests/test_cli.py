import json
from importlib import resources

import pytest

from umlauf.cli import main


def fixture_path(name):
    return str(resources.files("umlauf") / "data" / "domains" / f"{name}.dom")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_curvature_wheel(capsys):
    code, out, _ = run(capsys, "curvature", fixture_path("wheel"))
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 7 and lines[-1] == "total 12"
    assert all(ln.split()[2] == "2" for ln in lines[:-1])
    # rows sorted by (l, k)
    rows = [tuple(map(int, ln.split()[:2])) for ln in lines[:-1]]
    assert rows == sorted(rows, key=lambda p: (p[1], p[0]))


def test_curvature_kinds_and_semantics(capsys):
    code, out, _ = run(capsys, "curvature", fixture_path("annulus_thin"), "--semantics", "x")
    assert code == 0 and out.splitlines()[-1] == "total -12"
    code, out, _ = run(capsys, "curvature", fixture_path("wheel"), "--kind", "k1")
    assert out.splitlines()[-1] == "total 6"
    code, out, _ = run(capsys, "curvature", fixture_path("wheel"), "--kind", "k2")
    assert out.splitlines()[-1] == "total 60"


def test_curvature_on_non_domain_fails(capsys):
    code, _, err = run(capsys, "curvature", fixture_path("ring6"))
    assert code == 1 and "umlauf:" in err


def test_check_smooth(capsys):
    code, out, _ = run(capsys, "check", fixture_path("wheel"))
    assert code == 0
    assert "is_domain=true" in out and "is_smooth=true" in out


def test_check_non_domain(capsys):
    code, out, _ = run(capsys, "check", fixture_path("pinched"))
    assert code == 1
    assert "cond_v=fail" in out and "is_smooth=false" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--json", fixture_path("ring6"))
    data = json.loads(out)
    assert code == 1 and data["cond_ii"] is False and data["is_domain"] is False


def test_euler(capsys):
    code, out, _ = run(capsys, "euler", fixture_path("annulus"))
    assert code == 0 and out.strip().endswith("chi=0")


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", fixture_path("segment"))
    assert code == 0 and out.splitlines()[-1] == "outcome=reduced"
    code, _, err = run(capsys, "reduce", fixture_path("annulus"))
    assert code == 1 and "simply connected" in err
    code, out, _ = run(capsys, "reduce", "--force", fixture_path("annulus"))
    assert code == 1 and out.strip() == "outcome=stuck"


def test_holes(capsys):
    code, out, _ = run(capsys, "holes", fixture_path("annulus"))
    assert code == 0
    assert out.splitlines()[0] == "holes=1 K=0 chi=0"
    assert "filled_K=12 filled_chi=1" in out


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", fixture_path("wheel"))
    assert code == 0 and out.count("2") == 6
    target = tmp_path / "w.svg"
    code, _, _ = run(capsys, "render", fixture_path("wheel"), "--format", "svg", "-o", str(target))
    assert code == 0 and target.read_text().startswith("<?xml")


def test_enumerate_verify(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "enumerate", "--max-interior", "4", "--verify", "--json", str(report))
    assert code == 0
    assert "checked=11 passed=11 failed=0" in out
    assert json.loads(report.read_text())["failed"] == 0


def test_enumerate_listing(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-interior", "3")
    assert code == 0 and out.splitlines()[-1] == "interior_classes=5 smooth_domains=5"


def test_audit(capsys):
    code, out, _ = run(capsys, "audit", "--max-window", "4")
    assert code == 0 and "failed=0" in out


def test_exit_code_two(capsys, tmp_path):
    bad = tmp_path / "bad.dom"
    bad.write_text("plane\nv 0 0\nv 2 0\ne 0 0 2 0\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "line 4" in err
    code, _, _ = run(capsys, "check", str(tmp_path / "missing.dom"))
    assert code == 2
    code, _, _ = run(capsys, "enumerate", "--max-interior", "50")
    assert code == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "curvature", fixture_path("annulus_wide"))[1]
    assert run(capsys, "curvature", fixture_path("annulus_wide"))[1] == first

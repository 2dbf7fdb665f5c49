from __future__ import annotations

import pytest

from stripes.cli import main
from stripes.fixtures import FIXTURE_NAMES, fixture_text


@pytest.fixture()
def atlas_file(tmp_path):
    def write(name_or_text: str, filename: str = "input.atlas"):
        text = (
            fixture_text(name_or_text)
            if name_or_text in FIXTURE_NAMES
            else name_or_text
        )
        path = tmp_path / filename
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kernel_punctured(atlas_file, capsys):
    code, out, _ = run(capsys, "kernel", atlas_file("PUNCTURED"))
    assert (code, out) == (0, "TRIVIAL\n")


def test_kernel_plane(atlas_file, capsys):
    code, out, _ = run(capsys, "kernel", atlas_file("PLANE"))
    assert (code, out) == (0, "Z2 witness=(id;m=0;r=1)\n")


def test_kernel_disconnected_exits_3(atlas_file, capsys):
    code, out, err = run(capsys, "kernel", atlas_file("strip S\nstrip T\n"))
    assert code == 3
    assert out == ""
    assert "disconnected" in err


def test_reduce_moeb(atlas_file, capsys):
    code, out, _ = run(capsys, "reduce", atlas_file("MOEB"))
    assert (code, out) == (0, "MOEBIUS\n")


def test_reduce_cyl(atlas_file, capsys):
    code, out, _ = run(capsys, "reduce", atlas_file("CYL"))
    assert (code, out) == (0, "CYLINDER\n")


def test_reduce_ladder_writes_atlas(atlas_file, capsys, tmp_path):
    out_path = tmp_path / "reduced.atlas"
    code, out, _ = run(capsys, "reduce", atlas_file("LADDER"), "-o", str(out_path))
    assert code == 0
    assert out_path.read_text() == "strip S\n"


def test_reduce_mixed_components(atlas_file, capsys):
    text = "strip S\nside0 a\nside1 b\nstrip T\nside1 x\nglue a b -\n"
    code, out, _ = run(capsys, "reduce", atlas_file(text))
    assert code == 0
    assert out == "MOEBIUS\nstrip T\nside1 x\n"


def test_validate_ok(atlas_file, capsys):
    code, out, _ = run(capsys, "validate", atlas_file("PUNCTURED"))
    assert (code, out) == (0, "OK\n")


def test_validate_parse_error_exits_1(atlas_file, capsys):
    code, _, err = run(capsys, "validate", atlas_file("strip S\nglue a a +\n"))
    assert code == 1
    assert "glued to itself" in err


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent/path.atlas")
    assert code == 2
    assert "cannot read" in err


def test_unknown_command_is_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_aut_cyl(atlas_file, capsys):
    code, out, _ = run(capsys, "aut", atlas_file("CYL"))
    assert code == 0
    assert out == (
        "sigma: S->S m: S=0 r: S=0\n"
        "sigma: S->S m: S=0 r: S=1\n"
        "sigma: S->S m: S=1 r: S=0\n"
        "sigma: S->S m: S=1 r: S=1\n"
    )


def test_aut_respects_thread_env(atlas_file, capsys, monkeypatch):
    monkeypatch.setenv("STRIPES_THREADS", "4")
    code, out, _ = run(capsys, "aut", atlas_file("PUNCTURED"))
    assert code == 0
    assert len(out.splitlines()) == 4


def test_report_punctured(atlas_file, capsys):
    code, out, _ = run(capsys, "report", atlas_file("PUNCTURED"))
    assert code == 0
    assert out == "autOrder 4\nkernel TRIVIAL\nimageOrder 4\nleafModelAutOrder 4\n"


def test_classify_punctured(atlas_file, capsys):
    code, out, _ = run(capsys, "classify", atlas_file("PUNCTURED"))
    assert code == 0
    assert out == "seam s1 t1 Special\nseam s2 t2 Special\n"


def test_classify_mixed(atlas_file, capsys):
    code, out, _ = run(capsys, "classify", atlas_file("strip S\nside0 a b c\nglue a c +\n"))
    assert code == 0
    assert out == "seam a c Special\nfree b Special\n"


def test_leafspace_plain(atlas_file, capsys):
    code, out, _ = run(capsys, "leafspace", atlas_file("PUNCTURED"))
    assert code == 0
    assert out.splitlines() == [
        "arc S side0=0 side1=2",
        "arc T side0=2 side1=0",
        "point {s1,t1} kind=seam attach=S.1[0],T.0[0]",
        "point {s2,t2} kind=seam attach=S.1[1],T.0[1]",
        "hcl {s1,t1} = {s1,t1},{s2,t2}",
        "hcl {s2,t2} = {s1,t1},{s2,t2}",
    ]


def test_leafspace_dot(atlas_file, capsys):
    code, out, _ = run(capsys, "leafspace", atlas_file("CYL"), "--dot")
    assert code == 0
    assert out.startswith("digraph leafspace {")
    assert '"S.0" -> "S.1" [label="S"];' in out
    assert '"S.1" -> "{a,b}" [label="0"];' in out


def test_leafspace_svg(atlas_file, capsys, tmp_path):
    svg_path = tmp_path / "out.svg"
    code, _, _ = run(capsys, "leafspace", atlas_file("PUNCTURED"), "--svg", str(svg_path))
    assert code == 0
    body = svg_path.read_text()
    assert body.startswith("<svg")
    assert "{s1,t1}" in body


def test_dual_plain_and_dot(atlas_file, capsys):
    code, out, _ = run(capsys, "dual", atlas_file("PUNCTURED"))
    assert (code, out) == (0, "vertices 2\nedges 2\neuler 0\n")
    code, out, _ = run(capsys, "dual", atlas_file("CYL"), "--dot")
    assert code == 0
    assert '"S" -- "S" [label="S.0[0]--S.1[0] +"];' in out


def test_iso(atlas_file, capsys):
    a = atlas_file("CYL", "a.atlas")
    b = atlas_file("MOEB", "b.atlas")
    code, out, _ = run(capsys, "iso", a, b)
    assert (code, out) == (0, "NOT-ISOMORPHIC\n")
    code, out, _ = run(capsys, "iso", a, a)
    assert code == 0
    assert out.startswith("ISOMORPHIC sigma: S->S")


def test_random_deterministic(capsys):
    code, first, _ = run(capsys, "random", "--strips", "3", "--max-ints", "2", "--seed", "42")
    assert code == 0
    code, second, _ = run(capsys, "random", "--strips", "3", "--max-ints", "2", "--seed", "42")
    assert first == second
    code, third, _ = run(capsys, "random", "--strips", "3", "--max-ints", "2", "--seed", "43")
    assert third != first


def test_random_output_parses(capsys, tmp_path):
    out_path = tmp_path / "random.atlas"
    code = main(["random", "--strips", "4", "--max-ints", "3", "--seed", "7", "-o", str(out_path)])
    assert code == 0
    assert main(["validate", str(out_path)]) == 0


@pytest.mark.parametrize("name", ["PUNCTURED", "CYL", "LADDER"])
def test_selfcheck_fixtures(atlas_file, capsys, name):
    code, out, _ = run(capsys, "selfcheck", atlas_file(name))
    assert code == 0
    assert out.endswith("SELFCHECK OK\n")
    assert all(line.startswith(("PASS", "SELFCHECK")) for line in out.splitlines())


def test_selfcheck_samples_flag(atlas_file, capsys):
    code, out, _ = run(capsys, "selfcheck", atlas_file("PUNCTURED"), "--samples", "3")
    assert code == 0
    assert "PASS S:hcl-oracle-agreement" in out


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0

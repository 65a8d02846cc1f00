"""Command-line interface: verbs, formats, exit codes."""
import json

import pytest

from zpgenus.cli import main


def _json_out(capsys):
    out = capsys.readouterr().out
    return json.loads(out)


def test_cpn_emit_and_compute_roundtrip(tmp_path, capsys):
    path = tmp_path / "cp2_p5.json"
    rc = main(["cpn", "--p", "5", "--n", "2", "--emit", str(path)])
    assert rc == 0
    doc = _json_out(capsys)
    assert doc == {"p": 5, "n": 2, "fixed_points": [[1, 2], [4, 1], [3, 4]]}
    assert json.loads(path.read_text()) == doc

    rc = main(["compute", "--genus", "td", "--weights", str(path), "--format", "json"])
    assert rc == 0
    report = _json_out(capsys)
    assert report["agree"] is True
    assert report["result"] == "1"
    assert report["results"] == {"pseries": "1", "ab": "1", "trace": "1"}


def test_compute_single_route_text(capsys):
    rc = main(
        ["compute", "--genus", "euler", "--p", "7", "--residues", "0,1,2,3",
         "--route", "pseries"]
    )
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert "route: pseries" in lines
    assert "result: 4" in lines


def test_compute_marks_unavailable_routes(capsys):
    # 1 + y ≡ 0 mod 5 shuts down both theta routes; pseries still works
    rc = main(
        ["compute", "--genus", "chi_y:4", "--p", "5", "--residues", "0,1",
         "--format", "json"]
    )
    assert rc == 0
    report = _json_out(capsys)
    assert report["results"]["pseries"] == "2"
    assert report["results"]["ab"].startswith("unavailable")
    assert report["results"]["trace"].startswith("unavailable")
    assert report["agree"] is True and report["result"] == "2"


def test_compute_output_deterministic(capsys):
    argv = ["compute", "--genus", "L", "--p", "5", "--residues", "0,1,2", "--format", "json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_ab_verb(capsys):
    rc = main(["ab", "--genus", "td", "--p", "5", "--residues", "1,2", "--format", "json"])
    assert rc == 0
    report = _json_out(capsys)
    assert report["agree"] is True
    assert report["coefficient_route"]["mod_p"] == report["trace_route"]["mod_p"]


def test_legendre_projective_and_power_system(capsys):
    assert main(["legendre", "--p", "5", "--n", "2", "--format", "json"]) == 0
    rep = _json_out(capsys)
    assert rep["check"] == "projective" and rep["equal"] is True

    assert main(["legendre", "--p", "5", "--format", "json"]) == 0
    rep = _json_out(capsys)
    assert rep["check"] == "power-system" and rep["equal"] is True

    assert main(["legendre", "--p", "5", "--n", "3"]) == 2
    err = capsys.readouterr().err
    assert "error: BadParams" in err


def test_thm71_verb_and_guard(tmp_path, capsys):
    path = tmp_path / "w.json"
    assert main(["cpn", "--p", "5", "--n", "2", "--emit", str(path)]) == 0
    capsys.readouterr()

    rc = main(["thm71", "--genus", "td", "--weights", str(path), "--format", "json"])
    assert rc == 0
    rep = _json_out(capsys)
    assert rep["equal"] is True and rep["p"] == 5 and rep["n"] == 2

    big = tmp_path / "cp4.json"
    assert main(["cpn", "--p", "5", "--n", "4", "--emit", str(big)]) == 0
    capsys.readouterr()
    rc = main(["thm71", "--genus", "td", "--weights", str(big)])
    assert rc == 2
    assert "GuardViolation" in capsys.readouterr().err

    rc = main(["thm71", "--genus", "td", "--weights", str(big), "--force", "--format", "json"])
    assert rc in (0, 1)
    assert "equal" in _json_out(capsys)


def test_submanifold_verb(tmp_path, capsys):
    path = tmp_path / "sub.json"
    path.write_text(
        '{"p": 3, "components": [{"normal_weights": [], "genus_value": "7/4"}]}'
    )
    rc = main(["submanifold", "--genus", "td", "--weights", str(path), "--format", "json"])
    assert rc == 0
    assert _json_out(capsys)["result"] == "1"


def test_cf_check_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.json"
    assert main(["cpn", "--p", "5", "--n", "2", "--emit", str(good)]) == 0
    capsys.readouterr()
    assert main(["cf-check", "--genus", "td", "--weights", str(good)]) == 0
    assert "all_zero: True" in capsys.readouterr().out

    junk = tmp_path / "junk.json"
    junk.write_text('{"p": 5, "n": 1, "fixed_points": [[1]]}')
    assert main(["cf-check", "--genus", "td", "--weights", str(junk)]) == 1
    assert "all_zero: False" in capsys.readouterr().out


def test_bad_input_exits_2(capsys):
    assert main(["compute", "--genus", "td", "--weights", "/no/such/file.json"]) == 2
    assert "error: BadParams" in capsys.readouterr().err

    assert main(["compute", "--genus", "td", "--p", "5"]) == 2
    capsys.readouterr()

    assert main(["ab", "--genus", "td", "--residues", "1"]) == 2
    capsys.readouterr()

    assert main(["compute", "--genus", "nope", "--p", "5", "--residues", "0,1"]) == 2
    capsys.readouterr()

    rc = main(["compute", "--genus", "td", "--p", "7", "--residues", "0,1",
               "--format", "json", "--route", "pseries", "--weights", "/no/file"])
    assert rc == 2
    err = capsys.readouterr().err
    assert json.loads(err)["error"] == "BadParams"


def test_selftest(capsys):
    assert main(["selftest", "--format", "json"]) == 0
    rep = _json_out(capsys)
    assert rep["all_ok"] is True
    assert len(rep["checks"]) == 11
    assert all(c["ok"] for c in rep["checks"])


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("zpgenus ")

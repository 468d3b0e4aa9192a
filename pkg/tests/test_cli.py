"""Command line interface: output format, exit codes, determinism."""

import json

import pytest

from schrodist.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def test_verify_n2_text(capsys):
    code, out = run(capsys, "verify", "--n", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    for line in lines:
        assert "EQUAL" in line and "distribution v + q*v^2" in line
    assert lines[0].startswith("n=2  1243,1324")


def test_verify_unequal_pair_exits_1(capsys):
    code, out = run(
        capsys, "verify", "--pairs", "1234,4321", "--n", "5", "--mode", "brute"
    )
    assert code == 1
    assert "UNEQUAL" in out
    assert "first differing coefficient" in out


def test_verify_json_schema(capsys):
    code, out = run(capsys, "verify", "--n", "2..3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["command"] == "verify"
    assert len(doc["checks"]) == 12
    for check in doc["checks"]:
        assert set(check) == {"n", "pair", "verdict", "detail"}
        assert check["verdict"] == "EQUAL"


def test_verify_tsv(capsys):
    code, out = run(capsys, "verify", "--n", "2", "--format", "tsv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n\tpair\tverdict\tdetail"
    assert lines[1] == "2\t1243,1324\tEQUAL\tdistribution v + q*v^2"


def test_verify_modes_agree(capsys):
    outs = set()
    for mode in ("brute", "dp", "series"):
        code, out = run(capsys, "verify", "--n", "1..5", "--mode", mode)
        assert code == 0
        outs.add(out.replace(mode, "MODE"))
    # the distributions printed are identical across modes
    assert len({o.split("distribution")[-1] for o in outs}) == 1


def test_verify_parallel_is_deterministic(capsys):
    _, serial = run(capsys, "verify", "--n", "1..5")
    _, parallel = run(capsys, "verify", "--n", "1..5", "--jobs", "3")
    assert serial == parallel


def test_verify_rejects_arbitrary_pair_outside_brute(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--pairs", "1234,4321", "--n", "4", "--mode", "dp"])
    assert exc.value.code == 2


# ----------------------------------------------------------------------
# crosscheck
# ----------------------------------------------------------------------

def test_crosscheck_n1(capsys):
    code, out = run(capsys, "crosscheck", "--n", "1")
    assert code == 0
    lines = out.strip().splitlines()
    # sequence family plus the six pairs
    assert len(lines) == 7
    assert lines[0].startswith("n=1  sequence  EQUAL")
    for line in lines:
        assert "distribution v" in line


def test_crosscheck_brute_ceiling(capsys):
    code, out = run(capsys, "crosscheck", "--n", "10", "--pairs", "1243,1324")
    assert code == 0
    assert "brute SKIPPED (n > 9)" in out
    assert "dp/series EQUAL" in out

    code, out = run(
        capsys,
        "crosscheck", "--n", "10", "--pairs", "1243,1324", "--brute-ceiling", "10",
    )
    assert code == 0
    assert "brute/dp/series EQUAL" in out


# ----------------------------------------------------------------------
# table
# ----------------------------------------------------------------------

def test_table_u3(capsys):
    code, out = run(capsys, "table", "u", "--n", "3")
    assert code == 0
    assert out == (
        "u_3(1,1) = 1\n"
        "u_3(1,2) = q\n"
        "u_3(2,1) = q\n"
        "u_3(2,2) = q\n"
        "u_3(3,1) = q\n"
        "u_3(3,2) = 0\n"
    )


def test_table_r2(capsys):
    code, out = run(capsys, "table", "r", "--n", "2")
    assert code == 0
    assert out == "r_2(3,0) = p\nr_2(3,1) = q*p^2\n"


def test_table_e3(capsys):
    code, out = run(capsys, "table", "e", "--n", "3")
    assert code == 0
    assert out == "e_3(1) = 1 + 2*q\ne_3(2) = 2*q\ne_3(3) = q^2\n"


def test_table_a_requires_case(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "a", "--n", "3"])
    assert exc.value.code == 2


def test_table_a_case(capsys):
    code, out = run(capsys, "table", "a", "--case", "1324,1342", "--n", "2")
    assert code == 0
    assert out == "a_2(1,2) = 1\na_2(2,1) = q\n"


def test_table_triangle(capsys):
    code, out = run(capsys, "table", "triangle", "--n", "5")
    assert code == 0
    assert out == "n=5: 8 16 22 22 22\n"


def test_table_json_cells(capsys):
    code, out = run(capsys, "table", "d", "--n", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["command"] == "table"
    cells = {c["cell"]: c["value"] for c in doc["cells"]}
    assert cells["d_2(2,1)"] == "q"


# ----------------------------------------------------------------------
# expand
# ----------------------------------------------------------------------

def test_expand_t(capsys):
    code, out = run(capsys, "expand", "t", "--n", "0..3", "--order", "8")
    assert code == 0
    assert out == "x^0  1\nx^1  -1 - 2*q\nx^2  -4*q\nx^3  -4*q - 8*q^2\n"


def test_expand_t_at_q1(capsys):
    code, out = run(
        capsys, "expand", "t", "--n", "0..3", "--order", "8", "--at", "q=1"
    )
    assert code == 0
    assert out == "x^0  1\nx^1  -3\nx^2  -4\nx^3  -12\n"


def test_expand_counting_series_schroeder(capsys):
    code, out = run(
        capsys, "expand", "U_x_1_1", "--n", "1..6", "--at", "q=1", "--order", "8"
    )
    assert code == 0
    values = [line.split()[-1] for line in out.strip().splitlines()]
    assert values == ["1", "2", "6", "22", "90", "394"]


def test_expand_master_n1(capsys):
    code, out = run(capsys, "expand", "master", "--n", "1", "--order", "8")
    assert code == 0
    assert out == "x^1  v\n"


def test_expand_unknown_asset(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand", "no_such_asset"])
    assert exc.value.code == 2


def test_expand_out_of_scope_asset(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand", "theorem32_1324_1423"])
    assert exc.value.code == 2


def test_expand_order_below_n_max(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand", "t", "--n", "0..5", "--order", "3"])
    assert exc.value.code == 2


def test_expand_order_env_var(capsys, monkeypatch):
    monkeypatch.setenv("SCHRODIST_ORDER", "8")
    code, out = run(capsys, "expand", "t", "--n", "0..3")
    assert code == 0
    assert out.startswith("x^0  1\n")

    monkeypatch.setenv("SCHRODIST_ORDER", "not_a_number")
    with pytest.raises(SystemExit) as exc:
        main(["expand", "t", "--n", "0..3"])
    assert exc.value.code == 2


def test_expand_json(capsys):
    code, out = run(
        capsys, "expand", "t", "--n", "0..2", "--order", "8", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["command"] == "expand"
    assert doc["coefficients"][0] == {"n": 0, "value": "1"}


# ----------------------------------------------------------------------
# argument handling
# ----------------------------------------------------------------------

def test_bad_range(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "5..2"])
    assert exc.value.code == 2


def test_bad_at_variable(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand", "t", "--n", "0..2", "--order", "8", "--at", "z=1"])
    assert exc.value.code == 2

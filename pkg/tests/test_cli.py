import json

import pytest

from cyclegroups.cli import suites
from cyclegroups.cli.expr import (
    Atom,
    Aut,
    ExprError,
    Hol,
    Power,
    Product,
    Wreath,
    build_group,
    format_group_expr,
    parse_group_expr,
    predicted_order,
)
from cyclegroups.cli.main import main

CORPUS = [
    "Sym:3", "Alt:5", "Cyclic:7", "PSL2:9", "PGL2:5", "PGammaL2:8", "AutPSL3:3", "PSL3:2",
    "PSL2:5 ^ 2", "PSL2:5^3", "(PSL2:5)^2", "PGammaL2:9 wr Sym:2", "Sym:3 wr Sym:3",
    "Sym:3 x Cyclic:2", "Sym:3 x Cyclic:2 x Alt:4", "Sym:3 x (Cyclic:2 x Alt:4)",
    "(Sym:3 x Cyclic:2) x Alt:4", "Hol(Cyclic:5)", "Aut(PSL2:7)", "Hol(Sym:3 x Cyclic:2)",
    "Aut(PSL2:5^2)", "Hol(Aut(Alt:5))", "Alt:5^2 wr Sym:2", "(Alt:5 wr Sym:2)^2",
    "Alt:5 ^ 2 ^ 3", "(Alt:5^2)^3", "Cyclic:2 wr Sym:2 wr Sym:2", "Cyclic:2 wr Sym:2 x Sym:3",
    "Cyclic:2 x Sym:3 wr Sym:2", "(Cyclic:2 x Sym:3) wr Sym:2", "Hol( Cyclic:8 )",
    "  Sym : 4  ", "Sym:4x Alt:4", "Sym:4 xAlt:4", "PSL2:11 x PSL2:13", "Aut(Aut(Sym:3))",
    "Hol(Cyclic:3)^2", "Aut(Cyclic:9) x Cyclic:2", "(Hol(Cyclic:3))", "((Sym:3))",
    "PSL2:25", "PSL2:27 x Cyclic:1", "Cyclic:1", "Alt:1", "Sym:1 wr Sym:1",
    "PGL2:7 ^ 1", "Sym:5 x Sym:5 x Sym:5 x Sym:5", "Alt:6 wr Sym:3", "Hol(Alt:4) x Hol(Cyclic:4)",
    "Aut(PSL3:3) x (PGammaL2:4 wr Sym:2)^2",
]


def test_corpus_size():
    assert len(CORPUS) == 50


@pytest.mark.parametrize("text", CORPUS)
def test_roundtrip(text):
    e = parse_group_expr(text)
    printed = format_group_expr(e)
    assert parse_group_expr(printed) == e
    assert format_group_expr(parse_group_expr(printed)) == printed


def test_ast_shapes_and_precedence():
    assert parse_group_expr("PSL2:9") == Atom("PSL2", 9)
    assert parse_group_expr("PSL2:5 ^ 2") == Power(Atom("PSL2", 5), 2)
    assert parse_group_expr("PGammaL2:9 wr Sym:2") == Wreath(Atom("PGammaL2", 9), 2)
    a, b, c = Atom("Sym", 3), Atom("Cyclic", 2), Atom("Alt", 4)
    assert parse_group_expr("Sym:3 x Cyclic:2 x Alt:4") == Product(Product(a, b), c)
    assert parse_group_expr("Sym:3 x Cyclic:2 wr Sym:2") == Product(a, Wreath(b, 2))
    assert parse_group_expr("Sym:3 ^ 2 wr Sym:2") == Wreath(Power(a, 2), 2)
    assert parse_group_expr("Hol(Aut(Sym:3))") == Hol(Aut(a))


def test_power_binds_tighter_than_wreath_on_base():
    # "G wr Sym:2 ^ 2" is not valid: the exponent after Sym:2 belongs to no operand rule
    with pytest.raises(ExprError):
        parse_group_expr("Cyclic:2 wr Sym:2 ^ 2")


@pytest.mark.parametrize(
    "text,pos",
    [("Foo:3", 0), ("Sym:", 4), ("Sym:3 x", 7), ("PSL2:6", 5), ("PSL2:3", 5), ("AutPSL3:5", 8),
     ("(Sym:3", 6), ("Sym:3)", 5), ("Sym:3 ^ 0", 8), ("Sym:3 $", 6), ("Hol(Sym:3", 9), ("", 0)],
)
def test_errors_carry_position(text, pos):
    with pytest.raises(ExprError) as e:
        parse_group_expr(text)
    assert e.value.position == pos


def test_predicted_order_matches_built_group():
    for text in ["Sym:3 x Cyclic:2", "PSL2:5^2", "Sym:3 wr Sym:3", "PGammaL2:8", "AutPSL3:3", "PSL3:3", "Cyclic:2 wr Sym:2 wr Sym:2"]:
        e = parse_group_expr(text)
        assert build_group(e).order == predicted_order(e)
    assert build_group(parse_group_expr("Hol(Cyclic:5)")).order == 20
    assert build_group(parse_group_expr("Aut(PSL2:7)")).order == 336


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_lambda_aff_json(capsys):
    code, out, _ = run(capsys, "compute", "lambda-aff", "PSL2:5", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["Lambda_aff"] == "15" and rep["lambda_aff"] == "1/4"
    assert rep["order"] == "60" and rep["group"] == "PSL2:5"
    assert set(rep["witness"]) >= {"alpha", "x"}


def test_compute_text_examples(capsys):
    code, out, _ = run(capsys, "compute", "lambda", "PGammaL2:13")
    assert code == 0 and "Lambda: 14" in out
    code, out, _ = run(capsys, "compute", "radical-index", "Sym:4")
    assert code == 0 and "radical_index: 1\n" in out


@pytest.mark.parametrize(
    "quantity,expr,key,value",
    [("order", "Alt:5 x Cyclic:3", "order", "180"), ("meo", "Sym:5", "meo", "6"), ("mao", "PSL2:9", "mao", "10"),
     ("exponent", "Sym:4", "exponent", "12"), ("socle-order", "Sym:4", "socle_order", "4"),
     ("lambda-aff", "Sym:4", "Lambda_aff", "12"), ("lambda", "Cyclic:7", "lambda", "6/7"),
     ("radical-index", "Sym:3 x Alt:5", "radical_index", "60")],
)
def test_compute_quantities(capsys, quantity, expr, key, value):
    code, out, _ = run(capsys, "compute", quantity, expr, "--json")
    assert code == 0
    assert json.loads(out)[key] == value


def test_reports_deterministic(capsys):
    reps = []
    for _ in range(2):
        _, out, _ = run(capsys, "compute", "lambda-aff", "Sym:4", "--json")
        rep = json.loads(out)
        rep.pop("wall_time_s")
        reps.append(rep)
    assert reps[0] == reps[1]


def test_exit_code_usage(capsys):
    code, _, err = run(capsys, "compute", "order", "Foo:3")
    assert code == 2 and "position 0" in err
    with pytest.raises(SystemExit) as e:
        main(["compute", "nonsense", "Sym:3"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def test_exit_code_guard(capsys):
    code, out, err = run(capsys, "compute", "order", "Sym:12")
    assert code == 3 and "max group order" in err
    code, out, _ = run(capsys, "compute", "order", "Sym:6", "--max-group-order", "100", "--json")
    assert code == 3 and json.loads(out)["guard"] == "max group order"
    code, out, _ = run(capsys, "compute", "lambda-aff", "Sym:4", "--max-affine-sweep", "10", "--json")
    assert code == 3 and json.loads(out)["guard"] == "max affine sweep"


def test_verify_pass_and_fail(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "main-cor")
    assert code == 0 and "passed: 6/6" in out
    monkeypatch.setitem(suites.SUITES, "landau", lambda opts: [suites.SuiteItem("broken", 1, 2, False)])
    code, out, _ = run(capsys, "verify", "landau", "--json")
    assert code == 1
    assert json.loads(out)["items"][0]["passed"] is False


def test_verify_shift_lemmas(capsys):
    code, out, _ = run(capsys, "verify", "shift-lemmas")
    assert code == 0 and "FAIL" not in out


def test_landau_table_command(capsys):
    code, out, _ = run(capsys, "landau-table", "--n-max", "10", "--json")
    rows = json.loads(out)["rows"]
    assert code == 0 and [r["g"] for r in rows] == ["1", "2", "3", "4", "6", "6", "12", "15", "20", "30"]


def test_bounds_grid_command(capsys):
    code, out, _ = run(capsys, "bounds-grid", "--failures-only", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["all_hold"] is True and rep["cases"] == "730"
    assert [r["group"] for r in rep["rows"]] == ["PSL_3(3)", "PSL_3(4)", "PSU_3(5)"]

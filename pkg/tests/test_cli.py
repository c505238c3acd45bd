import json

import pytest

from lrcross import VALID_INSTANCES, builtin_algebra, tensor_product_algebra
from lrcross.cli import format_element, main, multiplication_table


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_trivial(capsys):
    code, out, _ = run(capsys, "check", "demo:trivial_2x2")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("lrc")]
    assert len(rows) == 13 and all(" holds " in r for r in rows)


def test_check_broken(capsys):
    code, out, _ = run(capsys, "check", "demo:broken_J")
    assert code == 1
    assert "lrc5   FAILS  at (g, g, x)" in out
    assert "12/13 axioms hold" in out


@pytest.mark.parametrize("name", VALID_INSTANCES)
def test_exit_codes_valid(capsys, name):
    assert run(capsys, "check", f"demo:{name}")[0] == 0
    assert run(capsys, "assoc", f"demo:{name}")[0] == 0
    assert run(capsys, "build", f"demo:{name}")[0] == 0


def test_assoc_sweedler(capsys):
    code, out, _ = run(capsys, "assoc", "demo:sweedler_lr_smash")
    assert code == 0
    assert "16-dimensional" in out and "4096 triples" in out


def test_assoc_broken(capsys):
    code, out, _ = run(capsys, "assoc", "demo:broken_J")
    assert code == 1 and "assoc fails" in out


def test_build_broken(capsys):
    code, _, err = run(capsys, "build", "demo:broken_J")
    assert code == 1 and "lrc5" in err
    code, out, _ = run(capsys, "build", "demo:broken_J", "--no-require-axioms")
    assert code == 0 and '"kind": "algebra"' in out


def test_json_report(capsys):
    code, out, _ = run(capsys, "check", "demo:broken_J", "--json-report", "--max-counterexamples", "3")
    assert code == 1
    rep = json.loads(out)
    assert [a["label"] for a in rep["axioms"]][:6] == ["lrc1", "lrc2", "lrc3", "lrc4", "lrc5", "lrc6"]
    assert len(rep["axioms"]) == 13
    assert set(rep["axioms"][0]) == {"id", "label", "holds", "tuples_checked", "witnesses"}
    w = rep["axioms"][4]["witnesses"][0]
    assert w["inputs"] == [1, 1, 1] and w["input_labels"] == ["g", "g", "x"]
    assert w["lhs"] == [[1, 0, "1"]] and w["rhs"] == [[1, 0, "4"]]


def test_check_is_deterministic(capsys):
    first = run(capsys, "check", "demo:broken_J", "--json-report")
    assert run(capsys, "check", "demo:broken_J", "--json-report") == first


def test_table_matches_tensor_product(capsys):
    code, out, _ = run(capsys, "table", "demo:trivial_2x2")
    assert code == 0
    C2 = builtin_algebra("cyclic:2")
    expect = multiplication_table(tensor_product_algebra(C2, C2))
    got = [tuple(p.strip() for p in line.replace(" * ", "|").replace(" = ", "|").split("|"))
           for line in out.splitlines()]
    assert got == expect


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "demo:complex_mirror", "--json-report")
    assert code == 0
    assert {"left": "i⊗1", "right": "i⊗1", "product": "-1⊗1"} in json.loads(out)


def test_mul(capsys):
    code, out, _ = run(capsys, "mul", "demo:complex_mirror", "0,1", "0,1")
    assert code == 0 and out.splitlines() == ["[-1, 0]", "-1⊗1"]
    code, out, _ = run(capsys, "mul", "demo:super_twist", "0,1,0,0", "0,0,1,0")
    assert out.splitlines()[1] == "-x⊗g"


def test_mul_bad_coordinates(capsys):
    assert run(capsys, "mul", "demo:complex_mirror", "0,1,2", "0,1")[0] == 2
    assert run(capsys, "mul", "demo:complex_mirror", "0,q", "0,1")[0] == 2


def test_demo_roundtrip(tmp_path, capsys):
    path = tmp_path / "st.json"
    assert run(capsys, "demo", "super_twist", "-o", str(path))[0] == 0
    assert run(capsys, "check", str(path))[0] == 0
    built = tmp_path / "prod.json"
    assert run(capsys, "build", str(path), "-o", str(built))[0] == 0
    for cmd in ("assoc", "table"):
        assert run(capsys, cmd, str(built))[0] == 0
    code, out, _ = run(capsys, "mul", str(built), "0,0,0,1", "0,0,0,1")
    assert code == 0 and out.splitlines()[1] == "0"
    assert run(capsys, "check", str(built))[0] == 2  # an algebra is not a crossed datum


def test_demo_source_and_prefix(capsys):
    code, out, _ = run(capsys, "demo", "demo:iterated_sign", "--source")
    assert code == 0 and '"kind": "iterated"' in out


def test_field_flag(capsys):
    code, out, _ = run(capsys, "check", "demo:sweedler_lr_smash", "--field", "F5")
    assert code == 0 and out.startswith("field F5")
    assert run(capsys, "demo", "sweedler_lr_smash", "--field", "F2")[0] == 2
    assert run(capsys, "check", "demo:super_twist", "--field", "F4")[0] == 2


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "frobnicate", "x")[0] == 2
    assert run(capsys, "check")[0] == 2
    assert run(capsys, "check", "demo:nope")[0] == 2
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "check", "demo:trivial_2x2", "--max-counterexamples", "0")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": "lrx/9"}', encoding="utf-8")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "$.format" in err


def test_help(capsys):
    assert run(capsys, "--help")[0] == 0


def test_format_element():
    from lrcross.tensor import Tensor
    from lrcross.scalars import QQ
    v = Tensor.from_nested(QQ, [1, -1, "1/2", 0])
    assert format_element(["a", "b", "c", "d"], v) == "a - b + 1/2*c"
    assert format_element(["a"], Tensor.from_nested(QQ, [0])) == "0"

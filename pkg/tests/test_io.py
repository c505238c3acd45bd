import json

import pytest

from lrcross import INSTANCE_NAMES, builtin_instance, builtin_source, build_crossed_product
from lrcross.io import DocumentError, parse_document, serialize_document
from lrcross.scalars import QQ, FieldSpec

from conftest import fields_for

F7 = FieldSpec.prime(7)

FIELD_DOC = """{
  "format": "lrx/1",
  "field": {
    "kind": "Q"
  },
  "kind": "algebra",
  "dim": 1,
  "unit": ["1"],
  "mu": [
    [0, 0, 0, "1"]
  ]
}
"""

ALL_OBJECTS = [
    (f"{name}-{kind}-{f}", name, f, kind)
    for name in INSTANCE_NAMES for f in fields_for(name) for kind in ("source", "datum")
]


def _obj(name, f, kind):
    return builtin_source(name, f) if kind == "source" else builtin_instance(name, f)


def test_minimal_algebra():
    doc = parse_document(FIELD_DOC)
    assert doc.kind == "algebra" and doc.field == QQ
    assert doc.obj.dim == 1 and doc.obj.unit.data.tolist() == [1]


def test_minimal_is_canonical():
    assert serialize_document(parse_document(FIELD_DOC).obj) == FIELD_DOC


@pytest.mark.parametrize("_id,name,f,kind", ALL_OBJECTS, ids=[a[0] for a in ALL_OBJECTS])
def test_roundtrip(_id, name, f, kind):
    obj = _obj(name, f, kind)
    text = serialize_document(obj)
    assert text.endswith("\n") and text == serialize_document(obj)
    back = parse_document(text).obj
    assert serialize_document(back) == text
    assert back == obj if kind == "datum" else serialize_document(back) == text


def test_product_roundtrip():
    A = build_crossed_product(builtin_instance("sweedler_lr_smash"))
    text = serialize_document(A)
    assert parse_document(text).obj == A
    assert "⊗" in text  # labels stay readable UTF-8


def test_entries_sorted_and_sparse():
    doc = json.loads(serialize_document(builtin_instance("sweedler_lr_smash")))
    for key in ("mu", "J", "T", "gamma", "eta"):
        idx = [e[:-1] for e in doc[key]]
        assert idx == sorted(idx)
        assert all(e[-1] != "0" for e in doc[key])


def test_field_override():
    text = serialize_document(builtin_instance("super_twist"))
    doc = parse_document(text, F7)
    assert doc.field == F7 and doc.obj == builtin_instance("super_twist", F7)


def _mutate(text, fn):
    doc = json.loads(text)
    fn(doc)
    return json.dumps(doc)


def _err(text):
    with pytest.raises(DocumentError) as exc:
        parse_document(text)
    return str(exc.value)


def test_duplicate_entry():
    bad = _mutate(FIELD_DOC, lambda d: d["mu"].append([0, 0, 0, "1"]))
    assert _err(bad).startswith("$.mu[1]: duplicate entry")


def test_out_of_range_index():
    bad = _mutate(FIELD_DOC, lambda d: d["mu"].append([0, 1, 0, "1"]))
    assert _err(bad).startswith("$.mu[1]: index 1 out of range")


def test_wrong_arity():
    assert _err(_mutate(FIELD_DOC, lambda d: d["mu"].append([0, 0, "1"]))).startswith("$.mu[1]")


def test_bad_scalar():
    assert _err(_mutate(FIELD_DOC, lambda d: d.update(unit=["one"]))).startswith("$.unit[0]")
    assert _err(_mutate(FIELD_DOC, lambda d: d.update(unit=[1]))).startswith("$.unit[0]")


def test_unit_length():
    assert _err(_mutate(FIELD_DOC, lambda d: d.update(unit=["1", "0"]))).startswith("$.unit")


def test_zero_pointed_unit():
    text = serialize_document(builtin_instance("super_twist"))
    bad = _mutate(text, lambda d: d["U"].update(unit=["0", "0"]))
    assert _err(bad).startswith("$.U.unit: the distinguished element 1_U must be nonzero")


def test_missing_and_unknown_fields():
    assert "missing field 'mu'" in _err(_mutate(FIELD_DOC, lambda d: d.pop("mu")))
    assert _err(_mutate(FIELD_DOC, lambda d: d.update(extra=1))).startswith("$.extra: unknown field")


def test_version_and_kind():
    assert _err(_mutate(FIELD_DOC, lambda d: d.update(format="lrx/2"))).startswith("$.format")
    assert _err(_mutate(FIELD_DOC, lambda d: d.update(kind="group"))).startswith("$.kind")


def test_field_section():
    assert _err(_mutate(FIELD_DOC, lambda d: d.update(field={"kind": "Fp", "p": 8}))).startswith("$.field.p")
    assert _err(_mutate(FIELD_DOC, lambda d: d.update(field={"kind": "R"}))).startswith("$.field")


def test_json_errors():
    assert _err("{").startswith("$: invalid JSON")
    assert _err("[]").startswith("$: top level")
    assert "duplicate key" in _err('{"format": "lrx/1", "format": "lrx/1"}')


def test_map_shape_is_checked():
    text = serialize_document(builtin_instance("super_twist"))
    bad = _mutate(text, lambda d: d["J"].append([0, 0, 2, 0, "1"]))
    assert "$.J[" in _err(bad) and "out of range" in _err(bad)


def test_smash_invariants_checked_at_load():
    text = serialize_document(builtin_source("c2_smash"))
    bad = _mutate(text, lambda d: d["Delta"].append([0, 1, 1, "1"]))
    assert _err(bad).startswith("$: ")


def test_bad_convention():
    text = serialize_document(builtin_source("c2_smash"))
    assert _err(_mutate(text, lambda d: d["convention"].update(x="phi"))).startswith("$.convention.x")


def test_prime_field_scalars():
    doc = parse_document(_mutate(FIELD_DOC, lambda d: d.update(field={"kind": "Fp", "p": 7}, unit=["8"])))
    assert doc.obj.unit.data.tolist() == [1]

"""The ``lrx/1`` JSON document format for algebras, crossed data and specializations.

Tensors are written as sparse entry lists ``[i, j, ..., "c"]`` sorted by index
tuple, zeros omitted; unit vectors as dense lists of scalar strings.  Output is
deterministic: keys in fixed order, one entry per line, UTF-8, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import Algebra
from .constructions import (
    BimoduleAlgebraData,
    IteratedData,
    LRSmashData,
    LRTwistData,
    MirrorBrzezinskiData,
    QuasiBialgebraData,
)
from .crossed import CrossedDatum, PointedSpace
from .scalars import FieldSpec
from .tensor import Tensor

__all__ = ["FORMAT", "KINDS", "Document", "DocumentError", "parse_document", "serialize_document", "kind_name"]

FORMAT = "lrx/1"
KINDS = ("algebra", "crossed_datum", "lr_twist", "mirror_brz", "iterated", "lr_smash")


class DocumentError(ValueError):
    """Malformed or invalid document; the message starts with a JSON path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True, eq=False)
class Document:
    field: FieldSpec
    kind: str
    obj: object


# -- serialization -------------------------------------------------------------


def _field_json(f: FieldSpec) -> dict:
    return {"kind": "Q"} if f.kind == "Q" else {"kind": "Fp", "p": f.p}


def _dense(t: Tensor) -> list:
    return [t.field.format(v) for v in t.data.tolist()]


def _sparse(t: Tensor) -> list:
    return [[*idx, t.field.format(v)] for idx, v in t.nonzero()]


def _algebra_items(A: Algebra) -> list:
    items = [("dim", A.dim), ("unit", _dense(A.unit)), ("mu", _sparse(A.mu))]
    if A.labels is not None:
        items.append(("labels", list(A.labels)))
    return items


def _pointed_items(U: PointedSpace) -> list:
    items = [("dim", U.dim), ("unit", _dense(U.unit_vec))]
    if U.labels is not None:
        items.append(("labels", list(U.labels)))
    return items


def kind_name(obj) -> str:
    for cls, name in _KIND_OF:
        if isinstance(obj, cls):
            return name
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _payload(obj) -> list:
    if isinstance(obj, Algebra):
        return _algebra_items(obj)
    if isinstance(obj, CrossedDatum):
        return _algebra_items(obj.H) + [
            ("U", dict(_pointed_items(obj.U))),
            *((k, _sparse(getattr(obj, k))) for k in ("J", "T", "gamma", "eta")),
        ]
    if isinstance(obj, LRTwistData):
        return [("A", dict(_algebra_items(obj.A))), ("B", dict(_algebra_items(obj.B))),
                ("R", _sparse(obj.R)), ("Q", _sparse(obj.Q))]
    if isinstance(obj, MirrorBrzezinskiData):
        return [("W", dict(_pointed_items(obj.W))), ("B", dict(_algebra_items(obj.B))),
                ("P", _sparse(obj.P)), ("nu", _sparse(obj.nu))]
    if isinstance(obj, IteratedData):
        return [("W", dict(_pointed_items(obj.W))), ("V", dict(_pointed_items(obj.V))),
                ("H", dict(_algebra_items(obj.H)))] + [
            (k, _sparse(getattr(obj, k))) for k in ("P", "nu", "R", "sigma", "Q")
        ]
    if isinstance(obj, LRSmashData):
        qb, bm = obj.qb, obj.bm
        return [
            ("H", dict(_algebra_items(qb.H))),
            ("Delta", _sparse(qb.Delta)),
            ("counit", _dense(qb.counit)),
            ("Phi", _sparse(qb.Phi)),
            ("PhiInv", _sparse(qb.PhiInv)),
            ("A", dict(_algebra_items(bm.A))),
            ("left", _sparse(bm.left)),
            ("right", _sparse(bm.right)),
            ("convention", {s: obj.convention[s] for s in ("x", "y", "z")}),
        ]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _render(value, indent: int) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        body = ",\n".join(f"{inner}{json.dumps(k)}: {_render(v, indent + 1)}" for k, v in value.items())
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(value, list) and value and all(isinstance(x, list) for x in value):
        body = ",\n".join(inner + json.dumps(x, ensure_ascii=False) for x in value)
        return "[\n" + body + "\n" + pad + "]"
    return json.dumps(value, ensure_ascii=False)


def serialize_document(obj) -> str:
    """Canonical ``lrx/1`` text for an Algebra, CrossedDatum or specialization data."""
    field = obj.field if isinstance(obj, (Algebra, CrossedDatum)) else _data_field(obj)
    doc = {"format": FORMAT, "field": _field_json(field), "kind": kind_name(obj)}
    doc.update(_payload(obj))
    return _render(doc, 0) + "\n"


def _data_field(obj) -> FieldSpec:
    if isinstance(obj, LRTwistData):
        return obj.A.field
    if isinstance(obj, (MirrorBrzezinskiData, IteratedData)):
        return obj.W.field
    if isinstance(obj, LRSmashData):
        return obj.qb.H.field
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# -- parsing ---------------------------------------------------------------------


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ValueError(f"duplicate key {k!r}")
        out[k] = v
    return out


class _Reader:
    def __init__(self, field: FieldSpec):
        self.field = field

    def obj(self, value, path, required, optional=()):
        if not isinstance(value, dict):
            raise DocumentError(path, "expected an object")
        missing = [k for k in required if k not in value]
        if missing:
            raise DocumentError(path, f"missing field {missing[0]!r}")
        extra = sorted(set(value) - set(required) - set(optional))
        if extra:
            raise DocumentError(f"{path}.{extra[0]}", "unknown field")
        return value

    def dim(self, value, path) -> int:
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise DocumentError(path, f"dimension must be a positive integer, got {value!r}")
        return value

    def scalar(self, value, path):
        if not isinstance(value, str):
            raise DocumentError(path, f"scalars are strings, got {value!r}")
        try:
            return self.field.parse(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(path, str(exc)) from None

    def dense(self, value, path, n) -> Tensor:
        if not isinstance(value, list):
            raise DocumentError(path, "expected a list of scalars")
        if len(value) != n:
            raise DocumentError(path, f"expected {n} coordinates, got {len(value)}")
        return Tensor(self.field, [self.scalar(v, f"{path}[{i}]") for i, v in enumerate(value)])

    def sparse(self, value, path, shape) -> Tensor:
        if not isinstance(value, list):
            raise DocumentError(path, "expected a list of entries")
        entries = {}
        for pos, entry in enumerate(value):
            p = f"{path}[{pos}]"
            if not isinstance(entry, list) or len(entry) != len(shape) + 1:
                raise DocumentError(p, f"entry must be {len(shape)} indices and a scalar")
            *idx, c = entry
            for axis, (i, n) in enumerate(zip(idx, shape)):
                if not isinstance(i, int) or isinstance(i, bool):
                    raise DocumentError(p, f"index {i!r} is not an integer")
                if not 0 <= i < n:
                    raise DocumentError(p, f"index {i} out of range for axis {axis} of size {n}")
            key = tuple(idx)
            if key in entries:
                raise DocumentError(p, f"duplicate entry {list(key)}")
            entries[key] = self.scalar(c, f"{p}[{len(shape)}]")
        return Tensor.from_entries(self.field, shape, entries)

    def labels(self, value, path, n):
        if value is None:
            return None
        if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
            raise DocumentError(path, "labels must be a list of strings")
        if len(value) != n:
            raise DocumentError(path, f"expected {n} labels, got {len(value)}")
        return tuple(value)

    def algebra(self, value, path) -> Algebra:
        v = self.obj(value, path, ("dim", "unit", "mu"), ("labels",))
        return self._algebra_from(v, path)

    def _algebra_from(self, v, path) -> Algebra:
        n = self.dim(v["dim"], f"{path}.dim")
        return Algebra(
            self.sparse(v["mu"], f"{path}.mu", (n, n, n)),
            self.dense(v["unit"], f"{path}.unit", n),
            self.labels(v.get("labels"), f"{path}.labels", n),
        )

    def pointed(self, value, path) -> PointedSpace:
        v = self.obj(value, path, ("dim", "unit"), ("labels",))
        n = self.dim(v["dim"], f"{path}.dim")
        unit = self.dense(v["unit"], f"{path}.unit", n)
        if unit.is_zero():
            raise DocumentError(f"{path}.unit", "the distinguished element 1_U must be nonzero")
        return PointedSpace(unit, self.labels(v.get("labels"), f"{path}.labels", n))


_HEAD = ("format", "field", "kind")
_ALG = ("dim", "unit", "mu")


def _read_crossed(r: _Reader, doc) -> CrossedDatum:
    r.obj(doc, "$", _HEAD + _ALG + ("U", "J", "T", "gamma", "eta"), ("labels",))
    H = r._algebra_from(doc, "$")
    U = r.pointed(doc["U"], "$.U")
    n, m = U.dim, H.dim
    shapes = {"J": (m, n, n, m), "T": (n, m, n, m), "gamma": (n, n, n, n, m), "eta": (n, n, n, m, m)}
    maps = {k: r.sparse(doc[k], f"$.{k}", s) for k, s in shapes.items()}
    return CrossedDatum(H, U, **maps)


def _read_lr_twist(r: _Reader, doc) -> LRTwistData:
    r.obj(doc, "$", _HEAD + ("A", "B", "R", "Q"))
    A, B = r.algebra(doc["A"], "$.A"), r.algebra(doc["B"], "$.B")
    a, b = A.dim, B.dim
    return LRTwistData(A, B, r.sparse(doc["R"], "$.R", (b, a, a, b)), r.sparse(doc["Q"], "$.Q", (a, b, a, b)))


def _read_mirror(r: _Reader, doc) -> MirrorBrzezinskiData:
    r.obj(doc, "$", _HEAD + ("W", "B", "P", "nu"))
    W, B = r.pointed(doc["W"], "$.W"), r.algebra(doc["B"], "$.B")
    w, b = W.dim, B.dim
    return MirrorBrzezinskiData(W, B, r.sparse(doc["P"], "$.P", (b, w, w, b)), r.sparse(doc["nu"], "$.nu", (w, w, w, b)))


def _read_iterated(r: _Reader, doc) -> IteratedData:
    r.obj(doc, "$", _HEAD + ("W", "V", "H", "P", "nu", "R", "sigma", "Q"))
    W, V, H = r.pointed(doc["W"], "$.W"), r.pointed(doc["V"], "$.V"), r.algebra(doc["H"], "$.H")
    w, v, m = W.dim, V.dim, H.dim
    shapes = {"P": (m, w, w, m), "nu": (w, w, w, m), "R": (v, m, v, m), "sigma": (v, v, m, v), "Q": (v, w, w, m, v)}
    return IteratedData(W, V, H, **{k: r.sparse(doc[k], f"$.{k}", s) for k, s in shapes.items()})


def _read_lr_smash(r: _Reader, doc) -> LRSmashData:
    keys = ("H", "Delta", "counit", "Phi", "PhiInv", "A", "left", "right", "convention")
    r.obj(doc, "$", _HEAD + keys)
    H, A = r.algebra(doc["H"], "$.H"), r.algebra(doc["A"], "$.A")
    m, a = H.dim, A.dim
    qb = QuasiBialgebraData(
        H,
        r.sparse(doc["Delta"], "$.Delta", (m, m, m)),
        r.dense(doc["counit"], "$.counit", m),
        r.sparse(doc["Phi"], "$.Phi", (m, m, m)),
        r.sparse(doc["PhiInv"], "$.PhiInv", (m, m, m)),
    )
    bm = BimoduleAlgebraData(A, r.sparse(doc["left"], "$.left", (m, a, a)), r.sparse(doc["right"], "$.right", (a, m, a)))
    conv = r.obj(doc["convention"], "$.convention", ("x", "y", "z"))
    for s in ("x", "y", "z"):
        if conv[s] not in ("inv", "fwd"):
            raise DocumentError(f"$.convention.{s}", f"expected 'inv' or 'fwd', got {conv[s]!r}")
    bad = qb.problems() + bm.problems(H, qb.trivial_phi)
    if bad:
        raise DocumentError("$", "; ".join(bad))
    return LRSmashData(qb, bm, dict(conv))


_READERS = {
    "algebra": lambda r, doc: (r.obj(doc, "$", _HEAD + _ALG, ("labels",)), r._algebra_from(doc, "$"))[1],
    "crossed_datum": _read_crossed,
    "lr_twist": _read_lr_twist,
    "mirror_brz": _read_mirror,
    "iterated": _read_iterated,
    "lr_smash": _read_lr_smash,
}

_KIND_OF = (
    (Algebra, "algebra"),
    (CrossedDatum, "crossed_datum"),
    (LRTwistData, "lr_twist"),
    (MirrorBrzezinskiData, "mirror_brz"),
    (IteratedData, "iterated"),
    (LRSmashData, "lr_smash"),
)


def _read_field(value) -> FieldSpec:
    if not isinstance(value, dict) or "kind" not in value:
        raise DocumentError("$.field", 'expected {"kind": "Q"} or {"kind": "Fp", "p": N}')
    if value["kind"] == "Q" and set(value) == {"kind"}:
        return FieldSpec.rationals()
    if value["kind"] == "Fp" and set(value) == {"kind", "p"}:
        p = value["p"]
        try:
            return FieldSpec.prime(p)
        except ValueError as exc:
            raise DocumentError("$.field.p", str(exc)) from None
    raise DocumentError("$.field", f"unsupported field {value!r}")


def parse_document(text: str, field: FieldSpec | None = None) -> Document:
    """Parse and validate a document; ``field`` overrides the declared field."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc}") from None
    except ValueError as exc:
        raise DocumentError("$", str(exc)) from None
    if not isinstance(doc, dict):
        raise DocumentError("$", "top level must be an object")
    if doc.get("format") != FORMAT:
        raise DocumentError("$.format", f"unsupported format {doc.get('format')!r}, expected {FORMAT!r}")
    for key in _HEAD:
        if key not in doc:
            raise DocumentError("$", f"missing field {key!r}")
    declared = _read_field(doc["field"])
    kind = doc["kind"]
    if kind not in _READERS:
        raise DocumentError("$.kind", f"unknown kind {kind!r}; expected one of {KINDS}")
    r = _Reader(field or declared)
    try:
        obj = _READERS[kind](r, doc)
    except DocumentError:
        raise
    except ValueError as exc:
        raise DocumentError("$", str(exc)) from None
    return Document(r.field, kind, obj)

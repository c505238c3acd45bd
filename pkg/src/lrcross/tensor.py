"""Dense exact tensors and an einsum-style contraction engine.

Tensors hold canonical raw field values (see :mod:`lrcross.scalars`) in a
numpy object array.  Every linear or multilinear map in the library is a
:class:`Tensor` whose leading axes are inputs and trailing axes outputs.

:class:`LinComb` is the evaluation-side companion: a sparse element of a
tensor product of spaces whose legs carry names, so a composite map can be
written as a chain of ``apply`` calls mirroring Sweedler-style formulas.
"""

from __future__ import annotations

import string
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np

from .scalars import FieldMismatchError, FieldSpec, Scalar

__all__ = [
    "ShapeError",
    "Tensor",
    "ContractionSpec",
    "contract",
    "tensor_product",
    "permute",
    "tensors_equal",
    "identity",
    "MapAction",
    "LinComb",
]


class ShapeError(ValueError):
    """Axis lengths or index letters are inconsistent."""


def _check_same_field(tensors: Sequence[Tensor]) -> FieldSpec:
    field = tensors[0].field
    for t in tensors[1:]:
        if t.field != field:
            raise FieldMismatchError(f"{field} vs {t.field}")
    return field


class Tensor:
    """Immutable dense multi-index array over an exact field."""

    __slots__ = ("field", "_data", "_actions")

    def __init__(self, field: FieldSpec, data: np.ndarray):
        data = np.asarray(data, dtype=object)
        if any(n <= 0 for n in data.shape):
            raise ShapeError(f"axis lengths must be positive, got {data.shape}")
        data = data.copy()
        data.flags.writeable = False
        self.field = field
        self._data = data
        self._actions = {}

    # -- construction -----------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, shape: Sequence[int]) -> Tensor:
        data = np.empty(tuple(shape), dtype=object)
        data.fill(field.zero)
        return cls(field, data)

    @classmethod
    def from_nested(cls, field: FieldSpec, nested) -> Tensor:
        """Build from nested lists of ints, Fractions, strings or Scalars."""
        arr = np.array(nested, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for idx in np.ndindex(arr.shape):
            out[idx] = field.coerce(arr[idx])
        return cls(field, out)

    @classmethod
    def from_entries(cls, field: FieldSpec, shape: Sequence[int], entries) -> Tensor:
        """Build from ``(index_tuple, value)`` pairs; unspecified entries are zero.

        Repeated indices are summed.
        """
        data = np.empty(tuple(shape), dtype=object)
        data.fill(field.zero)
        items = entries.items() if isinstance(entries, dict) else entries
        for idx, value in items:
            idx = tuple(idx)
            if len(idx) != data.ndim or any(not 0 <= i < n for i, n in zip(idx, data.shape)):
                raise ShapeError(f"index {idx} out of range for shape {tuple(shape)}")
            data[idx] = field.add(data[idx], field.coerce(value))
        return cls(field, data)

    @classmethod
    def basis_vector(cls, field: FieldSpec, dim: int, i: int) -> Tensor:
        return cls.from_entries(field, (dim,), {(i,): 1})

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, ...]:
        return self._data.shape

    @property
    def rank(self) -> int:
        return self._data.ndim

    @property
    def size(self) -> int:
        return self._data.size

    @property
    def data(self) -> np.ndarray:
        """Read-only view of the raw entries."""
        return self._data

    def __getitem__(self, idx):
        return self._data[idx]

    def scalar(self, idx=()) -> Scalar:
        return Scalar(self.field, self._data[tuple(idx)])

    def nonzero(self):
        """Yield ``(index, value)`` for nonzero entries in row-major order."""
        if self.rank == 0:
            v = self._data[()]
            if v != 0:
                yield (), v
            return
        for idx in zip(*np.nonzero(self._data != 0)):
            idx = tuple(int(i) for i in idx)
            yield idx, self._data[idx]

    def to_nested(self) -> list:
        return self._data.tolist()

    def is_zero(self) -> bool:
        return not bool(np.any(self._data != 0))

    def reshape(self, shape: Sequence[int]) -> Tensor:
        shape = tuple(shape)
        if int(np.prod(shape, dtype=np.int64)) != self.size:
            raise ShapeError(f"cannot reshape {self.shape} to {shape}")
        return Tensor(self.field, self._data.reshape(shape))

    def with_entry(self, idx, value) -> Tensor:
        """Copy with one entry replaced."""
        data = self._data.copy()
        data[tuple(idx)] = self.field.coerce(value)
        return Tensor(self.field, data)

    def convert(self, field: FieldSpec) -> Tensor:
        """Reinterpret entries in another field (rationals map into F_p)."""
        if field == self.field:
            return self
        out = np.empty(self.shape, dtype=object)
        for idx in np.ndindex(self.shape):
            out[idx] = field.coerce(self._data[idx])
        return Tensor(field, out)

    def action(self, n_in: int) -> MapAction:
        """Sparse action of this tensor read as a map from its first ``n_in`` axes."""
        act = self._actions.get(n_in)
        if act is None:
            if not 0 <= n_in <= self.rank:
                raise ShapeError(f"cannot split rank {self.rank} after {n_in} axes")
            table: dict[tuple, list] = {}
            for idx, v in self.nonzero():
                table.setdefault(idx[:n_in], []).append((idx[n_in:], v))
            act = MapAction(n_in, self.rank - n_in, {k: tuple(v) for k, v in table.items()})
            self._actions[n_in] = act
        return act

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return tensors_equal(self, other)[0]

    __hash__ = None

    def __repr__(self):
        body = np.vectorize(self.field.format, otypes=[object])(self._data) if self.size else []
        return f"Tensor({self.field}, shape={self.shape}, {np.asarray(body).tolist()})"


def identity(field: FieldSpec, n: int) -> Tensor:
    return Tensor.from_entries(field, (n, n), {(i, i): 1 for i in range(n)})


# -- contraction ---------------------------------------------------------------


@dataclass(frozen=True)
class ContractionSpec:
    """Parsed ``"ij,jk->ik"`` style contraction."""

    inputs: tuple[str, ...]
    output: str

    @classmethod
    def parse(cls, text: str) -> ContractionSpec:
        if "->" not in text:
            raise ShapeError(f"contraction {text!r} lacks '->'")
        lhs, out = text.replace(" ", "").split("->")
        inputs = tuple(lhs.split(","))
        for s in inputs + (out,):
            if any(c not in string.ascii_letters for c in s):
                raise ShapeError(f"index strings must be letters: {text!r}")
        seen = set("".join(inputs))
        if len(set(out)) != len(out):
            raise ShapeError(f"repeated output letter in {text!r}")
        missing = set(out) - seen
        if missing:
            raise ShapeError(f"output letters {sorted(missing)} not among inputs")
        return cls(inputs, out)

    def __str__(self):
        return ",".join(self.inputs) + "->" + self.output


def _letter_dims(spec: ContractionSpec, operands: Sequence[Tensor]) -> dict[str, int]:
    if len(spec.inputs) != len(operands):
        raise ShapeError(f"{spec} expects {len(spec.inputs)} operands, got {len(operands)}")
    dims: dict[str, int] = {}
    for letters, t in zip(spec.inputs, operands):
        if len(letters) != t.rank:
            raise ShapeError(f"index string {letters!r} does not match rank {t.rank}")
        for c, n in zip(letters, t.shape):
            if dims.setdefault(c, n) != n:
                raise ShapeError(f"letter {c!r} bound to lengths {dims[c]} and {n}")
    return dims


def contract(spec: ContractionSpec | str, *operands: Tensor) -> Tensor:
    """Exact sum-of-products contraction, einsum semantics.

    Operands are joined left to right over their nonzero entries; a letter is
    summed out as soon as no later operand and not the output needs it.

    >>> from lrcross.scalars import QQ
    >>> a = Tensor.from_nested(QQ, [[1, 2], [3, 4]])
    >>> v = Tensor.from_nested(QQ, [1, 1])
    >>> contract("ij,j->i", a, v).to_nested()
    [Fraction(3, 1), Fraction(7, 1)]
    """
    if isinstance(spec, str):
        spec = ContractionSpec.parse(spec)
    if not operands:
        raise ShapeError("contract needs at least one operand")
    field = _check_same_field(operands)
    dims = _letter_dims(spec, operands)
    add, mul, zero = field.add, field.mul, field.zero

    live: list[str] = []
    state: dict[tuple, object] = {(): field.one}
    for k, (letters, t) in enumerate(zip(spec.inputs, operands)):
        uniq = list(dict.fromkeys(letters))
        first_pos = [letters.index(c) for c in uniq]
        bound = [c for c in uniq if c in live]
        fresh = [c for c in uniq if c not in live]
        later = set("".join(spec.inputs[k + 1:])) | set(spec.output)
        keep = [c for c in live + fresh if c in later]

        groups: dict[tuple, list] = {}
        for idx, v in t.nonzero():
            # repeated letters within one operand select a diagonal
            if any(idx[i] != idx[first_pos[uniq.index(c)]] for i, c in enumerate(letters)):
                continue
            val = dict(zip(uniq, (idx[p] for p in first_pos)))
            groups.setdefault(tuple(val[c] for c in bound), []).append(
                (tuple(val[c] for c in fresh), v)
            )

        live_pos = {c: i for i, c in enumerate(live)}
        acc: dict[tuple, object] = {}
        for key, coef in state.items():
            hits = groups.get(tuple(key[live_pos[c]] for c in bound))
            if not hits:
                continue
            for fvals, v in hits:
                binding = dict(zip(live, key))
                binding.update(zip(fresh, fvals))
                out = tuple(binding[c] for c in keep)
                acc[out] = add(acc.get(out, zero), mul(coef, v))
        state = {key: v for key, v in acc.items() if v != 0}
        live = keep

    order = [live.index(c) for c in spec.output]
    data = np.empty(tuple(dims[c] for c in spec.output), dtype=object)
    data.fill(zero)
    for key, v in state.items():
        data[tuple(key[i] for i in order)] = v
    return Tensor(field, data)


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    """Outer product; the result's shape is ``a.shape + b.shape``."""
    letters = string.ascii_letters
    if a.rank + b.rank > len(letters):
        raise ShapeError("rank too large for tensor_product")
    la, lb = letters[: a.rank], letters[a.rank : a.rank + b.rank]
    return contract(f"{la},{lb}->{la}{lb}", a, b)


def permute(t: Tensor, perm: Sequence[int]) -> Tensor:
    """Reorder axes: output axis ``k`` is input axis ``perm[k]``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(t.rank)):
        raise ShapeError(f"{perm} is not a permutation of 0..{t.rank - 1}")
    return Tensor(t.field, np.transpose(t.data, perm))


def tensors_equal(a: Tensor, b: Tensor) -> tuple[bool, tuple[int, ...] | None]:
    """Exact comparison; on mismatch also the lexicographically first differing index."""
    if a.shape != b.shape or a.field != b.field:
        return False, None
    if a.rank == 0:
        return (True, None) if a[()] == b[()] else (False, ())
    diff = np.argwhere(a.data != b.data)
    if len(diff) == 0:
        return True, None
    return False, tuple(int(i) for i in diff[0])


# -- sparse evaluation ---------------------------------------------------------


@dataclass(frozen=True)
class MapAction:
    """Sparse table of a linear map: input basis tuple -> ((output tuple, coef), ...)."""

    n_in: int
    n_out: int
    table: dict


class LinComb:
    """Sparse element of a tensor product of spaces with named legs.

    ``terms`` maps a basis index tuple (one index per leg, in ``legs`` order)
    to a nonzero raw coefficient.
    """

    __slots__ = ("field", "legs", "terms")

    def __init__(self, field: FieldSpec, legs: Sequence[str], terms: dict):
        self.field = field
        self.legs = tuple(legs)
        self.terms = terms

    @classmethod
    def basis(cls, field: FieldSpec, legs: Sequence[str], idx: Sequence[int]) -> LinComb:
        return cls(field, legs, {tuple(idx): field.one})

    @classmethod
    def from_tensor(cls, legs: Sequence[str], t: Tensor) -> LinComb:
        if len(legs) != t.rank:
            raise ShapeError(f"{len(legs)} leg names for rank-{t.rank} tensor")
        return cls(t.field, legs, dict(t.nonzero()))

    def join(self, other: LinComb) -> LinComb:
        """Tensor product; leg names must be disjoint."""
        if set(self.legs) & set(other.legs):
            raise ValueError(f"leg names clash: {set(self.legs) & set(other.legs)}")
        f = self.field
        terms = {
            k1 + k2: f.mul(c1, c2)
            for k1, c1 in self.terms.items()
            for k2, c2 in other.terms.items()
        }
        return LinComb(f, self.legs + other.legs, terms)

    def apply(self, act: MapAction, inputs: Sequence[str], outputs: Sequence[str]) -> LinComb:
        """Feed legs ``inputs`` to the map; its output legs are appended as ``outputs``."""
        if len(inputs) != act.n_in or len(outputs) != act.n_out:
            raise ShapeError(
                f"map takes {act.n_in} -> {act.n_out} legs, got {len(inputs)} -> {len(outputs)}"
            )
        pos = [self.legs.index(name) for name in inputs]
        rest = [i for i in range(len(self.legs)) if i not in pos]
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        acc: dict[tuple, object] = {}
        table = act.table
        for key, c in self.terms.items():
            images = table.get(tuple(key[p] for p in pos))
            if not images:
                continue
            base = tuple(key[i] for i in rest)
            for out, v in images:
                nk = base + out
                acc[nk] = add(acc.get(nk, zero), mul(c, v))
        legs = tuple(self.legs[i] for i in rest) + tuple(outputs)
        return LinComb(f, legs, {k: v for k, v in acc.items() if v != 0})

    def arrange(self, *legs: str) -> LinComb:
        """Reorder legs; every current leg must be named exactly once."""
        if sorted(legs) != sorted(self.legs):
            raise ValueError(f"arrange({legs}) does not match legs {self.legs}")
        pos = [self.legs.index(name) for name in legs]
        return LinComb(
            self.field, legs, {tuple(k[p] for p in pos): v for k, v in self.terms.items()}
        )

    def split(self, leg: str, names: Sequence[str], dims: Sequence[int]) -> LinComb:
        """Unflatten one leg row-major into several."""
        i = self.legs.index(leg)
        terms = {}
        for k, v in self.terms.items():
            parts = np.unravel_index(k[i], tuple(dims))
            terms[k[:i] + tuple(int(p) for p in parts) + k[i + 1:]] = v
        return LinComb(self.field, self.legs[:i] + tuple(names) + self.legs[i + 1:], terms)

    def merge(self, names: Sequence[str], leg: str, dims: Sequence[int]) -> LinComb:
        """Flatten consecutive legs ``names`` row-major into a single leg."""
        i = self.legs.index(names[0])
        if self.legs[i : i + len(names)] != tuple(names):
            raise ValueError(f"legs {names} are not consecutive in {self.legs}")
        terms = {}
        for k, v in self.terms.items():
            flat = int(np.ravel_multi_index(k[i : i + len(names)], tuple(dims)))
            terms[k[:i] + (flat,) + k[i + len(names):]] = v
        return LinComb(self.field, self.legs[:i] + (leg,) + self.legs[i + len(names):], terms)

    def scale(self, c) -> LinComb:
        c = self.field.coerce(c)
        if c == 0:
            return LinComb(self.field, self.legs, {})
        return LinComb(self.field, self.legs, {k: self.field.mul(v, c) for k, v in self.terms.items()})

    def to_tensor(self, shape: Sequence[int]) -> Tensor:
        return Tensor.from_entries(self.field, shape, self.terms)

    def same_terms(self, other: LinComb) -> bool:
        """Positional equality (leg names ignored)."""
        return self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"{self.field.format(v)}*{k}" for k, v in sorted(self.terms.items()))
        return f"LinComb({self.legs}: {body or '0'})"


def basis_tuples(dims: Iterable[int]):
    """All index tuples over ``dims`` in lexicographic order."""
    return product(*(range(n) for n in dims))

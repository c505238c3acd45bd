"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from itertools import product

from .scalars import QQ, FieldMismatchError, FieldSpec
from .tensor import ShapeError, Tensor, contract, identity, tensor_product

__all__ = [
    "Algebra",
    "Failure",
    "ValidationReport",
    "NotAGroupError",
    "InvalidAlgebraError",
    "validate_algebra",
    "multiply",
    "group_algebra",
    "builtin_algebra",
    "tensor_product_algebra",
    "BUILTIN_ALGEBRAS",
]


class NotAGroupError(ValueError):
    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class InvalidAlgebraError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(f"not an associative unital algebra: {report.failures[0]}")
        self.report = report


@dataclass(frozen=True, eq=False)
class Algebra:
    """Structure constants ``mu[i, j, k]``: coefficient of ``e_k`` in ``e_i e_j``.

    Construction only checks shapes; use :func:`validate_algebra` to certify
    the associativity and unit laws.
    """

    mu: Tensor
    unit: Tensor
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.mu.shape[0] if self.mu.rank else 0
        if self.mu.shape != (n, n, n):
            raise ShapeError(f"structure constants must have shape (n, n, n), got {self.mu.shape}")
        if self.unit.shape != (n,):
            raise ShapeError(f"unit must have shape ({n},), got {self.unit.shape}")
        if self.unit.field != self.mu.field:
            raise FieldMismatchError(f"{self.mu.field} vs {self.unit.field}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != n:
                raise ShapeError(f"{len(self.labels)} labels for dimension {n}")

    @property
    def dim(self) -> int:
        return self.mu.shape[0]

    @property
    def field(self) -> FieldSpec:
        return self.mu.field

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def basis(self, i: int) -> Tensor:
        return Tensor.basis_vector(self.field, self.dim, i)

    def element(self, coords) -> Tensor:
        t = Tensor.from_nested(self.field, list(coords))
        if t.shape != (self.dim,):
            raise ShapeError(f"expected {self.dim} coordinates, got {t.shape}")
        return t

    def mul(self, x: Tensor, y: Tensor) -> Tensor:
        return multiply(self, x, y)

    def convert(self, field: FieldSpec) -> Algebra:
        return Algebra(self.mu.convert(field), self.unit.convert(field), self.labels)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.mu == other.mu and self.unit == other.unit and self.labels == other.labels

    __hash__ = None


@dataclass(frozen=True)
class Failure:
    law: str  # "assoc", "left_unit" or "right_unit"
    witness: tuple[int, ...]
    lhs: Tensor
    rhs: Tensor

    def __str__(self):
        return f"{self.law} fails at basis {self.witness}"


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[Failure, ...] = dc_field(default_factory=tuple)
    triples_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def _row_failures(law, lhs: Tensor, rhs: Tensor, lead: int, all_witnesses: bool):
    """Compare tensors whose first ``lead`` axes index basis inputs."""
    out = []
    diff = lhs.data != rhs.data
    shape = lhs.shape[:lead]
    for idx in product(*(range(n) for n in shape)):
        if diff[idx].any():
            out.append(Failure(law, idx, Tensor(lhs.field, lhs.data[idx]), Tensor(rhs.field, rhs.data[idx])))
            if not all_witnesses:
                break
    return out


def validate_algebra(A: Algebra, all_witnesses: bool = False) -> ValidationReport:
    """Exhaustively check associativity on all basis triples and both unit laws.

    At most one witness per law is reported unless ``all_witnesses`` is set;
    witnesses are lexicographically first.
    """
    mu, u, n = A.mu, A.unit, A.dim
    lhs = contract("ijm,mkn->ijkn", mu, mu)
    rhs = contract("jkm,imn->ijkn", mu, mu)
    failures = _row_failures("assoc", lhs, rhs, 3, all_witnesses)
    eye = identity(A.field, n)
    failures += _row_failures("left_unit", contract("i,ijk->jk", u, mu), eye, 1, all_witnesses)
    failures += _row_failures("right_unit", contract("j,ijk->ik", u, mu), eye, 1, all_witnesses)
    return ValidationReport(tuple(failures), n ** 3)


def multiply(A: Algebra, x: Tensor, y: Tensor) -> Tensor:
    """Bilinear extension of the structure constants."""
    if x.shape != (A.dim,) or y.shape != (A.dim,):
        raise ShapeError(f"elements of a {A.dim}-dimensional algebra expected")
    return contract("i,j,ijk->k", x, y, A.mu)


def _certified(A: Algebra) -> Algebra:
    report = validate_algebra(A)
    if not report.ok:
        raise InvalidAlgebraError(report)
    return A


def group_algebra(cayley, identity_index: int, field: FieldSpec = QQ, labels=None) -> Algebra:
    """Group algebra from a Cayley table of element indices.

    The table is checked to be a group: closure, identity, inverses and
    associativity; failures raise :class:`NotAGroupError` with a witness.
    """
    table = [list(row) for row in cayley]
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise NotAGroupError("Cayley table must be square and nonempty")
    for i, j in product(range(n), repeat=2):
        if not (isinstance(table[i][j], int) and 0 <= table[i][j] < n):
            raise NotAGroupError(f"entry ({i}, {j}) = {table[i][j]!r} is not an element index", (i, j))
    e = identity_index
    if not 0 <= e < n:
        raise NotAGroupError(f"identity index {e} out of range")
    for i in range(n):
        if table[e][i] != i or table[i][e] != i:
            raise NotAGroupError(f"{e} is not an identity: fails at {i}", (i,))
    for i, j, k in product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise NotAGroupError(f"table is not associative at {(i, j, k)}", (i, j, k))
    for i in range(n):
        if not any(table[i][j] == e and table[j][i] == e for j in range(n)):
            raise NotAGroupError(f"element {i} has no inverse", (i,))
    mu = Tensor.from_entries(field, (n, n, n), {(i, j, table[i][j]): 1 for i, j in product(range(n), repeat=2)})
    return _certified(Algebra(mu, Tensor.basis_vector(field, n, e), labels))


def _cyclic(n: int, field: FieldSpec) -> Algebra:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1"] + ["g" if k == 1 else f"g^{k}" for k in range(1, n)]
    return group_algebra(table, 0, field, labels)


def _sweedler(field: FieldSpec) -> Algebra:
    if field.characteristic == 2:
        raise ValueError("sweedler4 needs -1 != 1; characteristic 2 is excluded")
    # basis g^a x^b at index 2b + a: 1, g, x, gx; x g = -g x
    entries = {}
    for (a, b), (c, d) in product(product(range(2), repeat=2), repeat=2):
        if b + d > 1:
            continue
        sign = -1 if b * c else 1
        entries[(2 * b + a, 2 * d + c, 2 * (b + d) + (a + c) % 2)] = sign
    mu = Tensor.from_entries(field, (4, 4, 4), entries)
    return _certified(Algebra(mu, Tensor.basis_vector(field, 4, 0), ("1", "g", "x", "gx")))


def _mat2(field: FieldSpec) -> Algebra:
    # e_{ab} at index 2a + b; e_{ab} e_{cd} = [b == c] e_{ad}
    entries = {
        (2 * a + b, 2 * b + d, 2 * a + d): 1 for a, b, d in product(range(2), repeat=3)
    }
    mu = Tensor.from_entries(field, (4, 4, 4), entries)
    unit = Tensor.from_nested(field, [1, 0, 0, 1])
    return _certified(Algebra(mu, unit, ("e11", "e12", "e21", "e22")))


BUILTIN_ALGEBRAS = ("field", "dual_numbers", "mat2", "cyclic:n", "sweedler4")


def builtin_algebra(name: str, field: FieldSpec = QQ) -> Algebra:
    """One of ``field``, ``dual_numbers``, ``mat2``, ``cyclic:n``, ``sweedler4``."""
    if name == "field":
        return _certified(Algebra(Tensor.from_nested(field, [[[1]]]), Tensor.from_nested(field, [1]), ("1",)))
    if name == "dual_numbers":
        mu = Tensor.from_entries(field, (2, 2, 2), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1})
        return _certified(Algebra(mu, Tensor.basis_vector(field, 2, 0), ("1", "x")))
    if name == "mat2":
        return _mat2(field)
    if name == "sweedler4":
        return _sweedler(field)
    m = re.fullmatch(r"cyclic:(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return _cyclic(int(m.group(1)), field)
    raise ValueError(f"unknown builtin algebra {name!r}; choose from {BUILTIN_ALGEBRAS}")


def tensor_product_algebra(A: Algebra, B: Algebra) -> Algebra:
    """Componentwise product on A ⊗ B; basis (i, a) sits at index ``i * dim B + a``."""
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")
    n = A.dim * B.dim
    mu = contract("ijk,abc->iajbkc", A.mu, B.mu).reshape((n, n, n))
    unit = tensor_product(A.unit, B.unit).reshape((n,))
    labels = tuple(f"{A.label(i)}⊗{B.label(a)}" for i in range(A.dim) for a in range(B.dim))
    return _certified(Algebra(mu, unit, labels))

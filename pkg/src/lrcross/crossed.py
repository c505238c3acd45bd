"""L-R-crossed products U ⊗ H built from maps (J, T, gamma, eta).

Tensor layouts (inputs first, then outputs; n = dim U, m = dim H):

* ``J``     (m, n, n, m):    h ⊗ u       -> u_J ⊗ h_J
* ``T``     (n, m, n, m):    u ⊗ h       -> u_T ⊗ h_T
* ``gamma`` (n, n, n, n, m): u ⊗ u'      -> gamma1 ⊗ gamma2 ⊗ gamma3
* ``eta``   (n, n, n, m, m): u ⊗ u'      -> eta1 ⊗ eta2 ⊗ eta3

The thirteen sufficient conditions carry the labels lrc1..lrc6, lrc9..lrc15
and integer ids 1..13 in that order.  Each side of each condition is
evaluated on every basis tuple of its input space by pushing a sparse
element through the maps, in lexicographic order, so the first failure
found is the lexicographically first witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .algebra import Algebra, validate_algebra
from .scalars import FieldMismatchError, FieldSpec
from .tensor import LinComb, ShapeError, Tensor, basis_tuples, tensor_product, tensors_equal

__all__ = [
    "PointedSpace",
    "CrossedDatum",
    "Witness",
    "AxiomResult",
    "AxiomReport",
    "AxiomFailure",
    "AXIOM_LABELS",
    "axiom_id",
    "check_axiom",
    "check_all",
    "first_failure",
    "build_crossed_product",
    "crossed_multiply",
    "check_reduced_products",
]


@dataclass(frozen=True, eq=False)
class PointedSpace:
    """A vector space with a distinguished nonzero vector ``1_U``."""

    unit_vec: Tensor
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.unit_vec.rank != 1:
            raise ShapeError(f"unit vector must be rank 1, got shape {self.unit_vec.shape}")
        if self.unit_vec.is_zero():
            raise ValueError("the distinguished element 1_U must be nonzero")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.dim:
                raise ShapeError(f"{len(self.labels)} labels for dimension {self.dim}")

    @classmethod
    def of_algebra(cls, A: Algebra) -> PointedSpace:
        return cls(A.unit, A.labels)

    @property
    def dim(self) -> int:
        return self.unit_vec.shape[0]

    @property
    def field(self) -> FieldSpec:
        return self.unit_vec.field

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"u{i}"

    def convert(self, field: FieldSpec) -> PointedSpace:
        return PointedSpace(self.unit_vec.convert(field), self.labels)

    def __eq__(self, other):
        if not isinstance(other, PointedSpace):
            return NotImplemented
        return self.unit_vec == other.unit_vec and self.labels == other.labels

    __hash__ = None


@dataclass(frozen=True, eq=False)
class CrossedDatum:
    H: Algebra
    U: PointedSpace
    J: Tensor
    T: Tensor
    gamma: Tensor
    eta: Tensor

    def __post_init__(self):
        n, m = self.U.dim, self.H.dim
        expected = {
            "J": (m, n, n, m),
            "T": (n, m, n, m),
            "gamma": (n, n, n, n, m),
            "eta": (n, n, n, m, m),
        }
        for name, shape in expected.items():
            t = getattr(self, name)
            if t.shape != shape:
                raise ShapeError(f"{name} must have shape {shape}, got {t.shape}")
            if t.field != self.H.field:
                raise FieldMismatchError(f"{name} is over {t.field}, H over {self.H.field}")
        if self.U.field != self.H.field:
            raise FieldMismatchError(f"U is over {self.U.field}, H over {self.H.field}")

    @property
    def field(self) -> FieldSpec:
        return self.H.field

    @property
    def dims(self) -> tuple[int, int]:
        return self.U.dim, self.H.dim

    def replace(self, **changes) -> CrossedDatum:
        kw = {k: getattr(self, k) for k in ("H", "U", "J", "T", "gamma", "eta")}
        kw.update(changes)
        return CrossedDatum(**kw)

    def convert(self, field: FieldSpec) -> CrossedDatum:
        return CrossedDatum(
            self.H.convert(field), self.U.convert(field),
            *(getattr(self, k).convert(field) for k in ("J", "T", "gamma", "eta")),
        )

    def __eq__(self, other):
        if not isinstance(other, CrossedDatum):
            return NotImplemented
        return all(getattr(self, k) == getattr(other, k) for k in ("H", "U", "J", "T", "gamma", "eta"))

    __hash__ = None


class _Maps:
    """Sparse actions of a datum's maps, shared by all evaluations."""

    def __init__(self, d: CrossedDatum):
        self.field = d.field
        self.J = d.J.action(2)
        self.T = d.T.action(2)
        self.G = d.gamma.action(2)
        self.E = d.eta.action(2)
        self.M = d.H.mu.action(2)
        self.one_U = d.U.unit_vec
        self.one_H = d.H.unit

    def basis(self, legs, idx) -> LinComb:
        return LinComb.basis(self.field, legs, idx)

    def unit_U(self, leg) -> LinComb:
        return LinComb.from_tensor((leg,), self.one_U)

    def unit_H(self, leg) -> LinComb:
        return LinComb.from_tensor((leg,), self.one_H)


# -- the conditions ------------------------------------------------------------
# Leg names: u, v, w stand for u, u', u''; h, k for h, h'.  Maps append their
# output legs; ``arrange`` fixes the output order of each side.


def _lrc1a(M, h):
    lhs = M.basis("h", (h,)).join(M.unit_U("u")).apply(M.J, ("h", "u"), ("uJ", "hJ"))
    rhs = M.unit_U("u").join(M.basis("h", (h,)))
    return lhs, rhs


def _lrc1b(M, u):
    lhs = M.unit_H("h").join(M.basis("u", (u,))).apply(M.J, ("h", "u"), ("uJ", "hJ"))
    rhs = M.basis("u", (u,)).join(M.unit_H("h"))
    return lhs, rhs


def _lrc2a(M, u):
    lhs = M.basis("u", (u,)).join(M.unit_H("h")).apply(M.T, ("u", "h"), ("uT", "hT"))
    rhs = M.basis("u", (u,)).join(M.unit_H("h"))
    return lhs, rhs


def _lrc2b(M, h):
    lhs = M.unit_U("u").join(M.basis("h", (h,))).apply(M.T, ("u", "h"), ("uT", "hT"))
    rhs = M.unit_U("u").join(M.basis("h", (h,)))
    return lhs, rhs


def _lrc3a(M, u):
    lhs = M.basis("u", (u,)).join(M.unit_U("v")).apply(M.G, ("u", "v"), ("g1", "g2", "g3"))
    rhs = M.basis("u", (u,)).join(M.unit_U("v")).join(M.unit_H("h"))
    return lhs, rhs


def _lrc3b(M, u):
    lhs = M.unit_U("v").join(M.basis("u", (u,))).apply(M.G, ("v", "u"), ("g1", "g2", "g3"))
    rhs = M.unit_U("v").join(M.basis("u", (u,))).join(M.unit_H("h"))
    return lhs, rhs


def _lrc4a(M, u):
    lhs = M.basis("u", (u,)).join(M.unit_U("v")).apply(M.E, ("u", "v"), ("e1", "e2", "e3"))
    rhs = M.basis("u", (u,)).join(M.unit_H("h")).join(M.unit_H("k"))
    return lhs, rhs


def _lrc4b(M, u):
    lhs = M.unit_U("v").join(M.basis("u", (u,))).apply(M.E, ("v", "u"), ("e1", "e2", "e3"))
    rhs = M.basis("u", (u,)).join(M.unit_H("h")).join(M.unit_H("k"))
    return lhs, rhs


def _lrc5(M, h, k, u):
    # u_J ⊗ (hh')_J = (u_J)_j ⊗ h_j h'_J
    x = M.basis(("h", "k", "u"), (h, k, u))
    lhs = x.apply(M.M, ("h", "k"), ("hk",)).apply(M.J, ("hk", "u"), ("uJ", "hkJ"))
    rhs = (
        x.apply(M.J, ("k", "u"), ("uJ", "kJ"))
        .apply(M.J, ("h", "uJ"), ("uJj", "hj"))
        .apply(M.M, ("hj", "kJ"), ("p",))
        .arrange("uJj", "p")
    )
    return lhs, rhs


def _lrc6(M, u, h, k):
    # u_T ⊗ (hh')_T = (u_T)_t ⊗ h_T h'_t
    x = M.basis(("u", "h", "k"), (u, h, k))
    lhs = x.apply(M.M, ("h", "k"), ("hk",)).apply(M.T, ("u", "hk"), ("uT", "hkT"))
    rhs = (
        x.apply(M.T, ("u", "h"), ("uT", "hT"))
        .apply(M.T, ("uT", "k"), ("uTt", "kt"))
        .apply(M.M, ("hT", "kt"), ("p",))
        .arrange("uTt", "p")
    )
    return lhs, rhs


def _lrc9(M, h, u, v):
    # eta(u_J, u'_j) with (h_J)_j multiplied after eta2  =  eta1(u,u')_J ⊗ h_J eta2 ⊗ eta3
    x = M.basis(("h", "u", "v"), (h, u, v))
    lhs = (
        x.apply(M.J, ("h", "u"), ("uJ", "hJ"))
        .apply(M.J, ("hJ", "v"), ("vj", "hJj"))
        .apply(M.E, ("uJ", "vj"), ("e1", "e2", "e3"))
        .apply(M.M, ("e2", "hJj"), ("p",))
        .arrange("e1", "p", "e3")
    )
    rhs = (
        x.apply(M.E, ("u", "v"), ("e1", "e2", "e3"))
        .apply(M.J, ("h", "e1"), ("e1J", "hJ"))
        .apply(M.M, ("hJ", "e2"), ("p",))
        .arrange("e1J", "p", "e3")
    )
    return lhs, rhs


def _lrc10(M, u, v, h):
    x = M.basis(("u", "v", "h"), (u, v, h))
    lhs = (
        x.apply(M.T, ("v", "h"), ("vT", "hT"))
        .apply(M.T, ("u", "hT"), ("ut", "hTt"))
        .apply(M.E, ("ut", "vT"), ("e1", "e2", "e3"))
        .apply(M.M, ("hTt", "e3"), ("p",))
        .arrange("e1", "e2", "p")
    )
    rhs = (
        x.apply(M.E, ("u", "v"), ("e1", "e2", "e3"))
        .apply(M.T, ("e1", "h"), ("e1T", "hT"))
        .apply(M.M, ("e3", "hT"), ("p",))
        .arrange("e1T", "e2", "p")
    )
    return lhs, rhs


def _lrc11(M, u, v, w):
    x = M.basis(("u", "v", "w"), (u, v, w))
    # a = eta(u, u'); b = eta(a1, u''_J) with J fed a2 ⊗ u''
    lhs = (
        x.apply(M.E, ("u", "v"), ("a1", "a2", "a3"))
        .apply(M.J, ("a2", "w"), ("wJ", "a2J"))
        .apply(M.E, ("a1", "wJ"), ("b1", "b2", "b3"))
        .apply(M.M, ("b2", "a2J"), ("p",))
        .apply(M.M, ("a3", "b3"), ("q",))
        .arrange("b1", "p", "q")
    )
    # c = eta(u', u''); d = eta(u_T, c1) with T fed u ⊗ c3
    rhs = (
        x.apply(M.E, ("v", "w"), ("c1", "c2", "c3"))
        .apply(M.T, ("u", "c3"), ("uT", "c3T"))
        .apply(M.E, ("uT", "c1"), ("d1", "d2", "d3"))
        .apply(M.M, ("d2", "c2"), ("p",))
        .apply(M.M, ("c3T", "d3"), ("q",))
        .arrange("d1", "p", "q")
    )
    return lhs, rhs


def _lrc12(M, u, h, v):
    x = M.basis(("u", "h", "v"), (u, h, v))
    lhs = (
        x.apply(M.J, ("h", "v"), ("vJ", "hJ"))
        .apply(M.G, ("u", "vJ"), ("g1", "g2", "g3"))
        .apply(M.T, ("g1", "hJ"), ("g1T", "hJT"))
        .apply(M.M, ("g3", "hJT"), ("p",))
        .arrange("g1T", "g2", "p")
    )
    rhs = (
        x.apply(M.T, ("u", "h"), ("uT", "hT"))
        .apply(M.G, ("uT", "v"), ("g1", "g2", "g3"))
        .apply(M.J, ("hT", "g2"), ("g2J", "hTJ"))
        .apply(M.M, ("hTJ", "g3"), ("p",))
        .arrange("g1", "g2J", "p")
    )
    return lhs, rhs


def _lrc13(M, u, v, w):
    x = M.basis(("u", "v", "w"), (u, v, w))
    # e = eta(u', u''); g = gamma(u, e1); T fed g1 ⊗ e2
    lhs = (
        x.apply(M.E, ("v", "w"), ("e1", "e2", "e3"))
        .apply(M.G, ("u", "e1"), ("g1", "g2", "g3"))
        .apply(M.T, ("g1", "e2"), ("g1T", "e2T"))
        .apply(M.M, ("g3", "e2T"), ("p",))
        .arrange("g1T", "g2", "p", "e3")
    )
    # a = gamma(u, u'); b = gamma(a1, u''); J fed a3 ⊗ b2; c = eta(a2, b2_J)
    rhs = (
        x.apply(M.G, ("u", "v"), ("a1", "a2", "a3"))
        .apply(M.G, ("a1", "w"), ("b1", "b2", "b3"))
        .apply(M.J, ("a3", "b2"), ("b2J", "a3J"))
        .apply(M.E, ("a2", "b2J"), ("c1", "c2", "c3"))
        .apply(M.M, ("c2", "a3J"), ("p",))
        .apply(M.M, ("p", "b3"), ("q",))
        .arrange("b1", "c1", "q", "c3")
    )
    return lhs, rhs


def _lrc14(M, u, v, w):
    x = M.basis(("u", "v", "w"), (u, v, w))
    # e = eta(u, u'); g = gamma(e1, u''); J fed e3 ⊗ g2
    lhs = (
        x.apply(M.E, ("u", "v"), ("e1", "e2", "e3"))
        .apply(M.G, ("e1", "w"), ("g1", "g2", "g3"))
        .apply(M.J, ("e3", "g2"), ("g2J", "e3J"))
        .apply(M.M, ("e3J", "g3"), ("p",))
        .arrange("g1", "g2J", "e2", "p")
    )
    # a = gamma(u', u''); b = gamma(u, a2); T fed b1 ⊗ a3; c = eta(b1_T, a1)
    rhs = (
        x.apply(M.G, ("v", "w"), ("a1", "a2", "a3"))
        .apply(M.G, ("u", "a2"), ("b1", "b2", "b3"))
        .apply(M.T, ("b1", "a3"), ("b1T", "a3T"))
        .apply(M.E, ("b1T", "a1"), ("c1", "c2", "c3"))
        .apply(M.M, ("b3", "a3T"), ("p",))
        .apply(M.M, ("p", "c3"), ("q",))
        .arrange("c1", "b2", "c2", "q")
    )
    return lhs, rhs


def _lrc15(M, u, v, w, h, k):
    x = M.basis(("u", "v", "w", "h", "k"), (u, v, w, h, k))
    # a = gamma(u', u''); T fed a1 ⊗ h; b = gamma(u, a1_T); J fed h' ⊗ b2
    lhs = (
        x.apply(M.G, ("v", "w"), ("a1", "a2", "a3"))
        .apply(M.T, ("a1", "h"), ("a1T", "hT"))
        .apply(M.G, ("u", "a1T"), ("b1", "b2", "b3"))
        .apply(M.J, ("k", "b2"), ("b2J", "kJ"))
        .apply(M.M, ("kJ", "b3"), ("p",))
        .apply(M.M, ("a3", "hT"), ("q",))
        .arrange("b1", "b2J", "p", "a2", "q")
    )
    # a = gamma(u, u'); J fed h' ⊗ a2; b = gamma(a2_J, u''); T fed b1 ⊗ h
    rhs = (
        x.apply(M.G, ("u", "v"), ("a1", "a2", "a3"))
        .apply(M.J, ("k", "a2"), ("a2J", "kJ"))
        .apply(M.G, ("a2J", "w"), ("b1", "b2", "b3"))
        .apply(M.T, ("b1", "h"), ("b1T", "hT"))
        .apply(M.M, ("kJ", "a3"), ("p",))
        .apply(M.M, ("b3", "hT"), ("q",))
        .arrange("a1", "b1T", "p", "b2", "q")
    )
    return lhs, rhs


@dataclass(frozen=True)
class _Part:
    name: str
    inputs: str  # one letter per input leg: "U" or "H"
    outputs: str
    sides: Callable


@dataclass(frozen=True)
class _Axiom:
    id: int
    label: str
    parts: tuple[_Part, ...]


_AXIOMS = (
    _Axiom(1, "lrc1", (
        _Part("J(h⊗1_U) = 1_U⊗h", "H", "UH", _lrc1a),
        _Part("J(1_H⊗u) = u⊗1_H", "U", "UH", _lrc1b),
    )),
    _Axiom(2, "lrc2", (
        _Part("T(u⊗1_H) = u⊗1_H", "U", "UH", _lrc2a),
        _Part("T(1_U⊗h) = 1_U⊗h", "H", "UH", _lrc2b),
    )),
    _Axiom(3, "lrc3", (
        _Part("gamma(u⊗1_U) = u⊗1_U⊗1_H", "U", "UUH", _lrc3a),
        _Part("gamma(1_U⊗u) = 1_U⊗u⊗1_H", "U", "UUH", _lrc3b),
    )),
    _Axiom(4, "lrc4", (
        _Part("eta(u⊗1_U) = u⊗1_H⊗1_H", "U", "UHH", _lrc4a),
        _Part("eta(1_U⊗u) = u⊗1_H⊗1_H", "U", "UHH", _lrc4b),
    )),
    _Axiom(5, "lrc5", (_Part("J twisted by multiplication of H", "HHU", "UH", _lrc5),)),
    _Axiom(6, "lrc6", (_Part("T twisted by multiplication of H", "UHH", "UH", _lrc6),)),
    _Axiom(7, "lrc9", (_Part("J against eta", "HUU", "UHH", _lrc9),)),
    _Axiom(8, "lrc10", (_Part("T against eta", "UUH", "UHH", _lrc10),)),
    _Axiom(9, "lrc11", (_Part("eta cocycle", "UUU", "UHH", _lrc11),)),
    _Axiom(10, "lrc12", (_Part("gamma against J and T", "UHU", "UUH", _lrc12),)),
    _Axiom(11, "lrc13", (_Part("gamma against eta, right", "UUU", "UUHH", _lrc13),)),
    _Axiom(12, "lrc14", (_Part("gamma against eta, left", "UUU", "UUHH", _lrc14),)),
    _Axiom(13, "lrc15", (_Part("gamma against gamma", "UUUHH", "UUHUH", _lrc15),)),
)

AXIOM_LABELS = tuple(a.label for a in _AXIOMS)


def axiom_id(key: int | str) -> int:
    """Normalise an id (1..13) or a label such as ``"lrc9"`` to the integer id."""
    if isinstance(key, str):
        if key not in AXIOM_LABELS:
            raise ValueError(f"unknown axiom label {key!r}; labels are {AXIOM_LABELS}")
        return AXIOM_LABELS.index(key) + 1
    if isinstance(key, bool) or not isinstance(key, int) or not 1 <= key <= len(_AXIOMS):
        raise ValueError(f"axiom id must be in 1..{len(_AXIOMS)}, got {key!r}")
    return key


@dataclass(frozen=True)
class Witness:
    inputs: tuple[int, ...]
    input_spaces: str
    lhs: Tensor
    rhs: Tensor
    first_diff_index: tuple[int, ...] | None
    part: str


@dataclass(frozen=True)
class AxiomResult:
    axiom_id: int
    label: str
    witnesses: tuple[Witness, ...] = ()
    tuples_checked: int = 0

    @property
    def holds(self) -> bool:
        return not self.witnesses

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...] = dc_field(default_factory=tuple)

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.results)

    @property
    def failed(self) -> tuple[str, ...]:
        return tuple(r.label for r in self.results if not r.holds)

    def __getitem__(self, key) -> AxiomResult:
        return self.results[axiom_id(key) - 1]


class AxiomFailure(ValueError):
    def __init__(self, report: AxiomReport):
        super().__init__(f"axioms fail: {', '.join(report.failed)}")
        self.report = report


def check_axiom(d: CrossedDatum, key: int | str, max_witnesses: int = 1, _maps=None) -> AxiomResult:
    """Evaluate both sides of one condition on every basis tuple of its input space."""
    ax = _AXIOMS[axiom_id(key) - 1]
    M = _maps or _Maps(d)
    n, m = d.dims
    size = {"U": n, "H": m}
    found = []
    checked = 0
    for part in ax.parts:
        out_shape = tuple(size[c] for c in part.outputs)
        for idx in basis_tuples(size[c] for c in part.inputs):
            checked += 1
            lhs, rhs = part.sides(M, *idx)
            if lhs.same_terms(rhs):
                continue
            lt, rt = lhs.to_tensor(out_shape), rhs.to_tensor(out_shape)
            _, first = tensors_equal(lt, rt)
            found.append(Witness(tuple(idx), part.inputs, lt, rt, first, part.name))
            if len(found) >= max_witnesses:
                return AxiomResult(ax.id, ax.label, tuple(found), checked)
    return AxiomResult(ax.id, ax.label, tuple(found), checked)


def check_all(d: CrossedDatum, max_witnesses: int = 1) -> AxiomReport:
    M = _Maps(d)
    return AxiomReport(tuple(check_axiom(d, a.id, max_witnesses, M) for a in _AXIOMS))


def first_failure(d: CrossedDatum) -> AxiomResult | None:
    """The first failing axiom in label order, or None; stops early."""
    M = _Maps(d)
    for a in _AXIOMS:
        r = check_axiom(d, a.id, 1, M)
        if not r.holds:
            return r
    return None


# -- the product ---------------------------------------------------------------


def _product(M: _Maps, x: LinComb) -> LinComb:
    """Multiply along legs (u, h, v, k) = (u ⊗ h)(u' ⊗ h'); result legs (U, H)."""
    return (
        x.apply(M.G, ("u", "v"), ("g1", "g2", "g3"))
        .apply(M.T, ("g1", "k"), ("g1T", "kT"))
        .apply(M.J, ("h", "g2"), ("g2J", "hJ"))
        .apply(M.E, ("g1T", "g2J"), ("e1", "e2", "e3"))
        .apply(M.M, ("e2", "hJ"), ("p1",))
        .apply(M.M, ("p1", "g3"), ("p2",))
        .apply(M.M, ("p2", "kT"), ("p3",))
        .apply(M.M, ("p3", "e3"), ("p",))
        .arrange("e1", "p")
    )


def _product_labels(d: CrossedDatum) -> tuple[str, ...]:
    n, m = d.dims
    return tuple(f"{d.U.label(u)}⊗{d.H.label(h)}" for u in range(n) for h in range(m))


def build_crossed_product(d: CrossedDatum, require_axioms: bool = True) -> Algebra:
    """Structure constants of U ⊗ H with basis (u, h) at index ``u * dim H + h``.

    With ``require_axioms`` the conditions are checked first and the result is
    additionally certified associative and unital.
    """
    if require_axioms:
        report = check_all(d)
        if not report.all_hold:
            raise AxiomFailure(report)
    M = _Maps(d)
    n, m = d.dims
    N = n * m
    entries = {}
    for u, h, v, k in basis_tuples((n, m, n, m)):
        prod = _product(M, M.basis(("u", "h", "v", "k"), (u, h, v, k)))
        i, j = u * m + h, v * m + k
        for (a, b), c in prod.terms.items():
            entries[(i, j, a * m + b)] = c
    mu = Tensor.from_entries(d.field, (N, N, N), entries)
    unit = tensor_product(d.U.unit_vec, d.H.unit).reshape((N,))
    A = Algebra(mu, unit, _product_labels(d))
    if require_axioms:
        check = validate_algebra(A)
        if not check.ok:
            raise AssertionError(f"axioms hold but product fails: {check.failures[0]}")
    return A


def crossed_multiply(d: CrossedDatum, a: Tensor, b: Tensor) -> Tensor:
    """Product of two coordinate vectors on U ⊗ H, straight through the maps."""
    n, m = d.dims
    if a.shape != (n * m,) or b.shape != (n * m,):
        raise ShapeError(f"coordinate vectors of length {n * m} expected")
    x = LinComb.from_tensor(("u", "h"), a.reshape((n, m))).join(
        LinComb.from_tensor(("v", "k"), b.reshape((n, m)))
    )
    return _product(_Maps(d), x).to_tensor((n, m)).reshape((n * m,))


def check_reduced_products(d: CrossedDatum) -> list[tuple[str, tuple[int, ...]]]:
    """Check the three reduced products against J, T and mu_H on all basis tuples.

    (1_U⊗h)(1_U⊗h') = 1_U⊗hh';  (u⊗h)(1_U⊗h') = u_T⊗hh'_T;
    (1_U⊗h)(u'⊗1_H) = u'_J⊗h_J.  Returns the failing ``(identity, inputs)``.
    """
    M = _Maps(d)
    n, m = d.dims
    failures = []
    for h, k in basis_tuples((m, m)):
        x = M.unit_U("u").join(M.basis("h", (h,))).join(M.unit_U("v")).join(M.basis("k", (k,)))
        x = x.arrange("u", "h", "v", "k")
        want = M.unit_U("a").join(M.basis(("h", "k"), (h, k)).apply(M.M, ("h", "k"), ("p",)))
        if not _product(M, x).same_terms(want):
            failures.append(("(1⊗h)(1⊗h')", (h, k)))
    for u, h, k in basis_tuples((n, m, m)):
        x = M.basis(("u", "h"), (u, h)).join(M.unit_U("v")).join(M.basis("k", (k,)))
        want = (
            M.basis(("u", "h", "k"), (u, h, k))
            .apply(M.T, ("u", "k"), ("uT", "kT"))
            .apply(M.M, ("h", "kT"), ("p",))
        )
        if not _product(M, x).same_terms(want):
            failures.append(("(u⊗h)(1⊗h')", (u, h, k)))
    for h, v in basis_tuples((m, n)):
        x = M.unit_U("u").join(M.basis(("h", "v"), (h, v))).join(M.unit_H("k"))
        want = M.basis(("h", "v"), (h, v)).apply(M.J, ("h", "v"), ("vJ", "hJ"))
        if not _product(M, x).same_terms(want):
            failures.append(("(1⊗h)(u'⊗1)", (h, v)))
    return failures

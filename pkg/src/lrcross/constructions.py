"""Crossed data for the known special cases, their closed-form products, and a gallery.

Each ``from_*`` function turns the data of a classical construction into a
:class:`~lrcross.crossed.CrossedDatum`.  :func:`direct_multiply` evaluates the
classical multiplication formula of each construction straight from its own
maps, never touching (J, T, gamma, eta); it is the independent oracle the
general product is compared against.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .algebra import Algebra, builtin_algebra, tensor_product_algebra
from .crossed import CrossedDatum, PointedSpace
from .scalars import QQ, FieldMismatchError, FieldSpec
from .tensor import LinComb, ShapeError, Tensor, contract, identity, tensor_product

__all__ = [
    "LRTwistData",
    "MirrorBrzezinskiData",
    "IteratedData",
    "QuasiBialgebraData",
    "BimoduleAlgebraData",
    "LRSmashData",
    "flip_map",
    "identity_map",
    "dual_bimodule_algebra",
    "from_ordinary_tensor",
    "from_lr_twisted",
    "from_mirror_brzezinski",
    "from_iterated",
    "from_lr_smash",
    "to_datum",
    "direct_multiply",
    "direct_product_algebra",
    "kind_of",
    "iterated_whv_order",
    "builtin_source",
    "builtin_instance",
    "INSTANCE_NAMES",
    "VALID_INSTANCES",
]


def _require_shape(name: str, t: Tensor, shape: tuple, field: FieldSpec):
    if t.shape != shape:
        raise ShapeError(f"{name} must have shape {shape}, got {t.shape}")
    if t.field != field:
        raise FieldMismatchError(f"{name} is over {t.field}, expected {field}")


def flip_map(field: FieldSpec, m: int, n: int) -> Tensor:
    """The swap H ⊗ U -> U ⊗ H as a (m, n, n, m) tensor."""
    return Tensor.from_entries(field, (m, n, n, m), {(h, u, u, h): 1 for h in range(m) for u in range(n)})


def identity_map(field: FieldSpec, n: int, m: int) -> Tensor:
    """The identity of U ⊗ H as a (n, m, n, m) tensor."""
    return Tensor.from_entries(field, (n, m, n, m), {(u, h, u, h): 1 for u in range(n) for h in range(m)})


def _gamma_trivial(U: PointedSpace, B: Algebra) -> Tensor:
    # gamma(u ⊗ u') = u ⊗ u' ⊗ 1
    n = U.dim
    eye = identity(B.field, n)
    return contract("ua,vb,c->uvabc", eye, eye, B.unit)


# -- data types ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LRTwistData:
    """Twisting maps R: B ⊗ A -> A ⊗ B and Q: A ⊗ B -> A ⊗ B."""

    A: Algebra
    B: Algebra
    R: Tensor
    Q: Tensor

    def __post_init__(self):
        a, b, f = self.A.dim, self.B.dim, self.A.field
        if self.B.field != f:
            raise FieldMismatchError(f"{self.A.field} vs {self.B.field}")
        _require_shape("R", self.R, (b, a, a, b), f)
        _require_shape("Q", self.Q, (a, b, a, b), f)


@dataclass(frozen=True, eq=False)
class MirrorBrzezinskiData:
    """P: B ⊗ W -> W ⊗ B and nu: W ⊗ W -> W ⊗ B."""

    W: PointedSpace
    B: Algebra
    P: Tensor
    nu: Tensor

    def __post_init__(self):
        w, b, f = self.W.dim, self.B.dim, self.B.field
        if self.W.field != f:
            raise FieldMismatchError(f"{self.W.field} vs {f}")
        _require_shape("P", self.P, (b, w, w, b), f)
        _require_shape("nu", self.nu, (w, w, w, b), f)


@dataclass(frozen=True, eq=False)
class IteratedData:
    """Data of an iterated crossed product on W ⊗ H ⊗ V.

    ``R`` maps v ⊗ h -> v_R ⊗ h_R, ``sigma`` maps v ⊗ v' -> sigma1 ⊗ sigma2 in
    H ⊗ V and ``Q`` maps v ⊗ w -> Q_W ⊗ Q_H ⊗ Q_V.
    """

    W: PointedSpace
    V: PointedSpace
    H: Algebra
    P: Tensor
    nu: Tensor
    R: Tensor
    sigma: Tensor
    Q: Tensor

    def __post_init__(self):
        w, v, m, f = self.W.dim, self.V.dim, self.H.dim, self.H.field
        for name in ("W", "V"):
            if getattr(self, name).field != f:
                raise FieldMismatchError(f"{name} is over {getattr(self, name).field}, H over {f}")
        _require_shape("P", self.P, (m, w, w, m), f)
        _require_shape("nu", self.nu, (w, w, w, m), f)
        _require_shape("R", self.R, (v, m, v, m), f)
        _require_shape("sigma", self.sigma, (v, v, m, v), f)
        _require_shape("Q", self.Q, (v, w, w, m, v), f)


@dataclass(frozen=True, eq=False)
class QuasiBialgebraData:
    """Comultiplication ``Delta[h, h1, h2]``, counit, reassociator and its inverse."""

    H: Algebra
    Delta: Tensor
    counit: Tensor
    Phi: Tensor
    PhiInv: Tensor

    def __post_init__(self):
        m, f = self.H.dim, self.H.field
        _require_shape("Delta", self.Delta, (m, m, m), f)
        _require_shape("counit", self.counit, (m,), f)
        _require_shape("Phi", self.Phi, (m, m, m), f)
        _require_shape("PhiInv", self.PhiInv, (m, m, m), f)

    @property
    def trivial_phi(self) -> bool:
        one = contract("a,b,c->abc", self.H.unit, self.H.unit, self.H.unit)
        return self.Phi == one and self.PhiInv == one

    def problems(self) -> list[str]:
        H, D, eps = self.H, self.Delta, self.counit
        mu, one = H.mu, H.unit
        out = []
        lhs = contract("ijk,kab->ijab", mu, D)
        rhs = contract("ipq,jrs,pra,qsb->ijab", D, D, mu, mu)
        if lhs != rhs:
            out.append("Delta is not multiplicative")
        if contract("i,iab->ab", one, D) != tensor_product(one, one):
            out.append("Delta(1) != 1 ⊗ 1")
        eye = identity(H.field, H.dim)
        if contract("iab,a->ib", D, eps) != eye or contract("iab,b->ia", D, eps) != eye:
            out.append("counit laws fail")
        triple_one = contract("a,b,c->abc", one, one, one)
        for x, y, what in ((self.Phi, self.PhiInv, "Phi PhiInv"), (self.PhiInv, self.Phi, "PhiInv Phi")):
            if contract("abc,def,adx,bey,cfz->xyz", x, y, mu, mu, mu) != triple_one:
                out.append(f"{what} != 1 ⊗ 1 ⊗ 1")
        return out

    def check(self):
        bad = self.problems()
        if bad:
            raise ValueError("invalid quasi-bialgebra data: " + "; ".join(bad))


@dataclass(frozen=True, eq=False)
class BimoduleAlgebraData:
    """Algebra A with actions ``left[h, a, a']`` (h·a) and ``right[a, h, a']`` (a·h)."""

    A: Algebra
    left: Tensor
    right: Tensor

    def problems(self, H: Algebra, trivial_phi: bool = True) -> list[str]:
        a, m, f = self.A.dim, H.dim, self.A.field
        _require_shape("left", self.left, (m, a, a), f)
        _require_shape("right", self.right, (a, m, a), f)
        L, R, mu = self.left, self.right, H.mu
        out = []
        eye = identity(f, a)
        if contract("h,hab->ab", H.unit, L) != eye:
            out.append("1_H acts nontrivially on the left")
        if contract("ahb,h->ab", R, H.unit) != eye:
            out.append("1_H acts nontrivially on the right")
        if contract("hab,bkc->hakc", L, R) != contract("akb,hbc->hakc", R, L):
            out.append("left and right actions do not commute")
        if trivial_phi:
            if contract("kab,hbc->hkac", L, L) != contract("hkp,pac->hkac", mu, L):
                out.append("left action is not associative")
            if contract("ahb,bkc->ahkc", R, R) != contract("hkp,apc->ahkc", mu, R):
                out.append("right action is not associative")
        return out


_SLOTS = ("x", "y", "z")


@dataclass(frozen=True, eq=False)
class LRSmashData:
    """Quasi-bialgebra, bimodule algebra, and the Phi/PhiInv choice per slot x, y, z."""

    qb: QuasiBialgebraData
    bm: BimoduleAlgebraData
    convention: dict = dc_field(default_factory=lambda: {s: "inv" for s in _SLOTS})

    def __post_init__(self):
        conv = {s: "inv" for s in _SLOTS}
        conv.update(self.convention or {})
        if set(conv) != set(_SLOTS) or any(v not in ("inv", "fwd") for v in conv.values()):
            raise ValueError(f"convention must map x, y, z to 'inv' or 'fwd', got {self.convention}")
        object.__setattr__(self, "convention", conv)

    def slot(self, name: str) -> Tensor:
        return self.qb.PhiInv if self.convention[name] == "inv" else self.qb.Phi


def dual_bimodule_algebra(qb: QuasiBialgebraData) -> BimoduleAlgebraData:
    """H* with the coregular actions (h ⇀ f)(x) = f(xh), (f ↼ h)(x) = f(hx).

    Written in the dual basis; the product is dual to Delta and the unit is
    the counit.  For a bialgebra this is an H-bimodule algebra.
    """
    H = qb.H
    mu_dual = contract("kij->ijk", qb.Delta)
    left = contract("khi->hik", H.mu)
    right = contract("hki->ihk", H.mu)
    labels = tuple(f"{H.label(i)}*" for i in range(H.dim))
    return BimoduleAlgebraData(Algebra(mu_dual, qb.counit, labels), left, right)


# -- constructors ----------------------------------------------------------------


def from_lr_twisted(d: LRTwistData) -> CrossedDatum:
    """J = R, T = Q, gamma(a ⊗ a') = a ⊗ a' ⊗ 1_B, eta(a ⊗ a') = aa' ⊗ 1_B ⊗ 1_B."""
    U = PointedSpace.of_algebra(d.A)
    eta = contract("uvw,b,c->uvwbc", d.A.mu, d.B.unit, d.B.unit)
    return CrossedDatum(d.B, U, d.R, d.Q, _gamma_trivial(U, d.B), eta)


def from_ordinary_tensor(A: Algebra, H: Algebra) -> CrossedDatum:
    if A.field != H.field:
        raise FieldMismatchError(f"{A.field} vs {H.field}")
    return from_lr_twisted(
        LRTwistData(A, H, flip_map(A.field, H.dim, A.dim), identity_map(A.field, A.dim, H.dim))
    )


def from_mirror_brzezinski(d: MirrorBrzezinskiData) -> CrossedDatum:
    """J = P, T = id, gamma trivial, eta(w ⊗ w') = nu(w ⊗ w') ⊗ 1_B."""
    eta = contract("uvwb,c->uvwbc", d.nu, d.B.unit)
    T = identity_map(d.B.field, d.W.dim, d.B.dim)
    return CrossedDatum(d.B, d.W, d.P, T, _gamma_trivial(d.W, d.B), eta)


def from_iterated(d: IteratedData) -> CrossedDatum:
    """Crossed datum on U = W ⊗ V (W index major), 1_U = 1_W ⊗ 1_V."""
    nw, nv, m, f = d.W.dim, d.V.dim, d.H.dim, d.H.field
    n = nw * nv
    eye_w, eye_v = identity(f, nw), identity(f, nv)
    # J(h ⊗ (w ⊗ v)) = (w_P ⊗ v) ⊗ h_P
    J = contract("hwxk,vy->hwvxyk", d.P, eye_v).reshape((m, n, n, m))
    # T((w ⊗ v) ⊗ h) = (w ⊗ v_R) ⊗ h_R
    T = contract("wx,vhyk->wvhxyk", eye_w, d.R).reshape((n, m, n, m))
    # gamma = (w ⊗ Q_V(v, w')) ⊗ (Q_W(v, w') ⊗ v') ⊗ Q_H(v, w')
    gamma = contract("wa,vbche,fg->wvbfaecgh", eye_w, d.Q, eye_v).reshape((n, n, n, n, m))
    # eta = (nu1(w, w') ⊗ sigma2(v, v')) ⊗ nu2(w, w') ⊗ sigma1(v, v')
    eta = contract("wbah,vfke->wvbfaehk", d.nu, d.sigma).reshape((n, n, n, m, m))
    labels = None
    if d.W.labels or d.V.labels:
        labels = tuple(f"{d.W.label(w)}{d.V.label(v)}" for w in range(nw) for v in range(nv))
    U = PointedSpace(tensor_product(d.W.unit_vec, d.V.unit_vec).reshape((n,)), labels)
    return CrossedDatum(d.H, U, J, T, gamma, eta)


def from_lr_smash(qb: QuasiBialgebraData, bm: BimoduleAlgebraData, convention: dict | None = None) -> CrossedDatum:
    """J(h ⊗ a) = h1·a ⊗ h2, T(a ⊗ h) = a·h2 ⊗ h1,
    gamma(a ⊗ a') = a·z3 ⊗ z1·a' ⊗ z2,
    eta(a ⊗ a') = (x1·a·y2)(x2·a'·y3) ⊗ x3 ⊗ y1.
    """
    data = LRSmashData(qb, bm, convention or {})
    qb.check()
    bad = bm.problems(qb.H, trivial_phi=qb.trivial_phi)
    if bad:
        raise ValueError("invalid bimodule algebra data: " + "; ".join(bad))
    D, L, R, muA = qb.Delta, bm.left, bm.right, bm.A.mu
    X, Y, Z = data.slot("x"), data.slot("y"), data.slot("z")
    J = contract("hpq,pab->habq", D, L)
    T = contract("hpq,aqb->ahbp", D, R)
    gamma = contract("phr,arc,pbd->abcdh", Z, R, L)
    eta = contract("pqr,ijk,pas,sjt,qbu,ukv,tvo->abori", X, Y, L, R, L, R, muA)
    return CrossedDatum(qb.H, PointedSpace.of_algebra(bm.A), J, T, gamma, eta)


def to_datum(data) -> CrossedDatum:
    """Crossed datum for any specialization data object (or a datum itself)."""
    if isinstance(data, CrossedDatum):
        return data
    if isinstance(data, LRTwistData):
        return from_lr_twisted(data)
    if isinstance(data, MirrorBrzezinskiData):
        return from_mirror_brzezinski(data)
    if isinstance(data, IteratedData):
        return from_iterated(data)
    if isinstance(data, LRSmashData):
        return from_lr_smash(data.qb, data.bm, data.convention)
    raise TypeError(f"no crossed datum for {type(data).__name__}")


# -- closed-form products ----------------------------------------------------------


def _direct_lr_twisted(d: LRTwistData, x: LinComb) -> LinComb:
    # (a ⊗ b)(a' ⊗ b') = a_Q a'_R ⊗ b_R b'_Q
    return (
        x.apply(d.Q.action(2), ("a1", "k"), ("aQ", "kQ"))
        .apply(d.R.action(2), ("h", "a2"), ("vR", "hR"))
        .apply(d.A.mu.action(2), ("aQ", "vR"), ("a",))
        .apply(d.B.mu.action(2), ("hR", "kQ"), ("b",))
        .arrange("a", "b")
    )


def _direct_mirror(d: MirrorBrzezinskiData, x: LinComb) -> LinComb:
    # (w ⊗ b)(w' ⊗ b') = nu1(w, w'_P) ⊗ nu2(w, w'_P) b_P b'
    mu = d.B.mu.action(2)
    return (
        x.apply(d.P.action(2), ("h", "a2"), ("vP", "hP"))
        .apply(d.nu.action(2), ("a1", "vP"), ("n1", "n2"))
        .apply(mu, ("n2", "hP"), ("p",))
        .apply(mu, ("p", "k"), ("b",))
        .arrange("n1", "b")
    )


def _direct_iterated(d: IteratedData, x: LinComb) -> LinComb:
    # nu1(w, Q_W_P) ⊗ sigma2(Q_V_R, v') ⊗ nu2(w, Q_W_P) h_P Q_H h'_R sigma1(Q_V_R, v')
    dims = (d.W.dim, d.V.dim)
    mu = d.H.mu.action(2)
    return (
        x.split("a1", ("w", "v"), dims)
        .split("a2", ("w2", "v2"), dims)
        .apply(d.Q.action(2), ("v", "w2"), ("qW", "qH", "qV"))
        .apply(d.P.action(2), ("h", "qW"), ("qWP", "hP"))
        .apply(d.R.action(2), ("qV", "k"), ("qVR", "kR"))
        .apply(d.nu.action(2), ("w", "qWP"), ("n1", "n2"))
        .apply(d.sigma.action(2), ("qVR", "v2"), ("s1", "s2"))
        .apply(mu, ("n2", "hP"), ("p1",))
        .apply(mu, ("p1", "qH"), ("p2",))
        .apply(mu, ("p2", "kR"), ("p3",))
        .apply(mu, ("p3", "s1"), ("p",))
        .arrange("n1", "s2", "p")
        .merge(("n1", "s2"), "out", dims)
    )


def _direct_lr_smash(d: LRSmashData, x: LinComb) -> LinComb:
    # (x1·a·z3 h'2 y2)(x2 h1 z1·a'·y3) ⊗ x3 h2 z2 h'1 y1
    H = d.qb.H
    mu, Dl = H.mu.action(2), d.qb.Delta.action(1)
    L, R, muA = d.bm.left.action(2), d.bm.right.action(2), d.bm.A.mu.action(2)
    x = (
        x.apply(Dl, ("h",), ("h1", "h2"))
        .apply(Dl, ("k",), ("k1", "k2"))
        .join(LinComb.from_tensor(("x1", "x2", "x3"), d.slot("x")))
        .join(LinComb.from_tensor(("y1", "y2", "y3"), d.slot("y")))
        .join(LinComb.from_tensor(("z1", "z2", "z3"), d.slot("z")))
    )
    x = (
        x.apply(mu, ("z3", "k2"), ("r1",))
        .apply(mu, ("r1", "y2"), ("r",))
        .apply(mu, ("x2", "h1"), ("s1",))
        .apply(mu, ("s1", "z1"), ("s",))
        .apply(R, ("a1", "r"), ("c1",))
        .apply(L, ("x1", "c1"), ("c2",))
        .apply(L, ("s", "a2"), ("b1",))
        .apply(R, ("b1", "y3"), ("b2",))
        .apply(muA, ("c2", "b2"), ("a",))
        .apply(mu, ("x3", "h2"), ("q1",))
        .apply(mu, ("q1", "z2"), ("q2",))
        .apply(mu, ("q2", "k1"), ("q3",))
        .apply(mu, ("q3", "y1"), ("q",))
    )
    return x.arrange("a", "q")


_DIRECT = {
    "lr_twisted": (LRTwistData, _direct_lr_twisted),
    "mirror_brz": (MirrorBrzezinskiData, _direct_mirror),
    "iterated": (IteratedData, _direct_iterated),
    "lr_smash": (LRSmashData, _direct_lr_smash),
}


def _space_dims(data) -> tuple[FieldSpec, int, int]:
    if isinstance(data, LRTwistData):
        return data.A.field, data.A.dim, data.B.dim
    if isinstance(data, MirrorBrzezinskiData):
        return data.B.field, data.W.dim, data.B.dim
    if isinstance(data, IteratedData):
        return data.H.field, data.W.dim * data.V.dim, data.H.dim
    return data.qb.H.field, data.bm.A.dim, data.qb.H.dim


def kind_of(data) -> str:
    for kind, (cls, _) in _DIRECT.items():
        if isinstance(data, cls):
            return kind
    raise TypeError(f"{type(data).__name__} is not specialization data")


def direct_multiply(kind: str, data, a: Tensor, b: Tensor) -> Tensor:
    """Closed-form product of the classical construction ``kind`` on U ⊗ H coordinates."""
    if kind not in _DIRECT:
        raise ValueError(f"unknown kind {kind!r}; choose from {tuple(_DIRECT)}")
    cls, fn = _DIRECT[kind]
    if not isinstance(data, cls):
        raise TypeError(f"kind {kind!r} needs {cls.__name__}, got {type(data).__name__}")
    _, n, m = _space_dims(data)
    if a.shape != (n * m,) or b.shape != (n * m,):
        raise ShapeError(f"coordinate vectors of length {n * m} expected")
    x = LinComb.from_tensor(("a1", "h"), a.reshape((n, m))).join(
        LinComb.from_tensor(("a2", "k"), b.reshape((n, m)))
    )
    out = fn(data, x)
    return out.to_tensor((n, m)).reshape((n * m,))


def direct_product_algebra(kind: str, data) -> Algebra:
    """Structure constants of the classical product, evaluated on all basis pairs."""
    f, n, m = _space_dims(data)
    N = n * m
    entries = {}
    for i, j in product(range(N), repeat=2):
        c = direct_multiply(kind, data, Tensor.basis_vector(f, N, i), Tensor.basis_vector(f, N, j))
        for (k,), v in c.nonzero():
            entries[(i, j, k)] = v
    return Algebra(Tensor.from_entries(f, (N, N, N), entries), _unit(data))


def _unit(data) -> Tensor:
    """1_U ⊗ 1_H on the flattened space."""
    if isinstance(data, LRTwistData):
        u, h = data.A.unit, data.B.unit
    elif isinstance(data, MirrorBrzezinskiData):
        u, h = data.W.unit_vec, data.B.unit
    elif isinstance(data, IteratedData):
        u, h = tensor_product(data.W.unit_vec, data.V.unit_vec), data.H.unit
    else:
        u, h = data.bm.A.unit, data.qb.H.unit
    return tensor_product(u, h).reshape((u.size * h.size,))


def iterated_whv_order(d: IteratedData) -> list[int]:
    """Position in W ⊗ H ⊗ V of each basis vector of (W ⊗ V) ⊗ H."""
    nw, nv, m = d.W.dim, d.V.dim, d.H.dim
    return [(w * m + h) * nv + v for w in range(nw) for v in range(nv) for h in range(m)]


# -- gallery -------------------------------------------------------------------

INSTANCE_NAMES = (
    "trivial_2x2",
    "super_twist",
    "complex_mirror",
    "iterated_sign",
    "c2_smash",
    "sweedler_lr_smash",
    "broken_J",
)
VALID_INSTANCES = INSTANCE_NAMES[:-1]


def _sign_twist(field: FieldSpec, m: int, n: int, g: int, x: int, c) -> Tensor:
    """Flip H ⊗ U -> U ⊗ H except g ⊗ x -> c · x ⊗ g."""
    return flip_map(field, m, n).with_entry((g, x, x, g), c)


def _dual_space(field, labels) -> PointedSpace:
    return PointedSpace(Tensor.basis_vector(field, len(labels), 0), labels)


def _group_like(H: Algebra) -> QuasiBialgebraData:
    f, m = H.field, H.dim
    one = contract("a,b,c->abc", H.unit, H.unit, H.unit)
    Delta = Tensor.from_entries(f, (m, m, m), {(h, h, h): 1 for h in range(m)})
    return QuasiBialgebraData(H, Delta, Tensor.from_nested(f, [1] * m), one, one)


def _sweedler_qb(field: FieldSpec) -> QuasiBialgebraData:
    H = builtin_algebra("sweedler4", field)
    # basis 1, g, x, gx;  Delta(x) = x⊗1 + g⊗x,  Delta(gx) = gx⊗g + 1⊗gx
    Delta = Tensor.from_entries(field, (4, 4, 4), {
        (0, 0, 0): 1, (1, 1, 1): 1,
        (2, 2, 0): 1, (2, 1, 2): 1,
        (3, 3, 1): 1, (3, 0, 3): 1,
    })
    counit = Tensor.from_nested(field, [1, 1, 0, 0])
    one = contract("a,b,c->abc", H.unit, H.unit, H.unit)
    return QuasiBialgebraData(H, Delta, counit, one, one)


def builtin_source(name: str, field: FieldSpec = QQ):
    """Specialization data behind a gallery instance."""
    if name.startswith("demo:"):
        name = name[5:]
    if name == "trivial_2x2":
        C2 = builtin_algebra("cyclic:2", field)
        return LRTwistData(C2, C2, flip_map(field, 2, 2), identity_map(field, 2, 2))
    if name in ("super_twist", "broken_J"):
        A, B = builtin_algebra("dual_numbers", field), builtin_algebra("cyclic:2", field)
        R = _sign_twist(field, 2, 2, 1, 1, -1 if name == "super_twist" else 2)
        return LRTwistData(A, B, R, identity_map(field, 2, 2))
    if name == "complex_mirror":
        W = _dual_space(field, ("1", "i"))
        B = builtin_algebra("field", field)
        nu = Tensor.from_entries(field, (2, 2, 2, 1), {(0, 0, 0, 0): 1, (0, 1, 1, 0): 1, (1, 0, 1, 0): 1, (1, 1, 0, 0): -1})
        return MirrorBrzezinskiData(W, B, flip_map(field, 1, 2), nu)
    if name == "iterated_sign":
        H = builtin_algebra("cyclic:2", field)
        W, V = _dual_space(field, ("1", "x")), _dual_space(field, ("1", "y"))
        P = _sign_twist(field, 2, 2, 1, 1, -1)
        R = identity_map(field, 2, 2).with_entry((1, 1, 1, 1), -1)
        # nu(1 ⊗ w) = nu(w ⊗ 1) = w ⊗ 1_H, nu(x ⊗ x) = 0; sigma likewise into H ⊗ V
        nu = Tensor.from_entries(field, (2, 2, 2, 2), {(0, 0, 0, 0): 1, (0, 1, 1, 0): 1, (1, 0, 1, 0): 1})
        sigma = Tensor.from_entries(field, (2, 2, 2, 2), {(0, 0, 0, 0): 1, (0, 1, 0, 1): 1, (1, 0, 0, 1): 1})
        Q = Tensor.from_entries(field, (2, 2, 2, 2, 2), {(v, w, w, 0, v): 1 for v in range(2) for w in range(2)})
        return IteratedData(W, V, H, P, nu, R, sigma, Q)
    if name == "c2_smash":
        qb = _group_like(builtin_algebra("cyclic:2", field))
        return LRSmashData(qb, dual_bimodule_algebra(qb))
    if name == "sweedler_lr_smash":
        qb = _sweedler_qb(field)
        return LRSmashData(qb, dual_bimodule_algebra(qb))
    raise ValueError(f"unknown instance {name!r}; choose from {INSTANCE_NAMES}")


def builtin_instance(name: str, field: FieldSpec = QQ) -> CrossedDatum:
    return to_datum(builtin_source(name, field))


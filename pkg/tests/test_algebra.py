import itertools

import pytest

from lrcross.algebra import (
    Algebra, InvalidAlgebraError, NotAGroupError, builtin_algebra, group_algebra, multiply,
    tensor_product_algebra, validate_algebra,
)
from lrcross.scalars import QQ, FieldSpec
from lrcross.tensor import ShapeError, Tensor

C2_TABLE = [[0, 1], [1, 0]]


def coords(A, *xs):
    return A.element(xs)


def test_field_algebra():
    A = Algebra(Tensor.from_nested(QQ, [[[1]]]), Tensor.from_nested(QQ, [1]))
    assert validate_algebra(A).ok


def test_c2_is_valid(field):
    assert validate_algebra(group_algebra(C2_TABLE, 0, field)).ok


def test_c2_with_g_squared_rescaled_stays_associative():
    # g·g = 2 gives k[g]/(g² - 2): commutative and monogenic, hence associative
    A = group_algebra(C2_TABLE, 0)
    B = Algebra(A.mu.with_entry((1, 1, 0), 2), A.unit)
    assert validate_algebra(B).ok
    g = B.basis(1)
    assert multiply(B, multiply(B, g, g), g) == multiply(B, g, multiply(B, g, g)) == coords(B, 0, 2)


def test_broken_associativity_witness():
    # e11·e12 = 2 e12 while e11·e11 = e11: (e11 e11) e12 = 2 e12, e11 (e11 e12) = 4 e12
    A = builtin_algebra("mat2")
    B = Algebra(A.mu.with_entry((0, 1, 1), 2), A.unit)
    rep = validate_algebra(B)
    assert not rep.ok
    assert rep.failures[0].law == "assoc"
    assert rep.failures[0].witness == (0, 0, 1)
    assert str(rep.failures[0]) == "assoc fails at basis (0, 0, 1)"


def test_unit_failure_reported():
    A = group_algebra(C2_TABLE, 0)
    B = Algebra(A.mu, Tensor.from_nested(QQ, [0, 1]))
    laws = {f.law for f in validate_algebra(B).failures}
    assert laws == {"left_unit", "right_unit"}


def test_all_witnesses_flag():
    A = builtin_algebra("mat2")
    B = Algebra(A.mu.with_entry((0, 1, 1), 2), A.unit)
    assert len(validate_algebra(B, all_witnesses=True).failures) > len(validate_algebra(B).failures)


def test_unit_is_identity(field):
    for name in ("dual_numbers", "mat2", "cyclic:3", "sweedler4"):
        A = builtin_algebra(name, field)
        for i in range(A.dim):
            e = A.basis(i)
            assert multiply(A, A.unit, e) == e == multiply(A, e, A.unit)


def test_g_squared():
    A = group_algebra(C2_TABLE, 0)
    assert multiply(A, A.basis(1), A.basis(1)) == A.basis(0)


def test_dual_number_square():
    A = builtin_algebra("dual_numbers")
    assert multiply(A, A.basis(1), A.basis(1)).is_zero()


def test_trivial_group():
    A = group_algebra([[0]], 0)
    F = builtin_algebra("field")
    assert A.mu == F.mu and A.unit == F.unit


def test_cyclic_three():
    A = group_algebra([[(i + j) % 3 for j in range(3)] for i in range(3)], 0)
    assert validate_algebra(A).ok
    assert builtin_algebra("cyclic:3").mu == A.mu


@pytest.mark.parametrize("table,msg", [
    ([[0, 1], [1, 1]], "inverse"),
    ([[0, 1], [1, 2]], "not an element"),
    ([[1, 0], [0, 1]], "identity"),
    ([[0, 1]], "square"),
])
def test_not_a_group(table, msg):
    with pytest.raises(NotAGroupError, match=msg):
        group_algebra(table, 0)


def test_nonassociative_table():
    # a Latin square with identity 0 that is not a group
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroupError) as exc:
        group_algebra(table, 0)
    assert len(exc.value.witness) == 3


def test_mat2_units():
    A = builtin_algebra("mat2")
    e11, e12 = A.basis(0), A.basis(1)
    assert multiply(A, e11, e12) == e12
    assert multiply(A, e12, e11).is_zero()


def test_sweedler_relations(field):
    A = builtin_algebra("sweedler4", field)
    one, g, x, gx = (A.basis(i) for i in range(4))
    neg = lambda v: Tensor(field, [field.neg(c) for c in v.data.tolist()])
    assert multiply(A, g, g) == one
    assert multiply(A, x, x).is_zero()
    assert multiply(A, x, g) == neg(gx)
    assert multiply(A, gx, gx).is_zero()


def test_sweedler_rejects_char_2():
    with pytest.raises(ValueError):
        builtin_algebra("sweedler4", FieldSpec.prime(2))


def test_unknown_builtin():
    with pytest.raises(ValueError):
        builtin_algebra("octonions")


def test_tensor_with_field_is_same():
    A = builtin_algebra("dual_numbers")
    B = tensor_product_algebra(A, builtin_algebra("field"))
    assert B.mu == A.mu and B.unit == A.unit


def test_c2_squared_is_elementary_abelian():
    A = tensor_product_algebra(builtin_algebra("cyclic:2"), builtin_algebra("cyclic:2"))
    assert A.dim == 4
    for i in range(4):
        assert multiply(A, A.basis(i), A.basis(i)) == A.unit


def test_dual_numbers_squared():
    D = builtin_algebra("dual_numbers")
    A = tensor_product_algebra(D, D)
    x1, one_x, xx = A.basis(2), A.basis(1), A.basis(3)
    assert multiply(A, x1, one_x) == multiply(A, one_x, x1) == xx
    assert A.labels == ("1⊗1", "1⊗x", "x⊗1", "x⊗x")


def _first_noncommuting(A):
    for i, j in itertools.product(range(A.dim), repeat=2):
        if multiply(A, A.basis(i), A.basis(j)) != multiply(A, A.basis(j), A.basis(i)):
            return i, j
    return None


def test_cyclic_commutative():
    for n in (1, 2, 3, 4):
        assert _first_noncommuting(builtin_algebra(f"cyclic:{n}")) is None


def test_mat2_not_commutative():
    A = builtin_algebra("mat2")
    assert _first_noncommuting(A) == (0, 1)


def test_every_builtin_validates(field):
    for name in ("field", "dual_numbers", "mat2", "cyclic:1", "cyclic:4", "sweedler4"):
        assert validate_algebra(builtin_algebra(name, field)).ok


def test_bilinear():
    A = builtin_algebra("sweedler4")
    x, y, z = A.element([1, 2, 0, -1]), A.element([0, 1, 3, 1]), A.element(["1/2", 0, 1, 0])
    s = A.element([a + b for a, b in zip(y.data.tolist(), z.data.tolist())])
    lhs = multiply(A, x, s)
    rhs = [a + b for a, b in zip(multiply(A, x, y).data.tolist(), multiply(A, x, z).data.tolist())]
    assert lhs == A.element(rhs)


def test_shape_checks():
    with pytest.raises(ShapeError):
        Algebra(Tensor.zeros(QQ, (2, 2, 3)), Tensor.zeros(QQ, (2,)))
    with pytest.raises(ShapeError):
        multiply(builtin_algebra("mat2"), Tensor.zeros(QQ, (3,)), Tensor.zeros(QQ, (4,)))


def test_invalid_algebra_error_carries_report():
    A = builtin_algebra("mat2")
    B = Algebra(A.mu.with_entry((0, 1, 1), 2), A.unit)
    err = InvalidAlgebraError(validate_algebra(B))
    assert not err.report.ok

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from lrcross.scalars import QQ, FieldSpec
from lrcross.tensor import (
    ShapeError, Tensor, contract, identity, permute, tensor_product, tensors_equal,
)

F7 = FieldSpec.prime(7)


def T(data, f=QQ):
    return Tensor.from_nested(f, data)


def test_identity_composition():
    assert contract("ij,jk->ik", identity(QQ, 2), identity(QQ, 2)) == identity(QQ, 2)


def test_trace():
    assert contract("ii->", identity(QQ, 3)).scalar() == 3


def test_matrix_vector():
    assert contract("ij,j->i", T([[1, 2], [3, 4]]), T([1, 1])) == T([3, 7])


def test_product_of_basis_vectors():
    t = tensor_product(T([1, 0]), T([0, 1]))
    assert t.shape == (2, 2)
    assert list(t.nonzero()) == [((0, 1), 1)]


def test_product_with_scalar_unit():
    x = T([1, 2, 3])
    assert tensor_product(x, T([1])) == x.reshape((3, 1))


def test_outer_product():
    assert tensor_product(T([1, 2]), T([3, 4])) == T([[3, 4], [6, 8]])


def test_permute():
    m = T([[1, 2], [3, 4]])
    assert permute(m, (0, 1)) == m
    assert permute(m, (1, 0)) == T([[1, 3], [2, 4]])
    t = Tensor.from_entries(QQ, (2, 3, 4), {(i, j, k): 100 * i + 10 * j + k
                                             for i, j, k in itertools.product(range(2), range(3), range(4))})
    p = permute(t, (2, 0, 1))
    assert p.shape == (4, 2, 3)
    for i, j, k in itertools.product(range(2), range(3), range(4)):
        assert p[k, i, j] == t[i, j, k]


def test_tensors_equal():
    t = identity(QQ, 2)
    assert tensors_equal(t, t) == (True, None)
    assert tensors_equal(t, Tensor.zeros(QQ, (4,))) == (False, None)
    assert tensors_equal(t, t.with_entry((1, 1), 2)) == (False, (1, 1))


def test_contract_errors():
    with pytest.raises(ShapeError):
        contract("ij,jk->ik", T([[1, 2]]), T([[1, 2]]))
    with pytest.raises(ShapeError):
        contract("ij->k", identity(QQ, 2))
    with pytest.raises(ShapeError):
        contract("ij,jk->ik", identity(QQ, 2))


def test_fields_do_not_mix():
    with pytest.raises(ValueError):
        contract("i,i->", T([1]), T([1], F7))


def test_from_entries_range_checked():
    with pytest.raises(ShapeError):
        Tensor.from_entries(QQ, (2,), {(2,): 1})


def test_tensor_is_read_only():
    t = T([1, 2])
    with pytest.raises(ValueError):
        t.data[0] = 5


def _naive_matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][l] * b[l][j] for l in range(k)) for j in range(m)] for i in range(n)]


def test_matmul_against_triple_loop():
    # every matrix over {-1, 0, 1} of shape 1x2, 2x1 and 2x2; sampled products for dims up to 3
    for n, k, m in [(1, 2, 1), (2, 1, 2), (2, 2, 2)]:
        cells = list(itertools.product((-1, 0, 1), repeat=n * k))
        cells_b = list(itertools.product((-1, 0, 1), repeat=k * m))
        for ca in cells[:: max(1, len(cells) // 27)]:
            for cb in cells_b[:: max(1, len(cells_b) // 27)]:
                a = [list(ca[i * k:(i + 1) * k]) for i in range(n)]
                b = [list(cb[i * m:(i + 1) * m]) for i in range(k)]
                assert contract("ij,jk->ik", T(a), T(b)) == T(_naive_matmul(a, b))


small = st.integers(-1, 1)


@st.composite
def matrices(draw, n, m):
    return [[draw(small) for _ in range(m)] for _ in range(n)]


@settings(max_examples=150)
@given(st.data(), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
def test_matmul_random_dims(data, n, k, m):
    a, b = data.draw(matrices(n, k)), data.draw(matrices(k, m))
    assert contract("ij,jk->ik", T(a), T(b)) == T(_naive_matmul(a, b))


@settings(max_examples=60)
@given(st.data())
def test_multilinear(data):
    a, a2 = data.draw(matrices(2, 3)), data.draw(matrices(2, 3))
    b = data.draw(matrices(3, 2))
    c = data.draw(st.integers(-3, 3))
    lin = [[c * x + y for x, y in zip(r, r2)] for r, r2 in zip(a, a2)]
    lhs = contract("ij,jk->ik", T(lin, F7), T(b, F7))
    ab, a2b = contract("ij,jk->ik", T(a, F7), T(b, F7)), contract("ij,jk->ik", T(a2, F7), T(b, F7))
    expect = [[F7.add(F7.mul(F7.coerce(c), ab[i, j]), a2b[i, j]) for j in range(2)] for i in range(2)]
    assert lhs == T(expect, F7)


@settings(max_examples=60)
@given(st.data())
def test_product_then_contract(data):
    a, b = data.draw(matrices(2, 2)), data.draw(matrices(3, 3))
    full = contract("ijkl->", tensor_product(T(a), T(b))).scalar()
    assert full == contract("ij->", T(a)).scalar() * contract("kl->", T(b)).scalar()


def test_diagonal_extraction():
    m = T([[1, 2], [3, 4]])
    assert contract("ii->i", m) == T([1, 4])


def test_sparse_action_matches_dense():
    t = T([[0, 2], [3, 0]])
    act = t.action(1)
    assert act.n_in == 1 and act.n_out == 1
    assert dict(act.table[(0,)]) == {(1,): 2}

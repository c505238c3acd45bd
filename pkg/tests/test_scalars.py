from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lrcross.scalars import (
    QQ, FieldMismatchError, FieldSpec, Scalar, format_scalar, parse_scalar, scalar_arith,
)

F5, F7 = FieldSpec.prime(5), FieldSpec.prime(7)


def test_add_rationals():
    assert scalar_arith("add", parse_scalar("1/2"), parse_scalar("1/3")) == parse_scalar("5/6")


def test_inverse_mod_7():
    assert scalar_arith("inv", Scalar.of(3, F7)).value == 5


def test_neg_zero():
    assert scalar_arith("neg", Scalar.of(0)).value == 0


def test_parse_reduces():
    s = parse_scalar("−4/6")
    assert s.value == Fraction(-2, 3)
    assert format_scalar(s) == "-2/3"


def test_parse_residue():
    assert parse_scalar("10", F7).value == 3


def test_parse_half_mod_5():
    assert parse_scalar("1/2", F5).value == 3


@pytest.mark.parametrize("bad", ["", "1/", "a", "1.5", "--1", "1/ 2x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_scalar("3/0")
    with pytest.raises(ZeroDivisionError):
        parse_scalar("1/7", F7)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_arith("inv", Scalar.of(0, F5))


def test_mixed_fields_refused():
    with pytest.raises(FieldMismatchError):
        scalar_arith("add", Scalar.of(1), Scalar.of(1, F5))
    with pytest.raises(FieldMismatchError):
        Scalar.of(1, F5) * Scalar.of(1, F7)


def test_bad_op_and_arity():
    with pytest.raises(ValueError):
        scalar_arith("pow", Scalar.of(1), Scalar.of(2))
    with pytest.raises(TypeError):
        scalar_arith("mul", Scalar.of(1))
    with pytest.raises(TypeError):
        scalar_arith("neg", Scalar.of(1), Scalar.of(1))


@pytest.mark.parametrize("p", [0, 1, 4, 9, -3])
def test_modulus_must_be_prime(p):
    with pytest.raises(ValueError):
        FieldSpec.prime(p)


def test_field_names():
    assert FieldSpec.from_name("Q") == QQ
    assert FieldSpec.from_name("F7") == F7
    assert FieldSpec.from_name("5") == F5
    assert str(F7) == "F7" and str(QQ) == "Q"


def test_every_nonzero_residue_inverts():
    for p in (2, 3, 5, 7, 11):
        f = FieldSpec.prime(p)
        for a in range(1, p):
            assert f.mul(a, f.inv(a)) == 1
            assert sum(f.mul(a, b) == 1 for b in range(p)) == 1


def test_canonical_forms():
    assert QQ.coerce(Fraction(6, -4)) == Fraction(-3, 2)
    assert F7.coerce(-1) == 6
    assert QQ.zero == Fraction(0, 1)


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


def residues(p):
    return st.integers(0, p - 1)


@pytest.mark.parametrize("f,elems", [(QQ, rationals), (F7, residues(7)), (FieldSpec.prime(101), residues(101))], ids=str)
def test_field_axioms(f, elems):
    @given(elems, elems, elems)
    def check(a, b, c):
        a, b, c = (f.coerce(x) for x in (a, b, c))
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.add(a, f.neg(a)) == f.zero
        assert f.sub(a, b) == f.add(a, f.neg(b))
        if a != 0:
            assert f.mul(a, f.inv(a)) == f.one

    check()


@given(st.fractions())
def test_format_parse_roundtrip_q(q):
    assert QQ.parse(QQ.format(q)) == q


@given(st.integers())
def test_format_parse_roundtrip_fp(n):
    r = F7.coerce(n)
    assert F7.parse(F7.format(r)) == r


def test_scalar_operators():
    a, b = Scalar.of("2/3"), Scalar.of("1/6")
    assert a + b == Scalar.of("5/6")
    assert a - b == Scalar.of("1/2")
    assert a * b == Scalar.of("1/9")
    assert a / b == 4
    assert -a == Scalar.of("-2/3")
    assert str(Scalar.of(3, F5).inverse()) == "2"

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import rat_matrices
from d4green.linalg import (
    RatMatrix,
    annihilator_basis,
    express_in_basis,
    preimage_basis,
    quotient_maps,
    restrict_to_invariant,
    span_basis,
)


def test_rref_identity():
    m = RatMatrix.identity(3)
    red, pivots, rank = m.rref()
    assert red == m
    assert pivots == (0, 1, 2)
    assert rank == 3


def test_rref_zero():
    red, pivots, rank = RatMatrix.zeros(2, 2).rref()
    assert red.is_zero()
    assert pivots == ()
    assert rank == 0


def test_rref_proportional_rows():
    m = RatMatrix.from_rows([[1, 2], [2, 4]])
    assert m.rank() == 1


def test_kernel_identity_empty():
    assert RatMatrix.identity(2).kernel_basis() == []


def test_kernel_zero_full():
    assert len(RatMatrix.zeros(2, 3).kernel_basis()) == 3


def test_kernel_line():
    (v,) = RatMatrix.from_rows([[1, 1]]).kernel_basis()
    assert v[0] == -v[1] != 0


def test_solve_identity():
    b = [Fraction(3), Fraction(-1)]
    assert RatMatrix.identity(2).solve(b) == b


def test_solve_inconsistent():
    assert RatMatrix.from_rows([[1, 0], [1, 0]]).solve([1, 2]) is None


def test_solve_scalar():
    assert RatMatrix.from_rows([[2]]).solve([1]) == [Fraction(1, 2)]


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        RatMatrix.identity(2).solve([1, 2, 3])


def test_kron_identities():
    assert RatMatrix.identity(2).kron(RatMatrix.identity(3)) == RatMatrix.identity(6)
    a = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert a.kron(RatMatrix.zeros(2, 2)).is_zero()
    n = RatMatrix.from_rows([[0, 1], [0, 0]])
    assert n.kron(RatMatrix.from_rows([[2]])) == RatMatrix.from_rows([[0, 2], [0, 0]])


def test_inverse_examples():
    assert RatMatrix.identity(3).is_invertible()
    assert not RatMatrix.zeros(1, 1).is_invertible()
    m = RatMatrix.from_rows([[1, 1], [0, 1]])
    assert m.inverse() == RatMatrix.from_rows([[1, -1], [0, 1]])
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 1], [1, 1]]).inverse()


def test_det():
    assert RatMatrix.from_rows([[2, 1], [1, 1]]).det() == 1
    assert RatMatrix.from_rows([[1, 2], [2, 4]]).det() == 0
    assert RatMatrix.from_rows([[0, 1], [1, 0]]).det() == -1


@given(rat_matrices(square=True))
@settings(max_examples=60)
def test_inverse_roundtrip(m):
    if m.is_invertible():
        assert m @ m.inverse() == RatMatrix.identity(m.rows)


@given(rat_matrices())
@settings(max_examples=60)
def test_rank_nullity(m):
    assert m.rank() + len(m.kernel_basis()) == m.cols


@given(rat_matrices())
@settings(max_examples=60)
def test_rref_idempotent(m):
    red, _, _ = m.rref()
    red2, _, _ = red.rref()
    assert red == red2


@given(rat_matrices(max_dim=3), rat_matrices(max_dim=3))
@settings(max_examples=40)
def test_kron_multiplicative(a, b):
    c = RatMatrix.identity(a.cols)
    d = RatMatrix.identity(b.cols)
    assert a.kron(b) @ c.kron(d) == (a @ c).kron(b @ d)


def test_quotient_maps():
    sub = [[Fraction(1), Fraction(1), Fraction(0)]]
    proj, lift = quotient_maps(sub, 3)
    assert proj.rows == 2 and lift.cols == 2
    assert proj @ lift == RatMatrix.identity(2)
    assert proj.apply(sub[0]) == [Fraction(0), Fraction(0)]


def test_preimage_basis():
    m = RatMatrix.from_rows([[1, 0], [0, 1]])
    pre = preimage_basis(m, [[Fraction(1), Fraction(0)]])
    assert len(pre) == 1 and pre[0][1] == 0


def test_span_and_annihilator():
    vecs = [[1, 0, 1], [2, 0, 2], [0, 1, 0]]
    basis = span_basis(vecs, 3)
    assert len(basis) == 2
    ann = annihilator_basis(basis, 3)
    assert len(ann) == 1
    (f,) = ann
    for v in basis:
        assert sum(a * b for a, b in zip(f, v)) == 0


def test_restrict_and_express():
    m = RatMatrix.from_rows([[2, 0], [0, 3]])
    rest = restrict_to_invariant(m, [[1, 0]])
    assert rest == RatMatrix.from_rows([[2]])
    coords = express_in_basis([[Fraction(4), Fraction(0)]], [[2, 0]], 2)
    assert coords == RatMatrix.from_rows([[2]])
    with pytest.raises(ValueError):
        restrict_to_invariant(RatMatrix.from_rows([[0, 1], [1, 0]]), [[1, 0]])

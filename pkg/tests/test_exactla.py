"""
Tests the exact linear algebra in `exactla.py`.
"""
from fractions import Fraction

import pytest

from vg_algebra.errors import DomainException, UsageException
from vg_algebra.exactla import (
    FieldSpec,
    Matrix,
    Subspace,
    TrackedEchelon,
    is_prime,
    kernel,
    rank,
    rref,
)

QQ = FieldSpec.rationals()


def test_is_prime():
    """ Test the primality check on small values """
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]

def test_field_parse():
    """ Test parsing field names """
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("Fp:5").characteristic == 5
    assert FieldSpec.parse("fp:7").name == "Fp:7"

def test_field_parse_invalid():
    """ Test invalid field names and characteristics """
    with pytest.raises(UsageException) as e:
        FieldSpec.parse("R")
    assert str(e.value) == "invalid field 'R', expected Q or Fp:<p>"

    with pytest.raises(UsageException):
        FieldSpec.parse("Fp:9")

def test_char2_requires_override():
    """ Test F_2 is gated behind the override """
    with pytest.raises(DomainException) as e:
        FieldSpec.prime(2)
    assert str(e.value) == "characteristic 2 requires the explicit override (--allow-char2)"

    f2 = FieldSpec.prime(2, allow_char2=True)
    assert f2.characteristic == 2
    with pytest.raises(DomainException):
        f2.require_odd_characteristic("test")

def test_prime_field_elements():
    """ Test converting rationals into F_p """
    f5 = FieldSpec.prime(5)
    assert f5.element(7) == 2
    assert f5.element("1/2") == 3
    assert f5.element(-1) == 4
    assert f5.mul(f5.element("1/2"), 2) == 1
    with pytest.raises(DomainException):
        f5.element("1/5")

def test_rational_arithmetic_is_exact():
    """ Test field operations over Q never round """
    x = QQ.element("1/3")
    assert QQ.add(x, QQ.add(x, x)) == 1
    assert QQ.inv(Fraction(2, 7)) == Fraction(7, 2)
    assert QQ.to_str(QQ.div(1, 3)) == "1/3"

def test_rank_and_kernel():
    """ Test rank-nullity on a rank 2 matrix """
    m = Matrix.from_rows(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    k = kernel(m)
    assert k.rank == 1
    (v, ) = k.rows
    for row in m.rows:
        assert sum(a * b for a, b in zip(row, v)) == 0

def test_rank_depends_on_field():
    """ Test a matrix singular only modulo 3 """
    rows = [[1, 1], [1, 4]]
    assert rank(Matrix.from_rows(QQ, rows)) == 2
    assert rank(Matrix.from_rows(FieldSpec.prime(3), rows)) == 1

def test_rref_unit_pivots():
    """ Test reduced row echelon form """
    count, space = rref(Matrix.from_rows(QQ, [[2, 4], [1, 3]]))
    assert count == 2
    assert space.rows == ((1, 0), (0, 1))
    assert space.pivots == (0, 1)

def test_ragged_matrix():
    """ Test rows of different length """
    with pytest.raises(UsageException) as e:
        Matrix.from_rows(QQ, [[1, 2], [1]])
    assert str(e.value) == "ragged matrix: row of length 1, expected 2"

def test_subspace_membership_and_coordinates():
    """ Test membership and coordinates in the echelon basis """
    s = Subspace.span(QQ, 3, [(1, 0, 1), (0, 1, 1)])
    assert s.contains((2, 3, 5))
    assert not s.contains((0, 0, 1))
    assert s.coordinates((2, 3, 5)) == (2, 3)
    assert s.coordinates((0, 0, 1)) is None

def test_subspace_sum_and_intersection():
    """ Test the dimension formula on two planes in 3-space """
    u = Subspace.span(QQ, 3, [(1, 0, 0), (0, 1, 0)])
    w = Subspace.span(QQ, 3, [(0, 1, 0), (0, 0, 1)])
    assert u.sum(w).rank == 3
    meet = u.intersection(w)
    assert meet.rank == 1
    assert meet.contains((0, 5, 0))

def test_subspace_dimension_mismatch():
    """ Test mixing ambient dimensions """
    with pytest.raises(UsageException) as e:
        Subspace.span(QQ, 2, [(1, 0, 0)])
    assert str(e.value) == "vector of length 3 in ambient dimension 2"

def test_tracked_echelon_coordinates():
    """ Test coordinates are only counted for tagged generators """
    echelon = TrackedEchelon(QQ, 3)
    assert echelon.add(tuple(QQ.element(x) for x in (1, 1, 1)))
    assert echelon.add(tuple(QQ.element(x) for x in (1, 0, 0)), tag=0)
    assert not echelon.add(tuple(QQ.element(x) for x in (2, 1, 1)), tag=1)
    residual, consumed = echelon.reduce(tuple(QQ.element(x) for x in (3, 1, 1)))
    assert all(x == 0 for x in residual)
    assert consumed == {0: 2}
    assert echelon.rank == 2
    assert not echelon.is_full

"""
Tests chamber functions, the degree filtration and the square-zero locus
in `vgalgebra.py`.
"""
import random
from fractions import Fraction

import pytest

from vg_algebra.arrangement import betti, chambers
from vg_algebra.errors import DomainException, UsageException
from vg_algebra.exactla import FieldSpec
from vg_algebra.omatroid import signed_circuits
from vg_algebra.vgalgebra import (
    VGElement,
    algebraic_invariants,
    alt_function,
    constant,
    gheav_bruteforce,
    gheav_structural,
    graded_class,
    graded_mult,
    heaviside,
    in_fil1,
    monomial,
    primitive_idempotents,
    rho,
    sqzero,
    sqzero_oracle,
    support,
    verify_presentations,
)


def test_heaviside(boolean2):
    """ Test both sides of a coordinate line """
    assert heaviside(boolean2, 0).values == (1, 1, 0, 0)
    assert heaviside(boolean2, 0, -1).values == (0, 0, 1, 1)
    assert heaviside(boolean2, 1).values == (1, 0, 1, 0)

def test_heaviside_invalid(boolean2):
    """ Test an index out of range and an invalid side """
    with pytest.raises(UsageException) as e:
        heaviside(boolean2, 2)
    assert str(e.value) == "hyperplane index 2 out of range for n=2"
    with pytest.raises(UsageException) as e:
        heaviside(boolean2, 0, 0)
    assert str(e.value) == "side must be +1 or -1, got 0"

def test_monomial(boolean2):
    """ Test a product of positive Heavisides """
    assert monomial(boolean2, (0, 1)).values == (1, 0, 0, 0)
    assert monomial(boolean2, ()).values == (1, 1, 1, 1)
    x0, x1 = heaviside(boolean2, 0), heaviside(boolean2, 1)
    assert monomial(boolean2, (0, 1)) == x0 * x1

def test_element_arithmetic(boolean2):
    """ Test pointwise operations and the complement """
    x = heaviside(boolean2, 0)
    assert x.complement() == heaviside(boolean2, 0, -1)
    assert (x + x.complement()) == constant(boolean2, 1)
    assert (x * x) == x
    assert x.scaled("1/2").values == (Fraction(1, 2), Fraction(1, 2), 0, 0)
    assert x.is_zero_one() and not x.is_constant()

def test_element_different_algebras(boolean2, pencil3):
    """ Test mixing functions of different arrangements """
    with pytest.raises(UsageException) as e:
        heaviside(boolean2, 0) + heaviside(pencil3, 0)
    assert str(e.value) == "chamber functions live on different algebras"

def test_primitive_idempotents(pencil3):
    """ Test chamber indicators are orthogonal and sum to one """
    idempotents = primitive_idempotents(pencil3)
    assert len(idempotents) == 6
    total = idempotents[0]
    for e in idempotents[1:]:
        total = total + e
    assert total == constant(pencil3, 1)
    assert all(x == 0 for x in (idempotents[0] * idempotents[1]).values)

def test_rho_and_degree_one(pencil3):
    """ Test wall differences of degree zero, one and two functions """
    x = heaviside(pencil3, 0)
    assert rho(pencil3, 0, x).values == (1, 1)
    assert rho(pencil3, 1, x).values == (0, 0)
    assert in_fil1(pencil3, x)
    assert not in_fil1(pencil3, monomial(pencil3, (0, 1)))

def test_in_fil1_matches_filtration(a3, create_fil_chain):
    """ Test constant wall differences characterize degree one functions """
    fc = create_fil_chain(a3)
    rng = random.Random(11)
    size = len(chambers(a3))
    xs = [heaviside(a3, i).values for i in range(a3.n)]
    for _ in range(20):
        coefficients = [Fraction(rng.randint(-5, 5)) for _ in range(a3.n + 1)]
        values = [coefficients[0] + sum(c * x[k] for c, x in zip(coefficients[1:], xs))
                  for k in range(size)]
        f = VGElement(tuple(values), FieldSpec.rationals(), a3)
        assert in_fil1(a3, f) and fc.contains(f, 1)
        values[rng.randrange(size)] += 1
        bumped = VGElement(tuple(values), FieldSpec.rationals(), a3)
        assert not in_fil1(a3, bumped) and not fc.contains(bumped, 1)
    for _ in range(20):
        values = tuple(Fraction(rng.randint(0, 1)) for _ in range(size))
        f = VGElement(values, FieldSpec.rationals(), a3)
        assert in_fil1(a3, f) == fc.contains(f, 1)

def test_support(a3):
    """ Test the support of degree one functions """
    assert support(a3, heaviside(a3, 2)) == frozenset({2})
    assert support(a3, constant(a3, 1)) == frozenset()
    with pytest.raises(DomainException):
        support(a3, monomial(a3, (0, 3)))

def test_fil_chain_dimensions(boolean2, pencil3, a3, create_fil_chain):
    """ Test graded dimensions equal the Betti numbers """
    assert create_fil_chain(boolean2).dims == (1, 3, 4)
    for a in (boolean2, pencil3, a3):
        fc = create_fil_chain(a)
        assert fc.graded_dims == betti(a)[:fc.top + 1]
        assert fc.dims[-1] == len(chambers(a))

def test_fil_chain_prime_field(a3, create_fil_chain, f3):
    """ Test the graded dimensions do not depend on the field """
    assert create_fil_chain(a3, f3).graded_dims == (1, 6, 11, 6)

def test_algebraic_invariants(a3, generic6a, create_fil_chain):
    """ Test n and the rank are read off the graded algebra """
    assert algebraic_invariants(create_fil_chain(a3)) == (6, 3)
    assert algebraic_invariants(create_fil_chain(generic6a)) == (6, 3)

def test_graded_class_not_in_filtration(boolean2, create_fil_chain):
    """ Test a degree two function has no degree one class """
    fc = create_fil_chain(boolean2)
    with pytest.raises(DomainException) as e:
        graded_class(fc, monomial(boolean2, (0, 1)), 1)
    assert str(e.value) == "function is not in Fil^1"

def test_graded_class_negative_degree(boolean2, create_fil_chain):
    """ Test a negative degree """
    with pytest.raises(UsageException) as e:
        graded_class(create_fil_chain(boolean2), heaviside(boolean2, 0), -1)
    assert str(e.value) == "degree must be >= 0, got -1"

def test_graded_mult(boolean2, create_fil_chain):
    """ Test Heaviside classes square to zero but multiply nontrivially """
    fc = create_fil_chain(boolean2)
    x0 = graded_class(fc, heaviside(boolean2, 0), 1)
    x1 = graded_class(fc, heaviside(boolean2, 1), 1)
    assert not x0.is_zero()
    assert graded_mult(fc, x0, x0).is_zero()
    assert not graded_mult(fc, x0, x1).is_zero()

def test_graded_class_of_complement(a3, create_fil_chain):
    """ Test 1 - x has the class of -x """
    fc = create_fil_chain(a3)
    x = heaviside(a3, 4)
    plus = graded_class(fc, x, 1)
    minus = graded_class(fc, x.complement(), 1)
    assert (plus + minus).is_zero()
    assert plus.normalized() == minus.normalized()

def test_lift(a3, create_fil_chain):
    """ Test lifting a class gives a function with the same class """
    fc = create_fil_chain(a3)
    cls = graded_class(fc, heaviside(a3, 0) * heaviside(a3, 3), 2)
    assert graded_class(fc, fc.lift(cls), 2) == cls

def test_gheav_counts(pencil3, a3, generic6a, falk_a, falk_b):
    """ Test the number of generalized Heaviside functions """
    assert len(gheav_bruteforce(pencil3)) == 8
    assert len(gheav_bruteforce(a3)) == 20
    assert len(gheav_bruteforce(generic6a)) == 12
    assert len(gheav_bruteforce(falk_a)) == 22
    assert len(gheav_bruteforce(falk_b)) == 20

def test_gheav_contains_heavisides(a3):
    """ Test every Heaviside function is found """
    found = set(gheav_bruteforce(a3))
    for i in range(a3.n):
        assert heaviside(a3, i) in found
        assert heaviside(a3, i, -1) in found
    assert all(in_fil1(a3, y) and y.is_zero_one() for y in found)

def test_gheav_structural_agrees(pencil3, a3, falk_a, generic6b):
    """ Test the structural enumeration against the search """
    for a in (pencil3, a3, falk_a, generic6b):
        assert set(gheav_structural(a)) == set(gheav_bruteforce(a))

def test_alt_function_pencil(pencil3):
    """ Test the alternating function around three concurrent lines """
    y = alt_function(pencil3, [0, 1, 2], [0, 1, 2])
    assert y is not None
    assert y.values[0] == 1
    assert y.is_zero_one()
    assert support(pencil3, y) == frozenset({0, 1, 2})
    assert alt_function(pencil3, [0, 1, 2], [0, 1, 2], base=0) == y.complement()

def test_alt_function_invalid(pencil3, a3):
    """ Test even subsets and hyperplane sets that are not flats """
    with pytest.raises(UsageException) as e:
        alt_function(pencil3, [0, 1, 2], [0, 1])
    assert str(e.value) == "[0, 1] is not an odd subset of [0, 1, 2]"
    with pytest.raises(UsageException) as e:
        alt_function(a3, [0, 1], [0])
    assert str(e.value) == "[0, 1] is not the hyperplane set of a rank-2 flat"

def test_sqzero_counts(pencil3, a3, generic6a, falk_a, falk_b):
    """ Test the number of square-zero lines """
    assert len(sqzero(pencil3)) == 4
    assert len(sqzero(a3)) == 10
    assert len(sqzero(generic6a)) == 6
    assert len(sqzero(falk_a)) == 11
    assert len(sqzero(falk_b)) == 10

def test_sqzero_oracle(pencil3, a3, create_fil_chain, f3):
    """ Test the exhaustive scan over F_3 against the lines """
    for a in (pencil3, a3):
        lines = set(sqzero(a, f3))
        scanned = set(sqzero_oracle(create_fil_chain(a, f3)))
        assert lines == scanned

def test_sqzero_oracle_rationals(pencil3, create_fil_chain):
    """ Test the scan is refused over Q """
    with pytest.raises(DomainException) as e:
        sqzero_oracle(create_fil_chain(pencil3))
    assert str(e.value) == "the exhaustive square-zero scan needs a prime field"

def test_sqzero_char2(pencil3):
    """ Test every degree one class squares to zero over F_2 """
    f2 = FieldSpec.prime(2, allow_char2=True)
    assert len(sqzero(pencil3, f2)) == 2**3 - 1

def test_verify_presentations(pencil3, a3, falk_b, f3):
    """ Test circuit relations over Q and F_3 """
    for a in (pencil3, a3, falk_b):
        for field in (FieldSpec.rationals(), f3):
            report = verify_presentations(a, field)
            assert report.passed, report.failures
            assert report.circuits == len(signed_circuits(a))

def test_verify_presentations_char2(pencil3):
    """ Test the leading term signs over F_2 """
    report = verify_presentations(pencil3, FieldSpec.prime(2, allow_char2=True))
    assert report.passed, report.failures
    assert report.graded_dims == (1, 3, 2)

def test_vgelement_equality_includes_field(boolean2):
    """ Test the same values over different fields differ """
    x = heaviside(boolean2, 0)
    y = heaviside(boolean2, 0, 1, FieldSpec.prime(3))
    assert x != y
    assert isinstance(y, VGElement)

import itertools
import warnings

import numpy as np
import pytest

from jacobi_designs.cyclo import CycloNumber
from jacobi_designs.field import (
    EUCLIDEAN,
    HERMITIAN,
    FieldElement,
    FieldMismatchError,
    FieldSpec,
    add,
    char_chi,
    conjugate,
    inner_product,
    mul,
)

ORDERS = [2, 3, 4, 5, 8, 9]


def test_f3_examples():
    F = FieldSpec(3)
    two = F.element(2)
    assert add(two, two) == F.element(1)
    assert mul(two, two) == F.element(1)


def test_f4_examples():
    F = FieldSpec(2, 2)
    lam = F.generator
    assert lam + lam == F.zero
    assert lam * lam == lam + F.one
    assert conjugate(lam) == lam * lam
    assert conjugate(F.one) == F.one


def test_f9_nonprimitive_modulus_conjugate():
    F = FieldSpec.parse("q=3^2;modulus=1,0,1;primitive=0")
    lam = F.generator
    assert lam * lam == -F.one
    assert conjugate(lam) == -lam
    with pytest.raises(ValueError):
        FieldSpec(3, 2, (1, 0, 1))


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms(q):
    F = FieldSpec.from_order(q)
    elems = F.elements()
    zero, one = F.zero, F.one
    for a in elems:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if not a.is_zero():
            assert a * a.inverse() == one
    for a, b, c in itertools.product(elems, repeat=3):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("q", ORDERS)
def test_generator_is_primitive(q):
    F = FieldSpec.from_order(q)
    g = F.generator
    powers = {(g**k).index for k in range(q - 1)}
    assert powers == set(range(1, q))


@pytest.mark.parametrize("q", [4, 9])
def test_conjugation_is_frobenius_involution(q):
    F = FieldSpec.from_order(q)
    for a in F.elements():
        assert conjugate(conjugate(a)) == a
        assert conjugate(a) == a ** int(q**0.5)
    for a, b in itertools.product(F.elements(), repeat=2):
        assert conjugate(a * b) == conjugate(a) * conjugate(b)


def test_conjugate_on_odd_degree_warns():
    F = FieldSpec(3)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert conjugate(F.element(2)) == F.element(2)
    assert caught


def test_characters():
    F3 = FieldSpec(3)
    assert char_chi(F3.one, F3.one) == CycloNumber.zeta(3)
    for a in F3.elements():
        assert char_chi(F3.zero, a) == 1
    F4 = FieldSpec(2, 2)
    total = sum((char_chi(F4.one, b * F4.one) for b in F4.elements()), CycloNumber.rational(0))
    assert total == 0


@pytest.mark.parametrize("q", ORDERS)
def test_character_orthogonality(q):
    F = FieldSpec.from_order(q)
    for a in F.elements():
        total = CycloNumber.rational(0, F.p)
        for b in F.elements():
            total = total + char_chi(F.one, a * b)
        assert total == (q if a.is_zero() else 0)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_collapsed_character_sum(q):
    # sum over nonzero b of chi(ab) is q - 1 when a = 0 and -1 otherwise
    F = FieldSpec.from_order(q)
    for a in F.elements():
        total = CycloNumber.rational(0, F.p)
        for b in F.elements()[1:]:
            total = total + char_chi(F.one, a * b)
        assert total == (q - 1 if a.is_zero() else -1)


def test_inner_products():
    F3 = FieldSpec(3)
    u = [F3.element(x) for x in (1, 1, 1, 1)]
    v = [F3.element(x) for x in (1, 2, 0, 0)]
    assert inner_product(u, v) == F3.zero
    F4 = FieldSpec(2, 2)
    one, lam = F4.one, F4.generator
    assert inner_product([one, one], [one, one], HERMITIAN) == F4.zero
    assert inner_product([lam, F4.zero], [lam, F4.zero], HERMITIAN) == F4.one
    assert inner_product([lam, F4.zero], [lam, F4.zero], EUCLIDEAN) == lam * lam


def test_inner_product_errors():
    F3 = FieldSpec(3)
    with pytest.raises(ValueError):
        inner_product([F3.one], [F3.one, F3.one])
    with pytest.raises(ValueError):
        inner_product([F3.one], [F3.one], HERMITIAN)
    with pytest.raises(ValueError):
        inner_product([F3.one], [F3.one], "symplectic")


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        FieldSpec(3).one + FieldSpec(5).one
    with pytest.raises(FieldMismatchError):
        char_chi(FieldSpec(3).one, FieldSpec(5).one)


def test_invalid_specs():
    with pytest.raises(ValueError):
        FieldSpec(6)
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(ValueError):
        FieldSpec(2, 0)
    with pytest.raises(ValueError):
        FieldSpec.from_order(6)
    with pytest.raises(ValueError):
        FieldElement(FieldSpec(3), (3,))


@pytest.mark.parametrize("text", ["q=2^1;modulus=1,1", "q=2^2;modulus=1,1,1", "q=3^2;modulus=2,1,1", "q=3^2;modulus=1,0,1;primitive=0"])
def test_spec_round_trip(text):
    F = FieldSpec.parse(text)
    assert str(F) == text
    assert FieldSpec.parse(str(F)) == F


def test_tables_match_element_arithmetic():
    F = FieldSpec.from_order(8)
    elems = F.elements()
    for a, b in itertools.product(elems, repeat=2):
        assert F.add_table[a.index, b.index] == (a + b).index
        assert F.mul_table[a.index, b.index] == (a * b).index
    assert np.array_equal(F.neg_table[F.neg_table], np.arange(8))

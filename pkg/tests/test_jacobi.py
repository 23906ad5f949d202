import itertools

import numpy as np
import pytest

from jacobi_designs.code import catalog, dual, from_generator_matrix
from jacobi_designs.field import FieldSpec
from jacobi_designs.jacobi import (
    NonIntegralError,
    collapse_reference,
    distinct_jacobi_set,
    embed,
    indicator,
    invariance_check,
    jacobi_multi,
    jacobi_set,
    jacobi_via_polarization,
    macwilliams_transform,
    polarize,
    span_rank,
    weight_enumerator,
)
from jacobi_designs.molien import molien_bivariate, named_group
from jacobi_designs.poly import SparsePoly, parse, render

from oracles import dual_words, jacobi_of_words, random_code, span

F3 = FieldSpec(3)


def test_weight_enumerators():
    assert render(weight_enumerator(catalog("tetracode"))) == "x^4+8xy^3"
    assert render(weight_enumerator(catalog("golay12"))) == "x^12+264x^6y^6+440x^3y^9+24y^12"
    zero = from_generator_matrix(F3, [], n=5)
    assert render(weight_enumerator(zero)) == "x^5"


def test_jacobi_set_examples():
    assert render(jacobi_set(catalog("tetracode"), [1])) == "w(x^3+2y^3)+6zxy^2"
    assert render(jacobi_set(catalog("i2^2"), [1])) == "w(x^3+3xy^2)+z(3x^2y+9y^3)"
    assert render(jacobi_set(catalog("tetracode"), [1, 2])) == "w^2x^2+4wzy^2+4z^2xy"


def test_empty_t_is_weight_enumerator():
    C = catalog("tetracode^2")
    assert jacobi_set(C, []) == embed(weight_enumerator(C), 1)


def test_jacobi_set_rejects_bad_positions():
    with pytest.raises(ValueError):
        jacobi_set(catalog("tetracode"), [0])
    with pytest.raises(ValueError):
        jacobi_set(catalog("tetracode"), [5])


@pytest.mark.parametrize("name", ["tetracode", "i2^2", "e8f4"])
def test_jacobi_matches_oracle(name):
    C = catalog(name)
    words = span(C)
    for T in ([1], [2, 3], [1, 2, 4]):
        ref = indicator(C.n, T)
        assert jacobi_set(C, T) == jacobi_of_words(words, [ref], 1)
        assert jacobi_multi(C, [ref]) == jacobi_set(C, T)


def test_multi_reference_with_no_references():
    C = catalog("tetracode")
    assert jacobi_multi(C, []) == weight_enumerator(C)


def test_multi_reference_nonbinary_entries():
    C = catalog("tetracode")
    assert jacobi_multi(C, [[2, 0, 0, 0]]) == jacobi_set(C, [1])
    with pytest.raises(ValueError):
        jacobi_multi(C, [[1, 0, 0]])


def test_golay_two_references_equal_polarization():
    C = catalog("golay12")
    W = weight_enumerator(C)
    e1, e2 = indicator(12, [1]), indicator(12, [2])
    direct = jacobi_multi(C, [e1, e2])
    assert direct == polarize(polarize(W, 1, 2), 2, 2) / 132
    assert direct == jacobi_via_polarization(W, (1, 1))


def test_golay_split_polarization():
    C = catalog("golay12")
    W = weight_enumerator(C)
    refs = [indicator(12, [3, 7]), indicator(12, [11])]
    assert jacobi_via_polarization(W, (2, 1)) == jacobi_multi(C, refs)


def test_polarization_examples():
    W = weight_enumerator(catalog("tetracode"))
    assert render(polarize(W, 1) / 4) == "w(x^3+2y^3)+6zxy^2"
    assert render(polarize(polarize(W, 1), 1) / 12) == "w^2x^2+4wzy^2+4z^2xy"
    assert render(jacobi_via_polarization(W, (3,))) == "w^3x+6wz^2y+2z^3x"
    xn = parse("x^5", 0)
    assert polarize(xn, 1) == parse("5wx^4", 1)


def test_golay_t5_polarization():
    J5 = render(jacobi_via_polarization(weight_enumerator(catalog("golay12")), (5,)))
    assert J5.startswith("w^5(x^7+2xy^6)+30w^4zx^2y^5")


def test_polarization_errors():
    W = weight_enumerator(from_generator_matrix(F3, [[1, 0, 0, 0]]))
    with pytest.raises(NonIntegralError):
        jacobi_via_polarization(W, (1,))
    with pytest.raises(ValueError):
        jacobi_via_polarization(weight_enumerator(catalog("tetracode")), (4,))
    with pytest.raises(ValueError):
        jacobi_via_polarization(parse("x^2+y", 0), (1,))


def test_invariance():
    golay = catalog("golay12")
    res = invariance_check(golay, [range(1, 13)], (4,))
    assert res.invariant and res.choices == 495
    assert res.polynomial == jacobi_via_polarization(weight_enumerator(golay), (4,))
    assert invariance_check(catalog("tetracode"), [range(1, 5)], (1,))
    lopsided = from_generator_matrix(F3, [[1, 0, 0, 0]])
    res = invariance_check(lopsided, [range(1, 5)], (1,))
    assert not res.invariant
    assert res.witness == (((1,),), ((2,),))


def test_invariance_validation():
    C = catalog("tetracode")
    with pytest.raises(ValueError):
        invariance_check(C, [[1, 2], [2, 3]], (1, 1))
    with pytest.raises(ValueError):
        invariance_check(C, [[1, 2]], (3,))
    with pytest.raises(ValueError):
        invariance_check(C, [[1, 2]], (1, 1))


def test_macwilliams_examples():
    C = catalog("tetracode")
    J = jacobi_set(C, [1])
    assert macwilliams_transform(J, 3, 9) == J
    zero = from_generator_matrix(F3, [], n=4)
    assert macwilliams_transform(weight_enumerator(zero), 3, 1) == parse("(x+2y)^4", 0)


@pytest.mark.parametrize("seed", range(10))
def test_macwilliams_random_f3(seed):
    rng = np.random.default_rng(100 + seed)
    C = random_code(rng, 3, 4, 2)
    T = sorted(rng.choice(4, size=int(rng.integers(0, 5)), replace=False) + 1)
    J = jacobi_set(C, T)
    ref = indicator(4, T)
    assert macwilliams_transform(J, 3, C.size) == jacobi_of_words(dual_words(C), [ref], 1)
    assert macwilliams_transform(J, 3, C.size) == jacobi_set(dual(C), T)


def test_macwilliams_involution():
    C = catalog("e8f4")
    refs = [indicator(8, [1, 2]), indicator(8, [2, 5])]
    J = jacobi_multi(C, refs)
    D = dual(C)
    once = macwilliams_transform(J, 4, C.size)
    assert macwilliams_transform(once, 4, D.size) == J


def test_collapse_reference():
    C = catalog("tetracode^2")
    refs = [indicator(8, [1, 5]), indicator(8, [2])]
    J = jacobi_multi(C, refs)
    assert collapse_reference(J, 2) == jacobi_multi(C, refs[:1])
    assert collapse_reference(J, 1) == jacobi_multi(C, refs[1:])
    assert collapse_reference(collapse_reference(J, 2), 1) == weight_enumerator(C)


def test_distinct_jacobi_set_counts():
    C = catalog("tetracode^2")
    seen = {jacobi_set(C, T) for T in itertools.combinations(range(1, 9), 2)}
    assert set(distinct_jacobi_set(C, 2)) == seen
    assert len(seen) == 2
    with pytest.raises(ValueError):
        distinct_jacobi_set(C, 9)


def test_span_rank():
    x, y = SparsePoly.var(0, 0), SparsePoly.var(0, 1)
    assert span_rank([x, y, x + y]) == 2
    assert span_rank([x - x]) == 0


@pytest.mark.parametrize(
    "name, group, m",
    [("tetracode^2", "g3", 2), ("tetracode^2", "g3", 3), ("tetracode^2", "g3", 4), ("golay12", "g3", 6),
     ("i2^3", "g4", 2), ("e8f4", "g4", 4), ("dc12f4", "g4", 2)],
)
def test_span_bounded_by_invariant_count(name, group, m):
    # the J_{C,T} with |T| = m live in the bidegree (n - m, m) invariants
    C = catalog(name)
    table = molien_bivariate(named_group(group), C.n)
    assert span_rank(distinct_jacobi_set(C, m)) <= table[(C.n - m, m)]

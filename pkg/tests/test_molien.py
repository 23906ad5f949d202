from fractions import Fraction

import pytest

from jacobi_designs.cyclo import CycloNumber
from jacobi_designs.molien import (
    G3_DENOMINATOR,
    G4_PRINTED_DENOMINATOR,
    GroupElement,
    GroupTooLargeError,
    g3_generators,
    g4_generators,
    group_closure,
    homogeneous_part,
    molien_bivariate,
    named_group,
    parse_entry,
    parse_group,
    poly_from_roots_text,
    render_part,
    verify_denominator,
)
from jacobi_designs.poly import render


@pytest.fixture(scope="module")
def g3_table():
    return molien_bivariate(named_group("g3"), 28)


@pytest.fixture(scope="module")
def g4_table():
    return molien_bivariate(named_group("g4"), 20)


def test_group_orders():
    assert len(named_group("g3")) == 48
    assert len(named_group("g4")) == 12
    assert len(named_group("identity")) == 1


def test_closure_is_closed():
    G = named_group("g4")
    assert len(group_closure(G)) == 12
    elements = set(G)
    for a in G:
        for b in G:
            assert a @ b in elements


def test_group_element_rules():
    with pytest.raises(ValueError):
        GroupElement([[1, 2], [2, 4]])
    a = GroupElement([[1, 0], [0, CycloNumber.zeta(3)]])
    b = GroupElement([[1, 0], [0, CycloNumber.zeta(12, 4)]], 12)
    assert a == b and hash(a) == hash(b)
    assert a.det() == CycloNumber.zeta(3)


def test_generators_have_finite_order():
    for g in g3_generators() + g4_generators():
        power, k = g, 1
        while power != GroupElement.identity(g.conductor):
            power, k = power @ g, k + 1
        assert k in (2, 3)


def test_closure_bound():
    big = GroupElement([[1, 0], [0, CycloNumber.zeta(60)]])
    with pytest.raises(GroupTooLargeError):
        group_closure([big], bound=10)


def test_small_parts(g3_table, g4_table):
    assert render_part(g4_table, 2) == "u^2+uv+v^2"
    assert render_part(g3_table, 4) == "u^4+u^3v+u^2v^2+uv^3+v^4"
    assert render_part(g3_table, 8) == "u^8+u^7v+2u^6v^2+2u^5v^3+2u^4v^4+2u^3v^5+2u^2v^6+uv^7+v^8"
    assert render_part(g4_table, 6) == "2u^6+2u^5v+3u^4v^2+3u^3v^3+3u^2v^4+2uv^5+2v^6"
    assert render_part(g3_table, 0) == "1"
    assert render(homogeneous_part(g3_table, 2)) == "0"


def test_table_properties(g3_table, g4_table):
    for table in (g3_table, g4_table):
        assert table[(0, 0)] == 1
        for (i, j), c in table.coefficients.items():
            assert c >= 0
            assert table[(j, i)] == c


def test_univariate_diagonals(g3_table, g4_table):
    # invariants of G4 in one set of variables: degrees 2 and 6 generate
    assert g4_table.univariate()[:9] == [1, 0, 1, 0, 1, 0, 2, 0, 2]
    # G3: degrees 4 and 12
    assert g3_table.univariate()[:13] == [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 2]


def test_odd_degrees_vanish_for_g3(g3_table):
    for (i, j), c in g3_table.coefficients.items():
        if (i + j) % 4:
            assert c == 0


def test_identity_table():
    table = molien_bivariate(named_group("identity"), 10)
    assert render_part(table, 3) == "4u^3+6u^2v+6uv^2+4v^3"
    for (i, j), c in table.coefficients.items():
        assert c == (i + 1) * (j + 1)


def test_denominators(g3_table, g4_table):
    identity = molien_bivariate(named_group("identity"), 10)
    assert verify_denominator(identity, [1, -2, 1], D=10)
    assert not verify_denominator(identity, [1, -1], D=10)
    assert verify_denominator(g3_table, poly_from_roots_text(G3_DENOMINATOR), D=28)
    res = verify_denominator(g3_table, [1, -1], D=10)
    assert not res and res.witness is not None
    assert verify_denominator(g4_table, poly_from_roots_text("(1-u^2)(1-u^6)"), D=20)
    printed = poly_from_roots_text(G4_PRINTED_DENOMINATOR)
    assert len(printed) - 1 == 40
    assert verify_denominator(g4_table, printed).checked == 0
    res = verify_denominator(molien_bivariate(named_group("g4"), 44), printed)
    assert not res and res.checked > 0


def test_denominator_degree_bound(g4_table):
    with pytest.raises(ValueError):
        verify_denominator(g4_table, [1, -1], D=30)


def test_poly_from_roots_text():
    assert poly_from_roots_text("(u-1)^2") == [1, -2, 1]
    assert poly_from_roots_text("1-u^3") == [1, 0, 0, -1]
    with pytest.raises(ValueError):
        poly_from_roots_text("u-v")


def test_parse_entry():
    assert parse_entry("1/2", 12) == Fraction(1, 2)
    assert parse_entry("-z^4", 12) == -CycloNumber.zeta(3)
    assert parse_entry("1/3*z+1/3*z^11", 12) ** 2 == Fraction(1, 3)
    with pytest.raises(ValueError):
        parse_entry("", 12)
    with pytest.raises(ValueError):
        parse_entry("1/2q", 12)


def test_parse_group_g3():
    text = """
    # G3 generators
    conductor=12
    1/3*z+1/3*z^11  2/3*z+2/3*z^11 ; 1/3*z+1/3*z^11  -1/3*z-1/3*z^11
    1 0 ; 0 z^4
    """
    gens = parse_group(text)
    assert gens == g3_generators()
    assert len(group_closure(gens)) == 48


def test_parse_group_errors():
    with pytest.raises(ValueError):
        parse_group("1 0 ; 0 1")
    with pytest.raises(ValueError):
        parse_group("conductor=4\n1 0 0 1")
    with pytest.raises(ValueError):
        parse_group("conductor=4\n")


def test_csv(g4_table):
    small = molien_bivariate(named_group("g4"), 2)
    assert small.to_csv() == "i,j,c\n0,0,1\n1,0,0\n0,1,0\n2,0,1\n1,1,1\n0,2,1\n"
    with pytest.raises(KeyError):
        small[(3, 0)]
    with pytest.raises(ValueError):
        molien_bivariate(named_group("g4"), -1)

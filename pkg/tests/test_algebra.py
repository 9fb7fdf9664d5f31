"""Coefficient ring, parameter specs, and the element containers."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treehopf.algebra import (
    ONE,
    ZERO,
    Coeff,
    Element,
    QSpec,
    TensorElement,
    parse_coeff,
    parse_element,
    parse_tensor,
    sigma,
)
from treehopf.trees import ColourMismatchError, EMPTY_FOREST, Forest, parse_forest, parse_tree

Q11 = Coeff.variable(1, 1)
Q21 = Coeff.variable(2, 1)
Q12 = Coeff.variable(1, 2)
Q22 = Coeff.variable(2, 2)


# ---------------------------------------------------------------------------
# the coefficient ring
# ---------------------------------------------------------------------------


def test_printing_examples():
    assert str(Coeff.rational(Fraction(2, 3)) * Q11 ** 2 * Q22) == "2/3*q11^2*q22"
    assert str(Coeff.rational(Fraction(2, 3)) * Q11 ** 2 * Q22 - Q21) == (
        "-q21 + 2/3*q11^2*q22"
    )
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(-ONE) == "-1"
    assert str(Q11 - Q21) == "q11 - q21"


def test_parse_examples():
    assert parse_coeff("2/3*q11^2*q22 - q21") == (
        Coeff.rational(Fraction(2, 3)) * Q11 ** 2 * Q22 - Q21
    )
    assert parse_coeff("0") == ZERO
    assert parse_coeff("-5/7") == Coeff.rational(Fraction(-5, 7))
    assert parse_coeff("q21") == Q21
    assert parse_coeff("1 + q11") == ONE + Q11


def test_arithmetic():
    assert Q11 * Q21 == Q21 * Q11
    assert (Q11 + Q21) * (Q11 - Q21) == Q11 ** 2 - Q21 ** 2
    assert (Q11 + 1) ** 3 == Q11 ** 3 + 3 * Q11 ** 2 + 3 * Q11 + ONE
    assert Q11 - Q11 == ZERO
    assert Coeff.rational(6) / 3 == 2
    assert Q11 ** 0 == ONE


def test_equality_accepts_plain_numbers():
    assert Coeff.rational(2) == 2
    assert Coeff.rational(Fraction(1, 2)) == Fraction(1, 2)
    assert ZERO == 0 and ONE == 1
    assert Q11 != 1


def test_substitute():
    poly = Q11 ** 2 * Q22 + Q21
    assert poly.substitute({(1, 1): 1, (2, 2): 0, (2, 1): 0}) == ZERO
    assert poly.substitute({(1, 1): 2}) == 4 * Q22 + Q21
    # substituting a polynomial works too
    assert (Q11 ** 2).substitute({(1, 1): Q21 + 1}) == Q21 ** 2 + 2 * Q21 + ONE


def test_as_fraction_guards():
    with pytest.raises(ValueError):
        Q11.as_fraction()
    assert (Q11 - Q11).as_fraction() == 0
    assert Coeff.rational(Fraction(3, 4)).as_fraction() == Fraction(3, 4)


def test_variable_symbol_validation():
    with pytest.raises(ValueError):
        Coeff.variable(3, 1)
    with pytest.raises(ValueError):
        Coeff.variable(1, 0)


coeffs = st.builds(
    lambda pairs: sum(
        (Coeff.rational(r) * Q11 ** a * Q21 ** b for r, a, b in pairs), ZERO
    ),
    st.lists(
        st.tuples(
            st.fractions(min_value=-4, max_value=4, max_denominator=3),
            st.integers(min_value=0, max_value=3),
            st.integers(min_value=0, max_value=3),
        ),
        max_size=4,
    ),
)


@given(coeffs, coeffs, coeffs)
@settings(max_examples=80, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(coeffs)
@settings(max_examples=60, deadline=None)
def test_coeff_print_parse_roundtrip(a):
    assert parse_coeff(str(a)) == a


@given(coeffs, coeffs)
@settings(max_examples=40, deadline=None)
def test_substitution_is_a_homomorphism(a, b):
    point = {(1, 1): Fraction(2, 3), (2, 1): -2}
    assert (a * b).substitute(point) == a.substitute(point) * b.substitute(point)
    assert (a + b).substitute(point) == a.substitute(point) + b.substitute(point)


# ---------------------------------------------------------------------------
# parameter specs
# ---------------------------------------------------------------------------


def test_qspec_constructors():
    sym = QSpec.symbolic(2)
    assert sym.q(1, 2) == Q12 and sym.q(2, 1) == Q21
    ck = QSpec.connes_kreimer()
    assert ck.n == 1 and ck.q(1, 1) == 1 and ck.q(2, 1) == 0
    ind = QSpec.indicator(3, {1, 3})
    assert [ind.q(1, j) for j in (1, 2, 3)] == [1, 0, 1]
    assert all(ind.q(2, j) == 0 for j in (1, 2, 3))
    tied = QSpec.symmetric_symbolic(2)
    assert tied.q(1, 1) == tied.q(2, 1) and tied.q(1, 2) == tied.q(2, 2)


def test_qspec_from_strings():
    qs = QSpec.from_strings(2, ["1", "-2/3", "sym", "0"])
    assert qs.q(1, 1) == 1
    assert qs.q(1, 2) == Fraction(-2, 3)
    assert qs.q(2, 1) == Q21
    assert qs.q(2, 2) == 0
    with pytest.raises(ValueError):
        QSpec.from_strings(2, ["1", "0"])
    with pytest.raises(ValueError):
        QSpec.indicator(2, {5})


def test_qspec_is_rational():
    assert QSpec.connes_kreimer().is_rational()
    assert not QSpec.symbolic(1).is_rational()


# ---------------------------------------------------------------------------
# elements and tensors
# ---------------------------------------------------------------------------


def leaf_elt(n=1):
    return Element(n, {parse_forest("[]", n): 1})


def test_element_algebra():
    e = leaf_elt()
    assert (e * e).support() == [parse_forest("[]*[]")]
    assert e * 2 - e == e
    assert Element.unit(1) * e == e
    two = Element(1, {EMPTY_FOREST: 2})
    assert two.counit() == 2
    assert e.counit() == 0


def test_element_grading():
    e = parse_element("[] + [1:[]]*[] + 2/3 [1:[1:[]]]", 1)
    assert e.max_degree() == 3
    assert e.graded_part(1) == parse_element("[]", 1)
    assert e.graded_part(3) == parse_element("[1:[]]*[] + 2/3 [1:[1:[]]]", 1)
    assert e.graded_part(0).is_zero()


def test_element_print_parse_roundtrip():
    # `coef forest` with a space, coefficients as printed monomials
    for text in [
        "0",
        "1",
        "[]",
        "-[] + 2 [1:[]]",
        "q11 [1:[]] - q21 []*[]",
        "2/3*q11^2 [1:[1:[]]] + [] - 1",
    ]:
        e = parse_element(text, 1)
        assert parse_element(str(e), 1) == e


def test_element_colour_check():
    with pytest.raises(ColourMismatchError):
        Element(1, {parse_forest("[2:[]]", 2): 1})


def test_tensor_element():
    t = parse_tensor("[] ⊗ [1:[]] + q11 [] ⊗ []", 1)
    assert t == parse_tensor("[] (x) [1:[]] + q11 [] (x) []", 1)
    assert "⊗" in str(t)
    assert parse_tensor(str(t), 1) == t
    assert t.swap() == parse_tensor("[1:[]] ⊗ [] + q11 [] ⊗ []", 1)
    assert t.left_counit() == parse_element("0", 1)
    u = parse_tensor("1 ⊗ []*[]", 1)
    assert u.left_counit() == parse_element("[]*[]", 1)
    assert u.right_counit() == parse_element("0", 1)


def test_tensor_product_is_componentwise():
    a = parse_tensor("[] ⊗ 1", 1)
    b = parse_tensor("1 ⊗ []", 1)
    assert a * b == parse_tensor("[] ⊗ []", 1)


# ---------------------------------------------------------------------------
# the q-scaled product maps
# ---------------------------------------------------------------------------


def test_sigma_weights_by_slot_sizes():
    qs = QSpec.symbolic(2)
    f = Element(2, {parse_forest("[]*[]", 2): 1})
    g = Element(2, {Forest.single(parse_tree("[1:[]]", 2)): 1})
    out1 = sigma(1, qs, [f, g])
    assert out1 == Element(
        2, {parse_forest("[]*[]*[1:[]]", 2): Q11 ** 2 * Q12 ** 2}
    )
    out2 = sigma(2, qs, [f, g])
    assert out2 == Element(
        2, {parse_forest("[]*[]*[1:[]]", 2): Q21 ** 2 * Q22 ** 2}
    )
    # empty slots contribute exponent zero
    assert sigma(1, QSpec.symbolic(1), [Element.unit(1)]) == Element.unit(1)
    with pytest.raises(ValueError):
        sigma(3, qs, [f, g])

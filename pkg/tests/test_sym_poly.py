from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from _util import poly
from secondfree.sym_poly import (CumulantPolynomial, CumulantSpec, indeterminate, make_monomial,
                                 monomial_from_blocks)

K = CumulantPolynomial.kappa
ZERO = CumulantPolynomial()

_ind = st.one_of(
    st.builds(lambda v, j: indeterminate(v, j), st.sampled_from("ab"), st.integers(1, 4)),
    st.builds(lambda v, j, k: indeterminate(v, j, k), st.sampled_from("ab"), st.integers(1, 3), st.integers(1, 3)),
)
_mono = st.lists(_ind, max_size=3).map(lambda fs: CumulantPolynomial({make_monomial(fs): 1}))

polys = st.lists(st.tuples(_mono, st.integers(-5, 5)), max_size=4).map(
    lambda ts: sum((m.scale(c) for m, c in ts), CumulantPolynomial()))


def test_add_zero_and_double():
    p = K("a", 2) * K("b", 2)
    assert p + ZERO == p
    assert p + p == p.scale(2) == 2 * p
    assert (p - p).is_zero()


def test_monomial_from_blocks():
    assert CumulantPolynomial({monomial_from_blocks([2], [2]): 1}) == K("a", 2) * K("b", 2)
    m = monomial_from_blocks([1], [], ("a", 2, 2))
    assert CumulantPolynomial({m: 1}) == K("a", 2, 2) * K("a", 1)
    assert monomial_from_blocks([3], []) == monomial_from_blocks([3])


def test_second_order_symmetry():
    assert K("a", 2, 1) == K("a", 1, 2)
    spec = CumulantSpec(second={(2, 1): 5})
    assert K("a", 2, 1).evaluate(spec, CumulantSpec()) == 5
    assert K("a", 1, 2).evaluate(spec, CumulantSpec()) == 5
    assert K("a", 1, 2).to_latex() == "\\kappa_{1,2}^a"
    with pytest.raises(ValueError):
        CumulantSpec(second={(1, 2): 1, (2, 1): 2})


def test_evaluate():
    semi = CumulantSpec.semicircle()
    assert (K("a", 2) * K("b", 2)).scale(2).evaluate(semi, semi) == 2
    assert poly("3 a2 b1 + 4 a(2,2)").evaluate(CumulantSpec(), CumulantSpec()) == 0
    assert CumulantPolynomial.constant(7).evaluate(CumulantSpec(), CumulantSpec()) == 7
    a = CumulantSpec({1: "1/2", 3: 2}, {(1, 1): "-1/3"})
    b = CumulantSpec({1: 3})
    assert poly("2 a1^2 b1 + a(1,1) a3 - b1").evaluate(a, b) == Fraction(3, 2) - Fraction(2, 3) - 3


def test_latex():
    assert (K("a", 2) * K("b", 2)).scale(2).to_latex() == "2\\kappa_2^a\\kappa_2^b"
    assert ZERO.to_latex() == "0"
    assert poly("- a1^2 + b12").to_latex() == "-(\\kappa_1^a)^2 + \\kappa_{12}^b"
    assert poly("a3 - 2 b3").to_latex() == "\\kappa_3^a - 2\\kappa_3^b"


def test_json_shape():
    d = poly("2 a2 b2").to_dict()
    assert d == {"terms": [{"coeff": "2", "factors": [{"var": "a", "args": [2]}, {"var": "b", "args": [2]}]}]}


def test_bad_indeterminates():
    with pytest.raises(ValueError):
        K("c", 1)
    with pytest.raises(ValueError):
        K("a", 0)
    with pytest.raises(ValueError):
        K("a", 1, 2, 3)


@pytest.mark.parametrize("bad", [
    [], {"first": {"0": "1"}}, {"second": {"1": "1"}}, {"first": {"1": 0.5}},
    {"first": {"1": "x"}}, {"third": {}}, {"first": {"1": True}},
])
def test_spec_parse_errors(bad):
    with pytest.raises((ValueError, TypeError, ZeroDivisionError)):
        CumulantSpec.from_dict(bad)


def test_spec_parse():
    s = CumulantSpec.from_json('{"first": {"1": "1/2", "2": 3}, "second": {"2,2": "1", "1,2": "-2/4"}}')
    assert s.value(1) == Fraction(1, 2) and s.value(2) == 3 and s.value(5) == 0
    assert s.value(2, 1) == Fraction(-1, 2) and s.value(2, 2) == 1
    assert CumulantSpec.from_dict(s.to_dict()).to_dict() == s.to_dict()


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * CumulantPolynomial.constant(1) == p
    assert (p * ZERO).is_zero()


@given(polys)
def test_json_round_trip(p):
    assert CumulantPolynomial.from_json(p.to_json()) == p
    assert p.swap_variables().swap_variables() == p


@given(polys, st.integers(-3, 3))
def test_canonical_form(p, c):
    assert all(v != 0 for v in p.terms.values())
    rebuilt = CumulantPolynomial(dict(reversed(list(p.terms.items()))))
    assert rebuilt == p and rebuilt.to_latex() == p.to_latex() and hash(rebuilt) == hash(p)
    assert p.scale(c).is_zero() == (c == 0 or p.is_zero())

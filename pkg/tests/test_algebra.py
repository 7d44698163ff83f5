from fractions import Fraction

import pytest

from signedkl.algebra import (
    IntPolynomial,
    TruncatedCharacter,
    expand_inverse_factor,
    substitute_neg_q,
)

P = IntPolynomial.of
Q = IntPolynomial.q()
ONE = IntPolynomial.one()
ZERO = IntPolynomial.zero()


def test_add_cancels():
    assert P(1, 1) + P(1, -1) == P(2)


def test_mul_shift():
    assert P(1, 1) * Q == P(0, 1, 1)


def test_zero_absorbs():
    assert ZERO * P(1, 1) == ZERO
    assert (P(1) - P(1)).is_zero


def test_degree_additive():
    a, b = P(1, 2, 3), P(0, 0, 5)
    assert (a * b).degree == a.degree + b.degree


def test_substitute_neg_q():
    assert substitute_neg_q(P(1, 1)) == P(1, -1)
    assert substitute_neg_q(P(1, 0, 1)) == P(1, 0, 1)


def test_substitute_neg_q_involution():
    p = P(3, -2, 7, 1)
    assert p.substitute_neg_q().substitute_neg_q() == p


def test_mirror():
    assert P(1, 1).mirror(3) == P(0, 0, 1, 1)
    with pytest.raises(ValueError):
        P(1, 1, 1).mirror(1)


def test_shift_negative_rejected():
    with pytest.raises(ValueError):
        P(1).shift(-1)


def test_str():
    assert str(P(1, -1, 2)) == "1 - q + 2q^2"
    assert str(ZERO) == "0"


def _char(base, cutoff, terms):
    return TruncatedCharacter(tuple(Fraction(b) for b in base), cutoff, terms)


def test_expand_inverse_factor_geometric():
    # 1/(1 - e^-a): all ones down the string
    f = expand_inverse_factor(1, (1,), -1, 3)
    assert f.terms == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    # 1/(1 + e^-a): alternating
    g = expand_inverse_factor(1, (1,), +1, 2)
    assert g.terms == {(0,): 1, (1,): -1, (2,): 1}
    # height zero keeps only the constant term
    h = expand_inverse_factor(1, (1,), -1, 0)
    assert h.terms == {(0,): 1}


def test_expand_inverse_factor_multiplies_back_to_one():
    # (1 - e^-a) * expansion == 1 up to the cutoff
    cutoff = 5
    f = expand_inverse_factor(1, (1,), -1, cutoff)
    residual = {}
    for mu, c in f.terms.items():
        residual[mu] = residual.get(mu, 0) + c
        nu = (mu[0] + 1,)
        if nu[0] <= cutoff:
            residual[nu] = residual.get(nu, 0) - c
    assert {k: v for k, v in residual.items() if v} == {(0,): 1}


def test_truncated_multiplication_commutes():
    base = _char([0], 6, {(0,): 1})
    a = base.mul_geometric_factor((1,), 1).mul_geometric_factor((1,), -1)
    b = base.mul_geometric_factor((1,), -1).mul_geometric_factor((1,), 1)
    assert a == b


def test_translate_acts_on_base_only():
    c = _char([0, 0], 4, {(0, 0): 1, (1, 0): -1})
    t = c.translate((Fraction(1, 2), Fraction(0)))
    assert t.terms == c.terms
    assert t.base == (Fraction(1, 2), Fraction(0))


def test_rebase_drops_overflow():
    c = _char([0], 2, {(0,): 1, (1,): 5})
    r = c.rebase((Fraction(1),), (2,))
    assert r.terms == {(2,): 1}


def test_add_requires_same_base():
    a = _char([0], 3, {(0,): 1})
    b = _char([1], 3, {(0,): 1})
    with pytest.raises(ValueError):
        a.add(b)

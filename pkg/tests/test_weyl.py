from fractions import Fraction

import pytest

from signedkl.errors import ResourceLimitError
from signedkl.rootsystem import build_root_system
from signedkl.weyl import WeylGroup, integral_data

F = Fraction

ORDERS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120,
    ("B", 2): 8, ("B", 3): 48, ("B", 4): 384,
    ("C", 3): 48, ("C", 4): 384, ("D", 4): 192, ("G", 2): 12,
}


@pytest.fixture(scope="module")
def a2():
    return WeylGroup(build_root_system("A", 2))


@pytest.fixture(scope="module")
def a3():
    return WeylGroup(build_root_system("A", 3))


@pytest.fixture(scope="module")
def b3():
    return WeylGroup(build_root_system("B", 3))


@pytest.mark.parametrize("ct,rank", sorted(ORDERS))
def test_group_orders(ct, rank):
    group = WeylGroup(build_root_system(ct, rank))
    assert group.order == ORDERS[(ct, rank)]
    assert group.w0.length == len(group.positives)


def test_order_cap():
    with pytest.raises(ResourceLimitError):
        WeylGroup(build_root_system("B", 4), max_order=100)


def test_canonical_words_shortlex(a2):
    words = [a2.words[i] for i in range(a2.order)]
    # ids are assigned in ShortLex order of the canonical words
    assert words == sorted(words, key=lambda w: (len(w), w))
    assert [a2.format_word(a2.element(i)) for i in range(6)] == [
        "e", "1", "2", "12", "21", "121",
    ]


def test_word_round_trip(b3):
    for i in range(b3.order):
        x = b3.element(i)
        assert b3.parse_word(b3.format_word(x)) == x
        assert b3.from_word(x.word) == x
        assert x.length == len(x.word)


def test_multiplication_matches_words(a3):
    for i in range(0, a3.order, 3):
        for j in range(0, a3.order, 5):
            x, y = a3.element(i), a3.element(j)
            assert (x * y) == a3.from_word(x.word + y.word)
    for i in range(a3.order):
        x = a3.element(i)
        assert x * x.inverse() == a3.identity


def test_length_reversal_by_long_element(b3):
    w0 = b3.w0
    for i in range(b3.order):
        x = b3.element(i)
        assert (w0 * x).length == w0.length - x.length


def test_descent_dichotomy(a3):
    for i in range(a3.order):
        x = a3.element(i)
        for g in range(3):
            xs = a3.element(a3.right[i][g])
            assert abs(xs.length - x.length) == 1


def test_inversion_sets(a2):
    assert a2.inversion_set(a2.identity) == frozenset()
    assert a2.inversion_set(a2.w0) == frozenset(a2.positives)
    # length equals inversion count
    for i in range(a2.order):
        x = a2.element(i)
        assert len(a2.inversion_set(x)) == x.length


@pytest.mark.parametrize("ct,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)])
def test_inversion_set_word_formula_matches_sign_test(ct, rank):
    group = WeylGroup(build_root_system(ct, rank))
    for i in range(group.order):
        x = group.element(i)
        assert group.inversion_set_from_word(x) == group.inversion_set(x)


def test_inversion_example_s1s2_inverse(a2):
    # inversions of (s1 s2)^{-1}: s2 s1 sends a1 and a1+a2 negative
    w = a2.parse_word("12").inverse()
    assert a2.inversion_set(w) == frozenset({(1, 0), (1, 1)})
    assert a2.inversion_set_from_word(w) == a2.inversion_set(w)


# -- Bruhat order --------------------------------------------------------------


def subword_leq(group, x, y):
    """Independent subword característica: products of subsequences of a
    reduced word of y are exactly the elements below y."""
    reachable = {group.identity.idx}
    for g in y.word:
        reachable |= {group.right[i][g] for i in reachable}
    return x.idx in reachable


@pytest.mark.parametrize("ct,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)])
def test_bruhat_matches_subword_oracle(ct, rank):
    group = WeylGroup(build_root_system(ct, rank))
    for i in range(group.order):
        for j in range(group.order):
            x, y = group.element(i), group.element(j)
            assert group.bruhat_leq(x, y) == subword_leq(group, x, y), (i, j)


def test_bruhat_basics(a2):
    for i in range(a2.order):
        x = a2.element(i)
        assert a2.bruhat_leq(a2.identity, x)
        assert a2.bruhat_leq(x, x)
    assert a2.bruhat_leq(a2.parse_word("1"), a2.parse_word("21"))


# -- integral Weyl data ------------------------------------------------------------


def test_integral_full_group(a2):
    system = a2.system
    lam = tuple(-c for c in system.rho())
    data = integral_data(system, lam)
    assert set(data.delta_positive) == set(system.positive_roots)
    assert data.group.order == a2.order
    assert data.w0.length == a2.w0.length


def test_integral_empty():
    a1 = build_root_system("A", 1)
    data = integral_data(a1, (F(-1, 2),))
    assert data.delta_positive == ()
    assert data.group.order == 1


def test_integral_b2_half_integral():
    # lambda = -w1/2 - w2: the integral roots are the two orthogonal short
    # roots, an A1 x A1 subsystem (independent scan over all roots).
    b2 = build_root_system("B", 2)
    lam = (F(-1, 2), F(-1))
    expected = tuple(
        r for r in b2.positive_roots if b2.pairing(lam, r).denominator == 1
    )
    data = integral_data(b2, lam)
    assert data.delta_positive == expected == ((0, 1), (1, 1))
    assert b2.inner((0, 1), (1, 1)) == 0
    assert data.group.order == 4
    assert set(data.pi) == {(0, 1), (1, 1)}
    # closed under negation and own reflections
    all_roots = set(data.all_roots)
    assert {tuple(-c for c in r) for r in all_roots} == all_roots
    for a in all_roots:
        for b in all_roots:
            assert tuple(b2.reflect_lattice(a, b)) in all_roots

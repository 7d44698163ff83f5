from fractions import Fraction

import pytest

from signedkl.algebra import IntPolynomial
from signedkl.errors import UnsupportedLambdaError
from signedkl.kl import KLTable
from signedkl.rootsystem import build_root_system
from signedkl.skl import SKLTable, signed_level_coefficient, verify_main_theorem
from signedkl.weyl import WeylGroup, integral_data

F = Fraction
P = IntPolynomial.of


def neg_rho(rank):
    return tuple(F(-1) for _ in range(rank))


def all_gradings(rank):
    out = [frozenset()] + [frozenset({i}) for i in range(rank)]
    out.append(frozenset(range(rank)))
    return sorted(set(out), key=sorted)


@pytest.fixture(scope="module")
def a1_group():
    return WeylGroup(build_root_system("A", 1))


@pytest.fixture(scope="module")
def a2_group():
    return WeylGroup(build_root_system("A", 2))


def test_diagonal_and_support(a2_group):
    table = SKLTable(a2_group, neg_rho(2), frozenset({0}))
    for i in range(a2_group.order):
        x = a2_group.element(i)
        assert table.poly(x, x) == IntPolynomial.one()
    x, y = a2_group.parse_word("12"), a2_group.parse_word("1")
    assert table.poly(x, y).is_zero


def test_lambda_validation(a1_group):
    with pytest.raises(UnsupportedLambdaError):
        SKLTable(a1_group, (F(0),))           # singular
    with pytest.raises(UnsupportedLambdaError):
        SKLTable(a1_group, (F(1),))           # not antidominant
    with pytest.raises(UnsupportedLambdaError):
        SKLTable(a1_group, (F(-1, 2),))       # not integral for the generator


def test_a1_noncompact_value(a1_group):
    """The unique nontrivial rank-1 entry against an independent classical side."""
    table = SKLTable(a1_group, neg_rho(1), frozenset({0}))
    kl = KLTable(a1_group, "oracle")
    e, s = a1_group.identity, a1_group.parse_word("1")
    sign = table.grading_sign(e, s)
    assert sign == -1  # lambda - s(lambda) = -alpha, noncompact
    assert table.poly(e, s) == kl.poly(e, s).substitute_neg_q().scale(sign) == P(-1)


def test_all_compact_reduces_to_neg_q(a2_group):
    table = SKLTable(a2_group, neg_rho(2), frozenset())
    kl = KLTable(a2_group, "oracle")
    for i in range(a2_group.order):
        for j in range(a2_group.order):
            x, y = a2_group.element(i), a2_group.element(j)
            assert table.poly(x, y) == kl.poly(x, y).substitute_neg_q()


def test_main_sign_examples(a2_group):
    table = SKLTable(a2_group, neg_rho(2), frozenset({0}))
    e = a2_group.identity
    assert table.grading_sign(e, e) == 1
    compact = SKLTable(a2_group, neg_rho(2), frozenset())
    for i in range(a2_group.order):
        for j in range(a2_group.order):
            assert compact.grading_sign(a2_group.element(i), a2_group.element(j)) == 1


def test_descent_move_identities(a2_group):
    """Moving the first index across a descent of the second multiplies by
    the grading sign of the lambda-difference, on the right and the left."""
    table = SKLTable(a2_group, neg_rho(2), frozenset({1}))
    for j in range(a2_group.order):
        y = a2_group.element(j)
        for s in a2_group.descents_right(y):
            for i in range(a2_group.order):
                x = a2_group.element(i)
                xs = a2_group.element(a2_group.right[i][s])
                sign = table.grading_sign(x, xs)
                assert table.poly(x, y) == table.poly(xs, y).scale(sign)
        for g in range(a2_group.n_gen):
            sy = a2_group.from_word((g,)) * y
            if sy.length > y.length:
                continue
            for i in range(a2_group.order):
                x = a2_group.element(i)
                sx = a2_group.from_word((g,)) * x
                sign = table.grading_sign(x, sx)
                assert table.poly(x, y) == table.poly(sx, y).scale(sign)


@pytest.mark.parametrize("ct,rank", [("A", 1), ("A", 2), ("B", 2), ("G", 2)])
def test_main_identity_small_systems(ct, rank):
    group = WeylGroup(build_root_system(ct, rank))
    for nc in all_gradings(rank):
        report = verify_main_theorem(group, neg_rho(rank), nc)
        assert report["mismatches"] == 0, (ct, rank, nc)
        assert report["pairs_checked"] == group.order ** 2


def test_main_identity_second_lambda(a2_group):
    lam = (F(-2), F(-1))  # -rho - omega_1: regular integral antidominant
    for nc in all_gradings(2):
        report = verify_main_theorem(a2_group, lam, nc)
        assert report["mismatches"] == 0


def test_main_identity_partial_integral():
    b2 = build_root_system("B", 2, {0})
    lam = (F(-1, 2), F(-1))
    data = integral_data(b2, lam)
    assert data.group.order == 4
    report = verify_main_theorem(data.group, lam)
    assert report["mismatches"] == 0


def test_semantic_convention_fails_where_grading_breaks_symmetry(a2_group):
    """Negative control: the alternate sign reading must be caught."""
    report = verify_main_theorem(
        a2_group, neg_rho(2), frozenset({0}), a_sign_convention="semantic"
    )
    assert report["mismatches"] > 0
    assert report["a_sign_convention"] == "semantic"


def test_signed_coefficients_bounded_by_classical(a2_group):
    """|signed level coefficients| equal the classical multiplicities."""
    kl = KLTable(a2_group, "oracle")
    for nc in all_gradings(2):
        skl = SKLTable(a2_group, neg_rho(2), nc)
        for i in range(a2_group.order):
            for j in range(a2_group.order):
                x, y = a2_group.element(i), a2_group.element(j)
                signed = skl.poly(x, y)
                classical = kl.poly(x, y)
                for k in range(max(signed.degree, classical.degree) + 1):
                    assert abs(signed.coeff(k)) == abs(classical.coeff(k))


def test_signed_level_coefficient_matches_table_slot(a2_group):
    """The product formula agrees with the j=1 slot of the signed table."""
    kl = KLTable(a2_group, "recursion")
    for nc in all_gradings(2):
        skl = SKLTable(a2_group, neg_rho(2), nc)
        w0 = a2_group.w0
        for i in range(a2_group.order):
            for j in range(a2_group.order):
                z, y = a2_group.element(i), a2_group.element(j)
                d = z.length - y.length - 1
                expected = signed_level_coefficient(skl, kl, z, y)
                if d < 0 or d % 2:
                    assert expected == 0
                    continue
                slot = skl.poly(w0 * z, w0 * y).coeff(d // 2)
                assert expected == slot, (nc, i, j)


def test_report_schema(a1_group):
    report = verify_main_theorem(a1_group, neg_rho(1), frozenset({0}))
    assert set(report) >= {
        "system", "grading", "lambda", "pairs", "mismatches",
        "pairs_checked", "a_sign_convention", "notes",
    }
    assert report["pairs_checked"] == 4
    row = report["pairs"][0]
    assert set(row) == {"x", "y", "skl", "kl_neg_q", "sign", "match"}


def test_verify_jobs_flag_is_deterministic(a2_group):
    a = verify_main_theorem(a2_group, neg_rho(2), frozenset({0}), jobs=1)
    b = verify_main_theorem(a2_group, neg_rho(2), frozenset({0}), jobs=4)
    assert a == b

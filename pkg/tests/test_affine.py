from fractions import Fraction

import pytest

from signedkl.affine import (
    AffineElt,
    affine_identity,
    affine_reflection,
    alcove_barycenter,
    alcove_of,
    fundamental_alcove_vertices,
    gallery,
    meets_chamber,
    projections,
    separating_wall,
)
from signedkl.errors import DegenerateWeightError, PathError
from signedkl.rootsystem import build_root_system
from signedkl.weyl import WeylGroup

F = Fraction


@pytest.fixture(scope="module")
def a1():
    system = build_root_system("A", 1)
    return system, WeylGroup(system)


@pytest.fixture(scope="module")
def a2():
    system = build_root_system("A", 2)
    return system, WeylGroup(system)


@pytest.fixture(scope="module")
def b2():
    system = build_root_system("B", 2)
    return system, WeylGroup(system)


def test_fundamental_alcove_antidominant(a2):
    system, group = a2
    bary = alcove_barycenter(system, affine_identity(group))
    for gamma in system.positive_roots:
        assert -1 < system.pairing(bary, gamma) < 0


# -- meets_chamber ----------------------------------------------------------------


def test_meets_chamber_examples(a2):
    system, group = a2
    e = group.identity
    s1 = group.parse_word("1")
    assert not meets_chamber(system, group, (1, 0), 1, e)
    assert meets_chamber(system, group, (1, 0), 1, s1)
    assert not meets_chamber(system, group, (1, 0), 0, s1)


@pytest.mark.parametrize("ct,rank", [("A", 1), ("A", 2), ("B", 2), ("A", 3)])
def test_meets_chamber_against_point_oracle(ct, rank):
    # The functional (., gamma^vee) is scale-equivariant on the open cone,
    # so one exact interior point decides each (gamma, N, s).
    system = build_root_system(ct, rank)
    group = WeylGroup(system)
    interior = tuple(-F(17 + 3 * i, 16) for i in range(rank))
    for s in group.elements():
        point = s.apply_weight(interior)
        for gamma in system.positive_roots:
            value = system.pairing(point, gamma)
            for n in range(-3, 4):
                expected = n != 0 and (n > 0) == (value > 0)
                # exact witness when the signs allow it
                if expected:
                    witness = tuple(c * F(n) / value for c in point)
                    assert system.pairing(witness, gamma) == n
                assert meets_chamber(system, group, gamma, n, s) == expected


# -- alcove_of ---------------------------------------------------------------------


def test_alcove_of_identity_region(a2):
    system, group = a2
    lam = (F(-1, 3), F(-1, 3))
    assert alcove_of(system, group, lam) == affine_identity(group)


def test_alcove_of_rank1_translation(a1):
    system, group = a1
    u = alcove_of(system, group, (F(3, 2),))
    # membership check: the alcove's interior pairings straddle 3/2
    bary = alcove_barycenter(system, u)
    assert 1 < system.pairing(bary, (1,)) < 2
    assert u.t == (1,)


def test_alcove_of_degenerate(a2):
    system, group = a2
    with pytest.raises(DegenerateWeightError):
        alcove_of(system, group, (F(-1, 2), F(-1, 2)))  # pairing -1 with theta


def test_alcove_of_membership_random(b2):
    system, group = b2
    weights = [
        (F(3, 2), F(1, 5)), (F(-5, 7), F(9, 4)), (F(12, 5), F(-13, 9)),
        (F(1, 3), F(1, 7)), (F(-8, 3), F(-1, 5)),
    ]
    for lam in weights:
        u = alcove_of(system, group, lam)
        inv = u.inverse()
        folded = inv.act_weight(lam)
        for gamma in system.positive_roots:
            assert -1 < system.pairing(folded, gamma) < 0


# -- projections ------------------------------------------------------------------


def test_projections_identity(a2):
    system, group = a2
    bar, tilde = projections(system, group, affine_identity(group))
    assert bar == group.identity and tilde == group.identity


def test_projection_bar_is_finite_part(a1):
    system, group = a1
    u = AffineElt(group.identity, (-1,))
    bar, _ = projections(system, group, u)
    assert bar == group.identity


def test_projection_tilde_rank1(a1):
    system, group = a1
    u = alcove_of(system, group, (F(3, 2),))
    _, tilde = projections(system, group, u)
    assert tilde == group.parse_word("1")


def test_tilde_chamber_contains_alcove(b2):
    system, group = b2
    for lam in [(F(3, 2), F(1, 5)), (F(-5, 7), F(9, 4)), (F(7, 3), F(8, 5))]:
        u = alcove_of(system, group, lam)
        _, tilde = projections(system, group, u)
        folded = tilde.inverse().apply_weight(alcove_barycenter(system, u))
        for i in range(system.rank):
            assert folded[i] < 0


# -- galleries ----------------------------------------------------------------------


def test_gallery_trivial(a2):
    system, group = a2
    gal = gallery(system, group, affine_identity(group))
    assert gal.length == 0
    assert gal.alcoves == (affine_identity(group),)


def test_gallery_rank1_single_crossing(a1):
    system, group = a1
    u = alcove_of(system, group, (F(3, 2),))
    gal = gallery(system, group, u)
    assert gal.length == 1
    assert gal.hyperplanes == (((1,), 1),)


def test_gallery_two_crossings_a2(a2):
    system, group = a2
    lam = (F(3, 2), F(1, 5))
    u = alcove_of(system, group, lam)
    gal = gallery(system, group, u)
    assert gal.length == 2
    assert set(gal.hyperplanes) == {((1, 0), 1), ((1, 1), 1)}


def test_gallery_endpoints_and_steps(b2):
    system, group = b2
    for lam in [(F(3, 2), F(1, 5)), (F(12, 5), F(4, 3)), (F(-5, 7), F(9, 4))]:
        u = alcove_of(system, group, lam)
        gal = gallery(system, group, u)
        _, tilde = projections(system, group, u)
        assert gal.alcoves[0] == u
        assert gal.alcoves[-1] == AffineElt(tilde, (0, 0))
        # consecutive barycenters sit on opposite sides of the crossed wall
        for (gamma, n), a, b in zip(gal.hyperplanes, gal.alcoves, gal.alcoves[1:]):
            va = system.pairing(alcove_barycenter(system, a), gamma)
            vb = system.pairing(alcove_barycenter(system, b), gamma)
            assert (va - n) * (vb - n) < 0
        # crossings serialize in order
        assert gal.crossings_json() == [
            {"root": list(g), "level": n} for g, n in gal.hyperplanes
        ]


def test_separating_wall(b2):
    system, group = b2
    u = alcove_of(system, group, (F(3, 2), F(1, 5)))
    gal = gallery(system, group, u)
    gamma, n, side = separating_wall(system, gal.alcoves[0], gal.alcoves[1])
    assert (gamma, n) == gal.hyperplanes[0]
    assert side == 1  # the start alcove is above its first wall going inward
    with pytest.raises(PathError):
        separating_wall(system, gal.alcoves[0], gal.alcoves[0])
    if gal.length >= 2:
        with pytest.raises(PathError):
            separating_wall(system, gal.alcoves[0], gal.alcoves[2])


def test_affine_composition_and_inverse(a2):
    system, group = a2
    r = affine_reflection(group, (1, 1), 2)
    s = affine_reflection(group, (1, 0), -1)
    lam = (F(3, 7), F(-2, 9))
    assert r.compose(s).act_weight(lam) == r.act_weight(s.act_weight(lam))
    assert r.compose(r.inverse()) == affine_identity(group)
    assert r.inverse().compose(r) == affine_identity(group)

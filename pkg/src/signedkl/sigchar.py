"""Truncated signature characters of Verma modules.

Three routes are implemented and cross-checked: the closed product
formula valid on the region below all reducibility walls, iterated
one-wall crossings along a gallery, and the alcove-path subset sum that
unrolls those crossings.  Signs for crossings always come from
signs.epsilon_hyperplane with the chamber supplied by the affine
projections.  A rank-1 Gram-sign oracle pins the conventions: the level-n
norm obeys <F^n v, F^n v> = c n ((lambda,a^vee) - n) <F^(n-1) v, ...>
with c = +1 for a compact root and c = -1 for a noncompact one, as forced
by invariance against the real form's conjugation.
"""

from __future__ import annotations

from fractions import Fraction

from .affine import (
    AffineElt,
    alcove_of,
    gallery,
    projections,
    separating_wall,
)
from .algebra import LatticeVector, TruncatedCharacter, Weight, height
from .errors import DomainError, PathError
from .rootsystem import RootSystem
from .signs import epsilon_hyperplane
from .weyl import WeylElt, WeylGroup


# -- rank-1 oracle --------------------------------------------------------------


def sl2_gram_sign(system: RootSystem, lam: Weight, n: int) -> int:
    """Sign of the n-th lowering-string norm in the rank-1 Verma."""
    if system.rank != 1:
        raise DomainError("Gram oracle is rank-1 only")
    if n < 0:
        raise DomainError("level must be nonnegative")
    a = system.pairing(lam, system.simple_root(0))
    compact = 0 not in system.noncompact
    sign = 1
    for k in range(1, n + 1):
        factor = a - k if compact else k - a
        if factor == 0:
            return 0
        sign *= 1 if factor > 0 else -1
    return sign


# -- product formula -------------------------------------------------------------


def base_region_series(system: RootSystem, mu: Weight, cutoff: int) -> TruncatedCharacter:
    """The formal series e^(mu-rho) / prod_k (1+e^-a) prod_p (1-e^-a).

    Compact positive roots contribute alternating factors, noncompact
    ones geometric factors.  This is the signature character exactly when
    mu lies below every reducibility wall; elsewhere it is the formal
    building block of the alcove-path sum.
    """
    base = tuple(m - r for m, r in zip(mu, system.rho()))
    out = TruncatedCharacter(base, cutoff, {tuple([0] * system.rank): 1})
    for gamma in system.positive_roots:
        sign = 1 if system.epsilon_grading(gamma) else -1
        # grading 1 (noncompact): 1/(1 - e^-gamma); grading 0: 1/(1 + e^-gamma)
        out = out.mul_geometric_factor(gamma, 1 if sign == 1 else -1)
    return out


def wallach_character(system: RootSystem, lam: Weight, cutoff: int) -> TruncatedCharacter:
    """Signature character on the region (lam, alpha^vee) < 1 for all alpha > 0."""
    for gamma in system.positive_roots:
        if system.pairing(lam, gamma) >= 1:
            raise DomainError(
                "lambda is outside the region below all reducibility walls"
            )
    return base_region_series(system, lam, cutoff)


# -- crossing signs ----------------------------------------------------------------


def adjacent_alcove_sign(
    system: RootSystem, group: WeylGroup, a: AffineElt, b: AffineElt
) -> tuple[int, LatticeVector, int]:
    """(epsilon, gamma, n) for adjacent alcoves a, b.

    epsilon is the crossing sign oriented from b to a: zero unless the
    separating wall is a reducibility wall, in which case it is the
    chamber sign when a is on the positive side and its negative when a
    is on the negative side.
    """
    gamma, n, side = separating_wall(system, a, b)
    if n <= 0:
        return 0, gamma, n
    _, chamber = projections(system, group, a)
    eps = epsilon_hyperplane(system, group, gamma, n, chamber)
    return side * eps, gamma, n


# -- iterated wall crossing ---------------------------------------------------------


def signature_character_by_crossings(
    system: RootSystem, group: WeylGroup, lam: Weight, cutoff: int,
    _memo: dict | None = None,
) -> TruncatedCharacter:
    """ch_s by crossing one wall at a time toward the base region."""
    if _memo is None:
        _memo = {}
    key = tuple(lam)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if all(system.pairing(lam, g) < 1 for g in system.positive_roots):
        out = base_region_series(system, lam, cutoff)
        _memo[key] = out
        return out

    start = alcove_of(system, group, lam)
    gal = gallery(system, group, start)
    r1 = gal.reflections[0]
    gamma, n = gal.hyperplanes[0]
    lam_in = r1.act_weight(lam)
    eps, _, _ = adjacent_alcove_sign(system, group, gal.alcoves[0], gal.alcoves[1])

    inner = signature_character_by_crossings(system, group, lam_in, cutoff, _memo)
    delta = tuple(a - b for a, b in zip(lam, lam_in))
    # Translation moves the base from lam_in - rho to lam - rho exactly.
    out = inner.translate(delta)
    if eps != 0:
        lam_refl = _subtract_root(system, lam, gamma, n)
        term = signature_character_by_crossings(system, group, lam_refl, cutoff, _memo)
        term = term.rebase(out.base, _offset(system, term.base, lam))
        out = out.add(term.scale(2 * eps))
    _memo[key] = out
    return out


def _subtract_root(system: RootSystem, lam: Weight, gamma: LatticeVector, n: int) -> Weight:
    g_fw = system.root_to_weight(gamma)
    return tuple(l - n * c for l, c in zip(lam, g_fw))


def _offset(system: RootSystem, old_base: Weight, lam: Weight) -> LatticeVector:
    """Lattice offset moving old_base to lam - rho."""
    target = tuple(l - r for l, r in zip(lam, system.rho()))
    diff = tuple(t - b for t, b in zip(target, old_base))
    return system.weight_to_lattice(diff)


def wall_cross(
    system: RootSystem,
    group: WeylGroup,
    chs: TruncatedCharacter,
    lam_from: Weight,
    lam_to: Weight,
    wall: tuple[LatticeVector, int],
    eps: int,
    cutoff: int,
) -> TruncatedCharacter:
    """One-wall update: translate chs from lam_from to lam_to and add the
    reflected-Verma correction 2*eps across the given wall.

    The segment from lam_from to lam_to must cross exactly the given
    wall; eps = 0 turns the update into a pure translation.
    """
    gamma, n = wall
    crossed = []
    for g in system.positive_roots:
        a0, a1 = system.pairing(lam_from, g), system.pairing(lam_to, g)
        lo, hi = min(a0, a1), max(a0, a1)
        k = _floor_plus_one(lo)
        while k < hi:
            crossed.append((g, k))
            k += 1
    if crossed != [(tuple(gamma), n)]:
        raise PathError(f"segment crosses {crossed}, not exactly {(gamma, n)}")

    delta = tuple(a - b for a, b in zip(lam_to, lam_from))
    out = chs.translate(delta)
    out = out.rebase(
        tuple(l - r for l, r in zip(lam_to, system.rho())),
        _offset(system, out.base, lam_to),
    )
    if eps != 0:
        lam_refl = _subtract_root(system, lam_to, gamma, n)
        term = signature_character_by_crossings(system, group, lam_refl, cutoff)
        term = term.rebase(out.base, _offset(system, term.base, lam_to))
        out = out.add(term.scale(2 * eps))
    return out


def _floor_plus_one(x: Fraction) -> int:
    import math

    return math.floor(x) + 1


# -- alcove-path subset sum -----------------------------------------------------------


def signature_character_alcove_sum(
    system: RootSystem, group: WeylGroup, lam: Weight, cutoff: int,
    variant: int = 0, audit: list | None = None,
) -> TruncatedCharacter:
    """ch_s as the subset sum over a gallery from lam's alcove to the
    base alcove of its chamber.

    Each subset I of crossing indices contributes
    eps(I) * 2^|I| * R(finite-part(r_{i1}...r_{ik}) applied to
    r_{ik}(...r_{i1}(lam))), where eps(I) multiplies the adjacent-alcove
    signs of the gallery transported by the finite parts of the earlier
    reflections.  ``audit`` collects per-subset records when provided.
    """
    start = alcove_of(system, group, lam)
    gal = gallery(system, group, start, variant=variant)
    ell = gal.length
    if ell > 16:
        raise PathError("gallery too long for subset enumeration")

    target_base = tuple(l - r for l, r in zip(lam, system.rho()))
    total = TruncatedCharacter(target_base, cutoff, {})

    for mask in range(1 << ell):
        subset = [i for i in range(ell) if mask >> i & 1]
        eps_product = 1
        prefix = group.identity
        for i in subset:
            outer = _finite_compose(prefix, gal.alcoves[i])
            inner = _finite_compose(prefix, gal.alcoves[i + 1])
            eps, _, _ = adjacent_alcove_sign(system, group, outer, inner)
            eps_product *= eps
            if eps_product == 0:
                break
            prefix = prefix * gal.reflections[i].w
        if eps_product == 0:
            continue
        point = lam
        finite = group.identity
        for i in subset:
            point = gal.reflections[i].act_weight(point)
        for i in subset:
            finite = finite * gal.reflections[i].w
        mu = finite.apply_weight(point)
        term = base_region_series(system, mu, cutoff)
        coeff = eps_product * (1 << len(subset))
        term = term.rebase(target_base, _offset(system, term.base, lam))
        if audit is not None:
            audit.append(
                {
                    "subset": [i + 1 for i in subset],
                    "eps": eps_product,
                    "coeff": coeff,
                    "parameter": [str(c) for c in mu],
                }
            )
        total = total.add(term.scale(coeff))
    return total


def _finite_compose(prefix: WeylElt, alcove: AffineElt) -> AffineElt:
    zero = tuple([0] * len(alcove.t))
    return AffineElt(prefix, zero).compose(alcove)


# -- Jantzen bookkeeping ----------------------------------------------------------------


def jantzen_signature_split(
    levels: list[tuple[int, int]]
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Signatures on the two sides of a degeneration point.

    Given (p_j, q_j) per filtration level, the positive side sums levels
    directly; the negative side swaps p and q on odd levels.
    """
    for p, q in levels:
        if p < 0 or q < 0:
            raise DomainError("signature entries must be nonnegative")
    pos = (sum(p for p, _ in levels), sum(q for _, q in levels))
    neg_p = sum(p if j % 2 == 0 else q for j, (p, q) in enumerate(levels))
    neg_q = sum(q if j % 2 == 0 else p for j, (p, q) in enumerate(levels))
    return pos, (neg_p, neg_q)

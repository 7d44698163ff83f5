"""Affine hyperplanes, alcoves, bar/tilde projections, and galleries.

Affine Weyl group elements are pairs (w, t): a finite Weyl element and a
root-lattice translation, acting on weights by mu -> w(mu) + t.  The
fundamental alcove A0 is antidominant: -1 < (mu, alpha^vee) < 0 for every
positive root alpha.  Galleries walk a straight segment between alcove
barycenters, with a deterministic rational perturbation to dodge faces of
codimension two or more.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateWeightError, DomainError, PathError
from .rootsystem import LatticeVector, RootSystem, Weight
from .weyl import WeylElt, WeylGroup


@dataclass(frozen=True)
class AffineElt:
    """Affine Weyl group element mu -> w(mu) + t, t in the root lattice."""

    w: WeylElt
    t: LatticeVector

    def act_weight(self, mu: Weight) -> Weight:
        system = self.w.group.system
        out = self.w.apply_weight(mu)
        t_fw = system.root_to_weight(self.t)
        return tuple(a + b for a, b in zip(out, t_fw))

    def compose(self, other: "AffineElt") -> "AffineElt":
        """(self о other)(mu) = self(other(mu))."""
        w = self.w * other.w
        t2 = self.w.apply_root(other.t)
        t = tuple(a + b for a, b in zip(t2, self.t))
        return AffineElt(w, t)

    def inverse(self) -> "AffineElt":
        winv = self.w.inverse()
        t = tuple(-c for c in winv.apply_root(self.t))
        return AffineElt(winv, t)

    @property
    def key(self) -> tuple:
        return (self.w.idx, self.t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineElt):
            return NotImplemented
        return self.w == other.w and self.t == other.t

    def __hash__(self) -> int:
        return hash((self.w, self.t))


def affine_identity(group: WeylGroup) -> AffineElt:
    return AffineElt(group.identity, tuple([0] * group.system.rank))


def affine_reflection(group: WeylGroup, gamma: LatticeVector, n: int) -> AffineElt:
    """Reflection through the hyperplane (mu, gamma^vee) = n."""
    system = group.system
    if not system.is_root(gamma):
        raise DomainError(f"{gamma} is not a root")
    m = _reflection_elt(group, gamma)
    return AffineElt(m, tuple(n * c for c in gamma))


def _reflection_elt(group: WeylGroup, gamma: LatticeVector) -> WeylElt:
    from .weyl import _reflection_matrix

    return group.element_from_matrix(_reflection_matrix(group.system, gamma))


def normalize_hyperplane(gamma: LatticeVector, n: int) -> tuple[LatticeVector, int]:
    """Flip (gamma, n) so the root is positive."""
    if sum(gamma) < 0:
        return tuple(-c for c in gamma), -n
    return tuple(gamma), n


# -- fundamental alcove -------------------------------------------------------


def affine_wall_root(system: RootSystem) -> LatticeVector:
    """The root whose coroot is highest: it cuts the affine wall of A0.

    The coroot height of gamma is pairing(rho, gamma), so the maximizer is
    the highest short root; for simply-laced types it is the highest root.
    """
    return max(system.positive_roots, key=lambda g: system.pairing(system.rho(), g))


def fundamental_alcove_vertices(system: RootSystem) -> tuple[Weight, ...]:
    """Vertices of the antidominant alcove: 0 and -omega_i / m_i^vee."""
    theta = affine_wall_root(system)
    verts: list[Weight] = [tuple(Fraction(0) for _ in range(system.rank))]
    for i in range(system.rank):
        omega = tuple(
            Fraction(1) if j == i else Fraction(0) for j in range(system.rank)
        )
        comark = system.pairing(omega, theta)
        if comark.denominator != 1 or comark <= 0:
            raise DomainError("comark must be a positive integer")
        verts.append(tuple(-x / comark for x in omega))
    return tuple(verts)


def alcove_point(system: RootSystem, aff: AffineElt, weights: tuple[int, ...] | None = None) -> Weight:
    """A deterministic interior point of aff(A0): weighted vertex average."""
    verts = fundamental_alcove_vertices(system)
    if weights is None:
        weights = tuple(1 for _ in verts)
    total = sum(weights)
    base = tuple(
        sum(w * v[j] for w, v in zip(weights, verts)) / total
        for j in range(system.rank)
    )
    return aff.act_weight(base)


def alcove_barycenter(system: RootSystem, aff: AffineElt) -> Weight:
    return alcove_point(system, aff)


# -- chamber predicates -------------------------------------------------------


def meets_chamber(system: RootSystem, group: WeylGroup, gamma: LatticeVector,
                  n: int, s: WeylElt) -> bool:
    """Whether H_{gamma,n} intersects the open chamber s C0.

    On s C0 the functional (., gamma^vee) has the constant sign opposite
    to that of s^{-1} gamma and takes every value of that sign, so for
    n > 0 the hyperplane meets the chamber iff gamma is an inversion of
    s^{-1}; level-0 walls are chamber walls, never interior.  No sampling:
    the sign test is exact.
    """
    gamma, n = normalize_hyperplane(gamma, n)
    if not system.is_positive_root(gamma):
        raise DomainError(f"{gamma} is not a positive root")
    if n == 0:
        return False
    inverted = sum(s.inverse().apply_root(gamma)) < 0
    return inverted if n > 0 else not inverted


def chamber_of(system: RootSystem, group: WeylGroup, mu: Weight) -> WeylElt:
    """The s with mu in s C0, for mu off all chamber walls."""
    current = mu
    acc = group.identity
    for _ in range(2 * len(system.positive_roots) + 2):
        for i in range(system.rank):
            c = current[i]
            if c > 0:
                current = system.simple_reflect_weight(i, current)
                acc = group.from_word((i,)) * acc
                break
        else:
            if any(c == 0 for c in current):
                raise DegenerateWeightError(f"{mu} lies on a chamber wall")
            return acc.inverse()
    raise DegenerateWeightError(f"chamber folding failed for {mu}")


# -- alcove of a weight -------------------------------------------------------


def alcove_of(system: RootSystem, group: WeylGroup, lam: Weight) -> AffineElt:
    """The unique affine element u with lam in u(A0).

    Raises DegenerateWeightError when lam lies on an affine hyperplane.
    """
    for gamma in system.positive_roots:
        if system.pairing(lam, gamma).denominator == 1:
            raise DegenerateWeightError(
                f"lambda lies on an affine hyperplane for root {gamma}"
            )
    theta = affine_wall_root(system)
    current = lam
    acc = affine_identity(group)
    # Fold into A0: r_k ... r_1 lam in A0, then u = (r_k ... r_1)^{-1}.
    for _ in range(10000):
        moved = False
        for i in range(system.rank):
            if current[i] > 0:
                current = system.simple_reflect_weight(i, current)
                acc = AffineElt(group.from_word((i,)), tuple([0] * system.rank)).compose(acc)
                moved = True
                break
        if moved:
            continue
        if system.pairing(current, theta) < -1:
            r = affine_reflection(group, theta, -1)
            current = r.act_weight(current)
            acc = r.compose(acc)
            continue
        break
    else:  # pragma: no cover
        raise DegenerateWeightError("alcove folding failed to terminate")
    u = acc.inverse()
    return u


# -- projections --------------------------------------------------------------


def projections(system: RootSystem, group: WeylGroup, u: AffineElt) -> tuple[WeylElt, WeylElt]:
    """(bar, tilde): the finite part and the chamber containing u(A0)."""
    bar = u.w
    tilde = chamber_of(system, group, alcove_barycenter(system, u))
    return bar, tilde


# -- galleries ----------------------------------------------------------------


@dataclass(frozen=True)
class Gallery:
    """Alcove path C_0 .. C_l with the reflections and walls crossed."""

    alcoves: tuple[AffineElt, ...]
    reflections: tuple[AffineElt, ...]
    hyperplanes: tuple[tuple[LatticeVector, int], ...]

    @property
    def length(self) -> int:
        return len(self.reflections)

    def crossings_json(self) -> list[dict]:
        return [
            {"root": list(g), "level": n} for g, n in self.hyperplanes
        ]


def _segment_crossings(
    system: RootSystem, p0: Weight, p1: Weight
) -> list[tuple[Fraction, LatticeVector, int]]:
    """All (t, gamma, n) with (p(t), gamma^vee) = n, 0 < t < 1."""
    crossings = []
    for gamma in system.positive_roots:
        a0 = system.pairing(p0, gamma)
        a1 = system.pairing(p1, gamma)
        if a0 == a1:
            continue
        lo, hi = min(a0, a1), max(a0, a1)
        n = math.floor(lo) + 1
        while n < hi:
            t = (Fraction(n) - a0) / (a1 - a0)
            if 0 < t < 1:
                crossings.append((t, gamma, n))
            n += 1
    crossings.sort(key=lambda c: c[0])
    return crossings


def gallery(system: RootSystem, group: WeylGroup, start: AffineElt,
            end: AffineElt | None = None, variant: int = 0) -> Gallery:
    """Gallery from start(A0) to the base alcove of its chamber.

    The walk follows the straight segment between interior points of the
    two alcoves; the points are deterministic weighted vertex averages,
    re-mixed with a shrinking rational step whenever the segment fails to
    cross walls one at a time.  ``variant`` switches to a second fixed
    perturbation family for path-independence checks.
    """
    if end is None:
        _, tilde = projections(system, group, start)
        end = AffineElt(tilde, tuple([0] * system.rank))
    nverts = system.rank + 1
    base_w0 = tuple(1 for _ in range(nverts))
    mix0 = tuple(range(2, nverts + 2)) if variant == 0 else tuple(range(nverts + 1, 1, -1))
    mix1 = tuple(reversed(mix0))

    for attempt in range(12):
        eta = Fraction(1, 13 * 2 ** attempt)
        p0 = _mixed_point(system, start, base_w0, mix0, eta)
        p1 = _mixed_point(system, end, base_w0, mix1, eta)
        crossings = _segment_crossings(system, p0, p1)
        ts = [t for t, _, _ in crossings]
        if len(set(ts)) == len(ts):
            break
    else:  # pragma: no cover
        raise PathError("could not find a generic segment between alcoves")

    alcoves = [start]
    reflections = []
    walls = []
    for _, gamma, n in crossings:
        r = affine_reflection(group, gamma, n)
        reflections.append(r)
        walls.append((gamma, n))
        alcoves.append(r.compose(alcoves[-1]))
    if alcoves[-1] != end:
        raise PathError("gallery did not end at the chamber base alcove")
    return Gallery(tuple(alcoves), tuple(reflections), tuple(walls))


def _mixed_point(system: RootSystem, aff: AffineElt, w_base: tuple[int, ...],
                 w_mix: tuple[int, ...], eta: Fraction) -> Weight:
    p = alcove_point(system, aff, w_base)
    q = alcove_point(system, aff, w_mix)
    return tuple(a + eta * (b - a) for a, b in zip(p, q))


def separating_wall(
    system: RootSystem, a: AffineElt, b: AffineElt
) -> tuple[LatticeVector, int, int]:
    """The unique wall between adjacent alcoves, plus which side ``a`` is on.

    Returns (gamma, n, side) with gamma > 0 and side = +1 when a's interior
    satisfies (., gamma^vee) > n.
    """
    pa = alcove_barycenter(system, a)
    pb = alcove_barycenter(system, b)
    found = None
    for gamma in system.positive_roots:
        va = system.pairing(pa, gamma)
        vb = system.pairing(pb, gamma)
        lo, hi = min(va, vb), max(va, vb)
        n = math.floor(lo) + 1
        while n < hi:
            if found is not None:
                raise PathError("alcoves are not adjacent")
            found = (gamma, n, 1 if va > n else -1)
            n += 1
    if found is None:
        raise PathError("alcoves are not separated by any wall")
    return found

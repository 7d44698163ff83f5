"""Finite root systems of types A-G at small rank, with exact arithmetic.

Roots live in simple-root coordinates (integer tuples); weights live in
fundamental-weight coordinates (Fraction tuples), so coroot pairings are
rational dot products against the Cartan matrix.  The compact/noncompact
Z2-grading is input data on the simple roots and extends additively to
the whole root lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from .errors import ConfigError, DomainError, ResourceLimitError

LatticeVector = tuple[int, ...]
Weight = tuple[Fraction, ...]

# Supported (type, rank) combinations; rank caps keep |W| <= 1152.
SUPPORTED_RANKS = {
    "A": (1, 2, 3, 4),
    "B": (2, 3, 4),
    "C": (3, 4),
    "D": (4,),
    "G": (2,),
}


def cartan_matrix(cartan_type: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries A[i][j] = <alpha_i, alpha_j^vee>.

    Bourbaki numbering.  For G2 the first simple root is the long one.
    """
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(i: int, j: int) -> None:
        a[i][j] = -1
        a[j][i] = -1

    if cartan_type == "A":
        for i in range(rank - 1):
            chain(i, i + 1)
    elif cartan_type == "B":
        # alpha_rank is the short root.
        for i in range(rank - 1):
            chain(i, i + 1)
        a[rank - 2][rank - 1] = -2
    elif cartan_type == "C":
        # alpha_rank is the long root.
        for i in range(rank - 1):
            chain(i, i + 1)
        a[rank - 1][rank - 2] = -2
    elif cartan_type == "D":
        for i in range(rank - 3):
            chain(i, i + 1)
        chain(rank - 3, rank - 2)
        chain(rank - 3, rank - 1)
    elif cartan_type == "G":
        a[0][1] = -3
        a[1][0] = -1
    else:
        raise ConfigError(f"unsupported Cartan type {cartan_type!r}")
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Positive integers d with d_i * A[i][j] == d_j * A[j][i]."""
    n = len(cartan)
    d = [0] * n
    d[0] = 1
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if cartan[i][j] == 0 or d[i] == 0 or d[j] != 0:
                    continue
                # (alpha_i, alpha_j) symmetric forces d_j A[i][j] == d_i A[j][i].
                num = d[i] * cartan[j][i]
                if num % cartan[i][j]:
                    d = [x * abs(cartan[i][j]) for x in d]
                    num = d[i] * cartan[j][i]
                d[j] = num // cartan[i][j]
                changed = True
    if any(x <= 0 for x in d):
        raise ConfigError("Cartan matrix is not symmetrizable with positive d")
    from math import gcd
    g = 0
    for x in d:
        g = gcd(g, x)
    return tuple(x // g for x in d)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root datum with a compactness grading on simple roots."""

    cartan_type: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    positive_roots: tuple[LatticeVector, ...]
    noncompact: frozenset[int]
    _root_set: frozenset[LatticeVector] = field(repr=False, default=frozenset())

    # -- basic data -------------------------------------------------------

    def simple_root(self, i: int) -> LatticeVector:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    @property
    def simple_roots(self) -> tuple[LatticeVector, ...]:
        return tuple(self.simple_root(i) for i in range(self.rank))

    def is_root(self, v: LatticeVector) -> bool:
        return tuple(v) in self._root_set

    def is_positive_root(self, v: LatticeVector) -> bool:
        return tuple(v) in self._root_set and sum(v) > 0

    @staticmethod
    def height(v: LatticeVector) -> int:
        return sum(v)

    @property
    def highest_root(self) -> LatticeVector:
        return self.positive_roots[-1]

    def rho(self) -> Weight:
        return tuple(Fraction(1) for _ in range(self.rank))

    # -- bilinear data ----------------------------------------------------

    def inner(self, u: LatticeVector, v: LatticeVector) -> int:
        """Symmetrized inner product (u, v) on the root lattice."""
        total = 0
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj:
                    total += ui * vj * self.d[j] * self.cartan[i][j]
        return total

    def norm_sq(self, gamma: LatticeVector) -> int:
        return self.inner(gamma, gamma)

    def lattice_coroot_pairing(self, v: LatticeVector, gamma: LatticeVector) -> int:
        """<v, gamma^vee> for v in the root lattice; always an integer."""
        num = 2 * self.inner(v, gamma)
        den = self.norm_sq(gamma)
        if num % den:
            raise DomainError("non-integral lattice pairing")
        return num // den

    def pairing(self, lam: Weight, gamma: LatticeVector) -> Fraction:
        """<lam, gamma^vee> with lam in fundamental-weight coordinates."""
        gamma = tuple(gamma)
        if not self.is_root(gamma):
            raise DomainError(f"{gamma} is not a root")
        den = self.norm_sq(gamma)
        num = Fraction(0)
        for j, c in enumerate(gamma):
            if c:
                num += lam[j] * c * 2 * self.d[j]
        return num / den

    # -- coordinate changes -----------------------------------------------

    def root_to_weight(self, v: LatticeVector) -> Weight:
        """Fundamental-weight coordinates of a root-lattice vector."""
        return tuple(
            Fraction(sum(v[i] * self.cartan[i][j] for i in range(self.rank)))
            for j in range(self.rank)
        )

    def weight_to_root_coords(self, lam: Weight) -> tuple[Fraction, ...]:
        """Solve lam = sum c_i alpha_i for rational c."""
        n = self.rank
        m = [[Fraction(self.cartan[i][j]) for i in range(n)] + [Fraction(lam[j])]
             for j in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            inv = 1 / m[col][col]
            m[col] = [x * inv for x in m[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return tuple(m[i][n] for i in range(n))

    def weight_to_lattice(self, lam: Weight) -> LatticeVector:
        """Like weight_to_root_coords but requires integrality."""
        coords = self.weight_to_root_coords(lam)
        if any(c.denominator != 1 for c in coords):
            raise DomainError(f"{lam} is not in the root lattice")
        return tuple(int(c) for c in coords)

    # -- reflections --------------------------------------------------------

    def reflect_lattice(self, v: LatticeVector, gamma: LatticeVector) -> LatticeVector:
        k = self.lattice_coroot_pairing(v, gamma)
        return tuple(x - k * g for x, g in zip(v, gamma))

    def simple_reflect_weight(self, i: int, lam: Weight) -> Weight:
        c = lam[i]
        return tuple(x - c * self.cartan[i][j] for j, x in enumerate(lam))

    def reflect_weight(self, lam: Weight, gamma: LatticeVector) -> Weight:
        c = self.pairing(lam, gamma)
        g_fw = self.root_to_weight(gamma)
        return tuple(x - c * g for x, g in zip(lam, g_fw))

    # -- grading ------------------------------------------------------------

    def epsilon_grading(self, mu: LatticeVector) -> int:
        """Parity of the number of noncompact simple roots in mu."""
        return sum(mu[i] for i in self.noncompact) % 2

    def delta_sign(self, gamma: LatticeVector) -> int:
        """+1 for compact gamma, -1 for noncompact."""
        return -1 if self.epsilon_grading(gamma) else 1

    def with_grading(self, noncompact: frozenset[int]) -> "RootSystem":
        bad = [i for i in noncompact if not 0 <= i < self.rank]
        if bad:
            raise ConfigError(f"noncompact indices out of range: {bad}")
        return replace(self, noncompact=frozenset(noncompact))

    # -- Kostant partition function -----------------------------------------

    def kostant_partition(self, mu: LatticeVector, order: tuple[int, ...] | None = None) -> int:
        """Number of multisets of positive roots summing to mu."""
        mu = tuple(mu)
        if any(c < 0 for c in mu):
            return 0
        roots = self.positive_roots
        if order is not None:
            roots = tuple(roots[i] for i in order)
        return _kostant_count(roots, mu)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "type": self.cartan_type,
            "rank": self.rank,
            "noncompact": sorted(i + 1 for i in self.noncompact),
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [
                {
                    "coeffs": list(r),
                    "height": self.height(r),
                    "norm_sq": self.norm_sq(r),
                    "epsilon": self.epsilon_grading(r),
                }
                for r in self.positive_roots
            ],
        }


@lru_cache(maxsize=None)
def _kostant_count(roots: tuple[LatticeVector, ...], mu: LatticeVector) -> int:
    if not any(mu):
        return 1
    if not roots:
        return 0
    head, rest = roots[0], roots[1:]
    total = 0
    k = 0
    while True:
        remainder = tuple(m - k * h for m, h in zip(mu, head))
        if any(c < 0 for c in remainder):
            break
        total += _kostant_count(rest, remainder)
        k += 1
    return total


def build_root_system(
    cartan_type: str,
    rank: int,
    noncompact: frozenset[int] | set[int] = frozenset(),
    max_rank: int = 4,
) -> RootSystem:
    """Construct the root system by reflection closure of the simple roots.

    ``noncompact`` holds 0-based simple-root indices.  Deterministic root
    order: by height, then lexicographic coefficients.
    """
    cartan_type = cartan_type.upper()
    if cartan_type not in SUPPORTED_RANKS or rank not in SUPPORTED_RANKS[cartan_type]:
        raise ConfigError(f"unsupported system {cartan_type}{rank}")
    if rank > max_rank:
        raise ConfigError(f"rank {rank} exceeds configured cap {max_rank}")
    noncompact = frozenset(noncompact)
    if any(not 0 <= i < rank for i in noncompact):
        raise ConfigError("noncompact indices must lie in 0..rank-1")

    cartan = cartan_matrix(cartan_type, rank)
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]

    def reflect(v: LatticeVector, i: int) -> LatticeVector:
        k = sum(v[j] * cartan[j][i] for j in range(rank))
        return tuple(x - (k if j == i else 0) for j, x in enumerate(v))

    roots = set(simples) | {tuple(-x for x in s) for s in simples}
    frontier = set(roots)
    for _ in range(1000):
        new = set()
        for v in frontier:
            for i in range(rank):
                w = reflect(v, i)
                if w not in roots:
                    new.add(w)
        if not new:
            break
        roots |= new
        frontier = new
    else:  # pragma: no cover
        raise ResourceLimitError("root closure failed to stabilize")

    positives = sorted(
        (r for r in roots if sum(r) > 0), key=lambda r: (sum(r), r)
    )
    if any(min(r) < 0 for r in positives):  # pragma: no cover
        raise ConfigError("positive roots with mixed-sign coordinates")

    system = RootSystem(
        cartan_type=cartan_type,
        rank=rank,
        cartan=cartan,
        d=_symmetrizer(cartan),
        positive_roots=tuple(positives),
        noncompact=noncompact,
        _root_set=frozenset(roots),
    )
    return system

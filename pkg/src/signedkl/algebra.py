"""Exact polynomial arithmetic in q and truncated lattice-exponential series.

Polynomials are integer-coefficient with nonnegative exponents, stored
lowest-degree first with no trailing zeros.  Characters are finite sums
c_mu * e^(base - mu) with mu a nonnegative root-lattice vector of height
at most the cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

LatticeVector = tuple[int, ...]
Weight = tuple[Fraction, ...]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in q with integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...] = ()

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def q() -> "IntPolynomial":
        return IntPolynomial((0, 1))

    @staticmethod
    def of(*coeffs: int) -> "IntPolynomial":
        return IntPolynomial(_trim(coeffs))

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            _trim(self.coeff(k) + other.coeff(k) for k in range(n))
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            _trim(self.coeff(k) - other.coeff(k) for k in range(n))
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(_trim(out))

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(_trim(a * c for a in self.coeffs))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by q^k."""
        if self.is_zero:
            return self
        if k < 0:
            raise ValueError("negative shift would leave the polynomial ring")
        return IntPolynomial((0,) * k + self.coeffs)

    def substitute_neg_q(self) -> "IntPolynomial":
        """Evaluate at -q: negate coefficients of odd exponents."""
        return IntPolynomial(
            tuple(-c if k % 2 else c for k, c in enumerate(self.coeffs))
        )

    def mirror(self, top: int) -> "IntPolynomial":
        """The polynomial q^top * p(1/q); requires deg(p) <= top."""
        if self.degree > top:
            raise ValueError("mirror degree too small")
        out = [0] * (top + 1)
        for k, c in enumerate(self.coeffs):
            out[top - k] = c
        return IntPolynomial(_trim(out))

    def truncate_above(self, top: int) -> "IntPolynomial":
        return IntPolynomial(_trim(self.coeffs[: top + 1]))

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def substitute_neg_q(p: IntPolynomial) -> IntPolynomial:
    return p.substitute_neg_q()


def height(mu: LatticeVector) -> int:
    return sum(mu)


def _term_sort_key(mu: LatticeVector) -> tuple:
    return (height(mu), mu)


@dataclass
class TruncatedCharacter:
    """Finite sum of c_mu * e^(base - mu), mu >= 0 with height <= cutoff.

    ``base`` is a weight in fundamental-weight coordinates; term keys are
    root-lattice vectors in simple-root coordinates.  Translation acts on
    the base only, so it is exact and O(1).
    """

    base: Weight
    cutoff: int
    terms: dict[LatticeVector, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {
            mu: c
            for mu, c in self.terms.items()
            if c != 0 and height(mu) <= self.cutoff and min(mu, default=0) >= 0
        }

    def coefficient(self, mu: LatticeVector) -> int:
        return self.terms.get(tuple(mu), 0)

    def translate(self, delta: Weight) -> "TruncatedCharacter":
        """Multiply by e^delta; acts on the base weight only."""
        new_base = tuple(b + d for b, d in zip(self.base, delta))
        return TruncatedCharacter(new_base, self.cutoff, dict(self.terms))

    def scale(self, c: int) -> "TruncatedCharacter":
        return TruncatedCharacter(
            self.base, self.cutoff, {mu: c * v for mu, v in self.terms.items()}
        )

    def rebase(self, new_base: Weight, offset: LatticeVector) -> "TruncatedCharacter":
        """Rewrite with ``new_base`` where base = new_base - offset.

        Every stored term e^(base - mu) becomes e^(new_base - (mu + offset)).
        Terms pushed past the cutoff are dropped; terms that would acquire a
        negative coordinate may not exist, so ``offset`` must be >= 0.
        """
        if min(offset, default=0) < 0:
            raise ValueError("rebase offset must be componentwise nonnegative")
        shifted: dict[LatticeVector, int] = {}
        for mu, c in self.terms.items():
            nu = tuple(m + o for m, o in zip(mu, offset))
            if height(nu) <= self.cutoff:
                shifted[nu] = c
        return TruncatedCharacter(new_base, self.cutoff, shifted)

    def add(self, other: "TruncatedCharacter") -> "TruncatedCharacter":
        """Pointwise sum; the bases must already agree."""
        if self.base != other.base or self.cutoff != other.cutoff:
            raise ValueError("character bases/cutoffs differ; rebase first")
        merged = dict(self.terms)
        for mu, c in other.terms.items():
            merged[mu] = merged.get(mu, 0) + c
        return TruncatedCharacter(self.base, self.cutoff, merged)

    def mul_geometric_factor(self, root: LatticeVector, sign: int) -> "TruncatedCharacter":
        """Multiply by the expansion of 1/(1 - sign*e^(-root)) up to the cutoff.

        sign=+1 gives 1 + e^(-root) + e^(-2 root) + ...; sign=-1 alternates.
        """
        h = height(root)
        if h <= 0:
            raise ValueError("factor root must have positive height")
        out: dict[LatticeVector, int] = {}
        for mu, c in self.terms.items():
            k = 0
            coeff_sign = 1
            while height(mu) + k * h <= self.cutoff:
                nu = tuple(m + k * r for m, r in zip(mu, root))
                out[nu] = out.get(nu, 0) + coeff_sign * c
                k += 1
                coeff_sign *= sign
        return TruncatedCharacter(self.base, self.cutoff, out)

    def sorted_items(self) -> Iterator[tuple[LatticeVector, int]]:
        for mu in sorted(self.terms, key=_term_sort_key):
            yield mu, self.terms[mu]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedCharacter):
            return NotImplemented
        return (
            self.base == other.base
            and self.cutoff == other.cutoff
            and self.terms == other.terms
        )


def expand_inverse_factor(
    rank: int, root: LatticeVector, sign: int, cutoff: int
) -> TruncatedCharacter:
    """Geometric expansion of 1/(1 - e^(-root)) or 1/(1 + e^(-root)).

    ``sign`` is -1 for the 1/(1 - e^(-root)) factor and +1 for
    1/(1 + e^(-root)); the expansion coefficient of e^(-k root) is 1 in the
    first case and (-1)^k in the second.
    """
    if sign not in (-1, 1):
        raise ValueError("sign must be +1 or -1")
    zero_base: Weight = tuple(Fraction(0) for _ in range(rank))
    unit = TruncatedCharacter(zero_base, cutoff, {tuple([0] * rank): 1})
    return unit.mul_geometric_factor(root, -sign)

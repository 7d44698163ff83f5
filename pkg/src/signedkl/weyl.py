"""Weyl group enumeration with canonical words, Bruhat order, integral data.

A ``WeylGroup`` is built from a set of generating reflections given as
roots of an ambient ``RootSystem``.  The full Weyl group uses the simple
roots; the integral Weyl group of a weight uses the simple roots of its
integral root subsystem.  Either way, lengths, inversion sets and Bruhat
order refer to the group's own positive system, so the Kazhdan-Lusztig
machinery runs uniformly on both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceLimitError
from .rootsystem import LatticeVector, RootSystem, Weight

Matrix = tuple[tuple[int, ...], ...]


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _reflection_matrix(system: RootSystem, gamma: LatticeVector) -> Matrix:
    """Action of s_gamma on root coordinates, columns indexed by simples."""
    n = system.rank
    cols = []
    for j in range(n):
        e_j = tuple(1 if i == j else 0 for i in range(n))
        cols.append(system.reflect_lattice(e_j, gamma))
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElt:
    """Element of a WeylGroup, identified by its index in the enumeration."""

    group: "WeylGroup"
    idx: int

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.words[self.idx]

    @property
    def length(self) -> int:
        return self.group.lengths[self.idx]

    @property
    def matrix(self) -> Matrix:
        return self.group.matrices[self.idx]

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.group.multiply(self, other)

    def inverse(self) -> "WeylElt":
        return self.group.element(self.group.inverses[self.idx])

    def apply_root(self, v: LatticeVector) -> LatticeVector:
        m = self.matrix
        n = len(m)
        return tuple(sum(m[i][j] * v[j] for j in range(n)) for i in range(n))

    def apply_weight(self, lam: Weight) -> Weight:
        # w = g_{i1} ... g_{ik} acts as g_{i1}(g_{i2}(... g_{ik}(lam)))).
        out = lam
        for i in reversed(self.word):
            out = self.group.generator_reflect_weight(i, out)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self.group is other.group and self.idx == other.idx

    def __hash__(self) -> int:
        return hash((id(self.group), self.idx))

    def __repr__(self) -> str:
        return f"WeylElt({self.group.format_word(self)})"


class WeylGroup:
    """Finite reflection group generated by reflections in chosen roots."""

    def __init__(
        self,
        system: RootSystem,
        simple_roots: tuple[LatticeVector, ...] | None = None,
        positive_roots: tuple[LatticeVector, ...] | None = None,
        max_order: int = 1152,
    ):
        self.system = system
        if simple_roots is None:
            simple_roots = system.simple_roots
            positive_roots = system.positive_roots
        if positive_roots is None:
            raise DomainError("positive_roots required with custom generators")
        self.simples = tuple(tuple(r) for r in simple_roots)
        self.positives = tuple(tuple(r) for r in positive_roots)
        self.n_gen = len(self.simples)
        self._gen_matrices = tuple(
            _reflection_matrix(system, g) for g in self.simples
        )
        self._enumerate(max_order)
        self._inv_sets: list[frozenset[LatticeVector] | None] = [None] * self.order
        self._leq_masks: list[int] | None = None
        self._refl_ids: tuple[int, ...] | None = None

    # -- enumeration ----------------------------------------------------------

    def _enumerate(self, max_order: int) -> None:
        n = self.system.rank
        ident = _identity_matrix(n)
        matrices: list[Matrix] = [ident]
        words: list[tuple[int, ...]] = [()]
        lengths: list[int] = [0]
        index: dict[Matrix, int] = {ident: 0}
        right: list[list[int]] = []

        frontier = [0]
        while frontier:
            next_frontier: list[int] = []
            for idx in frontier:
                for g in range(self.n_gen):
                    m = _mat_mul(matrices[idx], self._gen_matrices[g])
                    if m not in index:
                        if len(matrices) >= max_order:
                            raise ResourceLimitError(
                                f"group order exceeds cap {max_order}"
                            )
                        index[m] = len(matrices)
                        matrices.append(m)
                        words.append(words[idx] + (g,))
                        lengths.append(lengths[idx] + 1)
                        next_frontier.append(index[m])
            frontier = next_frontier

        self.matrices = tuple(matrices)
        self.words = tuple(words)
        self.lengths = tuple(lengths)
        self._index = index
        self.order = len(matrices)
        right = [
            [index[_mat_mul(matrices[i], self._gen_matrices[g])]
             for g in range(self.n_gen)]
            for i in range(self.order)
        ]
        self.right = tuple(tuple(r) for r in right)
        inverses = [0] * self.order
        for i in range(self.order):
            acc = 0
            for g in reversed(self.words[i]):
                acc = self.right[acc][g]
            # acc = product of reversed word = inverse of element i
            inverses[i] = acc
        self.inverses = tuple(inverses)
        self.w0 = self.element(max(range(self.order), key=lambda i: self.lengths[i]))
        assert self.w0.length == len(self.positives)

    # -- element access ---------------------------------------------------------

    def element(self, idx: int) -> WeylElt:
        return WeylElt(self, idx)

    @property
    def identity(self) -> WeylElt:
        return self.element(0)

    def elements(self):
        return (self.element(i) for i in range(self.order))

    def from_word(self, word: tuple[int, ...]) -> WeylElt:
        idx = 0
        for g in word:
            if not 0 <= g < self.n_gen:
                raise DomainError(f"generator index {g} out of range")
            idx = self.right[idx][g]
        return self.element(idx)

    def multiply(self, x: WeylElt, y: WeylElt) -> WeylElt:
        m = _mat_mul(x.matrix, y.matrix)
        return self.element(self._index[m])

    def element_from_matrix(self, m: Matrix) -> WeylElt:
        idx = self._index.get(m)
        if idx is None:
            raise DomainError("matrix is not an element of this group")
        return self.element(idx)

    # -- words (external form: 1-based digits, identity 'e') -----------------

    def format_word(self, x: WeylElt) -> str:
        return "".join(str(i + 1) for i in x.word) or "e"

    def parse_word(self, text: str) -> WeylElt:
        text = text.strip()
        if text in ("e", ""):
            return self.identity
        word = []
        for ch in text:
            if not ch.isdigit() or not 1 <= int(ch) <= self.n_gen:
                raise DomainError(f"bad word {text!r}")
            word.append(int(ch) - 1)
        return self.from_word(tuple(word))

    # -- geometry ----------------------------------------------------------------

    def generator_reflect_weight(self, g: int, lam: Weight) -> Weight:
        return self.system.reflect_weight(lam, self.simples[g])

    def right_descent(self, x: WeylElt, g: int) -> bool:
        """True iff x * s_g is shorter, i.e. x sends the g-th simple negative."""
        return self.lengths[self.right[x.idx][g]] < x.length

    def descents_right(self, x: WeylElt) -> list[int]:
        return [g for g in range(self.n_gen) if self.right_descent(x, g)]

    def inversion_set(self, x: WeylElt) -> frozenset[LatticeVector]:
        """Positive roots of this group's system sent negative by x."""
        cached = self._inv_sets[x.idx]
        if cached is None:
            cached = frozenset(
                r for r in self.positives if sum(x.apply_root(r)) < 0
            )
            self._inv_sets[x.idx] = cached
        return cached

    def inversion_set_of_inverse_from_word(
        self, word: tuple[int, ...]
    ) -> tuple[LatticeVector, ...]:
        """For reduced w = g_{i1}...g_{ik}: the inversions of w^{-1} in order.

        Returns (beta_1, ..., beta_k) with beta_j = g_{i1}...g_{i_{j-1}}
        applied to the i_j-th generating root.
        """
        out = []
        prefix = self.identity
        for g in word:
            out.append(prefix.apply_root(self.simples[g]))
            prefix = self.multiply(prefix, self.from_word((g,)))
        return tuple(out)

    def inversion_set_from_word(self, x: WeylElt) -> frozenset[LatticeVector]:
        """Inversion set computed by the reduced-word formula, for testing."""
        return frozenset(
            self.inversion_set_of_inverse_from_word(x.inverse().word)
        )

    # -- Bruhat order ----------------------------------------------------------

    def _reflection_ids(self) -> tuple[int, ...]:
        if self._refl_ids is None:
            ids = []
            for gamma in self.positives:
                m = _reflection_matrix(self.system, gamma)
                ids.append(self._index[m])
            self._refl_ids = tuple(ids)
        return self._refl_ids

    def _build_leq_masks(self) -> list[int]:
        if self._leq_masks is not None:
            return self._leq_masks
        refls = self._reflection_ids()
        order_by_len = sorted(range(self.order), key=lambda i: self.lengths[i])
        masks = [0] * self.order
        for y in order_by_len:
            m = 1 << y
            ly = self.lengths[y]
            for t in refls:
                x = self._index[_mat_mul(self.matrices[t], self.matrices[y])]
                if self.lengths[x] == ly - 1:
                    m |= masks[x]
            masks[y] = m
        self._leq_masks = masks
        return masks

    def bruhat_leq(self, x: WeylElt, y: WeylElt) -> bool:
        if x.group is not self or y.group is not self:
            raise DomainError("elements belong to a different group")
        masks = self._build_leq_masks()
        return bool(masks[y.idx] >> x.idx & 1)


@dataclass(frozen=True)
class IntegralData:
    """Integral root subsystem of a weight with its reflection group."""

    delta_positive: tuple[LatticeVector, ...]
    pi: tuple[LatticeVector, ...]
    group: WeylGroup
    w0: WeylElt

    @property
    def all_roots(self) -> tuple[LatticeVector, ...]:
        return self.delta_positive + tuple(
            tuple(-c for c in r) for r in self.delta_positive
        )


def integral_data(system: RootSystem, lam: Weight, max_order: int = 1152) -> IntegralData:
    """Integral Weyl group data: roots with integral coroot pairing against lam."""
    delta_pos = tuple(
        r
        for r in system.positive_roots
        if system.pairing(lam, r).denominator == 1
    )
    dset = set(delta_pos)
    pi = []
    for r in delta_pos:
        decomposable = any(
            tuple(a - b for a, b in zip(r, s)) in dset
            for s in delta_pos
            if s != r and all(a >= b for a, b in zip(r, s))
        )
        if not decomposable:
            pi.append(r)
    group = WeylGroup(
        system,
        simple_roots=tuple(pi),
        positive_roots=delta_pos,
        max_order=max_order,
    )
    return IntegralData(
        delta_positive=delta_pos, pi=tuple(pi), group=group, w0=group.w0
    )

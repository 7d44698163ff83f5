"""Classical Kazhdan-Lusztig polynomials with two independent computations.

The recursion method runs the standard descent recursion on literal index
pairs; the oracle method solves the triangular system defined by
R-polynomials.  Both are exposed on KLTable so that every value can be
cross-checked.  Level coefficients read the w0-twisted table entries used
by the Jantzen multiplicity statement: for x, y in the group,
[level j of M(x lambda) : L(y lambda)] is the coefficient of
q^((l(x)-l(y)-j)/2) in P_{w0 x, w0 y}(q).
"""

from __future__ import annotations

from .algebra import IntPolynomial
from .errors import DomainError
from .weyl import WeylElt, WeylGroup

_Q = IntPolynomial.q()
_ONE = IntPolynomial.one()
_ZERO = IntPolynomial.zero()


class KLTable:
    """Memoized classical KL polynomials over one reflection group."""

    def __init__(self, group: WeylGroup, method: str = "recursion"):
        if method not in ("recursion", "oracle"):
            raise DomainError(f"unknown method {method!r}")
        self.group = group
        self.method = method
        self._memo: dict[tuple[int, int], IntPolynomial] = {}
        self._r_memo: dict[tuple[int, int], IntPolynomial] = {}

    # -- public API -------------------------------------------------------

    def poly(self, x: WeylElt, y: WeylElt) -> IntPolynomial:
        """P_{x,y}(q) for literal indices."""
        self._check(x, y)
        if self.method == "recursion":
            return self._recursion(x.idx, y.idx)
        return self._oracle(x.idx, y.idx)

    def poly_long_twisted(self, x: WeylElt, y: WeylElt) -> IntPolynomial:
        """P_{w0 x, w0 y}(q): the indexing used by the Jantzen statement."""
        w0 = self.group.w0
        return self.poly(w0 * x, w0 * y)

    def mu(self, x: WeylElt, y: WeylElt) -> int:
        """Coefficient of q^((l(y)-l(x)-1)/2) in P_{x,y}; 0 on bad parity."""
        d = y.length - x.length - 1
        if d < 0 or d % 2:
            return 0
        return self.poly(x, y).coeff(d // 2)

    def level_coefficient(self, x: WeylElt, y: WeylElt, j: int) -> int:
        """Multiplicity of the y-irreducible at level j of the x-Verma."""
        if j < 0:
            raise DomainError("level must be nonnegative")
        d = x.length - y.length - j
        if d < 0 or d % 2:
            return 0
        return self.poly_long_twisted(x, y).coeff(d // 2)

    def table_rows(self):
        """All nonzero entries as (x word, y word, coeff list), sorted."""
        g = self.group
        for yi in range(g.order):
            for xi in range(g.order):
                p = self.poly(g.element(xi), g.element(yi))
                if not p.is_zero:
                    yield (g.format_word(g.element(xi)),
                           g.format_word(g.element(yi)), p.to_list())

    # -- recursion method ----------------------------------------------------

    def _check(self, x: WeylElt, y: WeylElt) -> None:
        if x.group is not self.group or y.group is not self.group:
            raise DomainError("elements belong to a different group")

    def _recursion(self, xi: int, yi: int) -> IntPolynomial:
        key = (xi, yi)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        g = self.group
        x, y = g.element(xi), g.element(yi)
        if xi == yi:
            p = _ONE
        elif not g.bruhat_leq(x, y):
            p = _ZERO
        else:
            s = min(g.descents_right(y))
            ys = g.right[yi][s]
            xs = g.right[xi][s]
            if g.lengths[xs] < x.length:
                p = self._three_term(xi, xs, yi, ys, s)
            else:
                # P_{x,y} = P_{xs,y} whenever ys < y.
                p = self._recursion(xs, yi)
        p = self._checked(p, x, y)
        self._memo[key] = p
        return p

    def _three_term(self, xi: int, xsi: int, yi: int, ysi: int, s: int) -> IntPolynomial:
        """Descent recursion when s is a common right descent of x and y."""
        g = self.group
        p = self._recursion(xsi, ysi) + _Q * self._recursion(xi, ysi)
        len_y = g.lengths[yi]
        len_ys = g.lengths[ysi]
        x = g.element(xi)
        ys_elt = g.element(ysi)
        for zi in range(g.order):
            lz = g.lengths[zi]
            if lz >= len_ys or (len_ys - lz) % 2 == 0:
                continue
            if g.lengths[g.right[zi][s]] >= lz:
                continue
            z = g.element(zi)
            if not (g.bruhat_leq(x, z) and g.bruhat_leq(z, ys_elt)):
                continue
            m = self._rec_mu(zi, ysi)
            if m == 0:
                continue
            term = self._recursion(xi, zi).scale(m).shift((len_y - lz) // 2)
            p = p - term
        return p

    def _rec_mu(self, zi: int, yi: int) -> int:
        d = self.group.lengths[yi] - self.group.lengths[zi] - 1
        if d < 0 or d % 2:
            return 0
        return self._recursion(zi, yi).coeff(d // 2)

    def _checked(self, p: IntPolynomial, x: WeylElt, y: WeylElt) -> IntPolynomial:
        if x.idx != y.idx and not p.is_zero:
            bound = (y.length - x.length - 1) // 2
            if p.degree > bound or p.coeff(0) != 1:
                raise DomainError(
                    f"KL invariant violated at ({self.group.format_word(x)}, "
                    f"{self.group.format_word(y)}): {p}"
                )
        return p

    # -- oracle method ---------------------------------------------------------

    def r_poly(self, x: WeylElt, y: WeylElt) -> IntPolynomial:
        self._check(x, y)
        return self._r(x.idx, y.idx)

    def _r(self, xi: int, yi: int) -> IntPolynomial:
        key = (xi, yi)
        hit = self._r_memo.get(key)
        if hit is not None:
            return hit
        g = self.group
        if xi == yi:
            p = _ONE
        elif not g.bruhat_leq(g.element(xi), g.element(yi)):
            p = _ZERO
        else:
            s = min(g.descents_right(g.element(yi)))
            ysi = g.right[yi][s]
            xsi = g.right[xi][s]
            if g.lengths[xsi] < g.lengths[xi]:
                p = self._r(xsi, ysi)
            else:
                p = (_Q - _ONE) * self._r(xi, ysi) + _Q * self._r(xsi, ysi)
        self._r_memo[key] = p
        return p

    def _oracle(self, xi: int, yi: int) -> IntPolynomial:
        key = (xi, yi)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        g = self.group
        x, y = g.element(xi), g.element(yi)
        if xi == yi:
            p = _ONE
        elif not g.bruhat_leq(x, y):
            p = _ZERO
        else:
            # sum_{x < z <= y} R_{x,z} P_{z,y} = q^l P_{x,y}(1/q) - P_{x,y}
            acc = _ZERO
            for zi in range(g.order):
                if zi == xi or g.lengths[zi] <= g.lengths[xi]:
                    continue
                z = g.element(zi)
                if not (g.bruhat_leq(x, z) and g.bruhat_leq(z, y)):
                    continue
                acc = acc + self._r(xi, zi) * self._oracle(zi, yi)
            ell = y.length - x.length
            p = -acc.truncate_above((ell - 1) // 2)
            if acc + p != p.mirror(ell):
                raise DomainError(
                    "R-polynomial triangular solve is inconsistent at "
                    f"({g.format_word(x)}, {g.format_word(y)})"
                )
            p = self._checked(p, x, y)
        self._memo[key] = p
        return p

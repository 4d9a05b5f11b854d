"""The chord-tangent group on the nonsingular rational points of a cubic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .cubic import CubicCurve, CurveError, LineComponentError, is_absolutely_irreducible, third_point
from .gf import prime_factors
from .linalg import det3, rank
from .plane import ProjPoint, normalize
from . import poly


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupStructure:
    """Invariant factors: the group is Z/d1 x Z/d2 with d2 | d1."""
    d1: int
    d2: int

    @property
    def order(self) -> int:
        return self.d1 * self.d2

    @property
    def cyclic(self) -> bool:
        return self.d2 == 1

    def __str__(self):
        if self.d2 == 1:
            return f"Z/{self.d1}"
        return f"Z/{self.d1} x Z/{self.d2}"


class CurveGroup:
    """Abelian group on C(K)' with identity O.

    P + Q = (P*Q)*O where P*Q is the third point of the curve on line PQ.
    """

    def __init__(self, curve: CubicCurve, identity, check_irreducible: bool = True):
        self.curve = curve
        self.spec = curve.spec
        O = normalize(self.spec, identity)
        if not curve.contains(O):
            raise GroupError(f"identity {O} is not on the curve")
        if O in set(curve.singular_points):
            raise GroupError(f"identity {O} is a singular point")
        if check_irreducible and not curve.is_nonsingular and not is_absolutely_irreducible(curve.form):
            raise GroupError("a reducible cubic does not carry the chord-tangent group")
        self.O = O
        self._singular = frozenset(curve.singular_points)
        self.N = self.star(O, O)

    def __repr__(self):
        return f"CurveGroup({self.curve!r}, O={self.O})"

    @cached_property
    def elements(self) -> tuple[ProjPoint, ...]:
        return self.curve.smooth_points

    @cached_property
    def _element_set(self) -> frozenset:
        return frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def _check(self, P) -> ProjPoint:
        P = normalize(self.spec, P)
        if P not in self._element_set:
            if self.curve.contains(P):
                raise GroupError(f"{P} is a singular point of the curve")
            raise GroupError(f"{P} is not on the curve")
        return P

    def star(self, P, Q) -> ProjPoint:
        P, Q = self._check(P), self._check(Q)
        try:
            R = third_point(self.curve.form, P, Q)
        except LineComponentError as exc:
            raise AssertionError(f"chord through group points is a component: {exc}") from exc
        if R in self._singular:
            raise AssertionError(f"chord {P}{Q} passes through the singular point {R}")
        return R

    def add(self, P, Q) -> ProjPoint:
        return self.star(self.star(P, Q), self.O)

    def neg(self, P) -> ProjPoint:
        return self.star(P, self.N)

    def sub(self, P, Q) -> ProjPoint:
        return self.add(P, self.neg(Q))

    def sum(self, points) -> ProjPoint:
        acc = self.O
        for P in points:
            acc = self.add(acc, P)
        return acc

    def scalar_mul(self, m: int, P) -> ProjPoint:
        P = self._check(P)
        if m < 0:
            return self.scalar_mul(-m, self.neg(P))
        acc, base = self.O, P
        while m:
            if m & 1:
                acc = self.add(acc, base)
            m >>= 1
            if m:
                base = self.add(base, base)
        return acc

    def order(self, P) -> int:
        n = len(self)
        m = n
        for r in prime_factors(n):
            while m % r == 0 and self.scalar_mul(m // r, P) == self.O:
                m //= r
        return m

    def structure(self) -> GroupStructure:
        n = len(self)
        d1 = 1
        for P in self.elements:
            d1 = math.lcm(d1, self.order(P))
            if d1 == n:
                break
        d2 = n // d1
        if d1 % d2:
            raise AssertionError(f"inconsistent invariant factors ({d1}, {d2})")
        # torsion counts |G[d]| = gcd(d, d1) gcd(d, d2) pin down the factors
        for d in sorted(set(prime_factors(d1)) | {d2}):
            expected = math.gcd(d, d1) * math.gcd(d, d2)
            got = sum(1 for P in self.elements if self.scalar_mul(d, P) == self.O)
            if got != expected:
                raise AssertionError(f"{got} solutions of {d}P = O, expected {expected}")
        return GroupStructure(d1, d2)

    def cayley_table(self) -> list[list[int]]:
        """Indices into ``elements`` of all sums."""
        idx = {P: i for i, P in enumerate(self.elements)}
        return [[idx[self.add(P, Q)] for Q in self.elements] for P in self.elements]

    def collinear_criterion(self, P, Q, R) -> bool:
        return self.sum((P, Q, R)) == self.N

    def collinear_geometric(self, P, Q, R) -> bool:
        """Collinearity of a multiset of curve points, repeated points read as
        tangency: {P, P, Q} holds iff the tangent at P passes through Q."""
        P, Q, R = self._check(P), self._check(Q), self._check(R)
        F = self.spec
        pts = sorted((P, Q, R))
        if pts[0] == pts[1] == pts[2]:
            return self.curve.is_inflexion(P)
        if pts[0] == pts[1] or pts[1] == pts[2]:
            double = pts[1]
            other = pts[2] if pts[0] == pts[1] else pts[0]
            L = self.curve.tangent_at(double)
            return F.add(F.add(F.mul(L[0], other[0]), F.mul(L[1], other[1])), F.mul(L[2], other[2])) == 0
        return det3(F, (P, Q, R)) == 0

    def conic_criterion(self, points) -> bool:
        pts = [self._check(P) for P in points]
        if len(pts) != 6 or len(set(pts)) != 6:
            raise GroupError("the conic criterion needs six distinct points")
        return self.sum(pts) == self.scalar_mul(2, self.N)

    def on_conic_geometric(self, points) -> bool:
        pts = [self._check(P) for P in points]
        if len(pts) != 6 or len(set(pts)) != 6:
            raise GroupError("the conic criterion needs six distinct points")
        rows = [poly.eval_monomials(self.spec, 2, P) for P in pts]
        return rank(self.spec, rows) < 6


def weierstrass_add(spec, c: int, P, Q):
    """Affine addition on Y^2 Z = X^3 + cXZ^2 + dZ^3 with O = (0:1:0).

    Points are ProjPoints; only used to cross-check the geometric law in
    characteristic other than 2 and 3.
    """
    F = spec
    if F.p in (2, 3):
        raise CurveError("explicit formulas need characteristic other than 2 and 3")
    O = ProjPoint(0, 1, 0)
    if P == O:
        return Q
    if Q == O:
        return P
    x1, y1 = F.div(P[0], P[2]), F.div(P[1], P[2])
    x2, y2 = F.div(Q[0], Q[2]), F.div(Q[1], Q[2])
    if x1 == x2:
        if F.add(y1, y2) == 0:
            return O
        num = F.add(F.mul(3 % F.p, F.mul(x1, x1)), c)
        gamma = F.div(num, F.mul(2, y1))
        x3 = F.sub(F.sub(F.mul(gamma, gamma), x1), x2)
    else:
        gamma = F.div(F.sub(y2, y1), F.sub(x2, x1))
        x3 = F.sub(F.sub(F.mul(gamma, gamma), x1), x2)
    # y3 = -gamma (x3 - x1) - y1
    y3 = F.sub(F.neg(F.mul(gamma, F.sub(x3, x1))), y1)
    return normalize(F, (x3, y3, 1))

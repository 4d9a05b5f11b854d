"""Arcs from cosets of subgroups of the curve group, with geometric checks.

A coset H_i of an index-r subgroup H (with G/H cyclic) avoids every set of
3k points summing to kN as long as k(3i - j) is nonzero mod r, where N lies
in H_j.  Such sums are exactly the 3k-point sections of the cubic by curves
of degree k, so no 3k points of H_i lie on a degree-k curve not containing C.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from . import poly
from .cubic import CubicCurve
from .group import CurveGroup
from .linalg import nullspace, rank
from .plane import ProjPoint, normalize, parse_point


class ArcError(ValueError):
    pass


DEFAULT_CUTOFF = 10 ** 6


# -- explicit group coordinates -----------------------------------------------

class GroupCoordinates:
    """An isomorphism G -> Z/d1 x Z/d2 via a basis (g1, g2)."""

    def __init__(self, G: CurveGroup):
        self.G = G
        s = G.structure()
        self.d1, self.d2 = s.d1, s.d2
        orders = {P: G.order(P) for P in G.elements}
        self.g1 = next(P for P in G.elements if orders[P] == self.d1)
        span1 = self._multiples(self.g1, self.d1)
        self.g2 = G.O
        if self.d2 > 1:
            for P in G.elements:
                if orders[P] != self.d2:
                    continue
                mult = self._multiples(P, self.d2)
                if not (set(mult[1:]) & set(span1)):
                    self.g2 = P
                    break
            else:
                raise AssertionError("no complement for the cyclic factor")
        span2 = self._multiples(self.g2, self.d2)
        self.coords: dict[ProjPoint, tuple[int, int]] = {}
        for a, A in enumerate(span1):
            for b, B in enumerate(span2):
                self.coords[G.add(A, B)] = (a, b)
        if len(self.coords) != len(G):
            raise AssertionError("basis does not generate the group")

    def _multiples(self, P, m):
        out = [self.G.O]
        for _ in range(m - 1):
            out.append(self.G.add(out[-1], P))
        return out


@dataclass(frozen=True)
class Quotient:
    """Surjection (a, b) -> x a + y b mod r in basis coordinates."""
    r: int
    x: int
    y: int

    def __call__(self, ab) -> int:
        return (self.x * ab[0] + self.y * ab[1]) % self.r


def cyclic_quotients(coords: GroupCoordinates, r: int) -> list[Quotient]:
    """All surjections G -> Z/r (one per index-r subgroup with cyclic quotient,
    up to automorphisms of Z/r: the first with a given kernel is kept)."""
    d1, d2 = coords.d1, coords.d2
    seen = set()
    out = []
    for x in range(r):
        if (x * d1) % r:
            continue
        for y in range(r):
            if (y * d2) % r or math.gcd(math.gcd(x, y), r) != 1:
                continue
            q = Quotient(r, x, y)
            kernel = frozenset(P for P, ab in coords.coords.items() if q(ab) == 0)
            if kernel not in seen:
                seen.add(kernel)
                out.append(q)
    return out


# -- verification -------------------------------------------------------------

@dataclass
class DegreeCheck:
    k: int
    status: str  # pass, fail or not-fully-verified
    subsets_checked: int = 0
    witness: tuple | None = None
    witness_form: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __str__(self):
        text = f"k={self.k} status={self.status} subsets={self.subsets_checked}"
        if self.witness is not None:
            text += " witness=" + ";".join(str(P) for P in self.witness)
        return text


def _form_from_vector(k: int, vec) -> dict:
    return {m: c for m, c in zip(poly.monomials(k), vec) if c}


def _curve_multiples(curve: CubicCurve, k: int) -> list[list[int]]:
    """Coefficient vectors of C times each monomial of degree k - 3."""
    F = curve.spec
    mons = poly.monomials(k)
    index = {m: i for i, m in enumerate(mons)}
    out = []
    if k < 3:
        return out
    for m in poly.monomials(k - 3):
        prod = poly.form_mul(F, curve.form.terms, {m: 1})
        v = [0] * len(mons)
        for mm, c in prod.items():
            v[index[mm]] = c
        out.append(v)
    return out


def verify_degree_k(curve: CubicCurve, points, k: int, cutoff: int = DEFAULT_CUTOFF) -> DegreeCheck:
    """Check that no 3k of the points lie on a degree-k curve not containing C."""
    F = curve.spec
    pts = [normalize(F, P) for P in points]
    if len(set(pts)) != len(pts):
        raise ArcError("points must be distinct")
    for P in pts:
        if not curve.contains(P):
            raise ArcError(f"{P} is not on the curve")
    if k < 1:
        raise ArcError("k must be positive")
    if len(pts) < 3 * k:
        raise ArcError(f"need at least {3 * k} points for k={k}, got {len(pts)}")
    total = math.comb(len(pts), 3 * k)
    if total > cutoff:
        return DegreeCheck(k, "not-fully-verified", 0)
    rows = {P: poly.eval_monomials(F, k, P) for P in pts}
    checked = 0
    for subset in itertools.combinations(pts, 3 * k):
        checked += 1
        m = [rows[P] for P in subset]
        if rank(F, m) == 3 * k:
            continue
        return DegreeCheck(k, "fail", checked, subset, _witness(curve, m, k))
    return DegreeCheck(k, "pass", checked)


def _witness(curve: CubicCurve, matrix, k: int) -> dict:
    F = curve.spec
    multiples = _curve_multiples(curve, k)
    base = rank(F, multiples) if multiples else 0
    for v in nullspace(F, matrix, len(poly.monomials(k))):
        if rank(F, multiples + [v]) > base:
            return _form_from_vector(k, v)
    raise AssertionError("kernel has no form beyond multiples of the cubic")


# -- constructions ------------------------------------------------------------

@dataclass
class ArcSet:
    points: list
    r: int
    i: int
    j: int
    case: str
    guaranteed_k: tuple
    quotient: Quotient
    basis: tuple
    certificates: dict = field(default_factory=dict)

    def describe(self) -> str:
        g1, g2 = self.basis
        return (f"r={self.r} i={self.i} j={self.j} case={self.case} "
                f"quotient=({self.quotient.x}a+{self.quotient.y}b mod {self.r}) basis={g1},{g2}")


def choose_coset(r: int, j: int) -> tuple[int, str, tuple]:
    """Coset index i, case label and guaranteed k values for N in H_j."""
    if r % 3:
        u = pow(3, -1, r) if r > 1 else 0
        i = (u * (j + 1)) % r
        case, ks = "i", tuple(range(1, r))
    elif j % 3 == 1:
        i, case, ks = (j - 1) // 3, "ii", tuple(range(1, r))
    elif j % 3 == 2:
        i, case, ks = (j + 1) // 3, "ii", tuple(range(1, r))
    else:
        i, case, ks = (j // 3 + 1) % r, "iii", tuple(range(1, -(-r // 3)))
    for k in ks:
        if (k * (3 * i - j)) % r == 0:
            raise AssertionError(f"certificate fails: {k}(3*{i} - {j}) = 0 mod {r}")
    return i, case, ks


def general_arc(G: CurveGroup, r: int, quotient: Quotient | None = None,
                coords: GroupCoordinates | None = None) -> ArcSet:
    n = len(G)
    if r < 1 or n % r:
        raise ArcError(f"r={r} does not divide the group order {n}")
    coords = coords or GroupCoordinates(G)
    if quotient is None:
        options = cyclic_quotients(coords, r)
        if not options:
            raise ArcError(f"no index-{r} subgroup with cyclic quotient")
        quotient = options[0]
    j = quotient(coords.coords[G.N])
    i, case, ks = choose_coset(r, j)
    points = sorted((P for P, ab in coords.coords.items() if quotient(ab) == i),
                    key=lambda P: list(G.elements).index(P))
    if len(points) != n // r:
        raise AssertionError("coset has the wrong size")
    return ArcSet(points, r, i, j, case, ks, quotient, (coords.g1, coords.g2))


def half_arc(G: CurveGroup, quotient: Quotient | None = None,
             coords: GroupCoordinates | None = None) -> ArcSet:
    """n/2 points, no three collinear: the index-2 subgroup H when N is
    outside it, otherwise the other coset."""
    if len(G) % 2:
        raise ArcError(f"group order {len(G)} is odd")
    return general_arc(G, 2, quotient, coords)


def certify(curve: CubicCurve, arc: ArcSet, ks=None, cutoff: int = DEFAULT_CUTOFF) -> ArcSet:
    """Run verify_degree_k for the guaranteed k values that fit the arc size."""
    ks = arc.guaranteed_k if ks is None else ks
    for k in ks:
        if 3 * k <= len(arc.points):
            arc.certificates[k] = verify_degree_k(curve, arc.points, k, cutoff)
    return arc


def read_points(F, text: str) -> list[ProjPoint]:
    """Points from lines ``point=(x:y:z)`` or ``(x:y:z)``; other lines are ignored,
    so the output of ``arcs build`` can be fed back in."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("point="):
            line = line[len("point="):]
        if line.startswith("("):
            out.append(parse_point(F, line))
    return out

"""Plane cubic forms and curves over F_q.

Coefficients of a :class:`CubicForm` follow the fixed monomial order
``X^3, Y^3, Z^3, X^2Y, X^2Z, XY^2, Y^2Z, XZ^2, YZ^2, XYZ``.

Singularity over the algebraic closure is decided by eliminating one
variable from the partial-derivative system with resultants
(:func:`closure_singularity`).  :func:`scan_singular` is an independent
brute-force oracle that searches PG(2, q^k) directly.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import poly
from .gf import FieldSpec, extension, parse_header
from .plane import (
    ProjLine,
    ProjPoint,
    combine,
    dot,
    enumerate_points,
    normalize,
    normalize_line,
    point_arrays,
    two_points_on,
)

MONOMIALS = (
    (3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (2, 0, 1),
    (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1),
)
MONOMIAL_NAMES = ("X^3", "Y^3", "Z^3", "X^2Y", "X^2Z", "XY^2", "Y^2Z", "XZ^2", "YZ^2", "XYZ")
_INDEX = {m: i for i, m in enumerate(MONOMIALS)}

# largest field searched by brute force inside the resultant method
_MAX_SCAN_FIELD = 1 << 20


class CurveError(ValueError):
    pass


class LineComponentError(CurveError):
    """The line is a component of the cubic."""


@dataclass(frozen=True)
class CubicForm:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 10:
            raise CurveError("a cubic form has exactly 10 coefficients")
        for c in self.coeffs:
            self.spec.check(c)
        if not any(self.coeffs):
            raise CurveError("the zero form does not define a curve")

    @classmethod
    def from_dict(cls, spec: FieldSpec, terms: dict) -> "CubicForm":
        coeffs = [0] * 10
        for m, c in terms.items():
            if m not in _INDEX:
                raise CurveError(f"{m} is not a cubic monomial")
            coeffs[_INDEX[m]] = spec.add(coeffs[_INDEX[m]], c)
        return cls(spec, tuple(coeffs))

    @cached_property
    def terms(self) -> dict:
        return {m: c for m, c in zip(MONOMIALS, self.coeffs) if c}

    def normalized(self) -> "CubicForm":
        """Scalar multiple whose first nonzero coefficient is 1."""
        lead = next(c for c in self.coeffs if c)
        inv = self.spec.inv(lead)
        return CubicForm(self.spec, tuple(self.spec.mul(inv, c) for c in self.coeffs))

    def scale(self, c: int) -> "CubicForm":
        return CubicForm(self.spec, tuple(self.spec.mul(c, v) for v in self.coeffs))

    def __call__(self, P) -> int:
        return evaluate(self, P)

    def __str__(self):
        return "form=" + ",".join(str(c) for c in self.coeffs)

    def pretty(self) -> str:
        parts = []
        for c, name in zip(self.coeffs, MONOMIAL_NAMES):
            if c:
                parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)

    @cached_property
    def _grad_terms(self):
        return tuple(tuple(poly.form_partial(self.spec, self.terms, v).items()) for v in range(3))

    @cached_property
    def _eval_terms(self):
        return tuple(self.terms.items())


def _eval(F: FieldSpec, terms, P) -> int:
    x, y, z = P
    px = (1, x, F.mul(x, x))
    py = (1, y, F.mul(y, y))
    pz = (1, z, F.mul(z, z))
    acc = 0
    for (i, j, k), c in terms:
        v = c
        for base, pw, e in ((x, px, i), (y, py, j), (z, pz, k)):
            if e:
                v = F.mul(v, pw[e] if e < 3 else F.mul(pw[2], base))
                if not v:
                    break
        if v:
            acc = F.add(acc, v)
    return acc


def evaluate(form: CubicForm, P) -> int:
    return _eval(form.spec, form._eval_terms, P)


def gradient(form: CubicForm, P) -> tuple[int, int, int]:
    F = form.spec
    return tuple(_eval(F, t, P) for t in form._grad_terms)


def partials(form: CubicForm) -> tuple[dict, dict, dict]:
    """(F_X, F_Y, F_Z) as quadratic forms, exponents reduced mod p."""
    return tuple(dict(t) for t in form._grad_terms)


def substitute(form: CubicForm, matrix) -> CubicForm:
    """The form F(M v); M maps the new coordinates to the old ones."""
    terms = poly.form_substitute(form.spec, form.terms, matrix)
    return CubicForm.from_dict(form.spec, terms)


# -- vectorised evaluation ----------------------------------------------------

class _Powers:
    def __init__(self, F: FieldSpec, X, Y, Z):
        self.F = F
        self._p = [{0: np.ones_like(X), 1: X}, {0: np.ones_like(Y), 1: Y}, {0: np.ones_like(Z), 1: Z}]

    def get(self, var: int, e: int):
        table = self._p[var]
        if e not in table:
            table[e] = self.F.vmul(self.get(var, e - 1), table[1])
        return table[e]

    def monomial(self, m):
        F = self.F
        out = None
        for var, e in enumerate(m):
            if e:
                out = self.get(var, e) if out is None else F.vmul(out, self.get(var, e))
        return self.get(0, 0) if out is None else out


def veval(F: FieldSpec, terms, powers: _Powers):
    acc = None
    for m, c in terms:
        v = F.vscale(c, powers.monomial(m))
        acc = v if acc is None else F.vadd(acc, v)
    if acc is None:
        return np.zeros_like(powers.get(0, 0))
    return acc


@functools.lru_cache(maxsize=64)
def _plane_powers(F: FieldSpec) -> _Powers:
    pts = point_arrays(F)
    return _Powers(F, pts[:, 0], pts[:, 1], pts[:, 2])


def _values_on_plane(form_terms, F: FieldSpec):
    return veval(F, form_terms, _plane_powers(F))


# -- rational points and singularities ---------------------------------------

def rational_points(form: CubicForm) -> tuple[ProjPoint, ...]:
    F = form.spec
    vals = _values_on_plane(form._eval_terms, F)
    pts = enumerate_points(F)
    return tuple(pts[i] for i in np.nonzero(vals == 0)[0])


def _system(form: CubicForm) -> list[dict]:
    """Nonzero members of the singular-point system: partials, plus F in
    characteristic 3 where the Euler relation degenerates."""
    S = [dict(t) for t in form._grad_terms if t]
    if form.spec.p == 3:
        S.append(dict(form.terms))
    return S


def singular_points_rational(form: CubicForm) -> tuple[ProjPoint, ...]:
    F = form.spec
    mask = None
    for terms in _system(form):
        z = _values_on_plane(tuple(terms.items()), F) == 0
        mask = z if mask is None else mask & z
    pts = enumerate_points(F)
    if mask is None:
        return pts
    return tuple(pts[i] for i in np.nonzero(mask)[0])


@dataclass(frozen=True)
class ClosurePoint:
    """A point over an extension F_{q^degree}; coords are encodings in
    ``field`` (None when only a defining polynomial is known)."""
    degree: int
    field: FieldSpec
    coords: tuple | None
    note: str = ""

    def __str__(self):
        if self.coords is None:
            return f"degree={self.degree} {self.note}"
        return f"degree={self.degree} ({self.coords[0]}:{self.coords[1]}:{self.coords[2]}) in F_{self.field.q}"


@dataclass(frozen=True)
class SingularityVerdict:
    singular: bool
    witness: ClosurePoint | None = None
    method: str = "resultant"


# binary forms: (degree, univariate poly in t = u/w), poly[i] is the
# coefficient of u^i w^(degree - i)

def _bf_mul(F, a, b):
    if a is None or b is None:
        return None
    prod = poly.pmul(F, a[1], b[1])
    return (a[0] + b[0], prod) if prod else None


def _bf_add(F, a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a[0] != b[0]:
        raise AssertionError("adding binary forms of different degree")
    s = poly.padd(F, a[1], b[1])
    return (a[0], s) if s else None


def _bf_neg(F, a):
    if a is None:
        return None
    return (a[0], [F.neg(c) for c in a[1]])


def _coeffs_in(F: FieldSpec, terms: dict, v: int):
    """View a ternary form as a polynomial in variable v; returns the list of
    binary-form coefficients (index = power of v)."""
    u, w = [i for i in range(3) if i != v]
    total = poly.form_degree(terms)
    by_power: dict[int, list] = {}
    for m, c in terms.items():
        e = m[v]
        row = by_power.setdefault(e, [0] * (total - e + 1))
        row[m[u]] = c
    top = max(by_power)
    out = []
    for e in range(top + 1):
        row = by_power.get(e)
        p = poly.trim(row) if row is not None else []
        out.append((total - e, p) if p else None)
    return out


def _sylvester_det(F: FieldSpec, a, b):
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for r in range(n):
        row = [None] * size
        for i in range(m + 1):
            row[r + i] = a[m - i]
        rows.append(row)
    for r in range(m):
        row = [None] * size
        for j in range(n + 1):
            row[r + j] = b[n - j]
        rows.append(row)

    @functools.lru_cache(maxsize=None)
    def minor(r: int, used: int):
        if r == size:
            return (0, [1])
        acc = None
        sign_pos = 0
        for c in range(size):
            if used >> c & 1:
                continue
            entry = rows[r][c]
            if entry is not None:
                sub = minor(r + 1, used | (1 << c))
                term = _bf_mul(F, entry, sub)
                if term is not None and sign_pos % 2:
                    term = _bf_neg(F, term)
                acc = _bf_add(F, acc, term)
            sign_pos += 1
        return acc

    return minor(0, 0)


def _bf_gcd(F: FieldSpec, forms):
    """gcd of nonzero binary forms: (multiplicity of (1:0), affine gcd)."""
    inf = min(d - poly.deg(p) for d, p in forms)
    g = []
    for _, p in forms:
        g = poly.pgcd(F, g, p)
    return inf, g


def _elimination_forms(F: FieldSpec, S: list[dict], v: int):
    views = [_coeffs_in(F, t, v) for t in S]
    out = []
    involved = []
    for t, view in zip(S, views):
        if len(view) == 1:
            out.append(view[0])
        else:
            involved.append(view)
    for i in range(len(involved)):
        for j in range(i + 1, len(involved)):
            r = _sylvester_det(F, tuple(involved[i]), tuple(involved[j]))
            if r is not None:
                out.append(r)
    return out


def _restrict(big: FieldSpec, emb, terms: dict, v: int, uw):
    u, w = [i for i in range(3) if i != v]
    degv = max(m[v] for m in terms)
    coeffs = [0] * (degv + 1)
    for m, c in terms.items():
        val = big.mul(emb[c], big.mul(big.pow(uw[0], m[u]), big.pow(uw[1], m[w])))
        coeffs[m[v]] = big.add(coeffs[m[v]], val)
    return poly.trim(coeffs)


def _place(v: int, uw, val):
    u, w = [i for i in range(3) if i != v]
    coords = [0, 0, 0]
    coords[u], coords[w], coords[v] = uw[0], uw[1], val
    return tuple(coords)


def _check_candidate(S, v, big, emb, uw, degree):
    """Common zero of S above the point (u:w) over ``big``?"""
    restricted = [_restrict(big, emb, t, v, uw) for t in S]
    nonzero = [r for r in restricted if r]
    if not nonzero:
        return ClosurePoint(degree, big, _place(v, uw, 0))
    h = []
    for r in nonzero:
        h = poly.pgcd(big, h, r)
    if poly.deg(h) < 1:
        return None
    roots = big.roots(h) if big.q <= _MAX_SCAN_FIELD else []
    if roots:
        return ClosurePoint(degree, big, _place(v, uw, roots[0]))
    return ClosurePoint(degree * poly.deg(h), big, None,
                        note=f"above ({uw[0]}:{uw[1]}) in F_{big.q}, last coordinate a root of {h}")


def closure_singularity(form: CubicForm) -> SingularityVerdict:
    """Decide whether the curve has a singular point over the closure."""
    F = form.spec
    S = _system(form)
    if not S:
        return SingularityVerdict(True, ClosurePoint(1, F, (1, 0, 0)))
    identity = tuple(range(F.q))
    for v in (2, 1, 0):
        elim = _elimination_forms(F, S, v)
        if not elim:
            continue
        corner = [0, 0, 0]
        corner[v] = 1
        if all(poly.form_eval(F, t, corner) == 0 for t in S):
            return SingularityVerdict(True, ClosurePoint(1, F, tuple(corner)))
        inf, g = _bf_gcd(F, elim)
        if inf > 0:
            hit = _check_candidate(S, v, F, identity, (1, 0), 1)
            if hit:
                return SingularityVerdict(True, hit)
        if poly.deg(g) < 1:
            return SingularityVerdict(False)
        for d, gd in poly.distinct_degree_parts(F, g):
            if F.q ** d > _MAX_SCAN_FIELD:
                return _oracle_verdict(form)
            big, emb = (F, identity) if d == 1 else extension(F, d)
            for t in big.roots([emb[c] for c in gd]):
                hit = _check_candidate(S, v, big, emb, (t, 1), d)
                if hit:
                    return SingularityVerdict(True, hit)
        return SingularityVerdict(False)
    return _oracle_verdict(form)


def _oracle_verdict(form: CubicForm) -> SingularityVerdict:
    # A reduced cubic has at most three singular points and a non-reduced one
    # is singular along a rational line, so degrees 2 and 3 cover everything.
    for k in (1, 2, 3):
        hit = scan_singular(form, k)
        if hit:
            return SingularityVerdict(True, hit, method="scan")
    return SingularityVerdict(False, method="scan")


def is_nonsingular_closure(form: CubicForm) -> bool:
    return not closure_singularity(form).singular


# -- brute-force oracle -------------------------------------------------------

def _plane_chunks(big: FieldSpec, chunk: int = 1 << 21):
    Q = big.q
    rows = max(1, chunk // Q)
    zs = np.arange(Q, dtype=np.int64)
    for y0 in range(0, Q, rows):
        ys = np.arange(y0, min(Q, y0 + rows), dtype=np.int64)
        Y = np.repeat(ys, Q)
        Z = np.tile(zs, len(ys))
        yield np.ones_like(Y), Y, Z
    yield np.zeros(Q, dtype=np.int64), np.ones(Q, dtype=np.int64), zs
    yield np.zeros(1, dtype=np.int64), np.zeros(1, dtype=np.int64), np.ones(1, dtype=np.int64)


def _zero_set(big: FieldSpec, terms: tuple):
    xs, ys, zs = [], [], []
    for X, Y, Z in _plane_chunks(big):
        vals = veval(big, terms, _Powers(big, X, Y, Z))
        hit = vals == 0
        xs.append(X[hit])
        ys.append(Y[hit])
        zs.append(Z[hit])
    return np.concatenate(xs), np.concatenate(ys), np.concatenate(zs)


class SingularScanner:
    """Brute-force search of PG(2, q^k) for singular points.

    Zero sets of the first equation are memoised, which makes scanning many
    forms over the same field cheap.
    """

    def __init__(self, spec: FieldSpec, k: int):
        self.spec = spec
        self.k = k
        self.big, self.emb = extension(spec, k)
        self._zero_sets: dict = {}

    def _embed(self, terms: dict) -> tuple:
        return tuple(sorted((m, self.emb[c]) for m, c in terms.items()))

    def scan(self, form: CubicForm) -> ClosurePoint | None:
        S = [self._embed(t) for t in _system(form)]
        big = self.big
        if not S:
            return ClosurePoint(self.k, big, (1, 0, 0))
        key = S[0]
        if key not in self._zero_sets:
            self._zero_sets[key] = _zero_set(big, key)
        X, Y, Z = self._zero_sets[key]
        mask = np.ones(len(X), dtype=bool)
        if len(S) > 1:
            pw = _Powers(big, X, Y, Z)
            for terms in S[1:]:
                mask &= veval(big, terms, pw) == 0
        idx = np.nonzero(mask)[0]
        if len(idx) == 0:
            return None
        i = idx[0]
        return ClosurePoint(self.k, big, (int(X[i]), int(Y[i]), int(Z[i])))


def scan_singular(form: CubicForm, k: int) -> ClosurePoint | None:
    """First singular point of the curve found in PG(2, q^k), or None."""
    return SingularScanner(form.spec, k).scan(form)


# -- lines and the curve ------------------------------------------------------

@dataclass(frozen=True)
class Intersection:
    """One point of C . L over the closure.

    ``point`` is set for rational points; otherwise ``degree`` is the
    extension degree and ``minpoly`` the (s:t)-parameter's minimal polynomial
    along the line basis ``basis``.
    """
    point: ProjPoint | None
    multiplicity: int
    degree: int = 1
    minpoly: tuple = ()
    basis: tuple = ()


def restrict_to_line(form: CubicForm, A, B) -> tuple[int, int, int, int]:
    """Coefficients (c0..c3) of F(sA + tB) = c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3."""
    F = form.spec
    return (
        evaluate(form, A),
        dot(F, gradient(form, A), B),
        dot(F, gradient(form, B), A),
        evaluate(form, B),
    )


def line_intersection(form: CubicForm, L) -> list[Intersection]:
    F = form.spec
    A, B = two_points_on(F, L)
    c = list(restrict_to_line(form, A, B))
    if not any(c):
        raise LineComponentError(f"line {normalize_line(F, L)} is a component of the curve")
    # f(s, t) = sum c_i s^(3-i) t^i; the root (s:t) = (1:0), i.e. A, has
    # multiplicity equal to the number of leading zero c_i
    out = []
    mult_inf = 0
    coeffs = c
    while coeffs[0] == 0:
        mult_inf += 1
        coeffs = coeffs[1:]
    if mult_inf:
        out.append(Intersection(normalize(F, A), mult_inf))
    # remaining roots u = s/t of g(u) = sum coeffs[i] u^(len-1-i), point uA + B
    g = poly.trim(list(reversed(coeffs)))
    for s in F.elements():
        m = 0
        while poly.deg(g) >= 1 and poly.peval(F, g, s) == 0:
            g = poly.pdivmod(F, g, [F.neg(s), 1])[0]
            m += 1
        if m:
            out.append(Intersection(normalize(F, combine(F, s, A, 1, B)), m))
    d = poly.deg(g)
    if d >= 2:
        mp = tuple(poly.monic(F, g))
        for _ in range(d):
            out.append(Intersection(None, 1, d, mp, (A, B)))
    return out


def tangent_at(form: CubicForm, P) -> ProjLine:
    if evaluate(form, P) != 0:
        raise CurveError(f"{P} is not on the curve")
    grad = gradient(form, P)
    if not any(grad):
        raise CurveError(f"{P} is a singular point")
    return normalize_line(form.spec, grad)


def _tangent_data(form: CubicForm, P):
    """(B, c2, c3): B spans the tangent at P with P, and
    F(sP + tB) = t^2 (c2 s + c3 t)."""
    F = form.spec
    L = tangent_at(form, P)
    A, B = two_points_on(F, L)
    if normalize(F, B) == normalize(F, P):
        B = A
    return B, dot(F, gradient(form, B), P), evaluate(form, B)


def is_inflexion(form: CubicForm, P) -> bool:
    B, c2, c3 = _tangent_data(form, P)
    if c2 == 0 and c3 == 0:
        raise LineComponentError(f"the tangent at {P} is a component of the curve")
    return c2 == 0


def third_point(form: CubicForm, P, Q) -> ProjPoint:
    """Third intersection of line PQ (the tangent when P = Q) with the curve."""
    F = form.spec
    if tuple(P) == tuple(Q):
        B, c2, c3 = _tangent_data(form, P)
        if c2 == 0 and c3 == 0:
            raise LineComponentError(f"the tangent at {P} is a component of the curve")
        return normalize(F, combine(F, c3, P, F.neg(c2), B))
    c1 = dot(F, gradient(form, P), Q)
    c2 = dot(F, gradient(form, Q), P)
    if c1 == 0 and c2 == 0:
        raise LineComponentError(f"line through {P} and {Q} is a component of the curve")
    return normalize(F, combine(F, c2, P, F.neg(c1), Q))


def hessian(form: CubicForm) -> dict:
    """Determinant of the matrix of second partials, as a ternary form dict."""
    F = form.spec
    if F.p == 2:
        raise CurveError("the Hessian is identically zero in characteristic 2")
    first = [poly.form_partial(F, form.terms, i) for i in range(3)]
    m = [[poly.form_partial(F, first[i], j) for j in range(3)] for i in range(3)]

    def mul(a, b):
        return poly.form_mul(F, a, b)

    def sub(a, b):
        return poly.form_add(F, a, poly.form_scale(F, F.neg(1), b))

    c0 = sub(mul(m[1][1], m[2][2]), mul(m[1][2], m[2][1]))
    c1 = sub(mul(m[1][0], m[2][2]), mul(m[1][2], m[2][0]))
    c2 = sub(mul(m[1][0], m[2][1]), mul(m[1][1], m[2][0]))
    return poly.form_add(F, sub(mul(m[0][0], c0), mul(m[0][1], c1)), mul(m[0][2], c2))


def hessian_form(form: CubicForm) -> CubicForm:
    return CubicForm.from_dict(form.spec, hessian(form))


# -- absolute irreducibility --------------------------------------------------

def _line_families(big: FieldSpec, chunk: int = 1 << 20):
    """Yield (dual coords, A, B) arrays for all lines of PG(2, Q)."""
    Q = big.q
    rows = max(1, chunk // Q)
    cs = np.arange(Q, dtype=np.int64)
    for b0 in range(0, Q, rows):
        bs = np.arange(b0, min(Q, b0 + rows), dtype=np.int64)
        b = np.repeat(bs, Q)
        c = np.tile(cs, len(bs))
        one, zero = np.ones_like(b), np.zeros_like(b)
        yield (one, b, c), (big.vneg(b), one, zero), (big.vneg(c), zero, one)
    one, zero = np.ones(Q, dtype=np.int64), np.zeros(Q, dtype=np.int64)
    yield (zero, one, cs), (one, zero, zero), (zero, big.vneg(cs), one)
    z1, o1 = np.zeros(1, dtype=np.int64), np.ones(1, dtype=np.int64)
    yield (z1, z1, o1), (o1, z1, z1), (z1, o1, z1)


def linear_factor(form: CubicForm) -> ClosurePoint | None:
    """A line over F_{q^2} or F_{q^3} dividing the form, or None.

    A cubic is absolutely reducible iff it has such a factor.  The line is
    reported in dual coordinates.
    """
    F = form.spec
    for k in (2, 3):
        big, emb = extension(F, k)
        terms = tuple((m, emb[c]) for m, c in form.terms.items())
        grads = [tuple((m, emb[c]) for m, c in t) for t in form._grad_terms]
        for (la, lb, lc), A, B in _line_families(big):
            pa, pb = _Powers(big, *A), _Powers(big, *B)
            ok = veval(big, terms, pa) == 0
            ok &= veval(big, terms, pb) == 0
            if not ok.any():
                continue
            ga = [veval(big, g, pa) for g in grads]
            gb = [veval(big, g, pb) for g in grads]
            c1 = big.vadd(big.vadd(big.vmul(ga[0], B[0]), big.vmul(ga[1], B[1])), big.vmul(ga[2], B[2]))
            c2 = big.vadd(big.vadd(big.vmul(gb[0], A[0]), big.vmul(gb[1], A[1])), big.vmul(gb[2], A[2]))
            ok &= (c1 == 0) & (c2 == 0)
            idx = np.nonzero(ok)[0]
            if len(idx):
                i = idx[0]
                return ClosurePoint(k, big, (int(la[i]), int(lb[i]), int(lc[i])), note="line")
    return None


def is_absolutely_irreducible(form: CubicForm) -> bool:
    return linear_factor(form) is None


# -- curves -------------------------------------------------------------------

class CubicCurve:
    """A cubic form with lazily cached point, singularity and inflexion data."""

    def __init__(self, form: CubicForm):
        self.form = form
        self.spec = form.spec

    @classmethod
    def from_coeffs(cls, spec: FieldSpec, coeffs) -> "CubicCurve":
        return cls(CubicForm(spec, tuple(int(c) for c in coeffs)))

    def __repr__(self):
        return f"CubicCurve(q={self.spec.q}, {self.form.pretty()})"

    def __call__(self, P) -> int:
        return evaluate(self.form, P)

    def contains(self, P) -> bool:
        return evaluate(self.form, P) == 0

    @cached_property
    def points(self) -> tuple[ProjPoint, ...]:
        return rational_points(self.form)

    @cached_property
    def singular_points(self) -> tuple[ProjPoint, ...]:
        return singular_points_rational(self.form)

    @cached_property
    def closure_verdict(self) -> SingularityVerdict:
        return closure_singularity(self.form)

    @property
    def is_nonsingular(self) -> bool:
        return not self.closure_verdict.singular

    @cached_property
    def smooth_points(self) -> tuple[ProjPoint, ...]:
        """C(K)': rational points minus rational singular points."""
        bad = set(self.singular_points)
        return tuple(P for P in self.points if P not in bad)

    @cached_property
    def inflexions(self) -> tuple[ProjPoint, ...]:
        return inflexions(self)

    def tangent_at(self, P) -> ProjLine:
        return tangent_at(self.form, P)

    def is_inflexion(self, P) -> bool:
        return is_inflexion(self.form, P)

    def line_intersection(self, L) -> list[Intersection]:
        return line_intersection(self.form, L)

    def third_point(self, P, Q) -> ProjPoint:
        return third_point(self.form, P, Q)

    def to_text(self) -> str:
        return f"{self.spec.header()}\n{self.form}\n"


def inflexions(curve: CubicCurve) -> tuple[ProjPoint, ...]:
    """Rational inflexions among the nonsingular rational points.

    Points whose tangent is a component of a reducible curve are skipped.
    """
    out = []
    for P in curve.smooth_points:
        try:
            if is_inflexion(curve.form, P):
                out.append(P)
        except LineComponentError:
            continue
    return tuple(out)


def hessian_inflexions(curve: CubicCurve) -> tuple[ProjPoint, ...]:
    H = hessian(curve.form)
    F = curve.spec
    return tuple(P for P in curve.smooth_points if poly.form_eval(F, H, P) == 0)


def read_curve(text: str) -> CubicCurve:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if len(lines) < 2:
        raise CurveError("curve file needs a field header and a form line")
    spec = parse_header(lines[0])
    if not lines[1].startswith("form="):
        raise CurveError(f"malformed form line {lines[1]!r}")
    coeffs = [int(v) for v in lines[1][5:].split(",")]
    return CubicCurve(CubicForm(spec, tuple(coeffs)))


def load_curve(path) -> CubicCurve:
    with open(path) as fh:
        return read_curve(fh.read())

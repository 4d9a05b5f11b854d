"""Canonical forms of singular and nonsingular plane cubics over F_q.

Family tags (singular curves are named N<i>_<j>: i rational inflexions, j
rational tangents at the double point):

    N1_2  N3_2  N0_2  N0_1  Nq_1  N1_1
    nine  three-concurrent  three-nonconcurrent
    weierstrass  weierstrass-p3a  weierstrass-p3b  weierstrass-p2a  weierstrass-p2b
    noflex-q2  noflex-q1a  noflex-q1b  noflex-q0

Every builder checks the property its family advertises before returning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import poly
from .cubic import CubicCurve, CubicForm, is_absolutely_irreducible, substitute
from .gf import FieldSpec, field_of_order
from .linalg import det3, inverse, matmul
from .plane import ProjPoint


class CanonError(ValueError):
    pass


class ResidueError(CanonError):
    """q does not satisfy the family's congruence condition."""


class ConstraintError(CanonError):
    """A parameter violates the family's constraint."""


X3, Y3, Z3, X2Y, X2Z, XY2, Y2Z, XZ2, YZ2, XYZ = (
    (3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (2, 0, 1),
    (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1),
)


@dataclass(frozen=True)
class CanonicalSpec:
    family: str
    params: tuple = ()

    @classmethod
    def make(cls, family: str, **params) -> "CanonicalSpec":
        return cls(family, tuple(sorted((k, v) for k, v in params.items() if v is not None)))

    def get(self, name: str, default=None):
        return dict(self.params).get(name, default)

    def __str__(self):
        extra = " ".join(f"{k}={v}" for k, v in self.params)
        return f"family={self.family}" + (f" {extra}" if extra else "")


@dataclass(frozen=True)
class SingularType:
    kind: str  # node, cusp or isolated-double-point
    rational_tangents: int
    point: ProjPoint


# -- small field helpers ------------------------------------------------------

def smallest_trace_one(F: FieldSpec) -> int:
    return next(a for a in F.elements() if F.trace(a) == 1)


def _cube_classes(F: FieldSpec) -> tuple[int, ...]:
    """(1,) when every element is a cube, else (1, alpha, alpha^2)."""
    if (F.q - 1) % 3:
        return (1,)
    a = F.primitive_element
    return (1, a, F.mul(a, a))


def _irreducible_cubic(F: FieldSpec, coeffs) -> bool:
    return not F.roots(coeffs)


def _form(F: FieldSpec, terms) -> CubicForm:
    acc: dict = {}
    for m, c in terms:
        acc[m] = F.add(acc.get(m, 0), c)
    return CubicForm.from_dict(F, acc)


# -- residue conditions -------------------------------------------------------

def _need(cond: bool, family: str, text: str, q: int):
    if not cond:
        raise ResidueError(f"family {family} requires {text}, got q={q}")


def _check_residue(family: str, F: FieldSpec):
    q, p = F.q, F.p
    rules = {
        "N1_2": (q % 3 != 1, "q not congruent to 1 mod 3"),
        "N3_2": (q % 3 == 1, "q congruent to 1 mod 3"),
        "N0_2": (q % 3 == 1, "q congruent to 1 mod 3"),
        "N0_1": (p == 3, "characteristic 3"),
        "Nq_1": (p == 3, "characteristic 3"),
        "N1_1": (p != 3, "characteristic other than 3"),
        "nine": (q % 3 == 1, "q congruent to 1 mod 3"),
        "three-concurrent": (True, ""),
        "three-nonconcurrent": (True, ""),
        "weierstrass": (p not in (2, 3), "characteristic other than 2 and 3"),
        "weierstrass-p3a": (p == 3, "characteristic 3"),
        "weierstrass-p3b": (p == 3, "characteristic 3"),
        "weierstrass-p2a": (p == 2, "characteristic 2"),
        "weierstrass-p2b": (p == 2, "characteristic 2"),
        "noflex-q2": (q % 3 == 2, "q congruent to 2 mod 3"),
        "noflex-q1a": (q % 3 == 1, "q congruent to 1 mod 3"),
        "noflex-q1b": (q % 3 == 1, "q congruent to 1 mod 3"),
        "noflex-q0": (q % 3 == 0, "q congruent to 0 mod 3"),
    }
    if family not in rules:
        raise CanonError(f"unknown family {family!r}")
    ok, text = rules[family]
    _need(ok, family, text, q)


# -- parameter constraints ----------------------------------------------------

def _param(spec: CanonicalSpec, F: FieldSpec, name: str, default):
    v = spec.get(name)
    if v is None:
        return default
    try:
        return F.check(int(v))
    except Exception as exc:
        raise ConstraintError(f"parameter {name}={v} is not an element of F_{F.q}") from exc


def _first(values, family, what):
    for v in values:
        return v
    raise ConstraintError(f"family {family}: no admissible {what} over this field")


def _nine_ok(F, c):
    return F.pow(c, 3) != 1


def _nonconcurrent_ok(F, e):
    if e == 0:
        return False
    if F.p != 3 and F.mul(F.from_int(27), e) == F.neg(1):
        return False
    return True


def _weierstrass_disc(F, c, d):
    return F.add(F.mul(4 % F.p, F.pow(c, 3)), F.mul(F.from_int(27), F.mul(d, d)))


def _noflex2_ok(F, d):
    # T^3 - 3T + d
    return _irreducible_cubic(F, [d, F.neg(F.from_int(3)), 0, 1])


def _noflex0_ok(F, d):
    # T^3 + dT - 1
    return _irreducible_cubic(F, [F.neg(1), d, 0, 1])


def resolve_params(spec: CanonicalSpec, F: FieldSpec) -> dict:
    """Fill defaults (smallest admissible values) and check every constraint."""
    fam = spec.family
    _check_residue(fam, F)
    els = list(F.elements())
    t1 = smallest_trace_one(F) if F.p == 2 else None
    out: dict = {}

    if fam in ("N1_2", "N3_2", "N1_1", "Nq_1", "N0_1"):
        return out
    if fam == "N0_2":
        out["alpha"] = F.primitive_element
        return out
    if fam == "nine":
        c = _param(spec, F, "c", _first((v for v in els if _nine_ok(F, v)), fam, "c"))
        if not _nine_ok(F, c):
            raise ConstraintError(f"family nine: c={c} has c^3 = 1")
        out["c"] = c
    elif fam == "three-concurrent":
        allowed = _cube_classes(F)
        e = _param(spec, F, "e", 1)
        if e not in allowed:
            raise ConstraintError(f"family three-concurrent: e={e} not in {list(allowed)}")
        out["e"] = e
    elif fam == "three-nonconcurrent":
        e = _param(spec, F, "e", _first((v for v in els if _nonconcurrent_ok(F, v)), fam, "e"))
        if e == 0:
            raise ConstraintError("family three-nonconcurrent: e must be nonzero")
        if not _nonconcurrent_ok(F, e):
            raise ConstraintError(f"family three-nonconcurrent: e={e} equals -1/27")
        out["e"] = e
    elif fam == "weierstrass":
        c = _param(spec, F, "c", None)
        d = _param(spec, F, "d", None)
        if c is None or d is None:
            pairs = [(a, b) for a in els for b in els if _weierstrass_disc(F, a, b)]
            pairs = [pr for pr in pairs if (c is None or pr[0] == c) and (d is None or pr[1] == d)]
            c, d = _first(pairs, fam, "(c, d)")
        if _weierstrass_disc(F, c, d) == 0:
            raise ConstraintError(f"family weierstrass: 4c^3 + 27d^2 = 0 for c={c}, d={d}")
        out.update(c=c, d=d)
    elif fam == "weierstrass-p3a":
        b = _param(spec, F, "b", 1)
        d = _param(spec, F, "d", 1)
        if F.mul(b, d) == 0:
            raise ConstraintError(f"family weierstrass-p3a: bd must be nonzero (b={b}, d={d})")
        out.update(b=b, d=d)
    elif fam == "weierstrass-p3b":
        c = _param(spec, F, "c", 1)
        d = _param(spec, F, "d", 0)
        if c == 0:
            raise ConstraintError("family weierstrass-p3b: c must be nonzero")
        out.update(c=c, d=d)
    elif fam == "weierstrass-p2a":
        b = _param(spec, F, "b", 0)
        d = _param(spec, F, "d", 1)
        if b not in (0, t1):
            raise ConstraintError(f"family weierstrass-p2a: b must be 0 or {t1} (trace 1), got {b}")
        out.update(b=b, d=d)
    elif fam == "weierstrass-p2b":
        e = _param(spec, F, "e", 1)
        c = _param(spec, F, "c", 0)
        d = _param(spec, F, "d", 0)
        if e not in _cube_classes(F):
            raise ConstraintError(f"family weierstrass-p2b: e={e} not in {list(_cube_classes(F))}")
        if d not in (0, t1):
            raise ConstraintError(f"family weierstrass-p2b: d must be 0 or {t1} (trace 1), got {d}")
        out.update(e=e, c=c, d=d)
    elif fam == "noflex-q2":
        d = _param(spec, F, "d", _first((v for v in els if _noflex2_ok(F, v)), fam, "d"))
        if not _noflex2_ok(F, d):
            raise ConstraintError(f"family noflex-q2: T^3 - 3T + {d} is reducible")
        out.update(c=_param(spec, F, "c", 0), d=d)
    elif fam == "noflex-q1a":
        out.update(c=_param(spec, F, "c", 0), alpha=F.primitive_element)
    elif fam == "noflex-q1b":
        a = F.primitive_element
        e = _param(spec, F, "e", a)
        if e not in (a, F.mul(a, a)):
            raise ConstraintError(f"family noflex-q1b: e must be {a} or {F.mul(a, a)}, got {e}")
        out.update(c=_param(spec, F, "c", 0), e=e)
    elif fam == "noflex-q0":
        c = _param(spec, F, "c", 0)
        d = _param(spec, F, "d", _first((v for v in els if _noflex0_ok(F, v)), fam, "d"))
        if c == 1:
            raise ConstraintError("family noflex-q0: c must differ from 1")
        if not _noflex0_ok(F, d):
            raise ConstraintError(f"family noflex-q0: T^3 + {d}T - 1 is reducible")
        out.update(c=c, d=d)
    return out


# -- forms --------------------------------------------------------------------

def canonical_form(family: str, F: FieldSpec, p: dict) -> CubicForm:
    m1 = F.neg(1)
    n3 = F.neg(F.from_int(3))
    if family in ("N1_2", "N3_2"):
        return _form(F, [(XYZ, 1), (X3, m1), (Y3, m1)])
    if family == "N0_2":
        return _form(F, [(XYZ, 1), (X3, m1), (Y3, F.neg(p["alpha"]))])
    if family == "N0_1":
        return _form(F, [(Y2Z, 1), (X2Y, m1), (X3, m1)])
    if family in ("Nq_1", "N1_1"):
        return _form(F, [(Y2Z, 1), (X3, m1)])
    if family == "nine":
        return _form(F, [(X3, 1), (Y3, 1), (Z3, 1), (XYZ, F.mul(n3, p["c"]))])
    if family == "three-concurrent":
        return _form(F, [(X2Y, 1), (XY2, 1), (Z3, p["e"])])
    if family == "three-nonconcurrent":
        e = p["e"]
        three_e = F.mul(F.from_int(3), e)
        terms = [(XYZ, F.add(1, F.mul(F.from_int(6), e)))]
        terms += [(m, e) for m in (X3, Y3, Z3)]
        terms += [(m, three_e) for m in (X2Y, X2Z, XY2, Y2Z, XZ2, YZ2)]
        return _form(F, terms)
    if family in ("weierstrass", "weierstrass-p3b"):
        return _form(F, [(Y2Z, 1), (X3, m1), (XZ2, F.neg(p["c"])), (Z3, F.neg(p["d"]))])
    if family == "weierstrass-p3a":
        return _form(F, [(Y2Z, 1), (X3, m1), (X2Z, F.neg(p["b"])), (Z3, F.neg(p["d"]))])
    if family == "weierstrass-p2a":
        return _form(F, [(Y2Z, 1), (XYZ, 1), (X3, 1), (X2Z, p["b"]), (Z3, p["d"])])
    if family == "weierstrass-p2b":
        return _form(F, [(Y2Z, 1), (YZ2, 1), (X3, p["e"]), (XZ2, p["c"]), (Z3, p["d"])])
    if family == "noflex-q2":
        c, d = p["c"], p["d"]
        k = F.mul(n3, c)  # -3c
        return _form(F, [
            (Z3, 1), (X2Z, k), (XYZ, F.neg(F.mul(k, d))), (Y2Z, k),
            (X3, m1), (XY2, F.from_int(3)), (Y3, F.neg(d)),
        ])
    if family == "noflex-q1a":
        a = p["alpha"]
        return _form(F, [(X3, 1), (Y3, a), (Z3, F.mul(a, a)), (XYZ, F.mul(n3, p["c"]))])
    if family == "noflex-q1b":
        c, e = p["c"], p["e"]
        mc = F.neg(c)
        return _form(F, [
            (XY2, 1), (X2Z, 1), (YZ2, e),
            (X3, mc), (Y3, F.mul(mc, e)), (Z3, F.mul(mc, F.mul(e, e))),
            (XYZ, F.mul(F.from_int(3), F.mul(c, e))),
        ])
    if family == "noflex-q0":
        c, d = p["c"], p["d"]
        return _form(F, [
            (X3, 1), (Y3, 1), (Z3, c), (X2Z, d), (XY2, d), (X2Y, F.mul(d, d)), (YZ2, d),
        ])
    raise CanonError(f"unknown family {family!r}")


SINGULAR_FAMILIES = {
    # tag: (rational inflexions, rational tangents at the double point)
    "N1_2": (1, 2),
    "N3_2": (3, 2),
    "N0_2": (0, 2),
    "N0_1": (0, 1),
    "Nq_1": (None, 1),
    "N1_1": (1, 1),
}

NONSINGULAR_FAMILIES = {
    # tag: advertised number of rational inflexions (None: at least one)
    "nine": 9,
    "three-concurrent": 3,
    "three-nonconcurrent": 3,
    "weierstrass": None,
    "weierstrass-p3a": None,
    "weierstrass-p3b": None,
    "weierstrass-p2a": None,
    "weierstrass-p2b": None,
    "noflex-q2": 0,
    "noflex-q1a": 0,
    "noflex-q1b": 0,
    "noflex-q0": 0,
}

FAMILIES = tuple(SINGULAR_FAMILIES) + tuple(NONSINGULAR_FAMILIES)


# -- singular point analysis --------------------------------------------------

def _move_to_origin(F: FieldSpec, P) -> list[list[int]]:
    """Matrix M (rows) with M e_3 = P, invertible."""
    k = next(i for i in range(3) if P[i])
    others = [i for i in range(3) if i != k]
    cols = []
    for i in others:
        e = [0, 0, 0]
        e[i] = 1
        cols.append(e)
    cols.append(list(P))
    return [[cols[j][i] for j in range(3)] for i in range(3)]


def tangent_cone(form: CubicForm, P) -> dict:
    """Quadratic part Q(X, Y) after moving the double point P to (0:0:1)."""
    F = form.spec
    G = poly.form_substitute(F, form.terms, _move_to_origin(F, P))
    for m in G:
        if m[2] >= 2:
            raise CanonError(f"{P} is not a singular point")
    return {(m[0], m[1]): c for m, c in G.items() if m[2] == 1}


def classify_singular(curve: CubicCurve) -> SingularType:
    F = curve.spec
    sing = curve.singular_points
    if curve.is_nonsingular:
        raise CanonError("curve is nonsingular")
    if not is_absolutely_irreducible(curve.form):
        raise CanonError("curve is reducible")
    if len(sing) != 1:
        raise CanonError(f"expected exactly one rational singular point, found {len(sing)}")
    P = sing[0]
    Q = tangent_cone(curve.form, P)
    if not Q:
        raise CanonError(f"{P} is a triple point")
    # Q = a X^2 + b XY + c Y^2: roots (1:t) with a + bt + ct^2 = 0, and (0:1) iff c = 0.
    # A binary quadratic with one root in PG(1, q) has a double root there.
    a, b, c = Q.get((2, 0), 0), Q.get((1, 1), 0), Q.get((0, 2), 0)
    n = len(F.roots([a, b, c])) + (c == 0)
    kind = {2: "node", 1: "cusp", 0: "isolated-double-point"}[n]
    return SingularType(kind, n, P)


# -- building -----------------------------------------------------------------

def _tangents_concurrent(curve: CubicCurve, pts) -> bool:
    lines = [curve.tangent_at(P) for P in pts]
    return det3(curve.spec, lines) == 0


def build(spec: CanonicalSpec, q) -> CubicCurve:
    """Build and verify the canonical curve of the given family over F_q."""
    F = q if isinstance(q, FieldSpec) else field_of_order(q)
    params = resolve_params(spec, F)
    curve = CubicCurve(canonical_form(spec.family, F, params))
    fam = spec.family
    if fam in SINGULAR_FAMILIES:
        _verify_singular(fam, curve)
    else:
        _verify_nonsingular(fam, curve)
    return curve


def _verify_singular(fam: str, curve: CubicCurve):
    n_infl, n_tan = SINGULAR_FAMILIES[fam]
    st = classify_singular(curve)
    if st.rational_tangents != n_tan:
        raise AssertionError(f"{fam}: {st.rational_tangents} rational tangents, expected {n_tan}")
    count = len(curve.inflexions)
    if n_infl is None:
        n_infl = len(curve.smooth_points)
    if count != n_infl:
        raise AssertionError(f"{fam}: {count} rational inflexions, expected {n_infl}")


def _verify_nonsingular(fam: str, curve: CubicCurve):
    if not curve.is_nonsingular:
        raise ConstraintError(f"family {fam}: parameters give a singular curve ({curve.closure_verdict.witness})")
    infl = curve.inflexions
    want = NONSINGULAR_FAMILIES[fam]
    if want is None:
        if ProjPoint(0, 1, 0) not in infl:
            raise AssertionError(f"{fam}: (0:1:0) is not an inflexion")
        return
    if len(infl) != want:
        if want == 3 and len(infl) == 9:
            raise ConstraintError(f"family {fam}: parameters give 9 rational inflexions, a curve of family nine")
        raise AssertionError(f"{fam}: {len(infl)} rational inflexions, expected {want}")
    if want == 3:
        concurrent = _tangents_concurrent(curve, infl)
        if concurrent != (fam == "three-concurrent"):
            raise AssertionError(f"{fam}: inflexional tangents concurrent={concurrent}")


def parameter_space(family: str, F: FieldSpec):
    """All parameter choices allowed by the family's stated constraints."""
    _check_residue(family, F)
    els = list(F.elements())
    t1 = smallest_trace_one(F) if F.p == 2 else None
    if family in SINGULAR_FAMILIES:
        yield {}
    elif family == "nine":
        yield from ({"c": c} for c in els if _nine_ok(F, c))
    elif family == "three-concurrent":
        yield from ({"e": e} for e in _cube_classes(F))
    elif family == "three-nonconcurrent":
        yield from ({"e": e} for e in els if _nonconcurrent_ok(F, e))
    elif family == "weierstrass":
        yield from ({"c": c, "d": d} for c in els for d in els if _weierstrass_disc(F, c, d))
    elif family == "weierstrass-p3a":
        yield from ({"b": b, "d": d} for b in els[1:] for d in els[1:])
    elif family == "weierstrass-p3b":
        yield from ({"c": c, "d": d} for c in els[1:] for d in els)
    elif family == "weierstrass-p2a":
        yield from ({"b": b, "d": d} for b in (0, t1) for d in els[1:])
    elif family == "weierstrass-p2b":
        yield from ({"e": e, "c": c, "d": d} for e in _cube_classes(F) for c in els for d in (0, t1))
    elif family == "noflex-q2":
        yield from ({"c": c, "d": d} for d in els if _noflex2_ok(F, d) for c in els)
    elif family == "noflex-q1a":
        yield from ({"c": c} for c in els)
    elif family == "noflex-q1b":
        a = F.primitive_element
        yield from ({"c": c, "e": e} for e in (a, F.mul(a, a)) for c in els)
    elif family == "noflex-q0":
        yield from ({"c": c, "d": d} for d in els if _noflex0_ok(F, d) for c in els if c != 1)


def valid_curves(family: str, F: FieldSpec):
    """(params, curve) for every admissible parameter choice that passes
    verification; rejected choices are skipped."""
    for params in parameter_space(family, F):
        try:
            yield params, build(CanonicalSpec.make(family, **params), F)
        except ConstraintError:
            continue


def families_for(F: FieldSpec, singular: bool | None = None) -> list[str]:
    tags = []
    for fam in FAMILIES:
        if singular is not None and (fam in SINGULAR_FAMILIES) != singular:
            continue
        try:
            _check_residue(fam, F)
        except ResidueError:
            continue
        tags.append(fam)
    return tags


# -- projective equivalence ---------------------------------------------------

def _frame_matrix(F: FieldSpec, pts):
    """M with M e_i ~ pts[i] (i < 3) and M (1,1,1) ~ pts[3]."""
    A = [[pts[j][i] for j in range(3)] for i in range(3)]
    lam = matmul(F, inverse(F, A), [[v] for v in pts[3]])
    return [[F.mul(A[i][j], lam[j][0]) for j in range(3)] for i in range(3)]


def _general_position(F, pts) -> bool:
    return all(det3(F, trio) for trio in itertools.combinations(pts, 3))


def _point_classes(curve: CubicCurve):
    sing = set(curve.singular_points)
    infl = set(curve.inflexions)
    def cls(P):
        return 0 if P in sing else 1 if P in infl else 2
    return cls


def _proportional(a: CubicForm, b: CubicForm) -> bool:
    return a.normalized() == b.normalized()


def projective_map(C1: CubicCurve, C2: CubicCurve):
    """A matrix M with F2(M v) proportional to F1(v), or None.

    Frames of four curve points in general position are matched against
    point quadruples of C2 of the same kind (singular / inflexion / other).
    """
    F = C1.spec
    if C2.spec != F:
        return None
    if len(C1.points) != len(C2.points) or len(C1.inflexions) != len(C2.inflexions):
        return None
    if len(C1.singular_points) != len(C2.singular_points):
        return None
    cls1, cls2 = _point_classes(C1), _point_classes(C2)
    ordered = sorted(C1.points, key=cls1)
    frame = _find_frame(F, ordered)
    if frame is None:
        return _search_all(C1, C2)
    M1inv = inverse(F, _frame_matrix(F, frame))
    kinds = [cls1(P) for P in frame]
    pools = [[Q for Q in C2.points if cls2(Q) == k] for k in kinds]
    for images in itertools.product(*pools):
        if len(set(images)) < 4 or not _general_position(F, images):
            continue
        # M sends frame -> images: v -> M2 M1^-1 v; F2(M v) ~ F1(v)
        M = matmul(F, _frame_matrix(F, images), M1inv)
        if _proportional(substitute(C2.form, M), C1.form):
            return M
    return None


def _find_frame(F, ordered):
    for combo in itertools.combinations(ordered, 4):
        if _general_position(F, combo):
            return list(combo)
    return None


def _search_all(C1: CubicCurve, C2: CubicCurve):
    from .census import pgl3

    F = C1.spec
    if F.q > 5:
        raise CanonError("no frame of curve points; exhaustive search limited to q <= 5")
    target = C1.form.normalized()
    for M in pgl3(F):
        if substitute(C2.form, M).normalized() == target:
            return M
    return None


def projectively_equivalent(C1: CubicCurve, C2: CubicCurve) -> bool:
    return projective_map(C1, C2) is not None


# -- family census ------------------------------------------------------------

def isolated_double_point_curves(F: FieldSpec) -> list[CubicCurve]:
    """One curve Z Q(X, Y) + C(X, Y) with an isolated double point for each
    rational inflexion count that occurs, found by deterministic search."""
    els = list(F.elements())
    quad = None
    for a, b in itertools.product(els, els[1:]):
        if not F.roots([b, a, 1]):
            quad = (a, b)
            break
    a, b = quad
    found: dict[int, CubicCurve] = {}
    for c0, c1, c2, c3 in itertools.product(els, repeat=4):
        terms = {X2Z: 1, XYZ: a, Y2Z: b, X3: c3, X2Y: c2, XY2: c1, Y3: c0}
        terms = {m: v for m, v in terms.items() if v}
        if not any(terms.get(m) for m in (X3, X2Y, XY2, Y3)):
            continue
        curve = CubicCurve(CubicForm.from_dict(F, terms))
        n = len(curve.inflexions)
        if n in found:
            continue
        if not is_absolutely_irreducible(curve.form) or len(curve.singular_points) != 1:
            continue
        found[n] = curve
        if len(found) == 3:
            break
    return [found[k] for k in sorted(found)]


@dataclass
class FamilyCensus:
    q: int
    singular_classes: list = field(default_factory=list)  # (label, kind, inflexions, curve)
    nonsingular: list = field(default_factory=list)  # (family, params, N1, inflexions, structure)
    distinct_nonsingular: dict = field(default_factory=dict)

    @property
    def n_singular_classes(self) -> int:
        return len(self.singular_classes)


def verify_family_census(q: int) -> FamilyCensus:
    from .group import CurveGroup

    if q > 16:
        raise CanonError("family census supports q <= 16")
    F = field_of_order(q)
    report = FamilyCensus(q)
    for fam in families_for(F, singular=True):
        C = build(CanonicalSpec.make(fam), F)
        st = classify_singular(C)
        report.singular_classes.append((fam, st.kind, len(C.inflexions), C))
    for C in isolated_double_point_curves(F):
        report.singular_classes.append(("isolated", "isolated-double-point", len(C.inflexions), C))
    sigs = {(kind, n) for _, kind, n, _ in report.singular_classes}
    if len(sigs) != len(report.singular_classes):
        raise AssertionError("two singular representatives share a signature")
    for fam in families_for(F, singular=False):
        for params, C in valid_curves(fam, F):
            G = CurveGroup(C, C.inflexions[0] if C.inflexions else C.points[0])
            sig = (len(C.inflexions), len(C.points), G.structure())
            report.nonsingular.append((fam, params, sig[1], sig[0], sig[2]))
    if F.q % 3 == 1:
        # the raw forms, including the one that turns out to have nine inflexions
        curves = [
            CubicCurve(canonical_form("three-concurrent", F, {"e": e})) for e in _cube_classes(F)
        ]
        inequivalent = all(
            not projectively_equivalent(a, b) for a, b in itertools.combinations(curves, 2)
        )
        report.distinct_nonsingular["three-concurrent"] = (len(curves), inequivalent)
    return report

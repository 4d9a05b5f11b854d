"""Point counts, Hasse and Waterhouse checks, and the projective census.

The census sweeps PGL(3, q) orbits over all cubic forms up to scalar for
q in {2, 3, 4}.  Each form is encoded as the integer sum c_i q^i over the
fixed monomial order.
"""

from __future__ import annotations

import functools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .cubic import MONOMIALS, CubicCurve, CubicForm, is_absolutely_irreducible
from .gf import FieldSpec, field_of_order
from .group import CurveGroup, GroupStructure


class CensusError(ValueError):
    pass


# -- symbols and closed formulas ----------------------------------------------

def symbol_m4(c: int) -> int:
    """(-4/c): 1 if c = 1 mod 4, 0 if c even, -1 if c = -1 mod 4."""
    if c % 2 == 0:
        return 0
    return 1 if c % 4 == 1 else -1


def symbol_m3(c: int) -> int:
    """(-3/c): 1 if c = 1 mod 3, 0 if 3 | c, -1 if c = -1 mod 3."""
    r = c % 3
    return 0 if r == 0 else 1 if r == 1 else -1


def a_formula(q: int) -> int:
    return 2 * q + 3 + symbol_m4(q) + 2 * symbol_m3(q)


def p_formula(q: int) -> int:
    s3 = symbol_m3(q)
    return 3 * q + 2 + symbol_m4(q) + s3 * s3 + 3 * s3


def table_row(q: int) -> dict:
    """Expected class counts by rational inflexion number, by q mod 12."""
    m = q % 12
    if m in (3, 9, 2, 8, 5, 11):
        n1 = {3: q + 3, 9: q + 5, 2: q + 2, 8: q + 2, 5: q + 3, 11: q + 1}[m]
        row = {"n9": 0, "n3": q - 1, "n1": n1, "n0": q - 1}
    else:
        n9 = {4: q + 8, 1: q + 11, 7: q + 5}[m] // 12
        n1 = {4: 5 * q + 12, 1: 5 * q + 15, 7: 5 * q + 9}[m] // 4
        row = {"n9": n9, "n3": (2 * q + 4) // 3, "n1": n1, "n0": q + 1}
    row["A"] = row["n9"] + row["n3"] + row["n1"]
    row["P"] = row["A"] + row["n0"]
    return row


# -- Hasse window and residue conditions --------------------------------------

def isqrt_floor_2sqrt(q: int) -> int:
    return math.isqrt(4 * q)


def in_hasse_window(q: int, n1: int) -> bool:
    return (n1 - q - 1) ** 2 <= 4 * q


def hasse_check(curve: CubicCurve) -> bool:
    if not curve.is_nonsingular:
        raise CensusError("the Hasse window applies to nonsingular curves")
    return in_hasse_window(curve.spec.q, len(curve.points))


def residue_ok(n1: int, inflexions: int) -> bool:
    if inflexions == 0 or inflexions == 3:
        return n1 % 3 == 0
    if inflexions == 1:
        return n1 % 3 != 0
    if inflexions == 9:
        return n1 % 9 == 0
    return False


def mod_check(curve: CubicCurve) -> bool:
    if not curve.is_nonsingular:
        raise CensusError("the residue conditions apply to nonsingular curves")
    return residue_ok(len(curve.points), len(curve.inflexions))


def _ph(q: int) -> tuple[int, int]:
    F = field_of_order(q)
    return F.p, F.h


def is_exceptional(q: int) -> bool:
    p, h = _ph(q)
    return h % 2 == 1 and h >= 3 and isqrt_floor_2sqrt(q) % p == 0


def max_points(q: int) -> int:
    m = isqrt_floor_2sqrt(q)
    return q + m if is_exceptional(q) else q + 1 + m


def min_points(q: int) -> int:
    m = isqrt_floor_2sqrt(q)
    return q + 2 - m if is_exceptional(q) else q + 1 - m


def full_interval_expected(q: int) -> bool:
    p, h = _ph(q)
    return h == 1 or (h == 2 and (p in (2, 3) or p % 12 == 11))


# -- Waterhouse cases ---------------------------------------------------------

def waterhouse_case(q: int, t: int) -> int | None:
    """Case number (1..7) realizing trace t over F_q, or None if t is not realized."""
    p, h = _ph(q)
    if t * t > 4 * q:
        return None
    if t % p:
        return 1
    if t == 0:
        if h % 2:
            return 2
        if p % 4 != 1:
            return 3
        return None
    if h % 2 == 0:
        if t * t == q and p % 3 != 1:
            return 4
        if t * t == 4 * q:
            return 5
    else:
        if t * t == 2 * q and p == 2:
            return 6
        if t * t == 3 * q and p == 3:
            return 7
    return None


def admissible_traces(q: int) -> set[int]:
    m = isqrt_floor_2sqrt(q)
    return {t for t in range(-m, m + 1) if waterhouse_case(q, t) is not None}


def structure_admissible(q: int, n1: int, d1: int, d2: int) -> bool:
    """Are invariant factors (d1, d2) possible for a curve with n1 points?"""
    t = q + 1 - n1
    case = waterhouse_case(q, t)
    if case is None or d1 * d2 != n1 or d1 % d2:
        return False
    if case == 1:
        return (q - 1) % d2 == 0
    if case in (2, 3):
        if q % 4 == 3:
            return d2 == 1 or (d2 == 2 and d1 == (q + 1) // 2)
        return d2 == 1
    if case == 5:
        r = math.isqrt(n1)
        return d1 == d2 == r
    return d2 == 1


def group_vs_waterhouse(curve: CubicCurve, identity=None) -> bool:
    if not curve.is_nonsingular:
        raise CensusError("the structure theorem applies to nonsingular curves")
    O = identity if identity is not None else curve.points[0]
    s = CurveGroup(curve, O).structure()
    return structure_admissible(curve.spec.q, len(curve.points), s.d1, s.d2)


# -- t spectrum ---------------------------------------------------------------

@dataclass
class TSpectrum:
    q: int
    realized: set = field(default_factory=set)
    curves_scanned: int = 0

    @property
    def bound(self) -> int:
        return isqrt_floor_2sqrt(self.q)

    @property
    def full(self) -> bool:
        m = self.bound
        return self.realized == set(range(-m, m + 1))

    def cases(self) -> dict[int, int | None]:
        return {t: waterhouse_case(self.q, t) for t in sorted(self.realized)}

    @property
    def max_points(self) -> int:
        return self.q + 1 - min(self.realized)

    @property
    def min_points(self) -> int:
        return self.q + 1 - max(self.realized)


def _weierstrass_counts(F: FieldSpec) -> list[int]:
    """Point counts of every curve in the inflexion-at-(0:1:0) families."""
    from .canon import parameter_space, canonical_form

    p = F.p
    if p == 2:
        fams = ["weierstrass-p2a", "weierstrass-p2b"]
    elif p == 3:
        fams = ["weierstrass-p3a", "weierstrass-p3b"]
    else:
        fams = ["weierstrass"]
    counts = []
    for fam in fams:
        for params in parameter_space(fam, F):
            curve = CubicCurve(canonical_form(fam, F, _with_fixed(fam, F, params)))
            if p in (2, 3) and not curve.is_nonsingular:
                continue
            counts.append(len(curve.points))
    return counts


def _with_fixed(fam, F, params):
    out = dict(params)
    if fam in ("N0_2", "noflex-q1a"):
        out["alpha"] = F.primitive_element
    return out


def t_spectrum(q: int) -> TSpectrum:
    if q > 64:
        raise CensusError("t spectrum scans are limited to q <= 64")
    F = field_of_order(q)
    counts = _weierstrass_counts(F)
    spec = TSpectrum(q, {q + 1 - n for n in counts}, len(counts))
    for t in spec.realized:
        if t * t > 4 * q:
            raise AssertionError(f"trace {t} outside the Hasse window")
    return spec


# -- PGL(3, q) and its action on cubic forms ----------------------------------

_LIMIT_PGL = 5


@functools.lru_cache(maxsize=4)
def pgl3_array(F: FieldSpec) -> np.ndarray:
    """Invertible 3x3 matrices whose first nonzero entry is 1, shape (n, 3, 3)."""
    q = F.q
    if q > _LIMIT_PGL:
        raise CensusError(f"PGL(3, {q}) enumeration is limited to q <= {_LIMIT_PGL}")
    # rows: first row normalized (first nonzero entry 1), others arbitrary
    all_rows = np.array(np.meshgrid(*[np.arange(q)] * 3, indexing="ij")).reshape(3, -1).T
    nz = all_rows[(all_rows != 0).any(axis=1)]
    first = nz[nz[np.arange(len(nz)), (nz != 0).argmax(axis=1)] == 1]
    out = []
    for r0 in first:
        for r1 in nz:
            # third row: all nonzero vectors, determinant test vectorised
            r2 = nz
            c0 = F.vadd(F.vmul(r1[1], r2[:, 2]), F.vneg(F.vmul(r1[2], r2[:, 1])))
            c1 = F.vadd(F.vmul(r1[0], r2[:, 2]), F.vneg(F.vmul(r1[2], r2[:, 0])))
            c2 = F.vadd(F.vmul(r1[0], r2[:, 1]), F.vneg(F.vmul(r1[1], r2[:, 0])))
            det = F.vadd(F.vadd(F.vmul(r0[0], c0), F.vneg(F.vmul(r0[1], c1))), F.vmul(r0[2], c2))
            good = r2[det != 0]
            if len(good):
                block = np.empty((len(good), 3, 3), dtype=np.int64)
                block[:, 0] = r0
                block[:, 1] = r1
                block[:, 2] = good
                out.append(block)
    return np.concatenate(out)


def pgl3(F: FieldSpec):
    for M in pgl3_array(F):
        yield [list(map(int, row)) for row in M]


def pgl3_order(q: int) -> int:
    return (q ** 3 - 1) * (q ** 3 - q) * (q ** 3 - q * q) // (q - 1)


_ROWS = [tuple(r for r in range(3) for _ in range(m[r])) for m in MONOMIALS]
_INDEX = {m: i for i, m in enumerate(MONOMIALS)}


def induced_action(F: FieldSpec, mats: np.ndarray) -> np.ndarray:
    """A with (F o M).coeffs = A @ F.coeffs, shape (n, 10 new, 10 old)."""
    n = len(mats)
    A = np.zeros((n, 10, 10), dtype=np.int64)
    for old, rows in enumerate(_ROWS):
        for c1 in range(3):
            for c2 in range(3):
                for c3 in range(3):
                    cols = (c1, c2, c3)
                    m = [0, 0, 0]
                    for c in cols:
                        m[c] += 1
                    new = _INDEX[tuple(m)]
                    term = F.vmul(F.vmul(mats[:, rows[0], c1], mats[:, rows[1], c2]), mats[:, rows[2], c3])
                    A[:, new, old] = F.vadd(A[:, new, old], term)
    return A


def _apply(F: FieldSpec, A: np.ndarray, coeffs) -> np.ndarray:
    out = np.zeros((A.shape[0], 10), dtype=np.int64)
    for old, c in enumerate(coeffs):
        if c:
            out = F.vadd(out, F.vscale(int(c), A[:, :, old]))
    return out


def _normalize_rows(F: FieldSpec, forms: np.ndarray) -> np.ndarray:
    first = (forms != 0).argmax(axis=1)
    lead = forms[np.arange(len(forms)), first]
    inv = np.array([0] + [F.inv(a) for a in range(1, F.q)], dtype=np.int64)
    return F.vmul(forms, inv[lead][:, None])


def encode_forms(q: int, forms: np.ndarray) -> np.ndarray:
    weights = q ** np.arange(10, dtype=np.int64)
    return forms @ weights


def decode_form(q: int, idx: int) -> tuple[int, ...]:
    out = []
    for _ in range(10):
        idx, r = divmod(idx, q)
        out.append(r)
    return tuple(out)


def _normalized_mask(q: int) -> np.ndarray:
    """Which encodings are scalar-normalized nonzero forms."""
    idx = np.arange(q ** 10, dtype=np.int64)
    digits = np.stack([(idx // q ** i) % q for i in range(10)], axis=1)
    nonzero = (digits != 0).any(axis=1)
    first = (digits != 0).argmax(axis=1)
    return nonzero & (digits[np.arange(len(idx)), first] == 1)


@dataclass
class Orbit:
    representative: tuple
    size: int


def orbits(F: FieldSpec, progress=None):
    """Sweep all scalar classes of nonzero forms into PGL(3, q) orbits.

    Returns (orbit list, orbit id per encoding; -1 for non-normalized).
    """
    q = F.q
    mats = pgl3_array(F)
    A = induced_action(F, mats)
    todo = _normalized_mask(q)
    orbit_id = np.full(q ** 10, -1, dtype=np.int32)
    found = []
    pos = 0
    total = int(todo.sum())
    covered = 0
    while True:
        nxt = np.flatnonzero(todo[pos:])
        if len(nxt) == 0:
            break
        idx = pos + int(nxt[0])
        rep = decode_form(q, idx)
        images = _normalize_rows(F, _apply(F, A, rep))
        members = np.unique(encode_forms(q, images))
        if members.min() != idx or not todo[members].all():
            raise AssertionError("orbit sweep is inconsistent")
        todo[members] = False
        orbit_id[members] = len(found)
        found.append(Orbit(rep, len(members)))
        covered += len(members)
        pos = idx + 1
        if progress:
            progress(covered, total)
    if covered != total:
        raise AssertionError("orbits do not partition the scalar classes")
    return found, orbit_id


# -- census -------------------------------------------------------------------

@dataclass
class ClassInfo:
    representative: tuple
    orbit_size: int
    points: int
    inflexions: int
    structure: GroupStructure


@dataclass
class SingularClass:
    representative: tuple
    orbit_size: int
    kind: str
    inflexions: int


@dataclass
class CensusReport:
    q: int
    classes: list = field(default_factory=list)
    singular_orbits: int = 0
    irreducible_singular: list = field(default_factory=list)
    total_forms: int = 0
    nonsingular_forms: int = 0
    orbit_id: np.ndarray | None = None
    orbit_list: list = field(default_factory=list)

    def count(self, n: int) -> int:
        return sum(1 for c in self.classes if c.inflexions == n)

    @property
    def n(self) -> tuple[int, int, int, int]:
        return self.count(0), self.count(1), self.count(3), self.count(9)

    @property
    def P(self) -> int:
        return sum(self.n)

    @property
    def A(self) -> int:
        n0, n1, n3, n9 = self.n
        return n1 + n3 + n9


def _analyse(args):
    q, rep = args
    F = field_of_order(q)
    form = CubicForm(F, tuple(int(c) for c in rep))
    curve = CubicCurve(form)
    verdict = curve.closure_verdict
    if verdict.singular:
        if is_absolutely_irreducible(form):
            from .canon import classify_singular

            st = classify_singular(curve)
            return ("irreducible-singular", st.kind, len(curve.inflexions), verdict)
        return ("reducible", None, None, verdict)
    G = CurveGroup(curve, curve.points[0])
    s = G.structure()
    return ("nonsingular", len(curve.points), len(curve.inflexions), s)


def projective_census(q: int, jobs: int = 1, progress=None) -> CensusReport:
    if q not in (2, 3, 4):
        raise CensusError(f"the projective census supports q in {{2, 3, 4}}, got q={q}")
    F = field_of_order(q)
    orbit_list, orbit_id = orbits(F, progress)
    tasks = [(q, o.representative) for o in orbit_list]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_analyse, tasks, chunksize=8))
    else:
        results = [_analyse(t) for t in tasks]
    report = CensusReport(q, total_forms=int(sum(o.size for o in orbit_list)))
    report.orbit_id = orbit_id
    report.orbit_list = orbit_list
    for orbit, res in zip(orbit_list, results):
        tag = res[0]
        if tag == "nonsingular":
            _, npts, ninfl, s = res
            report.classes.append(ClassInfo(orbit.representative, orbit.size, npts, ninfl, s))
            report.nonsingular_forms += orbit.size
        else:
            report.singular_orbits += 1
            if tag == "irreducible-singular":
                report.irreducible_singular.append(SingularClass(orbit.representative, orbit.size, res[1], res[2]))
    return report


def point_counts_all(F: FieldSpec, encodings: np.ndarray, chunk: int = 1 << 16) -> np.ndarray:
    """Rational point counts of many forms at once (vectorised)."""
    from .plane import point_arrays

    q = F.q
    pts = point_arrays(F)
    mono = np.stack([
        F.vmul(F.vmul(_pow(F, pts[:, 0], m[0]), _pow(F, pts[:, 1], m[1])), _pow(F, pts[:, 2], m[2]))
        for m in MONOMIALS
    ])  # (10, npts)
    out = np.empty(len(encodings), dtype=np.int64)
    for start in range(0, len(encodings), chunk):
        enc = encodings[start:start + chunk]
        digits = np.stack([(enc // q ** i) % q for i in range(10)], axis=1)
        acc = np.zeros((len(enc), mono.shape[1]), dtype=np.int64)
        for i in range(10):
            acc = F.vadd(acc, F.vmul(digits[:, i:i + 1], mono[i][None, :]))
        out[start:start + chunk] = (acc == 0).sum(axis=1)
    return out


def _pow(F, a, e):
    out = np.ones_like(a)
    for _ in range(e):
        out = F.vmul(out, a)
    return out


def census_lines(report: CensusReport) -> list[str]:
    lines = []
    for c in report.classes:
        form = ",".join(str(v) for v in c.representative)
        lines.append(
            f"class form={form} orbit={c.orbit_size} N1={c.points} inflexions={c.inflexions} "
            f"factors={c.structure.d1},{c.structure.d2} t={report.q + 1 - c.points}"
        )
    n0, n1, n3, n9 = report.n
    lines.append(f"q={report.q} n0={n0} n1={n1} n3={n3} n9={n9}")
    lines.append(f"P_q={report.P} A_q={report.A} n=({n0},{n1},{n3},{n9})")
    lines.append(f"formula_P_q={p_formula(report.q)} formula_A_q={a_formula(report.q)}")
    lines.append(
        f"singular_orbits={report.singular_orbits} irreducible_singular_classes={len(report.irreducible_singular)}"
    )
    return lines

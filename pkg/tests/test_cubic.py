import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicfq import poly
from cubicfq.cubic import (
    CubicCurve,
    CubicForm,
    CurveError,
    LineComponentError,
    SingularScanner,
    closure_singularity,
    hessian,
    hessian_inflexions,
    is_absolutely_irreducible,
    linear_factor,
    line_intersection,
    partials,
    read_curve,
    scan_singular,
    third_point,
)
from cubicfq.gf import build_field, field_of_order
from cubicfq.plane import ProjLine, ProjPoint, collinear, enumerate_lines
from oracle import NaiveField, count_points

X3, Y3, Z3, X2Y, X2Z, XY2, Y2Z, XZ2, YZ2, XYZ = (
    (3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (2, 0, 1),
    (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1),
)


def curve(F, terms):
    return CubicCurve(CubicForm.from_dict(F, terms))


def y2_x3_x(F):
    """Y^2 Z = X^3 + X Z^2."""
    m1 = F.neg(1)
    return curve(F, {Y2Z: 1, X3: m1, XZ2: m1})


def fermat(F, c=0):
    return curve(F, {X3: 1, Y3: 1, Z3: 1, XYZ: F.neg(F.mul(F.from_int(3), c))})


def test_evaluate_and_partials():
    F7 = build_field(7)
    C = fermat(F7)
    assert C((1, 6, 0)) == 0
    dX, dY, dZ = partials(curve(build_field(3), {Y2Z: 1, X3: 2}).form)
    assert dX == {} and dY == {(0, 1, 1): 2} and dZ == {(0, 2, 0): 1}
    F11 = build_field(11)
    c = 4
    dX, dY, dZ = partials(fermat(F11, c).form)
    assert dX == {(2, 0, 0): 3, (0, 1, 1): F11.neg(3 * c % 11)}


def test_rational_point_examples():
    F5 = build_field(5)
    pts = y2_x3_x(F5).points
    assert set(pts) == {ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 0, 2), ProjPoint(1, 0, 3)}
    assert len(fermat(field_of_order(4)).points) == 9


@settings(max_examples=40, deadline=None)
@given(st.sampled_from((2, 3, 4, 5, 7, 8, 9)), st.data())
def test_point_count_matches_naive_oracle(q, data):
    F = field_of_order(q)
    coeffs = tuple(data.draw(st.lists(st.integers(0, q - 1), min_size=10, max_size=10)))
    if not any(coeffs):
        return
    C = CubicCurve(CubicForm(F, coeffs))
    assert len(C.points) == count_points(NaiveField(F.p, F.modulus), coeffs)


def test_singular_examples():
    for q in (2, 3, 4, 5, 7, 9):
        F = field_of_order(q)
        C = curve(F, {Y2Z: 1, X3: F.neg(1)})
        assert C.singular_points == (ProjPoint(0, 0, 1),)
        assert not C.is_nonsingular
    F7 = build_field(7)
    for c, d in ((1, 0), (0, 1), (2, 3)):
        C = curve(F7, {Y2Z: 1, X3: 6, XZ2: F7.neg(c), Z3: F7.neg(d)})
        assert C.is_nonsingular
    verdict = closure_singularity(curve(F7, {XYZ: 1}).form)
    assert verdict.singular and verdict.witness.degree == 1


def test_singular_point_only_over_extension():
    F2 = build_field(2)
    # the line Z = 0 meets the conic X^2 + XY + Y^2 + Z^2 in two F_4-points
    conic = {(2, 0, 0): 1, (1, 1, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}
    C = CubicCurve(CubicForm.from_dict(F2, poly.form_mul(F2, conic, {(0, 0, 1): 1})))
    assert C.singular_points == ()
    verdict = closure_singularity(C.form)
    assert verdict.singular and verdict.witness.degree == 2
    assert scan_singular(C.form, 1) is None and scan_singular(C.form, 2) is not None
    assert not is_absolutely_irreducible(C.form)


def test_three_conjugate_lines():
    # the norm form of F_8 over F_2: three lines meeting in F_8-points
    F2 = build_field(2)
    F8 = field_of_order(8)
    gens = [1, 2, 4]  # 1, t, t^2 in F_8
    rows = []
    for k in range(3):
        rows.append([F8.pow(g, 2 ** k) for g in gens])
    # product of the three conjugate linear forms, coefficients land in F_2
    terms = {(0, 0, 0): 1}
    for r in rows:
        lin = {(1, 0, 0): r[0], (0, 1, 0): r[1], (0, 0, 1): r[2]}
        terms = poly.form_mul(F8, terms, lin)
    assert all(v in (0, 1) for v in terms.values())
    C = curve(F2, {m: v for m, v in terms.items() if v})
    assert C.singular_points == ()
    verdict = closure_singularity(C.form)
    assert verdict.singular and verdict.witness.degree == 3
    assert linear_factor(C.form).degree == 3


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_closure_verdict_matches_scan(q):
    F = field_of_order(q)
    rng = random.Random(q)
    scanners = [SingularScanner(F, k) for k in (1, 2, 3)]
    for _ in range(120):
        coeffs = tuple(rng.randrange(q) for _ in range(10))
        if not any(coeffs):
            continue
        form = CubicForm(F, coeffs)
        oracle = any(s.scan(form) is not None for s in scanners)
        assert closure_singularity(form).singular == oracle, coeffs


def test_line_intersection_example():
    F5 = build_field(5)
    hits = line_intersection(y2_x3_x(F5).form, ProjLine(0, 1, 0))
    assert sorted(h.point for h in hits) == [ProjPoint(0, 0, 1), ProjPoint(1, 0, 2), ProjPoint(1, 0, 3)]
    assert all(h.multiplicity == 1 for h in hits)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from((2, 3, 4, 5, 7)), st.data())
def test_intersection_multiplicities_sum_to_three(q, data):
    F = field_of_order(q)
    coeffs = tuple(data.draw(st.lists(st.integers(0, q - 1), min_size=10, max_size=10)))
    if not any(coeffs):
        return
    form = CubicForm(F, coeffs)
    L = data.draw(st.sampled_from(enumerate_lines(F)))
    try:
        hits = line_intersection(form, L)
    except LineComponentError:
        return
    assert sum(h.multiplicity for h in hits) == 3


def test_tangent_and_inflexion_examples():
    F5 = build_field(5)
    C = y2_x3_x(F5)
    assert C.tangent_at((0, 1, 0)) == ProjLine(0, 0, 1)
    assert C.is_inflexion((0, 1, 0))
    assert C.tangent_at((0, 0, 1)) == ProjLine(1, 0, 0)
    assert not C.is_inflexion((0, 0, 1))
    with pytest.raises(CurveError):
        C.tangent_at((1, 1, 1))


def test_nine_inflexions_over_f7():
    F7 = build_field(7)
    C = fermat(F7, 3)
    expected = {
        ProjPoint(0, 1, F7.neg(w)) for w in (1, 2, 4)
    } | {ProjPoint(1, 0, F7.neg(w)) for w in (1, 2, 4)} | {ProjPoint(1, F7.neg(w), 0) for w in (1, 2, 4)}
    assert set(C.inflexions) == expected


def test_three_collinear_inflexions():
    F5 = build_field(5)
    C = curve(F5, {X2Y: 1, XY2: 1, Z3: 1})
    assert set(C.inflexions) == {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 4, 0)}


@pytest.mark.parametrize("q", (2, 5, 8, 11))
def test_never_nine_inflexions_when_q_is_2_mod_3(q):
    F = field_of_order(q)
    rng = random.Random(q)
    for _ in range(60):
        C = CubicCurve(CubicForm(F, tuple(rng.randrange(q) for _ in range(10))))
        if any(C.form.coeffs) and C.is_nonsingular:
            assert len(C.inflexions) in (0, 1, 3)


def test_hessian_of_fermat_cubic():
    F7 = build_field(7)
    assert hessian(fermat(F7).form) == {XYZ: 216 % 7}
    with pytest.raises(CurveError):
        hessian(fermat(build_field(2)).form)


@pytest.mark.parametrize("q", (5, 7))
def test_hessian_locates_inflexions(q):
    F = field_of_order(q)
    rng = random.Random(10 + q)
    seen = 0
    while seen < 25:
        C = CubicCurve(CubicForm(F, tuple(rng.randrange(q) for _ in range(10))))
        if not any(C.form.coeffs) or not C.is_nonsingular:
            continue
        seen += 1
        assert set(hessian_inflexions(C)) == set(C.inflexions)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from((3, 4, 5, 7)), st.data())
def test_third_point_is_on_the_chord(q, data):
    F = field_of_order(q)
    coeffs = tuple(data.draw(st.lists(st.integers(0, q - 1), min_size=10, max_size=10)))
    if not any(coeffs):
        return
    C = CubicCurve(CubicForm(F, coeffs))
    pts = C.smooth_points
    if len(pts) < 2:
        return
    P = data.draw(st.sampled_from(pts))
    Q = data.draw(st.sampled_from(pts))
    try:
        R = third_point(C.form, P, Q)
    except LineComponentError:
        return
    assert C.contains(R)
    if P != Q:
        assert collinear(F, P, Q, R)
        assert third_point(C.form, Q, P) == R
    else:
        L = C.tangent_at(P)
        assert F.sum(F.mul(a, b) for a, b in zip(L, R)) == 0


def test_absolute_irreducibility():
    F3 = build_field(3)
    assert is_absolutely_irreducible(curve(F3, {Y2Z: 1, X3: 2, XZ2: 2}).form)
    assert not is_absolutely_irreducible(curve(F3, {XYZ: 1}).form)
    # X^3 + Y^3 + Z^3 = (X + Y + Z)^3 in characteristic 3
    assert not is_absolutely_irreducible(fermat(F3).form)


def test_curve_text_round_trip():
    F = field_of_order(9)
    C = curve(F, {Y2Z: 1, X3: 2, XZ2: 3})
    D = read_curve(C.to_text())
    assert D.form == C.form and D.spec == F
    with pytest.raises(CurveError):
        read_curve("field p=3 h=1 modulus=0,1\n")


def test_every_form_over_f2_has_consistent_points():
    F2 = build_field(2)
    naive = NaiveField(2, F2.modulus)
    for coeffs in itertools.product((0, 1), repeat=10):
        if any(coeffs):
            assert len(CubicCurve(CubicForm(F2, coeffs)).points) == count_points(naive, coeffs)

import math

import numpy as np
import pytest

from cubicfq.canon import valid_curves, families_for
from cubicfq.census import (
    a_formula,
    admissible_traces,
    census_lines,
    decode_form,
    encode_forms,
    full_interval_expected,
    group_vs_waterhouse,
    in_hasse_window,
    is_exceptional,
    max_points,
    min_points,
    orbits,
    p_formula,
    pgl3_array,
    pgl3_order,
    point_counts_all,
    projective_census,
    residue_ok,
    structure_admissible,
    symbol_m3,
    symbol_m4,
    t_spectrum,
    table_row,
    waterhouse_case,
)
from cubicfq.cubic import CubicCurve, CubicForm
from cubicfq.gf import build_field, field_of_order, is_prime
from oracle import NaiveField, count_points

PRIME_POWERS = [q for q in range(2, 300) if any(is_prime(p) and p ** round(math.log(q, p)) == q
                                                for p in range(2, q + 1))]


def test_symbols():
    assert [symbol_m4(c) for c in (1, 2, 3, 5, 7)] == [1, 0, -1, 1, -1]
    assert [symbol_m3(c) for c in (1, 2, 3, 4)] == [1, -1, 0, 1]


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_table_rows_agree_with_closed_formulas(q):
    row = table_row(q)
    assert row["A"] == a_formula(q)
    assert row["P"] == p_formula(q)


def test_table_rows_for_small_q():
    assert (table_row(2)["n0"], table_row(2)["n1"], table_row(2)["n3"], table_row(2)["n9"]) == (1, 4, 1, 0)
    assert (table_row(4)["P"], table_row(4)["A"]) == (18, 13)


@pytest.mark.parametrize("q,expected", [(2, (1, 4, 1, 0)), (3, (2, 6, 2, 0))])
def test_small_census(q, expected):
    report = projective_census(q)
    assert report.n == expected
    assert report.P == p_formula(q) and report.A == a_formula(q)
    assert len(report.irreducible_singular) == 4
    lines = census_lines(report)
    assert lines[-3] == f"P_q={report.P} A_q={report.A} n=({','.join(map(str, expected))})"


def test_census_rejects_large_q():
    with pytest.raises(ValueError):
        projective_census(5)


def test_pgl3_size():
    assert pgl3_order(2) == 168 and pgl3_order(3) == 5616 and pgl3_order(4) == 60480
    for q in (2, 3):
        assert len(pgl3_array(field_of_order(q))) == pgl3_order(q)


def test_orbits_partition_forms_over_f2():
    F = build_field(2)
    found, orbit_id = orbits(F)
    assert sum(o.size for o in found) == 1023
    assert all(168 % o.size == 0 for o in found)
    for k, o in enumerate(found):
        assert orbit_id[int(encode_forms(2, np.array([o.representative]))[0])] == k
    assert decode_form(3, 1 + 3 * 2) == (1, 2, 0, 0, 0, 0, 0, 0, 0, 0)


def test_vectorized_point_counts_match_naive():
    F = build_field(3)
    naive = NaiveField(3, F.modulus)
    rng = np.random.default_rng(0)
    enc = rng.integers(1, 3 ** 10, size=200)
    counts = point_counts_all(F, enc)
    for e, n in zip(enc, counts):
        assert n == count_points(naive, decode_form(3, int(e)))


def test_hasse_and_residue_examples():
    assert in_hasse_window(4, 9) and not in_hasse_window(4, 10)
    assert residue_ok(9, 9) and residue_ok(4, 1)
    assert not residue_ok(6, 1) and not residue_ok(4, 3) and not residue_ok(12, 9)


def test_exceptional_q():
    assert [q for q in PRIME_POWERS + [512, 729, 125, 343, 243] if q < 1000 and is_exceptional(q)] == [128]
    assert max_points(5) == 10 and min_points(5) == 2
    assert max_points(128) == 128 + 22 and min_points(128) == 128 + 2 - 22


def test_waterhouse_cases():
    assert waterhouse_case(5, 2) == 1
    assert waterhouse_case(4, 4) == 5 and waterhouse_case(4, -4) == 5
    assert waterhouse_case(4, 2) == 4
    assert waterhouse_case(7, 0) == 2
    assert waterhouse_case(9, 3) == 4 and waterhouse_case(49, 7) is None
    assert waterhouse_case(8, 4) == 6 and waterhouse_case(27, 9) == 7
    assert waterhouse_case(25, 0) is None


def test_structure_admissibility_examples():
    assert structure_admissible(4, 9, 3, 3) and not structure_admissible(4, 9, 9, 1)
    assert structure_admissible(7, 8, 8, 1) and structure_admissible(7, 8, 4, 2)
    assert not structure_admissible(7, 8, 2, 4)
    assert structure_admissible(5, 4, 2, 2)


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32))
def test_spectrum_equals_admissible_traces(q):
    s = t_spectrum(q)
    assert s.realized == admissible_traces(q)
    assert s.max_points == max_points(q) and s.min_points == min_points(q)
    if full_interval_expected(q):
        assert s.full


def test_spectrum_for_q5():
    s = t_spectrum(5)
    assert s.realized == set(range(-4, 5))
    assert s.max_points == 10 and s.min_points == 2


def test_q4_realizes_plus_minus_two():
    assert {-2, 2} <= t_spectrum(4).realized


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 8, 9))
def test_canonical_curves_satisfy_hasse_residue_and_waterhouse(q):
    F = field_of_order(q)
    for fam in families_for(F, singular=False):
        for _, C in valid_curves(fam, F):
            n1 = len(C.points)
            assert in_hasse_window(q, n1)
            assert residue_ok(n1, len(C.inflexions))
            assert group_vs_waterhouse(C)


def test_singular_curve_rejected_by_checks():
    from cubicfq.census import CensusError, hasse_check

    C = CubicCurve(CubicForm.from_dict(build_field(5), {(0, 2, 1): 1, (3, 0, 0): 4}))
    with pytest.raises(CensusError):
        hasse_check(C)

"""Counting series: shuffle dimensions, Poincare series, closed forms."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from ratsurf.series import (
    IntegralityError,
    TruncatedSeries,
    cone_tdim,
    dimension_table,
    fatpoint_tdim,
    moebius,
    poincare_series,
    shuffle_dim,
    shuffle_dim_series,
)

# the six closed forms for c_{m,k}, k = 1..6
C_CLOSED = {
    1: lambda m: m,
    2: lambda m: (m * m + m) // 2,
    3: lambda m: (m**3 - m) // 3,
    4: lambda m: (m**4 - m * m) // 4,
    5: lambda m: (m**5 - m) // 5,
    6: lambda m: (m**6 + m**3 - m * m - m) // 6,
}

# the six closed forms for f_i(d), i = 1..6
F_CLOSED = {
    1: lambda d: 2 * d - 4,
    2: lambda d: (d - 1) * (d - 3),
    3: lambda d: (d - 1) * (d - 2) * (d - 3) // 2,
    4: lambda d: (d - 1) * (d - 2) * (2 * d * d - 8 * d + 9) // 6,
    5: lambda d: (d - 1) * (d - 2) ** 2 * (3 * d * d - 8 * d + 9) // 12,
    6: lambda d: (d - 1) * (d - 2) * (12 * d**4 - 66 * d**3 + 153 * d * d - 179 * d + 90) // 60,
}


def test_moebius_first_values():
    want = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0, -1, 0, -1, 0]
    assert [moebius(n) for n in range(1, 21)] == want


def test_moebius_rejects_nonpositive():
    with pytest.raises(ValueError):
        moebius(0)
    with pytest.raises(ValueError):
        moebius(-3)


def test_moebius_is_multiplicative_on_coprime_pairs():
    rng = random.Random(3)
    for _ in range(200):
        a = rng.randint(1, 100)
        b = rng.randint(1, 100)
        if math.gcd(a, b) == 1:
            assert moebius(a * b) == moebius(a) * moebius(b)


def test_shuffle_dim_small_rows():
    assert [shuffle_dim(2, k) for k in range(1, 7)] == [2, 3, 2, 3, 6, 11]
    assert [shuffle_dim(3, k) for k in range(1, 7)] == [3, 6, 8, 18, 48, 124]


def test_shuffle_dim_trivial_cases():
    assert shuffle_dim(1, 1) == 1
    assert shuffle_dim(5, 1) == 5


def test_shuffle_dim_matches_closed_forms():
    for m in range(1, 21):
        for k, form in C_CLOSED.items():
            assert shuffle_dim(m, k) == form(m), (m, k)


def test_shuffle_dim_rejects_bad_arguments():
    with pytest.raises(ValueError):
        shuffle_dim(0, 2)
    with pytest.raises(ValueError):
        shuffle_dim(2, 0)


def test_series_construction_and_coeff():
    # coeffs[j] is the t^j coefficient, so the order is len - 1
    s = TruncatedSeries([1, 2, 3])
    assert s.order == 2
    assert s.coeff(0) == 1 and s.coeff(2) == 3
    padded = TruncatedSeries([1], order=4)
    assert padded.coeffs == [Fraction(1), 0, 0, 0, 0]
    with pytest.raises(ValueError):
        s.coeff(3)
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2, 3], order=1)


def test_series_truncate():
    s = TruncatedSeries([1, 2, 3, 4])
    assert s.truncate(2).coeffs == [1, 2, 3]
    with pytest.raises(ValueError):
        s.truncate(9)


def test_series_arithmetic():
    a = TruncatedSeries([1, 1])
    b = TruncatedSeries([1, -1])
    assert (a + b).coeffs == [2, 0]
    assert (a - b).coeffs == [0, 2]
    assert (a * b).coeffs == [1, 0]
    assert (a * 3).coeffs == [3, 3]


def test_series_multiply_divide_roundtrip():
    rng = random.Random(4)
    for _ in range(60):
        order = rng.randint(1, 8)
        a = TruncatedSeries([rng.randint(-4, 4) for _ in range(order)])
        b_coeffs = [rng.choice([1, -1, 2, 3])] + [
            rng.randint(-4, 4) for _ in range(order - 1)
        ]
        b = TruncatedSeries(b_coeffs)
        assert ((a * b).divide(b)).coeffs == a.coeffs


def test_series_divide_requires_unit_constant_term():
    with pytest.raises(ValueError):
        TruncatedSeries([1, 1]).divide(TruncatedSeries([0, 1]))


def test_geometric_alternating_inverts_one_plus_t():
    inv = TruncatedSeries.geometric_alternating(6)
    assert inv.coeffs == [1, -1, 1, -1, 1, -1, 1]
    one_plus_t = TruncatedSeries([1, 1], order=6)
    assert (inv * one_plus_t).coeffs == [1, 0, 0, 0, 0, 0, 0]


def test_shuffle_dim_series_collects_the_row():
    s = shuffle_dim_series(3, 6)
    assert s.coeffs == [0, 2, 3, 2, 3, 6, 11]
    with pytest.raises(ValueError):
        shuffle_dim_series(2, 6)


def test_poincare_series_for_minimal_multiplicity():
    assert poincare_series(3, 6).coeffs == [0, 2, 0, 0, 1, 2, 4]
    assert poincare_series(4, 3).coeffs == [0, 4, 3, 3]


def test_poincare_series_coefficients_are_nonnegative_integers():
    for d in range(3, 9):
        s = poincare_series(d, 11)
        assert s.coeff(0) == 0
        for c in s.coeffs:
            assert c.denominator == 1
            assert c >= 0


def test_poincare_series_matches_cone_tdims():
    for d in range(3, 9):
        s = poincare_series(d, 8)
        for i in range(1, 7):
            assert s.coeff(i) == cone_tdim(i, d)


def test_cone_tdim_known_values():
    assert cone_tdim(1, 3) == 2
    assert cone_tdim(2, 6) == 15
    assert cone_tdim(3, 5) == 12
    assert cone_tdim(4, 3) == 1


def test_cone_tdim_matches_closed_forms():
    for d in range(3, 13):
        for i, form in F_CLOSED.items():
            assert cone_tdim(i, d) == form(d), (i, d)


def test_cone_tdim_rejects_out_of_range():
    with pytest.raises(ValueError):
        cone_tdim(1, 2)
    with pytest.raises(ValueError):
        cone_tdim(0, 4)


def test_fatpoint_tdim_small_table():
    assert fatpoint_tdim(2, 1) == 4
    assert fatpoint_tdim(2, 2) == 1
    assert fatpoint_tdim(2, 3) == 4
    assert fatpoint_tdim(2, 4) == 9
    assert fatpoint_tdim(3, 1) == 15
    assert fatpoint_tdim(3, 2) == 18


def test_fatpoint_tdim_is_the_advertised_combination():
    # m = 1 is the dual-number algebra, outside the fat-point formula's range
    for m in range(2, 6):
        for i in range(1, 6):
            assert fatpoint_tdim(m, i) == m * shuffle_dim(m, i + 1) - shuffle_dim(m, i)


def test_dimension_table():
    t = dimension_table(5, imax=4)
    assert t.d == 5
    assert t.values == {1: 6, 2: 8, 3: 12, 4: 38}
    with pytest.raises(ValueError):
        dimension_table(5, imax=0)

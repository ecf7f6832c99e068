"""Homology tables: Gaussian binomials, Grassmannians, configurations, GL."""

from fractions import Fraction
from math import comb

import pytest

from stablecoh.tables import (
    GradedTateVector,
    gaussian_binomial,
    gl_cohomology,
    grassmannian_poincare,
    twisted_config_bm,
)

from oracles import count_subspaces_f2


# --- Gaussian binomials ---------------------------------------------------------


def test_small_gaussian_binomials():
    assert gaussian_binomial(2, 1) == (1, 1)
    assert gaussian_binomial(4, 2) == (1, 1, 2, 1, 1)
    assert gaussian_binomial(3, 0) == (1,)
    assert gaussian_binomial(3, 3) == (1,)
    assert gaussian_binomial(3, 4) == ()


def test_gaussian_symmetry_and_unimodality():
    for m in range(0, 9):
        for l in range(0, m + 1):
            coeffs = gaussian_binomial(m, l)
            assert coeffs == gaussian_binomial(m, m - l)
            assert coeffs == coeffs[::-1]
            mid = len(coeffs) // 2
            ascending = coeffs[: mid + 1]
            assert all(a <= b for a, b in zip(ascending, ascending[1:]))


def test_gaussian_specializes_to_binomial_at_one():
    for m in range(0, 9):
        for l in range(0, m + 1):
            assert sum(gaussian_binomial(m, l)) == comb(m, l)


def test_gaussian_at_two_counts_binary_subspaces():
    for m in range(1, 6):
        for l in range(0, m + 1):
            value = sum(c * 2**i for i, c in enumerate(gaussian_binomial(m, l)))
            assert value == count_subspaces_f2(m, l)


# --- graded Tate tables -----------------------------------------------------------


def test_graded_tate_merges_components():
    t = GradedTateVector.from_components([(2, 1, 1), (2, 2, 1), (0, 1, 0)])
    assert t.entries == {0: ((1, 0),), 2: ((3, 1),)}
    assert t.total_dimension() == 4
    assert t.is_pure()


def test_graded_tate_keeps_distinct_twists_apart():
    t = GradedTateVector.from_components([(9, 1, -5), (9, 1, -6)])
    assert t.components(9) == ((1, -6), (1, -5))
    assert t.dimension(9) == 2
    assert not t.is_pure()
    with pytest.raises(ValueError):
        t.single(9)
    with pytest.raises(ValueError):
        t.to_json_obj()
    assert t.to_json_multi() == {"9": [[1, -6], [1, -5]]}


def test_graded_tate_rejects_half_integral_twist():
    with pytest.raises(ValueError, match="non-integral"):
        GradedTateVector.from_components([(3, 1, Fraction(1, 2))])


def test_graded_tate_drops_zero_dimensions():
    t = GradedTateVector.from_components([(1, 0, 0)])
    assert not t
    assert t.degrees() == ()


# --- Grassmannians ------------------------------------------------------------------


def test_projective_line_table():
    t = grassmannian_poincare(1, 1)
    assert t.entries == {0: ((1, 0),), 2: ((1, 1),)}


def test_full_flag_is_point():
    for n in range(0, 5):
        assert grassmannian_poincare(n + 1, n).entries == {0: ((1, 0),)}


def test_empty_grassmannian():
    assert not grassmannian_poincare(3, 1)


def test_grassmannian_two_planes_in_four_space():
    t = grassmannian_poincare(2, 3)
    assert [t.dimension(2 * i) for i in range(5)] == [1, 1, 2, 1, 1]
    assert all(t.single(2 * i)[1] == i for i in range(5))


# --- twisted configuration tables ----------------------------------------------------


def test_single_point_configurations_give_projective_space():
    for n in (1, 2, 3):
        assert twisted_config_bm(1, n) == grassmannian_poincare(1, n)


def test_two_points_on_line():
    assert twisted_config_bm(2, 1).entries == {2: ((1, 1),)}


def test_top_configuration_single_class():
    for n in (1, 2, 3, 4):
        t = twisted_config_bm(n + 1, n)
        degree = n * (n + 1)
        assert t.entries == {degree: ((1, degree // 2),)}


def test_twist_shift_preserves_total_dimension():
    for n in range(1, 6):
        for l in range(1, n + 2):
            assert (
                twisted_config_bm(l, n).total_dimension()
                == grassmannian_poincare(l, n).total_dimension()
            )


def test_twisted_support_window_and_parity():
    for n in range(1, 6):
        for l in range(1, n + 2):
            degrees = twisted_config_bm(l, n).degrees()
            low = l * (l - 1)
            high = low + 2 * l * (n + 1 - l)
            assert degrees[0] == low and degrees[-1] == high
            assert all(d % 2 == 0 for d in degrees)


def test_twisted_config_range_errors():
    with pytest.raises(ValueError):
        twisted_config_bm(0, 2)
    with pytest.raises(ValueError):
        twisted_config_bm(4, 2)


# --- general linear group --------------------------------------------------------------


def test_gl2_table():
    gens, table = gl_cohomology(1)
    assert [(g.degree, g.hodge_type) for g in gens] == [(1, (1, 1)), (3, (2, 2))]
    assert table.degrees() == (0, 1, 3, 4)
    assert all(table.dimension(k) == 1 for k in (0, 1, 3, 4))


def test_gl3_table():
    _, table = gl_cohomology(2)
    assert table.degrees() == (0, 1, 3, 4, 5, 6, 8, 9)


def test_gl_top_degree_and_total():
    for n in range(0, 7):
        gens, table = gl_cohomology(n)
        degrees = [g.degree for g in gens]
        assert degrees == sorted(degrees)
        assert all(d % 2 == 1 for d in degrees)
        top = (n + 1) ** 2
        assert table.degrees()[-1] == top
        assert table.dimension(top) == 1
        assert table.single(top)[1] == -(n + 1) * (n + 2) // 2
        assert table.total_dimension() == 2 ** (n + 1)


def test_gl5_mixes_weights_in_degree_nine():
    _, table = gl_cohomology(4)
    assert table.components(9) == ((1, -6), (1, -5))


def test_csv_rows_are_sorted_components():
    _, table = gl_cohomology(1)
    assert table.csv_rows() == [(0, 1, 0), (1, 1, -1), (3, 1, -2), (4, 1, -3)]

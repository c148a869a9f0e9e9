import itertools

import pytest

from qtcatalan.errors import DomainError
from qtcatalan.paths import KVector, count_paths
from qtcatalan.polynomial import QT_CONTEXT, LaurentPoly, coefficient_grid, is_qt_symmetric
from qtcatalan.verify import (
    carlitz_riordan,
    check_bounce_agreement,
    check_last_param,
    check_q_specializations,
    kvectors_of_length,
    lambda_catalan,
    macmahon_q_catalan,
    q_binomial,
    refined_catalan,
    repeated_tail_vectors,
    symmetry_report,
    symmetry_scan,
    verify_theorem,
)

P = lambda s: LaurentPoly.parse(QT_CONTEXT, s)


def test_refined_catalan_goldens():
    assert refined_catalan((1, 1, 1)) == P("q^3 + q^2*t + q*t + q*t^2 + t^3")
    assert refined_catalan((1, 2)) == P("q + t")
    assert refined_catalan((2, 1)) == P("q^2 + q*t + t^2")
    assert refined_catalan((1, 2, 1)) == P(
        "q^4 + q^3*t + q^2*t^2 + q*t^3 + t^4 + q^2*t + q*t^2"
    )


def test_refined_catalan_counting_identity():
    for parts in [(1, 1, 1), (2, 3), (1, 2, 1, 2), (3, 1, 1)]:
        poly = refined_catalan(parts)
        assert sum(poly.terms.values()) == count_paths(KVector(parts))


def test_lambda_catalan_goldens():
    assert lambda_catalan((2, 1)) == P("q^2 + q*t + t^2 + q + t")
    assert lambda_catalan((5,)) == P("1")
    assert is_qt_symmetric(lambda_catalan((2, 1, 1, 1)))
    with pytest.raises(DomainError):
        lambda_catalan((1, 2))


def _grid_from_cells(cells):
    max_q = max(i for _, i, _ in cells)
    max_t = max(j for _, _, j in cells)
    grid = [[0] * (max_t + 1) for _ in range(max_q + 1)]
    for value, i, j in cells:
        grid[i][j] = value
    return grid


# coefficient tables for the four-run examples, copied from the source figures
GRID_1131 = _grid_from_cells(
    [(1, 8, 0), (1, 7, 1), (1, 6, 2), (1, 5, 3), (1, 4, 4), (1, 3, 5), (1, 2, 6), (1, 1, 7),
     (1, 0, 8), (1, 6, 1), (1, 5, 2), (1, 4, 3), (2, 3, 4), (2, 2, 5), (1, 1, 6), (1, 5, 1),
     (2, 4, 2), (2, 3, 3), (1, 2, 4), (1, 1, 5)]
)
GRID_1113 = _grid_from_cells(
    [(1, 6, 0), (1, 5, 1), (1, 4, 2), (1, 3, 3), (1, 2, 4), (1, 1, 5), (1, 0, 6),
     (1, 4, 1), (1, 3, 2), (1, 2, 3), (1, 1, 4), (1, 3, 1), (1, 2, 2), (1, 1, 3)]
)
GRID_3111 = _grid_from_cells(
    [(1, 12, 0), (1, 11, 1), (1, 10, 2), (1, 9, 3), (1, 8, 4), (1, 7, 5), (1, 6, 6),
     (1, 5, 7), (1, 4, 8), (1, 3, 9), (1, 2, 10), (1, 1, 11), (1, 0, 12),
     (1, 10, 1), (1, 9, 2), (1, 8, 3), (1, 7, 4), (1, 6, 5), (1, 5, 6), (1, 4, 7),
     (1, 3, 8), (1, 2, 9), (1, 1, 10),
     (1, 9, 1), (2, 8, 2), (3, 7, 3), (3, 6, 4), (3, 5, 5), (3, 4, 6), (3, 3, 7),
     (2, 2, 8), (1, 1, 9), (1, 6, 3), (1, 5, 4), (1, 4, 5), (1, 3, 6)]
)
GRID_1121 = _grid_from_cells(
    [(1, 7, 0), (1, 6, 1), (1, 5, 2), (1, 4, 3), (1, 3, 4), (1, 2, 5), (1, 1, 6), (1, 0, 7),
     (1, 5, 1), (1, 4, 2), (1, 3, 3), (2, 2, 4), (1, 1, 5), (1, 4, 1), (2, 3, 2), (1, 2, 3),
     (1, 1, 4)]
)
GRID_1211 = _grid_from_cells(
    [(1, 8, 0), (1, 7, 1), (1, 6, 2), (1, 5, 3), (1, 4, 4), (1, 3, 5), (1, 2, 6), (1, 1, 7),
     (1, 0, 8), (1, 6, 1), (1, 5, 2), (1, 4, 3), (1, 3, 4), (1, 2, 5), (1, 1, 6), (1, 5, 1),
     (2, 4, 2), (2, 3, 3), (1, 2, 4), (1, 1, 5), (1, 2, 3)]
)
GRID_2111 = _grid_from_cells(
    [(1, 9, 0), (1, 8, 1), (1, 7, 2), (1, 6, 3), (1, 5, 4), (1, 4, 5), (1, 3, 6), (1, 2, 7),
     (1, 1, 8), (1, 0, 9), (1, 7, 1), (1, 6, 2), (1, 5, 3), (1, 4, 4), (1, 3, 5), (1, 2, 6),
     (1, 1, 7), (1, 6, 1), (2, 5, 2), (2, 4, 3), (2, 3, 4), (2, 2, 5), (1, 1, 6), (1, 3, 3)]
)
GRID_1311 = _grid_from_cells(
    [(1, 10, 0), (1, 9, 1), (1, 8, 2), (1, 7, 3), (1, 6, 4), (1, 5, 5), (1, 4, 6), (1, 3, 7),
     (1, 2, 8), (1, 1, 9), (1, 0, 10), (1, 8, 1), (1, 7, 2), (1, 6, 3), (1, 5, 4), (1, 4, 5),
     (2, 3, 6), (1, 2, 7), (1, 1, 8), (1, 7, 1), (2, 6, 2), (3, 5, 3), (2, 4, 4), (1, 3, 5),
     (1, 2, 6), (1, 1, 7), (1, 4, 3), (1, 3, 4), (1, 2, 5), (0, 5, 2)]
)


@pytest.mark.parametrize(
    "parts, grid",
    [
        ((1, 1, 3, 1), GRID_1131),
        ((1, 1, 1, 3), GRID_1113),
        ((3, 1, 1, 1), GRID_3111),
        ((1, 1, 2, 1), GRID_1121),
        ((1, 2, 1, 1), GRID_1211),
        ((2, 1, 1, 1), GRID_2111),
        ((1, 3, 1, 1), GRID_1311),
    ],
)
def test_four_run_coefficient_tables(parts, grid):
    assert coefficient_grid(refined_catalan(parts)) == grid


def test_symmetry_reports():
    report = symmetry_report((1, 1, 3, 1))
    assert not report.symmetric
    assert report.witness == ((2, 4), 1, 2)
    assert report.witness_line() == "q^4*t^2=2 vs q^2*t^4=1"

    assert symmetry_report((1, 1, 1, 3)).symmetric
    assert symmetry_report((3, 1, 1, 1)).symmetric
    assert not symmetry_report((1, 3, 1, 1)).symmetric
    assert not symmetry_report((1, 1, 2, 1)).symmetric
    assert not symmetry_report((1, 2, 1, 1)).symmetric


def test_lambda_symmetry_contrasts():
    # the two asymmetric length-4 summands cancel for the partition (2,1,1,1)
    assert is_qt_symmetric(lambda_catalan((2, 1, 1, 1)))
    # ... but not for (3,1,1,1)
    assert not is_qt_symmetric(lambda_catalan((3, 1, 1, 1)))


def test_symmetry_scan_three_runs():
    reports = symmetry_scan(kvectors_of_length(3, 3))
    assert len(reports) == 27
    assert all(r.symmetric for r in reports)


def test_symmetry_scan_repeated_tails():
    reports = symmetry_scan(repeated_tail_vectors(3, [4]))
    assert len(reports) == 9
    assert all(r.symmetric for r in reports)


def test_check_last_param():
    assert check_last_param((1, 1, 1), 2, 3)
    grids = [
        coefficient_grid(refined_catalan((1, 1, 1) + (m,))) for m in (2, 3)
    ]
    assert grids[0] == grids[1] == GRID_1113
    for m, l in itertools.combinations((1, 2, 3), 2):
        assert check_last_param((2, 1), m, l)
    assert check_last_param((3, 2), 2, 2)


@pytest.mark.parametrize("family", ["three", "k4", "kaaa"])
def test_bounce_agreement(family):
    assert check_bounce_agreement(family, 4)


@pytest.mark.parametrize("family, bound", [("three", 6), ("k4", 3), ("kaaa", 3)])
def test_verify_theorem_small(family, bound):
    report = verify_theorem(family, bound)
    assert report.formula_match
    assert report.series_match
    assert report.symmetric
    assert report.all_ok


def test_q_binomial_golden():
    from qtcatalan.verify import Q_CONTEXT

    assert q_binomial(4, 2) == LaurentPoly.parse(Q_CONTEXT, "1 + q + 2*q^2 + q^3 + q^4")


def test_carlitz_riordan_golden():
    from qtcatalan.verify import Q_CONTEXT

    assert carlitz_riordan(3) == LaurentPoly.parse(Q_CONTEXT, "1 + 2*q + q^2 + q^3")
    assert macmahon_q_catalan(2) == LaurentPoly.parse(Q_CONTEXT, "1 + q^2")


def test_q_specializations():
    for n in range(1, 7):
        assert check_q_specializations(n), n
    with pytest.raises(DomainError):
        check_q_specializations(0)

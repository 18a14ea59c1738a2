import statistics
from fractions import Fraction

import pytest

from teachdim import fixture_path
from teachdim.errors import EnumerationCapError, FormatError
from teachdim.sampling import (
    MC_DEFAULT_K_CAP,
    BatchDistribution,
    BtdBoundProfile,
    expected_btd_bound,
    expected_btd_exact,
    expected_btd_mc,
    format_dist,
    parse_dist,
    validate_monotone,
)

GEOMETRIC16 = fixture_path("geometric16.dist")
BATCH2HEAVY = fixture_path("batch2heavy.dist")


def test_geometric_distribution_shape():
    for r in (Fraction(1), Fraction(2), Fraction(10), Fraction(1, 3)):
        V = BatchDistribution.geometric(r)
        assert V.V(1) == (3 * r + 1) / (4 * r + 1)
        for k in range(1, 8):
            assert V.V(k + 1) / V.V(k) == r / (4 * r + 1)
            assert V.V(k) == ((3 * r + 1) / r) * (4 + 1 / r) ** -k
        assert V.total_mass == 1


def test_custom_distribution_validation():
    with pytest.raises(ValueError):
        BatchDistribution.custom([(1, Fraction(1, 2))])  # short of 1, no tail
    with pytest.raises(ValueError):
        BatchDistribution.custom([(1, Fraction(1, 2)), (1, Fraction(1, 2))])
    with pytest.raises(ValueError):
        BatchDistribution.custom([(0, Fraction(1))])
    with pytest.raises(ValueError):
        BatchDistribution.custom([(1, Fraction(-1)), (2, Fraction(2))])
    with pytest.raises(ValueError):
        BatchDistribution.custom([], Fraction(1), 1)  # ratio at 1
    with pytest.raises(ValueError):
        BatchDistribution.custom([], Fraction(1, 2), 0)
    with pytest.raises(ValueError):
        BatchDistribution.custom([(2, Fraction(1, 2))], Fraction(1, 2), 2)
    with pytest.raises(ValueError):
        BatchDistribution.geometric(0)
    # a heavy tail ratio is legitimate as long as it stays below 1
    V = BatchDistribution.custom([], Fraction(5, 6), 1)
    assert V.tail_first_mass == Fraction(1, 6)
    assert V.total_mass == 1


def test_table_only_distribution():
    V = BatchDistribution.custom([(1, Fraction(1, 2)), (2, Fraction(1, 2))])
    assert V.V(1) == Fraction(1, 2)
    assert V.V(3) == 0
    assert V.total_mass == 1
    assert validate_monotone(V).ok


def test_geometric_bound_closed_form():
    for r in (Fraction(1), Fraction(2), Fraction(10), Fraction(1, 3)):
        series = expected_btd_bound(BatchDistribution.geometric(r))
        assert not series.diverges
        assert series.total == 2 * (3 * r + 1)
        # partial sums stay below the exact total and increase toward it
        cums = [row[4] for row in series.rows]
        assert all(b > a for a, b in zip(cums, cums[1:]))
        assert cums[-1] < series.total
        assert cums[-1] + series.tail == series.total


def test_bound_total_independent_of_table_cut():
    V = BatchDistribution.geometric(1)
    totals = {expected_btd_bound(V, k_terms=k).total for k in (1, 5, 12, 40)}
    assert totals == {Fraction(8)}


def test_power_profile_closed_form_66():
    V = parse_dist(GEOMETRIC16.read_text())
    series = expected_btd_bound(V, BtdBoundProfile.power(2))
    assert series.total == 66


def test_power_profile_matches_long_partial_sums():
    rho = Fraction(5, 6)
    V = BatchDistribution.custom([], rho, 1)
    for degree in (1, 2, 3):
        series = expected_btd_bound(V, BtdBoundProfile.power(degree))
        brute = sum(
            k**degree * (1 / 6) * (5 / 6) ** (k - 1) for k in range(1, 10001)
        )
        assert series.total is not None
        assert abs(float(series.total) - brute) < 1e-6


def test_pivot_distribution_terms_and_tail():
    V = parse_dist(BATCH2HEAVY.read_text())
    series = expected_btd_bound(V, k_terms=3)
    terms = [row[3] for row in series.rows]
    assert terms == [Fraction(2, 13), Fraction(64, 13), Fraction(96, 13)]
    assert series.tail == Fraction(64, 5)
    assert series.total == Fraction(1642, 65)


def test_divergence_boundary():
    at_one = BatchDistribution.custom([], Fraction(1, 4), 1)  # ratio * base == 4/4
    series = expected_btd_bound(at_one)
    assert series.diverges and series.total is None and series.tail is None

    below = BatchDistribution.custom([], Fraction(1, 5), 1)
    assert not expected_btd_bound(below).diverges

    # a power profile cannot diverge for any ratio below 1
    assert not expected_btd_bound(at_one, BtdBoundProfile.power(5)).diverges

    with pytest.raises(ValueError):
        expected_btd_exact(at_one, 1)


def test_monotone_geometric_and_fixtures():
    res = validate_monotone(BatchDistribution.geometric(1))
    assert res.ok and res.first_violation is None
    assert [row[0] for row in res.rows] == [1, 2, 3, 4]
    assert res.rows[0][3] == Fraction(2, 5)

    res = validate_monotone(parse_dist(BATCH2HEAVY.read_text()))
    assert res.ok
    masses = [row[3] for row in res.rows]
    assert masses == sorted(masses, reverse=True)
    assert masses[0] == Fraction(1, 13 * 2)
    assert masses[3] == Fraction(1, 14 * 56014)

    assert validate_monotone(parse_dist(GEOMETRIC16.read_text())).ok


def test_monotone_violation_is_located():
    V = BatchDistribution.custom(
        [(1, Fraction(9, 100)), (2, Fraction(1, 100)), (3, Fraction(9, 10))]
    )
    res = validate_monotone(V)
    assert not res.ok
    assert res.first_violation[:2] == (2, 3)
    assert res.first_violation[2] == Fraction(1, 2400)
    assert res.first_violation[3] == Fraction(9, 10280)


def test_monotone_beyond_cap_raises():
    V = BatchDistribution.custom([(5, Fraction(1))])
    with pytest.raises(EnumerationCapError):
        validate_monotone(V)


def test_exact_expectation_geometric_two_batches():
    V = BatchDistribution.geometric(1)
    res = expected_btd_exact(V, 2)
    assert res.rows[0][3] == 1  # batch-1 mean dimension
    assert res.rows[1][3] == Fraction(41, 12)
    assert res.enumerated == Fraction(101, 75)
    assert res.tail_bound == Fraction(128, 25)
    assert res.total == Fraction(97, 15)
    assert res.exact and res.inexact_count == 0


def test_exact_expectation_respects_cap():
    with pytest.raises(EnumerationCapError):
        expected_btd_exact(BatchDistribution.geometric(1), 5)


def test_mc_is_deterministic_in_seed():
    V = BatchDistribution.geometric(1)
    a = expected_btd_mc(V, 60, seed=7, k_cap=2)
    b = expected_btd_mc(V, 60, seed=7, k_cap=2)
    assert a == b
    c = expected_btd_mc(V, 60, seed=8, k_cap=2)
    assert c.dimensions != a.dimensions


def test_mc_accounting():
    V = BatchDistribution.geometric(1)
    est = expected_btd_mc(V, 200, seed=3, k_cap=2)
    assert est.n == 200 and len(est.dimensions) == 200
    assert est.mean == pytest.approx(statistics.fmean(est.dimensions))
    # enumerated draws stay below the size cap; capped ones carry D_k >= 32
    assert sum(1 for v in est.dimensions if v >= 32) == est.capped
    assert est.capped >= 1
    assert est.inexact == 0
    assert est.stderr > 0


def test_mc_degenerate_distribution():
    V = BatchDistribution.custom([(1, Fraction(1))])
    est = expected_btd_mc(V, 10, seed=0)
    assert est.mean == 1.0 and est.stderr == 0.0 and est.capped == 0
    with pytest.raises(ValueError):
        expected_btd_mc(V, 0)


def test_mc_default_k_cap_is_exported():
    assert MC_DEFAULT_K_CAP == 3


def test_parse_dist_round_trip_and_errors():
    for path in (GEOMETRIC16, BATCH2HEAVY):
        V = parse_dist(path.read_text())
        assert parse_dist(format_dist(V)) == V
    g = BatchDistribution.geometric(Fraction(2, 7))
    assert parse_dist(format_dist(g)) == g

    for bad in (
        "",
        "dust geometric r=1",
        "dist geometric 1",
        "dist geometric r=x",
        "dist custom\nbatch 1 1\nbatch 1 0",
        "dist custom\nwidget 3",
        "dist custom\ntail geometric 1/2 from 1\ntail geometric 1/2 from 1",
        "dist custom\nbatch 1 2",
        "dist custom\nbatch 2 1/2\ntail geometric 1/2 from 2",
    ):
        with pytest.raises(FormatError):
            parse_dist(bad)

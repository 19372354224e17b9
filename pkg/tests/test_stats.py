from fractions import Fraction

import pytest

from chartab.characters import table_column
from chartab.partitions import enumerate_partitions, partition_count
from chartab.stats import (
    PARITY_BUDGET,
    SIGN_BUDGET,
    BudgetError,
    ResidueTally,
    SignTally,
    TableStats,
    collect_stats,
    count_residue_zero,
    format6,
    merge_tallies,
    parity_stats,
    proportion_even,
    residue_tally,
    round6,
    sign_probabilities,
    sign_stats,
)

from golden import PARTITION_COUNTS, TABLE1_PARITY, TABLE2_SIGNS, TABLE3_DIVISIBLE


def test_parity_stats_reference_values():
    for n in (1, 2, 3, 5, 8, 10):
        assert parity_stats(n) == TABLE1_PARITY[n]


def test_sign_stats_reference_values():
    for n in (1, 2, 4, 6, 8):
        pos, neg = TABLE2_SIGNS[n]
        zero = PARTITION_COUNTS[n] ** 2 - pos - neg
        assert sign_stats(n) == SignTally(pos, neg, zero)


def test_residue_counts_reference_values():
    for n in (2, 3, 4, 5, 6, 9):
        for d in (3, 4, 5, 6, 7):
            assert count_residue_zero(n, d) == TABLE3_DIVISIBLE[n][d]


def test_tallies_cover_the_whole_table():
    for n in range(1, 11):
        entries = partition_count(n) ** 2
        even, odd = parity_stats(n)
        assert even + odd == entries
        assert sign_stats(n).total() == entries
        for d in (3, 7):
            assert residue_tally(n, d).total() == entries


def test_tallies_match_exact_columns():
    for n in range(1, 13):
        even = zero = 0
        mod3 = [0, 0, 0]
        for mu in enumerate_partitions(n):
            for value in table_column(mu):
                even += value % 2 == 0
                zero += value == 0
                mod3[value % 3] += 1
        assert parity_stats(n)[0] == even
        assert sign_stats(n).zero == zero
        assert residue_tally(n, 3).counts == tuple(mod3)


def test_merge_tallies():
    a = SignTally(1, 2, 3)
    b = SignTally(10, 20, 30)
    assert merge_tallies(a, b) == SignTally(11, 22, 33)
    assert merge_tallies(a, SignTally()) == a
    assert merge_tallies(a, b) == merge_tallies(b, a)
    r = ResidueTally(3, (1, 2, 3))
    s = ResidueTally(3, (4, 5, 6))
    assert merge_tallies(r, s) == ResidueTally(3, (5, 7, 9))
    with pytest.raises(ValueError):
        merge_tallies(r, ResidueTally(4, (0, 0, 0, 0)))
    with pytest.raises(ValueError):
        merge_tallies(a, r)
    with pytest.raises(ValueError):
        merge_tallies(1, 2)


def test_budget_guards():
    with pytest.raises(BudgetError, match=f"budget of {PARITY_BUDGET}"):
        parity_stats(PARITY_BUDGET + 1)
    with pytest.raises(BudgetError, match=f"budget of {SIGN_BUDGET}"):
        sign_stats(SIGN_BUDGET + 1)
    with pytest.raises(BudgetError, match="budget of 26"):
        count_residue_zero(40, 3)
    with pytest.raises(BudgetError, match="budget of 4"):
        parity_stats(5, budget=4)
    assert parity_stats(5, budget=5) == TABLE1_PARITY[5]
    with pytest.raises(ValueError):
        parity_stats(0)
    with pytest.raises(ValueError):
        residue_tally(5, 1)


def test_rounding_helpers():
    assert format6(Fraction(1, 3)) == "0.333333"
    assert format6(Fraction(2, 3)) == "0.666667"
    assert format6(Fraction(1, 2)) == "0.500000"
    assert format6(Fraction(0)) == "0.000000"
    assert format6(Fraction(-1, 3)) == "-0.333333"
    # ties resolve to the even last digit
    assert format6(Fraction(1234565, 10**7)) == "0.123456"
    assert format6(Fraction(1234575, 10**7)) == "0.123458"
    assert round6(Fraction(1, 3)) == 0.333333
    assert round6(Fraction(1234565, 10**7)) == 0.123456


def test_proportion_even_reference_values():
    assert proportion_even(1) == 0.0
    assert proportion_even(8) == 0.549587
    assert proportion_even(12) == 0.598415


def test_sign_probabilities_reference_values():
    assert sign_probabilities(1) == (1.0, 0.0)
    assert sign_probabilities(4) == (0.666667, 0.333333)
    assert sign_probabilities(6) == (0.630435, 0.369565)


def test_proportion_even_tracks_reference_series():
    # the plotted series and the computed proportion may drift by at most a
    # formatting artifact, never by a real amount
    from golden import FIGURE1_EVEN_PROPORTION

    for n in range(1, 13):
        assert abs(proportion_even(n) - float(FIGURE1_EVEN_PROPORTION[n])) <= 0.02


def test_sweeps_do_not_depend_on_worker_count():
    for workers in (1, 2, 3):
        assert parity_stats(9, workers=workers) == TABLE1_PARITY[9]
        pos, neg = TABLE2_SIGNS[9]
        assert sign_stats(9, workers=workers).positive == pos
        assert residue_tally(9, 5, workers=workers).counts[0] == TABLE3_DIVISIBLE[9][5]


def test_collect_stats_bundle():
    stats = collect_stats(6, ("parity", "signs", "residue"), (3, 6))
    assert stats.partitions == 11
    assert stats.entries == 121
    assert (stats.even, stats.odd) == TABLE1_PARITY[6]
    assert (stats.signs.positive, stats.signs.negative) == TABLE2_SIGNS[6]
    assert stats.residues[6].counts[0] == TABLE3_DIVISIBLE[6][6]
    assert stats.elapsed >= 0.0
    doc = stats.to_dict()
    assert doc["parity"]["proportion_even"] == "0.363636"
    assert doc["signs"]["proportion_positive"] == "0.630435"
    assert doc["residues"]["3"]["counts"][0] == TABLE3_DIVISIBLE[6][3]
    with pytest.raises(ValueError):
        collect_stats(4, ("nonsense",))


def test_table_stats_cross_checks():
    bad = TableStats(n=3, partitions=3, entries=9, even=2, odd=6)
    with pytest.raises(ValueError, match="parity"):
        bad.check()
    bad = TableStats(n=3, partitions=3, entries=9, signs=SignTally(6, 2, 0))
    with pytest.raises(ValueError, match="sign"):
        bad.check()
    good = TableStats(n=3, partitions=3, entries=9, even=2, odd=7)
    good.check()

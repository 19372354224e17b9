import math
import random

import pytest

from chartab.characters import (
    BorderStrip,
    _eval,
    border_strips,
    character_degree,
    mn_character,
    mn_character_mod,
    table_column,
    table_column_mod,
)
from chartab.partitions import (
    centralizer_order,
    class_size,
    conjugate,
    enumerate_partitions,
)


def _cells(shape):
    return {(i, j) for i, row in enumerate(shape) for j in range(row)}


def _strips_by_brute_force(shape, size):
    """Reference implementation straight from the definition: a border strip
    is an edge-connected skew shape with no 2x2 block."""
    found = set()
    outer = _cells(shape)
    for inner in enumerate_partitions(sum(shape) - size):
        if len(inner) > len(shape):
            continue
        if any(inner[i] > shape[i] for i in range(len(inner))):
            continue
        skew = outer - _cells(inner)
        start = next(iter(skew))
        seen = {start}
        todo = [start]
        while todo:
            i, j = todo.pop()
            for step in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if step in skew and step not in seen:
                    seen.add(step)
                    todo.append(step)
        if len(seen) != len(skew):
            continue
        if any({(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)} <= skew for i, j in skew):
            continue
        found.add((inner, len({i for i, _ in skew})))
    return found


def _count_standard_tableaux(shape, memo={(): 1}):
    """Count standard fillings by stripping one removable corner at a time."""
    if shape in memo:
        return memo[shape]
    total = 0
    for i in range(len(shape)):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if shape[i] > below:
            if shape[i] == 1:
                smaller = shape[:i]
            else:
                smaller = shape[:i] + (shape[i] - 1,) + shape[i + 1 :]
            total += _count_standard_tableaux(smaller)
    memo[shape] = total
    return total


def test_border_strips_examples_and_order():
    assert border_strips((2, 2), 2) == [
        BorderStrip((2,), 1),
        BorderStrip((1, 1), 2),
    ]
    assert border_strips((2, 1), 3) == [BorderStrip((), 2)]
    assert border_strips((1,), 2) == []
    assert border_strips((3, 1), 2) == [BorderStrip((1, 1), 1)]
    assert border_strips((1,), 1) == [BorderStrip((), 1)]
    assert border_strips((), 1) == []
    with pytest.raises(ValueError):
        border_strips((2, 1), 0)


def test_border_strips_match_brute_force():
    for n in range(1, 9):
        for shape in enumerate_partitions(n):
            for size in range(1, n + 1):
                got = border_strips(shape, size)
                assert len(set(got)) == len(got)
                assert set(got) == _strips_by_brute_force(shape, size)


def test_border_strips_leave_valid_smaller_shapes():
    for shape in enumerate_partitions(8):
        for size in range(1, 9):
            for remaining, height in border_strips(shape, size):
                assert sum(remaining) == 8 - size
                assert 1 <= height <= size
                assert all(
                    remaining[i] >= remaining[i + 1] for i in range(len(remaining) - 1)
                )


def test_mn_character_known_values():
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 2), (2, 2)) == 2
    assert mn_character((1, 1, 1, 1), (2, 1, 1)) == -1
    assert mn_character((), ()) == 1
    with pytest.raises(ValueError):
        mn_character((2, 1), (4,))


def test_trivial_and_sign_rows():
    for n in range(1, 10):
        for mu in enumerate_partitions(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_full_table_n3():
    classes = [(1, 1, 1), (2, 1), (3,)]
    table = [[mn_character(lam, mu) for mu in classes] for lam in enumerate_partitions(3)]
    assert table == [[1, 1, 1], [2, 0, -1], [1, -1, 1]]


def test_character_degree_three_routes_agree():
    for n in range(9):
        for lam in enumerate_partitions(n):
            by_hooks = character_degree(lam)
            assert by_hooks == _count_standard_tableaux(lam)
            assert by_hooks == mn_character(lam, (1,) * n)
            assert by_hooks > 0


def test_degree_squares_sum_to_group_order():
    for n in range(1, 11):
        total = sum(character_degree(lam) ** 2 for lam in enumerate_partitions(n))
        assert total == math.factorial(n)


def test_conjugation_twist():
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            twisted = conjugate(lam)
            for mu in enumerate_partitions(n):
                assert mn_character(twisted, mu) == (-1) ** (n - len(mu)) * mn_character(
                    lam, mu
                )


def test_peel_order_does_not_matter():
    for n in range(1, 9):
        for mu in enumerate_partitions(n):
            ascending = tuple(sorted(mu))
            for lam in enumerate_partitions(n):
                assert _eval(lam, ascending, {}, None) == mn_character(lam, mu)


def test_table_column_matches_scalar_evaluation():
    for n in range(8):
        rows = list(enumerate_partitions(n))
        for mu in rows:
            assert table_column(mu) == [mn_character(lam, mu) for lam in rows]


def test_table_column_mod_matches_exact():
    for n in range(8):
        for mu in enumerate_partitions(n):
            column = table_column(mu)
            for m in range(2, 8):
                assert table_column_mod(mu, m) == [v % m for v in column]


def test_mn_character_mod_agrees_on_random_triples():
    rng = random.Random(20260819)
    for m in range(2, 8):
        for _ in range(50):
            n = rng.randint(1, 10)
            shapes = list(enumerate_partitions(n))
            lam = rng.choice(shapes)
            mu = rng.choice(shapes)
            assert mn_character_mod(lam, mu, m) == mn_character(lam, mu) % m
    with pytest.raises(ValueError):
        mn_character_mod((2, 1), (2, 1), 1)


def test_column_orthogonality_unit():
    for n in range(1, 10):
        for mu in enumerate_partitions(n):
            column = table_column(mu)
            assert sum(v * v for v in column) == centralizer_order(mu)


def test_row_orthogonality_weighted():
    for n in range(1, 10):
        rows = list(enumerate_partitions(n))
        columns = [table_column(mu) for mu in rows]
        sizes = [class_size(mu) for mu in rows]
        for i, a in enumerate(rows):
            for j in range(i, len(rows)):
                inner = sum(s * col[i] * col[j] for s, col in zip(sizes, columns))
                assert inner == (math.factorial(n) if i == j else 0)


def test_regular_representation_column_sums():
    # summing chi_lam over the whole group picks out the trivial character
    for n in range(1, 11):
        rows = list(enumerate_partitions(n))
        totals = [0] * len(rows)
        for mu in rows:
            size = class_size(mu)
            for i, value in enumerate(table_column(mu)):
                totals[i] += size * value
        assert totals[0] == math.factorial(n)
        assert all(t == 0 for t in totals[1:])


def test_column_abs_values_invariant_under_row_conjugation():
    for n in range(1, 11):
        rows = list(enumerate_partitions(n))
        index = {lam: i for i, lam in enumerate(rows)}
        flipped = [index[conjugate(lam)] for lam in rows]
        for mu in rows:
            column = table_column(mu)
            assert [abs(column[k]) for k in flipped] == [abs(v) for v in column]

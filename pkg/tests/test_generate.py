from __future__ import annotations

import pytest

from cycdet import (
    GenConfig,
    RationalMatrix,
    RowSumMode,
    RowSumTag,
    build_gap_graph,
    det_sign,
    generate,
    generate_with_gap_pattern,
    row_sum_class,
    scc_partition,
    shrink_candidates,
    validate_class,
)


def full_cycle_pattern(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(1 if j == (i + 1) % n else 0 for j in range(n)) for i in range(n)
    )


def test_generate_is_deterministic_per_seed():
    config = GenConfig(n=5, entry_bound=3, seed=1234)
    assert generate(config).rows == generate(config).rows
    other = GenConfig(n=5, entry_bound=3, seed=1235)
    assert generate(config).rows != generate(other).rows


def test_generate_always_in_class_and_in_bounds():
    for seed in range(200):
        config = GenConfig(n=1 + seed % 7, entry_bound=5, seed=seed)
        a = generate(config)
        validate_class(a.inner)
        assert all(-5 <= x <= 5 for row in a.rows for x in row)


def test_generate_non_negative():
    for seed in range(100):
        a = generate(GenConfig(n=4, entry_bound=5, non_negative=True, seed=seed))
        assert all(x >= 0 for row in a.rows for x in row)


def test_generate_single_vertex():
    a = generate(GenConfig(n=1, entry_bound=3, seed=7))
    assert a.n == 1


def test_row_sum_forcing():
    for seed in range(100):
        pos = generate(GenConfig(n=3, entry_bound=4, row_sum=RowSumMode.FORCE_POSITIVE, seed=seed))
        assert row_sum_class(pos).tag is RowSumTag.ALL_POSITIVE
        neg = generate(GenConfig(n=3, entry_bound=4, row_sum=RowSumMode.FORCE_NEGATIVE, seed=seed))
        assert row_sum_class(neg).tag is RowSumTag.ALL_NEGATIVE


def test_shift_preserves_gap_pattern():
    for seed in range(60):
        base = GenConfig(n=5, entry_bound=4, seed=seed)
        forced = GenConfig(n=5, entry_bound=4, row_sum=RowSumMode.FORCE_POSITIVE, seed=seed)
        assert build_gap_graph(generate(base)).kappa == build_gap_graph(generate(forced)).kappa


def test_invalid_configs_are_rejected():
    with pytest.raises(ValueError):
        GenConfig(n=0)
    with pytest.raises(ValueError):
        GenConfig(n=3, entry_bound=0)
    with pytest.raises(ValueError):
        GenConfig(n=3, non_negative=True, row_sum=RowSumMode.FORCE_NEGATIVE)


def test_gap_pattern_reproduced_bit_for_bit(posdet5):
    target = build_gap_graph(posdet5).kappa
    for seed in range(30):
        a = generate_with_gap_pattern(target, GenConfig(n=5, entry_bound=4, seed=seed))
        assert build_gap_graph(a).kappa == target


def test_zero_pattern_gives_constant_rows_and_singular_matrix():
    for n in (2, 3, 5):
        zero = tuple((0,) * n for _ in range(n))
        a = generate_with_gap_pattern(zero, GenConfig(n=n, entry_bound=4, seed=11))
        assert all(len(set(row)) == 1 for row in a.rows)
        partition = scc_partition(build_gap_graph(a))
        assert len(partition.closed_components) == n
        assert det_sign(a).sign == 0


def test_full_cycle_pattern_gives_one_closed_component():
    for n in (2, 4, 6):
        a = generate_with_gap_pattern(full_cycle_pattern(n), GenConfig(n=n, seed=3))
        partition = scc_partition(build_gap_graph(a))
        assert partition.components == (tuple(range(1, n + 1)),)
        assert partition.closed_flags == (True,)


def test_pattern_rejects_self_loops_and_bad_entries():
    with pytest.raises(ValueError, match="self-loop"):
        generate_with_gap_pattern(((1, 0), (0, 0)), GenConfig(n=2))
    with pytest.raises(ValueError):
        generate_with_gap_pattern(((0, 2), (0, 0)), GenConfig(n=2))
    with pytest.raises(ValueError):
        generate_with_gap_pattern(((0, 1), (1, 0)), GenConfig(n=3))


def test_shrink_candidates_validate_and_are_deterministic():
    a = generate(GenConfig(n=5, entry_bound=5, seed=99))
    first = shrink_candidates(a)
    second = shrink_candidates(a)
    assert [c.rows for c in first] == [c.rows for c in second]
    assert len(first) >= a.n
    for candidate in first:
        validate_class(candidate.inner)
        assert candidate.n <= a.n


def test_shrink_includes_truncation_toward_zero():
    a = validate_class(RationalMatrix.from_rows([["3/2", "1/2"], ["-1/2", "5/4"]]))
    candidates = shrink_candidates(a)
    truncated = [c for c in candidates if c.n == 2]
    assert truncated and truncated[0].rows == ((1, 0), (0, 1))

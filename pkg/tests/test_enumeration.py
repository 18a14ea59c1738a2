import itertools

import pytest

from teachdim.automata import Dfa, canonical_key, is_canonical, minimize
from teachdim.enumeration import (
    ENUMERATION_CAP,
    count_up_to,
    enumerate_batch,
    export_batch,
    parse_batch,
    random_concept,
)
from teachdim.errors import EnumerationCapError, FormatError


def brute_batch(k: int):
    """Independent oracle: minimize every labeled k-state machine with start 0
    and keep the ones that stay at k states."""
    states = range(k)
    out = set()
    for d0 in itertools.product(states, repeat=k):
        for d1 in itertools.product(states, repeat=k):
            for mask in range(1 << k):
                acc = frozenset(q for q in states if (mask >> q) & 1)
                m = minimize(Dfa(k, 0, d0, d1, acc))
                if m.num_states == k:
                    out.add(m)
    return out


def test_batch_counts_small():
    assert enumerate_batch(1).count == 2
    assert enumerate_batch(2).count == 24
    assert enumerate_batch(3).count == 1028


def test_batch_members_are_canonical_sorted_unique():
    for k in (1, 2, 3):
        batch = enumerate_batch(k)
        assert batch.k == k
        keys = []
        for c in batch.concepts:
            assert c.num_states == k
            assert c.start == 0
            assert is_canonical(c)
            keys.append(canonical_key(c))
        assert keys == sorted(keys)
        assert len(set(batch.concepts)) == batch.count


def test_batch_two_equals_brute_force():
    assert set(enumerate_batch(2).concepts) == brute_batch(2)


def test_batch_three_equals_brute_force():
    # 27 * 27 * 8 = 5832 labeled machines collapse onto the 1028 canonical ones
    assert set(enumerate_batch(3).concepts) == brute_batch(3)


def test_count_up_to_totals():
    assert count_up_to(1) == 2
    assert count_up_to(2) == 26
    assert count_up_to(3) == 1054
    assert count_up_to(4) == 57068


def test_cap_is_enforced():
    with pytest.raises(EnumerationCapError):
        enumerate_batch(ENUMERATION_CAP + 1)
    with pytest.raises(EnumerationCapError):
        count_up_to(ENUMERATION_CAP + 1)
    with pytest.raises(ValueError):
        enumerate_batch(0)


def test_random_concept_is_deterministic_and_well_formed():
    for k in (1, 2, 3):
        for seed in range(20):
            c = random_concept(k, seed)
            assert c == random_concept(k, seed)
            assert c in enumerate_batch(k).concepts


def test_random_concept_beyond_cap_uses_rejection():
    for seed in range(5):
        c = random_concept(6, seed)
        assert c == random_concept(6, seed)
        assert c.num_states == 6
        assert is_canonical(c)


def test_random_concept_batch_two_is_uniform():
    scipy_stats = pytest.importorskip("scipy.stats")
    batch = enumerate_batch(2)
    index = {c: i for i, c in enumerate(batch.concepts)}
    counts = [0] * batch.count
    for seed in range(2400):
        counts[index[random_concept(2, seed)]] += 1
    assert sum(counts) == 2400
    result = scipy_stats.chisquare(counts)
    assert result.pvalue > 0.001


def test_export_parse_round_trip():
    batch = enumerate_batch(2)
    again = parse_batch(export_batch(batch))
    assert tuple(again) == batch.concepts
    with pytest.raises(FormatError):
        parse_batch("")
    with pytest.raises(FormatError):
        parse_batch("dfa 1\nstates 1\n")

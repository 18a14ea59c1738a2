"""Exhaustive generation of the concept batches.

Batch k = every canonical minimal DFA with exactly k states. Generation
walks canonical transition skeletons directly (so no dedup pass is needed),
crosses them with all accepting subsets, and keeps the minimal ones.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .automata import Dfa, _key, format_dfa, minimize, parse_dfa
from .errors import AttemptLimitError, EnumerationCapError, FormatError

__all__ = [
    "ENUMERATION_CAP",
    "ConceptBatch",
    "enumerate_batch",
    "count_up_to",
    "random_concept",
    "export_batch",
    "parse_batch",
]

ENUMERATION_CAP = 4

_REJECTION_ATTEMPTS = 20000


@dataclass(frozen=True)
class ConceptBatch:
    k: int
    concepts: tuple

    @property
    def count(self) -> int:
        return len(self.concepts)


def _skeletons(k: int):
    """Transition tables that are canonical by construction.

    Slots are scanned interleaved: state 0 on symbol 0, state 0 on symbol 1,
    state 1 on symbol 0, and so on. A target may introduce a new state only
    as max_used + 1, and a state's own row may begin only after the state has
    already appeared as a target. Together these force first-visit numbering
    and reachability in a single pass.
    """
    n = 2 * k
    out = []
    cur = [0] * n

    def rec(pos: int, used: int):
        if pos == n:
            if used == k:
                out.append((tuple(cur[0::2]), tuple(cur[1::2])))
            return
        if used + (n - pos) < k:
            return
        if pos % 2 == 0 and pos // 2 >= used:
            return
        hi = min(used, k - 1)
        for t in range(hi + 1):
            cur[pos] = t
            rec(pos + 1, used + (t == used))

    rec(0, 1)
    return out


def _is_minimal(k, d0, d1, mask) -> bool:
    """Partition refinement on acceptance colors; minimal iff it reaches k blocks."""
    if mask == 0 or mask == (1 << k) - 1:
        return k == 1
    colors = [(mask >> q) & 1 for q in range(k)]
    ncol = 2
    while True:
        seen = {}
        new = []
        for q in range(k):
            sig = (colors[q], colors[d0[q]], colors[d1[q]])
            new.append(seen.setdefault(sig, len(seen)))
        if len(seen) == k:
            return True
        if len(seen) == ncol:
            return False
        ncol = len(seen)
        colors = new


@lru_cache(maxsize=None)
def _batch(k: int) -> ConceptBatch:
    members = []
    for d0, d1 in _skeletons(k):
        for mask in range(1 << k):
            if _is_minimal(k, d0, d1, mask):
                acc = frozenset(q for q in range(k) if (mask >> q) & 1)
                members.append(Dfa(k, 0, d0, d1, acc))
    members.sort(key=_key)
    return ConceptBatch(k, tuple(members))


def enumerate_batch(k: int, cap: int = ENUMERATION_CAP) -> ConceptBatch:
    """All canonical minimal machines on exactly k states, in canonical-key order."""
    if k < 1:
        raise ValueError("batch index must be >= 1")
    if k > cap:
        raise EnumerationCapError(f"batch {k} exceeds the enumeration cap {cap}")
    return _batch(k)


def count_up_to(k: int, cap: int = ENUMERATION_CAP) -> int:
    """Total number of concepts across batches 1..k."""
    return sum(enumerate_batch(j, cap).count for j in range(1, k + 1))


def random_concept(k: int, seed: int, cap: int = ENUMERATION_CAP) -> Dfa:
    """Uniform draw from batch k; a pure function of (k, seed).

    Below the cap this indexes the enumerated batch. Above it, rejection
    sampling draws a uniform total DFA with start 0 and keeps it iff its
    minimal form still has k states. Each canonical machine then has exactly
    (k-1)! labelled preimages, because an automorphism of a reachable
    deterministic machine that fixes the start is the identity, so the
    accepted draws are exactly uniform.
    """
    if k < 1:
        raise ValueError("batch index must be >= 1")
    rng = random.Random(seed)
    if k <= cap:
        batch = enumerate_batch(k, cap)
        return batch.concepts[rng.randrange(batch.count)]
    for _ in range(_REJECTION_ATTEMPTS):
        d0 = tuple(rng.randrange(k) for _ in range(k))
        d1 = tuple(rng.randrange(k) for _ in range(k))
        acc = frozenset(q for q in range(k) if rng.getrandbits(1))
        m = minimize(Dfa(k, 0, d0, d1, acc))
        if m.num_states == k:
            return m
    raise AttemptLimitError(
        f"no {k}-state minimal machine found in {_REJECTION_ATTEMPTS} attempts"
    )


def export_batch(batch: ConceptBatch) -> str:
    """Batch listing: one DFA record per concept, separated by '---' lines."""
    return "\n---\n".join(format_dfa(c) for c in batch.concepts)


def parse_batch(text: str):
    records = []
    chunk = []
    for ln in text.splitlines():
        if ln.strip() == "---":
            records.append("\n".join(chunk))
            chunk = []
        else:
            chunk.append(ln)
    if any(l.strip() for l in chunk):
        records.append("\n".join(chunk))
    if not records:
        raise FormatError("batch listing holds no records")
    return [parse_dfa(r) for r in records]

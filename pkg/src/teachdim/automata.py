"""Core binary-alphabet DFA type and algorithms.

A concept here is a regular language over {0,1}, identified with its
canonical minimal DFA: start state 0, states numbered in first-visit order
of a breadth-first walk that follows the 0-edge before the 1-edge, every
state reachable, no two states equivalent. The complexity of a concept is
the state count of that machine.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .errors import FormatError, NotCanonicalError

__all__ = [
    "Dfa",
    "run",
    "minimize",
    "equivalent",
    "distinguishing_string",
    "canonical_key",
    "is_canonical",
    "shortlex_key",
    "strings_up_to",
    "parse_dfa",
    "format_dfa",
    "tightness_pair",
]


def shortlex_key(s: str):
    """Sort key for the shortlex order on binary strings: length first, then lex."""
    return (len(s), s)


def strings_up_to(max_len: int) -> list[str]:
    """All binary strings of length <= max_len, in shortlex order."""
    out = [""]
    for n in range(1, max_len + 1):
        out.extend("".join(p) for p in product("01", repeat=n))
    return out


@dataclass(frozen=True)
class Dfa:
    """Total DFA over {0,1}; delta0/delta1 map each state to its successor."""

    num_states: int
    start: int
    delta0: tuple
    delta1: tuple
    accepting: frozenset

    def __post_init__(self):
        object.__setattr__(self, "delta0", tuple(self.delta0))
        object.__setattr__(self, "delta1", tuple(self.delta1))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        k = self.num_states
        if k < 1:
            raise ValueError("a DFA needs at least one state")
        if not 0 <= self.start < k:
            raise ValueError("start state out of range")
        for delta in (self.delta0, self.delta1):
            if len(delta) != k:
                raise ValueError("transition table must cover every state")
            for t in delta:
                if not 0 <= t < k:
                    raise ValueError("transition target out of range")
        for q in self.accepting:
            if not 0 <= q < k:
                raise ValueError("accepting state out of range")

    def step(self, q: int, ch: str) -> int:
        if ch == "0":
            return self.delta0[q]
        if ch == "1":
            return self.delta1[q]
        raise ValueError(f"symbol {ch!r} is not in the alphabet")


def run(d: Dfa, s: str) -> bool:
    """Membership of s in L(d)."""
    q = d.start
    for ch in s:
        q = d.step(q, ch)
    return q in d.accepting


def _reachable_order(d: Dfa) -> list:
    order = []
    seen = {d.start}
    queue = deque([d.start])
    while queue:
        q = queue.popleft()
        order.append(q)
        for t in (d.delta0[q], d.delta1[q]):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return order


def _refine(k, d0, d1, accepting):
    """Hopcroft partition refinement; returns (state -> block id, block count)."""
    pre = ([[] for _ in range(k)], [[] for _ in range(k)])
    for p in range(k):
        pre[0][d0[p]].append(p)
        pre[1][d1[p]].append(p)
    final = frozenset(accepting)
    rest = frozenset(range(k)) - final
    partition = {s for s in (final, rest) if s}
    smaller = min(partition, key=len)
    work = {(smaller, 0), (smaller, 1)}
    while work:
        splitter, sym = work.pop()
        x = {p for q in splitter for p in pre[sym][q]}
        if not x:
            continue
        for y in list(partition):
            inter = y & x
            if not inter or inter == y:
                continue
            diff = y - x
            partition.remove(y)
            partition.add(inter)
            partition.add(diff)
            for c in (0, 1):
                if (y, c) in work:
                    work.remove((y, c))
                    work.add((inter, c))
                    work.add((diff, c))
                else:
                    # only the smaller half needs rescanning
                    work.add((min(inter, diff, key=len), c))
    block = [0] * k
    for i, group in enumerate(sorted(partition, key=min)):
        for q in group:
            block[q] = i
    return block, len(partition)


def _bfs_canonical(k, start, d0, d1, accepting) -> Dfa:
    """Renumber by BFS first-visit order, 0-edge before 1-edge."""
    order = []
    seen = {start}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        order.append(q)
        for t in (d0[q], d1[q]):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    idx = {q: i for i, q in enumerate(order)}
    return Dfa(
        len(order),
        0,
        tuple(idx[d0[q]] for q in order),
        tuple(idx[d1[q]] for q in order),
        frozenset(idx[q] for q in order if q in accepting),
    )


def minimize(d: Dfa) -> Dfa:
    """Canonical minimal DFA for L(d).

    Restrict to reachable states, refine the acceptance partition, collapse
    blocks, then renumber breadth-first. Idempotent; language-preserving.
    """
    order = _reachable_order(d)
    idx = {q: i for i, q in enumerate(order)}
    k = len(order)
    d0 = [idx[d.delta0[q]] for q in order]
    d1 = [idx[d.delta1[q]] for q in order]
    acc = {idx[q] for q in order if q in d.accepting}
    block, nblocks = _refine(k, d0, d1, acc)
    bd0 = [0] * nblocks
    bd1 = [0] * nblocks
    bacc = set()
    for q in range(k):
        b = block[q]
        bd0[b] = block[d0[q]]
        bd1[b] = block[d1[q]]
        if q in acc:
            bacc.add(b)
    return _bfs_canonical(nblocks, block[0], bd0, bd1, bacc)


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Language equality by union-find over the reachable pair graph."""
    off = a.num_states
    total = off + b.num_states
    succ0 = list(a.delta0) + [t + off for t in b.delta0]
    succ1 = list(a.delta1) + [t + off for t in b.delta1]
    acc = [q in a.accepting for q in range(off)]
    acc += [q in b.accepting for q in range(b.num_states)]
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    stack = [(a.start, b.start + off)]
    while stack:
        p, q = stack.pop()
        rp, rq = find(p), find(q)
        if rp == rq:
            continue
        if acc[p] != acc[q]:
            return False
        parent[rp] = rq
        stack.append((succ0[p], succ0[q]))
        stack.append((succ1[p], succ1[q]))
    return True


def distinguishing_string(a: Dfa, b: Dfa):
    """Shortlex-least string in exactly one of the two languages, or None.

    Breadth-first search over the product graph, 0-edge first, so the first
    acceptance mismatch seen is reached by the shortlex-least path.
    """
    root = (a.start, b.start)
    parent = {root: None}
    queue = deque([root])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in a.accepting) != (q in b.accepting):
            bits = []
            node = pair
            while parent[node] is not None:
                node, ch = parent[node]
                bits.append(ch)
            return "".join(reversed(bits))
        for ch in "01":
            nxt = (a.step(p, ch), b.step(q, ch))
            if nxt not in parent:
                parent[nxt] = (pair, ch)
                queue.append(nxt)
    return None


def is_canonical(d: Dfa) -> bool:
    return minimize(d) == d


def _key(d: Dfa):
    bits = tuple(1 if q in d.accepting else 0 for q in range(d.num_states))
    return (d.num_states, d.delta0 + d.delta1, bits)


def canonical_key(d: Dfa):
    """Total-order key (k, delta0 + delta1, accept bits) for canonical machines.

    Equal keys iff identical machines; rejects non-canonical input so the
    order is only ever applied where it is meaningful.
    """
    if not is_canonical(d):
        raise NotCanonicalError("canonical_key requires a canonical minimal machine")
    return _key(d)


def parse_dfa(text: str) -> Dfa:
    """Parse the line-based DFA format.

    Line 1 "dfa 1", line 2 "states <k>", line 3 "start <s>", line 4
    "accept <indices, possibly none>", then one "t <i> <dest0> <dest1>"
    line per state. Missing or duplicated transition lines, and targets
    out of range, are rejected.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 4:
        raise FormatError("DFA file is too short")
    if lines[0] != "dfa 1":
        raise FormatError("expected header line 'dfa 1'")

    def keyword_int(line, keyword):
        parts = line.split()
        if len(parts) != 2 or parts[0] != keyword:
            raise FormatError(f"expected '{keyword} <n>', got {line!r}")
        try:
            return int(parts[1])
        except ValueError:
            raise FormatError(f"bad number in {line!r}") from None

    k = keyword_int(lines[1], "states")
    if k < 1:
        raise FormatError("state count must be positive")
    start = keyword_int(lines[2], "start")
    accept_parts = lines[3].split()
    if not accept_parts or accept_parts[0] != "accept":
        raise FormatError("expected 'accept <indices>' on line 4")
    try:
        accepting = frozenset(int(p) for p in accept_parts[1:])
    except ValueError:
        raise FormatError("bad accepting state index") from None

    delta0 = [None] * k
    delta1 = [None] * k
    body = lines[4:]
    if len(body) != k:
        raise FormatError(f"expected {k} transition lines, got {len(body)}")
    for ln in body:
        parts = ln.split()
        if len(parts) != 4 or parts[0] != "t":
            raise FormatError(f"expected 't <i> <dest0> <dest1>', got {ln!r}")
        try:
            i, t0, t1 = (int(p) for p in parts[1:])
        except ValueError:
            raise FormatError(f"bad number in {ln!r}") from None
        if not 0 <= i < k:
            raise FormatError(f"state index {i} out of range")
        if delta0[i] is not None:
            raise FormatError(f"duplicate transition line for state {i}")
        delta0[i] = t0
        delta1[i] = t1
    try:
        return Dfa(k, start, tuple(delta0), tuple(delta1), accepting)
    except ValueError as e:
        raise FormatError(str(e)) from None


def format_dfa(d: Dfa) -> str:
    lines = [
        "dfa 1",
        f"states {d.num_states}",
        f"start {d.start}",
        "accept" + "".join(f" {q}" for q in sorted(d.accepting)),
    ]
    for i in range(d.num_states):
        lines.append(f"t {i} {d.delta0[i]} {d.delta1[i]}")
    return "\n".join(lines)


def tightness_pair(k: int):
    """Two k-state chain machines whose shortest distinguishing string is
    0^(k-1) 1^(k-1).

    Both climb the chain on 0 and slide back down on 1; state 0 is the only
    rejecting state. They differ solely in the 1-edge at the top: machine A
    stays put, machine B steps down, so telling them apart requires the full
    climb followed by the full descent.
    """
    if k < 2:
        raise ValueError("the chain pair is defined for k >= 2")
    d0 = tuple(min(i + 1, k - 1) for i in range(k))
    base = [max(i - 1, 0) for i in range(k)]
    a1 = list(base)
    a1[k - 1] = k - 1
    b1 = list(base)
    b1[k - 1] = k - 2
    accepting = frozenset(range(1, k))
    return (
        Dfa(k, 0, d0, tuple(a1), accepting),
        Dfa(k, 0, d0, tuple(b1), accepting),
    )

"""Batch-level sampling distributions and expected teaching dimension.

A distribution assigns mass V_k to batch k (all concepts with k states),
spreading it uniformly inside the batch, so each concept there carries
v_k = V_k / N_k. Expected dimension is computed three ways: a closed-form
bound sum(V_k * D_k) against a per-batch dimension profile D, exact
enumeration below a batch cutoff plus a bound on the tail, and seeded
Monte Carlo.
"""

from __future__ import annotations

import math
import random
import statistics
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import ENUMERATION_CAP, enumerate_batch, random_concept
from .errors import EnumerationCapError, FormatError, SamplingError
from .teaching import DEFAULT_SIZE_CAP, btd

__all__ = [
    "BatchDistribution",
    "BtdBoundProfile",
    "MonotoneResult",
    "BoundSeries",
    "ExactBtd",
    "McEstimate",
    "MC_DEFAULT_K_CAP",
    "validate_monotone",
    "expected_btd_bound",
    "expected_btd_exact",
    "expected_btd_mc",
    "parse_dist",
    "format_dist",
]

DEFAULT_BOUND_TERMS = 12

# Monte Carlo stops enumerating at batch 3 by default: one batch-4 witness
# search runs ~20 s against its 57068 competitors, so draws beyond the cap
# contribute the D_k bound instead (counted in McEstimate.capped).
MC_DEFAULT_K_CAP = 3


@dataclass(frozen=True)
class BatchDistribution:
    """Per-batch masses V_k: an explicit table plus an optional geometric tail.

    The tail starts at tail_start with ratio tail_ratio; its leading mass is
    whatever the table leaves over, scaled so the total is exactly 1. The
    geometric family V_k = ((3r+1)/r) (4 + 1/r)^(-k) is stored in the same
    shape (empty table, tail from k=1).
    """

    kind: str  # "geometric" or "custom"
    r: Fraction | None
    table: tuple  # ((k, Fraction mass), ...)
    tail_ratio: Fraction | None
    tail_start: int | None

    @classmethod
    def geometric(cls, r) -> "BatchDistribution":
        r = Fraction(r)
        if r <= 0:
            raise ValueError("geometric parameter r must be positive")
        return cls("geometric", r, (), r / (4 * r + 1), 1)

    @classmethod
    def custom(cls, table, tail_ratio=None, tail_start=None) -> "BatchDistribution":
        entries = tuple(sorted((int(k), Fraction(m)) for k, m in table))
        if any(k < 1 for k, _ in entries):
            raise ValueError("batch indices must be >= 1")
        if len({k for k, _ in entries}) != len(entries):
            raise ValueError("duplicate batch index in table")
        if any(m < 0 for _, m in entries):
            raise ValueError("batch masses must be non-negative")
        listed = sum((m for _, m in entries), Fraction(0))
        if tail_ratio is None:
            if abs(listed - 1) > Fraction(1, 10**9):
                raise ValueError(f"table masses sum to {listed}, not 1")
            return cls("custom", None, entries, None, None)
        ratio = Fraction(tail_ratio)
        if not 0 < ratio < 1:
            raise ValueError("tail ratio must lie in (0, 1)")
        start = int(tail_start)
        if start < 1:
            raise ValueError("tail start must be >= 1")
        if any(k >= start for k, _ in entries):
            raise ValueError("table entries must lie below the tail start")
        if listed > 1:
            raise ValueError(f"table masses sum to {listed} > 1")
        return cls("custom", None, entries, ratio, start)

    @property
    def tail_first_mass(self) -> Fraction:
        """Mass at k = tail_start; (1 - table total)(1 - ratio), so that the
        whole tail sums to exactly the leftover mass."""
        if self.tail_ratio is None:
            return Fraction(0)
        if self.kind == "geometric":
            return (3 * self.r + 1) / (4 * self.r + 1)
        listed = sum((m for _, m in self.table), Fraction(0))
        return (1 - listed) * (1 - self.tail_ratio)

    def V(self, k: int) -> Fraction:
        if k < 1:
            raise ValueError("batch index must be >= 1")
        for kk, m in self.table:
            if kk == k:
                return m
        if self.tail_ratio is not None and k >= self.tail_start:
            return self.tail_first_mass * self.tail_ratio ** (k - self.tail_start)
        return Fraction(0)

    @property
    def total_mass(self) -> Fraction:
        listed = sum((m for _, m in self.table), Fraction(0))
        if self.tail_ratio is None:
            return listed
        return listed + self.tail_first_mass / (1 - self.tail_ratio)


@dataclass(frozen=True)
class BtdBoundProfile:
    """Per-batch bound D_k on the average teaching dimension.

    Exponential profiles are coeff * base^k (the binary-machine default is
    (1/2) 4^k = 2^(2k-1)); power profiles are k^degree.
    """

    kind: str  # "exponential" or "power"
    coeff: Fraction = Fraction(1)
    base: int = 1
    degree: int = 0

    @classmethod
    def default_fsm(cls) -> "BtdBoundProfile":
        return cls("exponential", Fraction(1, 2), 4, 0)

    @classmethod
    def power(cls, degree: int) -> "BtdBoundProfile":
        return cls("power", Fraction(1), 1, int(degree))

    def D(self, k: int) -> Fraction:
        if self.kind == "exponential":
            return self.coeff * Fraction(self.base) ** k
        return Fraction(k) ** self.degree


@dataclass(frozen=True)
class MonotoneResult:
    ok: bool
    first_violation: tuple | None  # (k, k+1, v_k, v_{k+1})
    rows: tuple  # (k, V_k, N_k or None, v_k or None)


def validate_monotone(V: BatchDistribution, cap: int = ENUMERATION_CAP) -> MonotoneResult:
    """Check that per-concept mass v_k = V_k / N_k never increases with k.

    Batch sizes are enumerated up to the cap; beyond it, batch sizes only
    grow, so V_{k+1} <= V_k settles the comparison. A mass increase beyond
    the cap would need unavailable counts and raises the cap error.
    """
    last = max([cap] + [k for k, _ in V.table] + ([V.tail_start] if V.tail_start else []))
    rows = []
    for k in range(1, last + 1):
        if k <= cap:
            n = enumerate_batch(k, cap).count
            rows.append((k, V.V(k), n, V.V(k) / n))
        else:
            rows.append((k, V.V(k), None, None))
    violation = None
    for k in range(1, last):
        if k + 1 <= cap:
            vk = rows[k - 1][3]
            vn = rows[k][3]
            if vn > vk:
                violation = (k, k + 1, vk, vn)
                break
        elif V.V(k + 1) > V.V(k):
            raise EnumerationCapError(
                f"mass increases from batch {k} to {k + 1}, past the enumeration "
                f"cap {cap}; deciding per-concept monotonicity needs those counts"
            )
    # past `last` only the geometric tail remains: masses shrink, counts grow
    return MonotoneResult(violation is None, violation, tuple(rows))


def _stirling2(n: int, j: int) -> int:
    table = [[0] * (j + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for a in range(1, n + 1):
        for b in range(1, min(a, j) + 1):
            table[a][b] = b * table[a - 1][b] + table[a - 1][b - 1]
    return table[n][j]


def _power_series_full(degree: int, x: Fraction) -> Fraction:
    """Sum over k >= 1 of k^degree x^k for |x| < 1, exactly."""
    if degree == 0:
        return x / (1 - x)
    total = Fraction(0)
    for j in range(1, degree + 1):
        total += _stirling2(degree, j) * math.factorial(j) * x**j / (1 - x) ** (j + 1)
    return total


def _tail_sum(V: BatchDistribution, D: BtdBoundProfile, from_k: int):
    """Exact sum of V_k * D_k for k >= from_k, or None when it diverges."""
    total = Fraction(0)
    for k, m in V.table:
        if k >= from_k:
            total += m * D.D(k)
    if V.tail_ratio is None:
        return total
    a = V.tail_first_mass
    if a == 0:
        return total
    rho = V.tail_ratio
    g0 = max(from_k, V.tail_start)
    if D.kind == "exponential":
        if rho * D.base >= 1:
            return None
        lead = a * rho ** (g0 - V.tail_start) * D.coeff * Fraction(D.base) ** g0
        return total + lead / (1 - rho * D.base)
    # power profile: full series minus the finite head, all rational
    scale = a * rho ** (-V.tail_start)
    head = sum(
        (Fraction(k) ** D.degree * rho**k for k in range(1, g0)), Fraction(0)
    )
    return total + scale * (_power_series_full(D.degree, rho) - head)


@dataclass(frozen=True)
class BoundSeries:
    rows: tuple  # (k, V_k, D_k, term, cumulative)
    k_terms: int
    tail: Fraction | None
    total: Fraction | None
    diverges: bool


def expected_btd_bound(
    V: BatchDistribution,
    D: BtdBoundProfile | None = None,
    k_terms: int = DEFAULT_BOUND_TERMS,
) -> BoundSeries:
    """Bound sum(V_k * D_k) over all k: term table up to k_terms plus an
    exact closed-form remainder. diverges=True when the summand ratio in the
    geometric tail reaches 1."""
    if D is None:
        D = BtdBoundProfile.default_fsm()
    if k_terms < 1:
        raise ValueError("k_terms must be >= 1")
    rows = []
    cum = Fraction(0)
    for k in range(1, k_terms + 1):
        term = V.V(k) * D.D(k)
        cum += term
        rows.append((k, V.V(k), D.D(k), term, cum))
    tail = _tail_sum(V, D, k_terms + 1)
    if tail is None:
        return BoundSeries(tuple(rows), k_terms, None, None, True)
    return BoundSeries(tuple(rows), k_terms, tail, cum + tail, False)


@dataclass(frozen=True)
class ExactBtd:
    rows: tuple  # (k, V_k, N_k, mean dimension Fraction, contribution)
    enumerated: Fraction
    tail_bound: Fraction
    total: Fraction
    exact: bool  # every witness search below the cutoff proved its minimum
    inexact_count: int


def expected_btd_exact(
    V: BatchDistribution,
    k_max: int,
    pool_max_len: int | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
    D: BtdBoundProfile | None = None,
    cap: int = ENUMERATION_CAP,
) -> ExactBtd:
    """Enumerated expectation over batches 1..k_max plus the D-profile bound
    on everything beyond. Greedy upper-bound dimensions count as-is and
    clear the exact flag."""
    if D is None:
        D = BtdBoundProfile.default_fsm()
    if k_max > cap:
        raise EnumerationCapError(f"k_max {k_max} exceeds the enumeration cap {cap}")
    rows = []
    enumerated = Fraction(0)
    inexact = 0
    for k in range(1, k_max + 1):
        batch = enumerate_batch(k, cap)
        dims = []
        for c in batch.concepts:
            r = btd(c, pool_max_len, size_cap, cap)
            dims.append(r.dimension)
            if not r.exact:
                inexact += 1
        mean = Fraction(sum(dims), batch.count)
        contribution = V.V(k) * mean
        enumerated += contribution
        rows.append((k, V.V(k), batch.count, mean, contribution))
    tail = _tail_sum(V, D, k_max + 1)
    if tail is None:
        raise ValueError("the tail bound diverges for this distribution and profile")
    return ExactBtd(
        tuple(rows), enumerated, tail, enumerated + tail, inexact == 0, inexact
    )


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    n: int
    capped: int  # draws beyond the enumeration cap, contributing D_k instead
    inexact: int  # draws whose witness search returned a greedy upper bound
    seed: int
    dimensions: tuple


def expected_btd_mc(
    V: BatchDistribution,
    n: int,
    seed: int = 0,
    pool_max_len: int | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
    k_cap: int = MC_DEFAULT_K_CAP,
    D: BtdBoundProfile | None = None,
) -> McEstimate:
    """Monte Carlo expectation: draw k by inverse CDF, a concept uniformly
    inside the batch, average witness sizes. Deterministic in the seed.
    Batches beyond k_cap contribute their D_k bound (counted in capped)."""
    if n < 1:
        raise ValueError("need at least one sample")
    if D is None:
        D = BtdBoundProfile.default_fsm()
    rng = random.Random(seed)
    values = []
    capped = 0
    inexact = 0
    for _ in range(n):
        u = rng.random()
        cum = Fraction(0)
        k = 0
        for step in range(1, 100001):
            cum += V.V(step)
            if u < cum:
                k = step
                break
        if not k:
            raise SamplingError(f"inverse-CDF walk did not reach mass {u}")
        if k <= k_cap:
            c = random_concept(k, rng.randrange(2**32), k_cap)
            r = btd(c, pool_max_len, size_cap, k_cap)
            if not r.exact:
                inexact += 1
            values.append(float(r.dimension))
        else:
            capped += 1
            values.append(float(D.D(k)))
    mean = statistics.fmean(values)
    stderr = statistics.stdev(values) / math.sqrt(n) if n > 1 else 0.0
    return McEstimate(mean, stderr, n, capped, inexact, seed, tuple(values))


def parse_dist(text: str) -> BatchDistribution:
    """Distribution file: 'dist geometric r=<rational>' alone, or 'dist custom'
    followed by 'batch <k> <mass>' lines and an optional
    'tail geometric <ratio> from <k_s>' line. Rationals stay exact."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise FormatError("empty distribution file")
    head = lines[0].split()
    if head[0] != "dist":
        raise FormatError("expected leading 'dist' line")
    if len(head) == 3 and head[1] == "geometric":
        if not head[2].startswith("r="):
            raise FormatError("geometric line must carry r=<value>")
        try:
            return BatchDistribution.geometric(_rational(head[2][2:]))
        except ValueError as e:
            raise FormatError(str(e)) from None
    if len(head) == 2 and head[1] == "custom":
        table = []
        ratio = None
        start = None
        for ln in lines[1:]:
            parts = ln.split()
            if parts[0] == "batch" and len(parts) == 3:
                table.append((int(parts[1]), _rational(parts[2])))
            elif parts[:2] == ["tail", "geometric"] and len(parts) == 5 and parts[3] == "from":
                if ratio is not None:
                    raise FormatError("duplicate tail line")
                ratio = _rational(parts[2])
                start = int(parts[4])
            else:
                raise FormatError(f"unrecognized distribution line {ln!r}")
        try:
            return BatchDistribution.custom(table, ratio, start)
        except ValueError as e:
            raise FormatError(str(e)) from None
    raise FormatError(f"unrecognized distribution header {lines[0]!r}")


def format_dist(V: BatchDistribution) -> str:
    if V.kind == "geometric":
        return f"dist geometric r={V.r}"
    lines = ["dist custom"]
    for k, m in V.table:
        lines.append(f"batch {k} {m}")
    if V.tail_ratio is not None:
        lines.append(f"tail geometric {V.tail_ratio} from {V.tail_start}")
    return "\n".join(lines)


def _rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad rational {token!r}") from None

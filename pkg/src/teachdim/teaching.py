"""Learner, witness-set search, posteriors, and the finite tabular-class mode.

The learner prefers simpler machines: scanning batches by state count, the
first batch holding a consistent concept wins, and a tie there is surfaced
as ambiguity rather than broken arbitrarily. A witness for c is an example
set that makes c the unique winner; the biased teaching dimension is the
least witness size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .automata import Dfa, is_canonical, run, shortlex_key, strings_up_to
from .enumeration import ENUMERATION_CAP, enumerate_batch
from .errors import FormatError, NoWitnessError

__all__ = [
    "DEFAULT_SIZE_CAP",
    "IDENTIFIED",
    "AMBIGUOUS",
    "NONE_CONSISTENT",
    "LabeledExample",
    "ExampleSet",
    "LearnOutcome",
    "TeachingResult",
    "TabularClass",
    "PosteriorStep",
    "PosteriorTrace",
    "consistent",
    "learn",
    "btd",
    "posterior",
    "btd_tabular",
    "td_tabular",
    "parse_examples",
    "examples_to_binary",
    "format_examples",
    "parse_tabular",
]

DEFAULT_SIZE_CAP = 6

IDENTIFIED = "IDENTIFIED"
AMBIGUOUS = "AMBIGUOUS"
NONE_CONSISTENT = "NONE_CONSISTENT"


@dataclass(frozen=True)
class LabeledExample:
    instance: str
    label: bool


@dataclass(frozen=True)
class ExampleSet:
    """A set of labeled examples; an instance may not carry both labels."""

    examples: frozenset

    def __post_init__(self):
        object.__setattr__(self, "examples", frozenset(self.examples))
        seen = {}
        for ex in self.examples:
            if seen.setdefault(ex.instance, ex.label) != ex.label:
                raise ValueError(f"instance {ex.instance!r} carries both labels")

    @classmethod
    def of(cls, pairs) -> "ExampleSet":
        return cls(frozenset(LabeledExample(i, bool(l)) for i, l in pairs))

    def sorted(self):
        return sorted(self.examples, key=lambda e: shortlex_key(e.instance))

    def __len__(self):
        return len(self.examples)

    def __iter__(self):
        return iter(self.examples)


def consistent(d: Dfa, S) -> bool:
    """True iff d labels every example of S correctly; every machine fits the empty set."""
    return all(run(d, ex.instance) == ex.label for ex in S)


@dataclass(frozen=True)
class LearnOutcome:
    tag: str
    concept: Dfa | None = None
    candidates: tuple = ()


def learn(S, k_max: int, cap: int = ENUMERATION_CAP) -> LearnOutcome:
    """Pick the most-preferred consistent concept among batches 1..k_max.

    Lower state count always beats higher, so the scan stops at the first
    batch with a consistent member: one hit is IDENTIFIED, several equally
    simple hits are AMBIGUOUS with all of them listed.
    """
    for k in range(1, k_max + 1):
        hits = [c for c in enumerate_batch(k, cap).concepts if consistent(c, S)]
        if len(hits) == 1:
            return LearnOutcome(IDENTIFIED, concept=hits[0], candidates=tuple(hits))
        if hits:
            return LearnOutcome(AMBIGUOUS, candidates=tuple(hits))
    return LearnOutcome(NONE_CONSISTENT)


@dataclass(frozen=True)
class TeachingResult:
    witness: ExampleSet
    dimension: int
    exact: bool
    pool_max_len: int


def btd(
    c: Dfa,
    pool_max_len: int | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
    cap: int = ENUMERATION_CAP,
) -> TeachingResult:
    """Least example set, drawn from strings of length <= pool_max_len and
    labeled by c, that eliminates every same-or-simpler competitor.

    Machines with more states than c can never tie with it, so only batches
    1..k matter. The default pool length 2k-2 always suffices: any two
    distinct languages on <= k states differ on such a string. Searches up
    to size_cap - 1 exactly (exact=True, ties broken by shortlex order of
    the sorted instance list); beyond that a greedy cover is returned with
    exact=False.
    """
    if not is_canonical(c):
        raise ValueError("btd target must be a canonical minimal machine")
    if pool_max_len is None:
        pool_max_len = max(2 * c.num_states - 2, 0)
    return _btd_search(c, pool_max_len, size_cap, cap)


@lru_cache(maxsize=None)
def _btd_search(c: Dfa, pool_max_len: int, size_cap: int, cap: int) -> TeachingResult:
    k = c.num_states
    pool = strings_up_to(pool_max_len)
    labels = [run(c, s) for s in pool]
    competitors = [
        d
        for j in range(1, k + 1)
        for d in enumerate_batch(j, cap).concepts
        if d != c
    ]
    n = len(competitors)
    full = (1 << n) - 1

    # kills[x]: bitmask of competitors that example x (with c's label) rules out
    kills = []
    for s, lab in zip(pool, labels):
        m = 0
        for i, d in enumerate(competitors):
            if run(d, s) != lab:
                m |= 1 << i
        kills.append(m)

    covered = 0
    for m in kills:
        covered |= m
    if covered != full:
        miss = next(i for i in range(n) if not (covered >> i) & 1)
        raise NoWitnessError(
            f"a {competitors[miss].num_states}-state competitor agrees with the "
            f"target on every string of length <= {pool_max_len}"
        )

    killers = [
        tuple(x for x in range(len(pool)) if (kills[x] >> j) & 1) for j in range(n)
    ]
    # hardest competitors first makes the cover search fail early
    comp_order = sorted(range(n), key=lambda j: len(killers[j]))
    suffix_or = [0] * (len(pool) + 1)
    for x in range(len(pool) - 1, -1, -1):
        suffix_or[x] = suffix_or[x + 1] | kills[x]

    def feasible(rem: int, slots: int, lo: int) -> bool:
        """Can rem be covered with <= slots examples at pool indices >= lo?"""
        if rem == 0:
            return True
        if slots == 0 or rem & ~suffix_or[lo]:
            return False
        for j in comp_order:
            if (rem >> j) & 1:
                for x in killers[j]:
                    if x >= lo and feasible(rem & ~kills[x], slots - 1, lo):
                        return True
                return False
        return True

    for m in range(size_cap):
        if not feasible(full, m, 0):
            continue
        # fix indices left to right, smallest completable choice each time
        chosen = []
        rem = full
        lo = 0
        for slot in range(m, 0, -1):
            for x in range(lo, len(pool)):
                gain = kills[x] & rem
                if gain and feasible(rem & ~gain, slot - 1, x + 1):
                    chosen.append(x)
                    rem &= ~gain
                    lo = x + 1
                    break
        witness = ExampleSet.of((pool[x], labels[x]) for x in chosen)
        return TeachingResult(witness, m, True, pool_max_len)

    # past the cap: greedy cover, biggest remaining kill first
    chosen = []
    rem = full
    while rem:
        best = max(range(len(pool)), key=lambda x: ((kills[x] & rem).bit_count(), -x))
        chosen.append(best)
        rem &= ~kills[best]
    witness = ExampleSet.of((pool[x], labels[x]) for x in chosen)
    return TeachingResult(witness, len(chosen), False, pool_max_len)


@dataclass(frozen=True)
class TabularClass:
    """Finite listed concept class over named instances, plus an unlisted
    remainder carrying rest_mass that decays by rest_schedule per example."""

    instances: tuple
    concepts: tuple  # (name, 0/1 row tuple, Fraction mass)
    rest_mass: Fraction
    rest_schedule: tuple

    def __post_init__(self):
        object.__setattr__(self, "instances", tuple(self.instances))
        object.__setattr__(
            self,
            "concepts",
            tuple((n, tuple(row), Fraction(m)) for n, row, m in self.concepts),
        )
        object.__setattr__(self, "rest_mass", Fraction(self.rest_mass))
        object.__setattr__(
            self, "rest_schedule", tuple(Fraction(f) for f in self.rest_schedule)
        )
        if len(set(self.instances)) != len(self.instances):
            raise ValueError("instance names must be unique")
        names = [n for n, _, _ in self.concepts]
        if len(set(names)) != len(names):
            raise ValueError("concept names must be unique")
        for name, row, mass in self.concepts:
            if len(row) != len(self.instances):
                raise ValueError(f"row of {name} does not cover every instance")
            if any(v not in (0, 1) for v in row):
                raise ValueError(f"row of {name} must be 0/1")
            if mass < 0:
                raise ValueError(f"mass of {name} is negative")
        if self.rest_mass < 0:
            raise ValueError("rest mass is negative")
        for f in self.rest_schedule:
            if not 0 <= f <= 1:
                raise ValueError("survival fractions must lie in [0, 1]")
        total = sum((m for _, _, m in self.concepts), self.rest_mass)
        if abs(total - 1) > Fraction(1, 10**9):
            raise ValueError(f"masses sum to {total}, not 1")

    def column(self, instance: str) -> int:
        try:
            return self.instances.index(instance)
        except ValueError:
            raise ValueError(f"unknown instance {instance!r}") from None

    def concept_names(self):
        return tuple(n for n, _, _ in self.concepts)

    def concept(self, name: str):
        for n, row, mass in self.concepts:
            if n == name:
                return row, mass
        raise ValueError(f"unknown concept {name!r}")


@dataclass(frozen=True)
class PosteriorStep:
    example: tuple  # (instance, label)
    m_w: Fraction
    rest_mass: Fraction
    posteriors: dict  # concept name -> Fraction


@dataclass(frozen=True)
class PosteriorTrace:
    steps: tuple
    m_w: Fraction
    rest_mass: Fraction
    posteriors: dict


def posterior(cls: TabularClass, examples) -> PosteriorTrace:
    """Sequential mass update over the listed class.

    Listed concepts inconsistent with an example drop to zero; the unlisted
    remainder keeps the scheduled fraction of its mass at each step; m_w is
    the total surviving mass and posteriors divide by it. All arithmetic is
    exact rational.
    """
    pairs = [
        (ex.instance, ex.label) if isinstance(ex, LabeledExample) else (ex[0], bool(ex[1]))
        for ex in examples
    ]
    if len(pairs) > len(cls.rest_schedule):
        raise ValueError(
            f"rest schedule covers {len(cls.rest_schedule)} examples, got {len(pairs)}"
        )
    alive = {name: mass for name, _, mass in cls.concepts}
    rows = {name: row for name, row, _ in cls.concepts}
    rest = cls.rest_mass
    m_w = sum(alive.values(), rest)
    posteriors = {name: mass / m_w for name, mass in alive.items()}
    steps = []
    for i, (instance, label) in enumerate(pairs):
        col = cls.column(instance)
        for name in list(alive):
            if alive[name] and rows[name][col] != (1 if label else 0):
                alive[name] = Fraction(0)
        rest *= cls.rest_schedule[i]
        m_w = sum(alive.values(), rest)
        if m_w == 0:
            raise ValueError("no consistent mass remains")
        posteriors = {name: mass / m_w for name, mass in alive.items()}
        steps.append(PosteriorStep((instance, label), m_w, rest, dict(posteriors)))
    return PosteriorTrace(tuple(steps), m_w, rest, posteriors)


def _tabular_search(cls: TabularClass, target: str, biased: bool):
    """Smallest instance subset (labels forced by the target's row) after
    which the target survives and wins; returns (size, witness pairs)."""
    trow, tmass = cls.concept(target)
    others = [(n, row, mass) for n, row, mass in cls.concepts if n != target]
    n = len(cls.instances)
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            ok = True
            for _, row, mass in others:
                if any(row[i] != trow[i] for i in combo):
                    continue  # eliminated
                if biased and mass < tmass:
                    continue  # survives but cannot tie or win
                ok = False
                break
            if ok:
                witness = tuple(
                    (cls.instances[i], bool(trow[i])) for i in combo
                )
                return size, witness
    kind = "the unique mass maximum" if biased else "the only consistent concept"
    raise NoWitnessError(f"{target} is never {kind} within the listed class")


def btd_tabular(cls: TabularClass, target: str) -> int:
    """Least example count making the target the unique mass-maximal consistent
    listed concept. The unlisted remainder never competes in the argmax."""
    return _tabular_search(cls, target, biased=True)[0]


def td_tabular(cls: TabularClass, target: str) -> int:
    """Least example count making the target the only consistent listed concept."""
    return _tabular_search(cls, target, biased=False)[0]


def parse_examples(text: str):
    """Example-set lines: '+ <token>' or '- <token>'; blank and '#' lines skipped.

    Tokens are binary strings (empty string written 'eps') in machine mode,
    or instance names in tabular mode; validation happens at the consumer.
    """
    out = []
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 2 or parts[0] not in ("+", "-"):
            raise FormatError(f"expected '+ <token>' or '- <token>', got {raw!r}")
        out.append((parts[1], parts[0] == "+"))
    return out


def examples_to_binary(pairs) -> ExampleSet:
    """Interpret parsed example tokens as binary strings ('eps' = empty)."""
    resolved = []
    for token, label in pairs:
        s = "" if token == "eps" else token
        if any(ch not in "01" for ch in s):
            raise FormatError(f"instance {token!r} is not a binary string")
        resolved.append((s, label))
    try:
        return ExampleSet.of(resolved)
    except ValueError as e:
        raise FormatError(str(e)) from None


def format_examples(examples) -> str:
    if isinstance(examples, ExampleSet):
        examples = [(e.instance, e.label) for e in examples.sorted()]
    lines = []
    for instance, label in examples:
        token = instance if instance else "eps"
        lines.append(f"{'+' if label else '-'} {token}")
    return "\n".join(lines)


def parse_tabular(text: str) -> TabularClass:
    """Tabular-class format: 'instances ...', then 'concept <name> <row> <mass>'
    lines, then 'rest <mass> <f1> <f2> ...'."""
    instances = None
    concepts = []
    rest = None
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if parts[0] == "instances":
            if instances is not None:
                raise FormatError("duplicate instances line")
            instances = tuple(parts[1:])
        elif parts[0] == "concept":
            if len(parts) != 4:
                raise FormatError(f"expected 'concept <name> <row> <mass>', got {raw!r}")
            name, rowtext, masstext = parts[1:]
            if any(ch not in "01" for ch in rowtext):
                raise FormatError(f"row of {name} must be 0/1")
            concepts.append((name, tuple(int(ch) for ch in rowtext), _fraction(masstext)))
        elif parts[0] == "rest":
            if rest is not None:
                raise FormatError("duplicate rest line")
            if len(parts) < 2:
                raise FormatError("rest line needs a mass")
            rest = (_fraction(parts[1]), tuple(_fraction(p) for p in parts[2:]))
        else:
            raise FormatError(f"unrecognized line {raw!r}")
    if instances is None:
        raise FormatError("missing instances line")
    if rest is None:
        rest = (Fraction(0), ())
    try:
        return TabularClass(instances, tuple(concepts), rest[0], rest[1])
    except ValueError as e:
        raise FormatError(str(e)) from None


def _fraction(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad rational {token!r}") from None

"""Prefix coding, a tiny tape machine, and budget-bounded program search.

The machine reads 3-bit opcodes; branch opcodes carry a gamma-coded
absolute instruction target. Program bitstrings are self-delimiting: the
decoder stops at the first point where every branch target seen so far
lands inside the instructions already decoded, so no valid program is a
proper prefix of another. kt scores a program as its bit length plus the
log of the total steps it spends labeling an example set, and the learner
dovetails through programs under an exponentially growing step allowance.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .automata import Dfa, run as dfa_run, strings_up_to
from .errors import ExhaustedSearchError, FormatError
from .teaching import ExampleSet, LabeledExample

__all__ = [
    "elias_encode",
    "elias_decode",
    "prop1_term",
    "prop1_partial_sum",
    "prop1_majorant",
    "HALF",
    "FULL",
    "TinyProgram",
    "decode_program",
    "disassemble",
    "run_tiny",
    "valid_programs",
    "KtOutcome",
    "KtTeachResult",
    "kt_learn",
    "kt_teach",
    "FOUND",
    "EXHAUSTED",
    "ACCEPT",
    "REJECT",
    "TIMEOUT",
]


# ---------------------------------------------------------------- gamma code

def elias_encode(n: int) -> str:
    """Codeword for n >= 1: floor(log2 n) zeros, then n in binary."""
    if n < 1:
        raise ValueError("gamma code is defined for integers >= 1")
    b = format(n, "b")
    return "0" * (len(b) - 1) + b


def elias_decode(bits: str, pos: int = 0) -> tuple:
    """Read one codeword starting at pos; returns (n, bits consumed)."""
    if not set(bits) <= {"0", "1"}:
        raise FormatError("bitstring may contain only 0 and 1")
    z = 0
    while pos + z < len(bits) and bits[pos + z] == "0":
        z += 1
    if pos + z >= len(bits):
        raise FormatError("gamma codeword ran out of bits before its leading 1")
    if pos + 2 * z + 1 > len(bits):
        raise FormatError("gamma codeword truncated after its leading 1")
    return int(bits[pos + z : pos + 2 * z + 1], 2), 2 * z + 1


# ----------------------------------------------------------- series bound

HALF = "HALF"  # batch i weighted as 2^(i-1)
FULL = "FULL"  # batch i weighted by its full codeword count 2^i


def prop1_term(i: int, nk_variant: str = HALF) -> float:
    """One term of the code-length series: 2^-(2i+1) * N_i * 2 sqrt(2^(i+1)-1)."""
    if i < 0:
        raise ValueError("term index must be >= 0")
    if nk_variant == HALF:
        nk = 2.0 ** (i - 1)
    elif nk_variant == FULL:
        nk = 2.0**i
    else:
        raise ValueError(f"unknown variant {nk_variant!r}")
    return 2.0 ** (-(2 * i + 1)) * nk * 2.0 * math.sqrt(2 ** (i + 1) - 1)


def prop1_majorant(i: int) -> float:
    """Per-term ceiling 2^(-(i+1)/2); these sum to 1 + sqrt(2)."""
    return 2.0 ** (-(i + 1) / 2)


def prop1_partial_sum(i_max: int, nk_variant: str = HALF) -> float:
    if i_max < 0:
        raise ValueError("i_max must be >= 0")
    return sum(prop1_term(i, nk_variant) for i in range(i_max + 1))


# ------------------------------------------------------------ tape machine

MOVR, MOVL, WR0, WR1, BR0, BR1, ACCEPT_OP, REJECT_OP = range(8)
_MNEMONIC = ("MOVR", "MOVL", "WR0", "WR1", "BR0", "BR1", "ACCEPT", "REJECT")

ACCEPT = "ACCEPT"
REJECT = "REJECT"
TIMEOUT = "TIMEOUT"

_BLANK = 2


@dataclass(frozen=True)
class TinyProgram:
    """A decoded program: the literal bitstring plus (opcode, target) pairs.
    Targets are 1-indexed absolute instruction numbers, None for non-branches."""

    bits: str
    instrs: tuple

    @property
    def length(self) -> int:
        return len(self.bits)

    def __str__(self):
        return self.bits


def decode_program(bits: str) -> TinyProgram:
    """Decode a self-delimiting instruction stream.

    Stops exactly when every branch target so far points into the decoded
    list; a stream that continues past such a point, runs dry mid
    instruction, or branches out of range is rejected.
    """
    if not bits:
        raise FormatError("empty program")
    if not set(bits) <= {"0", "1"}:
        raise FormatError("program may contain only 0 and 1")
    instrs = []
    max_target = 0
    pos = 0
    while pos < len(bits):
        if instrs and max_target <= len(instrs):
            raise FormatError(
                f"stream continues past a complete program at bit {pos}"
            )
        if pos + 3 > len(bits):
            raise FormatError(f"truncated opcode at bit {pos}")
        op = int(bits[pos : pos + 3], 2)
        pos += 3
        target = None
        if op in (BR0, BR1):
            target, used = elias_decode(bits, pos)
            pos += used
            max_target = max(max_target, target)
        instrs.append((op, target))
    if max_target > len(instrs):
        raise FormatError(
            f"branch target {max_target} exceeds program length {len(instrs)}"
        )
    return TinyProgram(bits, tuple(instrs))


def disassemble(p: TinyProgram) -> str:
    lines = []
    for pc, (op, target) in enumerate(p.instrs, start=1):
        if target is None:
            lines.append(f"{pc} {_MNEMONIC[op]}")
        else:
            lines.append(f"{pc} {_MNEMONIC[op]} {target}")
    return "\n".join(lines)


def run_tiny(p: TinyProgram, s: str, step_cap: int) -> tuple:
    """Execute p on input s; returns (ACCEPT | REJECT | TIMEOUT, steps).

    Input occupies cells 0..len(s)-1 of a right-infinite tape, head at 0.
    Branches fire only when the cell holds the tested symbol (a blank never
    matches); running past the last instruction rejects.
    """
    if step_cap < 0:
        raise ValueError("step_cap must be >= 0")
    tape = [int(ch) for ch in s]
    head = 0
    pc = 0
    steps = 0
    n = len(p.instrs)
    while pc < n:
        if steps >= step_cap:
            return TIMEOUT, steps
        op, target = p.instrs[pc]
        steps += 1
        if op == MOVR:
            head += 1
        elif op == MOVL:
            head = max(head - 1, 0)
        elif op in (WR0, WR1):
            while head >= len(tape):
                tape.append(_BLANK)
            tape[head] = op - WR0
        elif op in (BR0, BR1):
            cell = tape[head] if head < len(tape) else _BLANK
            if cell == op - BR0:
                pc = target - 1
                continue
        elif op == ACCEPT_OP:
            return ACCEPT, steps
        else:
            return REJECT, steps
        pc += 1
    return REJECT, steps  # fell off the instruction list


# ------------------------------------------------------- program enumeration

def _gamma_len(t: int) -> int:
    return 2 * (t.bit_length() - 1) + 1


@lru_cache(maxsize=None)
def valid_programs(length: int) -> tuple:
    """All decodable program bitstrings of exactly this length, in
    lexicographic order. Built constructively: an instruction may follow
    only while some branch target still dangles past the decoded prefix,
    which is the same rule the decoder enforces."""
    if length < 3:
        return ()
    out = []
    n_max = length // 3  # targets can never exceed the instruction count

    def rec(pieces, used, count, max_target):
        if used == length:
            if max_target <= count:
                out.append("".join(pieces))
            return
        if pieces and max_target <= count:
            return  # decoder would already have stopped here
        rem = length - used
        if rem < 3:
            return
        for op in (MOVR, MOVL, WR0, WR1, ACCEPT_OP, REJECT_OP):
            pieces.append(format(op, "03b"))
            rec(pieces, used + 3, count + 1, max_target)
            pieces.pop()
        for op in (BR0, BR1):
            for t in range(1, n_max + 1):
                g = _gamma_len(t)
                if 3 + g > rem:
                    break
                pieces.append(format(op, "03b") + elias_encode(t))
                rec(pieces, used + 3 + g, count + 1, max(max_target, t))
                pieces.pop()

    rec([], 0, 0, 0)
    return tuple(sorted(out))


# ------------------------------------------------------------- kt learning

FOUND = "FOUND"
EXHAUSTED = "EXHAUSTED"


@dataclass(frozen=True)
class KtOutcome:
    tag: str
    program: TinyProgram | None
    kt: float | None
    budget_used: int | None
    budget_max: int
    total_steps: int | None  # steps the winning program spent on the set
    steps_executed: int  # grand total across the whole dovetail


def _kt_value(length: int, total_steps: int) -> float:
    return length + math.log2(max(1, total_steps))


def kt_learn(S: ExampleSet, budget_max: int) -> KtOutcome:
    """Dovetail search for the first program consistent with S.

    Budgets B = 1..budget_max; within B, programs of length l < B in
    (length, lex) order, each granted 2^(B-l) steps shared across the whole
    set. A program that halts with a wrong label can never recover and is
    dropped for good; one that runs out of allowance gets retried under the
    next budget. Deterministic.
    """
    if budget_max < 1:
        raise ValueError("budget_max must be >= 1")
    examples = S.sorted()
    blacklist = set()
    executed = 0
    for budget in range(1, budget_max + 1):
        for length in range(3, budget):
            for bits in valid_programs(length):
                if bits in blacklist:
                    continue
                program = decode_program(bits)
                allowance = 2 ** (budget - length)
                remaining = allowance
                total = 0
                ok = True
                for ex in examples:
                    status, steps = run_tiny(program, ex.instance, remaining)
                    executed += steps
                    remaining -= steps
                    total += steps
                    if status == TIMEOUT:
                        ok = False  # might still make it under a larger budget
                        break
                    if (status == ACCEPT) != ex.label:
                        blacklist.add(bits)
                        ok = False
                        break
                if ok:
                    return KtOutcome(
                        FOUND,
                        program,
                        _kt_value(length, total),
                        budget,
                        budget_max,
                        total,
                        executed,
                    )
    return KtOutcome(EXHAUSTED, None, None, None, budget_max, None, executed)


@dataclass(frozen=True)
class KtTeachResult:
    witness: ExampleSet
    dimension: int
    program: TinyProgram
    kt: float
    budget_used: int
    pool_max_len: int
    uncertified: bool = True  # agreement is only checked on the bounded pool


def kt_teach(
    oracle: Dfa, pool_max_len: int, budget_max: int, size_cap: int
) -> KtTeachResult:
    """Smallest example set whose learned program matches the oracle on every
    string up to pool_max_len. Iterative deepening over set size; candidate
    sets are drawn from the same bounded pool, labeled by the oracle. The
    result is always uncertified: agreement beyond the pool is never checked.
    """
    pool = strings_up_to(pool_max_len)
    labels = {x: dfa_run(oracle, x) for x in pool}
    check_cap = 2**budget_max
    for m in range(size_cap + 1):
        for combo in itertools.combinations(pool, m):
            S = ExampleSet.of((x, labels[x]) for x in combo)
            outcome = kt_learn(S, budget_max)
            if outcome.tag != FOUND:
                continue
            agrees = True
            for x in pool:
                status, _ = run_tiny(outcome.program, x, check_cap)
                if status == TIMEOUT or (status == ACCEPT) != labels[x]:
                    agrees = False
                    break
            if agrees:
                return KtTeachResult(
                    S,
                    m,
                    outcome.program,
                    outcome.kt,
                    outcome.budget_used,
                    pool_max_len,
                )
    raise ExhaustedSearchError(
        f"no example set of size <= {size_cap} from the length-{pool_max_len} "
        f"pool teaches this machine within budget {budget_max}"
    )

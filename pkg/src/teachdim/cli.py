"""Command-line surface.

Two output styles: payload subcommands (minimize, equiv, distinguish,
enumerate, count, elias) print the bare result so they compose in pipelines;
report subcommands prepend '# ' config lines (tool version, subcommand, every
resolved flag) so any report can be reproduced from its own header. Identical
config yields byte-identical output: no timestamps, fractions printed exactly.

Exit codes: 0 success, 2 bad input, 3 resource limit, 4 search outcomes
NO_WITNESS / EXHAUSTED (still with a report).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .automata import (
    distinguishing_string,
    equivalent,
    format_dfa,
    minimize,
    parse_dfa,
)
from .enumeration import ENUMERATION_CAP, enumerate_batch, export_batch
from .errors import (
    ExhaustedSearchError,
    FormatError,
    NoWitnessError,
    NotCanonicalError,
    ResourceLimitError,
)
from .sampling import (
    DEFAULT_BOUND_TERMS,
    MC_DEFAULT_K_CAP,
    BatchDistribution,
    BtdBoundProfile,
    expected_btd_bound,
    expected_btd_exact,
    expected_btd_mc,
    parse_dist,
    validate_monotone,
)
from .teaching import (
    DEFAULT_SIZE_CAP,
    IDENTIFIED,
    btd,
    btd_tabular,
    examples_to_binary,
    format_examples,
    learn,
    parse_examples,
    parse_tabular,
    posterior,
    td_tabular,
)
from .universal import (
    FOUND,
    FULL,
    HALF,
    disassemble,
    elias_decode,
    elias_encode,
    kt_learn,
    kt_teach,
    prop1_majorant,
    prop1_partial_sum,
    prop1_term,
    run_tiny,
)

_ONE_SIXTH = BatchDistribution.custom([], Fraction(5, 6), 1)


# ------------------------------------------------------------- plumbing

def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _config_lines(args) -> list:
    lines = [f"# teachdim {__version__}", f"# command {args.command}"]
    for key in sorted(vars(args)):
        if key in ("func", "command", "out"):
            continue
        val = getattr(args, key)
        if isinstance(val, bool):
            val = "true" if val else "false"
        elif val is None:
            val = "-"
        lines.append(f"# {key.replace('_', '-')} {val}")
    return lines


def _render(headers, rows, csv: bool) -> list:
    cells = [[str(c) for c in row] for row in rows]
    if csv:
        return [",".join(headers)] + [",".join(row) for row in cells]
    widths = [
        max(len(headers[i]), max((len(r[i]) for r in cells), default=0))
        for i in range(len(headers))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return lines


def _fr(x: Fraction, places: int = 4) -> str:
    return f"{x} ({float(x):.{places}f})"


def _sign_tok(example) -> str:
    return ("+" if example.label else "-") + (example.instance or "eps")


# --------------------------------------------------------- payload commands

def cmd_minimize(args) -> int:
    _emit(args, format_dfa(minimize(parse_dfa(_read(args.dfa)))))
    return 0


def cmd_equiv(args) -> int:
    a = parse_dfa(_read(args.a))
    b = parse_dfa(_read(args.b))
    _emit(args, "EQUIVALENT" if equivalent(a, b) else "NOT-EQUIVALENT")
    return 0


def cmd_distinguish(args) -> int:
    a = parse_dfa(_read(args.a))
    b = parse_dfa(_read(args.b))
    z = distinguishing_string(a, b)
    _emit(args, "NONE" if z is None else (z or "eps"))
    return 0


def cmd_enumerate(args) -> int:
    _emit(args, export_batch(enumerate_batch(args.k, args.k_cap)))
    return 0


def cmd_count(args) -> int:
    lines = [
        f"{k} {enumerate_batch(k, args.k_cap).count}"
        for k in range(1, args.k_max + 1)
    ]
    _emit(args, "\n".join(lines))
    return 0


def cmd_elias(args) -> int:
    if args.mode == "encode":
        try:
            n = int(args.value)
        except ValueError:
            raise FormatError(f"encode expects an integer, got {args.value!r}")
        _emit(args, elias_encode(n))
    else:
        n, used = elias_decode(args.value)
        _emit(args, f"{n} {used}")
    return 0


# ---------------------------------------------------------- report commands

def cmd_btd(args) -> int:
    c = minimize(parse_dfa(_read(args.dfa)))
    lines = _config_lines(args)
    lines.append(f"states {c.num_states}")
    try:
        res = btd(c, args.pool_max_len, args.size_cap, args.k_cap)
    except NoWitnessError as e:
        lines += ["outcome NO_WITNESS", f"reason {e}"]
        _emit(args, "\n".join(lines))
        return 4
    lines += [
        f"dimension {res.dimension}",
        f"exact {'true' if res.exact else 'false'}",
        f"pool-max-len {res.pool_max_len}",
        "witness:",
        format_examples(res.witness) or "(empty)",
    ]
    _emit(args, "\n".join(lines))
    return 0


def cmd_teach(args) -> int:
    # btd whose payload is itself a loadable example-set file ('#' = comment)
    c = minimize(parse_dfa(_read(args.dfa)))
    lines = _config_lines(args)
    try:
        res = btd(c, args.pool_max_len, args.size_cap, args.k_cap)
    except NoWitnessError as e:
        lines += ["outcome NO_WITNESS", f"reason {e}"]
        _emit(args, "\n".join(lines))
        return 4
    lines += [
        f"# dimension {res.dimension}",
        f"# exact {'true' if res.exact else 'false'}",
        format_examples(res.witness),
    ]
    _emit(args, "\n".join(line for line in lines if line))
    return 0


def cmd_btd_batch(args) -> int:
    batch = enumerate_batch(args.k, args.k_cap)
    rows = []
    dims = []
    inexact = 0
    for i, c in enumerate(batch.concepts):
        res = btd(c, args.pool_max_len, args.size_cap, args.k_cap)
        dims.append(res.dimension)
        inexact += 0 if res.exact else 1
        witness = " ".join(_sign_tok(e) for e in res.witness.sorted()) or "(empty)"
        rows.append((i, res.dimension, "true" if res.exact else "false", witness))
    mean = Fraction(sum(dims), batch.count)
    lines = _config_lines(args)
    lines += _render(("index", "dimension", "exact", "witness"), rows, args.csv)
    lines += [
        f"concepts {batch.count}",
        f"mean-dimension {_fr(mean)}",
        f"max-dimension {max(dims)}",
        f"inexact {inexact}",
    ]
    if args.plot:
        from . import plots

        plots.save_histogram(
            args.plot, dims, f"witness sizes, batch k={args.k}"
        )
        lines.append(f"plot {args.plot}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_learn(args) -> int:
    S = examples_to_binary(parse_examples(_read(args.examples)))
    outcome = learn(S, args.k_max, args.k_cap)
    lines = _config_lines(args)
    lines.append(f"outcome {outcome.tag}")
    if outcome.tag == IDENTIFIED:
        lines.append(format_dfa(outcome.concept))
    elif outcome.candidates:
        lines.append(f"candidates {len(outcome.candidates)}")
        lines.append("\n---\n".join(format_dfa(c) for c in outcome.candidates))
    _emit(args, "\n".join(lines))
    return 0


def cmd_posterior(args) -> int:
    cls = parse_tabular(_read(args.cls))
    pairs = parse_examples(_read(args.examples))
    trace = posterior(cls, pairs)
    names = cls.concept_names()
    headers = ("step", "example", "m_w") + names + ("rest",)
    priors = {name: mass for name, _, mass in cls.concepts}
    rows = [
        ("0", "-", _fr(Fraction(1), 2))
        + tuple(_fr(priors[n], 2) for n in names)
        + (_fr(cls.rest_mass, 2),)
    ]
    for i, step in enumerate(trace.steps, start=1):
        inst, label = step.example
        rows.append(
            (str(i), ("+" if label else "-") + inst, _fr(step.m_w, 2))
            + tuple(_fr(step.posteriors[n], 2) for n in names)
            + (_fr(step.rest_mass, 2),)
        )
    lines = _config_lines(args)
    lines += _render(headers, rows, args.csv)
    lines.append(f"final-m_w {_fr(trace.m_w, 2)}")
    _emit(args, "\n".join(lines))
    return 0


def _tabular_dims(args, fn) -> int:
    cls = parse_tabular(_read(args.cls))
    targets = [args.target] if args.target else list(cls.concept_names())
    rows = []
    failed = 0
    for name in targets:
        try:
            rows.append((name, fn(cls, name)))
        except NoWitnessError:
            rows.append((name, "NO_WITNESS"))
            failed += 1
    lines = _config_lines(args)
    lines += _render(("concept", "dimension"), rows, args.csv)
    _emit(args, "\n".join(lines))
    return 4 if failed else 0


def cmd_btd_tabular(args) -> int:
    return _tabular_dims(args, btd_tabular)


def cmd_td_tabular(args) -> int:
    return _tabular_dims(args, td_tabular)


def _profile_from(args) -> BtdBoundProfile:
    if args.profile == "power":
        return BtdBoundProfile.power(args.degree)
    return BtdBoundProfile("exponential", args.coeff, args.base, 0)


def _series_table(series, csv: bool) -> list:
    rows = [
        (k, V, D, _fr(term, 6), _fr(cum, 6))
        for k, V, D, term, cum in series.rows
    ]
    return _render(("k", "V_k", "D_k", "term", "cumulative"), rows, csv)


def cmd_expected_btd(args) -> int:
    V = parse_dist(_read(args.dist))
    D = _profile_from(args)
    series = expected_btd_bound(V, D, args.k_terms)
    lines = _config_lines(args)
    lines += _series_table(series, args.csv)
    if series.diverges:
        lines += ["diverges true", "bound-total DIVERGES"]
    else:
        lines.append(f"tail {_fr(series.tail, 6)}")
        lines.append(f"bound-total {_fr(series.total, 6)}")
    if args.exact_k:
        ex = expected_btd_exact(
            V, args.exact_k, args.pool_max_len, args.size_cap, D, args.k_cap
        )
        rows = [
            (k, Vk, n, _fr(mean, 6), _fr(contrib, 6))
            for k, Vk, n, mean, contrib in ex.rows
        ]
        lines += _render(
            ("k", "V_k", "N_k", "mean-dimension", "contribution"), rows, args.csv
        )
        lines += [
            f"exact-part {_fr(ex.enumerated, 6)}",
            f"tail-bound {_fr(ex.tail_bound, 6)}",
            f"enumerated-total {_fr(ex.total, 6)}",
            f"all-witnesses-proven {'true' if ex.exact else 'false'}",
        ]
    if args.plot and not series.diverges:
        from . import plots

        plots.save_series(
            args.plot,
            [r[0] for r in series.rows],
            [float(r[3]) for r in series.rows],
            [float(r[4]) for r in series.rows],
            "expected witness-size bound by batch",
        )
        lines.append(f"plot {args.plot}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_mc_expected_btd(args) -> int:
    V = parse_dist(_read(args.dist))
    est = expected_btd_mc(
        V,
        args.samples,
        args.seed,
        args.pool_max_len,
        args.size_cap,
        args.k_cap,
    )
    lines = _config_lines(args)
    lines += [
        f"samples {est.n}",
        f"mean {est.mean:.6f}",
        f"stderr {est.stderr:.6f}",
        f"capped {est.capped}",
        f"inexact {est.inexact}",
    ]
    if args.plot:
        from . import plots

        plots.save_histogram(
            args.plot, est.dimensions, f"sampled witness sizes, n={est.n}"
        )
        lines.append(f"plot {args.plot}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_series(args) -> int:
    lines = _config_lines(args)
    if args.which == "eq5":
        series = expected_btd_bound(
            BatchDistribution.geometric(args.r), None, args.terms or DEFAULT_BOUND_TERMS
        )
        lines += _series_table(series, args.csv)
        lines.append(f"tail {_fr(series.tail, 6)}")
        lines.append(f"total {_fr(series.total, 6)}")
        lines.append(f"closed-form 2(3r+1) = {_fr(2 * (3 * args.r + 1), 6)}")
    elif args.which == "fig12":
        terms = args.terms or 200
        series = expected_btd_bound(_ONE_SIXTH, BtdBoundProfile.power(2), terms)
        rows = [
            (k, f"{float(V):.10f}", D, f"{float(term):.10f}", f"{float(cum):.10f}")
            for k, V, D, term, cum in series.rows
        ]
        lines += _render(("k", "V_k", "D_k", "term", "partial"), rows, args.csv)
        lines.append(f"partial-sum {float(series.rows[-1][4]):.9f}")
        lines.append(f"tail {float(series.tail):.9e}")
        lines.append(f"total {_fr(series.total, 6)}")
    else:
        terms = args.terms or 60
        variant = HALF if args.variant == "half" else FULL
        rows = []
        partial = 0.0
        for i in range(terms + 1):
            t = prop1_term(i, variant)
            partial += t
            if variant == HALF:
                rows.append((i, f"{t:.10f}", f"{prop1_majorant(i):.10f}", f"{partial:.10f}"))
            else:
                rows.append((i, f"{t:.10f}", f"{partial:.10f}"))
        heads = ("i", "term", "majorant", "partial") if variant == HALF else ("i", "term", "partial")
        lines += _render(heads, rows, args.csv)
        lines.append(f"partial-sum {prop1_partial_sum(terms, variant):.10f}")
        if variant == HALF:
            lines.append("bound 2.4142135624 (1+sqrt(2))")
        series = None
    if args.plot and args.which in ("eq5", "fig12"):
        from . import plots

        plots.save_series(
            args.plot,
            [r[0] for r in series.rows],
            [float(r[3]) for r in series.rows],
            [float(r[4]) for r in series.rows],
            f"series {args.which}",
        )
        lines.append(f"plot {args.plot}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_kt_learn(args) -> int:
    S = examples_to_binary(parse_examples(_read(args.examples)))
    outcome = kt_learn(S, args.budget)
    lines = _config_lines(args)
    lines.append(f"outcome {outcome.tag}")
    if outcome.tag != FOUND:
        lines += [
            f"budget-max {outcome.budget_max}",
            f"steps-executed {outcome.steps_executed}",
        ]
        _emit(args, "\n".join(lines))
        return 4
    lines += [
        f"program {outcome.program.bits}",
        f"length {outcome.program.length}",
        f"kt {outcome.kt:.6f}",
        f"budget-used {outcome.budget_used}",
        f"total-steps {outcome.total_steps}",
        f"steps-executed {outcome.steps_executed}",
        "disassembly:",
        disassemble(outcome.program),
        "trace:",
    ]
    cap = 2**args.budget
    for ex in S.sorted():
        status, steps = run_tiny(outcome.program, ex.instance, cap)
        lines.append(f"{_sign_tok(ex)} {status} {steps}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_kt_teach(args) -> int:
    oracle = minimize(parse_dfa(_read(args.dfa)))
    lines = _config_lines(args)
    try:
        res = kt_teach(oracle, args.pool_max_len, args.budget, args.size_cap)
    except ExhaustedSearchError as e:
        lines += ["outcome EXHAUSTED", f"reason {e}"]
        _emit(args, "\n".join(lines))
        return 4
    lines += [
        f"dimension {res.dimension}",
        f"program {res.program.bits}",
        f"kt {res.kt:.6f}",
        f"budget-used {res.budget_used}",
        "uncertified true",
        "witness:",
        format_examples(res.witness) or "(empty)",
        "disassembly:",
        disassemble(res.program),
    ]
    _emit(args, "\n".join(lines))
    return 0


def cmd_validate_dist(args) -> int:
    V = parse_dist(_read(args.dist))
    result = validate_monotone(V, args.k_cap)
    rows = []
    for k, Vk, n, vk in result.rows:
        rows.append(
            (
                k,
                _fr(Vk, 6),
                n if n is not None else "-",
                _fr(vk, 6) if vk is not None else "-",
            )
        )
    lines = _config_lines(args)
    lines += _render(("k", "V_k", "N_k", "per-concept"), rows, args.csv)
    if result.ok:
        lines.append("monotone true")
    else:
        k, k1, vk, vk1 = result.first_violation
        lines.append("monotone false")
        lines.append(f"violation batches {k}->{k1}: {_fr(vk, 6)} -> {_fr(vk1, 6)}")
    _emit(args, "\n".join(lines))
    return 0


# ------------------------------------------------------------------ parser

def _frac_arg(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {token!r}")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="teachdim",
        description="Witness sets, biased teaching dimensions, and expected "
        "teaching cost for minimal DFAs and toy tape programs.",
        epilog="File formats: DFA files start 'dfa 1' then 'states K', "
        "'start 0', 'accept ...' and one 't i d0 d1' row per state. "
        "Example sets hold one '+ <bits>' or '- <bits>' per line, 'eps' for "
        "the empty string. Tabular classes: 'instances x1 x2 ...', then "
        "'concept <name> <bitrow> <mass>' rows and 'rest <mass> <f1> ...'. "
        "Distributions: 'dist geometric r=1/2', or 'dist custom' with "
        "'batch <k> <mass>' rows and 'tail geometric <ratio> from <k>'.",
    )
    p.add_argument("--version", action="version", version=f"teachdim {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="subcommand")

    def add(name, fn, help_, report=False):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--out", help="write output to this file instead of stdout")
        if report:
            sp.add_argument("--csv", action="store_true", help="emit tables as CSV")
        return sp

    sp = add("minimize", cmd_minimize, "canonical minimal form of a DFA file")
    sp.add_argument("dfa")

    sp = add("equiv", cmd_equiv, "language equivalence of two DFA files")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("distinguish", cmd_distinguish, "shortest string on which two DFAs differ")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("enumerate", cmd_enumerate, "export every canonical machine with k states")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--k-cap", type=int, default=ENUMERATION_CAP)

    sp = add("count", cmd_count, "batch sizes N_k for k = 1..k-max")
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--k-cap", type=int, default=ENUMERATION_CAP)

    sp = add("elias", cmd_elias, "gamma-code a positive integer, or decode bits")
    sp.add_argument("mode", choices=("encode", "decode"))
    sp.add_argument("value")

    sp = add("btd", cmd_btd, "witness set and teaching dimension of a DFA", report=True)
    sp.add_argument("--dfa", required=True)
    sp.add_argument("--pool-max-len", type=int, default=None,
                    help="candidate string length bound (default 2k-2)")
    sp.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    sp.add_argument("--k-cap", type=int, default=ENUMERATION_CAP)

    sp = add("teach", cmd_teach, "like btd but the output is an example-set file",
             report=True)
    sp.add_argument("--dfa", required=True)
    sp.add_argument("--pool-max-len", type=int, default=None)
    sp.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    sp.add_argument("--k-cap", type=int, default=ENUMERATION_CAP)

    sp = add("btd-batch", cmd_btd_batch, "teaching dimension of every concept in a batch",
             report=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--pool-max-len", type=int, default=None)
    sp.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    sp.add_argument("--k-cap", type=int, default=ENUMERATION_CAP)
    sp.add_argument("--plot", help="also render a witness-size histogram to this file")

    sp = add("learn", cmd_learn, "simplest machines consistent with an example set",
             report=True)
    sp.add_argument("--examples", required=True)
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--k-cap", type=int, default=ENUMERATION_CAP)

    sp = add("posterior", cmd_posterior, "stepwise mass update over a tabular class",
             report=True)
    sp.add_argument("--class", dest="cls", required=True)
    sp.add_argument("--examples", required=True)

    sp = add("btd-tabular", cmd_btd_tabular,
             "mass-biased dimension per listed concept", report=True)
    sp.add_argument("--class", dest="cls", required=True)
    sp.add_argument("--target", help="single concept name (default: all)")

    sp = add("td-tabular", cmd_td_tabular,
             "unbiased dimension per listed concept", report=True)
    sp.add_argument("--class", dest="cls", required=True)
    sp.add_argument("--target")

    sp = add("expected-btd", cmd_expected_btd,
             "series bound on expected witness size, optional exact head",
             report=True)
    sp.add_argument("--dist", required=True)
    sp.add_argument("--exact-k", type=int, default=0,
                    help="also enumerate batches 1..K exactly")
    sp.add_argument("--k-terms", type=int, default=DEFAULT_BOUND_TERMS)
    sp.add_argument("--profile", choices=("exponential", "power"), default="exponential")
    sp.add_argument("--coeff", type=_frac_arg, default=Fraction(1, 2))
    sp.add_argument("--base", type=int, default=4)
    sp.add_argument("--degree", type=int, default=2)
    sp.add_argument("--pool-max-len", type=int, default=None)
    sp.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    sp.add_argument("--k-cap", type=int, default=ENUMERATION_CAP)
    sp.add_argument("--plot")

    sp = add("mc-expected-btd", cmd_mc_expected_btd,
             "Monte Carlo estimate of the expected witness size", report=True)
    sp.add_argument("--dist", required=True)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--pool-max-len", type=int, default=None)
    sp.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    sp.add_argument("--k-cap", type=int, default=MC_DEFAULT_K_CAP,
                    help="enumerate batches up to here; beyond, draws count "
                    "the D_k bound (a batch-4 search costs ~20s per draw)")
    sp.add_argument("--plot")

    sp = add("series", cmd_series, "reference series tables", report=True)
    sp.add_argument("--which", choices=("eq5", "fig12", "prop1"), required=True)
    sp.add_argument("--r", type=_frac_arg, default=Fraction(1),
                    help="geometric parameter for eq5")
    sp.add_argument("--terms", type=int, default=0,
                    help="term count (default 12 / 200 / 60 by series)")
    sp.add_argument("--variant", choices=("half", "full"), default="half")
    sp.add_argument("--plot")

    sp = add("kt-learn", cmd_kt_learn, "dovetail program search over an example set",
             report=True)
    sp.add_argument("--examples", required=True)
    sp.add_argument("--budget", type=int, default=16)

    sp = add("kt-teach", cmd_kt_teach,
             "smallest example set teaching a DFA's language to the program learner",
             report=True)
    sp.add_argument("--dfa", required=True)
    sp.add_argument("--pool-max-len", type=int, default=2)
    sp.add_argument("--budget", type=int, default=12)
    sp.add_argument("--size-cap", type=int, default=2)

    sp = add("validate-dist", cmd_validate_dist,
             "check per-concept mass never increases with k", report=True)
    sp.add_argument("--dist", required=True)
    sp.add_argument("--k-cap", type=int, default=ENUMERATION_CAP)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, NotCanonicalError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return 3
    except (NoWitnessError, ExhaustedSearchError) as e:
        print(f"search outcome: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())

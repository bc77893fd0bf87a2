"""Command-line interface.

Exit codes: 0 decided, 1 usage or parse error, 2 inconclusive,
3 precondition violated or resource limit hit.
"""

import argparse
import os
import sys
from fractions import Fraction

from . import basis as basis_mod
from .cantor import (
    Inconclusive,
    Interval,
    cantor_params,
    interval_sum_bound,
    mfold_interval,
    overlap_threshold,
    verify_interval_sums,
)
from .corpus import corpus, names
from .errors import InputError, PreconditionError, ResourceError
from .gcd import divisibility_automaton, gcd_of_set
from .growth import classify
from .numeral import canonical_language, canonicalize
from .report import Report, format_word
from .sumset import ATMOST, EXACT, SumSpec, representation_counter, sum_automaton
from .textformat import MSD, LSD, load_automaton, render_automaton

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONCLUSIVE = 2
EXIT_PRECONDITION = 3

_MODES = {"exact-sum": EXACT, "atmost": ATMOST}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_set(ref):
    """A set from ``corpus:NAME``, a file path, or a bare corpus name."""
    if ref.startswith("corpus:"):
        return corpus(ref[len("corpus:"):]).machine
    if os.path.exists(ref):
        return load_automaton(ref)
    try:
        return corpus(ref).machine
    except InputError:
        raise InputError(f"no such file or corpus entry: {ref!r}") from None


def load_target(ref, k):
    if ref == "all":
        return canonical_language(k)
    if ref == "even":
        return divisibility_automaton(k, 2)
    if ref.startswith("multiples:"):
        try:
            d = int(ref[len("multiples:"):])
        except ValueError:
            raise InputError(f"bad target {ref!r}") from None
        return divisibility_automaton(k, d)
    return load_set(ref)


def _words(report, prefix, words, k):
    for name, word in zip(prefix, words):
        report.add(name, format_word(word, k))


def cmd_classify(args):
    a = canonicalize(load_set(args.file))
    g = classify(a)
    rep = Report("classify")
    rep.add("k", a.k).add("state_count", g.state_count).add("growth", g.verdict)
    rep.add("sparse", g.polynomial)
    if g.polynomial:
        rep.add("degree", g.degree)
    else:
        w = g.witness
        rep.add("word_order", "lsd")
        _words(rep, ("s", "t", "u", "v"), (w.s, w.t, w.u, w.v), a.k)
    return rep, EXIT_OK


def cmd_gcd(args):
    a = load_set(args.file)
    g = gcd_of_set(a)
    rep = Report("gcd")
    rep.add("k", a.k).add("gcd", g.g).add("smallest", g.smallest)
    rep.add("witnesses", list(g.witnesses))
    return rep, EXIT_OK


def cmd_basis(args):
    a = load_set(args.file)
    mode = _MODES[args.mode]
    r = basis_mod.decide_basis(a, max_order=args.max_order, asymptotic=not args.exact, mode=mode)
    rep = Report("basis")
    rep.add("k", r.k).add("state_count", r.state_count)
    rep.add("kind", "asymptotic" if r.asymptotic else "exact")
    rep.add("mode", args.mode)
    rep.add("sparse", r.sparse).add("gcd", r.gcd).add("one_in_s", r.one_in_s)
    rep.add("asymptotic_basis", r.asymptotic_basis).add("basis", r.exact_basis)
    rep.add("reason", r.reason.value)
    rep.add("order", r.order).add("threshold", r.threshold)
    if mode == EXACT:
        rep.add("zero_convention", "no-empty-sum")
        rep.add("exceptions", list(r.exceptions_with_zero))
    else:
        rep.add("zero_convention", "empty-sum")
        rep.add("exceptions", list(r.exceptions))
    rep.add("orders_tried", list(r.orders_tried))
    rep.add("theoretical_N", r.theoretical_N).add("theoretical_M", r.theoretical_M)
    code = EXIT_OK if r.decided else EXIT_INCONCLUSIVE
    return rep, code


def cmd_exceptions(args):
    a = load_set(args.file)
    spec = SumSpec.power(a, args.order, mode=_MODES[args.mode], distinct=args.distinct)
    sums = sum_automaton(spec)
    target = load_target(args.target, a.k)
    out = basis_mod.exceptions_relative(sums, target)
    rep = Report("exceptions")
    rep.add("k", a.k).add("order", args.order).add("mode", args.mode)
    rep.add("distinct", args.distinct).add("target", args.target)
    if isinstance(out, list):
        rep.add("finite", True).add("count", len(out)).add("exceptions", out)
    else:
        rep.add("finite", False).add("word_order", "lsd")
        _words(rep, ("prefix", "cycle", "suffix"), (out.prefix, out.cycle, out.suffix), a.k)
        rep.add("limit", args.limit)
        rep.add("pumped_values", out.pumped_values(args.limit))
        rep.add("members", out.members(args.limit))
    return rep, EXIT_OK


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return range(int(lo), int(hi) + 1)
        return range(int(lo), int(lo) + 1)
    except ValueError:
        raise InputError(f"--n expects N or A..B, got {text!r}") from None


def cmd_count(args):
    if args.summands:
        machines = [load_set(ref.strip()) for ref in args.summands.split(",")]
        if args.file is not None:
            raise InputError("give either a file or --summands, not both")
        if args.order is not None and args.order != len(machines):
            raise InputError(f"--order {args.order} differs from the {len(machines)} summands")
        spec = SumSpec(machines, distinct=args.distinct)
    else:
        if args.file is None or args.order is None:
            raise InputError("count needs a file and --order, or --summands")
        spec = SumSpec.power(load_set(args.file), args.order, distinct=args.distinct)
    count = representation_counter(spec)
    values = _parse_range(args.n)
    rep = Report("count")
    rep.add("k", spec.k).add("order", spec.order).add("distinct", args.distinct)
    rep.add("n", args.n)
    counts = [count(n) for n in values]
    if len(values) == 1:
        rep.add("count", counts[0])
    else:
        rep.add("counts", counts)
        rep.add("min", min(counts)).add("max", max(counts))
    return rep, EXIT_OK


def cmd_syndetic(args):
    a = load_set(args.file)
    r = basis_mod.check_syndetic(a, args.c, bound=args.bound)
    rep = Report("syndetic")
    rep.add("k", a.k).add("c", r.c).add("syndetic", r.holds)
    rep.add("violations", list(r.violations))
    return rep, EXIT_OK


def cmd_run(args):
    a = load_set(args.file)
    n = basis_mod.find_consecutive_run(a, args.c)
    rep = Report("run")
    rep.add("k", a.k).add("c", args.c).add("start", n).add("end", n + args.c)
    return rep, EXIT_OK


def _digit_word(text):
    text = text.strip()
    if not text:
        return ()
    if "," in text or "." in text:
        parts = text.replace(".", ",").split(",")
    else:
        parts = list(text)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"bad digit word {text!r}") from None


def cmd_cantor(args):
    k = args.k
    p = cantor_params(k, _digit_word(args.u), _digit_word(args.y), _digit_word(args.z))
    rep = Report("cantor")
    rep.add("k", k).add("L", p.L).add("s", p.s)
    rep.add("u", format_word(p.u, k)).add("y", format_word(p.y, k)).add("z", format_word(p.z, k))
    rep.add("Y", p.Y).add("Z", p.Z).add("U", p.U)
    rep.add("alpha", p.alpha).add("beta", p.beta).add("ratio", p.ratio)
    lo, hi = p.interval
    rep.add("hull", [lo, hi])
    m = args.m if args.m is not None else max(1, k**p.s - 1)
    res = mfold_interval(p, m)
    rep.add("m", m)
    if isinstance(res, Interval):
        rep.add("mfold", "interval").add("mfold_interval", [res.lo, res.hi])
    elif isinstance(res, Inconclusive):
        rep.add("mfold", "inconclusive").add("search_depth", res.depth)
    else:
        rep.add("mfold", "not-interval").add("gap", list(res.gap)).add("gap_depth", res.depth)
    rep.add("overlap_threshold", overlap_threshold(p))
    rep.add("overlap_bound", k ** (p.L + p.s) + k**p.s)
    if args.t is not None:
        rep.add("t", args.t).add("interval_sum_bound", interval_sum_bound(p, args.t))
        if args.verify_step is not None:
            g = verify_interval_sums(p, args.t, Fraction(args.verify_step))
            rep.add("grid_points", g.points).add("grid_max_terms", g.max_terms)
            rep.add("grid_verified", g.holds)
    code = EXIT_INCONCLUSIVE if isinstance(res, Inconclusive) else EXIT_OK
    return rep, code


def cmd_corpus(args):
    if args.action == "list":
        rep = Report("corpus")
        for name in names():
            note = "generated family" if name.startswith("hard") else corpus(name).note
            rep.add(name, note)
        return rep, EXIT_OK
    if not args.name:
        raise InputError("corpus show needs a name")
    entry = corpus(args.name)
    return render_automaton(entry.machine, direction=args.direction, comment=entry.note), EXIT_OK


def build_parser():
    parser = _Parser(prog="autobasis", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "kv"), default="text")
    # --format is also accepted after the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "kv"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="growth verdict and witness words")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gcd", parents=[common], help="gcd of the set with witnesses")
    p.add_argument("file")
    p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("basis", parents=[common], help="decide the (asymptotic) basis property")
    p.add_argument("file")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--asymptotic", action="store_true", default=True)
    kind.add_argument("--exact", action="store_true")
    p.add_argument("--max-order", type=int, default=basis_mod.DEFAULT_MAX_ORDER)
    p.add_argument("--mode", choices=tuple(_MODES), default="exact-sum")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("exceptions", parents=[common], help="members of a target that are not j-fold sums")
    p.add_argument("file")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--target", default="all", help="all, even, multiples:D, or a set")
    p.add_argument("--mode", choices=tuple(_MODES), default="exact-sum")
    p.add_argument("--distinct", action="store_true")
    p.add_argument("--limit", type=int, default=10_000)
    p.set_defaults(func=cmd_exceptions)

    p = sub.add_parser("count", parents=[common], help="number of representations as ordered sums")
    p.add_argument("file", nargs="?")
    p.add_argument("--order", type=int)
    p.add_argument("--n", required=True, help="N or a range A..B")
    p.add_argument("--distinct", action="store_true")
    p.add_argument("--summands", help="comma-separated sets, one per summand")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("syndetic", parents=[common], help="is every gap between members at most C?")
    p.add_argument("file")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--bound", type=int, default=10_000)
    p.set_defaults(func=cmd_syndetic)

    p = sub.add_parser("run", parents=[common], help="least N with N..N+C all in the set")
    p.add_argument("file")
    p.add_argument("--c", type=int, required=True)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("cantor", parents=[common], help="exact data for the Cantor set C(u; y, z)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u", default="")
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--verify-step", help="grid step such as 1/8 (needs --t)")
    p.set_defaults(func=cmd_cantor)

    p = sub.add_parser("corpus", parents=[common], help="built-in example sets")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.add_argument("--direction", choices=(MSD, LSD), default=MSD)
    p.set_defaults(func=cmd_corpus)
    return parser


def run(argv=None):
    """Run one command; returns ``(exit code, stdout text)``."""
    args = build_parser().parse_args(argv)
    out, code = args.func(args)
    if isinstance(out, Report):
        out = out.render_kv() if args.format == "kv" else out.render_text()
    return code, out


def main(argv=None):
    try:
        code, out = run(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: build, core, occurrences, verify, parse, scan.

Exit codes: 0 success (for verify: all gating claims hold), 1 a gating claim
fails (with --strict-notes: any claim fails), 2 usage or domain error.
JSON mode emits exactly one document on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import RepcoreError
from .interrupts import CoreReport, DeletionSplit, InterruptSpec, build, core
from .locate import SegmentReport, parses, periodic_segments
from .verify import (
    DEFAULT_MAX_CHECKS,
    DEFAULT_MAX_VIOLATIONS,
    ClaimId,
    ClaimReport,
    Universe,
    Witness,
    run,
    verdict,
)
from .words import cyclic_occurrences, occurrences, parse_word


def core_json(spec: InterruptSpec, report: CoreReport) -> dict:
    """The flat core-report record; field names are part of the interface."""
    return {
        "x": spec.split.x,
        "cut1": spec.split.cut1,
        "cut2": spec.split.cut2,
        "e1": spec.e1,
        "e2": spec.e2,
        "word": report.word,
        "junction": report.junction,
        "lcp": report.p_len,
        "lcs": report.s_len,
        "p_tilde": report.p_tilde,
        "s_tilde": report.s_tilde,
        "core": report.core,
        "core_start": report.core_start,
        "core_end": report.core_end,
    }


def witness_json(w: Witness) -> dict:
    return {
        "x": w.spec.split.x,
        "cut1": w.spec.split.cut1,
        "cut2": w.spec.split.cut2,
        "e1": w.spec.e1,
        "e2": w.spec.e2,
        "factor": w.factor,
        "expected": w.expected,
        "actual": w.actual,
    }


def verify_json(universe: Universe, reports: list[ClaimReport]) -> dict:
    return {
        "universe": {
            "alphabet_size": universe.alphabet_size,
            "min_x": universe.min_x,
            "max_x": universe.max_x,
            "e_sums": list(universe.e_sums),
            "forms": universe.forms,
        },
        "claims": [
            {
                "id": rep.claim.value,
                "status": rep.status,
                "checked": rep.checked,
                "counterexamples": [witness_json(w) for w in rep.counterexamples],
            }
            for rep in reports
        ],
    }


def segments_json(x: str, report: SegmentReport) -> dict:
    return {
        "x": x,
        "segments": [
            {"start": s.start, "end": s.end, "phase": s.phase}
            for s in report.segments
        ],
        "jumps": [
            {"left_end": j.left_end, "right_start": j.right_start,
             "deleted_mod": j.deleted_mod}
            for j in report.jumps
        ],
    }


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True))


def _add_spec_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--x", required=True, help="the period word x")
    sub.add_argument("--cut", type=int, help="prefix form: cut1=K, cut2=|x|")
    sub.add_argument("--cut1", type=int, help="start of the deleted factor")
    sub.add_argument("--cut2", type=int, help="end of the deleted factor")
    sub.add_argument("--e1", type=int, required=True)
    sub.add_argument("--e2", type=int, required=True)


def _spec_from_args(args, parser: argparse.ArgumentParser) -> InterruptSpec:
    x = parse_word(args.x)
    if args.cut is not None:
        if args.cut1 is not None or args.cut2 is not None:
            parser.error("--cut conflicts with --cut1/--cut2")
        cut1, cut2 = args.cut, len(x)
    elif args.cut1 is not None and args.cut2 is not None:
        cut1, cut2 = args.cut1, args.cut2
    else:
        parser.error("give --cut K, or both --cut1 and --cut2")
    return InterruptSpec(DeletionSplit(x, cut1, cut2), args.e1, args.e2)


def _add_text_source(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--text", help="the text word")
    group.add_argument("--text-file", help="read the text from a file")


def _text_from_args(args) -> str:
    if args.text is not None:
        return parse_word(args.text)
    with open(args.text_file, "r", encoding="ascii") as fh:
        return parse_word(fh.read().removesuffix("\n"))


def _parse_claims(value: str, parser: argparse.ArgumentParser):
    if value == "all":
        return None
    ids = {c.value: c for c in ClaimId}
    chosen = []
    for name in value.split(","):
        name = name.strip()
        if name not in ids:
            parser.error(f"unknown claim {name!r} (choose from {sorted(ids)})")
        chosen.append(ids[name])
    return chosen


def _parse_e_sums(value: str, parser: argparse.ArgumentParser) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        parser.error(f"--e-sums expects a comma-separated integer list, got {value!r}")


def _cmd_core(args, parser) -> int:
    spec = _spec_from_args(args, parser)
    report = core(spec)
    if args.json:
        _emit(core_json(spec, report))
        return 0
    for key, value in core_json(spec, report).items():
        print(f"{key}: {value}")
    print(f"u: {report.u}")
    print(f"v: {report.v}")
    return 0


def _cmd_build(args, parser) -> int:
    spec = _spec_from_args(args, parser)
    word = build(spec)
    if args.json:
        _emit({"word": word})
    else:
        print(word)
    return 0


def _cmd_occurrences(args, parser) -> int:
    pattern = parse_word(args.pattern)
    text = _text_from_args(args)
    finder = cyclic_occurrences if args.cyclic else occurrences
    positions = finder(pattern, text)
    if args.json:
        _emit({"pattern": pattern, "cyclic": bool(args.cyclic),
               "positions": positions})
    else:
        for pos in positions:
            print(pos)
    return 0


def _cmd_verify(args, parser) -> int:
    universe = Universe(
        alphabet_size=args.alphabet,
        min_x=args.min_x,
        max_x=args.max_x,
        e_sums=_parse_e_sums(args.e_sums, parser),
        forms=args.forms,
    )
    claims = _parse_claims(args.claims, parser)
    reports = run(
        universe,
        claims,
        max_violations=args.max_violations,
        jobs=args.jobs,
        max_checks=args.max_checks,
    )
    ok = verdict(reports, strict_notes=args.strict_notes)
    if args.json:
        _emit(verify_json(universe, reports))
    else:
        for rep in reports:
            print(f"{rep.claim.value}: {rep.status} (checked {rep.checked})")
            for w in rep.counterexamples:
                print(
                    f"  x={w.spec.split.x} cut1={w.spec.split.cut1}"
                    f" cut2={w.spec.split.cut2} e1={w.spec.e1} e2={w.spec.e2}"
                    f" factor={w.factor!r} expected={w.expected} actual={w.actual}"
                )
        print(f"verdict: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_parse(args, parser) -> int:
    word = parse_word(args.word)
    found = parses(word, forms=args.forms, min_e_sum=args.min_e_sum)
    if args.json:
        _emit({"word": word, "parses": [core_json(p.spec, p.core) for p in found]})
        return 0
    for p in found:
        s = p.spec.split
        print(
            f"x={s.x} cut1={s.cut1} cut2={s.cut2} e1={p.spec.e1} e2={p.spec.e2}"
            f" core={p.core.core} at [{p.core.core_start},{p.core.core_end})"
        )
    return 0


def _cmd_scan(args, parser) -> int:
    x = parse_word(args.x)
    text = _text_from_args(args)
    report = periodic_segments(text, x)
    if args.json:
        _emit(segments_json(x, report))
        return 0
    for s in report.segments:
        print(f"segment {s.start} {s.end} phase={s.phase}")
    for j in report.jumps:
        print(
            f"jump left_end={j.left_end} right_start={j.right_start}"
            f" deleted_mod={j.deleted_mod}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repcore",
        description="Interrupted repetitions: cores, claim verification, location.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p_core = subs.add_parser("core", help="compute the core of the interrupt")
    _add_spec_flags(p_core)
    p_core.add_argument("--json", action="store_true")
    p_core.set_defaults(func=_cmd_core)

    p_build = subs.add_parser("build", help="build the word W")
    _add_spec_flags(p_build)
    p_build.add_argument("--json", action="store_true")
    p_build.set_defaults(func=_cmd_build)

    p_occ = subs.add_parser("occurrences", help="occurrence positions of a pattern")
    p_occ.add_argument("--pattern", required=True)
    _add_text_source(p_occ)
    p_occ.add_argument("--cyclic", action="store_true",
                       help="count with wraparound")
    p_occ.add_argument("--json", action="store_true")
    p_occ.set_defaults(func=_cmd_occurrences)

    p_verify = subs.add_parser("verify", help="exhaustively check claims")
    p_verify.add_argument("--alphabet", type=int, default=2)
    p_verify.add_argument("--min-x", type=int, default=2)
    p_verify.add_argument("--max-x", type=int, default=8)
    p_verify.add_argument("--e-sums", default="3,4")
    p_verify.add_argument("--forms", choices=("prefix", "deletion", "both"),
                          default="prefix")
    p_verify.add_argument("--claims", default="all")
    p_verify.add_argument("--max-violations", type=int,
                          default=DEFAULT_MAX_VIOLATIONS)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--strict-notes", action="store_true",
                          help="fail the process on reported-claim violations too")
    p_verify.add_argument("--max-checks", type=int, default=DEFAULT_MAX_CHECKS,
                          help="cap on estimated window checks")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_parse = subs.add_parser("parse", help="decompose a word into interrupts")
    p_parse.add_argument("--word", required=True)
    p_parse.add_argument("--forms", choices=("prefix", "deletion", "both"),
                         default="both")
    p_parse.add_argument("--min-e-sum", type=int, default=3)
    p_parse.add_argument("--json", action="store_true")
    p_parse.set_defaults(func=_cmd_parse)

    p_scan = subs.add_parser("scan", help="maximal periodic segments and jumps")
    p_scan.add_argument("--x", required=True, help="the period word")
    _add_text_source(p_scan)
    p_scan.add_argument("--json", action="store_true")
    p_scan.set_defaults(func=_cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except RepcoreError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

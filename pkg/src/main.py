"""
Powerful sets command-line interface.

Exit codes: 0 when the verdict is positive (powerful, accepted, holds,
matches the known table), 1 when it is negative, 2 on any error.
"""

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, Tuple

from dotenv import load_dotenv
from pydantic import ValidationError

from .canon import canonical_form, is_isomorphic
from .clutter import reconstruct
from .config import settings
from .core import classify_element, first_failure, is_linear, is_powerful, rank
from .exceptions import PowerfulSetError
from .health import get_health_status, log_startup_info
from .models.code import BinarySet
from .models.reports import CheckReport, ElementReport, GrayMapReport
from .models.results import ExtensionSpec, ExtensionType
from .ops import (
    bullet,
    contract,
    delete,
    diamond,
    direct_sum,
    disjunctive_closure,
    extend,
    is_permutative,
    mutual_framing,
    puncture,
)
from .services.census_service import KNOWN_COUNTS, CensusService
from .services.conjecture_service import ConjectureService
from .services.family_service import ORDER5_SEEDS, FamilyService, lift_seeds
from .utils.bits import elements_of, exact_log2, text_to_word, word_to_text
from .utils.gray_map import gray_map
from .utils.setfile import format_set, parse_set_file, parse_z4_file, read_binary_set, read_text

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

# (exit code, JSON payload, text output)
CommandResult = Tuple[int, dict, str]


def _payload(command: str, **fields) -> dict:
    return {"schema": SCHEMA_VERSION, "command": command, "status": "success", **fields}


def _subset_text(mask: int) -> str:
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"


def _set_line(s: BinarySet) -> str:
    return " ".join(s.rows())


# Commands

def cmd_check(args: argparse.Namespace) -> CommandResult:
    s = read_binary_set(args.file)
    powerful = is_powerful(s)
    failure = None if powerful else first_failure(s)
    elements: List[ElementReport] = []
    if s.contains_zero:
        for e in range(1, s.order + 1):
            kind = classify_element(s, e)
            elements.append(
                ElementReport(
                    element=e,
                    kind=kind.kind,
                    partner=word_to_text(kind.partner, s.order) if kind.partner is not None else None,
                    rank=rank(s, 1 << (e - 1)),
                )
            )
    report = CheckReport(
        order=s.order,
        size=s.size,
        powerful=powerful,
        linear=is_linear(s),
        dim=exact_log2(s.size),
        failure_subset=elements_of(failure.subset) if failure else None,
        failure_zeros=failure.zeros if failure else None,
        elements=elements,
    )

    lines = [
        f"order={report.order} size={report.size} powerful={str(powerful).lower()} "
        f"linear={str(report.linear).lower()} dim={report.dim if report.dim is not None else '-'}"
    ]
    if failure:
        lines.append(f"failure X={_subset_text(failure.subset)} zeros={failure.zeros}")
    for el in elements:
        r = el.rank
        value = str(r.exact_log2) if r.is_exact else f"log2({r.total}/{r.zeros})"
        partner = f" partner={el.partner}" if el.partner else ""
        lines.append(f"element {el.element}: {el.kind.value}{partner} rank={value}")
    return (0 if powerful else 1), _payload("check", **report.model_dump(mode="json")), "\n".join(lines)


OPERATIONS = (
    "contract", "delete", "puncture", "extend", "direct-sum",
    "mutual-framing", "bullet", "diamond", "closure", "permutative",
)
BINARY_OPERATIONS = {"direct-sum", "mutual-framing", "bullet", "diamond"}


def cmd_op(args: argparse.Namespace) -> CommandResult:
    name = args.operation
    expected = 2 if name in BINARY_OPERATIONS else 1
    if len(args.files) != expected:
        raise ValueError(f"{name} takes {expected} set file(s), got {len(args.files)}")
    sets = [read_binary_set(f) for f in args.files]
    s = sets[0]
    extra: Dict[str, object] = {}

    def need_element() -> int:
        if args.element is None:
            raise ValueError(f"{name} requires --element")
        return args.element

    if name == "contract":
        result = contract(s, need_element())
    elif name == "delete":
        deletion = delete(s, need_element())
        result = deletion.result
        extra["had_duplicates"] = deletion.had_duplicates
    elif name == "puncture":
        result = puncture(s, need_element())
    elif name == "extend":
        kind = ExtensionType(args.kind.replace("-", "_"))
        partner = text_to_word(args.partner) if args.partner else None
        result = extend(s, ExtensionSpec(kind=kind, partner=partner, element=args.element))
    elif name == "direct-sum":
        result = direct_sum(*sets)
    elif name == "mutual-framing":
        result, verdict = mutual_framing(*sets)
        extra.update(verdict.model_dump(mode="json"))
    elif name == "bullet":
        result = bullet(*sets)
    elif name == "diamond":
        result = diamond(*sets)
    elif name == "closure":
        result = disjunctive_closure(s)
    else:
        columns = is_permutative(s)
        extra["permutative"] = columns is not None
        extra["columns"] = columns
        result = s

    code = 0
    if args.verify:
        extra["verified_powerful"] = is_powerful(result)
        code = 0 if extra["verified_powerful"] else 1

    comments = "".join(
        f"# {key}={json.dumps(value)}\n" for key, value in extra.items()
    )
    payload = _payload("op", operation=name, order=result.order, rows=result.rows(), **extra)
    return code, payload, (comments + format_set(result)).rstrip("\n")


def cmd_census(args: argparse.Namespace) -> CommandResult:
    if args.order >= 6 and not args.extended:
        raise ValueError("order 6 census requires --extended")
    service = CensusService(workers=args.threads, strategy=args.strategy, cache_path=args.cache)
    report = service.run(args.order, keep_representatives=args.representatives)

    code = 0
    fields = report.model_dump(mode="json", exclude={"classes"})
    if report.classes is not None:
        fields["classes"] = [s.rows() for s in report.classes]
    text = [f"order={report.n} p={report.p} pnl={report.p_nonlinear}"]
    if args.expect_table:
        expected = KNOWN_COUNTS.get(report.n)
        matches = expected == (report.p, report.p_nonlinear)
        fields["expected"] = list(expected) if expected else None
        fields["matches_expected"] = matches
        if not matches:
            code = 1
            text.append(f"mismatch: expected p={expected[0]} pnl={expected[1]}" if expected else "no expected row")
    if report.classes is not None:
        text.extend(_set_line(s) for s in report.classes)
    return code, _payload("census", **fields), "\n".join(text)


def cmd_reconstruct(args: argparse.Namespace) -> CommandResult:
    clutter = parse_set_file(read_text(args.file), order=args.order).to_clutter()
    outcome = reconstruct(clutter)
    payload = _payload(
        "reconstruct",
        outcome=outcome.status.value,
        rows=outcome.result.rows() if outcome.accepted else None,
        witness=elements_of(outcome.witness) if outcome.witness is not None else None,
        reason=outcome.reason,
    )
    if outcome.accepted:
        return 0, payload, format_set(outcome.result).rstrip("\n")
    if outcome.witness is not None:
        text = f"rejected: running sum at X={_subset_text(outcome.witness)} is not 2^i or 2^i-1"
    else:
        text = f"rejected: {outcome.reason}"
    return 1, payload, text


def cmd_conjecture(args: argparse.Namespace) -> CommandResult:
    if args.order >= 6 and not args.extended:
        raise ValueError("order 6 sweeps require --extended")
    service = ConjectureService(CensusService(workers=args.threads, cache_path=args.cache))
    if args.conjecture == "coloop":
        report = service.check_coloop(args.order)
    else:
        report = service.check_projection(args.order)

    fields = report.model_dump(mode="json")
    fields["counterexamples"] = [s.rows() for s in report.counterexamples]
    fields["holds"] = report.holds
    text = [
        f"{report.conjecture} order={report.n} checked={report.checked} skipped={report.skipped} "
        f"counterexamples={len(report.counterexamples)}"
    ]
    text.extend(_set_line(s) for s in report.counterexamples)
    return (0 if report.holds else 1), _payload("conjecture", **fields), "\n".join(text)


def cmd_family(args: argparse.Namespace) -> CommandResult:
    seeds = [read_binary_set(f) for f in args.seeds] if args.seeds else list(ORDER5_SEEDS)
    if args.seed_order is not None:
        seeds = lift_seeds(seeds, args.seed_order)
    report = FamilyService().build(seeds, rounds=args.rounds)

    ok = (
        report.all_powerful
        and report.all_loopless
        and report.all_frameless
        and report.recursion_holds
        and report.pairwise_nonisomorphic is not False
        and (report.all_nonlinear or seeds[0].order <= 3)
    )
    fields = report.model_dump(mode="json", exclude={"seeds", "members"})
    fields["seeds"] = [s.rows() for s in report.seeds]
    if args.members:
        fields["members"] = [s.rows() for s in report.members]
    pairwise = report.pairwise_nonisomorphic
    text = [
        f"members={len(report.members)} order={report.order} size={report.size} "
        f"round_counts={','.join(str(c) for c in report.round_counts)}",
        f"powerful={str(report.all_powerful).lower()} loopless={str(report.all_loopless).lower()} "
        f"frameless={str(report.all_frameless).lower()} nonlinear={str(report.all_nonlinear).lower()} "
        f"pairwise_nonisomorphic={'unknown' if pairwise is None else str(pairwise).lower()}",
    ]
    if args.members:
        text.extend(_set_line(s) for s in report.members)
    return (0 if ok else 1), _payload("family", **fields), "\n".join(text)


def cmd_graymap(args: argparse.Namespace) -> CommandResult:
    image = gray_map(parse_z4_file(read_text(args.file)))
    rows = [word_to_text(w, image.order) for w in image.words]
    if image.has_duplicates:
        logger.warning("Gray image contains duplicate words")
    report = GrayMapReport(order=image.order, rows=rows, has_duplicates=image.has_duplicates)

    code = 0
    text = list(rows)
    if args.check:
        s = image.to_binary_set()
        failure = first_failure(s)
        report.powerful = failure is None
        if failure:
            report.failure_subset = elements_of(failure.subset)
            report.failure_zeros = failure.zeros
            text.append(f"# powerful=false X={_subset_text(failure.subset)} zeros={failure.zeros}")
        else:
            text.append(f"# powerful={str(report.powerful).lower()}")
        code = 0 if report.powerful else 1
    return code, _payload("graymap", **report.model_dump(mode="json")), "\n".join(text)


def cmd_canon(args: argparse.Namespace) -> CommandResult:
    s = read_binary_set(args.file)
    form = canonical_form(s)
    canonical = form.as_set()
    payload = _payload("canon", order=form.order, rows=canonical.rows(), witness=list(form.witness))
    text = f"# witness={' '.join(str(p) for p in form.witness)}\n" + format_set(canonical)
    return 0, payload, text.rstrip("\n")


def cmd_iso(args: argparse.Namespace) -> CommandResult:
    s1, s2 = read_binary_set(args.first), read_binary_set(args.second)
    iso = is_isomorphic(s1, s2)
    return (0 if iso else 1), _payload("iso", isomorphic=iso), f"isomorphic={str(iso).lower()}"


def cmd_status(args: argparse.Namespace) -> CommandResult:
    health = get_health_status()
    return 0, _payload("status", health=health), json.dumps(health, indent=2)


# Parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="powerful-sets", description="Powerful set toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="test powerfulness, linearity and element types")
    p.add_argument("file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("op", parents=[common], help="apply an operation and print the resulting set")
    p.add_argument("operation", choices=OPERATIONS)
    p.add_argument("files", nargs="+")
    p.add_argument("--element", type=int, help="1-based element for contract/delete/puncture/parallel")
    p.add_argument("--kind", default="loop", choices=[t.value.replace("_", "-") for t in ExtensionType])
    p.add_argument("--partner", help="near-frame partner row, e.g. 011")
    p.add_argument("--verify", action="store_true", help="also test the result for powerfulness")
    p.set_defaults(handler=cmd_op)

    p = sub.add_parser("census", parents=[common], help="count isomorphism classes of powerful sets")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--threads", type=int, default=None, help="worker processes")
    p.add_argument("--strategy", choices=["incremental", "pipeline"], default=None)
    p.add_argument("--cache", default=None, help="census cache file")
    p.add_argument("--extended", action="store_true", help="allow order 6")
    p.add_argument("--expect-paper", "--expect-table", dest="expect_table", action="store_true",
                   help="compare against the known counts; exit 1 on mismatch")
    p.add_argument("--representatives", action="store_true", help="print canonical representatives")
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("reconstruct", parents=[common], help="rebuild a powerful set from its clutter")
    p.add_argument("file")
    p.add_argument("--order", type=int, default=None, help="order when the clutter file is empty")
    p.set_defaults(handler=cmd_reconstruct)

    p = sub.add_parser("conjecture", parents=[common], help="sweep a conjecture over the census")
    p.add_argument("conjecture", choices=["coloop", "projection"])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--cache", default=None)
    p.add_argument("--extended", action="store_true")
    p.set_defaults(handler=cmd_conjecture)

    p = sub.add_parser("family", parents=[common], help="build a diamond family")
    p.add_argument("seeds", nargs="*", help="seed set files (default: the two order-5 seeds)")
    p.add_argument("--rounds", type=int, default=1)
    p.add_argument("--seed-order", type=int, default=None, help="coloop-extend the seeds to this order first")
    p.add_argument("--members", action="store_true", help="print every member")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("graymap", parents=[common], help="Gray-map a Z4 code")
    p.add_argument("file")
    p.add_argument("--check", action="store_true", help="test the binary image for powerfulness")
    p.set_defaults(handler=cmd_graymap)

    p = sub.add_parser("canon", parents=[common], help="canonical form under coordinate permutation")
    p.add_argument("file")
    p.set_defaults(handler=cmd_canon)

    p = sub.add_parser("iso", parents=[common], help="test two sets for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser("status", parents=[common], help="runtime status and caps")
    p.set_defaults(handler=cmd_status)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else settings.log_level)
    if args.verbose:
        log_startup_info()

    handler: Callable[[argparse.Namespace], CommandResult] = args.handler
    try:
        code, payload, text = handler(args)
    except (PowerfulSetError, ValidationError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        if args.json:
            print(json.dumps({"schema": SCHEMA_VERSION, "command": args.command, "status": "error", "error": str(e)}))
        else:
            print(f"error: {e}", file=sys.stderr)
        return 2

    if args.json:
        print(json.dumps(payload, indent=2))
    elif text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

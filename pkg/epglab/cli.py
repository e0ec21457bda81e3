"""
命令行入口: epglab verify / report / group
"""

from pathlib import Path
from typing import List, Optional, Sequence
import argparse
import asyncio
import logging
import sys

from config.settings import Settings, settings as default_settings

from . import __version__
from .checks import CHECKS, CheckContext, CheckStatus, VerifyVerdict, select_checks
from .core.errors import CapacityError, EpglabError, ParameterError, TableValidationError, UsageError
from .core.group import FiniteGroup, element_order, maximal_cyclic_subgroups
from .group_spec import GroupSpec
from .reports import REPORT_FORMATS, render_report, verify_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


async def verify_async(group: FiniteGroup, names: Optional[Sequence[str]] = None,
                       config: Optional[Settings] = None,
                       oracle_only: bool = False) -> List[VerifyVerdict]:
    """并发执行各校验单元, 结果按校验名排序"""
    config = config or default_settings
    checks = select_checks(group.family, names)
    context = CheckContext(group, config=config, oracle_only=oracle_only)
    semaphore = asyncio.Semaphore(config.threads)
    verdicts = await asyncio.gather(*(check.run(context, semaphore) for check in checks))
    return sorted(verdicts, key=lambda v: v.check)


def cmd_verify(spec: GroupSpec, names: Optional[Sequence[str]] = None,
               config: Optional[Settings] = None,
               oracle_only: bool = False) -> List[VerifyVerdict]:
    group = spec.build()
    return asyncio.run(verify_async(group, names, config, oracle_only))


def cmd_report(spec: GroupSpec, what: str, fmt: str,
               config: Optional[Settings] = None) -> str:
    return render_report(spec.build(), what, fmt, config)


def describe_group(group: FiniteGroup, orders: bool = False) -> str:
    lines = [
        f"group: {group.name}",
        f"order: {group.order}",
        f"family: {group.family.value}",
        f"abelian: {'yes' if group.is_abelian() else 'no'}",
    ]
    maximal = maximal_cyclic_subgroups(group)
    lines.append(f"maximal cyclic subgroups: {len(maximal)}")
    for subgroup in maximal:
        members = ", ".join(group.labels[x] for x in subgroup.members)
        lines.append(f"  <{group.labels[subgroup.generator]}> (order {subgroup.order}): {{{members}}}")
    if orders:
        lines.append("element orders:")
        for x in range(group.order):
            lines.append(f"  {group.labels[x]}: {element_order(group, x)}")
    return "\n".join(lines) + "\n"


def format_verdicts(verdicts: Sequence[VerifyVerdict]) -> str:
    lines = []
    for v in verdicts:
        line = f"{v.status.value.upper():8s}{v.check:15s}"
        if v.status == CheckStatus.SKIPPED:
            line += f"{v.reason}"
            if v.expected:
                line += f" | expected {v.expected}"
        else:
            line += f"expected {v.expected} | computed {v.computed}"
        lines.append(line)
        for mismatch in v.mismatches:
            lines.append(f"        - {mismatch}")
        for note in v.notes:
            lines.append(f"        note: {note}")
    passed = sum(v.status == CheckStatus.PASS for v in verdicts)
    failed = sum(v.status == CheckStatus.FAIL for v in verdicts)
    skipped = sum(v.status == CheckStatus.SKIPPED for v in verdicts)
    lines.append(f"{passed} passed, {failed} failed, {skipped} skipped")
    return "\n".join(lines) + "\n"


def _write(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _add_caps(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--detour-cap", type=int, help="max vertices for exact detour search")
    parser.add_argument("--enum-cap", type=int, help="max vertices for resolving-set enumeration")
    parser.add_argument("--charpoly-cap", type=int, help="max vertices for the characteristic polynomial")
    parser.add_argument("--threads", type=int, help="parallelism (default EPGLAB_THREADS)")
    parser.add_argument("-o", "--output", type=Path, help="write to FILE instead of stdout")
    parser.add_argument("-v", "--verbose", action="count", default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epglab",
        description="Enhanced power graphs of finite groups: exact invariants and verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="compare closed forms with brute-force engines")
    verify.add_argument("spec", help="sd:N | q:N | d:N | file:PATH")
    selection = verify.add_mutually_exclusive_group()
    selection.add_argument("--all", action="store_true", help="every check supported by the family")
    selection.add_argument("--check", action="append", choices=sorted(CHECKS), metavar="NAME",
                           help=f"run one check (repeatable): {', '.join(sorted(CHECKS))}")
    verify.add_argument("--oracle-only", action="store_true", help="print closed forms without brute force")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    _add_caps(verify)

    report = sub.add_parser("report", help="export a deterministic report")
    report.add_argument("spec", help="sd:N | q:N | d:N | file:PATH")
    report.add_argument("what", choices=sorted(REPORT_FORMATS))
    report.add_argument("--format", required=True, choices=("json", "csv", "dot"))
    _add_caps(report)

    group = sub.add_parser("group", help="describe a group")
    group.add_argument("spec", help="sd:N | q:N | d:N | file:PATH")
    group.add_argument("--orders", action="store_true", help="list the order of every element")
    group.add_argument("-o", "--output", type=Path, help="write to FILE instead of stdout")
    group.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def _configure(args: argparse.Namespace) -> Settings:
    config = default_settings.with_overrides(
        detour_cap=getattr(args, "detour_cap", None),
        enum_cap=getattr(args, "enum_cap", None),
        charpoly_cap=getattr(args, "charpoly_cap", None),
        threads=getattr(args, "threads", None),
    )
    level = config.log_level.upper()
    if args.verbose == 1:
        level = "INFO"
    elif args.verbose >= 2:
        level = "DEBUG"
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", force=True)
    for name in ("detour_cap", "enum_cap", "charpoly_cap", "threads"):
        if getattr(config, name) < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be >= 1")
    return config


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _configure(args)
        spec = GroupSpec.parse(args.spec)
        if args.command == "group":
            _write(describe_group(spec.build(), orders=args.orders), args.output)
            return EXIT_OK
        if args.command == "report":
            _write(cmd_report(spec, args.what, args.format, config), args.output)
            return EXIT_OK
        group = spec.build()
        names = None if args.all else args.check
        verdicts = asyncio.run(verify_async(group, names, config, args.oracle_only))
        logger.debug("verify %s: %d verdicts", group.name, len(verdicts))
        text = verify_report(group, verdicts) if args.format == "json" else format_verdicts(verdicts)
        _write(text, args.output)
        return EXIT_FAIL if any(v.status == CheckStatus.FAIL for v in verdicts) else EXIT_OK
    except (UsageError, ParameterError, TableValidationError, CapacityError) as e:
        print(f"epglab: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except EpglabError as e:
        print(f"epglab: error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command line for the minuscule homomesy engine.

Usage:
    python homomesy_cli.py catalog --max-rank 3
    python homomesy_cli.py audit A 3 2 --format json
    python homomesy_cli.py audit --all --max-rank 7 --workers 4
    python homomesy_cli.py export A 3 2 orbits --out reports/a3_w2_orbits.json

Exit codes: 0 success (every applicable verdict passed), 1 verification
failure, 2 usage error.
"""
import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from config import config, setup_logging
from minuscule.catalog import CatalogEntry, enumerate_catalog, get_entry
from minuscule.homomesy import AuditSummary, audit_entry
from minuscule.report import (
    EXPORTS,
    audit_records,
    audit_text,
    catalog_rows,
    catalog_table,
    dumps,
    export_data,
    write_text,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit(text: str, out: Optional[str]) -> int:
    if out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        write_text(out, text)
    except OSError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _entry_from_args(args) -> CatalogEntry:
    if args.family is None or args.rank is None or args.weight_index is None:
        raise ValueError("an entry needs FAMILY RANK WEIGHT_INDEX")
    return get_entry(args.family, args.rank, args.weight_index, max_rank=args.max_rank)


def cmd_catalog(args) -> int:
    """List every minuscule entry up to --max-rank."""
    try:
        entries = enumerate_catalog(args.max_rank)
    except ValueError as e:
        return _usage_error(str(e))
    rows = catalog_rows(entries)
    if args.format == 'json':
        text = dumps(rows)
    else:
        text = catalog_table(rows).to_string(index=False) + "\n"
    return _emit(text, args.out)


def _audit_worker(entry: CatalogEntry) -> AuditSummary:
    return audit_entry(entry)


def run_audits(entries: List[CatalogEntry], workers: int = 1) -> List[AuditSummary]:
    """Audit entries, in parallel when workers > 1; results come back in input order."""
    if workers <= 1 or len(entries) <= 1:
        return [audit_entry(e) for e in entries]
    logger.info(f"Auditing {len(entries)} entries with {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_audit_worker, entries))


def cmd_audit(args) -> int:
    """Audit one entry, or the whole catalog with --all."""
    try:
        if args.all:
            if args.family is not None:
                raise ValueError("--all takes no entry")
            entries = enumerate_catalog(args.max_rank)
        else:
            entries = [_entry_from_args(args)]
    except ValueError as e:
        return _usage_error(str(e))

    workers = args.workers if args.workers is not None else config.WORKERS
    if workers < 1:
        return _usage_error(f"--workers must be >= 1, got {workers}")

    summaries = run_audits(entries, workers)
    if args.format == 'json':
        text = dumps(audit_records(summaries))
    else:
        text = "".join(audit_text(s) for s in summaries)
        if args.all:
            failed = [s for s in summaries if not s.passed]
            text += f"\n{len(summaries)} entries audited, {len(failed)} failed\n"

    status = _emit(text, args.out)
    if status != EXIT_OK:
        return status
    for summary in summaries:
        if not summary.passed:
            for message in summary.failures():
                logger.warning(f"{summary.entry}: {message}")
    return EXIT_OK if all(s.passed for s in summaries) else EXIT_FAILED


def cmd_export(args) -> int:
    """Write the heap, lattice or orbits of an entry as JSON."""
    try:
        entry = _entry_from_args(args)
        data = export_data(entry, args.what)
    except ValueError as e:
        return _usage_error(str(e))
    return _emit(dumps(data), args.out)


def _add_entry_arguments(parser: argparse.ArgumentParser, optional: bool = False) -> None:
    nargs = '?' if optional else None
    parser.add_argument('family', nargs=nargs, help='Cartan family letter (A, B, C, D, E)')
    parser.add_argument('rank', nargs=nargs, type=int, help='rank')
    parser.add_argument('weight_index', nargs=nargs, type=int, help='minuscule node, 1-based')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='homomesy_cli',
        description='Rowmotion homomesy on minuscule posets',
    )
    parser.add_argument('--verbose', '-v', action='store_true', help='debug logging')
    sub = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--max-rank', type=int, default=None,
                        help='rank bound (default: configured per-family caps)')
    common.add_argument('--out', default=None, metavar='PATH', help='write output to PATH')

    p_catalog = sub.add_parser('catalog', parents=[common], help='list minuscule entries')
    p_catalog.add_argument('--format', choices=['text', 'json'], default='text')
    p_catalog.set_defaults(handler=cmd_catalog)

    p_audit = sub.add_parser('audit', parents=[common], help='audit homomesy of an entry')
    _add_entry_arguments(p_audit, optional=True)
    p_audit.add_argument('--format', choices=['text', 'json'], default='text')
    p_audit.add_argument('--all', action='store_true', help='audit every catalog entry')
    p_audit.add_argument('--workers', type=int, default=None,
                         help=f'parallel workers for --all (default {config.WORKERS})')
    p_audit.set_defaults(handler=cmd_audit)

    p_export = sub.add_parser('export', parents=[common], help='export heap, lattice or orbits')
    _add_entry_arguments(p_export)
    p_export.add_argument('what', choices=EXPORTS)
    p_export.set_defaults(handler=cmd_export)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.DEBUG if args.verbose else config.log_level()
    setup_logging(level)
    return args.handler(args)


if __name__ == '__main__':
    sys.exit(main())

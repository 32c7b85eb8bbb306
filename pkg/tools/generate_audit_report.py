"""
Generate a Markdown report of the full-catalog homomesy audit.

Usage:
    python tools/generate_audit_report.py [--max-rank N] [--workers K] [--out PATH]
"""
import argparse
import sys
from datetime import datetime
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from config import config, setup_logging  # noqa: E402
from homomesy_cli import run_audits  # noqa: E402
from minuscule.catalog import enumerate_catalog  # noqa: E402
from minuscule.homomesy import Statistic  # noqa: E402
from minuscule.report import fraction_str, write_text  # noqa: E402


def build_parser():
    parser = argparse.ArgumentParser(description="Markdown summary of the full-catalog audit")
    parser.add_argument('--max-rank', type=int, default=None,
                        help='rank bound (default: configured per-family caps)')
    parser.add_argument('--workers', type=int, default=config.WORKERS, help='parallel workers')
    parser.add_argument('--out', default=None, metavar='PATH',
                        help='report path (default: REPORTS_FOLDER/audit_report.md)')
    return parser


def generate_audit_report(max_rank=None, workers=1, output_path=None):
    """Audit every catalog entry and write a markdown summary; returns the report path."""
    entries = enumerate_catalog(max_rank)
    summaries = run_audits(entries, workers)

    md_lines = []
    md_lines.append("# Minuscule rowmotion homomesy audit")
    md_lines.append("")
    md_lines.append(f"**Generated:** {datetime.now().strftime('%d/%m/%Y %H:%M')}")
    md_lines.append(f"**Rank caps:** {config.rank_caps()} (E ranks {list(config.E_RANKS)})")
    md_lines.append("")
    md_lines.append("---")
    md_lines.append("")

    passed = [s for s in summaries if s.passed]
    md_lines.append("## Summary")
    md_lines.append("")
    md_lines.append(f"- Entries audited: **{len(summaries)}**")
    md_lines.append(f"- Passed: **{len(passed)}**")
    md_lines.append(f"- Failed: **{len(summaries) - len(passed)}**")
    md_lines.append("")

    md_lines.append("## Entries")
    md_lines.append("")
    md_lines.append("| Entry | Poset | Weights | Heap | Orbits | Order | Total | Antichain | Result |")
    md_lines.append("|---|---|---|---|---|---|---|---|---|")
    for s in summaries:
        predicted = s.reports[0].predicted if s.reports else {}
        total = antichain = "n/a"
        for kind, value in predicted.items():
            if value is None or kind.label is not None:
                continue
            if kind.kind is Statistic.TOTAL_CARDINALITY:
                total = fraction_str(value)
            elif kind.kind is Statistic.ANTICHAIN_CARDINALITY:
                antichain = fraction_str(value)
        result = "✅" if s.passed else "❌"
        md_lines.append(
            f"| {s.entry} | {s.entry.poset_name or ''} | {s.lattice_size} | {s.heap_size} | "
            f"{s.orbit_count} | {s.order_of_action} | {total} | {antichain} | {result} |"
        )
    md_lines.append("")

    failures = [(s.entry, m) for s in summaries for m in s.failures()]
    if failures:
        md_lines.append("## Failures")
        md_lines.append("")
        for entry, message in failures:
            md_lines.append(f"- **{entry}**: {message}")
        md_lines.append("")

    if output_path is None:
        config.ensure_folders()
        output_path = str(Path(config.REPORTS_FOLDER) / "audit_report.md")
    write_text(output_path, '\n'.join(md_lines) + '\n')

    print(f"[OK] Report generated: {output_path}")
    print(f"[INFO] Entries: {len(summaries)}, failed: {len(summaries) - len(passed)}")
    return output_path


def main(argv=None):
    args = build_parser().parse_args(argv)
    setup_logging(config.log_level())
    generate_audit_report(max_rank=args.max_rank, workers=args.workers, output_path=args.out)


if __name__ == "__main__":
    main()

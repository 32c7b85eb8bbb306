# -*- coding: utf-8 -*-
"""
Serialization and rendering of catalog, audit and export data.

JSON output is deterministic: keys sorted, two-space indent, one trailing
newline, rationals as "p/q" strings. Text output goes through pandas
DataFrames.
"""
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional

import pandas as pd

from minuscule.catalog import CatalogEntry, build_entry
from minuscule.dynamics import OrbitDecomposition, decompose_orbits
from minuscule.heap import heap_to_dict
from minuscule.homomesy import AuditSummary, OrbitReport
from minuscule.weight_orbit import WeightLattice

logger = logging.getLogger(__name__)


def fraction_str(value: Optional[Fraction]) -> Optional[str]:
    """Exact "p/q" form (q = 1 included), None stays None."""
    if value is None:
        return None
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def orbit_record(entry: CatalogEntry, report: OrbitReport) -> Dict[str, object]:
    """One audit record: entry, orbit id, size and every statistic."""
    stats = []
    for kind, average in report.averages.items():
        stats.append({
            'kind': kind.kind.value,
            'label': kind.label,
            'average': fraction_str(average),
            'predicted': fraction_str(report.predicted[kind]),
            'pass': report.verdicts[kind],
        })
    return {
        'entry': entry.to_dict(),
        'orbit_id': report.orbit_id,
        'size': report.size,
        'stats': stats,
    }


def audit_records(summaries: Iterable[AuditSummary]) -> List[Dict[str, object]]:
    return [orbit_record(s.entry, r) for s in summaries for r in s.reports]


def _verdict_mark(verdict: Optional[bool]) -> str:
    if verdict is None:
        return ""
    return "" if verdict else " ✗"


def audit_table(summary: AuditSummary) -> pd.DataFrame:
    """Wide table: a 'predicted' row, then one row per orbit with every average."""
    if not summary.reports:
        return pd.DataFrame()
    kinds = list(summary.reports[0].averages)
    first = summary.reports[0]
    rows = [{'orbit': 'predicted', 'size': '',
             **{str(k): fraction_str(first.predicted[k]) or '-' for k in kinds}}]
    for report in summary.reports:
        row = {'orbit': str(report.orbit_id), 'size': str(report.size)}
        for k in kinds:
            row[str(k)] = f"{report.averages[k]}{_verdict_mark(report.verdicts[k])}"
        rows.append(row)
    return pd.DataFrame(rows, columns=['orbit', 'size'] + [str(k) for k in kinds])


def audit_text(summary: AuditSummary) -> str:
    entry = summary.entry
    lines = [f"== {entry} ({entry.cartan_type}, {'simply laced' if entry.simply_laced else 'multiply laced'})"]
    if entry.poset_name:
        lines.append(f"poset: {entry.poset_name}")
    twin = entry.simply_laced_twin
    if twin is not None:
        lines.append(
            f"same poset as {twin}; total and antichain constants are not predicted here"
        )
    lines.append(
        f"weights: {summary.lattice_size}  heap: {summary.heap_size}  "
        f"orbits: {summary.orbit_count}  order: {summary.order_of_action}"
    )
    lines.append(audit_table(summary).to_string(index=False))
    checks = ", ".join(
        f"{name}={'n/a' if v is None else ('ok' if v else 'FAIL')}"
        for name, v in summary.checks.items()
    )
    lines.append(f"checks: {checks}")
    if not summary.exhaustive:
        lines.append("per-ideal checks skipped (too many ideals)")
    for message in summary.failures():
        lines.append(f"FAIL {message}")
    lines.append(f"result: {'PASS' if summary.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def catalog_rows(entries: Iterable[CatalogEntry]) -> List[Dict[str, object]]:
    rows = []
    for entry in entries:
        built = build_entry(entry)
        rows.append({
            'family': entry.family.value,
            'rank': entry.rank,
            'weight_index': entry.weight_index,
            'lattice_size': len(built.lattice),
            'heap_size': len(built.heap),
            'simply_laced': entry.simply_laced,
            'poset': entry.poset_name,
        })
    return rows


def catalog_table(rows: List[Dict[str, object]]) -> pd.DataFrame:
    df = pd.DataFrame(rows, columns=[
        'family', 'rank', 'weight_index', 'lattice_size', 'heap_size', 'simply_laced', 'poset',
    ])
    df['poset'] = df['poset'].fillna('')
    return df


def lattice_to_dict(lat: WeightLattice) -> Dict[str, object]:
    """Weights with their levels, and labelled covers (lower, upper, label)."""
    return {
        'type': {'family': lat.rs.type.family.value, 'rank': lat.rs.rank},
        'lambda': list(lat.lam.coords),
        'elements': [
            {'index': k, 'weight': list(mu.coords), 'level': lat.levels[k]}
            for k, mu in enumerate(lat.elements)
        ],
        'covers': [
            {'lower': k, 'upper': target, 'label': label}
            for k, covers in enumerate(lat.up_covers) for label, target in covers
        ],
    }


def orbits_to_dict(decomposition: OrbitDecomposition) -> Dict[str, object]:
    """Orbits sorted by (size, smallest member); ideals listed by element index."""
    heap = decomposition.heap
    return {
        'type': {'family': heap.rs.type.family.value, 'rank': heap.rs.rank},
        'lambda': list(heap.lam.coords),
        'order': decomposition.order_of_action,
        'orbits': [
            {
                'orbit_id': k,
                'size': len(decomposition.orbits[k]),
                'ideals': [ideal.elements() for ideal in decomposition.orbits[k]],
            }
            for k in decomposition.canonical_order()
        ],
    }


EXPORTS = ('heap', 'lattice', 'orbits')


def export_data(entry: CatalogEntry, what: str) -> Dict[str, object]:
    """
    Exported form of one object of an entry.

    Raises:
        ValueError: unknown export kind
    """
    built = build_entry(entry)
    if what == 'heap':
        data = heap_to_dict(built.heap)
    elif what == 'lattice':
        data = lattice_to_dict(built.lattice)
    elif what == 'orbits':
        data = orbits_to_dict(decompose_orbits(built.heap))
    else:
        raise ValueError(f"Unknown export: {what}. Available: {list(EXPORTS)}")
    data['entry'] = entry.to_dict()
    return data


def write_text(path: str, text: str) -> None:
    """
    Write UTF-8 text, creating parent folders.

    Raises:
        OSError: with the path in the message
    """
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    except OSError as e:
        raise OSError(f"Cannot write {target}: {e.strerror or e}") from e
    logger.info(f"Wrote {target}")

"""Tabulation helpers for spectral germs and crosscheck grids.

This module gathers pole orders of the i = 1 eigenvalues over a range of
exponents, summarizes crosscheck cells per grid kind, and writes both to
CSV files.
"""

import csv
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Tuple

from characters.rational import fraction_str
from spectral.exceptional import s_alpha_invertible
from spectral.invertibility import SpectralTable, spectral_invertibility


def laurent_exponent_grid(n: int, alphas: Iterable[Fraction], M: int) -> List[Dict[str, Any]]:
    """Laurent exponent of every eigenvalue germ on an (alpha0, m) grid.

    Args:
        n: Dimension of the ambient space (n >= 3).
        alphas: Expansion points alpha0.
        M: Highest harmonic index.

    Returns:
        One record per (alpha0, m) with the exponent (``None`` for exact
        zeros), the table's k0, and whether the spectral and closed-form
        invertibility tests agree at alpha0.
    """
    records = []
    for a in alphas:
        invertible, table = spectral_invertibility(n, a, M)
        predicted = s_alpha_invertible(n, 1, a)
        k0 = table.k0()
        for m, row in sorted(table.rows.items()):
            records.append(
                {
                    "alpha0": float(a),
                    "alpha0_text": fraction_str(a),
                    "m": m,
                    "exponent": None if row.exact_zero else row.laurent_exponent,
                    "k0": k0,
                    "invertible": invertible,
                    "agrees": invertible == predicted,
                }
            )
    return records


def crosscheck_counts(results: Iterable[Mapping[str, Any]]) -> Dict[str, Dict[str, int]]:
    """Pass/fail totals per grid kind from ``crosscheck_grid`` results."""
    counts: Dict[str, Dict[str, int]] = {}
    for result in results:
        entry = counts.setdefault(result["grid"], {"total": 0, "passed": 0, "failed": 0})
        for key in entry:
            entry[key] += result["summary"][key]
    return counts


def failing_keys(result: Mapping[str, Any], top: int = 10) -> List[str]:
    return [c["key"] for c in result["cells"] if not c["pass"]][:top]


def export_spectral_csv(table: SpectralTable, path: str) -> str:
    """Write the germ rows of a spectral table, one line per m."""
    rows = table.csv_rows()
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    return path


def export_crosscheck_csv(
    results: Iterable[Mapping[str, Any]], path_prefix: str = "crosscheck"
) -> Tuple[str, str]:
    """Export crosscheck summaries and cells.

    Args:
        results: ``crosscheck_grid`` outputs.
        path_prefix: Prefix for the two CSV file names.

    Returns:
        Tuple of (summary_csv_path, cells_csv_path).
    """
    results = list(results)
    summary_path = f"{path_prefix}_summary.csv"
    cells_path = f"{path_prefix}_cells.csv"

    with open(summary_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(["grid", "total", "passed", "failed"])
        for grid, c in sorted(crosscheck_counts(results).items()):
            writer.writerow([grid, c["total"], c["passed"], c["failed"]])

    with open(cells_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(["grid", "key", "pass"])
        for result in results:
            for cell in result["cells"]:
                writer.writerow([result["grid"], cell["key"], cell["pass"]])

    return summary_path, cells_path

"""Run the standard crosscheck grids and export their results to CSV."""

import sys

from analytics.metrics import export_crosscheck_csv, failing_keys
from crosscheck import crosscheck_grid

SUITE = [
    {
        "grid": "closed_vs_recursive",
        "fields": ["R", "C", "NA"],
        "n_max": 8,
        "nu_lo": -8,
        "nu_hi": 8,
        "max_den": 2,
        "alpha_max": 3,
    },
    {"grid": "spectral_vs_exceptional", "ns": [3, 4, 5, 6, 7, 8], "alpha_lo": -40, "alpha_hi": 20, "M": 40},
    {"grid": "translation", "ns": [2, 3, 4, 5, 6], "alpha_lo": -12, "alpha_hi": 6, "max_den": 2, "all_i": True},
    {"grid": "oracle", "ns": [3, 4, 5, 6], "m_max": 10, "alphas": ["-1/2", 0, 1, "5/2"], "tolerance": 1e-8},
]


def run_crosscheck_suite() -> int:
    """Run every grid in ``SUITE``; returns 4 if any cell failed, else 0."""
    print("Starting crosscheck suite...\n")
    results = []
    for params in SUITE:
        result = crosscheck_grid(params)
        s = result["summary"]
        print(f"{result['grid']}: {s['passed']}/{s['total']} passed")
        for key in failing_keys(result):
            print(f"  failed: {key}")
        results.append(result)

    summary_path, cells_path = export_crosscheck_csv(results)
    print(f"\nSaved summary to {summary_path} and cells to {cells_path}")

    failed = sum(r["summary"]["failed"] for r in results)
    print("\n--- Final Summary ---")
    print(f"Grids: {len(results)}, failed cells: {failed}")
    return 4 if failed else 0


if __name__ == "__main__":
    sys.exit(run_crosscheck_suite())

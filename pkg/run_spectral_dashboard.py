#!/usr/bin/env python3
"""Generate the interactive spectral dashboard plus static figures."""

import argparse
from fractions import Fraction

import numpy as np

from analytics.interactive_dashboard import generate_dashboard_html
from analytics.metrics import export_spectral_csv, laurent_exponent_grid
from analytics.visualization import plot_mc_convergence, plot_spectral_table, plot_tower_graph
from characters.codec import parse_character
from characters.induced import induced_from
from crosscheck import crosscheck_grid
from derivatives.tower_graph import TowerGraph
from grassmann.frames import Frame
from grassmann.montecarlo import mc_convergence
from spectral.eigenvalues import eigenvalue_float
from spectral.invertibility import spectral_table


def main_dashboard(n: int = 5, lo: int = -12, hi: int = 4, M: int = 12) -> str:
    """Main entry point for dashboard generation."""
    print("=" * 60)
    print("Degenerate principal series: dashboard generator")
    print("=" * 60)

    print(f"\n[1/4] Tabulating eigenvalue germs for n={n}, alpha0 in [{lo}, {hi}] (half-integers)...")
    alphas = [Fraction(k, 2) for k in range(2 * lo, 2 * hi + 1)]
    records = laurent_exponent_grid(n, alphas, M)
    disagreements = sorted({r["alpha0_text"] for r in records if not r["agrees"]})
    print(f"[✓] {len(records)} germs, disagreements at: {disagreements or 'none'}")

    print("\n[2/4] Running a small crosscheck...")
    grid = {"grid": "translation", "ns": [n], "alpha_lo": lo, "alpha_hi": hi, "max_den": 2, "all_i": True}
    result = crosscheck_grid(grid)
    print(f"[✓] translation grid: {result['summary']['passed']}/{result['summary']['total']} passed")

    print("\n[3/4] Static figures...")
    table = spectral_table(n, -2, M)
    plot_spectral_table(table, "spectrum.png")
    export_spectral_csv(table, "spectrum.csv")
    estimates = mc_convergence("const", Frame(np.eye(n)[:, :1]), 1.0, start=500, doublings=6)
    plot_mc_convergence(estimates, exact=eigenvalue_float(n, 1.0, 0), save_path="mc_convergence.png")
    chi = parse_character("eps*nu^{5/2}", "R", 2)
    tower = TowerGraph(induced_from("R", n + 1, 2, chi))
    tower.display_info()
    plot_tower_graph(tower, "tower.png")
    print("[✓] Saved spectrum.png, spectrum.csv, mc_convergence.png, tower.png")

    print("\n[4/4] Generating interactive dashboard...")
    output_file = generate_dashboard_html(records, [result], output_file="dashboard.html")
    print(f"[✓] Dashboard generated: {output_file}")

    print("\n" + "=" * 60)
    print("SUCCESS: Dashboard ready at dashboard.html")
    print("=" * 60)
    return output_file


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--lo", type=int, default=-12)
    parser.add_argument("--hi", type=int, default=4)
    parser.add_argument("--M", type=int, default=12)
    args = parser.parse_args()
    main_dashboard(args.n, args.lo, args.hi, args.M)

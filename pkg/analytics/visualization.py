from typing import List, Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import networkx as nx

from derivatives.tower_graph import TowerGraph
from grassmann.montecarlo import MCEstimate
from spectral.invertibility import SpectralTable


def plot_spectral_table(table: SpectralTable, save_path: Optional[str] = "spectrum.png") -> None:
    ms = sorted(table.rows)
    exps = [None if table.rows[m].exact_zero else table.rows[m].laurent_exponent for m in ms]
    k0 = table.k0()
    plt.figure(figsize=(8, 4))
    colors = ["tab:gray" if e is None else ("tab:blue" if e == k0 else "tab:red") for e in exps]
    plt.bar(ms, [0 if e is None else e for e in exps], color=colors)
    for m, e in zip(ms, exps):
        if e is None:
            plt.text(m, 0.05, "0", ha="center", va="bottom", fontsize=8)
    plt.axhline(k0, color="black", linewidth=1, linestyle="--")
    plt.xlabel("m (degree 2m harmonics)")
    plt.ylabel("Laurent exponent")
    plt.title(f"Eigenvalue germs, n={table.n}, alpha0={table.alpha0} (k0={k0})")
    plt.tight_layout()
    if save_path:
        plt.savefig(save_path)
    plt.close()


def plot_mc_convergence(
    estimates: List[MCEstimate], exact: Optional[float] = None, save_path: Optional[str] = "mc_convergence.png"
) -> None:
    """Plot Monte-Carlo estimates with 2-sigma bars against the sample count.

    Args:
        estimates: Output of ``mc_convergence``.
        exact: Reference value drawn as a horizontal line, if known.
        save_path: Path to save the figure; if None, does not save.
    """
    xs = [e.samples for e in estimates]
    ys = [e.value for e in estimates]
    errs = [2 * (e.stderr or 0.0) for e in estimates]
    plt.figure(figsize=(8, 4))
    plt.errorbar(xs, ys, yerr=errs, fmt="o-", color="tab:blue", capsize=3)
    if exact is not None:
        plt.axhline(exact, color="tab:orange", linestyle="--", label="exact")
        plt.legend()
    plt.xscale("log", base=2)
    plt.xlabel("Samples")
    plt.ylabel("Estimate")
    plt.title("Cosine transform: Monte-Carlo convergence")
    plt.tight_layout()
    if save_path:
        plt.savefig(save_path)
    plt.close()


def plot_tower_graph(tower: TowerGraph, save_path: Optional[str] = "tower.png") -> None:
    """Draw the Φ-tower as a vertical path, reducible levels in red.

    Args:
        tower: TowerGraph instance.
        save_path: Path to save the figure; if None, does not save.
    """
    G = tower.graph
    pos = {k: (0.0, -float(k)) for k in G.nodes()}
    colors = ["salmon" if G.nodes[k]["reducible"] else "lightblue" for k in G.nodes()]

    plt.figure(figsize=(6, 1.5 + 1.2 * G.number_of_nodes()))
    nx.draw_networkx_nodes(G, pos, node_size=900, node_color=colors, edgecolors="navy", linewidths=2)
    nx.draw_networkx_edges(G, pos, width=2, alpha=0.6, edge_color="gray", arrows=True)
    nx.draw_networkx_labels(G, pos, font_size=11, font_weight="bold")
    for k in G.nodes():
        data = G.nodes[k]
        plt.text(0.08, -k, f"{data['label']}  (rank {data['rank']})", va="center", fontsize=9)

    plt.title("Phi tower")
    plt.xlim(-0.3, 1.5)
    plt.axis("off")
    plt.tight_layout()
    if save_path:
        plt.savefig(save_path, dpi=150, bbox_inches="tight")
    plt.close()

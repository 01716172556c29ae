from typing import List

import networkx as nx

from characters.character import Character
from characters.induced import normalize
from derivatives.phi import PhiValue, phi_tower
from derivatives.rank import orbit_dimension, rank_of_full
from reducibility.criteria import is_reducible_closed


class TowerGraph:
    """The Φ-tower of a descriptor as a directed path graph.

    Node ``k`` is Φ^k(rep), annotated with its rank, the dimension of its
    orbit and, for descriptors, the closed-form reducibility of the normalized
    chi x 1.  Edges k -> k + 1 are Φ-steps.

    Attributes:
        graph: NetworkX directed graph.
        tower: The underlying list of descriptors and the final character.
    """

    def __init__(self, rep: PhiValue) -> None:
        """Build the graph for ``rep``.

        Args:
            rep: A descriptor or a bare character.
        """
        self.graph = nx.DiGraph()
        self.tower: List[PhiValue] = phi_tower(rep)
        for depth, level in enumerate(self.tower):
            self.graph.add_node(depth, **self._annotate(level))
        for depth in range(len(self.tower) - 1):
            self.graph.add_edge(depth, depth + 1, step="phi")

    @staticmethod
    def _annotate(level: PhiValue) -> dict:
        rank = rank_of_full(level)
        if isinstance(level, Character):
            return {"label": str(level), "gl": level.p, "rank": 0, "orbit_dimension": 0, "reducible": False}
        chi, _ = normalize(level)
        verdict = is_reducible_closed(level.field, level.n, level.p1, chi)
        return {
            "label": str(level),
            "gl": level.n,
            "rank": rank,
            "orbit_dimension": orbit_dimension(level.n, rank),
            "reducible": verdict.reducible,
        }

    def depth(self) -> int:
        """Number of Φ-steps to the finite-dimensional end; equals the rank."""
        return self.graph.number_of_nodes() - 1

    def deepest_reducible_level(self) -> int:
        """Deepest level whose normalized series is still reducible, or -1."""
        hits = [k for k, data in self.graph.nodes(data=True) if data["reducible"]]
        return max(hits) if hits else -1

    def display_info(self) -> None:
        """Print one line per level of the tower."""
        print("Phi tower:")
        for k, data in self.graph.nodes(data=True):
            print(
                f"  - depth {k}: {data['label']} (rank {data['rank']}, "
                f"orbit dim {data['orbit_dimension']}, reducible={data['reducible']})"
            )

"""Rank of a degenerate principal series and the nilpotent orbits it reaches.

The rank of chi1 x chi2 is min(p1, p2): the number of Φ-steps needed to reach
a non-zero finite-dimensional representation.  Its associated variety is the
closure of the orbit of partition 2^r 1^{n-2r}.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

import networkx as nx

from characters.character import Character
from characters.errors import DomainError
from characters.induced import InducedRepDesc


@dataclass(frozen=True)
class PartitionTwoOne:
    """The partition of n with r parts equal to 2 and n - 2r parts equal to 1.

    The literature writes this partition as ``2^r 1^{n-r}`` while describing
    r blocks of size 2; block sizes only sum to n with n - 2r ones, which is
    what is stored.  ``literal_notation`` keeps the other rendering.
    """

    n: int
    r: int

    def __post_init__(self) -> None:
        if self.r < 0 or 2 * self.r > self.n:
            raise DomainError(f"partition 2^{self.r}1^{self.n - 2 * self.r} needs 0 <= 2r <= n (n = {self.n})")

    @property
    def parts(self) -> Tuple[int, ...]:
        return (2,) * self.r + (1,) * (self.n - 2 * self.r)

    def transpose(self) -> Tuple[int, ...]:
        if self.n == 0:
            return ()
        return (self.n - self.r, self.r) if self.r else (self.n,)

    def orbit_dimension(self) -> int:
        """dim O_lambda = n^2 - sum of squared parts of the transposed partition."""
        return self.n * self.n - sum(c * c for c in self.transpose())

    def dominates(self, other: "PartitionTwoOne") -> bool:
        """Dominance order; for these partitions it is just r >= other.r."""
        return self.n == other.n and self.r >= other.r

    @property
    def notation(self) -> str:
        return f"2^{self.r}1^{self.n - 2 * self.r}"

    @property
    def literal_notation(self) -> str:
        return f"2^{self.r}1^{self.n - self.r}"


def rank_of_full(rep: Union[InducedRepDesc, Character]) -> int:
    """min(p1, p2) for a descriptor, 0 for a finite-dimensional character."""
    if isinstance(rep, Character):
        return 0
    return min(rep.p1, rep.p2)


def orbit_dimension(n: int, rank: int) -> int:
    """Dimension 2 * rank * (n - rank) of the orbit 2^rank 1^{n - 2 rank}.

    Raises:
        DomainError: unless 0 <= rank <= n / 2.
    """
    if not isinstance(rank, int) or rank < 0 or 2 * rank > n:
        raise DomainError(f"rank must lie in [0, {n // 2}], got {rank!r}")
    return 2 * rank * (n - rank)


def closure_chain(n: int, r: int) -> List[PartitionTwoOne]:
    """Orbits 2^k 1^{n-2k} for k = 0..r, each in the closure of the next."""
    if r < 0 or 2 * r > n:
        raise DomainError(f"rank must lie in [0, {n // 2}], got {r!r}")
    return [PartitionTwoOne(n, k) for k in range(r + 1)]


class OrbitClosureGraph:
    """Closure order of the orbits reachable by representations of rank <= r.

    Attributes:
        graph: NetworkX directed graph; an edge a -> b means orbit a lies in
               the closure of orbit b.  Nodes carry ``dimension`` and ``partition``.
    """

    def __init__(self, n: int, r: int) -> None:
        self.n = n
        self.graph = nx.DiGraph()
        chain = closure_chain(n, r)
        for orbit in chain:
            self.graph.add_node(orbit.notation, rank=orbit.r, dimension=orbit.orbit_dimension(), partition=orbit.parts)
        for smaller, larger in zip(chain, chain[1:]):
            codim = larger.orbit_dimension() - smaller.orbit_dimension()
            self.graph.add_edge(smaller.notation, larger.notation, codim=codim)

    def in_closure(self, a: PartitionTwoOne, b: PartitionTwoOne) -> bool:
        """True when orbit ``a`` lies in the closure of orbit ``b``."""
        return a.notation == b.notation or nx.has_path(self.graph, a.notation, b.notation)

    def top(self) -> str:
        return next(node for node, deg in self.graph.out_degree() if deg == 0)

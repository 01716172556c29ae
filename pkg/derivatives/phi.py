"""The derivative functor Φ on descriptors of degenerate principal series."""

from typing import List, Union

from characters.character import Character, restrict
from characters.errors import DomainError
from characters.induced import InducedRepDesc

PhiValue = Union[InducedRepDesc, Character]


def phi(rep: PhiValue) -> PhiValue:
    """Apply Φ(chi1 x chi2) = chi1' x chi2'.

    When one block shrinks to GL_0 the result is the bare restriction of the
    other character; for n = 2 that is the empty character.

    Raises:
        DomainError: when ``rep`` is already a bare (finite-dimensional) character.
    """
    if isinstance(rep, Character):
        raise DomainError(f"Φ is applied to induced descriptors, got the character {rep}")
    if rep.n < 2:
        raise DomainError(f"Φ needs n >= 2, got {rep.n}")
    if rep.p1 == 1:
        return restrict(rep.chi2)
    if rep.p2 == 1:
        return restrict(rep.chi1)
    return InducedRepDesc(rep.field, rep.n - 2, rep.p1 - 1, rep.p2 - 1, restrict(rep.chi1), restrict(rep.chi2))


def phi_tower(rep: PhiValue) -> List[PhiValue]:
    """rep, Φ(rep), Φ²(rep), ... up to and including the first bare character."""
    tower: List[PhiValue] = [rep]
    while isinstance(tower[-1], InducedRepDesc):
        tower.append(phi(tower[-1]))
    return tower

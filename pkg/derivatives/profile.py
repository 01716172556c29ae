"""Composition-series profile of chi x 1."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from characters.character import Character, s_of
from characters.field import FieldKind
from reducibility.criteria import (
    ConditionMatch,
    FiniteDimWitness,
    check_domain,
    finite_dim_quotient,
    finite_dim_submodule,
    is_reducible_closed,
)

logger = logging.getLogger(__name__)

INTERTWINING_NOTE = (
    "the image of the standard intertwining operator I_chi: chi x 1 -> 1 x chi is the unique "
    "irreducible quotient of chi x 1 and the unique irreducible submodule of 1 x chi; "
    "I_chi is invertible exactly when chi x 1 is irreducible"
)


class Direction(str, Enum):
    DESCENDING_RANK = "DescendingRank"
    ASCENDING_RANK = "AscendingRank"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class CompositionProfile:
    """What is known about the composition series of chi x 1.

    Attributes:
        reducible: Closed-form verdict.
        direction: Order of constituent ranks, bottom to top, when reducible.
        rank_of_parent: r = min(p1, p2).
        length_exact: Exact length (non-archimedean only).
        length_bound: Upper bound on the length.
        finite_dim_constituent: The unique finite-dimensional constituent, if any.
        intertwining_image_note: Structural description of the image of I_chi.
        intertwining_invertible: Whether I_chi is an isomorphism.
        conditions: Matched reducibility conditions.
        notes: Warnings carried from the reducibility engine.
    """

    reducible: bool
    direction: Direction
    rank_of_parent: int
    length_exact: Optional[int]
    length_bound: int
    finite_dim_constituent: Optional[FiniteDimWitness]
    intertwining_image_note: str
    intertwining_invertible: bool
    conditions: Tuple[ConditionMatch, ...] = ()
    notes: Tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "reducible": self.reducible,
            "direction": self.direction.value,
            "rank_of_parent": self.rank_of_parent,
            "length_exact": self.length_exact,
            "length_bound": self.length_bound,
            "finite_dim_constituent": (
                None if self.finite_dim_constituent is None else self.finite_dim_constituent.to_json()
            ),
            "intertwining_image_note": self.intertwining_image_note,
            "intertwining_invertible": self.intertwining_invertible,
            "conditions": [c.to_json() for c in self.conditions],
            "notes": list(self.notes),
        }


def composition_profile(field: "FieldKind | str", n: int, p1: int, chi: Character) -> CompositionProfile:
    """Profile chi x 1: reducibility, rank direction, length and finite-dimensional member.

    Constituent ranks strictly descend (bottom to top) when s(chi) > 0 and
    strictly ascend when s(chi) <= 0.
    """
    field = FieldKind.parse(field)
    r = check_domain(field, n, p1, chi)
    verdict = is_reducible_closed(field, n, p1, chi)

    if not verdict.reducible:
        direction = Direction.NOT_APPLICABLE
    elif s_of(chi) > 0:
        direction = Direction.DESCENDING_RANK
    else:
        direction = Direction.ASCENDING_RANK

    sub = finite_dim_submodule(field, n, p1, chi)
    quot = finite_dim_quotient(field, n, p1, chi)
    if sub is not None and quot is not None:
        raise AssertionError(f"two finite-dimensional constituents found for {chi} x 1 on GL_{n}")
    constituent = sub or quot

    if field is FieldKind.NON_ARCHIMEDEAN:
        length_exact: Optional[int] = 2 if verdict.reducible else 1
        length_bound = length_exact
    else:
        length_exact = None
        length_bound = r + 1 if verdict.reducible else 1

    logger.debug("profile %s x 1 on GL_%d(%s): %s, %s", chi, n, field.value, verdict.reducible, direction.value)
    return CompositionProfile(
        reducible=verdict.reducible,
        direction=direction,
        rank_of_parent=r,
        length_exact=length_exact,
        length_bound=length_bound,
        finite_dim_constituent=constituent,
        intertwining_image_note=INTERTWINING_NOTE,
        intertwining_invertible=not verdict.reducible,
        conditions=verdict.matched_conditions,
        notes=verdict.notes,
    )

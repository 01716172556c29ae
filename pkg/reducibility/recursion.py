"""Reducibility by induction on r through the derivative Φ.

red(chi, n, p1) holds when chi x 1 has a finite-dimensional submodule or
quotient, or when r > 1 and red(chi', n - 2, p1 - 1) holds.
"""

import logging
from dataclasses import replace
from functools import lru_cache
from typing import Optional, Tuple

from characters.character import Character, restrict
from characters.field import FieldKind
from reducibility.criteria import (
    RAMIFIED_NOTE,
    FiniteDimWitness,
    Method,
    ReducibilityVerdict,
    check_domain,
    finite_dim_quotient,
    finite_dim_submodule,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=65536)
def _red(field: FieldKind, n: int, p1: int, chi: Character) -> Tuple[bool, Optional[FiniteDimWitness]]:
    witness = finite_dim_submodule(field, n, p1, chi) or finite_dim_quotient(field, n, p1, chi)
    if witness is not None:
        return True, witness
    if min(p1 - 1, n - p1 - 1) >= 1:
        found, inner = _red(field, n - 2, p1 - 1, restrict(chi))
        if found:
            return True, replace(inner, depth=inner.depth + 1)
    return False, None


def is_reducible_recursive(field: "FieldKind | str", n: int, p1: int, chi: Character) -> ReducibilityVerdict:
    """Decide reducibility by descending the Φ-tower.

    The witness reports the depth at which a finite-dimensional submodule
    or quotient first appears; the recursion is at most r - 1 deep.
    Results are memoized on (field, n, p1, chi).
    """
    field = FieldKind.parse(field)
    check_domain(field, n, p1, chi)
    found, witness = _red(field, n, p1, chi)
    logger.debug("recursive %s x 1 on GL_%d(%s): %s", chi, n, field.value, found)
    notes = (RAMIFIED_NOTE,) if chi.ramified else ()
    return ReducibilityVerdict(found, Method.RECURSIVE, (), witness, notes)


def clear_memo() -> None:
    _red.cache_clear()


def memo_info():
    return _red.cache_info()

"""Batch cross-checks between independent engines over bounded grids.

Grid kinds:

* ``closed_vs_recursive`` - closed-form vs recursive reducibility, duality of
  verdicts and finite-dimensional sides, non-archimedean structure.
* ``spectral_vs_exceptional`` - spectral invertibility at i = 1 vs the
  exceptional-exponent list.
* ``translation`` - exceptional-exponent list vs reducibility of the
  translated character (every i, not only r = 1).
* ``oracle`` - exact eigenvalue germs vs the quadrature oracle.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple

from characters.character import Character, invert, make_character
from characters.errors import GridError
from characters.field import FieldKind
from characters.rational import fraction_str
from derivatives.profile import composition_profile
from reducibility.criteria import Side, finite_dim_quotient, finite_dim_submodule, is_reducible_closed
from reducibility.recursion import is_reducible_recursive
from reporting.config import ToolkitConfig
from spectral.eigenvalues import eigenvalue_mero
from spectral.exceptional import invertibility_crosscheck, s_alpha_invertible
from spectral.invertibility import spectral_invertibility
from spectral.quadrature import eigenvalue_quadrature

logger = logging.getLogger(__name__)

MAX_N = 12
MAX_CELLS = 250_000
GRID_KINDS = ("closed_vs_recursive", "spectral_vs_exceptional", "translation", "oracle")


def _bound(params: Mapping[str, Any], key: str) -> Any:
    if key not in params:
        raise GridError("grid bound missing", field=key)
    return params[key]


def _int_bound(params: Mapping[str, Any], key: str, lo: int, hi: int) -> int:
    value = _bound(params, key)
    if not isinstance(value, int) or isinstance(value, bool) or not lo <= value <= hi:
        raise GridError(f"must be an integer in [{lo}, {hi}], got {value!r}", field=key)
    return value


def _int_list(params: Mapping[str, Any], key: str, lo: int, hi: int) -> List[int]:
    values = _bound(params, key)
    if not isinstance(values, list) or not values:
        raise GridError("must be a non-empty list", field=key)
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or not lo <= v <= hi:
            raise GridError(f"entries must be integers in [{lo}, {hi}], got {v!r}", field=key)
    return sorted(set(values))


def rational_grid(lo: int, hi: int, max_den: int) -> List[Fraction]:
    """All rationals in [lo, hi] with denominator <= max_den, ascending."""
    return sorted({Fraction(num, den) for den in range(1, max_den + 1) for num in range(lo * den, hi * den + 1)})


class CrosscheckGrid:
    """Run one bounded grid of consistency checks and record every cell.

    Attributes:
        kind: Which comparison is run.
        params: The validated grid description.
        cells: One record per cell: key, pass flag and detail.
    """

    def __init__(self, kind: str, params: Mapping[str, Any], config: Optional[ToolkitConfig] = None) -> None:
        """Validate the grid description.

        Args:
            kind: One of ``GRID_KINDS``.
            params: Grid bounds; every bound is required.
            config: Supplies the default truncation and quadrature tolerance.

        Raises:
            GridError: on a missing, malformed or too large grid.
        """
        if kind not in GRID_KINDS:
            raise GridError(f"must be one of {GRID_KINDS}, got {kind!r}", field="grid")
        self.kind = kind
        self.params = dict(params)
        self.config = config or ToolkitConfig()
        self.cells: List[Dict[str, Any]] = []
        self._plan = getattr(self, f"_plan_{kind}")()
        if self._plan[1] > MAX_CELLS:
            raise GridError(f"grid has {self._plan[1]} cells, more than {MAX_CELLS}", field="grid")

    # closed form vs recursion

    def _plan_closed_vs_recursive(self) -> Tuple[Iterator, int]:
        fields = [FieldKind.parse(f) for f in _bound(self.params, "fields")]
        n_max = _int_bound(self.params, "n_max", 2, MAX_N)
        lo = _int_bound(self.params, "nu_lo", -20, 20)
        hi = _int_bound(self.params, "nu_hi", lo, 20)
        max_den = _int_bound(self.params, "max_den", 1, 6)
        alpha_max = _int_bound(self.params, "alpha_max", 0, 6) if FieldKind.COMPLEX in fields else 0
        exps = rational_grid(lo, hi, max_den)

        def characters(field: FieldKind, p: int) -> Iterator[Character]:
            for s in exps:
                if field is FieldKind.REAL:
                    for sign in (0, 1):
                        yield make_character(field, p, sign_exp=sign, nu_exp=s)
                elif field is FieldKind.COMPLEX:
                    for a in range(-alpha_max, alpha_max + 1):
                        yield make_character(field, p, alpha_exp=a, nu_exp=s)
                else:
                    yield make_character(field, p, nu_exp=s)

        per_field = {FieldKind.REAL: 2, FieldKind.COMPLEX: 2 * alpha_max + 1, FieldKind.NON_ARCHIMEDEAN: 1}
        size = sum(per_field[f] * len(exps) * (n - 1) for f in fields for n in range(2, n_max + 1))
        cells = (
            (f, n, p1, chi)
            for f in fields
            for n in range(2, n_max + 1)
            for p1 in range(1, n)
            for chi in characters(f, p1)
        )
        return cells, size

    def _check_closed_vs_recursive(self, cell) -> Tuple[str, bool, Dict[str, Any]]:
        field, n, p1, chi = cell
        closed = is_reducible_closed(field, n, p1, chi).reducible
        recursive = is_reducible_recursive(field, n, p1, chi).reducible
        dual = is_reducible_closed(field, n, p1, invert(chi)).reducible
        sub, quot = finite_dim_submodule(field, n, p1, chi), finite_dim_quotient(field, n, p1, chi)
        dual_sub = finite_dim_submodule(field, n, p1, invert(chi))
        sides_flip = (quot is None) == (dual_sub is None) and (quot is None or quot.side is Side.QUOTIENT)
        ok = closed == recursive and closed == dual and sides_flip and not (sub and quot)
        detail: Dict[str, Any] = {"closed": closed, "recursive": recursive, "dual": dual}
        if field is FieldKind.NON_ARCHIMEDEAN:
            profile = composition_profile(field, n, p1, chi)
            at_edge = chi.nu_exp.is_real and abs(chi.nu_exp.re) == Fraction(n, 2)
            ok = ok and profile.length_exact == (2 if closed else 1)
            ok = ok and (profile.finite_dim_constituent is not None) == at_edge
            if at_edge and profile.finite_dim_constituent is not None:
                psi = profile.finite_dim_constituent.character_of_psi
                below = chi.nu_exp.re < 0
                expected = Fraction(-(n - p1), 2) if below else Fraction(p1, 2)
                side = Side.SUBMODULE if below else Side.QUOTIENT
                ok = ok and profile.finite_dim_constituent.side is side
                ok = ok and psi is not None and psi.p == n and psi.nu_exp.re == expected
                detail["psi"] = str(psi)
            detail["length_exact"] = profile.length_exact
        key = f"{field.value}/n={n}/p1={p1}/{chi}"
        return key, ok, detail

    # spectral invertibility vs the exceptional list

    def _plan_spectral_vs_exceptional(self) -> Tuple[Iterator, int]:
        ns = _int_list(self.params, "ns", 3, MAX_N)
        lo = _int_bound(self.params, "alpha_lo", -60, 60)
        hi = _int_bound(self.params, "alpha_hi", lo, 60)
        self.truncation = self.params.get("M", self.config.truncation)
        return ((n, a) for n in ns for a in range(lo, hi + 1)), len(ns) * (hi - lo + 1)

    def _check_spectral_vs_exceptional(self, cell) -> Tuple[str, bool, Dict[str, Any]]:
        n, a = cell
        spectral, table = spectral_invertibility(n, a, self.truncation)
        predicted = s_alpha_invertible(n, 1, a)
        details = {"spectral": spectral, "predicted": predicted, "k0": table.k0()}
        return f"n={n}/alpha={a}", spectral == predicted, details

    # exceptional list vs translated reducibility

    def _plan_translation(self) -> Tuple[Iterator, int]:
        ns = _int_list(self.params, "ns", 2, MAX_N)
        lo = _int_bound(self.params, "alpha_lo", -60, 60)
        hi = _int_bound(self.params, "alpha_hi", lo, 60)
        max_den = _int_bound(self.params, "max_den", 1, 6)
        all_i = bool(self.params.get("all_i", False))
        alphas = rational_grid(lo, hi, max_den)
        cells = [(n, i, a) for n in ns for i in (range(1, n) if all_i else (1,)) for a in alphas]
        return iter(cells), len(cells)

    def _check_translation(self, cell) -> Tuple[str, bool, Dict[str, Any]]:
        n, i, a = cell
        report = invertibility_crosscheck(n, i, a)
        return f"n={n}/i={i}/alpha={fraction_str(a)}", report.consistent, report.to_json()

    # exact germs vs quadrature

    def _plan_oracle(self) -> Tuple[Iterator, int]:
        ns = _int_list(self.params, "ns", 3, MAX_N)
        m_max = _int_bound(self.params, "m_max", 0, 40)
        alphas = [Fraction(a) for a in _bound(self.params, "alphas")]
        if any(a <= -1 for a in alphas):
            raise GridError("quadrature needs alpha > -1", field="alphas")
        self.tolerance = float(self.params.get("tolerance", 1e-8))
        cells = [(n, a, m) for n in ns for a in alphas for m in range(m_max + 1)]
        return iter(cells), len(cells)

    def _check_oracle(self, cell) -> Tuple[str, bool, Dict[str, Any]]:
        n, a, m = cell
        germ = eigenvalue_mero(n, a, m)
        exact = germ.value().real
        quad = eigenvalue_quadrature(n, float(a), m, tol=self.config.quad_tol)
        err = abs(exact - quad)
        details = {"exact": exact, "quadrature": quad, "error": err}
        return f"n={n}/alpha={fraction_str(a)}/m={m}", err <= self.tolerance, details

    def run(self) -> List[Dict[str, Any]]:
        """Evaluate every cell; the record list is sorted by cell key."""
        check = getattr(self, f"_check_{self.kind}")
        cells, size = self._plan
        logger.info("crosscheck %s: %d cells", self.kind, size)
        for cell in cells:
            key, ok, detail = check(cell)
            if not ok:
                logger.warning("crosscheck %s failed at %s: %s", self.kind, key, detail)
            self.cells.append({"key": key, "pass": ok, "detail": detail})
        self.cells.sort(key=lambda c: c["key"])
        return self.cells

    def summary(self) -> Dict[str, int]:
        passed = sum(1 for c in self.cells if c["pass"])
        return {"total": len(self.cells), "passed": passed, "failed": len(self.cells) - passed}


def crosscheck_grid(params: Mapping[str, Any], config: Optional[ToolkitConfig] = None) -> Dict[str, Any]:
    """Run the grid named by ``params["grid"]`` and return cells plus summary.

    ``params["cells"] = "failures"`` keeps only failing cells in the output.

    Raises:
        GridError: for an unknown grid kind or missing/unbounded bounds.
    """
    grid = CrosscheckGrid(params.get("grid"), params, config)
    cells = grid.run()
    if params.get("cells") == "failures":
        cells = [c for c in cells if not c["pass"]]
    return {"grid": grid.kind, "summary": grid.summary(), "cells": cells}

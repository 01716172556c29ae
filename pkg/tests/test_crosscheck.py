import unittest
from fractions import Fraction

from characters import GridError, ValidationError
from crosscheck import CrosscheckGrid, crosscheck_grid, rational_grid


class TestRationalGrid(unittest.TestCase):
    def test_grid_is_sorted_and_deduplicated(self):
        """Test that the rational grid has each value once, ascending."""
        grid = rational_grid(-1, 1, 2)
        self.assertEqual(grid, [Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)])


class TestGridValidation(unittest.TestCase):
    def test_unknown_kind(self):
        """Test that an unknown grid kind is refused."""
        with self.assertRaises(GridError):
            crosscheck_grid({"grid": "everything"})

    def test_missing_bound(self):
        """Test that every bound is required."""
        with self.assertRaises(GridError) as ctx:
            crosscheck_grid({"grid": "spectral_vs_exceptional", "ns": [3], "alpha_lo": -2})
        self.assertEqual(ctx.exception.field, "alpha_hi")
        self.assertIsInstance(ctx.exception, ValidationError)

    def test_bound_too_large(self):
        """Test that n beyond the maximum is refused."""
        with self.assertRaises(GridError):
            CrosscheckGrid("closed_vs_recursive", {"fields": ["R"], "n_max": 50, "nu_lo": 0, "nu_hi": 1, "max_den": 1})


class TestGrids(unittest.TestCase):
    def test_closed_vs_recursive(self):
        """Test closed form, recursion, duality and NA structure for every field, n <= 8, denominators <= 4."""
        params = {
            "grid": "closed_vs_recursive",
            "fields": ["R", "C", "NA"],
            "n_max": 8,
            "nu_lo": -6,
            "nu_hi": 6,
            "max_den": 4,
            "alpha_max": 3,
        }
        result = crosscheck_grid(params)
        self.assertEqual(result["summary"]["failed"], 0)
        # 73 exponents in [-6, 6] with denominator <= 4; sum of (n - 1) over n = 2..8 is 28
        self.assertEqual(result["summary"]["total"], (2 + 7 + 1) * 73 * 28)
        self.assertEqual(len(rational_grid(-6, 6, 4)), 73)
        keys = [c["key"] for c in result["cells"]]
        self.assertEqual(keys, sorted(keys))

    def test_spectral_vs_exceptional(self):
        """Test spectral invertibility against the exceptional list."""
        params = {"grid": "spectral_vs_exceptional", "ns": [3, 4, 7], "alpha_lo": -16, "alpha_hi": 8, "M": 24}
        result = crosscheck_grid(params)
        self.assertEqual(result["summary"], {"total": 75, "passed": 75, "failed": 0})

    def test_translation_all_i(self):
        """Test the translation check for every i."""
        result = crosscheck_grid(
            {"grid": "translation", "ns": [5, 6], "alpha_lo": -10, "alpha_hi": 4, "max_den": 2, "all_i": True}
        )
        self.assertEqual(result["summary"]["failed"], 0)
        self.assertEqual(result["summary"]["total"], (4 + 5) * 29)

    def test_oracle_failures_only(self):
        """Test the oracle grid and the failures-only cell filter."""
        params = {
            "grid": "oracle",
            "ns": [3, 4, 5, 6],
            "m_max": 10,
            "alphas": ["-1/2", 0, 1, "5/2"],
            "cells": "failures",
        }
        result = crosscheck_grid(params)
        self.assertEqual(result["summary"]["total"], 4 * 4 * 11)
        self.assertEqual(result["summary"]["failed"], 0)
        self.assertEqual(result["cells"], [])

    def test_oracle_refuses_divergent_alpha(self):
        """Test that the oracle grid needs alpha > -1."""
        with self.assertRaises(GridError):
            crosscheck_grid({"grid": "oracle", "ns": [3], "m_max": 1, "alphas": [-1]})


if __name__ == "__main__":
    unittest.main()

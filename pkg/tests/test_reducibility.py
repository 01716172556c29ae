import unittest
from fractions import Fraction

from characters import DomainError, ValidationError, invert, make_character, parse_character
from reducibility import (
    ConditionTag,
    Method,
    Side,
    clear_memo,
    finite_dim_quotient,
    finite_dim_submodule,
    is_reducible_closed,
    is_reducible_recursive,
    length_upper_bound,
    memo_info,
)


def tags(verdict):
    return {m.tag for m in verdict.matched_conditions}


class TestClosedForm(unittest.TestCase):
    def test_real_condition_two(self):
        """Test that eps nu^{5/2} x 1 on GL_3(R) matches condition II with k = 2."""
        chi = parse_character("eps*nu^{5/2}", "R", 1)
        verdict = is_reducible_closed("R", 3, 1, chi)
        self.assertTrue(verdict.reducible)
        self.assertEqual(verdict.method, Method.CLOSED_FORM)
        match = next(m for m in verdict.matched_conditions if m.tag is ConditionTag.II)
        self.assertEqual(match.k, 2)

    def test_real_sign_matters(self):
        """Test that dropping the sign character makes the same series irreducible."""
        chi = parse_character("nu^{5/2}", "R", 1)
        self.assertFalse(is_reducible_closed("R", 3, 1, chi).reducible)

    def test_real_condition_one(self):
        """Test condition I with k = 0 on GL_4(R), p1 = 2."""
        verdict = is_reducible_closed("R", 4, 2, parse_character("nu^2", "R", 2))
        self.assertIn(ConditionTag.I, tags(verdict))
        self.assertEqual(verdict.matched_conditions[0].k, 0)

    def test_real_condition_three(self):
        """Test condition III for r = 2 with either sign character."""
        # k - r + n/2 + 1 = 1 - 2 + 2 + 1 = 2
        for text in ("nu^2", "eps*nu^2"):
            verdict = is_reducible_closed("R", 4, 2, parse_character(text, "R", 2))
            self.assertIn(ConditionTag.III, tags(verdict))

    def test_complex_boundary_is_strict(self):
        """Test that alpha nu x 1 on GL_2(C) sits on the strict inequality and is irreducible."""
        chi = parse_character("alpha*nu^{1}", "C", 1)
        self.assertFalse(is_reducible_closed("C", 2, 1, chi).reducible)

    def test_complex_condition_four(self):
        """Test that alpha nu^2 x 1 on GL_4(C), p1 = 2, is reducible by condition IV."""
        verdict = is_reducible_closed("C", 4, 2, parse_character("alpha*nu^2", "C", 2))
        self.assertTrue(verdict.reducible)
        self.assertIn(ConditionTag.IV, tags(verdict))

    def test_non_archimedean(self):
        """Test the non-archimedean criterion nu^{±(k - n/2)}, 0 <= k <= r - 1."""
        self.assertTrue(is_reducible_closed("NA", 5, 2, make_character("NA", 2, nu_exp="5/2")).reducible)
        self.assertTrue(is_reducible_closed("NA", 5, 2, make_character("NA", 2, nu_exp="-3/2")).reducible)
        self.assertFalse(is_reducible_closed("NA", 5, 2, make_character("NA", 2, nu_exp="1/2")).reducible)

    def test_non_real_exponent_irreducible(self):
        """Test that a non-real nu exponent never matches."""
        chi = parse_character("nu^{-3/2+1i}", "R", 1)
        self.assertFalse(is_reducible_closed("R", 3, 1, chi).reducible)

    def test_ramified_note(self):
        """Test that ramified characters are irreducible with a note."""
        chi = make_character("NA", 2, nu_exp="5/2", ramified=True)
        with self.assertLogs("reducibility.criteria", level="WARNING"):
            verdict = is_reducible_closed("NA", 5, 2, chi)
        self.assertFalse(verdict.reducible)
        self.assertTrue(any("ramified" in note for note in verdict.notes))

    def test_duality(self):
        """Test that chi x 1 and chi^-1 x 1 have the same verdict on a few samples."""
        samples = [
            ("R", 5, 2, parse_character("eps*nu^{7/2}", "R", 2)),
            ("C", 6, 3, parse_character("alpha^2*nu^{4}", "C", 3)),
            ("NA", 6, 3, make_character("NA", 3, nu_exp=-2)),
        ]
        for field, n, p1, chi in samples:
            self.assertEqual(
                is_reducible_closed(field, n, p1, chi).reducible,
                is_reducible_closed(field, n, p1, invert(chi)).reducible,
            )

    def test_domain_errors(self):
        """Test that p1 outside [1, n-1] and mismatched characters are refused."""
        chi = make_character("R", 3)
        with self.assertRaises(DomainError):
            is_reducible_closed("R", 3, 3, chi)
        with self.assertRaises(ValidationError):
            is_reducible_closed("R", 4, 2, chi)
        with self.assertRaises(ValidationError):
            is_reducible_closed("C", 4, 3, chi)


class TestFiniteDimensional(unittest.TestCase):
    def test_real_submodule_and_quotient(self):
        """Test the one-dimensional submodule of nu^{-3/2} x 1 and quotient of its inverse."""
        sub = finite_dim_submodule("R", 3, 1, make_character("R", 1, nu_exp="-3/2"))
        self.assertEqual(sub.side, Side.SUBMODULE)
        self.assertEqual(sub.k, 0)
        self.assertEqual(sub.character_of_psi.nu_exp.re, Fraction(-1))
        quot = finite_dim_quotient("R", 3, 1, make_character("R", 1, nu_exp="3/2"))
        self.assertEqual(quot.side, Side.QUOTIENT)
        self.assertEqual(quot.character_of_psi.nu_exp.re, Fraction(1, 2))

    def test_real_higher_dimensional(self):
        """Test that eps nu^{-5/2} x 1 on GL_3(R) has a k = 1 submodule without a character."""
        sub = finite_dim_submodule("R", 3, 1, parse_character("eps*nu^{-5/2}", "R", 1))
        self.assertEqual(sub.k, 1)
        self.assertIsNone(sub.character_of_psi)
        self.assertIsNone(finite_dim_submodule("R", 3, 1, parse_character("nu^{-5/2}", "R", 1)))

    def test_complex_submodule(self):
        """Test the complex (k, l) witness alpha^{(l-k)/2} nu^{-(k+l+n)/2}."""
        sub = finite_dim_submodule("C", 2, 1, parse_character("alpha*nu^{-2}", "C", 1))
        self.assertEqual((sub.k, sub.l), (0, 2))
        self.assertIsNone(finite_dim_submodule("C", 2, 1, parse_character("alpha^2*nu^{-2}", "C", 1)))

    def test_non_archimedean_quotient(self):
        """Test that nu^{5/2} x 1 on GL_5 has the quotient nu^{p1/2}."""
        chi = make_character("NA", 2, nu_exp="5/2")
        self.assertIsNone(finite_dim_submodule("NA", 5, 2, chi))
        quot = finite_dim_quotient("NA", 5, 2, chi)
        self.assertEqual(quot.side, Side.QUOTIENT)
        self.assertEqual(quot.character_of_psi.nu_exp.re, Fraction(1))
        self.assertEqual(quot.character_of_psi.p, 5)

    def test_length_bound(self):
        """Test length bounds: r + 1 over R, exactly 2 over NA, 1 when irreducible."""
        self.assertEqual(length_upper_bound("R", 4, 2, parse_character("nu^2", "R", 2)), 3)
        self.assertEqual(length_upper_bound("NA", 5, 2, make_character("NA", 2, nu_exp="5/2")), 2)
        self.assertEqual(length_upper_bound("R", 3, 1, parse_character("nu^{5/2}", "R", 1)), 1)


class TestRecursive(unittest.TestCase):
    def setUp(self):
        clear_memo()

    def test_witness_at_depth_one(self):
        """Test that nu x 1 on GL_4(R), p1 = 2, is found one Φ-step down."""
        verdict = is_reducible_recursive("R", 4, 2, make_character("R", 2, nu_exp=1))
        self.assertTrue(verdict.reducible)
        self.assertEqual(verdict.method, Method.RECURSIVE)
        self.assertEqual(verdict.witness.depth, 1)
        self.assertEqual(verdict.witness.side, Side.QUOTIENT)

    def test_agrees_with_closed_form(self):
        """Test agreement with the closed form over every field, n <= 8 and denominators <= 4."""
        exponents = sorted({Fraction(num, den) for den in range(1, 5) for num in range(-6 * den, 6 * den + 1)})
        for n in range(2, 9):
            for p1 in range(1, n):
                for s in exponents:
                    for sign in (0, 1):
                        chi = make_character("R", p1, sign_exp=sign, nu_exp=s)
                        self.assertEqual(
                            is_reducible_closed("R", n, p1, chi).reducible,
                            is_reducible_recursive("R", n, p1, chi).reducible,
                            msg=f"R n={n} p1={p1} {chi}",
                        )
                    for a in range(-3, 4):
                        chi = make_character("C", p1, alpha_exp=a, nu_exp=s)
                        self.assertEqual(
                            is_reducible_closed("C", n, p1, chi).reducible,
                            is_reducible_recursive("C", n, p1, chi).reducible,
                            msg=f"C n={n} p1={p1} {chi}",
                        )
                    chi = make_character("NA", p1, nu_exp=s)
                    self.assertEqual(
                        is_reducible_closed("NA", n, p1, chi).reducible,
                        is_reducible_recursive("NA", n, p1, chi).reducible,
                        msg=f"NA n={n} p1={p1} {chi}",
                    )

    def test_memoized(self):
        """Test that repeated queries hit the cache."""
        chi = make_character("NA", 3, nu_exp=-2)
        is_reducible_recursive("NA", 6, 3, chi)
        is_reducible_recursive("NA", 6, 3, chi)
        self.assertGreaterEqual(memo_info().hits, 1)


if __name__ == "__main__":
    unittest.main()

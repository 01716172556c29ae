import unittest
from fractions import Fraction

from characters import Character, DomainError, induced_from, make_character, parse_character
from derivatives import (
    Direction,
    OrbitClosureGraph,
    PartitionTwoOne,
    TowerGraph,
    closure_chain,
    composition_profile,
    orbit_dimension,
    phi,
    phi_tower,
    rank_of_full,
)
from characters.induced import InducedRepDesc
from reducibility import Side


class TestPhi(unittest.TestCase):
    def test_phi_shrinks_both_blocks(self):
        """Test Φ(chi1 x chi2) = chi1' x chi2' on GL_{n-2}."""
        rep = induced_from("R", 5, 2, parse_character("eps*nu^{3/2}", "R", 2))
        child = phi(rep)
        self.assertIsInstance(child, InducedRepDesc)
        self.assertEqual((child.n, child.p1, child.p2), (3, 1, 2))
        self.assertEqual(child.chi1.nu_exp, rep.chi1.nu_exp)

    def test_phi_to_character(self):
        """Test that a block of size 1 leaves the restriction of the other character."""
        rep = induced_from("R", 3, 1, make_character("R", 1, nu_exp=2))
        child = phi(rep)
        self.assertIsInstance(child, Character)
        self.assertEqual(child.p, 1)
        self.assertEqual(child.nu_exp.re, 0)

    def test_phi_of_character(self):
        """Test that Φ is not applied to a bare character."""
        with self.assertRaises(DomainError):
            phi(make_character("R", 2))

    def test_tower_length_is_rank(self):
        """Test that the tower reaches a character after exactly r steps."""
        for n, p1 in [(2, 1), (5, 2), (6, 3), (7, 5)]:
            rep = induced_from("NA", n, p1, make_character("NA", p1))
            tower = phi_tower(rep)
            self.assertEqual(len(tower) - 1, rank_of_full(rep))
            self.assertIsInstance(tower[-1], Character)

    def test_n_two_gives_empty_character(self):
        """Test that Φ of a GL_2 series is the empty character."""
        child = phi(induced_from("C", 2, 1, make_character("C", 1)))
        self.assertTrue(child.is_empty)


class TestRank(unittest.TestCase):
    def test_orbit_dimension(self):
        """Test dim O_{2^r 1^{n-2r}} = 2 r (n - r) against the transpose formula."""
        for n in range(2, 9):
            for r in range(0, n // 2 + 1):
                self.assertEqual(orbit_dimension(n, r), PartitionTwoOne(n, r).orbit_dimension())

    def test_orbit_dimension_out_of_range(self):
        """Test that a rank above n/2 is refused."""
        with self.assertRaises(DomainError):
            orbit_dimension(5, 3)

    def test_notation(self):
        """Test both renderings of the partition."""
        orbit = PartitionTwoOne(4, 1)
        self.assertEqual(orbit.parts, (2, 1, 1))
        self.assertEqual(orbit.notation, "2^11^2")
        self.assertEqual(orbit.literal_notation, "2^11^3")

    def test_closure_chain_dominance(self):
        """Test that the closure chain increases in dominance and dimension."""
        chain = closure_chain(6, 3)
        self.assertEqual([o.r for o in chain], [0, 1, 2, 3])
        for a, b in zip(chain, chain[1:]):
            self.assertTrue(b.dominates(a))
            self.assertLess(a.orbit_dimension(), b.orbit_dimension())

    def test_closure_graph(self):
        """Test closure queries and the top orbit."""
        graph = OrbitClosureGraph(4, 2)
        self.assertEqual(graph.top(), "2^21^0")
        self.assertTrue(graph.in_closure(PartitionTwoOne(4, 0), PartitionTwoOne(4, 2)))
        self.assertFalse(graph.in_closure(PartitionTwoOne(4, 2), PartitionTwoOne(4, 1)))
        self.assertEqual(graph.graph.edges["2^11^2", "2^21^0"]["codim"], 2)


class TestProfile(unittest.TestCase):
    def test_reducible_real_profile(self):
        """Test direction, length bound and finite-dimensional member of nu^2 x 1 on GL_4(R)."""
        profile = composition_profile("R", 4, 2, make_character("R", 2, nu_exp=2))
        self.assertTrue(profile.reducible)
        self.assertEqual(profile.direction, Direction.DESCENDING_RANK)
        self.assertEqual(profile.length_bound, 3)
        self.assertIsNone(profile.length_exact)
        self.assertEqual(profile.finite_dim_constituent.side, Side.QUOTIENT)
        self.assertFalse(profile.intertwining_invertible)

    def test_ascending_when_exponent_non_positive(self):
        """Test that s(chi) <= 0 gives ascending ranks."""
        profile = composition_profile("R", 4, 2, make_character("R", 2, nu_exp=-2))
        self.assertEqual(profile.direction, Direction.ASCENDING_RANK)
        self.assertEqual(profile.finite_dim_constituent.side, Side.SUBMODULE)

    def test_irreducible_profile(self):
        """Test the profile of an irreducible series."""
        profile = composition_profile("R", 3, 1, parse_character("nu^{5/2}", "R", 1))
        self.assertEqual(profile.direction, Direction.NOT_APPLICABLE)
        self.assertEqual(profile.length_bound, 1)
        self.assertTrue(profile.intertwining_invertible)

    def test_non_archimedean_exact_length(self):
        """Test that non-archimedean lengths are exact."""
        reducible = composition_profile("NA", 5, 2, make_character("NA", 2, nu_exp="5/2"))
        irreducible = composition_profile("NA", 5, 2, make_character("NA", 2, nu_exp="1/2"))
        self.assertEqual(reducible.length_exact, 2)
        self.assertEqual(irreducible.length_exact, 1)
        self.assertIn("finite_dim_constituent", reducible.to_json())

    def test_non_archimedean_one_dimensional_submodule(self):
        """Test the exact profile of nu^{-2} x 1 on GL_4 over a p-adic field."""
        profile = composition_profile("NA", 4, 2, make_character("NA", 2, nu_exp=-2))
        self.assertTrue(profile.reducible)
        self.assertEqual(profile.direction, Direction.ASCENDING_RANK)
        self.assertEqual(profile.length_exact, 2)
        witness = profile.finite_dim_constituent
        self.assertEqual(witness.side, Side.SUBMODULE)
        self.assertEqual(witness.character_of_psi.p, 4)
        self.assertEqual(witness.character_of_psi.nu_exp.re, Fraction(-1))
        self.assertEqual(witness.character_of_psi.nu_exp.im, 0)
        self.assertEqual(profile.to_json()["finite_dim_constituent"]["psi"], "nu^{-1}")

    def test_non_archimedean_one_dimensional_quotient(self):
        """Test that nu^2 x 1 on GL_1 x GL_3 has the quotient psi = nu^{1/2}."""
        profile = composition_profile("NA", 4, 1, make_character("NA", 1, nu_exp=2))
        self.assertEqual(profile.direction, Direction.DESCENDING_RANK)
        self.assertEqual(profile.finite_dim_constituent.side, Side.QUOTIENT)
        self.assertEqual(profile.finite_dim_constituent.character_of_psi.nu_exp.re, Fraction(1, 2))


class TestTowerGraph(unittest.TestCase):
    def test_annotations(self):
        """Test the rank, orbit dimension and reducibility recorded per level."""
        tower = TowerGraph(induced_from("R", 4, 2, make_character("R", 2, nu_exp=2)))
        self.assertEqual(tower.depth(), 2)
        ranks = [tower.graph.nodes[k]["rank"] for k in range(3)]
        self.assertEqual(ranks, [2, 1, 0])
        self.assertEqual(tower.graph.nodes[0]["orbit_dimension"], 8)
        self.assertEqual(tower.deepest_reducible_level(), 0)

    def test_irreducible_tower(self):
        """Test that a tower with no reducible level reports -1."""
        tower = TowerGraph(induced_from("R", 3, 1, parse_character("nu^{5/2}", "R", 1)))
        self.assertEqual(tower.deepest_reducible_level(), -1)


if __name__ == "__main__":
    unittest.main()

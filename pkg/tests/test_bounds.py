"""Regression tests for the quotient sandwich and the quotient genus bound."""

import unittest

from genus.bounds import (
    check_quotient_image,
    covers_of,
    quotient_genus_bound,
    quotients_of,
    sandwich_bound,
    satisfies_quotient_bound,
)
from genus.published_tables import published_genus
from genus.search import compute_genus
from genus.triples import TripleSignature
from groups.catalog import GroupSpec, quotient_images
from groups.permutation import Permutation
from groups.signed import SignedPermutation, SignVector, to_degree_2n
from utils.errors import InvariantViolation


class SandwichTests(unittest.TestCase):
    """Covers bound the triple from below, quotients from above."""

    def test_d17_triple_is_forced(self):
        bound = sandwich_bound(GroupSpec("D", 17), include_trivial=False)

        self.assertEqual(bound.forced, TripleSignature(2, 4, 6))
        self.assertEqual(bound.lower_source, GroupSpec("B", 17))
        self.assertEqual(bound.upper_source, GroupSpec("S", 17))

    def test_d7_is_not_forced(self):
        bound = sandwich_bound(GroupSpec("D", 7), include_trivial=False)

        self.assertIsNotNone(bound)
        self.assertIsNone(bound.forced)
        self.assertEqual(bound.lower, TripleSignature(2, 4, 6))
        self.assertEqual(bound.upper, TripleSignature(2, 3, 10))

    def test_trivial_relation_uses_the_group_itself(self):
        bound = sandwich_bound(GroupSpec("S", 5))

        self.assertEqual(bound.forced, TripleSignature(2, 4, 5))
        self.assertEqual(bound.upper_source, GroupSpec("S", 5))
        self.assertIsNone(sandwich_bound(GroupSpec("S", 5), include_trivial=False))

    def test_inconsistent_bounds_are_dropped(self):
        def known(spec):
            return TripleSignature(2, 3, 7) if spec.family == "B" else TripleSignature(2, 4, 5)

        self.assertIsNone(sandwich_bound(GroupSpec("D", 5), known=known, include_trivial=False))

    def test_groups_without_relations(self):
        self.assertIsNone(sandwich_bound(GroupSpec("F4"), include_trivial=False))
        self.assertEqual(quotients_of(GroupSpec("H3")), [])
        self.assertEqual(covers_of(GroupSpec("B", 5)), [])

    def test_catalogued_relations(self):
        self.assertEqual(covers_of(GroupSpec("S", 3)), [(GroupSpec("B", 3), 8)])
        self.assertEqual(covers_of(GroupSpec("D", 9)), [(GroupSpec("B", 9), 2)])
        self.assertEqual(quotients_of(GroupSpec("B", 5)), [(GroupSpec("S", 5), 32), (GroupSpec("D", 5), 2)])


class QuotientGenusTests(unittest.TestCase):
    """sigma(G/N) - 1 <= (sigma(G) - 1) / |N|."""

    def test_b5_over_s5(self):
        b5, s5 = published_genus(GroupSpec("B", 5)), published_genus(GroupSpec("S", 5))

        self.assertEqual(quotient_genus_bound(b5, 32), 10)
        self.assertTrue(satisfies_quotient_bound(s5, b5, 32))

    def test_published_quotients_respect_the_bound(self):
        for spec in (GroupSpec("B", n) for n in range(5, 9)):
            for target, kernel in quotients_of(spec):
                with self.subTest(source=str(spec), target=str(target)):
                    self.assertTrue(satisfies_quotient_bound(published_genus(target), published_genus(spec), kernel))

    def test_trivial_kernel(self):
        self.assertEqual(quotient_genus_bound(97, 1), 97)
        self.assertFalse(satisfies_quotient_bound(98, 97, 1))


class ComputedQuotientTests(unittest.TestCase):
    """Standard-tier B_n and D_n results against the results for their quotients."""

    SOURCES = [GroupSpec("B", n) for n in (3, 4, 5)] + [GroupSpec("D", n) for n in (4, 5, 6)]

    @classmethod
    def setUpClass(cls):
        cls.results = {spec: compute_genus(spec)[1] for spec in cls.SOURCES}
        targets = {rel.target for spec in cls.SOURCES for rel in quotient_images(spec)}
        cls.genera = {spec: compute_genus(spec)[1].genus for spec in targets}
        cls.genera.update((spec, result.genus) for spec, result in cls.results.items())

    def test_computed_genera_respect_the_quotient_bound(self):
        for spec in self.SOURCES:
            for relation in quotient_images(spec):
                with self.subTest(source=str(spec), target=str(relation.target)):
                    self.assertTrue(satisfies_quotient_bound(
                        self.genera[relation.target], self.genera[spec], relation.kernel_order))

    def test_witness_images_generate_the_quotient(self):
        """Images of a (p, q, r) pair generate G/N with orders dividing p, q and r."""
        for spec, result in self.results.items():
            witness = result.witness
            for relation in quotient_images(spec):
                with self.subTest(source=str(spec), target=str(relation.target)):
                    px, py = check_quotient_image(relation, witness.triple, witness.x, witness.y)
                    for want, got in zip(witness.triple.as_tuple(), (px.order(), py.order(), (px * py).order())):
                        self.assertEqual(want % got, 0)

    def test_images_that_miss_the_quotient_are_invariant_violations(self):
        relation = quotient_images(GroupSpec("B", 4))[0]
        x = to_degree_2n(SignedPermutation(Permutation.parse("(1 2)", degree=4), SignVector.zeros(4)))
        y = to_degree_2n(SignedPermutation(Permutation.parse("(1 2)(3 4)", degree=4), SignVector.zeros(4)))

        with self.assertRaises(InvariantViolation):
            check_quotient_image(relation, TripleSignature(2, 2, 2), x, y)


if __name__ == "__main__":
    unittest.main()

"""Regression tests for minimal generating pair search and the genus pipeline."""

import unittest

from genus.search import (
    EXACT,
    EXHAUSTIVE,
    HEURISTIC,
    LIFTED,
    SANDWICH,
    UPPER_BOUND,
    PairWitness,
    arrange_pair,
    compute_genus,
    exactness_for,
    first_hyperbolic_triple,
    heuristic_minimal,
    heuristic_pair,
    is_provably_minimal,
    make_result,
    minimal_pair,
    search_triple,
)
from genus.triples import TripleSignature, enumerate_triples
from groups.catalog import GroupSpec, parse_spec, realize
from groups.permutation import Permutation
from utils.errors import CapabilityError, InvariantViolation, VerificationError


def _search(text):
    realization = realize(parse_spec(text))
    return realization, minimal_pair(realization.handle, realization.spec)


class ExhaustiveSearchTests(unittest.TestCase):
    """Minimal triples of small groups by exhaustive search."""

    def test_known_minimal_triples(self):
        cases = {
            "S4": ((2, 3, 4), 0),
            "G2": ((2, 2, 6), 0),
            "S5": ((2, 4, 5), 4),
            "H3": ((2, 3, 10), 5),
            "F4": ((2, 6, 6), 97),
            "Dih7": ((2, 2, 7), 0),
        }
        for text, (triple, genus) in cases.items():
            with self.subTest(group=text):
                realization, result = _search(text)
                self.assertEqual(result.triple.as_tuple(), triple)
                self.assertEqual(result.genus, genus)
                self.assertEqual(result.method, EXHAUSTIVE)
                result.witness.verify(realization.handle)

    def test_d4_genus(self):
        realization, result = _search("D4")

        self.assertEqual(result.genus, 17)
        self.assertTrue(result.is_exact)
        result.witness.verify(realization.handle)

    def test_s5_has_no_pair_with_orders_two_and_three(self):
        handle = realize(GroupSpec("S", 5)).handle
        for r in (4, 5, 6):
            with self.subTest(r=r):
                self.assertIsNone(search_triple(handle, TripleSignature(2, 3, r)))

    def test_no_earlier_triple_has_a_witness(self):
        for text in ("S5", "H3"):
            realization, result = _search(text)
            spec, handle = realization.spec, realization.handle
            parity = spec.family in ("S", "D")
            with self.subTest(group=text):
                for triple in enumerate_triples(handle.order_spectrum(), parity):
                    if triple == result.triple:
                        break
                    self.assertIsNone(search_triple(handle, triple))

    def test_triple_outside_the_spectrum(self):
        handle = realize(GroupSpec("S", 5)).handle
        self.assertIsNone(search_triple(handle, TripleSignature(2, 3, 7)))

    def test_two_point_group_has_no_pair(self):
        realization = realize(GroupSpec("S", 2))
        with self.assertRaises(CapabilityError):
            minimal_pair(realization.handle, realization.spec)

    def test_search_over_threshold_is_capability_error(self):
        handle = realize(GroupSpec("S", 6), threshold=100).handle
        with self.assertRaises(CapabilityError):
            search_triple(handle, TripleSignature(2, 5, 6))


class WitnessTests(unittest.TestCase):
    """Witness re-verification and rearrangement."""

    def setUp(self):
        self.realization, self.result = _search("S5")

    def test_witness_orders(self):
        self.assertEqual(self.result.witness.orders(), (2, 4, 5))

    def test_tampered_witness_fails_verification(self):
        witness = self.result.witness
        tampered = PairWitness(witness.triple, Permutation.identity(5), witness.y, witness.provenance)

        with self.assertRaises(VerificationError):
            tampered.verify(self.realization.handle)

    def test_wrong_degree_fails_verification(self):
        witness = self.result.witness
        tampered = PairWitness(witness.triple, Permutation.identity(6), witness.y, witness.provenance)

        with self.assertRaises(VerificationError):
            tampered.verify(self.realization.handle)

    def test_arrange_pair_reaches_every_order_arrangement(self):
        x, y = self.result.witness.x, self.result.witness.y
        for target in ((2, 4, 5), (4, 2, 5), (5, 4, 2), (4, 5, 2), (2, 5, 4), (5, 2, 4)):
            arranged = arrange_pair(x, y, _ordered(*target))
            with self.subTest(target=target):
                self.assertIsNotNone(arranged)
                a, b = arranged
                self.assertEqual((a.order(), b.order(), (a * b).order()), target)
                self.assertTrue(self.realization.handle.is_generating_pair(a, b))

    def test_arrange_pair_with_foreign_orders(self):
        x, y = self.result.witness.x, self.result.witness.y
        self.assertIsNone(arrange_pair(x, y, TripleSignature(2, 3, 7)))


class _ordered(TripleSignature):
    """Triple that keeps its entries in the order given."""

    def __init__(self, p, q, r):
        self.p, self.q, self.r = p, q, r


class ExactnessTests(unittest.TestCase):
    """Exactness labels and provable minimality."""

    def test_exactness_by_kind(self):
        self.assertEqual(exactness_for(TripleSignature(2, 3, 4)), EXACT)
        self.assertEqual(exactness_for(TripleSignature(2, 4, 4)), UPPER_BOUND)
        self.assertEqual(exactness_for(TripleSignature(2, 6, 6)), EXACT)
        self.assertEqual(exactness_for(TripleSignature(3, 4, 5)), UPPER_BOUND)

    def test_first_hyperbolic_triple(self):
        self.assertEqual(first_hyperbolic_triple({1, 2, 3, 4, 5, 6}, True), TripleSignature(2, 4, 5))
        self.assertEqual(first_hyperbolic_triple({1, 2, 3, 4, 5, 6}, False), TripleSignature(2, 4, 5))
        self.assertEqual(first_hyperbolic_triple({1, 2, 3, 7}, False), TripleSignature(2, 3, 7))
        self.assertIsNone(first_hyperbolic_triple({1, 2, 3}, False))

    def test_provable_minimality(self):
        spectrum = {1, 2, 3, 4, 5, 6}
        self.assertTrue(is_provably_minimal(GroupSpec("S", 5), spectrum, TripleSignature(2, 4, 5)))
        self.assertFalse(is_provably_minimal(GroupSpec("S", 5), spectrum, TripleSignature(2, 5, 6)))
        self.assertFalse(is_provably_minimal(GroupSpec("S", 4), {1, 2, 3, 4}, TripleSignature(2, 4, 4)))

    def test_parity_is_enforced_on_results(self):
        with self.assertRaises(InvariantViolation):
            make_result(GroupSpec("S", 5), 120, TripleSignature(3, 3, 4), None, EXHAUSTIVE, EXACT)


class HeuristicSearchTests(unittest.TestCase):
    """Seeded random search."""

    def test_zero_budget_finds_nothing(self):
        handle = realize(GroupSpec("S", 5)).handle
        self.assertIsNone(heuristic_pair(handle, TripleSignature(2, 4, 5), budget=0, seed=0))

    def test_heuristic_result_on_s5_is_provably_minimal(self):
        realization = realize(GroupSpec("S", 5))
        result = heuristic_minimal(realization, budget=5000, seed=0)

        self.assertEqual(result.triple, TripleSignature(2, 4, 5))
        self.assertEqual(result.method, HEURISTIC)
        self.assertEqual(result.exactness, EXACT)
        result.witness.verify(realization.handle)

    def test_heuristic_result_on_s6_is_an_upper_bound(self):
        realization = realize(GroupSpec("S", 6))
        result = heuristic_minimal(realization, budget=5000, seed=1)

        self.assertEqual(result.triple, TripleSignature(2, 5, 6))
        self.assertEqual(result.genus, 49)
        self.assertEqual(result.exactness, UPPER_BOUND)
        result.witness.verify(realization.handle)

    def test_same_seed_same_witness(self):
        handle = realize(GroupSpec("S", 5)).handle
        first = heuristic_pair(handle, TripleSignature(2, 4, 5), budget=5000, seed=7)
        second = heuristic_pair(handle, TripleSignature(2, 4, 5), budget=5000, seed=7)

        self.assertIsNotNone(first)
        self.assertEqual((first.x, first.y), (second.x, second.y))


class PipelineTests(unittest.TestCase):
    """compute_genus stage selection."""

    def test_exhaustive_stage_keeps_the_realization_note(self):
        _, result = compute_genus(GroupSpec("D", 3))

        self.assertEqual(result.triple, TripleSignature(2, 3, 4))
        self.assertEqual(result.genus, 0)
        self.assertEqual(result.note, "D3 = Σ4; realized as Σ4")

    def test_forced_triple_skips_the_search(self):
        realization, result = compute_genus(GroupSpec("D", 9))

        self.assertEqual(result.method, SANDWICH)
        self.assertIsNone(result.witness)
        self.assertEqual(result.triple, TripleSignature(2, 4, 6))
        self.assertEqual(result.genus, 1 + realization.order // 24)

    def test_tied_sandwich_reports_the_published_triple(self):
        """D13 and D29 are bracketed by (2,4,6) bounds; the published (2,3,12) has the same defect."""
        for n in (13, 29):
            with self.subTest(n=n):
                realization, result = compute_genus(GroupSpec("D", n))

                self.assertEqual(result.method, SANDWICH)
                self.assertEqual(result.triple, TripleSignature(2, 3, 12))
                self.assertEqual(result.genus, 1 + realization.order // 24)
                self.assertTrue(result.note.startswith("defect forced between"))

    def test_dn_over_threshold_is_lifted_from_sn(self):
        realization, result = compute_genus(GroupSpec("D", 5), threshold=1000)

        self.assertEqual(result.method, LIFTED)
        self.assertEqual(result.triple, TripleSignature(2, 4, 5))
        self.assertEqual(result.genus, 49)
        self.assertTrue(result.is_exact)
        result.witness.verify(realization.handle)

    def test_large_group_without_heuristic_is_refused_early(self):
        with self.assertRaises(CapabilityError):
            compute_genus(GroupSpec("B", 99))

    def test_over_threshold_without_lift_or_heuristic(self):
        with self.assertRaises(CapabilityError):
            compute_genus(GroupSpec("B", 5), threshold=1000)

    def test_progress_callback_sees_each_triple(self):
        seen = []
        compute_genus(GroupSpec("S", 5), progress=seen.append)

        self.assertTrue(seen)
        self.assertTrue(seen[-1].endswith("trying (2,4,5)"))


if __name__ == "__main__":
    unittest.main()

"""Regression tests for permutation arithmetic and cycle notation."""

from collections import Counter
from itertools import permutations
import random
import unittest

from groups.permutation import (
    CycleType,
    Permutation,
    compose,
    cycle_structure,
    elements_of_cycle_type,
    fixed_points,
    inverse,
    order,
)
from utils.errors import SpecParseError, StructuralError


def _random_perm(rng: random.Random, degree: int) -> Permutation:
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(images)


class CompositionTests(unittest.TestCase):
    """Products read left to right: apply the left factor first."""

    def test_compose_transpositions_gives_left_to_right_three_cycle(self):
        a = Permutation.parse("(1 2)", degree=3)
        b = Permutation.parse("(2 3)", degree=3)

        self.assertEqual(compose(a, b), Permutation.parse("(1 3 2)", degree=3))
        self.assertEqual(str(a * b), "(1 3 2)")

    def test_identity_and_inverse_laws(self):
        rng = random.Random(7)
        for _ in range(50):
            x = _random_perm(rng, 9)
            e = Permutation.identity(9)
            with self.subTest(x=str(x)):
                self.assertEqual(compose(e, x), x)
                self.assertEqual(compose(x, inverse(x)), e)
                self.assertEqual(order(x), order(inverse(x)))

    def test_inverse_of_random_degree_nine_permutation_is_pointwise_inverse(self):
        c = _random_perm(random.Random(3), 9)
        d = inverse(c)
        for point in range(1, 10):
            self.assertEqual(d(c(point)), point)

    def test_compose_is_associative_and_sign_is_multiplicative(self):
        rng = random.Random(11)
        for _ in range(100):
            a, b, c = (_random_perm(rng, 8) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual((a * b).parity(), a.parity() * b.parity())
            self.assertEqual(order(a * b), order(b * a))

    def test_degree_mismatch_is_structural_error(self):
        with self.assertRaises(StructuralError):
            compose(Permutation.identity(3), Permutation.identity(4))

    def test_non_bijection_is_rejected(self):
        with self.assertRaises(StructuralError):
            Permutation([0, 0, 1])


class OrderAndCycleTests(unittest.TestCase):
    """Orders and cycle types."""

    def test_orders(self):
        self.assertEqual(order(Permutation.identity(5)), 1)
        self.assertEqual(order(Permutation.parse("(1 2)(3 4 5)")), 6)

    def test_order_matches_iterated_composition(self):
        rng = random.Random(12)
        for _ in range(30):
            x = _random_perm(rng, 12)
            power, k = x, 1
            while not power.is_identity():
                power = power * x
                k += 1
            self.assertEqual(order(x), k)

    def test_cycle_structure_and_fixed_points(self):
        self.assertEqual(fixed_points(Permutation.identity(4)), {1, 2, 3, 4})

        x = Permutation.parse("(1 2 3)", degree=5)
        self.assertEqual(cycle_structure(x), CycleType([3, 1, 1]))
        self.assertEqual(fixed_points(x), {4, 5})
        self.assertEqual(x.cycle_of(2), (2, 3, 1))

    def test_cycle_types_of_s5_fall_into_seven_classes(self):
        types = Counter(cycle_structure(Permutation(p)) for p in permutations(range(5)))

        self.assertEqual(len(types), 7)
        self.assertEqual(sum(types.values()), 120)
        self.assertEqual(types[CycleType([2, 1, 1, 1])], 10)

    def test_cycle_type_parity_formula(self):
        self.assertEqual(CycleType([3, 1, 1]).parity, 1)
        self.assertEqual(CycleType([2, 1, 1]).parity, -1)
        self.assertEqual(CycleType([4, 2]).order, 4)

    def test_elements_of_cycle_type_streams_each_element_once(self):
        streamed = list(elements_of_cycle_type(6, [3, 2, 1]))
        expected = {p for p in permutations(range(6)) if CycleType([3, 2, 1]) == cycle_structure(Permutation(p))}

        self.assertEqual(len(streamed), len(set(streamed)))
        self.assertEqual(set(streamed), expected)
        self.assertEqual(len(streamed), 120)


class CycleNotationTests(unittest.TestCase):
    """Parsing and printing of cycle notation."""

    def test_identity_prints_as_empty_cycle(self):
        self.assertEqual(str(Permutation.identity(3)), "()")
        self.assertEqual(Permutation.parse("()", degree=3), Permutation.identity(3))

    def test_parse_is_whitespace_insensitive(self):
        self.assertEqual(Permutation.parse(" ( 1 2 ) (3  4 5)"), Permutation.parse("(1 2)(3 4 5)"))

    def test_malformed_text_is_parse_error(self):
        for text in ("(1 2", "1 2)", "(a b)", "(1 1)"):
            with self.subTest(text=text):
                with self.assertRaises(SpecParseError):
                    Permutation.parse(text)

    def test_point_beyond_degree_is_parse_error(self):
        with self.assertRaises(SpecParseError):
            Permutation.parse("(1 5)", degree=4)

    def test_sympy_round_trip(self):
        x = Permutation.parse("(1 4 2)(3 6)", degree=6)
        self.assertEqual(Permutation.from_sympy(x.to_sympy()), x)


if __name__ == "__main__":
    unittest.main()

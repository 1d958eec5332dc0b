"""Regression tests for sharded first-hit search."""

import multiprocessing
import time
import unittest

from genus.parallel import first_hit
from genus.search import search_triple
from genus.triples import TripleSignature
from groups.catalog import GroupSpec, realize


def _square_if_even(value):
    return value * value if value % 2 == 0 else None


def _hit_first_then_stall(value):
    if value == 0:
        return "hit"
    time.sleep(60)
    return None


class FirstHitTests(unittest.TestCase):
    """The lowest-indexed hit wins whatever the worker count."""

    def test_serial(self):
        self.assertEqual(first_hit(_square_if_even, [1, 3, 4, 6]), (2, 16))
        self.assertIsNone(first_hit(_square_if_even, [1, 3, 5]))
        self.assertIsNone(first_hit(_square_if_even, []))

    def test_sharded_matches_serial(self):
        tasks = [1, 3, 5, 7, 8, 9, 10, 12]
        self.assertEqual(first_hit(_square_if_even, tasks, jobs=3), first_hit(_square_if_even, tasks, jobs=1))

    def test_running_shards_stop_after_the_first_hit(self):
        start = time.monotonic()

        self.assertEqual(first_hit(_hit_first_then_stall, [0, 1, 2], jobs=2), (0, "hit"))
        self.assertLess(time.monotonic() - start, 30)
        self.assertEqual(multiprocessing.active_children(), [])

    def test_sharded_miss(self):
        self.assertIsNone(first_hit(_square_if_even, [1, 3, 5, 7], jobs=2))

    def test_search_witness_does_not_depend_on_jobs(self):
        handle = realize(GroupSpec("S", 5)).handle
        triple = TripleSignature(2, 4, 5)

        serial = search_triple(handle, triple, jobs=1)
        sharded = search_triple(handle, triple, jobs=2)

        self.assertEqual((serial.x, serial.y), (sharded.x, sharded.y))


if __name__ == "__main__":
    unittest.main()

"""Regression tests for witness files."""

import os
import tempfile
import unittest

from groups.catalog import GroupSpec, realize
from utils.errors import WitnessFormatError
from utils.witness_io import WITNESS_HEADER, WitnessRecord, parse_witness, read_witness, write_witness


GOOD_TEXT = "\n".join([
    WITNESS_HEADER,
    "group: B3",
    "triple: (2,4,6)",
    "provenance: exhaustive",
    "x: [(1 2) | 001]",
    "y: [(1 2 3) | 000]",
])


class WitnessParsingTests(unittest.TestCase):
    """Malformed files are format errors, never crashes."""

    def test_good_file(self):
        record = parse_witness(GOOD_TEXT)

        self.assertEqual(record.group, "B3")
        self.assertEqual(record.x, "[(1 2) | 001]")
        self.assertEqual(parse_witness(record.to_text()), record)

    def test_comments_and_blank_lines_are_ignored(self):
        text = GOOD_TEXT.replace("group: B3", "# written by hand\n\ngroup: B3")
        self.assertEqual(parse_witness(text).group, "B3")

    def test_malformed_files(self):
        cases = {
            "missing header": GOOD_TEXT.replace(WITNESS_HEADER + "\n", ""),
            "wrong version": GOOD_TEXT.replace("v1", "v2"),
            "no separator": GOOD_TEXT.replace("group: B3", "group B3"),
            "empty value": GOOD_TEXT.replace("group: B3", "group:"),
            "unknown key": GOOD_TEXT + "\nz: (1 2)",
            "duplicate key": GOOD_TEXT + "\nx: (1 2)",
            "missing key": GOOD_TEXT.replace("y: [(1 2 3) | 000]", ""),
            "empty file": "",
        }
        for label, text in cases.items():
            with self.subTest(case=label):
                with self.assertRaises(WitnessFormatError):
                    parse_witness(text)

    def test_unreadable_file(self):
        with self.assertRaises(WitnessFormatError):
            read_witness(os.path.join(tempfile.gettempdir(), "no-such-dir", "missing.witness"))


class WitnessResolutionTests(unittest.TestCase):
    """Fields decode against the realized group."""

    def test_resolve_signed_witness(self):
        realization = realize(GroupSpec("B", 3))
        witness = parse_witness(GOOD_TEXT).resolve(realization)

        self.assertEqual(witness.triple.as_tuple(), (2, 4, 6))
        self.assertEqual(witness.x.degree, 6)
        self.assertEqual(witness.provenance, "exhaustive")

    def test_bad_fields_are_format_errors(self):
        realization = realize(GroupSpec("B", 3))
        for field, value in (("x", "[(1 2) | 01]"), ("y", "(1 9)"), ("triple", "(2,4)")):
            record = parse_witness(GOOD_TEXT)
            values = {key: getattr(record, key) for key in ("group", "triple", "provenance", "x", "y")}
            values[field] = value
            with self.subTest(field=field):
                with self.assertRaises(WitnessFormatError):
                    WitnessRecord(**values).resolve(realization)

    def test_write_then_read(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "b3.witness")
            write_witness(path, parse_witness(GOOD_TEXT))
            self.assertEqual(read_witness(path), parse_witness(GOOD_TEXT))


if __name__ == "__main__":
    unittest.main()

"""Regression tests for report rendering."""

import json
import unittest

from ui.report_format import (
    CSV_COLUMNS,
    REPORT_FIELDS,
    Report,
    render_csv,
    render_json,
    render_table_text,
    render_text,
)


def _report(**overrides):
    values = dict(
        group="B17",
        display="B17",
        order=355687428096000 * 2 ** 17,
        triple="(2,4,6)",
        genus=1 + 355687428096000 * 2 ** 17 // 24,
        exactness="exact",
        method="sandwich-bound",
        note="forced between B17 and Σ17",
        published={"triple": "(2,4,6)", "genus": str(1 + 355687428096000 * 2 ** 17 // 24), "source": "exceptional table"},
        timing=0.25,
        engine={"threshold": 5000000, "seed": 0, "budget": 20000, "jobs": 1, "heuristic": False},
    )
    values.update(overrides)
    return Report(**values)


class JsonReportTests(unittest.TestCase):
    """JSON reports keep their field order and write big integers as strings."""

    def test_key_order_is_stable(self):
        data = json.loads(_report().to_json())
        self.assertEqual(tuple(data), REPORT_FIELDS)

    def test_big_integers_are_strings(self):
        data = json.loads(_report().to_json())

        self.assertEqual(data["order"], str(355687428096000 * 2 ** 17))
        self.assertIsInstance(data["genus"], str)

    def test_round_trip(self):
        report = _report(witness={"provenance": "exhaustive", "x": "(1 2)", "y": "(1 2 3)"})
        self.assertEqual(Report.from_json(report.to_json()), report)

    def test_published_matches(self):
        self.assertTrue(_report().published_matches)
        self.assertFalse(_report(triple="(2,3,8)").published_matches)
        self.assertIsNone(_report(published=None).published_matches)

    def test_several_reports_render_as_a_list(self):
        data = json.loads(render_json([_report(), _report(group="S5", display="Σ5", order=120, genus=4)]))

        self.assertEqual(len(data), 2)
        self.assertEqual(data[1]["display"], "Σ5")


class CsvAndTextTests(unittest.TestCase):
    def test_csv_header_and_row_split(self):
        lines = render_csv([_report(), _report(group="Dih12", triple="(2,2,12)", genus=0)]).splitlines()

        self.assertEqual(lines[0], ",".join(CSV_COLUMNS))
        self.assertTrue(lines[1].startswith('17,B,"(2,4,6)",'))
        self.assertEqual(lines[2], '12,Dih,"(2,2,12)",0')

    def test_text_report(self):
        text = render_text(_report(witness={"provenance": "exhaustive", "x": "(1 2)", "y": "(1 2 3)"}))

        self.assertIn("Genus:     ", text)
        self.assertIn("Note:      forced between B17 and Σ17", text)
        self.assertIn("x:         (1 2)", text)
        self.assertTrue(text.endswith("Time:      0.250s"))

    def test_table_marks_rows_without_a_published_value(self):
        table = render_table_text([_report(published=None)])

        self.assertIn("not published", table)
        self.assertEqual(len(table.splitlines()), 3)


if __name__ == "__main__":
    unittest.main()

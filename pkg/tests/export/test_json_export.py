"""
Tests for JSON and text output.
"""
import json

from affine_delta.action.tables import action_table, orbits
from affine_delta.export.json_export import dumps, orbits_payload, table_to_json
from affine_delta.export.text_report import format_weight, render_report, render_table
from affine_delta.models.algebra import LieType
from affine_delta.models.results import VerificationReport

A2_TABLE = (
    '[{"algebra":{"family":"A","rank":2},"level":1,"coweight":1,'
    '"map":[{"from":[0,0],"to":[1,0]},{"from":[0,1],"to":[0,0]},{"from":[1,0],"to":[0,1]}]},'
    '{"algebra":{"family":"A","rank":2},"level":1,"coweight":2,'
    '"map":[{"from":[0,0],"to":[0,1]},{"from":[0,1],"to":[1,0]},{"from":[1,0],"to":[0,0]}]}]'
)


class TestJsonExport:
    """Tests for the table schema."""

    def test_a2_table(self):
        assert table_to_json(action_table(LieType.parse("A2"), 1)) == A2_TABLE

    def test_schema_key_order(self):
        entry = action_table(LieType.parse("D6"), 2).coweight_map(1)
        assert list(entry) == ["algebra", "level", "coweight", "map"]
        assert entry["algebra"] == {"family": "D", "rank": 6}
        assert all(list(item) == ["from", "to"] for item in entry["map"])

    def test_reserialisation_is_identical(self):
        for label, level in [("B3", 2), ("E6", 1), ("C2", 3)]:
            text = table_to_json(action_table(LieType.parse(label), level))
            assert dumps(json.loads(text)) == text

    def test_no_miniscule_gives_empty_array(self):
        assert table_to_json(action_table(LieType.parse("G2"), 1)) == "[]"

    def test_orbits_payload(self):
        a2 = LieType.parse("A2")
        text = dumps(orbits_payload(a2, 1, orbits(a2, 1)))
        assert text == '{"algebra":{"family":"A","rank":2},"level":1,"orbits":[[[0,0],[0,1],[1,0]]]}'


class TestTextReport:
    """Tests for text rendering."""

    def test_format_weight(self):
        assert format_weight((0, 0)) == "0"
        assert format_weight((-1, 1, 0)) == "-l1 + l2"
        assert format_weight((2, 0, -3)) == "2*l1 - 3*l3"

    def test_render_table(self):
        text = render_table(action_table(LieType.parse("A1"), 1))
        assert "H^(1):" in text
        assert "[0] -> [1]" in text

    def test_render_vacuous_report(self):
        report = VerificationReport(lie_type=LieType.parse("F4"), levels=(1,))
        assert render_report(report) == "F4: PASS (no miniscule coweights, 0 checks run)"

"""Unit tests for the presentation ingestion format."""

import pytest

from p5reps.ingest import (
    FIXTURES,
    IngestError,
    fixture_names,
    load_fixture,
    load_group,
    parse_presentation,
    render_presentation,
)

MINIMAL = """\
# extraspecial of order 27
p 3
ngens 3
comm 2 1 : 0 0 1
subgroup center : 0 0 1
"""


class TestParsing:
    def test_minimal(self):
        ing = parse_presentation(MINIMAL)
        assert (ing.p, ing.ngens) == (3, 3)
        assert ing.commutators == {(2, 1): (0, 0, 1)}
        assert ing.powers == {}
        assert ing.subgroups == {"center": ((0, 0, 1),)}

    def test_round_trip(self):
        ing = parse_presentation(MINIMAL)
        assert parse_presentation(render_presentation(ing)) == ing

    def test_group_and_subgroup_resolution(self):
        # load_group classifies, which needs order p^5; build directly here.
        ing = parse_presentation(MINIMAL)
        group = ing.group()
        assert group.size == 27
        assert ing.resolve(group, "center") == group.center()

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("p 3\n", "must declare"),
            ("p 3\nngens 2\npower 1 : 0 1 0\n", "expected 2 exponents"),
            ("p 3\nngens 2\npower 1 : 1 0\n", "must be zero"),
            ("p 3\nngens 2\ncomm 1 2 : 0 0\n", "ngens >= j > i"),
            ("p 3\nngens 2\npower 1 : 0 5\n", "outside"),
            ("p 3\nngens 2\nbogus 1 : 0 0\n", "unknown directive"),
            ("ngens 2\npower 1 : 0 0\n", "must precede"),
        ],
    )
    def test_malformed(self, text, fragment):
        with pytest.raises(IngestError, match=fragment):
            parse_presentation(text)


class TestFixtures:
    def test_names(self):
        assert set(fixture_names()) == set(FIXTURES)

    @pytest.mark.parametrize("name, family", [
        ("Phi_6_fixture_p3", 6),
        ("Phi_10_fixture_p3", 10),
    ])
    def test_fixture_classification(self, name, family):
        group, ing, fam = load_fixture(name)
        assert fam == family
        assert group.size == 243
        assert ing.resolve(group, "center") == group.center()
        assert ing.resolve(group, "derived") == group.derived_subgroup()

    def test_unknown_fixture(self):
        with pytest.raises(IngestError):
            load_fixture("nope")

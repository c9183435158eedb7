from app.domain.model.census import Splitting, splitting_notation
from app.domain.usecase.util.reference_census import REFERENCE_SPLITTINGS, parse_splitting, reference_order

import pytest


class TestSplittingNotation:
    def test_groups_equal_parts(self):
        assert splitting_notation(((1,), (3,), (1,))) == "(3)+2(1)"
        assert Splitting(parts=((1, 0), (1, 3))).notation == "(1,3)+(1,0)"

    def test_parse(self):
        assert parse_splitting("2(1,0)+6(0,1)") == ((1, 0),) * 2 + ((0, 1),) * 6
        assert parse_splitting("(4)") == ((4,),)

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_splitting("2[1,0]")

    def test_reference_is_consistent(self):
        for text in reference_order():
            steps, ambient = text.split("/")
            length = len(steps.split(","))
            for splitting in REFERENCE_SPLITTINGS[text]:
                assert all(len(p) == length for p in parse_splitting(splitting))

import pytest

from app.domain.model.flag_shape import FlagShape
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum

SPLITTING_COUNTS = [
    # shape, computed, listed
    ("1,2/4", 5, 4),
    ("1,2/5", 7, 6),
    ("1,3/5", 9, 8),
    ("1,2,3/4", 16, 12),
    ("2/5", 2, 2),
    ("1,2/6", 3, 3),
    ("1,4/6", 3, 3),
    ("2,3/5", 3, 2),
]


def shape(text: str) -> FlagShape:
    steps, ambient = text.split("/")
    return FlagShape(steps=tuple(int(s) for s in steps.split(",")), ambient=int(ambient))


class TestFeasibleFlags:
    def test_small_census(self, census_usecase):
        found = census_usecase.feasible_flags(4)
        assert [s.text for s in found.shapes] == ["2/4", "1,2/4", "1,2,3/4"]

    def test_rows_up_to_seven(self, census_usecase):
        found = census_usecase.feasible_flags(7)
        texts = [s.text for s in found.shapes]
        assert len(texts) == 21
        assert texts[0] == "2/7"
        assert texts[-1] == "1,2,3/4"
        assert all(s.steps <= s.dual().steps for s in found.shapes)

    def test_exclusions(self, census_usecase):
        reasons = {s.shape.text: s.reason for s in census_usecase.feasible_flags(5).excluded}
        assert reasons["1/4"] == "projective space"
        assert reasons["1,3/4"] == "F(1,n-1,n) family"
        assert reasons["1,2/3"] == "F(1,n-1,n) family"
        assert "2/4" not in reasons

    def test_needs_two(self, census_usecase):
        with pytest.raises(CustomException) as error:
            census_usecase.feasible_flags(1)
        assert error.value.response_code == ResponseCodeEnum.KOS10


class TestSplittings:
    @pytest.mark.parametrize("text, computed, listed", SPLITTING_COUNTS)
    def test_counts(self, census_usecase, text, computed, listed):
        entry = census_usecase.enumerate_splittings(shape(text))
        assert len(entry.splittings) == computed
        assert entry.listed_count == listed
        assert sum(s.listed for s in entry.splittings) <= listed
        assert entry.required == entry.dimension - 3
        for splitting in entry.splittings:
            assert len(splitting.parts) == entry.required
            assert tuple(map(sum, zip(*splitting.parts))) == entry.anticanonical

    def test_grassmannian(self, census_usecase):
        entry = census_usecase.enumerate_splittings(shape("2/5"))
        assert {s.notation for s in entry.splittings} == {"(3)+2(1)", "2(2)+(1)"}
        assert entry.dual_shape == shape("3/5")

    def test_duality_identifies_reversed_splittings(self, census_usecase):
        identified = census_usecase.enumerate_splittings(shape("1,2,3/4"), modulo_duality=True)
        full = census_usecase.enumerate_splittings(shape("1,2,3/4"), modulo_duality=False)
        assert identified.self_dual
        assert len(full.splittings) > len(identified.splittings)

    def test_too_small(self, census_usecase):
        with pytest.raises(CustomException) as error:
            census_usecase.enumerate_splittings(shape("1/3"))
        assert error.value.response_code == ResponseCodeEnum.KOS07

    @pytest.mark.parametrize("text", ["2/5", "1,2/4", "1,2/5", "1,2,3/4"])
    def test_oracle_agrees(self, census_usecase, text):
        entry = census_usecase.enumerate_splittings(shape(text), modulo_duality=False)
        assert census_usecase.splittings_oracle(entry.shape) == {
            tuple(sorted(s.parts, reverse=True)) for s in entry.splittings
        }
        census_usecase.verify_entry(entry)


class TestCensusTable:
    def test_discrepancies(self, census_usecase):
        table = census_usecase.census_table(4)
        assert [r.shape.text for r in table.rows] == ["2/4", "1,2/4", "1,2,3/4"]
        by_shape = {d.shape.text: d for d in table.discrepancies}
        assert "2/4" not in by_shape
        assert by_shape["1,2/4"].unlisted == ("(2,0)+(0,3)",)
        assert by_shape["1,2/4"].unmatched == ()
        assert len(by_shape["1,2,3/4"].unlisted) == 4

    @pytest.mark.slow
    def test_full_table(self, census_usecase):
        table = census_usecase.census_table(7)
        assert len(table.rows) == 21
        for entry in table.rows:
            census_usecase.verify_entry(entry)
        assert {d.shape.text for d in table.discrepancies} == {"1,2/4", "1,2/5", "1,3/5", "1,2,3/4"}
        assert all(d.unmatched == () for d in table.discrepancies)

    def test_entries_verify(self, census_usecase):
        for entry in census_usecase.census_table(5).rows:
            census_usecase.verify_entry(entry)

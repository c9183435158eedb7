import pytest

import app.infrastructure.entry_point.validator.validator as validator


class TestParseShape:
    @pytest.mark.parametrize("text, expected", [
        ("2/5", ((2,), 5)),
        ("1,2,4/5", ((1, 2, 4), 5)),
        (" 1,3/6 ", ((1, 3), 6)),
    ])
    def test_valid(self, text, expected):
        assert validator.parse_shape(text) == expected

    @pytest.mark.parametrize("text, position", [
        ("", "position 0"),
        ("25", "position 2"),
        ("2/x", "position 2"),
        ("1,,2/4", "position 2"),
        ("1,2/4/5", "position 5"),
        ("1,a/4", "position 2"),
    ])
    def test_reports_position(self, text, position):
        with pytest.raises(ValueError) as error:
            validator.parse_shape(text)
        assert position in str(error.value)


class TestParseLists:
    def test_degrees(self):
        assert validator.parse_degrees("1,0;1,2") == [(1, 0), (1, 2)]
        assert validator.parse_degrees("") == []
        assert validator.parse_degrees(None) == []
        with pytest.raises(ValueError):
            validator.parse_degrees("1;x")

    def test_values(self):
        assert validator.parse_values("0,1,2") == (0, 1, 2)
        with pytest.raises(ValueError):
            validator.parse_values("1,two")

    def test_assignment(self):
        assert validator.parse_assignment("1,1,2;2") == [(1, 1, 2), (2,)]
        assert validator.parse_assignment(None) is None


class TestValidateOptions:
    def test_format(self):
        assert validator.validate_format("csv")
        with pytest.raises(ValueError):
            validator.validate_format("xml")

    def test_seed_order(self):
        assert validator.validate_seed_order("fixed")
        with pytest.raises(ValueError):
            validator.validate_seed_order("random")

    def test_degree_bound(self):
        assert validator.validate_degree_bound(0)
        with pytest.raises(ValueError):
            validator.validate_degree_bound(-1)

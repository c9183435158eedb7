import pytest

from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.util.hull import facets_by_enumeration


class TestFacetsByEnumeration:
    def test_cross_polytope(self):
        points = [(1, 0), (0, 1), (-1, 0), (0, -1)]
        facets = facets_by_enumeration(points)
        assert len(facets) == 4
        assert {f.offset for f in facets} == {1}
        assert {f.normal for f in facets} == {(1, 1), (1, -1), (-1, 1), (-1, -1)}

    def test_interior_point_is_on_no_facet(self):
        points = [(0, 0), (1, 0), (0, 1), (-1, -1)]
        facets = facets_by_enumeration(points)
        assert len(facets) == 3
        assert all(0 not in f.incident for f in facets)

    def test_flat_points(self):
        with pytest.raises(CustomException) as error:
            facets_by_enumeration([(0, 0), (1, 1), (2, 2)])
        assert error.value.response_code == ResponseCodeEnum.KOS08

    def test_no_points(self):
        with pytest.raises(CustomException):
            facets_by_enumeration([])

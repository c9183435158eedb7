from math import comb

import pytest

from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from tests.shapes import shapes_up_to

RELATIONS = [
    ("1/2", 0),
    ("2/4", 1),
    ("2/5", 5),
    ("1,2/3", 1),
    ("1,2,3/4", 10),
    ("1,3/4", 1),
    ("1,2/4", 5),
    ("2,3/4", 5),
]

SECTION_COUNTS = [
    ("2/5", [10] * 5),
    ("2/4", [6] * 4),
    ("1,2/3", [3] * 4),
    ("1,2,3/4", [4, 4, 6, 6, 4, 4]),
]


def path_sum(graph, paths):
    total = [0] * len(graph.edges)
    for path in paths:
        for k in path.crossed:
            total[k] += 1
    return tuple(total)


class TestQuadraticRelations:
    @pytest.mark.parametrize("text, expected", RELATIONS)
    def test_count(self, sections_usecase, graph_of, text, expected):
        assert len(sections_usecase.quadratic_relations(graph_of(text))) == expected

    def test_relation_balances_crossings(self, sections_usecase, graph_of):
        graph = graph_of("2/5")
        for relation in sections_usecase.quadratic_relations(graph):
            assert path_sum(graph, (relation.first, relation.second)) == path_sum(
                graph, (relation.minimum, relation.maximum)
            )

    def test_cross_roof_relation(self, sections_usecase, graph_of):
        [relation] = sections_usecase.quadratic_relations(graph_of("1,2/3"))
        assert {relation.maximum.steps, relation.minimum.steps} == {"DLD", "LDL"}


class TestGreedyDecompose:
    def test_sum_of_paths(self, sections_usecase, paths_usecase, graph_of):
        graph = graph_of("2/5")
        paths = paths_usecase.enumerate_positive_paths(graph, 1)
        values = path_sum(graph, (paths[0], paths[3], paths[7]))
        result = sections_usecase.greedy_decompose(graph, values)
        assert result.degree == (3,)
        assert len(result.paths) == 3
        assert path_sum(graph, result.paths) == values

    def test_multi_roof_point(self, sections_usecase, paths_usecase, graph_of):
        graph = graph_of("1,2/3")
        first, second = paths_usecase.all_paths(graph)
        values = path_sum(graph, (first[0], second[1], second[2]))
        result = sections_usecase.greedy_decompose(graph, values)
        assert result.degree == (1, 2)
        assert path_sum(graph, result.paths) == values

    def test_zero_point(self, sections_usecase, graph_of):
        graph = graph_of("2/4")
        result = sections_usecase.greedy_decompose(graph, [0] * len(graph.edges))
        assert result.paths == ()

    @pytest.mark.parametrize("values", [[-1, 1], [1, 1, 1]])
    def test_rejects_points_outside_the_cone(self, sections_usecase, graph_of, values):
        with pytest.raises(CustomException) as error:
            sections_usecase.greedy_decompose(graph_of("1/2"), values)
        assert error.value.response_code == ResponseCodeEnum.KOS05

    def test_rejects_unbalanced_box(self, sections_usecase, graph_of):
        graph = graph_of("2/4")
        box = graph.boxes[0]
        values = [0] * len(graph.edges)
        values[box.corner[0]] = 1
        with pytest.raises(CustomException) as error:
            sections_usecase.greedy_decompose(graph, values)
        assert error.value.response_code == ResponseCodeEnum.KOS05


class TestHilbertBasis:
    @pytest.mark.parametrize("text, points, weights", [
        ("1/2", 15, (1, 1)),
        ("1,2/3", 158, (1, 2)),
    ])
    def test_every_point_decomposes(self, sections_usecase, graph_of, text, points, weights):
        report = sections_usecase.check_hilbert_basis(graph_of(text))
        assert report.ok
        assert report.points_checked == points
        assert report.decomposed == points - 1
        assert report.minimum_positive_weight == 1
        assert (min(report.generator_weights), max(report.generator_weights)) == weights

    @pytest.mark.parametrize("text", ["1/2", "1/3", "2/4", "1,2/3"])
    def test_paths_generate_up_to_twice_n(self, sections_usecase, graph_of, text):
        graph = graph_of(text)
        report = sections_usecase.check_hilbert_basis(graph)
        assert report.weight_bound == 2 * graph.shape.ambient
        assert report.violations == ()
        assert report.decomposable_generators == ()
        assert report.decomposed == report.points_checked - 1
        assert report.minimum_positive_weight == report.lightest_generator_weight

    def test_weight_bound_range(self, sections_usecase, graph_of):
        with pytest.raises(CustomException) as error:
            sections_usecase.check_hilbert_basis(graph_of("1/2"), weight_bound=5)
        assert error.value.response_code == ResponseCodeEnum.KOS10

    def test_cone_points_are_balanced(self, sections_usecase, graph_of):
        graph = graph_of("2/4")
        box = graph.boxes[0]
        for point in sections_usecase.cone_lattice_points(graph, 4):
            values = point.values
            assert min(values) >= 0
            assert point.weight <= 4
            assert sum(values[k] for k in box.corner) == sum(values[k] for k in box.opposite)


class TestSectionPolytope:
    @pytest.mark.parametrize("text, counts", SECTION_COUNTS)
    def test_points_match_path_sections(self, sections_usecase, graph_of, text, counts):
        graph = graph_of(text)
        roof_edges = [k for roof in graph.roofs for k in roof]
        found = [sections_usecase.section_polytope_points(graph, k) for k in roof_edges]
        assert [len(p.points) for p in found] == counts
        assert all(p.matches_sections for p in found)
        for section in found:
            assert all(len(d) == len(graph.dots) for d in section.dot_points)


@pytest.mark.slow
class TestEveryShape:
    @pytest.mark.parametrize("text", shapes_up_to(5))
    def test_section_points_are_binomial(self, sections_usecase, graph_of, text):
        graph = graph_of(text)
        n = graph.shape.ambient
        for i, roof in enumerate(graph.roofs, start=1):
            for k in roof:
                section = sections_usecase.section_polytope_points(graph, k)
                assert len(section.points) == comb(n, graph.shape.steps[i - 1])
                assert section.matches_sections

    @pytest.mark.parametrize("text", shapes_up_to(6))
    def test_relations_balance(self, sections_usecase, graph_of, text):
        graph = graph_of(text)
        for relation in sections_usecase.quadratic_relations(graph):
            assert path_sum(graph, (relation.first, relation.second)) == path_sum(
                graph, (relation.minimum, relation.maximum)
            )

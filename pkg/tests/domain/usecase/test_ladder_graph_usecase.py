import pytest

from app.domain.model.ladder_graph import Direction, RegionKind, VertexKind
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.ladder_graph_usecase import delta_matrix
from tests.shapes import shapes_up_to

COUNTS = [
    # text, |D|, |E|, |B|, roof sizes
    ("1/2", 1, 2, 0, (2,)),
    ("1/3", 2, 3, 0, (3,)),
    ("2/4", 4, 6, 1, (4,)),
    ("2/5", 6, 9, 2, (5,)),
    ("1,2/3", 3, 6, 1, (2, 2)),
    ("1,2,3/4", 6, 12, 3, (2, 2, 2)),
    ("3/6", 9, 14, 4, (6,)),
]


class TestBuildShape:
    @pytest.mark.parametrize("steps, ambient", [
        ((), 3),
        ((0, 2), 3),
        ((2, 1), 4),
        ((1, 1), 4),
        ((2,), 2),
        ((1, 4), 4),
    ])
    def test_rejects_invalid_shapes(self, ladder_graph_usecase, steps, ambient):
        with pytest.raises(CustomException) as error:
            ladder_graph_usecase.build_shape(steps, ambient)
        assert error.value.response_code == ResponseCodeEnum.KOS01
        assert error.value.exit_code == 1

    def test_accepts_increasing_steps(self, ladder_graph_usecase):
        shape = ladder_graph_usecase.build_shape([1, 3], 5)
        assert shape.steps == (1, 3)
        assert ladder_graph_usecase.flag_dimension(shape) == 1 * 4 + 2 * 2


class TestBuildGraph:
    @pytest.mark.parametrize("text, dots, edges, boxes, roofs", COUNTS)
    def test_counts(self, graph_of, text, dots, edges, boxes, roofs):
        graph = graph_of(text)
        assert len(graph.dots) == dots
        assert len(graph.edges) == edges
        assert len(graph.boxes) == boxes
        assert tuple(len(r) for r in graph.roofs) == roofs
        assert roofs == graph.shape.anticanonical
        assert len(graph.stars) == graph.shape.length + 1

    @pytest.mark.parametrize("text", ["2/5", "1,2/3", "1,3/5", "1,2,3/4"])
    def test_every_edge_in_one_roof_or_box_corner(self, graph_of, text):
        graph = graph_of(text)
        for edge in graph.edges:
            assert (edge.roof is None) != (edge.corner_of is None)

    def test_box_corner_and_opposite(self, graph_of):
        graph = graph_of("2/4")
        box = graph.boxes[0]
        vertical, horizontal = box.corner
        assert graph.edges[vertical].direction == Direction.VERTICAL
        assert graph.edges[horizontal].direction == Direction.HORIZONTAL
        assert set(box.corner).isdisjoint(box.opposite)

    def test_delta_images_are_differences_of_dots(self, graph_of):
        graph = graph_of("1,2,3/4")
        for row, edge in zip(delta_matrix(graph), graph.edges):
            nonzero = [v for v in row if v]
            if edge.tail.kind == VertexKind.STAR or edge.head.kind == VertexKind.STAR:
                assert len(nonzero) == 1
            else:
                assert sorted(nonzero) == [-1, 1]

    def test_boundary_vector_has_stars(self, ladder_graph_usecase, graph_of):
        graph = graph_of("1,2/3")
        vector = ladder_graph_usecase.boundary_vector(graph, 0)
        assert len(vector.values) == len(graph.dots) + len(graph.stars)
        assert sum(vector.values) == 0
        assert ladder_graph_usecase.delta_vector(graph, graph.edges[0]).basis == "D"


class TestKernelBases:
    @pytest.mark.parametrize("text", ["1/2", "2/4", "2/5", "1,2/3", "1,2,3/4", "3/6"])
    def test_ranks(self, ladder_graph_usecase, graph_of, text):
        graph = graph_of(text)
        kernel = ladder_graph_usecase.kernel_bases(graph)
        width = len(graph.edges)
        assert width - kernel.boundary_rank == len(graph.boxes)
        assert width - kernel.delta_rank == len(graph.boxes) + graph.shape.length
        assert kernel.delta_rank == len(graph.dots)
        assert abs(kernel.pivot_determinant) == 1

    def test_roof_vectors_are_indicators(self, ladder_graph_usecase, graph_of):
        graph = graph_of("1,2/3")
        kernel = ladder_graph_usecase.kernel_bases(graph)
        for vector, roof in zip(kernel.roof_vectors, graph.roofs):
            assert {k for k, v in enumerate(vector.values) if v} == set(roof)


class TestDualGraph:
    @pytest.mark.parametrize("text", ["2/4", "2/5", "1,2/3", "1,3/5"])
    def test_dual_edges_cross_each_edge_once(self, ladder_graph_usecase, graph_of, text):
        graph = graph_of(text)
        duals = ladder_graph_usecase.build_dual_graph(graph)
        assert sorted(d.edge for d in duals) == list(range(len(graph.edges)))
        for dual in duals:
            if dual.head.kind == RegionKind.ROOF:
                assert graph.edges[dual.edge].roof == dual.head.index
            else:
                assert graph.edges[dual.edge].roof is None


class TestTransposeInvariants:
    @pytest.mark.parametrize("steps, ambient", [((1,), 3), ((2,), 5), ((1, 2), 4), ((1, 3), 5), ((1, 2, 4), 6)])
    def test_reflection_matches_dual(self, ladder_graph_usecase, steps, ambient):
        report = ladder_graph_usecase.transpose_invariants(ladder_graph_usecase.build_shape(steps, ambient))
        assert report.isomorphic
        assert report.counts == report.dual_counts
        assert report.roof_sizes == tuple(reversed(report.dual_roof_sizes))


@pytest.mark.slow
class TestEveryShapeUpToSeven:
    @pytest.mark.parametrize("text", shapes_up_to(7))
    def test_counts_and_primitive_relations(self, ladder_graph_usecase, graph_of, text):
        graph = graph_of(text)
        assert len(graph.boxes) == len(graph.edges) - len(graph.dots) - len(graph.stars) + 1
        assert tuple(len(r) for r in graph.roofs) == graph.shape.anticanonical
        assert len(graph.dots) == ladder_graph_usecase.flag_dimension(graph.shape)
        rows = delta_matrix(graph)
        zero = [0] * len(graph.dots)
        for roof in graph.roofs:
            assert [sum(column) for column in zip(*(rows[k] for k in roof))] == zero
        for box in graph.boxes:
            e, f, g, h = (rows[k] for k in box.edges)
            assert [a + b - c - d for a, b, c, d in zip(e, f, g, h)] == zero

    @pytest.mark.parametrize("text", shapes_up_to(7))
    def test_transposition(self, ladder_graph_usecase, graph_of, text):
        report = ladder_graph_usecase.transpose_invariants(graph_of(text).shape)
        assert report.isomorphic
        assert report.counts == report.dual_counts
        assert report.roof_sizes == tuple(reversed(report.dual_roof_sizes))

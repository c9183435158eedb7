from typing import Dict, List, Optional, Sequence, Tuple

from app.domain.model.census import CensusTable, splitting_notation
from app.domain.model.ideal import Decomposition, HilbertBasisReport, QuadraticRelation
from app.domain.model.ladder_graph import KernelBases, LadderGraph, TransposeReport
from app.domain.model.path import Meander, PositivePath, UpperSet
from app.domain.model.polytope import ConifoldStratum, ReflexivePolytope, SimplicialCone
from app.domain.model.report import Report
from app.domain.model.series import MirrorSystem, SeriesTerm, fraction_text
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
import app.infrastructure.entry_point.validator.validator as validator


def map_text_to_shape_args(text: str) -> Tuple[Tuple[int, ...], int]:
    try:
        return validator.parse_shape(text)
    except ValueError as e:
        raise CustomException(ResponseCodeEnum.KOS02, str(e))


def map_text_to_degrees(text: Optional[str]) -> List[Tuple[int, ...]]:
    try:
        return validator.parse_degrees(text)
    except ValueError as e:
        raise CustomException(ResponseCodeEnum.KOS03, str(e))


def vector_text(values: Sequence[int]) -> str:
    return "(%s)" % ",".join(str(v) for v in values)


def joined(values: Sequence[int], separator: str = ",") -> str:
    return separator.join(str(v) for v in values)


def map_graph_to_report(graph: LadderGraph, vectors: Sequence[Sequence[int]],
                        kernel: Optional[KernelBases] = None,
                        transpose: Optional[TransposeReport] = None) -> Report:
    summary: Dict = {
        "dots": len(graph.dots),
        "stars": len(graph.stars),
        "edges": len(graph.edges),
        "boxes": len(graph.boxes),
        "roofs": joined([len(r) for r in graph.roofs]),
        "dimension": graph.shape.dimension,
    }
    data: Dict = {
        "dots": [{"label": d.label, "position": d.position.as_tuple()} for d in graph.dots],
        "stars": [{"label": s.label, "position": s.position.as_tuple()} for s in graph.stars],
        "edges": [
            {"id": e.id, "tail": e.tail.label, "head": e.head.label, "direction": e.direction.value,
             "class": e.edge_class, "delta": list(vectors[e.id])}
            for e in graph.edges
        ],
        "boxes": [
            {"id": b.id, "center": b.center.as_tuple(), "corner": list(b.corner), "opposite": list(b.opposite)}
            for b in graph.boxes
        ],
        "roofs": [list(r) for r in graph.roofs],
        "dual_edges": [
            {"edge": w.edge, "tail": w.tail.label, "head": w.head.label} for w in graph.dual_edges
        ],
    }
    if kernel is not None:
        summary["boundary_rank"] = kernel.boundary_rank
        summary["delta_rank"] = kernel.delta_rank
        summary["pivot_minor"] = kernel.pivot_determinant
        data["kernel"] = {
            "boxes": [list(v.values) for v in kernel.box_vectors],
            "roofs": [list(v.values) for v in kernel.roof_vectors],
            "pivot_columns": list(kernel.pivot_columns),
        }
    if transpose is not None:
        summary["transpose"] = transpose.isomorphic
        data["transpose"] = {"dual_shape": transpose.dual_shape.label, "counts": list(transpose.dual_counts)}
    rows = [
        [e.id, e.tail.label, e.head.label, e.direction.value, e.edge_class, vector_text(vectors[e.id])]
        for e in graph.edges
    ]
    return Report(
        command="graph", shape=graph.shape.label, summary=summary,
        columns=["edge", "tail", "head", "direction", "class", "delta"], rows=rows, data=data,
    )


def map_polytope_to_report(shape_label: str, polytope: ReflexivePolytope,
                           hull: Optional[bool] = None) -> Report:
    summary: Dict = {
        "dimension": polytope.dimension,
        "vertices": len(polytope.vertices),
        "hull_vertices": len(polytope.hull_vertices),
        "facets": len(polytope.facets),
        "reflexive": polytope.reflexive,
    }
    if polytope.interior_points is not None:
        summary["interior_points"] = polytope.interior_points
    if hull is not None:
        summary["hull_agrees"] = hull
    rows = [
        [f.meander, vector_text(f.functional), joined(f.incident, ";")] for f in polytope.facets
    ]
    data = {
        "vertices": [list(v) for v in polytope.vertices],
        "hull_vertices": list(polytope.hull_vertices),
        "facets": [
            {"meander": f.meander, "functional": list(f.functional), "incident": list(f.incident)}
            for f in polytope.facets
        ],
    }
    return Report(command="polytope", shape=shape_label, summary=summary,
                  columns=["facet", "functional", "incident"], rows=rows, data=data)


def map_fan_to_report(shape_label: str, cones: List[SimplicialCone]) -> Report:
    rows = [[c.id, joined(c.omitted, ";"), c.meander, c.determinant] for c in cones]
    return Report(
        command="fan", shape=shape_label,
        summary={"cones": len(cones), "unimodular": all(abs(c.determinant) == 1 for c in cones),
                 "facets_used": len({c.meander for c in cones})},
        columns=["cone", "omitted", "meander", "determinant"],
        rows=rows,
        data={"cones": [c.model_dump() for c in cones]},
    )


def map_strata_to_report(shape_label: str, strata: List[ConifoldStratum]) -> Report:
    rows = [
        [s.box, *(vector_text(v) for v in s.vectors), s.minor_gcd,
         joined(s.unit_minor, ";") if s.unit_minor else ""]
        for s in strata
    ]
    return Report(
        command="strata", shape=shape_label,
        summary={"strata": len(strata), "codimension": 3, "conifold": all(s.minor_gcd == 1 for s in strata)},
        columns=["box", "e", "f", "g", "h", "minor_gcd", "unit_minor"],
        rows=rows,
        data={"strata": [s.model_dump() for s in strata]},
    )


def _path_row(path: PositivePath) -> List:
    return [path.roof, path.steps, joined(path.crossed, ";"), len(path.crossed)]


def map_paths_to_report(shape_label: str, per_roof: Sequence[Sequence[PositivePath]],
                        upper_sets: Optional[Sequence[UpperSet]] = None) -> Report:
    summary: Dict = {"paths": sum(len(p) for p in per_roof)}
    for paths in per_roof:
        if paths:
            summary[f"roof_{paths[0].roof}"] = len(paths)
    data: Dict = {
        "paths": [
            {"roof": p.roof, "steps": p.steps, "crossed": list(p.crossed), "heights": list(p.heights)}
            for paths in per_roof for p in paths
        ],
    }
    if upper_sets is not None:
        summary["upper_sets"] = len(upper_sets)
        data["upper_sets"] = [
            {"edge": u.edge, "roof": u.roof, "members": list(u.members),
             "sections": [list(s.functional.values) for s in u.sections]}
            for u in upper_sets
        ]
    return Report(
        command="paths", shape=shape_label, summary=summary,
        columns=["roof", "steps", "crossed", "weight"],
        rows=[_path_row(p) for paths in per_roof for p in paths],
        data=data,
    )


def map_meanders_to_report(shape_label: str, meanders: List[Meander]) -> Report:
    return Report(
        command="meanders", shape=shape_label,
        summary={"meanders": len(meanders)},
        columns=["meander", "paths", "functional", "incident"],
        rows=[[m.id, m.label, vector_text(m.functional.values), joined(m.incident, ";")] for m in meanders],
        data={"meanders": [
            {"id": m.id, "paths": [p.steps for p in m.paths], "functional": list(m.functional.values)}
            for m in meanders
        ]},
    )


def map_relations_to_report(shape_label: str, relations: List[QuadraticRelation]) -> Report:
    rows = [
        [r.first.label, r.second.label, r.minimum.label, r.maximum.label] for r in relations
    ]
    return Report(
        command="relations", shape=shape_label,
        summary={"relations": len(relations)},
        columns=["first", "second", "minimum", "maximum"],
        rows=rows,
        data={"relations": [dict(zip(("first", "second", "minimum", "maximum"), row)) for row in rows]},
    )


def map_decomposition_to_report(shape_label: str, decomposition: Decomposition,
                                hilbert: Optional[HilbertBasisReport] = None) -> Report:
    summary: Dict = {
        "weight": decomposition.functional.weight,
        "degree": joined(decomposition.degree),
        "paths": len(decomposition.paths),
    }
    data: Dict = {
        "values": list(decomposition.functional.values),
        "paths": [p.label for p in decomposition.paths],
    }
    if hilbert is not None:
        summary["weight_bound"] = hilbert.weight_bound
        summary["points_checked"] = hilbert.points_checked
        summary["minimum_positive_weight"] = hilbert.minimum_positive_weight or 0
        summary["hilbert_basis"] = hilbert.ok
        data["hilbert"] = hilbert.model_dump()
    return Report(
        command="decompose", shape=shape_label, summary=summary,
        columns=["roof", "steps", "crossed", "weight"],
        rows=[_path_row(p) for p in decomposition.paths],
        data=data,
    )


def map_series_to_report(command: str, shape_label: str, terms: List[SeriesTerm],
                         extra: Optional[Dict] = None) -> Report:
    rows = [[joined(t.roof_degrees, ";"), fraction_text(t.value), str(t.numerator)] for t in terms]
    summary: Dict = {"terms": len(terms)}
    summary.update(extra or {})
    return Report(
        command=command, shape=shape_label, summary=summary,
        columns=["index", "A", "B"], rows=rows,
        data={"series": [
            {"index": list(t.roof_degrees), "A": fraction_text(t.value), "B": str(t.numerator)} for t in terms
        ]},
    )


def monomial_text(coefficient: str, exponent: Sequence[int]) -> str:
    factors = [
        f"x{d}" if e == 1 else f"x{d}^{e}" for d, e in enumerate(exponent) if e
    ]
    return "*".join([coefficient, *factors])


def map_mirror_to_report(shape_label: str, system: MirrorSystem) -> Report:
    rows = []
    for equation in system.equations:
        pretty = " - ".join(["1", *(monomial_text(m.coefficient, m.exponent) for m in equation.monomials)])
        rows.append([equation.index, vector_text(equation.degree), joined(equation.roof_edges, ";"),
                     equation.term_count, pretty])
    constraints = [f"c{e}*c{f} = c{g}*c{h}" for e, f, g, h in system.box_constraints]
    return Report(
        command="mirror", shape=shape_label,
        summary={"equations": len(system.equations), "box_constraints": len(system.box_constraints)},
        columns=["equation", "degree", "roof_edges", "terms", "polynomial"],
        rows=rows,
        data={
            "assignment": [list(a) for a in system.assignment],
            "equations": [
                {"index": eq.index, "degree": list(eq.degree),
                 "monomials": [{"coefficient": m.coefficient, "exponent": list(m.exponent)} for m in eq.monomials]}
                for eq in system.equations
            ],
            "box_constraints": constraints,
            "newton_support": [[list(p) for p in points] for points in system.newton_support],
        },
    )


def map_census_to_report(table: CensusTable, verified: Optional[bool] = None) -> Report:
    rows = []
    for entry in table.rows:
        for splitting in entry.splittings:
            rows.append([
                entry.shape.ambient, entry.shape.label, entry.dimension, joined(entry.anticanonical),
                ";".join(vector_text(p) for p in splitting.parts), len(entry.splittings), splitting.listed,
            ])
    summary: Dict = {
        "shapes": len(table.rows),
        "splittings": sum(len(e.splittings) for e in table.rows),
        "discrepancies": len(table.discrepancies),
        "modulo_duality": table.modulo_duality,
    }
    if verified is not None:
        summary["oracle_agrees"] = verified
    data = {
        "rows": [
            {"shape": e.shape.label, "dimension": e.dimension, "anticanonical": list(e.anticanonical),
             "splittings": [splitting_notation(s.parts) for s in e.splittings],
             "listed_count": e.listed_count, "self_dual": e.self_dual}
            for e in table.rows
        ],
        "discrepancies": [
            {"shape": d.shape.label, "unlisted": list(d.unlisted), "unmatched": list(d.unmatched)}
            for d in table.discrepancies
        ],
    }
    return Report(
        command="census", summary=summary,
        columns=["n", "shape", "dim", "anticanonical", "splitting", "splitting_count", "listed"],
        rows=rows, data=data,
    )

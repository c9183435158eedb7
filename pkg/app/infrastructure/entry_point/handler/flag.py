import app.infrastructure.entry_point.mapper.flag_mapper as flag_mapper
import app.infrastructure.entry_point.validator.validator as validator
import logging

from fastapi import APIRouter, Depends
from fastapi.responses import JSONResponse
from dependency_injector.wiring import inject, Provide

from app.application.container import Container
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.census_usecase import CensusUseCase
from app.domain.usecase.hypergeometric_usecase import HypergeometricUseCase
from app.domain.usecase.ladder_graph_usecase import LadderGraphUseCase, delta_matrix
from app.domain.usecase.polytope_usecase import PolytopeUseCase
from app.infrastructure.entry_point.dto.flag_dto import CensusInput, SeriesInput, ShapeInput
from app.infrastructure.entry_point.dto.response_dto import ResponseDTO
from app.infrastructure.entry_point.utils.api_response import ApiResponse

logger = logging.getLogger("Flag Handler")

router = APIRouter(
    prefix='/flag',
    tags=['flag']
)

RESPONSES = {
    200: {"description": "Operation successful", "model": ResponseDTO},
    400: {"description": "Invalid input", "model": ResponseDTO},
    500: {"description": "Certificate failure", "model": ResponseDTO},
}


def _error(e: Exception) -> JSONResponse:
    if isinstance(e, CustomException):
        return JSONResponse(status_code=e.http_status, content=e.to_dict())
    logger.error(f"Unhandled exception: {e}")
    return JSONResponse(status_code=500, content=ApiResponse.create_response(ResponseCodeEnum.KOG01))


def _graph(text: str, ladder_graph_usecase: LadderGraphUseCase):
    steps, ambient = flag_mapper.map_text_to_shape_args(text)
    shape = ladder_graph_usecase.build_shape(steps, ambient)
    return ladder_graph_usecase.build_graph(shape)


@router.post('/graph', response_model=ResponseDTO, responses=RESPONSES)
@inject
def graph(
    shape_dto: ShapeInput,
    ladder_graph_usecase: LadderGraphUseCase = Depends(Provide[Container.ladder_graph_usecase])
):
    """
    Builds the ladder graph of a flag manifold.

    Args:
        shape_dto (ShapeInput): The shape text ("1,2,4/5") and whether to run the certificates.
        ladder_graph_usecase (LadderGraphUseCase): The Ladder Graph UseCase.

    Returns:
        ResponseDTO: The graph report, with kernel and duality certificates on request.
    """
    logger.info("Init graph handler")
    try:
        ladder_graph = _graph(shape_dto.shape, ladder_graph_usecase)
        kernel = transpose = None
        if shape_dto.check:
            kernel = ladder_graph_usecase.kernel_bases(ladder_graph)
            transpose = ladder_graph_usecase.transpose_invariants(ladder_graph.shape)
        report = flag_mapper.map_graph_to_report(ladder_graph, delta_matrix(ladder_graph), kernel, transpose)
        return ApiResponse.create_report_response(report)
    except Exception as e:
        return _error(e)


@router.post('/polytope', response_model=ResponseDTO, responses=RESPONSES)
@inject
def polytope(
    shape_dto: ShapeInput,
    ladder_graph_usecase: LadderGraphUseCase = Depends(Provide[Container.ladder_graph_usecase]),
    polytope_usecase: PolytopeUseCase = Depends(Provide[Container.polytope_usecase])
):
    """
    Computes the facets of the polytope, one per meander, and certifies reflexivity.

    Args:
        shape_dto (ShapeInput): The shape text and whether to run the hull oracle.
        ladder_graph_usecase (LadderGraphUseCase): The Ladder Graph UseCase.
        polytope_usecase (PolytopeUseCase): The Polytope UseCase.

    Returns:
        ResponseDTO: The polytope report.
    """
    logger.info("Init polytope handler")
    try:
        ladder_graph = _graph(shape_dto.shape, ladder_graph_usecase)
        result = polytope_usecase.build_polytope_with_facets(ladder_graph, scan=shape_dto.check or None)
        hull = polytope_usecase.hull_agrees(ladder_graph, result) if shape_dto.check else None
        report = flag_mapper.map_polytope_to_report(ladder_graph.shape.label, result, hull)
        return ApiResponse.create_report_response(report)
    except Exception as e:
        return _error(e)


@router.post('/series', response_model=ResponseDTO, responses=RESPONSES)
@inject
def series(
    series_dto: SeriesInput,
    ladder_graph_usecase: LadderGraphUseCase = Depends(Provide[Container.ladder_graph_usecase]),
    hypergeometric_usecase: HypergeometricUseCase = Depends(Provide[Container.hypergeometric_usecase])
):
    """
    Expands the hypergeometric series up to a total roof degree.

    Args:
        series_dto (SeriesInput): The shape, the degree bound and optionally the degree
            vectors of a complete intersection ("a,b;c,d"), which switches to its series.
        ladder_graph_usecase (LadderGraphUseCase): The Ladder Graph UseCase.
        hypergeometric_usecase (HypergeometricUseCase): The Hypergeometric UseCase.

    Returns:
        ResponseDTO: The series coefficients as exact rationals.
    """
    logger.info("Init series handler")
    try:
        validator.validate_degree_bound(series_dto.max_degree)
    except ValueError as e:
        response_code = ApiResponse.create_response(ResponseCodeEnum.KOS10, str(e))
        return JSONResponse(status_code=400, content=response_code)

    try:
        ladder_graph = _graph(series_dto.shape, ladder_graph_usecase)
        if series_dto.check:
            hypergeometric_usecase.verify_coefficients(ladder_graph, series_dto.max_degree)
        if series_dto.degrees:
            degrees = flag_mapper.map_text_to_degrees(series_dto.degrees)
            terms = hypergeometric_usecase.phi_X(ladder_graph, degrees, series_dto.max_degree)
            command = "ci-series"
        else:
            terms = hypergeometric_usecase.phi_F(ladder_graph, series_dto.max_degree)
            command = "series"
        report = flag_mapper.map_series_to_report(command, ladder_graph.shape.label, terms)
        return ApiResponse.create_report_response(report)
    except Exception as e:
        return _error(e)


@router.post('/census', response_model=ResponseDTO, responses=RESPONSES)
@inject
def census(
    census_dto: CensusInput,
    census_usecase: CensusUseCase = Depends(Provide[Container.census_usecase])
):
    """
    Lists the Calabi-Yau complete-intersection splittings of every feasible flag manifold.

    Args:
        census_dto (CensusInput): The largest ambient dimension and the duality option.
        census_usecase (CensusUseCase): The Census UseCase.

    Returns:
        ResponseDTO: The census table with its discrepancy report.
    """
    logger.info("Init census handler")
    try:
        table = census_usecase.census_table(census_dto.n_max, census_dto.modulo_duality)
        if census_dto.check:
            for entry in table.rows:
                census_usecase.verify_entry(entry)
        report = flag_mapper.map_census_to_report(table, True if census_dto.check else None)
        return ApiResponse.create_report_response(report)
    except Exception as e:
        return _error(e)

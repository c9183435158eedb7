from app.application.handler import Commands, Handlers
from app.domain.usecase.census_usecase import CensusUseCase
from app.domain.usecase.hypergeometric_usecase import HypergeometricUseCase
from app.domain.usecase.ladder_graph_usecase import LadderGraphUseCase
from app.domain.usecase.paths_usecase import PathsUseCase
from app.domain.usecase.polytope_usecase import PolytopeUseCase
from app.domain.usecase.sections_usecase import SectionsUseCase
from app.infrastructure.driven_adapter.report.service.report_writer import ReportWriter
from dependency_injector import containers, providers


class Container(containers.DeclarativeContainer):

    wiring_config = containers.WiringConfiguration(modules=[*Handlers.modules(), *Commands.modules()])

    report_gateway = providers.Factory(ReportWriter)

    ladder_graph_usecase = providers.Factory(LadderGraphUseCase)
    paths_usecase = providers.Factory(PathsUseCase, ladder_graph_usecase=ladder_graph_usecase)
    polytope_usecase = providers.Factory(PolytopeUseCase, paths_usecase=paths_usecase)
    sections_usecase = providers.Factory(SectionsUseCase, paths_usecase=paths_usecase)
    hypergeometric_usecase = providers.Factory(HypergeometricUseCase, paths_usecase=paths_usecase)
    census_usecase = providers.Factory(CensusUseCase, ladder_graph_usecase=ladder_graph_usecase)

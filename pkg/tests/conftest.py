from typing import Tuple

import pytest

from app.application.container import Container
from app.domain.model.ladder_graph import LadderGraph
from app.domain.usecase.census_usecase import CensusUseCase
from app.domain.usecase.hypergeometric_usecase import HypergeometricUseCase
from app.domain.usecase.ladder_graph_usecase import LadderGraphUseCase
from app.domain.usecase.paths_usecase import PathsUseCase
from app.domain.usecase.polytope_usecase import PolytopeUseCase
from app.domain.usecase.sections_usecase import SectionsUseCase


def parse_text(text: str) -> Tuple[Tuple[int, ...], int]:
    steps, ambient = text.split("/")
    return tuple(int(s) for s in steps.split(",")), int(ambient)


@pytest.fixture(scope="session")
def container() -> Container:
    return Container()


@pytest.fixture(scope="session")
def ladder_graph_usecase(container) -> LadderGraphUseCase:
    return container.ladder_graph_usecase()


@pytest.fixture(scope="session")
def paths_usecase(container) -> PathsUseCase:
    return container.paths_usecase()


@pytest.fixture(scope="session")
def polytope_usecase(container) -> PolytopeUseCase:
    return container.polytope_usecase()


@pytest.fixture(scope="session")
def sections_usecase(container) -> SectionsUseCase:
    return container.sections_usecase()


@pytest.fixture(scope="session")
def hypergeometric_usecase(container) -> HypergeometricUseCase:
    return container.hypergeometric_usecase()


@pytest.fixture(scope="session")
def census_usecase(container) -> CensusUseCase:
    return container.census_usecase()


@pytest.fixture(scope="session")
def graph_of(ladder_graph_usecase):
    """Ladder graph of a shape written as "1,2/3"."""
    cache = {}

    def build(text: str) -> LadderGraph:
        if text not in cache:
            steps, ambient = parse_text(text)
            cache[text] = ladder_graph_usecase.build_graph(ladder_graph_usecase.build_shape(steps, ambient))
        return cache[text]

    return build

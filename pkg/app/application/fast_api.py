from fastapi import FastAPI
from app.application.container import Container
from app.application.handler import Handlers
from app.domain.model.util.custom_exceptions import CustomException
from app.infrastructure.entry_point.utils.exception_handler import custom_exception_handler


def create_app():
    container = Container()
    fast_api = FastAPI(title="flagtoric")
    fast_api.container = container
    for handler in Handlers.iterator():
        fast_api.include_router(handler.router)
    fast_api.add_exception_handler(CustomException, custom_exception_handler)
    return fast_api

import importlib
from pathlib import Path
from types import ModuleType
from typing import Iterator, List


class Modules:
    base_path = ()
    ignored = ('__init__.py', '__pycache__')

    @classmethod
    def _all_module_names(cls) -> List[str]:
        root = Path(__file__).resolve().parents[2].joinpath(*cls.base_path)
        return sorted(
            path.name for path in root.iterdir()
            if path.name not in cls.ignored and path.suffix == '.py'
        )

    @classmethod
    def _module_namespace(cls, module_name: str) -> str:
        return '%s.%s' % ('.'.join(cls.base_path), module_name)

    @classmethod
    def iterator(cls) -> Iterator[ModuleType]:
        for module in cls._all_module_names():
            yield importlib.import_module(cls._module_namespace(module[:-3]))

    @classmethod
    def modules(cls) -> List[str]:
        return [cls._module_namespace(module[:-3]) for module in cls._all_module_names()]


class Handlers(Modules):
    base_path = ('app', 'infrastructure', 'entry_point', 'handler')


class Commands(Modules):
    base_path = ('app', 'infrastructure', 'entry_point', 'command')

"""
Problem bundle: an algebra, a free module over it and generators of a submodule
"""

import logging
import pathlib
from dataclasses import dataclass, field
from typing import List, Optional, Union

from .algebra import BasicAlgebra
from .errors import SemanticError
from .free_module import FreeModule, ModuleElement

logger = logging.getLogger(__name__)


@dataclass
class Problem:
    algebra: BasicAlgebra
    module: Optional[FreeModule] = None
    generators: List[ModuleElement] = field(default_factory=list)
    generator_names: List[str] = field(default_factory=list)
    sig_vertices: List[str] = field(default_factory=list)   # vertex of each 𝔢_i
    source: Optional[object] = field(default=None, repr=False)   # ProblemFile when parsed

    @classmethod
    def from_text(cls, text: str, degree_cap: Optional[int] = None) -> "Problem":
        from .parser import parse_problem, resolve_problem
        return resolve_problem(parse_problem(text), degree_cap=degree_cap)

    @classmethod
    def from_file(cls, path: Union[str, pathlib.Path], degree_cap: Optional[int] = None) -> "Problem":
        text = pathlib.Path(path).read_text(encoding="utf-8")
        logger.debug(f"read problem file {path}")
        return cls.from_text(text, degree_cap=degree_cap)

    def require_module(self):
        """Raise unless the problem names a submodule"""
        if self.module is None or not self.generators:
            raise SemanticError("this command needs a module block and a generators block")

    @property
    def rank(self) -> int:
        return self.module.rank if self.module else 0

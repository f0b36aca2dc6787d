"""
Quivers and Paths

A quiver is a finite directed multigraph; its paths are the monomials of
the path algebra P. Multiplication of monomials is concatenation, and a
product of paths whose endpoints do not meet is the distinguished ZERO.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import NotADivisor, QuiverMismatch, SemanticError

logger = logging.getLogger(__name__)


class ZeroPath:
    """The zero result of composing paths whose endpoints do not meet"""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __bool__(self):
        return False


ZERO = ZeroPath()


@dataclass(frozen=True)
class Arrow:
    """A labelled arrow source -> target"""
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """
    A directed path: its endpoints and its arrow sequence

    The empty arrow sequence is the trivial path 1_v (start == end == v).
    """
    start: str
    end: str
    arrows: Tuple[str, ...] = ()
    quiver: Optional["Quiver"] = field(default=None, compare=False, hash=False, repr=False)

    @property
    def degree(self) -> int:
        return len(self.arrows)

    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self):
        if not self.arrows:
            return f"id({self.start})"
        return "*".join(self.arrows)

    def __mul__(self, other: "Path") -> Union["Path", ZeroPath]:
        return compose(self, other)


def compose(a: Path, b: Path) -> Union[Path, ZeroPath]:
    """
    Concatenate two paths

    Returns:
        The path a·b, or ZERO when end(a) != start(b)

    Raises:
        QuiverMismatch: if the paths belong to different quivers
    """
    if a.quiver is not None and b.quiver is not None and a.quiver is not b.quiver:
        raise QuiverMismatch("cannot compose paths of different quivers")
    if a.end != b.start:
        return ZERO
    if not b.arrows:
        return a
    if not a.arrows:
        return b
    return Path(a.start, b.end, a.arrows + b.arrows, a.quiver or b.quiver)


def is_prefix(p: Path, q: Path) -> bool:
    """True iff q = p·r for some path r"""
    if p.start != q.start or p.degree > q.degree:
        return False
    return q.arrows[:p.degree] == p.arrows


def complement(p: Path, q: Path) -> Path:
    """
    The unique path r with p·r = q

    Raises:
        NotADivisor: if p is not a prefix of q
    """
    if not is_prefix(p, q):
        raise NotADivisor(f"{p} is not a prefix of {q}")
    return Path(p.end, q.end, q.arrows[p.degree:], q.quiver or p.quiver)


class Quiver:
    """Finite quiver with ordered vertices and arrows"""

    def __init__(self, vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]]):
        """
        Args:
            vertices: vertex ids, in declaration order
            arrows: (arrow id, source vertex, target vertex) triples
        """
        self.vertices: Tuple[str, ...] = tuple(vertices)
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise SemanticError("duplicate vertex", v)
            seen.add(v)

        self.arrows: Dict[str, Arrow] = {}
        for arrow_id, source, target in arrows:
            if arrow_id in self.arrows or arrow_id in seen:
                raise SemanticError("duplicate id", arrow_id)
            for v in (source, target):
                if v not in seen:
                    raise SemanticError("arrow endpoint is not a declared vertex", v)
            self.arrows[arrow_id] = Arrow(arrow_id, source, target)

        self._out: Dict[str, List[Arrow]] = {v: [] for v in self.vertices}
        for arrow in self.arrows.values():
            self._out[arrow.source].append(arrow)

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def arrows_from(self, vertex: str) -> List[Arrow]:
        return list(self._out[vertex])

    def trivial(self, vertex: str) -> Path:
        if vertex not in self._out:
            raise SemanticError("unknown vertex", vertex)
        return Path(vertex, vertex, (), self)

    def arrow(self, arrow_id: str) -> Path:
        if arrow_id not in self.arrows:
            raise SemanticError("unknown arrow", arrow_id)
        a = self.arrows[arrow_id]
        return Path(a.source, a.target, (arrow_id,), self)

    def path(self, *arrow_ids: str, start: Optional[str] = None) -> Path:
        """
        Build a path from arrow ids; an empty sequence needs start

        Raises:
            SemanticError: unknown arrow or consecutive arrows that do not compose
        """
        if not arrow_ids:
            if start is None:
                raise SemanticError("the trivial path needs a vertex")
            return self.trivial(start)
        for arrow_id in arrow_ids:
            if arrow_id not in self.arrows:
                raise SemanticError("unknown arrow", arrow_id)
        first = self.arrows[arrow_ids[0]]
        if start is not None and first.source != start:
            raise SemanticError("vertex mismatch in path", arrow_ids[0])
        for prev, nxt in zip(arrow_ids, arrow_ids[1:]):
            if self.arrows[prev].target != self.arrows[nxt].source:
                raise SemanticError("vertex mismatch in path", nxt)
        return Path(first.source, self.arrows[arrow_ids[-1]].target, tuple(arrow_ids), self)

    def extend(self, p: Path, arrow_id: str) -> Union[Path, ZeroPath]:
        """p followed by one arrow"""
        a = self.arrows[arrow_id]
        if p.end != a.source:
            return ZERO
        return Path(p.start, a.target, p.arrows + (arrow_id,), self)

    def paths_of_degree(self, degree: int, start: Optional[str] = None) -> Iterator[Path]:
        """All paths of the given degree, optionally from one start vertex"""
        starts = [start] if start is not None else list(self.vertices)
        layer = [self.trivial(v) for v in starts]
        for _ in range(degree):
            layer = [Path(p.start, a.target, p.arrows + (a.id,), self)
                     for p in layer for a in self._out[p.end]]
        return iter(layer)

    def paths_up_to(self, max_degree: int, start: Optional[str] = None) -> List[Path]:
        """All paths of degree <= max_degree"""
        out: List[Path] = []
        for d in range(max_degree + 1):
            out.extend(self.paths_of_degree(d, start))
        return out

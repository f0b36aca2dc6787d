"""
Monomial Orderings

Degree-first orderings on the paths of P with a left-lexicographic
tie-break on arrow precedence ("deglex" / "negdeglex"), and the
term-over-position orderings they induce on the free module F = A^r and
on the signature module E = P^m.

Comparisons go through sort keys: a larger key is a larger monomial.
"""

import logging
from enum import Enum, IntEnum
from typing import Dict, Optional, Sequence, Tuple

from .errors import SemanticError
from .quiver_paths import Path, Quiver

logger = logging.getLogger(__name__)


class OrderMode(Enum):
    POSITIVE_DEGREE = "deglex"
    NEGATIVE_DEGREE = "negdeglex"


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _cmp(a, b) -> Cmp:
    if a < b:
        return Cmp.LT
    if a > b:
        return Cmp.GT
    return Cmp.EQ


class OrderSpec:
    """
    A monomial ordering on P and the orderings induced on F and E

    Degree decides first (higher degree is greater in POSITIVE_DEGREE mode,
    smaller in NEGATIVE_DEGREE mode). Equal degrees compare the arrow
    sequences left to right by precedence index; trivial paths compare by
    vertex declaration order. Module and signature monomials compare their
    paths first and prefer the smaller generator index on ties.
    """

    def __init__(self, mode: OrderMode, arrow_precedence: Sequence[str],
                 vertex_order: Sequence[str]):
        """
        Args:
            mode: degree direction
            arrow_precedence: all arrow ids, lowest precedence first
            vertex_order: all vertex ids, lowest first
        """
        if len(set(arrow_precedence)) != len(arrow_precedence):
            raise SemanticError("arrow precedence lists an arrow twice")
        self.mode = mode
        self.arrow_precedence: Tuple[str, ...] = tuple(arrow_precedence)
        self.vertex_order: Tuple[str, ...] = tuple(vertex_order)
        self._arrow_rank: Dict[str, int] = {a: i for i, a in enumerate(self.arrow_precedence)}
        self._vertex_rank: Dict[str, int] = {v: i for i, v in enumerate(self.vertex_order)}
        self._sign = 1 if mode is OrderMode.POSITIVE_DEGREE else -1
        self._key_cache: Dict[Path, tuple] = {}

    @classmethod
    def for_quiver(cls, quiver: Quiver, mode: OrderMode = OrderMode.NEGATIVE_DEGREE,
                   precedence: Optional[Sequence[str]] = None) -> "OrderSpec":
        """Ordering on a quiver; precedence defaults to arrow declaration order"""
        if precedence is None:
            precedence = list(quiver.arrows)
        elif sorted(precedence) != sorted(quiver.arrows):
            missing = set(quiver.arrows) ^ set(precedence)
            raise SemanticError("precedence must list every arrow exactly once",
                                sorted(missing)[0] if missing else None)
        return cls(mode, precedence, quiver.vertices)

    @property
    def is_negative(self) -> bool:
        return self.mode is OrderMode.NEGATIVE_DEGREE

    def path_key(self, p: Path) -> tuple:
        key = self._key_cache.get(p)
        if key is None:
            if p.arrows:
                key = (self._sign * p.degree, tuple(self._arrow_rank[a] for a in p.arrows))
            else:
                key = (0, (self._vertex_rank[p.start],))
            self._key_cache[p] = key
        return key

    def module_key(self, gen: int, p: Path) -> tuple:
        """Key of 𝔳_gen·p (or 𝔢_gen·p); smaller index wins ties"""
        return (self.path_key(p), -gen)

    def compare_paths(self, a: Path, b: Path) -> Cmp:
        return _cmp(self.path_key(a), self.path_key(b))

    def compare_module_monomials(self, m1: Tuple[int, Path], m2: Tuple[int, Path]) -> Cmp:
        return _cmp(self.module_key(*m1), self.module_key(*m2))

    def compare_signatures(self, s1: Tuple[int, Path], s2: Tuple[int, Path]) -> Cmp:
        return _cmp(self.module_key(*s1), self.module_key(*s2))

    def to_dict(self) -> dict:
        return {"mode": self.mode.value, "precedence": list(self.arrow_precedence)}

    def __repr__(self):
        return f"OrderSpec({self.mode.value}, precedence={list(self.arrow_precedence)})"

"""
Basic Algebras

Builds A = P/I for a two-sided ideal I given by relations of degree >= 2,
inside the truncated path algebra spanned by the paths of degree < N.
The ideal is saturated by left/right arrow multiplication and kept in
echelon form with respect to the monomial ordering; the non-pivot paths
are the standard monomials, and their images are the preferred basis.

Products in A are table driven: mul_table[(b, x)] = ψ(b·x) for every
standard path b and arrow x, general products fold arrow by arrow.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .coeff_field import FieldSpec
from .errors import (DegreeCapExceeded, InconsistentTruncation, InternalInvariantError,
                     InvalidAlgebraSpec, NonHomogeneousAuto, NotBasic, ZeroElement)
from .ordering import OrderSpec
from .quiver_paths import ZERO, Path, Quiver, ZeroPath, compose

logger = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 64

Vector = Dict[Path, int]


def add_scaled(target: Vector, coef: int, source: Vector, p: int):
    """target += coef * source, in place, dropping zeros"""
    for path, value in source.items():
        v = (target.get(path, 0) + coef * value) % p
        if v:
            target[path] = v
        else:
            target.pop(path, None)


class _Echelon:
    """Monic rows indexed by their leading path"""

    def __init__(self, order: OrderSpec, field: FieldSpec):
        self.order = order
        self.field = field
        self.rows: Dict[Path, Vector] = {}

    def leading(self, vec: Vector) -> Path:
        return max(vec, key=self.order.path_key)

    def insert(self, vec: Vector) -> Optional[Vector]:
        """Reduce the head of vec by the rows; store and return it if nonzero"""
        p = self.field.p
        vec = dict(vec)
        while vec:
            lead = self.leading(vec)
            row = self.rows.get(lead)
            if row is None:
                inv = self.field.inv(vec[lead])
                row = {path: value * inv % p for path, value in vec.items()}
                self.rows[lead] = row
                return row
            add_scaled(vec, -vec[lead], row, p)
        return None

    def full_reduce(self, vec: Vector) -> Vector:
        """Remove every pivot path from the support of vec"""
        p = self.field.p
        vec = dict(vec)
        while True:
            pivots = [path for path in vec if path in self.rows]
            if not pivots:
                return vec
            lead = max(pivots, key=self.order.path_key)
            add_scaled(vec, -vec[lead], self.rows[lead], p)


@dataclass
class AlgebraSpec:
    """Presentation of a basic algebra"""
    quiver: Quiver
    field: FieldSpec
    relations: List[Vector]
    order: OrderSpec
    nilpotency_bound: Optional[int] = None   # None means Auto
    degree_cap: int = DEFAULT_DEGREE_CAP

    @property
    def auto(self) -> bool:
        return self.nilpotency_bound is None


class CofactorKind(Enum):
    SMALL = "small"
    TOPPLING = "toppling"
    INVALID = "invalid"


@dataclass(frozen=True)
class CofactorClass:
    """Classification of a cofactor c of a standard monomial b"""
    kind: CofactorKind
    value: Union[Path, ZeroPath, None] = None

    @property
    def is_small(self) -> bool:
        return self.kind is CofactorKind.SMALL


SMALL = CofactorClass(CofactorKind.SMALL)


class AlgebraElement:
    """Sparse K-linear combination of standard paths"""

    __slots__ = ("algebra", "terms", "_lm")

    def __init__(self, algebra: "BasicAlgebra", terms: Optional[Vector] = None):
        self.algebra = algebra
        p = algebra.field.p
        self.terms: Vector = {}
        for path, value in (terms or {}).items():
            value %= p
            if value:
                if not algebra.is_standard(path):
                    raise ValueError(f"{path} is not a standard monomial")
                self.terms[path] = value
        self._lm: Optional[Path] = None

    def is_zero(self) -> bool:
        return not self.terms

    def leading_monomial(self) -> Path:
        if not self.terms:
            raise ZeroElement("the zero element has no leading monomial")
        if self._lm is None:
            self._lm = max(self.terms, key=self.algebra.order.path_key)
        return self._lm

    def leading_data(self) -> Tuple[Path, int, "AlgebraElement"]:
        """(LM, LC, tail)"""
        lm = self.leading_monomial()
        tail = dict(self.terms)
        lc = tail.pop(lm)
        return lm, lc, AlgebraElement(self.algebra, tail)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        terms = dict(self.terms)
        add_scaled(terms, 1, other.terms, self.algebra.field.p)
        return AlgebraElement(self.algebra, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        terms = dict(self.terms)
        add_scaled(terms, -1, other.terms, self.algebra.field.p)
        return AlgebraElement(self.algebra, terms)

    def scale(self, coef: int) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {b: v * coef for b, v in self.terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self.algebra.multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_vector(self.terms, self.algebra.order)

    __repr__ = __str__


def format_vector(terms: Vector, order: OrderSpec) -> str:
    if not terms:
        return "0"
    parts = []
    for path in sorted(terms, key=order.path_key, reverse=True):
        coef = terms[path]
        parts.append(str(path) if coef == 1 else f"{coef}*{path}")
    return " + ".join(parts)


class BasicAlgebra:
    """A finite-dimensional quotient P/I with its preferred basis"""

    def __init__(self, spec: AlgebraSpec, echelon: _Echelon, nilpotency: int):
        self.spec = spec
        self.quiver = spec.quiver
        self.field = spec.field
        self.order = spec.order
        self.N = nilpotency
        self._echelon = echelon

        candidates = self.quiver.paths_up_to(nilpotency - 1)
        self.stdmon: List[Path] = sorted(
            (q for q in candidates if q not in echelon.rows),
            key=self.order.path_key, reverse=True)
        self._std = frozenset(self.stdmon)

        self.mul_table: Dict[Tuple[Path, str], Vector] = {}
        for b in self.stdmon:
            for arrow in self.quiver.arrows_from(b.end):
                bx = self.quiver.extend(b, arrow.id)
                if bx.degree >= self.N:
                    self.mul_table[(b, arrow.id)] = {}
                else:
                    self.mul_table[(b, arrow.id)] = echelon.full_reduce({bx: 1})

        self._product_cache: Dict[Tuple[Path, Path], Vector] = {}
        self._class_cache: Dict[Path, CofactorClass] = {}
        self._bfs_cache: Dict[Path, Tuple[List[Path], List[Tuple[Path, Union[Path, ZeroPath]]]]] = {}

    @property
    def dim(self) -> int:
        return len(self.stdmon)

    def is_standard(self, q: Path) -> bool:
        return q in self._std

    def element(self, terms: Optional[Vector] = None) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def monomial(self, b: Path) -> AlgebraElement:
        return AlgebraElement(self, {b: 1})

    def reduce(self, vector: Vector) -> Vector:
        """ψ of a P-vector, written on standard paths"""
        truncated = {q: v % self.field.p for q, v in vector.items()
                     if q.degree < self.N and v % self.field.p}
        return self._echelon.full_reduce(truncated)

    def multiply_paths(self, b: Path, c: Path) -> Vector:
        """ψ(b·c) for arbitrary paths, folding the arrows of c through mul_table"""
        key = (b, c)
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached
        if b.end != c.start:
            result: Vector = {}
        else:
            result = {b: 1} if b in self._std else self.reduce({b: 1})
            p = self.field.p
            for arrow_id in c.arrows:
                nxt: Vector = {}
                for s, coef in result.items():
                    add_scaled(nxt, coef, self.mul_table[(s, arrow_id)], p)
                result = nxt
                if not result:
                    break
        if b in self._std and c in self._std:
            self._product_cache[key] = result
        return result

    def multiply(self, f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
        """ψ(λ(f)·λ(g))"""
        p = self.field.p
        out: Vector = {}
        for b, fb in f.terms.items():
            for c, gc in g.terms.items():
                add_scaled(out, fb * gc, self.multiply_paths(b, c), p)
        return AlgebraElement(self, out)

    def leading_path(self, vector: Vector) -> Path:
        return max(vector, key=self.order.path_key)

    def classify_cofactor(self, b: Path, c: Path) -> CofactorClass:
        """
        Small, TopplingCofactor(t) or Invalid for the cofactor c of b

        A cofactor is small exactly when the concatenation b·c is itself a
        standard path; otherwise t is LM(ψ(b·c)), or ZERO if the product
        vanishes or the endpoints do not meet.
        """
        for q in (b, c):
            if q not in self._std:
                return CofactorClass(CofactorKind.INVALID, q)
        concat = compose(b, c)
        if concat is ZERO:
            return CofactorClass(CofactorKind.TOPPLING, ZERO)
        cached = self._class_cache.get(concat)
        if cached is not None:
            return cached
        if concat in self._std:
            result = SMALL
        else:
            product = self.multiply_paths(b, c)
            value = self.leading_path(product) if product else ZERO
            result = CofactorClass(CofactorKind.TOPPLING, value)
        self._class_cache[concat] = result
        return result

    def _explore(self, b: Path):
        cached = self._bfs_cache.get(b)
        if cached is not None:
            return cached
        if b not in self._std:
            raise ValueError(f"{b} is not a standard monomial")
        start = self.quiver.trivial(b.end)
        small: List[Path] = [start]
        topplings: List[Tuple[Path, Union[Path, ZeroPath]]] = []
        i = 0
        while i < len(small):
            c = small[i]
            i += 1
            for arrow in self.quiver.arrows_from(c.end):
                cx = self.quiver.extend(c, arrow.id)
                # a standard cofactor never has a nonstandard prefix
                if cx not in self._std:
                    continue
                cls = self.classify_cofactor(b, cx)
                if cls.is_small:
                    small.append(cx)
                else:
                    topplings.append((cx, cls.value))
        self._bfs_cache[b] = (small, topplings)
        return small, topplings

    def minimal_topplings(self, b: Path) -> List[Tuple[Path, Union[Path, ZeroPath]]]:
        """(cofactor, toppling) for every minimal toppling of b"""
        return list(self._explore(b)[1])

    def small_cofactors(self, b: Path) -> List[Path]:
        """All small cofactors of b, trivial path first"""
        return list(self._explore(b)[0])

    def is_small_cofactor(self, b: Path, c: Path) -> bool:
        return self.classify_cofactor(b, c).is_small

    def to_dict(self) -> dict:
        return {
            "field": self.field.p,
            "dim": self.dim,
            "stdmon_count": len(self.stdmon),
            "nilpotency": self.N,
            "order": self.order.to_dict(),
            "stdmon": [str(b) for b in self.stdmon],
        }

    def __repr__(self):
        return f"BasicAlgebra(dim={self.dim}, N={self.N}, field={self.field})"


def _validate(spec: AlgebraSpec) -> List[Vector]:
    p = spec.field.p
    relations: List[Vector] = []
    for rel in spec.relations:
        rel = {q: v % p for q, v in rel.items() if v % p}
        if not rel:
            continue
        paths = list(rel)
        if len({(q.start, q.end) for q in paths}) != 1:
            raise InvalidAlgebraSpec(f"relation {format_vector(rel, spec.order)} is not vertex-homogeneous")
        low = min(paths, key=lambda q: q.degree)
        if low.degree < 2:
            raise NotBasic(f"relation {format_vector(rel, spec.order)} has the term {low} "
                           f"of degree {low.degree}; basic algebras need relations of degree >= 2")
        if spec.auto and len({q.degree for q in paths}) != 1:
            raise NonHomogeneousAuto(f"relation {format_vector(rel, spec.order)} is not "
                                     f"degree-homogeneous; give an explicit nilpotency bound")
        relations.append(rel)
    # without arrows only the vertices survive and N = 1, as Auto finds
    floor = 2 if spec.quiver.arrows else 1
    if not spec.auto and spec.nilpotency_bound < floor:
        raise NotBasic(f"nilpotency bound {spec.nilpotency_bound} kills the arrows; it must be >= {floor}")
    return relations


def _left(quiver: Quiver, arrow_id: str, vec: Vector, bound: int) -> Vector:
    arrow = quiver.arrows[arrow_id]
    out: Vector = {}
    for q, v in vec.items():
        if q.start == arrow.target and q.degree + 1 < bound:
            out[Path(arrow.source, q.end, (arrow_id,) + q.arrows, quiver)] = v
    return out


def _right(quiver: Quiver, arrow_id: str, vec: Vector, bound: int) -> Vector:
    arrow = quiver.arrows[arrow_id]
    out: Vector = {}
    for q, v in vec.items():
        if q.end == arrow.source and q.degree + 1 < bound:
            out[Path(q.start, arrow.target, q.arrows + (arrow_id,), quiver)] = v
    return out


def _saturate(spec: AlgebraSpec, relations: Sequence[Vector], bound: int) -> _Echelon:
    """Span of all truncated a·r·b inside the paths of degree < bound"""
    echelon = _Echelon(spec.order, spec.field)
    queue: List[Vector] = [{q: v for q, v in rel.items() if q.degree < bound} for rel in relations]
    arrows = list(spec.quiver.arrows)
    while queue:
        row = echelon.insert(queue.pop())
        if row is None:
            continue
        for x in arrows:
            for product in (_left(spec.quiver, x, row, bound), _right(spec.quiver, x, row, bound)):
                if product:
                    queue.append(product)
    return echelon


def _saturate_by_degree(spec: AlgebraSpec, relations: Sequence[Vector]) -> Tuple[_Echelon, int]:
    """Homogeneous case: grow the ideal one degree at a time until it swallows a whole degree"""
    echelon = _Echelon(spec.order, spec.field)
    by_degree: Dict[int, List[Vector]] = {}
    for rel in relations:
        by_degree.setdefault(next(iter(rel)).degree, []).append(rel)
    arrows = list(spec.quiver.arrows)
    layer: List[Vector] = []
    d = 1
    while True:
        if d > spec.degree_cap:
            raise DegreeCapExceeded(f"no degree up to {spec.degree_cap} is fully inside the ideal; "
                                    f"the algebra looks infinite-dimensional")
        candidates = list(by_degree.get(d, []))
        for row in layer:
            for x in arrows:
                for product in (_left(spec.quiver, x, row, d + 1), _right(spec.quiver, x, row, d + 1)):
                    if product:
                        candidates.append(product)
        layer = []
        for vec in candidates:
            row = echelon.insert(vec)
            if row is not None:
                layer.append(row)
        if all(q in echelon.rows for q in spec.quiver.paths_of_degree(d)):
            return echelon, d
        d += 1


def build_algebra(spec: AlgebraSpec) -> BasicAlgebra:
    """
    Compute standard monomials, preferred basis and multiplication table

    Raises:
        NotBasic: a path of degree 0 or 1 would lie in the ideal
        NonHomogeneousAuto: Auto bound with inhomogeneous relations
        DegreeCapExceeded: Auto detection found no nilpotency bound
        InconsistentTruncation: the declared bound is too small
    """
    relations = _validate(spec)

    if spec.auto:
        echelon, nilpotency = _saturate_by_degree(spec, relations)
    else:
        nilpotency = spec.nilpotency_bound
        check = _saturate(spec, relations, nilpotency + 1)
        stray = [q for q in spec.quiver.paths_of_degree(nilpotency) if q not in check.rows]
        if stray:
            raise InconsistentTruncation(
                f"the path {stray[0]} of degree {nilpotency} does not vanish modulo the relations; "
                f"raise the nilpotency bound")
        echelon = _saturate(spec, relations, nilpotency)

    low = [q for q in echelon.rows if q.degree < 2]
    if low:
        raise NotBasic(f"the path {low[0]} of degree {low[0].degree} lies in the ideal")

    algebra = BasicAlgebra(spec, echelon, nilpotency)
    for b in algebra.stdmon:
        if b.arrows:
            prefix = Path(b.start, spec.quiver.arrows[b.arrows[-1]].source, b.arrows[:-1], spec.quiver)
            if not algebra.is_standard(prefix):
                raise InternalInvariantError(f"standard path {b} has nonstandard prefix {prefix}")

    logger.info(f"✅ Built basic algebra over {spec.field}: dim {algebra.dim}, nilpotency {nilpotency}")
    return algebra

"""
Free Modules over a Basic Algebra

F = ⊕ 𝔳_i·A with every generator 𝔳_i attached to a vertex v_i, so the
monomials 𝔳_i·b use standard paths b starting at v_i. A copy of the whole
algebra is one generator per vertex. A acts from the right, component by
component.

Signature is the monomial type of the signature module E = ⊕ 𝔢_j·P; it
lives here because both reduction and F5 compare against it.
"""

import logging
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .algebra import AlgebraElement, BasicAlgebra, add_scaled
from .errors import InternalInvariantError, SemanticError, ZeroElement
from .quiver_paths import ZERO, Path, compose, complement, is_prefix

logger = logging.getLogger(__name__)


class ModuleMonomial(NamedTuple):
    gen: int      # 0-based generator index
    mono: Path


class Signature(NamedTuple):
    """The monomial 𝔢_index·path of E"""
    index: int
    path: Path

    def times(self, c: Path) -> "Signature":
        """𝔢_i·(path·c)"""
        product = compose(self.path, c)
        if product is ZERO:
            raise InternalInvariantError(f"signature path {self.path} does not compose with {c}")
        return Signature(self.index, product)

    def __str__(self):
        return f"e{self.index + 1}*{self.path}"


class FreeModule:
    """The free right module ⊕ 𝔳_i·A with vertex-tagged generators"""

    def __init__(self, algebra: BasicAlgebra, gens: Sequence[Tuple[str, str]]):
        """
        Args:
            algebra: the coefficient algebra
            gens: (name, vertex) for each free generator, in index order
        """
        self.algebra = algebra
        self.names: Tuple[str, ...] = tuple(name for name, _ in gens)
        self.vertices: Tuple[str, ...] = tuple(vertex for _, vertex in gens)
        if len(set(self.names)) != len(self.names):
            dup = next(n for n in self.names if self.names.count(n) > 1)
            raise SemanticError("duplicate free generator", dup)
        for name, vertex in gens:
            if vertex not in algebra.quiver.vertices:
                raise SemanticError("free generator attached to an unknown vertex", vertex)
        self._index = {name: i for i, name in enumerate(self.names)}

    @property
    def rank(self) -> int:
        return len(self.names)

    @property
    def order(self):
        return self.algebra.order

    def index_of(self, name: str) -> int:
        if name not in self._index:
            raise SemanticError("unknown free generator", name)
        return self._index[name]

    def monomials(self) -> List[ModuleMonomial]:
        """Every 𝔳_i·b, greatest first"""
        out = [ModuleMonomial(i, b) for i, v in enumerate(self.vertices)
               for b in self.algebra.stdmon if b.start == v]
        return sorted(out, key=self.key, reverse=True)

    def key(self, m: ModuleMonomial) -> tuple:
        return self.algebra.order.module_key(m.gen, m.mono)

    def element(self, terms: Optional[Dict[ModuleMonomial, int]] = None) -> "ModuleElement":
        return ModuleElement(self, terms)

    def basis_element(self, i: int) -> "ModuleElement":
        return ModuleElement(self, {ModuleMonomial(i, self.algebra.quiver.trivial(self.vertices[i])): 1})

    def zero(self) -> "ModuleElement":
        return ModuleElement(self)

    def format_monomial(self, m: ModuleMonomial) -> str:
        return f"{self.names[m.gen]}*{m.mono}"

    def to_dict(self) -> dict:
        return {"rank": self.rank,
                "generators": [{"name": n, "vertex": v} for n, v in zip(self.names, self.vertices)]}

    def __repr__(self):
        return f"FreeModule(rank={self.rank})"


class ModuleElement:
    """Sparse K-linear combination of module monomials"""

    __slots__ = ("module", "terms", "_lm")

    def __init__(self, module: FreeModule, terms: Optional[Dict[ModuleMonomial, int]] = None,
                 _trusted: bool = False):
        self.module = module
        self._lm: Optional[ModuleMonomial] = None
        if _trusted:
            self.terms = terms
            return
        p = module.algebra.field.p
        self.terms: Dict[ModuleMonomial, int] = {}
        for m, value in (terms or {}).items():
            value %= p
            if not value:
                continue
            m = ModuleMonomial(*m)
            if not module.algebra.is_standard(m.mono):
                raise ValueError(f"{m.mono} is not a standard monomial")
            if m.mono.start != module.vertices[m.gen]:
                raise ValueError(f"{module.format_monomial(m)} does not start at vertex "
                                 f"{module.vertices[m.gen]}")
            self.terms[m] = value

    def is_zero(self) -> bool:
        return not self.terms

    def leading_monomial(self) -> ModuleMonomial:
        if not self.terms:
            raise ZeroElement("the zero element has no leading monomial")
        if self._lm is None:
            self._lm = max(self.terms, key=self.module.key)
        return self._lm

    @property
    def lm(self) -> ModuleMonomial:
        return self.leading_monomial()

    @property
    def lc(self) -> int:
        return self.terms[self.leading_monomial()]

    def leading_data(self) -> Tuple[ModuleMonomial, int, "ModuleElement"]:
        return leading_data(self)

    def _combine(self, coef: int, other: "ModuleElement") -> "ModuleElement":
        terms = dict(self.terms)
        add_scaled(terms, coef, other.terms, self.module.algebra.field.p)
        return ModuleElement(self.module, terms, _trusted=True)

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        return self._combine(1, other)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self._combine(-1, other)

    def __neg__(self) -> "ModuleElement":
        return self.scale(-1)

    def scale(self, coef: int) -> "ModuleElement":
        p = self.module.algebra.field.p
        coef %= p
        if not coef:
            return self.module.zero()
        return ModuleElement(self.module, {m: v * coef % p for m, v in self.terms.items()}, _trusted=True)

    def __mul__(self, coef: int) -> "ModuleElement":
        return self.scale(coef)

    __rmul__ = __mul__

    def monic(self) -> "ModuleElement":
        """Scaled to leading coefficient 1"""
        if not self.terms:
            return self
        return self.scale(self.module.algebra.field.inv(self.lc))

    def act(self, a: AlgebraElement) -> "ModuleElement":
        return act(self, a)

    def act_path(self, c: Path) -> "ModuleElement":
        return act_path(self, c)

    def end_vertex(self) -> Optional[str]:
        """The common end vertex of all terms, None if zero or mixed"""
        ends = {m.mono.end for m in self.terms}
        return ends.pop() if len(ends) == 1 else None

    def __eq__(self, other):
        return isinstance(other, ModuleElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=self.module.key, reverse=True):
            coef = self.terms[m]
            text = self.module.format_monomial(m)
            parts.append(text if coef == 1 else f"{coef}*{text}")
        return " + ".join(parts)

    __repr__ = __str__


def act_path(f: ModuleElement, c: Path) -> ModuleElement:
    """f·ψ(c) for any path c of the quiver"""
    algebra = f.module.algebra
    p = algebra.field.p
    out: Dict[ModuleMonomial, int] = {}
    for m, coef in f.terms.items():
        for b, value in algebra.multiply_paths(m.mono, c).items():
            key = ModuleMonomial(m.gen, b)
            v = (out.get(key, 0) + coef * value) % p
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return ModuleElement(f.module, out, _trusted=True)


def act(f: ModuleElement, a: AlgebraElement) -> ModuleElement:
    """
    Right action f·a, component-wise through the algebra multiplication

    Args:
        f: element of F
        a: element of the algebra F is defined over

    Returns:
        The product in F
    """
    if a.algebra is not f.module.algebra:
        raise ValueError("module element and algebra element live over different algebras")
    result = f.module.zero()
    for c, coef in a.terms.items():
        result = result._combine(coef, act_path(f, c))
    return result


def leading_data(f: ModuleElement) -> Tuple[ModuleMonomial, int, ModuleElement]:
    """
    (LM, LC, tail) of a nonzero element

    Raises:
        ZeroElement: if f = 0
    """
    lm = f.leading_monomial()
    tail = dict(f.terms)
    lc = tail.pop(lm)
    return lm, lc, ModuleElement(f.module, tail, _trusted=True)


def strict_divides(m1: ModuleMonomial, m2: ModuleMonomial) -> Tuple[bool, Optional[Path]]:
    """
    Strict divisibility 𝔳_i·b1 ∥ 𝔳_j·b2

    Holds iff i == j and b1 is a prefix of b2; the complement is then the
    (standard, small) cofactor.
    """
    if m1.gen != m2.gen or not is_prefix(m1.mono, m2.mono):
        return False, None
    return True, complement(m1.mono, m2.mono)


def prefixes(b: Path) -> List[Path]:
    """All prefixes of b, trivial path first"""
    quiver = b.quiver
    out = [Path(b.start, b.start, (), quiver)]
    for k in range(1, b.degree + 1):
        end = quiver.arrows[b.arrows[k - 1]].target
        out.append(Path(b.start, end, b.arrows[:k], quiver))
    return out


def sum_elements(module: FreeModule, parts: Iterable[Tuple[int, ModuleElement]]) -> ModuleElement:
    """Σ coef·element"""
    result = module.zero()
    for coef, element in parts:
        result = result._combine(coef, element)
    return result

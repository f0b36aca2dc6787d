"""
Linear-Algebra Oracle

Brute-force ground truth for desk-scale instances. F is treated as the
vector space K^n on its monomials (greatest first), the submodule M as the
row space spanned by all ĝ_i·b, b standard. Row reduction mod p over numpy
int64 arrays gives dim M, its leading monomials (the pivots) and the
radical filtration. Nothing here uses the reduction or F5 code; only the
algebra multiplication.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import OracleTooLarge
from .free_module import FreeModule, ModuleElement, ModuleMonomial, Signature, act_path, strict_divides
from .quiver_paths import ZERO, Path, compose

logger = logging.getLogger(__name__)

DEFAULT_MAX_DIM = 512
DEFAULT_MAX_ELEMENTS = 65536


def row_reduce_mod_p(M: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form of an integer matrix over F_p

    Args:
        M: (m x n) integer matrix
        p: prime modulus

    Returns:
        (R, pivot_cols): the nonzero rows of the RREF and their pivot columns
    """
    R = np.asarray(M, dtype=np.int64) % p
    if R.ndim != 2 or R.shape[0] == 0:
        return np.zeros((0, R.shape[-1] if R.ndim == 2 else 0), dtype=np.int64), []
    m, n = R.shape
    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        nonzero = np.nonzero(R[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        inv = pow(int(R[pivot_row, col]), p - 2, p)
        R[pivot_row] = R[pivot_row] * inv % p
        factors = R[:, col].copy()
        factors[pivot_row] = 0
        R = (R - np.outer(factors, R[pivot_row])) % p
        pivot_cols.append(col)
        pivot_row += 1
    return R[:pivot_row], pivot_cols


def rank_mod_p(M: np.ndarray, p: int) -> int:
    return len(row_reduce_mod_p(M, p)[1])


class DenseSpace:
    """Coordinates of F on its monomials, greatest monomial in column 0"""

    def __init__(self, module: FreeModule, max_dim: int = DEFAULT_MAX_DIM):
        self.module = module
        self.p = module.algebra.field.p
        self.monomials: List[ModuleMonomial] = module.monomials()
        if len(self.monomials) > max_dim:
            raise OracleTooLarge(f"dim F = {len(self.monomials)} exceeds the oracle cap {max_dim}")
        self.column = {m: j for j, m in enumerate(self.monomials)}

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def vector(self, f: ModuleElement) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        for m, coef in f.terms.items():
            v[self.column[m]] = coef
        return v

    def matrix(self, elements: Sequence[ModuleElement]) -> np.ndarray:
        if not elements:
            return np.zeros((0, self.dim), dtype=np.int64)
        return np.array([self.vector(f) for f in elements], dtype=np.int64)

    def element(self, v: np.ndarray) -> ModuleElement:
        return self.module.element({self.monomials[j]: int(v[j]) for j in np.nonzero(v)[0]})


@dataclass
class OracleEchelon:
    dim: int
    pivots: List[ModuleMonomial]
    basis: List[ModuleElement]
    space: DenseSpace = field(repr=False)

    def to_dict(self) -> dict:
        fmt = self.space.module.format_monomial
        return {"dim": self.dim, "pivots": [fmt(m) for m in self.pivots]}


def _spanning_rows(gens: Sequence[ModuleElement]) -> List[ModuleElement]:
    if not gens:
        return []
    algebra = gens[0].module.algebra
    return [act_path(g, b) for g in gens for b in algebra.stdmon]


def module_echelon(module: FreeModule, gens: Sequence[ModuleElement],
                   max_dim: int = DEFAULT_MAX_DIM) -> OracleEchelon:
    """
    Echelon basis of M = <gens>

    Returns:
        dim M, the pivot monomials (= the leading monomials of M) and the
        echelon basis, greatest pivot first
    """
    space = DenseSpace(module, max_dim)
    R, pivots = row_reduce_mod_p(space.matrix(_spanning_rows(gens)), space.p)
    return OracleEchelon(len(pivots), [space.monomials[j] for j in pivots],
                         [space.element(row) for row in R], space)


def radical_filtration(module: FreeModule, gens: Sequence[ModuleElement],
                       max_dim: int = DEFAULT_MAX_DIM) -> List[int]:
    """[dim M, dim Rad(M), dim Rad^2(M), ..., 0]"""
    echelon = module_echelon(module, gens, max_dim)
    space = echelon.space
    arrows = [module.algebra.quiver.arrow(a) for a in module.algebra.quiver.arrows]
    dims = [echelon.dim]
    current = echelon.basis
    while current:
        products = [act_path(f, x) for f in current for x in arrows]
        R, _ = row_reduce_mod_p(space.matrix(products), space.p)
        current = [space.element(row) for row in R]
        dims.append(len(current))
    return dims


def loewy_dims_from_filtration(dims: Sequence[int]) -> List[int]:
    """First differences, dropping the trailing zero"""
    return [a - b for a, b in zip(dims, dims[1:])]


def minimal_lm_set(lms) -> frozenset:
    """Leading monomials not strictly divisible by another one in the set"""
    lms = set(lms)
    return frozenset(m for m in lms
                     if not any(o != m and strict_divides(o, m)[0] for o in lms))


def verify_standard_basis(module: FreeModule, gens: Sequence[ModuleElement],
                          B: Sequence[ModuleElement], max_dim: int = DEFAULT_MAX_DIM) -> bool:
    """
    B is a standard basis of <gens>

    Every pivot of M is strictly divisible by some LM(b), every b lies in
    M, and every LM(b) is a pivot.
    """
    echelon = module_echelon(module, gens, max_dim)
    space = echelon.space
    pivots = set(echelon.pivots)
    lms = [b.lm for b in B if not b.is_zero()]
    for m in pivots:
        if not any(strict_divides(lm, m)[0] for lm in lms):
            logger.debug(f"pivot {module.format_monomial(m)} is not covered")
            return False
    for b in B:
        if b.is_zero():
            continue
        if b.lm not in pivots:
            logger.debug(f"leading monomial of {b} is not a pivot")
            return False
        stacked = space.matrix(echelon.basis + [b])
        if rank_mod_p(stacked, space.p) != echelon.dim:
            logger.debug(f"{b} does not lie in the submodule")
            return False
    return True


def _signature_vertex(g: ModuleElement, i: int, sig_vertices: Optional[Sequence[str]]) -> str:
    vertex = g.end_vertex()
    if vertex is None:
        vertex = sig_vertices[i] if sig_vertices else g.module.vertices[0]
    return vertex


def signature_monomials(gens: Sequence[ModuleElement],
                        sig_vertices: Optional[Sequence[str]] = None) -> List[Signature]:
    """All 𝔢_i·p with p a path of degree < N from the vertex of 𝔢_i, greatest first"""
    algebra = gens[0].module.algebra
    out = []
    for i, g in enumerate(gens):
        vertex = _signature_vertex(g, i, sig_vertices)
        out.extend(Signature(i, p) for p in algebra.quiver.paths_up_to(algebra.N - 1, vertex))
    return sorted(out, key=lambda s: algebra.order.module_key(s.index, s.path), reverse=True)


def signed_elements_by_lm(gens: Sequence[ModuleElement], sig_vertices: Optional[Sequence[str]] = None,
                          max_elements: int = DEFAULT_MAX_ELEMENTS) -> Dict[ModuleMonomial, List[Signature]]:
    """
    LM of ev(w) -> signatures LM(w), over every nonzero E-element w of path
    degree < N with ev(w) != 0
    """
    algebra = gens[0].module.algebra
    p = algebra.field.p
    sigs = signature_monomials(gens, sig_vertices)
    if p ** len(sigs) > max_elements:
        raise OracleTooLarge(f"{p}^{len(sigs)} signature combinations exceed the cap {max_elements}")
    space = DenseSpace(gens[0].module)
    images = space.matrix([act_path(gens[s.index], s.path) for s in sigs])

    found: Dict[ModuleMonomial, set] = {}
    for coeffs in itertools.product(range(p), repeat=len(sigs)):
        w = np.array(coeffs, dtype=np.int64)
        support = np.nonzero(w)[0]
        if support.size == 0:
            continue
        f = w @ images % p if images.size else np.zeros(space.dim, dtype=np.int64)
        nonzero = np.nonzero(f)[0]
        if nonzero.size == 0:
            continue
        found.setdefault(space.monomials[int(nonzero[0])], set()).add(sigs[int(support[0])])
    key = lambda s: algebra.order.module_key(s.index, s.path)
    return {m: sorted(v, key=key) for m, v in found.items()}


def exhaustive_signed_check(gens: Sequence[ModuleElement], basis, sig_vertices: Optional[Sequence[str]] = None,
                            max_elements: int = DEFAULT_MAX_ELEMENTS) -> List[Tuple[ModuleMonomial, Signature]]:
    """
    Literal signed standard basis test on a tiny instance

    Every signed element (LM, s) of M that is s-irreducible with respect to
    all of M must be weakly s-reducible with respect to basis.

    Returns:
        The counterexamples (empty on success)
    """
    elements = list(basis.basis) if hasattr(basis, "basis") else list(basis)
    algebra = gens[0].module.algebra
    order = algebra.order
    key = lambda s: order.module_key(s.index, s.path)
    by_lm = signed_elements_by_lm(gens, sig_vertices, max_elements)

    def reducible_by_m(m: ModuleMonomial, s: Signature) -> bool:
        for m2, sigs in by_lm.items():
            ok, c = strict_divides(m2, m)
            if not ok:
                continue
            for t in sigs:
                product = compose(t.path, c)
                if product is not ZERO and key(Signature(t.index, product)) < key(s):
                    return True
        return False

    def weakly_reducible_by_g(m: ModuleMonomial, s: Signature) -> bool:
        for g in elements:
            ok, c = strict_divides(g.lm, m)
            if not ok:
                continue
            product = compose(g.sig.path, c)
            if product is not ZERO and key(Signature(g.sig.index, product)) <= key(s):
                return True
        return False

    failures = []
    for m, sigs in by_lm.items():
        for s in sigs:
            if not reducible_by_m(m, s) and not weakly_reducible_by_g(m, s):
                failures.append((m, s))
    return failures

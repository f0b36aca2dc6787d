"""
Normal Forms

Head reduction of module elements by a finite set of reducers, unsigned
and signed. Each call also returns the standard representation of the
removed part, so every reduction can be replayed and checked exactly.

When several reducers strictly divide the leading monomial, the one with
the greatest leading monomial wins; ties go to the earliest in the list.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InternalInvariantError
from .free_module import (FreeModule, ModuleElement, ModuleMonomial, Signature, act_path,
                          prefixes, sum_elements)
from .quiver_paths import ZERO, Path, compose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepresentationTerm:
    """One summand α·g·c of a standard representation"""
    coeff: int
    index: int            # position of the reducer in the list passed in
    reducer: ModuleElement
    cofactor: Path
    signature: Optional[Signature] = None


@dataclass
class StandardRepresentation:
    """Σ α_i·g_i·c_i, recorded in the order the reductions happened"""
    module: FreeModule
    terms: List[RepresentationTerm] = field(default_factory=list)

    def replay(self) -> ModuleElement:
        """Recompute Σ α_i·act(g_i, c_i)"""
        return sum_elements(self.module, ((t.coeff, act_path(t.reducer, t.cofactor)) for t in self.terms))

    def __len__(self):
        return len(self.terms)


class _DivisorIndex:
    """Leading monomial -> reducers with that leading monomial, in list order"""

    def __init__(self, polys: Sequence[ModuleElement]):
        self.by_lm: Dict[ModuleMonomial, List[int]] = {}
        for i, g in enumerate(polys):
            if g.is_zero():
                raise ValueError("reducers must be nonzero")
            self.by_lm.setdefault(g.lm, []).append(i)

    def divisors(self, lm: ModuleMonomial) -> List[Tuple[int, Path]]:
        """(reducer index, cofactor) for every reducer whose LM strictly divides lm"""
        out = []
        for prefix in prefixes(lm.mono):
            hits = self.by_lm.get(ModuleMonomial(lm.gen, prefix))
            if hits:
                c = Path(prefix.end, lm.mono.end, lm.mono.arrows[prefix.degree:], lm.mono.quiver)
                out.extend((i, c) for i in hits)
        return out


def _reduce(f: ModuleElement, polys: Sequence[ModuleElement],
            sigs: Optional[Sequence[Signature]], bound: Optional[Signature],
            record: bool) -> Tuple[ModuleElement, StandardRepresentation]:
    module = f.module
    key = module.key
    order = module.algebra.order
    field_ = module.algebra.field
    index = _DivisorIndex(polys)
    bound_key = order.module_key(bound.index, bound.path) if bound is not None else None

    rep = StandardRepresentation(module)
    r = f
    while not r.is_zero():
        lm = r.lm
        best = None
        for i, c in index.divisors(lm):
            sig = None
            if sigs is not None:
                product = compose(sigs[i].path, c)
                if product is ZERO:
                    continue
                sig = Signature(sigs[i].index, product)
                if not order.module_key(sig.index, sig.path) < bound_key:
                    continue
            if best is None or key(polys[i].lm) > key(polys[best[0]].lm):
                best = (i, c, sig)
        if best is None:
            break
        i, c, sig = best
        g = polys[i]
        coef = field_.div(r.lc, g.lc)
        r = r - act_path(g, c).scale(coef)
        if not r.is_zero() and key(r.lm) >= key(lm):
            raise InternalInvariantError(f"reduction by {g} did not lower the leading monomial {lm}")
        if record:
            rep.terms.append(RepresentationTerm(coef, i, g, c, sig))
    return r, rep


def normal_form(f: ModuleElement, G: Sequence[ModuleElement],
                record: bool = True) -> Tuple[ModuleElement, StandardRepresentation]:
    """
    Head-reduce f by G until its leading monomial has no strict divisor

    Args:
        f: element to reduce
        G: nonzero reducers
        record: keep the standard representation

    Returns:
        (nf, rep) with f = nf + rep.replay()
    """
    return _reduce(f, G, None, None, record)


def signed_normal_form(f: ModuleElement, G: Sequence, s: Signature,
                       record: bool = True) -> Tuple[ModuleElement, StandardRepresentation]:
    """
    Reduce f by signed elements, admitting g·c only when σ(g)·c < s

    Args:
        f: element to reduce
        G: signed elements (anything with .poly and .sig)
        s: the bounding signature

    Returns:
        (nf, rep); nf is s-irreducible and f = nf + rep.replay()
    """
    return _reduce(f, [g.poly for g in G], [g.sig for g in G], s, record)


def is_reducible(f: ModuleElement, G: Sequence[ModuleElement]) -> bool:
    """True iff some LM(g) strictly divides LM(f)"""
    if f.is_zero():
        return False
    return bool(_DivisorIndex(G).divisors(f.lm))


def is_sig_reducible(f: ModuleElement, G: Sequence, s: Signature) -> bool:
    """True iff f is s-reducible: some g·c with LM(g)·c = LM(f) and σ(g)·c < s"""
    if f.is_zero():
        return False
    return is_sig_reducible_monomial(f.lm, G, s)


def is_sig_reducible_monomial(lm: ModuleMonomial, G: Sequence, s: Signature) -> bool:
    """s-reducibility of anything with leading monomial lm"""
    if not G:
        return False
    order = G[0].poly.module.algebra.order
    bound = order.module_key(s.index, s.path)
    for i, c in _DivisorIndex([g.poly for g in G]).divisors(lm):
        product = compose(G[i].sig.path, c)
        if product is not ZERO and order.module_key(G[i].sig.index, product) < bound:
            return True
    return False

"""
Signature-based Standard Bases (F5)

Every element of the basis carries a signature: the leading monomial of
an element of E = ⊕ 𝔢_j·P that evaluates to it. Critical pairs come in
two kinds, T (a minimal toppling of one element) and S (the leading
monomial of one element times a small cofactor meets another's). Pairs
are processed highest signature first. Two criteria discard work before
any reduction happens:

- the F5 criterion: the pair's signature is a multiple of a known syzygy
  signature (the set L);
- the rewritten criterion: some basis element times a small cofactor
  already has that signature and an irreducible product.

Basis elements are kept monic.
"""

import heapq
import itertools
import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import InternalInvariantError, SemanticError
from .free_module import ModuleElement, ModuleMonomial, Signature, act_path, prefixes, strict_divides
from .quiver_paths import ZERO, Path, compose, complement, is_prefix
from .reduction import is_sig_reducible, is_sig_reducible_monomial, signed_normal_form

logger = logging.getLogger(__name__)

_uids = itertools.count()

EElement = Dict[Signature, int]


def _e_times(w: Optional[EElement], c: Path) -> Optional[EElement]:
    if w is None:
        return None
    out: EElement = {}
    for sig, v in w.items():
        product = compose(sig.path, c)
        if product is not ZERO:
            out[Signature(sig.index, product)] = v
    return out


def _e_combine(w: Optional[EElement], coef: int, other: Optional[EElement], p: int) -> Optional[EElement]:
    """w + coef·other"""
    if w is None or other is None:
        return None
    out = dict(w)
    for sig, v in other.items():
        value = (out.get(sig, 0) + coef * v) % p
        if value:
            out[sig] = value
        else:
            out.pop(sig, None)
    return out


@dataclass(eq=False)
class SignedElement:
    """A module element together with its signature"""
    poly: ModuleElement
    sig: Signature
    witness: Optional[EElement] = None
    uid: int = field(default_factory=lambda: next(_uids))

    @property
    def lm(self):
        return self.poly.lm

    def monic(self) -> "SignedElement":
        lc = self.poly.lc
        if lc == 1:
            return self
        p = self.poly.module.algebra.field.p
        inv = self.poly.module.algebra.field.inv(lc)
        witness = None if self.witness is None else {s: v * inv % p for s, v in self.witness.items()}
        return SignedElement(self.poly.scale(inv), self.sig, witness)

    def __str__(self):
        return f"({self.poly}, {self.sig})"

    __repr__ = __str__


@dataclass(eq=False)
class CriticalPair:
    """
    A critical pair of type T (g, c) or of type S (g, g') with cofactor c

    For type S, LM(g)·c = LM(g') and σ(g') < σ(g)·c.
    """
    kind: str
    g: SignedElement
    cofactor: Path
    sig: Signature
    other: Optional[SignedElement] = None
    serial: int = 0

    def identity(self) -> tuple:
        return (self.kind, self.g.uid, self.other.uid if self.other else None, self.cofactor)

    def __str__(self):
        if self.kind == "T":
            return f"T({self.g.lm}, {self.cofactor}) @ {self.sig}"
        return f"S({self.g.lm}, {self.other.lm}, {self.cofactor}) @ {self.sig}"


class SyzygyLMSet:
    """Signatures known to be leading monomials of ker(ev)"""

    def __init__(self):
        self._paths: Dict[int, Set[Path]] = {}
        self._order: List[Signature] = []

    def add(self, sig: Signature):
        paths = self._paths.setdefault(sig.index, set())
        if sig.path not in paths:
            paths.add(sig.path)
            self._order.append(sig)

    def __contains__(self, sig: Signature) -> bool:
        return sig.path in self._paths.get(sig.index, ())

    def __iter__(self) -> Iterator[Signature]:
        return iter(self._order)

    def __len__(self):
        return len(self._order)

    def divides(self, sig: Signature) -> bool:
        """Some entry 𝔢_i·c' of the same index with c' a prefix of sig's path"""
        paths = self._paths.get(sig.index)
        if not paths:
            return False
        return any(q in paths for q in prefixes(sig.path))


def is_standard_relative(sig: Signature, L: SyzygyLMSet) -> bool:
    """
    sig is standard relative to L

    Only right divisibility is tested: sig = 𝔢_i·c' ·d with 𝔢_i·c' ∈ L.
    """
    return not L.divides(sig)


def spolynomial(pair: CriticalPair) -> SignedElement:
    """The S-polynomial of a pair, with the pair's signature"""
    g = pair.g
    field_ = g.poly.module.algebra.field
    poly = act_path(g.poly, pair.cofactor)
    witness = _e_times(g.witness, pair.cofactor)
    if pair.kind == "S":
        other = pair.other
        k = field_.div(g.poly.lc, other.poly.lc)
        poly = poly - other.poly.scale(k)
        witness = _e_combine(witness, -k, other.witness, field_.p)
    return SignedElement(poly, pair.sig, witness)


def _sig_key(sig: Signature, order) -> tuple:
    return order.module_key(sig.index, sig.path)


def is_normal_pair(pair: CriticalPair, G: Sequence[SignedElement], L: SyzygyLMSet) -> bool:
    """Signature standard relative to L, and every element involved σ-irreducible w.r.t. G"""
    if not is_standard_relative(pair.sig, L):
        return False
    for h in (pair.g, pair.other):
        if h is not None and is_sig_reducible(h.poly, G, h.sig):
            return False
    return True


def f5_reducer_exists(sig: Signature, G: Sequence[SignedElement]) -> bool:
    """
    Is there g ∈ G and a small cofactor c of LM(g) with σ(g)·c = sig and
    g·c sig-irreducible?
    """
    for g in G:
        if g.sig.index != sig.index or not is_prefix(g.sig.path, sig.path):
            continue
        c = complement(g.sig.path, sig.path)
        algebra = g.poly.module.algebra
        if not algebra.is_standard(c) or c.start != g.lm.mono.end:
            continue
        if not algebra.is_small_cofactor(g.lm.mono, c):
            continue
        lm = ModuleMonomial(g.lm.gen, compose(g.lm.mono, c))
        if not is_sig_reducible_monomial(lm, G, sig):
            return True
    return False


def _covered(g: SignedElement, others: Sequence[SignedElement]) -> bool:
    """Some g' and small c with LM(g')·c = LM(g) and σ(g')·c = σ(g)"""
    for h in others:
        ok, c = strict_divides(h.lm, g.lm)
        if ok and h.sig.index == g.sig.index and compose(h.sig.path, c) == g.sig.path:
            return True
    return False


def signed_interreduce(G: Sequence[SignedElement], L: SyzygyLMSet,
                       witnesses: Optional[Dict[Signature, EElement]] = None
                       ) -> Tuple[List[SignedElement], SyzygyLMSet, int]:
    """
    Interreduce a signed set, collecting zero reductions in L

    Returns:
        (G', L, number of elements that reduced to zero)
    """
    basis = [g.monic() for g in G]
    syzygies = 0
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(basis):
            others = basis[:i] + basis[i + 1:]
            if _covered(g, others):
                del basis[i]
                changed = True
                break
            nf, rep = signed_normal_form(g.poly, others, g.sig)
            if not rep.terms:
                continue
            changed = True
            witness = g.witness
            if witness is not None:
                p = g.poly.module.algebra.field.p
                for term in rep.terms:
                    reducer = others[term.index]
                    witness = _e_combine(witness, -term.coeff, _e_times(reducer.witness, term.cofactor), p)
            if nf.is_zero():
                logger.debug(f"signature {g.sig} became a syzygy during interreduction")
                L.add(g.sig)
                syzygies += 1
                if witnesses is not None and witness is not None:
                    witnesses[g.sig] = witness
                del basis[i]
            else:
                basis[i] = SignedElement(nf, g.sig, witness).monic()
            break
    return basis, L, syzygies


@dataclass
class F5Stats:
    pairs_created: int = 0
    pairs_considered: int = 0
    pairs_processed: int = 0
    skipped_stale: int = 0
    skipped_not_normal: int = 0
    skipped_by_l: int = 0
    skipped_by_rewritten: int = 0
    skipped_nonstandard_signature: int = 0
    zero_reductions: int = 0
    interreduction_syzygies: int = 0
    sweeps: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class F5Result:
    """Output of f5_stdbasis; unpacks as (basis, syzygies, stats)"""
    basis: List[SignedElement]
    syzygies: SyzygyLMSet
    stats: F5Stats
    generators: List[ModuleElement]
    processed: List[Signature] = field(default_factory=list)
    witnesses: Dict[Signature, EElement] = field(default_factory=dict)

    def __iter__(self):
        return iter((self.basis, self.syzygies, self.stats))

    @property
    def polys(self) -> List[ModuleElement]:
        return [g.poly for g in self.basis]

    def to_dict(self) -> dict:
        module = self.generators[0].module if self.generators else None
        return {
            "basis": [{"poly": str(g.poly), "signature": str(g.sig),
                       "leading_monomial": module.format_monomial(g.lm) if module else None}
                      for g in self.basis],
            "syzygy_signatures": [str(s) for s in self.syzygies],
            "stats": self.stats.to_dict(),
        }


def _pairs_of(G: Sequence[SignedElement], include_nonstandard: bool = False) -> List[CriticalPair]:
    """
    All critical pairs of G

    A pair whose signature path is not a standard path has a syzygy
    signature 𝔢_i·LM(k), k in the ideal; such pairs are left out unless
    include_nonstandard is set.
    """
    out: List[CriticalPair] = []
    if not G:
        return out
    algebra = G[0].poly.module.algebra
    order = algebra.order
    by_lm: Dict[ModuleMonomial, List[SignedElement]] = {}
    for g in G:
        by_lm.setdefault(g.lm, []).append(g)

    for g in G:
        b = g.lm.mono
        for c, _ in algebra.minimal_topplings(b):
            out.append(CriticalPair("T", g, c, g.sig.times(c)))
        for c in algebra.small_cofactors(b):
            sig = g.sig.times(c)
            key = _sig_key(sig, order)
            for h in by_lm.get(ModuleMonomial(g.lm.gen, compose(b, c)), ()):
                if h is not g and _sig_key(h.sig, order) < key:
                    out.append(CriticalPair("S", g, c, sig, h))
    if include_nonstandard:
        return out
    return [pair for pair in out if algebra.is_standard(pair.sig.path)]


class _Desc:
    """Heap key that pops the largest signature first"""
    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return self.key > other.key

    def __eq__(self, other):
        return self.key == other.key


def _initial(gens: Sequence[ModuleElement], sig_vertices: Optional[Sequence[str]],
             L: SyzygyLMSet, keep_witnesses: bool,
             witnesses: Dict[Signature, EElement]) -> Tuple[List[SignedElement], int]:
    elements = []
    zeros = 0
    for i, g in enumerate(gens):
        vertex = g.end_vertex()
        if g.is_zero():
            vertex = sig_vertices[i] if sig_vertices else g.module.vertices[0]
        elif vertex is None:
            raise SemanticError("generator terms end at different vertices", f"g{i + 1}")
        sig = Signature(i, g.module.algebra.quiver.trivial(vertex))
        witness = {sig: 1} if keep_witnesses else None
        if g.is_zero():
            L.add(sig)
            zeros += 1
            if witness is not None:
                witnesses[sig] = witness
            continue
        elements.append(SignedElement(g, sig, witness))
    return elements, zeros


def f5_stdbasis(gens: Sequence[ModuleElement], keep_witnesses: bool = False,
                check_invariants: bool = False,
                sig_vertices: Optional[Sequence[str]] = None) -> F5Result:
    """
    Interreduced signed standard basis of the submodule generated by gens

    Args:
        gens: generators ĝ_1..ĝ_m, each ending at a single vertex
        keep_witnesses: keep, for every syzygy signature, an element of
            ker(ev) with that leading monomial
        check_invariants: verify signature invariants of the final basis
        sig_vertices: vertex of 𝔢_i for generators that are zero

    Returns:
        F5Result (unpacks as basis, syzygies, stats)
    """
    if not gens:
        raise ValueError("at least one generator is needed")
    module = gens[0].module
    order = module.algebra.order
    field_p = module.algebra.field.p
    stats = F5Stats()
    L = SyzygyLMSet()
    witnesses: Dict[Signature, EElement] = {}

    start, zeros = _initial(gens, sig_vertices, L, keep_witnesses, witnesses)
    G, L, syz = signed_interreduce(start, L, witnesses if keep_witnesses else None)
    stats.interreduction_syzygies += syz + zeros

    heap: list = []
    created: Set[tuple] = set()
    serial = itertools.count()
    processed: List[Signature] = []

    def enqueue(pairs: Sequence[CriticalPair], force: bool = False):
        for pair in pairs:
            ident = pair.identity()
            if ident in created and not force:
                continue
            created.add(ident)
            if not module.algebra.is_standard(pair.sig.path):
                stats.skipped_nonstandard_signature += 1
                continue
            pair.serial = next(serial)
            stats.pairs_created += 1
            heapq.heappush(heap, (_Desc(_sig_key(pair.sig, order)), pair.serial, pair))

    enqueue(_pairs_of(G, include_nonstandard=True))
    while True:
        while heap:
            _, _, pair = heapq.heappop(heap)
            stats.pairs_considered += 1
            live = {g.uid for g in G}
            if pair.g.uid not in live or (pair.other is not None and pair.other.uid not in live):
                stats.skipped_stale += 1
                continue
            if not is_standard_relative(pair.sig, L):
                stats.skipped_by_l += 1
                continue
            if not is_normal_pair(pair, G, L):
                stats.skipped_not_normal += 1
                continue
            if f5_reducer_exists(pair.sig, G):
                stats.skipped_by_rewritten += 1
                continue

            stats.pairs_processed += 1
            processed.append(pair.sig)
            s = spolynomial(pair)
            nf, rep = signed_normal_form(s.poly, G, s.sig)
            witness = s.witness
            if witness is not None:
                for term in rep.terms:
                    witness = _e_combine(witness, -term.coeff, _e_times(G[term.index].witness, term.cofactor),
                                         field_p)
            if nf.is_zero():
                logger.debug(f"zero reduction at {pair}")
                stats.zero_reductions += 1
                L.add(s.sig)
                if witness is not None:
                    witnesses[s.sig] = witness
                continue
            logger.debug(f"adjoining {nf} with signature {s.sig}")
            G, L, syz = signed_interreduce(G + [SignedElement(nf, s.sig, witness)], L,
                                           witnesses if keep_witnesses else None)
            stats.interreduction_syzygies += syz
            enqueue(_pairs_of(G, include_nonstandard=True))

        # queue drained: requeue any pair the criteria no longer discard
        pending = [pair for pair in _pairs_of(G)
                   if is_normal_pair(pair, G, L) and not f5_reducer_exists(pair.sig, G)]
        if not pending:
            break
        stats.sweeps += 1
        logger.debug(f"termination sweep requeued {len(pending)} pairs")
        enqueue(pending, force=True)

    for g in G:
        if not module.algebra.is_standard(g.sig.path):
            raise InternalInvariantError(f"signature {g.sig} has a nonstandard path")
    if check_invariants:
        _check_invariants(G, order)

    logger.info(f"✅ F5 finished: {len(G)} elements, {len(L)} syzygy signatures, "
                f"{stats.pairs_processed} pairs reduced, {stats.zero_reductions} zero reductions")
    return F5Result(G, L, stats, list(gens), processed, witnesses)


def _check_invariants(G: Sequence[SignedElement], order):
    sigs = [g.sig for g in G]
    if len(set(sigs)) != len(sigs):
        raise InternalInvariantError("two basis elements share a signature")
    for i, g in enumerate(G):
        others = list(G[:i]) + list(G[i + 1:])
        if is_sig_reducible(g.poly, others, g.sig):
            raise InternalInvariantError(f"basis element {g} is reducible")
        if _covered(g, others):
            raise InternalInvariantError(f"basis element {g} is a multiple of another")


def f5_certificate(result: F5Result) -> List[CriticalPair]:
    """Pairs of the final basis, normal relative to L, that have no reducer (empty on success)"""
    G = result.basis
    return [pair for pair in _pairs_of(G)
            if is_normal_pair(pair, G, result.syzygies) and not f5_reducer_exists(pair.sig, G)]


def evaluate(witness: EElement, gens: Sequence[ModuleElement]) -> ModuleElement:
    """ev(Σ v·𝔢_i·p) = Σ v·ĝ_i·ψ(p)"""
    module = gens[0].module
    result = module.zero()
    for sig, v in witness.items():
        result = result + act_path(gens[sig.index], sig.path).scale(v)
    return result


def verify_witness(witness: EElement, sig: Signature, gens: Sequence[ModuleElement]) -> bool:
    """witness lies in ker(ev) and has leading monomial sig"""
    if not witness:
        return False
    order = gens[0].module.algebra.order
    lead = max(witness, key=lambda s: _sig_key(s, order))
    return lead == sig and evaluate(witness, gens).is_zero()

"""
Loewy Layers and Minimal Generators

Under a negative degree ordering the τ-layers of a signed standard basis
are the radical powers of M: Rad^d(M) is spanned by the products g·c
(c small for LM(g)) whose signature σ(g)·c has degree >= d and which are
irreducible at that signature. The differences are Loewy layers, and the
basis elements with signature degree 0 form a minimal generating set.
"""

import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Union

from .errors import WrongOrdering
from .free_module import ModuleElement, ModuleMonomial, Signature, act_path
from .quiver_paths import compose
from .reduction import is_sig_reducible_monomial

logger = logging.getLogger(__name__)

# τ is either a signature or a degree d, meaning "every signature of degree >= d"
Threshold = Union[Signature, int]


class LayerItem(NamedTuple):
    element: object     # SignedElement
    cofactor: object    # Path
    sig: Signature
    product: ModuleElement


@dataclass
class LoewyLayer:
    index: int          # 1-based
    basis: List[ModuleElement]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _basis_of(G) -> list:
    return list(G.basis) if hasattr(G, "basis") else list(G)


def _require_negative(G, order=None):
    if order is None:
        elements = _basis_of(G)
        if elements:
            order = elements[0].poly.module.algebra.order
        elif hasattr(G, "generators") and G.generators:
            order = G.generators[0].module.algebra.order
    if order is not None and not order.is_negative:
        raise WrongOrdering(f"Loewy layers need negdeglex, the ordering is {order.mode.value}")


def layer_items(G) -> List[LayerItem]:
    """Every g·c with c small for LM(g) and g·c irreducible at its signature σ(g)·c"""
    elements = _basis_of(G)
    items: List[LayerItem] = []
    for g in elements:
        algebra = g.poly.module.algebra
        for c in algebra.small_cofactors(g.lm.mono):
            sig = g.sig.times(c)
            lm = ModuleMonomial(g.lm.gen, compose(g.lm.mono, c))
            if is_sig_reducible_monomial(lm, elements, sig):
                continue
            items.append(LayerItem(g, c, sig, act_path(g.poly, c)))
    return items


def _below(sig: Signature, tau: Threshold, order) -> bool:
    if isinstance(tau, int):
        return sig.path.degree >= tau
    return order.module_key(sig.index, sig.path) <= order.module_key(tau.index, tau.path)


def layer_basis(G, tau: Threshold, order=None) -> List[ModuleElement]:
    """
    The τ-layer basis B_τ

    Args:
        G: interreduced signed standard basis (list or F5Result)
        tau: signature bound, or a degree d for "all signatures of degree >= d"

    Returns:
        Products g·c spanning the τ-layer; their leading monomials are distinct

    Raises:
        WrongOrdering: unless the ordering is negdeglex
    """
    _require_negative(G, order)
    items = layer_items(G)
    if not items:
        return []
    order = items[0].product.module.algebra.order
    return [item.product for item in items if _below(item.sig, tau, order)]


def loewy_layers(G) -> List[LoewyLayer]:
    """Loewy layers 1, 2, ... until the first empty one; dims add up to dim M"""
    _require_negative(G)
    items = layer_items(G)
    layers: List[LoewyLayer] = []
    d = 1
    while True:
        # B_{d-1} minus B_d: exactly the items of signature degree d - 1
        basis = [item.product for item in items if item.sig.path.degree == d - 1]
        if not basis:
            break
        layers.append(LoewyLayer(d, basis))
        d += 1
    leftover = sum(1 for item in items if item.sig.path.degree >= d)
    if leftover:
        logger.warning(f"{leftover} layer elements lie beyond the first empty Loewy layer")
    return layers


def loewy_dims(G) -> List[int]:
    return [layer.dim for layer in loewy_layers(G)]


def minimal_generators(G) -> List[ModuleElement]:
    """poly(g) for the basis elements with signature degree 0"""
    _require_negative(G)
    return [g.poly for g in _basis_of(G) if g.sig.path.degree == 0]


def loewy_report(G) -> dict:
    layers = loewy_layers(G)
    return {
        "loewy_dims": [layer.dim for layer in layers],
        "layers": [[str(f) for f in layer.basis] for layer in layers],
        "minimal_generators": [str(f) for f in minimal_generators(G)],
    }

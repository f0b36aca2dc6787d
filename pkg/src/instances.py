"""
Instances

The running examples as ready-made problems, and a seeded generator of
small random problems for the bench command and the randomized tests.
"""

import logging
import random
from typing import List, Optional, Sequence

from .algebra import AlgebraSpec, build_algebra
from .coeff_field import FieldSpec
from .free_module import FreeModule, ModuleElement, ModuleMonomial
from .ordering import OrderMode, OrderSpec
from .problem import Problem
from .quiver_paths import Quiver

logger = logging.getLogger(__name__)

A1_TEXT = """\
# F_2[x]/(x^3), submodule generated by x
field 2
quiver { vertex v arrow x v v }
relations { x*x*x }
nilpotency auto
order negdeglex
module { gen m1 at v }
generators { g1 = m1*x }
"""

A2_TEXT = """\
# two vertices, a: u -> v, b: v -> u, all paths of length 2 vanish
field 2
quiver {
  vertex u
  vertex v
  arrow a u v
  arrow b v u
}
relations { a*b; b*a }
nilpotency auto
module { gen m at u }
generators { g = m*a }
"""

A1_SQUARED_TEXT = """\
field 2
quiver { vertex v arrow x v v }
relations { x*x*x }
module { gen m1 at v gen m2 at v }
generators { g1 = m1*x + m2*x; g2 = m2*x }
"""

TRUNCATED_TEXT = """\
# inhomogeneous relation, explicit nilpotency bound
field 2
quiver { vertex v arrow x v v }
relations { x*x + x*x*x }
nilpotency 4
module { gen m1 at v }
generators { g1 = m1 }
"""


def a1_problem() -> Problem:
    return Problem.from_text(A1_TEXT)


def a2_problem() -> Problem:
    return Problem.from_text(A2_TEXT)


def a1_squared_problem() -> Problem:
    return Problem.from_text(A1_SQUARED_TEXT)


def truncated_problem() -> Problem:
    return Problem.from_text(TRUNCATED_TEXT)


def _random_quiver(rng: random.Random, max_vertices: int, max_arrows: int) -> Quiver:
    vertices = [f"v{i + 1}" for i in range(rng.randint(1, max_vertices))]
    arrows = [(f"a{k + 1}", rng.choice(vertices), rng.choice(vertices))
              for k in range(rng.randint(1, max_arrows))]
    return Quiver(vertices, arrows)


def _random_relations(rng: random.Random, quiver: Quiver, p: int) -> List[dict]:
    relations = []
    quadratic = list(quiver.paths_of_degree(2))
    for _ in range(rng.randint(0, 2)):
        if not quadratic:
            break
        q1 = rng.choice(quadratic)
        partners = [q for q in quadratic if q != q1 and (q.start, q.end) == (q1.start, q1.end)]
        rel = {q1: 1}
        if partners and rng.random() < 0.7:
            rel[rng.choice(partners)] = rng.randint(1, p - 1)
        relations.append(rel)
    top = rng.randint(2, 4)
    relations.extend({q: 1} for q in quiver.paths_of_degree(top))
    return relations


def _random_generator(rng: random.Random, module: FreeModule) -> Optional[ModuleElement]:
    algebra = module.algebra
    p = algebra.field.p
    ends = sorted({b.end for v in module.vertices for b in algebra.stdmon if b.start == v})
    end = rng.choice(ends)
    candidates = [ModuleMonomial(i, b) for i, v in enumerate(module.vertices)
                  for b in algebra.stdmon if b.start == v and b.end == end]
    picked = rng.sample(candidates, rng.randint(1, min(3, len(candidates))))
    element = module.element({m: rng.randint(1, p - 1) for m in picked})
    return None if element.is_zero() else element


def random_problem(rng: random.Random, p_choices: Sequence[int] = (2, 3, 5), max_vertices: int = 3,
                   max_arrows: int = 4, max_dim: int = 16, max_rank: int = 3, max_gens: int = 4,
                   mode: OrderMode = OrderMode.NEGATIVE_DEGREE, max_tries: int = 1000) -> Problem:
    """
    A random basic algebra with a random submodule of a free module

    The relations are homogeneous quadratic binomials plus every path of a
    random degree D in [2, 4], so the algebra is finite-dimensional and its
    nilpotency bound is detected automatically. Instances with dim A above
    max_dim are redrawn.

    Args:
        rng: source of randomness, seeded by the caller
        p_choices: candidate field characteristics

    Returns:
        The problem, with generators that each end at one vertex
    """
    for _ in range(max_tries):
        p = rng.choice(p_choices)
        quiver = _random_quiver(rng, max_vertices, max_arrows)
        precedence = list(quiver.arrows)
        rng.shuffle(precedence)
        order = OrderSpec.for_quiver(quiver, mode, precedence)
        spec = AlgebraSpec(quiver, FieldSpec(p), _random_relations(rng, quiver, p), order)
        algebra = build_algebra(spec)
        if algebra.dim > max_dim:
            continue

        rank = rng.randint(1, max_rank)
        module = FreeModule(algebra, [(f"m{i + 1}", rng.choice(quiver.vertices)) for i in range(rank)])
        gens: List[ModuleElement] = []
        count = rng.randint(1, max_gens)
        while len(gens) < count:
            g = _random_generator(rng, module)
            if g is not None:
                gens.append(g)
        names = [f"g{i + 1}" for i in range(len(gens))]
        return Problem(algebra, module, gens, names, [g.end_vertex() for g in gens])
    raise RuntimeError(f"no random algebra of dimension <= {max_dim} in {max_tries} tries")

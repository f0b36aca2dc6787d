"""Tests for signed standard bases: criteria, the F5 loop and syzygy witnesses"""

import random

import pytest

from src.errors import OracleTooLarge, SemanticError
from src.f5 import (CriticalPair, SignedElement, SyzygyLMSet, f5_certificate, f5_reducer_exists,
                    f5_stdbasis, is_standard_relative, signed_interreduce, spolynomial, verify_witness)
from src.free_module import ModuleMonomial, Signature
from src.instances import random_problem
from src.oracle import exhaustive_signed_check, signature_monomials, verify_standard_basis
from src.reduction import is_sig_reducible
from src.problem import Problem

A1_WHOLE = """\
field 2
quiver { vertex v arrow x v v }
relations { x*x*x }
module { gen m1 at v }
generators { g1 = m1 }
"""


def test_a1_run(a1):
    """One T-pair at 𝔢_1·x², which reduces to zero"""
    result = f5_stdbasis(a1.generators)
    basis, syzygies, stats = result
    assert len(basis) == 1
    assert basis[0].poly == a1.generators[0]
    assert str(basis[0].sig) == "e1*id(v)"
    assert [str(s) for s in syzygies] == ["e1*x*x"]
    assert stats.pairs_processed == 1
    assert stats.zero_reductions == 1
    assert f5_certificate(result) == []


def test_whole_module_has_no_pairs():
    problem = Problem.from_text(A1_WHOLE)
    result = f5_stdbasis(problem.generators)
    assert len(result.basis) == 1
    assert len(result.syzygies) == 0
    assert result.stats.pairs_created == 0
    assert result.stats.zero_reductions == 0


def test_redundant_generator_becomes_a_syzygy(a1):
    q = a1.algebra.quiver
    g2 = a1.module.element({ModuleMonomial(0, q.path("x", "x")): 1})
    result = f5_stdbasis([a1.generators[0], g2])
    assert len(result.basis) == 1
    assert "e2*id(v)" in [str(s) for s in result.syzygies]
    assert result.stats.interreduction_syzygies == 1


def test_zero_generator(a1):
    result = f5_stdbasis([a1.generators[0], a1.module.zero()], sig_vertices=["v", "v"])
    assert len(result.basis) == 1
    assert Signature(1, a1.algebra.quiver.trivial("v")) in result.syzygies


def test_mixed_end_vertices(a2):
    q = a2.algebra.quiver
    mixed = a2.module.element({ModuleMonomial(0, q.trivial("u")): 1, ModuleMonomial(0, q.arrow("a")): 1})
    with pytest.raises(SemanticError):
        f5_stdbasis([mixed])


def test_no_generators():
    with pytest.raises(ValueError):
        f5_stdbasis([])


def test_standard_relative(a1):
    q = a1.algebra.quiver
    L = SyzygyLMSet()
    L.add(Signature(0, q.arrow("x")))
    assert not is_standard_relative(Signature(0, q.path("x", "x")), L)
    assert not is_standard_relative(Signature(0, q.arrow("x")), L)
    assert is_standard_relative(Signature(0, q.trivial("v")), L)
    assert is_standard_relative(Signature(1, q.path("x", "x")), L)
    L.add(Signature(0, q.arrow("x")))
    assert len(L) == 1


def test_reducer_exists(a1):
    q = a1.algebra.quiver
    g = SignedElement(a1.generators[0], Signature(0, q.trivial("v")))
    # g·x has signature 𝔢_1·x and an irreducible product
    assert f5_reducer_exists(Signature(0, q.arrow("x")), [g])
    # x² is not small for LM(g) = x
    assert not f5_reducer_exists(Signature(0, q.path("x", "x")), [g])
    assert not f5_reducer_exists(Signature(1, q.trivial("v")), [g])


def test_spolynomial(a1_squared):
    q = a1_squared.algebra.quiver
    g1, g2 = a1_squared.generators
    h1 = SignedElement(g1, Signature(0, q.trivial("v")))
    h2 = SignedElement(g2, Signature(1, q.trivial("v")))
    pair = CriticalPair("T", h1, q.path("x", "x"), Signature(0, q.path("x", "x")))
    assert spolynomial(pair).poly.is_zero()
    same_lm = SignedElement(a1_squared.module.element({ModuleMonomial(0, q.arrow("x")): 1}),
                            Signature(1, q.trivial("v")))
    pair = CriticalPair("S", h1, q.trivial("v"), h1.sig, same_lm)
    s = spolynomial(pair)
    assert s.poly == g2
    assert s.sig == h1.sig
    assert h2.lm == s.poly.lm


def test_signed_interreduce(a1):
    q = a1.algebra.quiver
    module = a1.module
    g = SignedElement(a1.generators[0], Signature(0, q.trivial("v")))
    multiple = SignedElement(module.element({ModuleMonomial(0, q.path("x", "x")): 1}),
                             Signature(0, q.arrow("x")))
    G, L, syz = signed_interreduce([g, multiple], SyzygyLMSet())
    assert G == [g]
    assert len(L) == 0 and syz == 0


def test_a1_witnesses(a1):
    result = f5_stdbasis(a1.generators, keep_witnesses=True)
    sig = Signature(0, a1.algebra.quiver.path("x", "x"))
    assert result.witnesses == {sig: {sig: 1}}
    assert verify_witness(result.witnesses[sig], sig, a1.generators)
    assert not verify_witness({}, sig, a1.generators)


@pytest.mark.parametrize("fixture", ["a1", "a2", "a1_squared", "truncated"])
def test_fixtures(fixture, request):
    problem = request.getfixturevalue(fixture)
    result = f5_stdbasis(problem.generators, keep_witnesses=True, check_invariants=True,
                         sig_vertices=problem.sig_vertices)
    assert verify_standard_basis(problem.module, problem.generators, result.polys)
    assert f5_certificate(result) == []
    assert len(set(result.processed)) == len(result.processed)
    for sig, witness in result.witnesses.items():
        assert verify_witness(witness, sig, problem.generators)
    d = result.to_dict()
    assert set(d) == {"basis", "syzygy_signatures", "stats"}


def test_random_instances():
    rng = random.Random(31)
    for _ in range(40):
        problem = random_problem(rng)
        result = f5_stdbasis(problem.generators, keep_witnesses=True, check_invariants=True,
                             sig_vertices=problem.sig_vertices)
        assert verify_standard_basis(problem.module, problem.generators, result.polys)
        assert f5_certificate(result) == []
        assert all(g.poly.lc == 1 for g in result.basis)
        for i, g in enumerate(result.basis):
            others = result.basis[:i] + result.basis[i + 1:]
            assert not is_sig_reducible(g.poly, others, g.sig)
        assert len(set(result.processed)) == len(result.processed)
        for g in result.basis:
            assert problem.algebra.is_standard(g.sig.path)
        for sig, witness in result.witnesses.items():
            assert verify_witness(witness, sig, problem.generators)


@pytest.mark.parametrize("fixture", ["a1", "a2", "a1_squared"])
def test_exhaustive_signed_check_on_fixtures(fixture, request):
    problem = request.getfixturevalue(fixture)
    result = f5_stdbasis(problem.generators, sig_vertices=problem.sig_vertices)
    assert exhaustive_signed_check(problem.generators, result, problem.sig_vertices) == []


def test_exhaustive_signed_check_catches_missing_elements(a1):
    assert exhaustive_signed_check(a1.generators, []) != []


def test_exhaustive_signed_check_on_tiny_instances():
    rng = random.Random(5)
    checked = 0
    for _ in range(200):
        if checked == 15:
            break
        problem = random_problem(rng, p_choices=(2,), max_vertices=2, max_arrows=2, max_dim=6,
                                 max_rank=2, max_gens=2)
        if len(signature_monomials(problem.generators, problem.sig_vertices)) > 12:
            continue
        result = f5_stdbasis(problem.generators, sig_vertices=problem.sig_vertices)
        assert exhaustive_signed_check(problem.generators, result, problem.sig_vertices) == []
        checked += 1
    assert checked >= 5


def test_exhaustive_check_refuses_large_instances(a1_squared):
    result = f5_stdbasis(a1_squared.generators)
    with pytest.raises(OracleTooLarge):
        exhaustive_signed_check(a1_squared.generators, result, max_elements=16)

"""Tests for the problem file parser, printer and semantic resolution"""

import logging

import pytest

from src.errors import NotBasic, ParseError, SemanticError
from src.instances import A1_SQUARED_TEXT, A1_TEXT, A2_TEXT, TRUNCATED_TEXT
from src.parser import Factor, format_problem, parse_problem, resolve_problem, tokenize
from src.problem import Problem

LOOP = "field 2\nquiver { vertex v arrow x v v }\n"
TWO = "field 2\nquiver { vertex u vertex v arrow a u v arrow b v u }\nrelations { a*b; b*a }\n"


def test_tokenize():
    tokens = tokenize("field 2 # comment\nquiver{")
    assert [(t.kind, t.value, t.line, t.column) for t in tokens] == [
        ("ID", "field", 1, 1), ("INT", "2", 1, 7), ("ID", "quiver", 2, 1), ("SYM", "{", 2, 7),
        ("EOF", "", 2, 8)]


def test_parse_a1():
    pf = parse_problem(A1_TEXT)
    assert pf.field == 2
    assert [v.id for v in pf.vertices] == ["v"]
    assert [(a.id, a.source, a.target) for a in pf.arrows] == [("x", "v", "v")]
    assert len(pf.relations) == 1
    term = pf.relations[0][0]
    assert term.coeff == 1 and term.path == (Factor("x"),) * 3
    assert pf.nilpotency is None
    assert pf.order_mode == "negdeglex"
    assert [(g.name, g.vertex) for g in pf.module_gens] == [("m1", "v")]
    gdef = pf.generators[0]
    assert gdef.name == "g1"
    assert [(t.coeff, t.gen, t.path) for t in gdef.terms] == [(1, "m1", (Factor("x"),))]


def test_blocks_in_any_order():
    text = LOOP + "generators { g1 = m1*x }\nmodule { gen m1 at v }\nrelations { x*x }\n"
    problem = Problem.from_text(text)
    assert problem.algebra.dim == 2
    assert str(problem.generators[0]) == "m1*x"


def test_explicit_nilpotency_and_precedence():
    text = ("field 5\nquiver { vertex v arrow x v v arrow y v v }\n"
            "relations { x*x; y*y; x*y - y*x }\nnilpotency 3\norder deglex precedence y x\n")
    pf = parse_problem(text)
    assert pf.nilpotency == 3
    assert pf.order_mode == "deglex"
    assert pf.precedence == ("y", "x")
    assert pf.relations[2][1].coeff == 4
    problem = resolve_problem(pf)
    assert problem.algebra.dim == 4
    assert problem.module is None


def test_trivial_factor():
    pf = parse_problem(LOOP + "relations { x*x*x }\nmodule { gen m1 at v }\ngenerators { g1 = m1*id(v) }\n")
    assert pf.generators[0].terms[0].path == (Factor("v", trivial=True),)
    problem = resolve_problem(pf)
    assert str(problem.generators[0]) == "m1*id(v)"


def test_negative_coefficients():
    pf = parse_problem("field 3\nquiver { vertex v arrow x v v }\nrelations { -x*x - 2*x*x*x }\n")
    assert [t.coeff for t in pf.relations[0]] == [2, 1]


def test_large_coefficient_warns(caplog):
    with caplog.at_level(logging.WARNING):
        pf = parse_problem("field 3\nquiver { vertex v arrow x v v }\nrelations { 5*x*x*x }\n")
    assert pf.relations[0][0].coeff == 2
    assert "reduced mod 3" in caplog.text


@pytest.mark.parametrize("text", [A1_TEXT, A2_TEXT, A1_SQUARED_TEXT, TRUNCATED_TEXT])
def test_round_trip(text):
    pf = parse_problem(text)
    again = parse_problem(format_problem(pf))
    assert again == pf
    assert format_problem(again) == format_problem(pf)


def test_round_trip_keeps_the_algebra():
    pf = parse_problem(A2_TEXT)
    a = resolve_problem(pf).algebra
    b = resolve_problem(parse_problem(format_problem(pf))).algebra
    assert a.stdmon == b.stdmon


MALFORMED = [
    ("", 1, 1),
    ("quiver { }", 1, 1),
    ("field", 1, 6),
    ("field x", 1, 7),
    ("field 1", 1, 7),
    ("field 2\nquiver { vertex }", 2, 17),
    ("field 2\nfoo", 2, 1),
    ("field 2\nquiver { vertex v }\nquiver { }", 3, 1),
    ("field 2\nrelations { x }", 2, 16),
    (LOOP + "relations { 2 x }", 3, 15),
    ("field 2\nquiver { vertex v $ }", 2, 19),
    (LOOP + "nilpotency many", 3, 12),
    (LOOP + "order lex", 3, 7),
    (LOOP + "order deglex precedence", 3, 24),
    (LOOP + "module { m1 at v }", 3, 10),
    (LOOP + "module { gen m1 v }", 3, 17),
    (LOOP + "module { gen m1 at v }\ngenerators { g1 m1 }", 4, 17),
    (LOOP + "relations { x*x + }", 3, 19),
    (LOOP + "relations { id(v }", 3, 18),
    (LOOP + "relations { x*x x }", 3, 17),
    ("field 2 quiver { vertex v arrow x v v", 1, 38),
    (LOOP + "generators { g1 = }", 3, 19),
]


@pytest.mark.parametrize("text,line,column", MALFORMED)
def test_malformed(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_problem(text)
    assert (info.value.line, info.value.column) == (line, column)


SEMANTIC = [
    (LOOP + "relations { x*y }", "y"),
    ("field 2\nquiver { vertex v vertex v }", "v"),
    ("field 2\nquiver { vertex v arrow x v w }", "w"),
    ("field 2\nquiver { vertex v arrow v v v }", "v"),
    ("field 2\nquiver { vertex v arrow x v v arrow y v v }\nrelations { x*x*x }\norder negdeglex precedence x", "y"),
    ("field 2\nquiver { vertex u vertex v arrow a u v arrow b v u }\nrelations { a*b + b*a }", "b*a"),
    ("field 4\nquiver { vertex v }", "4"),
    (LOOP + "relations { x*x }\nmodule { gen m1 at v }\ngenerators { g1 = m2*x }", "m2"),
    (LOOP + "relations { x*x }\nmodule { gen m1 at w }", "w"),
    (LOOP + "relations { x*x }\nmodule { gen x at v }", "x"),
    (LOOP + "relations { x*x }\ngenerators { g1 = m1 }", "g1"),
    (LOOP + "relations { x*x }\nmodule { gen m1 at v }\ngenerators { g1 = m1; g1 = m1*x }", "g1"),
    (TWO + "module { gen m1 at u }\ngenerators { g1 = m1*b }", "m1"),
    (TWO + "module { gen m1 at u }\ngenerators { g1 = m1 + m1*a }", "g1"),
    ("field 2\nquiver { vertex u vertex v arrow x u u arrow a v u }\nrelations { x*x }\n"
     "module { gen m1 at u }\ngenerators { g1 = m1*x*a }", "a"),
    (LOOP + "relations { x*id(w) }", "w"),
]


@pytest.mark.parametrize("text,offending", SEMANTIC)
def test_semantic_errors(text, offending):
    pf = parse_problem(text)
    with pytest.raises(SemanticError) as info:
        resolve_problem(pf)
    assert info.value.offending_id == offending


def test_semantic_error_location():
    with pytest.raises(SemanticError) as info:
        Problem.from_text(LOOP + "relations { x*y }")
    assert (info.value.line, info.value.column) == (3, 13)
    assert str(info.value).startswith("3:13: unknown arrow")


def test_degree_one_relation_is_not_basic():
    with pytest.raises(NotBasic):
        Problem.from_text(LOOP + "relations { x }")

"""
Problem File Parser

Hand-written tokenizer and recursive-descent parser for the .qv problem
format, a pretty-printer that reparses to an equal AST, and semantic
resolution of the AST into algebra, module and generators.

    field 2
    quiver { vertex v  arrow x v v }
    relations { x*x*x }
    nilpotency auto
    order negdeglex precedence x
    module { gen m1 at v }
    generators { g1 = m1*x }

Syntax errors raise ParseError with line:column; references that do not
resolve raise SemanticError naming the offending id.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple

from .algebra import AlgebraSpec, build_algebra, DEFAULT_DEGREE_CAP
from .coeff_field import FieldSpec
from .errors import ParseError, SemanticError
from .free_module import FreeModule, ModuleElement, act_path
from .ordering import OrderMode, OrderSpec
from .problem import Problem
from .quiver_paths import ZERO, Path, Quiver, compose

logger = logging.getLogger(__name__)

KEYWORDS = ("field", "quiver", "relations", "nilpotency", "order", "module", "generators")
SYMBOLS = "{};=+-*()"


class Token(NamedTuple):
    kind: str       # INT, ID, SYM or EOF
    value: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start = i
        if c.isdigit():
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(Token("INT", text[start:i], line, col))
        elif c.isalpha() or c == "_":
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("ID", text[start:i], line, col))
        elif c in SYMBOLS:
            i += 1
            tokens.append(Token("SYM", c, line, col))
        else:
            raise ParseError(f"unexpected character '{c}'", line, col)
        col += i - start
    tokens.append(Token("EOF", "", line, col))
    return tokens


# --- AST -------------------------------------------------------------------

class Factor(NamedTuple):
    name: str
    trivial: bool = False   # id(name)

    def __str__(self):
        return f"id({self.name})" if self.trivial else self.name


@dataclass(frozen=True)
class Located:
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class VertexDecl(Located):
    id: str = ""


@dataclass(frozen=True)
class ArrowDecl(Located):
    id: str = ""
    source: str = ""
    target: str = ""


@dataclass(frozen=True)
class PolyTerm(Located):
    coeff: int = 1
    path: Tuple[Factor, ...] = ()


@dataclass(frozen=True)
class ModTerm(Located):
    coeff: int = 1
    gen: str = ""
    path: Tuple[Factor, ...] = ()


@dataclass(frozen=True)
class GenDecl(Located):
    name: str = ""
    vertex: str = ""


@dataclass(frozen=True)
class GeneratorDef(Located):
    name: str = ""
    terms: Tuple[ModTerm, ...] = ()


@dataclass(frozen=True)
class ProblemFile:
    """Syntax tree of a problem file; coefficients are already reduced mod p"""
    field: int
    vertices: Tuple[VertexDecl, ...] = ()
    arrows: Tuple[ArrowDecl, ...] = ()
    relations: Tuple[Tuple[PolyTerm, ...], ...] = ()
    nilpotency: Optional[int] = None        # None is auto
    order_mode: str = OrderMode.NEGATIVE_DEGREE.value
    precedence: Optional[Tuple[str, ...]] = None
    module_gens: Tuple[GenDecl, ...] = ()
    generators: Tuple[GeneratorDef, ...] = ()
    has_module: bool = False


# --- parser ----------------------------------------------------------------

class _Parser:

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.p: Optional[int] = None

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        if t.kind != "EOF":
            self.pos += 1
        return t

    def error(self, message: str, t: Optional[Token] = None):
        t = t or self.tok
        found = "end of input" if t.kind == "EOF" else f"'{t.value}'"
        raise ParseError(f"{message}, found {found}", t.line, t.column)

    def at_sym(self, s: str) -> bool:
        return self.tok.kind == "SYM" and self.tok.value == s

    def at_word(self, w: str) -> bool:
        return self.tok.kind == "ID" and self.tok.value == w

    def expect_sym(self, s: str) -> Token:
        if not self.at_sym(s):
            self.error(f"expected '{s}'")
        return self.advance()

    def expect_word(self, w: str) -> Token:
        if not self.at_word(w):
            self.error(f"expected '{w}'")
        return self.advance()

    def expect_id(self, what: str) -> Token:
        if self.tok.kind != "ID":
            self.error(f"expected {what}")
        return self.advance()

    def expect_int(self, what: str) -> Token:
        if self.tok.kind != "INT":
            self.error(f"expected {what}")
        return self.advance()

    def coefficient(self, t: Token, negative: bool) -> int:
        value = int(t.value)
        if value >= self.p:
            logger.warning(f"{t.line}:{t.column}: coefficient {value} reduced mod {self.p} "
                           f"to {value % self.p}")
        return (-value if negative else value) % self.p

    # file := header block*
    def parse(self) -> ProblemFile:
        if not self.at_word("field"):
            self.error("expected 'field' at the start of the file")
        self.advance()
        t = self.expect_int("the field characteristic")
        self.p = int(t.value)
        if self.p < 2:
            raise ParseError(f"field characteristic must be at least 2, got {self.p}", t.line, t.column)

        blocks: Dict[str, object] = {}
        while self.tok.kind != "EOF":
            t = self.tok
            if t.kind != "ID" or t.value not in KEYWORDS[1:]:
                self.error("expected a block keyword (" + ", ".join(KEYWORDS[1:]) + ")")
            if t.value in blocks:
                raise ParseError(f"duplicate '{t.value}' block", t.line, t.column)
            self.advance()
            blocks[t.value] = getattr(self, "_" + t.value)()

        if "quiver" not in blocks:
            self.error("missing 'quiver' block")
        vertices, arrows = blocks["quiver"]
        mode, precedence = blocks.get("order", (OrderMode.NEGATIVE_DEGREE.value, None))
        return ProblemFile(
            field=self.p,
            vertices=vertices,
            arrows=arrows,
            relations=blocks.get("relations", ()),
            nilpotency=blocks.get("nilpotency"),
            order_mode=mode,
            precedence=precedence,
            module_gens=blocks.get("module", ()),
            generators=blocks.get("generators", ()),
            has_module="module" in blocks,
        )

    def _quiver(self):
        self.expect_sym("{")
        vertices, arrows = [], []
        while not self.at_sym("}"):
            if self.at_word("vertex"):
                self.advance()
                t = self.expect_id("a vertex id")
                vertices.append(VertexDecl(t.line, t.column, t.value))
            elif self.at_word("arrow"):
                self.advance()
                t = self.expect_id("an arrow id")
                source = self.expect_id("the source vertex").value
                target = self.expect_id("the target vertex").value
                arrows.append(ArrowDecl(t.line, t.column, t.value, source, target))
            else:
                self.error("expected 'vertex', 'arrow' or '}'")
        self.advance()
        return tuple(vertices), tuple(arrows)

    def _relations(self):
        self.expect_sym("{")
        relations = []
        while not self.at_sym("}"):
            relations.append(self._poly())
            if not self.at_sym(";"):
                break
            self.advance()
        self.expect_sym("}")
        return tuple(relations)

    def _nilpotency(self):
        if self.at_word("auto"):
            self.advance()
            return None
        t = self.expect_int("an integer or 'auto'")
        return int(t.value)

    def _order(self):
        t = self.tok
        if t.kind != "ID" or t.value not in ("negdeglex", "deglex"):
            self.error("expected 'negdeglex' or 'deglex'")
        self.advance()
        precedence = None
        if self.at_word("precedence"):
            self.advance()
            ids = []
            while self.tok.kind == "ID" and self.tok.value not in KEYWORDS:
                ids.append(self.advance().value)
            if not ids:
                self.error("expected arrow ids after 'precedence'")
            precedence = tuple(ids)
        return t.value, precedence

    def _module(self):
        self.expect_sym("{")
        gens = []
        while not self.at_sym("}"):
            self.expect_word("gen")
            t = self.expect_id("a generator id")
            self.expect_word("at")
            vertex = self.expect_id("a vertex id").value
            gens.append(GenDecl(t.line, t.column, t.value, vertex))
        self.advance()
        return tuple(gens)

    def _generators(self):
        self.expect_sym("{")
        defs = []
        while not self.at_sym("}"):
            t = self.expect_id("a generator name")
            self.expect_sym("=")
            defs.append(GeneratorDef(t.line, t.column, t.value, self._modpoly()))
            if not self.at_sym(";"):
                break
            self.advance()
        self.expect_sym("}")
        return tuple(defs)

    def _signed_terms(self, term):
        negative = False
        if self.at_sym("-"):
            self.advance()
            negative = True
        terms = [term(negative)]
        while self.at_sym("+") or self.at_sym("-"):
            negative = self.advance().value == "-"
            terms.append(term(negative))
        return tuple(terms)

    # poly := term (("+"|"-") term)*
    def _poly(self) -> Tuple[PolyTerm, ...]:
        return self._signed_terms(self._term)

    # term := [INT "*"] pathexpr
    def _term(self, negative: bool) -> PolyTerm:
        start = self.tok
        coeff = -1 % self.p if negative else 1
        if self.tok.kind == "INT":
            coeff = self.coefficient(self.advance(), negative)
            self.expect_sym("*")
        return PolyTerm(start.line, start.column, coeff, self._pathexpr())

    # pathexpr := factor ("*" factor)*
    def _pathexpr(self) -> Tuple[Factor, ...]:
        factors = [self._factor()]
        while self.at_sym("*"):
            self.advance()
            factors.append(self._factor())
        return tuple(factors)

    # factor := ARROWID | "id(" VERTEXID ")"
    def _factor(self) -> Factor:
        t = self.expect_id("an arrow id or id(vertex)")
        if t.value == "id" and self.at_sym("("):
            self.advance()
            v = self.expect_id("a vertex id")
            self.expect_sym(")")
            return Factor(v.value, trivial=True)
        return Factor(t.value)

    def _modpoly(self) -> Tuple[ModTerm, ...]:
        return self._signed_terms(self._modterm)

    # modterm := [INT "*"] GENID ["*" pathexpr]
    def _modterm(self, negative: bool) -> ModTerm:
        start = self.tok
        coeff = -1 % self.p if negative else 1
        if self.tok.kind == "INT":
            coeff = self.coefficient(self.advance(), negative)
            self.expect_sym("*")
        gen = self.expect_id("a module generator id").value
        path: Tuple[Factor, ...] = ()
        if self.at_sym("*"):
            self.advance()
            path = self._pathexpr()
        return ModTerm(start.line, start.column, coeff, gen, path)


def parse_problem(text: str) -> ProblemFile:
    """
    Parse problem text into a ProblemFile

    Raises:
        ParseError: with the line and column of the offending token
    """
    return _Parser(text).parse()


# --- printer ---------------------------------------------------------------

def _format_path(path: Tuple[Factor, ...]) -> str:
    return "*".join(str(f) for f in path)


def _format_coeff(coeff: int) -> str:
    return "" if coeff == 1 else f"{coeff}*"


def format_problem(problem: ProblemFile) -> str:
    """Canonical text of a ProblemFile; parsing it gives back an equal AST"""
    lines = [f"field {problem.field}", "quiver {"]
    lines += [f"  vertex {v.id}" for v in problem.vertices]
    lines += [f"  arrow {a.id} {a.source} {a.target}" for a in problem.arrows]
    lines.append("}")
    if problem.relations:
        rels = [" + ".join(_format_coeff(t.coeff) + _format_path(t.path) for t in rel)
                for rel in problem.relations]
        lines.append("relations {")
        lines.append(";\n".join("  " + r for r in rels))
        lines.append("}")
    lines.append("nilpotency " + ("auto" if problem.nilpotency is None else str(problem.nilpotency)))
    order = f"order {problem.order_mode}"
    if problem.precedence:
        order += " precedence " + " ".join(problem.precedence)
    lines.append(order)
    if problem.has_module:
        lines.append("module {")
        lines += [f"  gen {g.name} at {g.vertex}" for g in problem.module_gens]
        lines.append("}")
    if problem.generators:
        defs = []
        for gdef in problem.generators:
            terms = []
            for t in gdef.terms:
                text = _format_coeff(t.coeff) + t.gen
                if t.path:
                    text += "*" + _format_path(t.path)
                terms.append(text)
            defs.append(f"  {gdef.name} = " + " + ".join(terms))
        lines.append("generators {")
        lines.append(";\n".join(defs))
        lines.append("}")
    return "\n".join(lines) + "\n"


# --- semantic resolution ---------------------------------------------------

def _resolve_path(quiver: Quiver, factors: Tuple[Factor, ...], where: Located) -> Path:
    result: Optional[Path] = None
    for f in factors:
        if f.trivial:
            if f.name not in quiver.vertices:
                raise SemanticError("unknown vertex", f.name, where.line, where.column)
            step = quiver.trivial(f.name)
        else:
            if f.name not in quiver.arrows:
                raise SemanticError("unknown arrow", f.name, where.line, where.column)
            step = quiver.arrow(f.name)
        if result is None:
            result = step
            continue
        product = compose(result, step)
        if product is ZERO:
            raise SemanticError("vertex mismatch in path", str(f), where.line, where.column)
        result = product
    return result


def _resolve_quiver(pf: ProblemFile) -> Quiver:
    seen: Dict[str, Located] = {}
    for decl in list(pf.vertices) + list(pf.arrows):
        if decl.id in seen:
            raise SemanticError("duplicate id", decl.id, decl.line, decl.column)
        seen[decl.id] = decl
    for a in pf.arrows:
        for v in (a.source, a.target):
            if v not in {d.id for d in pf.vertices}:
                raise SemanticError("arrow endpoint is not a declared vertex", v, a.line, a.column)
    return Quiver([v.id for v in pf.vertices], [(a.id, a.source, a.target) for a in pf.arrows])


def resolve_problem(pf: ProblemFile, degree_cap: Optional[int] = None) -> Problem:
    """
    Turn a ProblemFile into a Problem, building the algebra

    Raises:
        SemanticError: unresolved or inconsistent references
        ComputationError: the algebra cannot be built (NotBasic, ...)
    """
    try:
        field_ = FieldSpec(pf.field)
    except ValueError as e:
        raise SemanticError(str(e), str(pf.field)) from e
    quiver = _resolve_quiver(pf)
    order = OrderSpec.for_quiver(quiver, OrderMode(pf.order_mode), pf.precedence)

    relations = []
    for rel in pf.relations:
        vector: Dict[Path, int] = {}
        ends = None
        for term in rel:
            path = _resolve_path(quiver, term.path, term)
            if ends is None:
                ends = (path.start, path.end)
            elif (path.start, path.end) != ends:
                raise SemanticError("relation terms do not share endpoints", str(path), term.line, term.column)
            vector[path] = (vector.get(path, 0) + term.coeff) % field_.p
        relations.append(vector)

    spec = AlgebraSpec(quiver, field_, relations, order, pf.nilpotency,
                       degree_cap if degree_cap is not None else DEFAULT_DEGREE_CAP)
    algebra = build_algebra(spec)
    problem = Problem(algebra, source=pf)
    if not pf.has_module:
        if pf.generators:
            g = pf.generators[0]
            raise SemanticError("generators given without a module block", g.name, g.line, g.column)
        return problem

    for decl in pf.module_gens:
        if decl.vertex not in quiver.vertices:
            raise SemanticError("unknown vertex", decl.vertex, decl.line, decl.column)
        if decl.name in quiver.vertices or decl.name in quiver.arrows:
            raise SemanticError("duplicate id", decl.name, decl.line, decl.column)
    module = FreeModule(algebra, [(g.name, g.vertex) for g in pf.module_gens])
    problem.module = module

    names = set()
    for gdef in pf.generators:
        if gdef.name in names:
            raise SemanticError("duplicate generator name", gdef.name, gdef.line, gdef.column)
        names.add(gdef.name)
        element = module.zero()
        end = None
        for term in gdef.terms:
            if term.gen not in module.names:
                raise SemanticError("unknown module generator", term.gen, term.line, term.column)
            i = module.index_of(term.gen)
            if term.path:
                path = _resolve_path(quiver, term.path, term)
                if path.start != module.vertices[i]:
                    raise SemanticError("vertex mismatch between generator and path", term.gen,
                                        term.line, term.column)
            else:
                path = quiver.trivial(module.vertices[i])
            if end is None:
                end = path.end
            elif path.end != end:
                raise SemanticError("generator terms end at different vertices", gdef.name,
                                    term.line, term.column)
            element = element + act_path(module.basis_element(i), path).scale(term.coeff)
        problem.generators.append(element)
        problem.generator_names.append(gdef.name)
        problem.sig_vertices.append(end)
        if element.is_zero():
            logger.warning(f"generator {gdef.name} is zero in the algebra")
    return problem

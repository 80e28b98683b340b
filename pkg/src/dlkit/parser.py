"""Line-oriented ASCII syntax for ontologies: parsing and canonical rendering.

One axiom per line, ``#`` starts a comment. Concept operators bind, from
tightest to loosest: ``not``, the quantifiers, ``and``, ``or``. ``and`` and
``or`` associate to the left.

    julia : Mother
    (julia, john) : parentOf
    Mother EquivalentTo (Female and Parent)
    exists sonOf.Top SubClassOf Male
    brotherOf o parentOf SubRoleOf uncleOf
    Transitive(ancestorOf)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from dlkit.syntax import (
    And,
    AtLeast,
    AtMost,
    Axiom,
    Bottom,
    Characteristic,
    CharacteristicKind,
    ComplexRoleIncl,
    ConceptAssertion,
    ConceptEquiv,
    ConceptExpr,
    ConceptIncl,
    Equal,
    Exists,
    Forall,
    Inverse,
    Named,
    Nominal,
    Not,
    NotEqual,
    Ontology,
    Or,
    RoleAssertion,
    RoleDisjoint,
    RoleEquiv,
    RoleExpr,
    RoleIncl,
    RoleName,
    Self,
    Signature,
    Top,
    Universal,
    build_ontology,
)

KEYWORDS = frozenset(
    {
        "SubClassOf", "EquivalentTo", "SubRoleOf", "EquivalentRole", "o",
        "Disjoint", "and", "or", "not", "exists", "forall", "Top", "Bottom",
        "Self", "Universal", "inv",
    }
    | {k.value for k in CharacteristicKind}
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<num>[0-9]+)
  | (?P<op>!=|>=|<=|[:(),={}.])
    """,
    re.VERBOSE,
)


class ParseError(Exception):
    """Malformed input, with a 1-based position.

    `kind` is one of "Lexical", "Syntax", "NameKindConflict".
    """

    def __init__(self, line: int, column: int, message: str, kind: str = "Syntax"):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.kind = kind


@dataclass(frozen=True)
class Token:
    type: str  # "name", "kw", "num", "op", "nl", "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                line, pos - line_start + 1, f"unexpected character {text[pos]!r}", "Lexical"
            )
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "nl":
            tokens.append(Token("nl", "\n", line, col))
            line += 1
            line_start = m.end()
        elif kind == "word":
            word = m.group()
            tokens.append(Token("kw" if word in KEYWORDS else "name", word, line, col))
        elif kind in ("num", "op"):
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], signature: Optional[Signature] = None):
        self.tokens = tokens
        self.pos = 0
        # name -> (kind, token) of first use; seeds from a known signature
        self.kinds: dict[str, tuple[str, Optional[Token]]] = {}
        if signature is not None:
            for kind, names in (
                ("individual", signature.individuals),
                ("concept", signature.concepts),
                ("role", signature.roles),
            ):
                for name in names:
                    self.kinds[name] = (kind, None)

    # -- token helpers ---------------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        self.pos += 1
        return tok

    def at(self, text: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok.type in ("kw", "op") and tok.text == text

    def error(self, tok: Token, message: str, kind: str = "Syntax") -> ParseError:
        return ParseError(tok.line, tok.column, message, kind)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            tok = self.peek()
            raise self.error(tok, f"expected {text!r}, found {_describe(tok)}")
        return self.next()

    def name(self, kind: str) -> str:
        tok = self.peek()
        if tok.type != "name":
            raise self.error(tok, f"expected {kind} name, found {_describe(tok)}")
        self.next()
        prev = self.kinds.setdefault(tok.text, (kind, tok))
        if prev[0] != kind:
            raise self.error(
                tok,
                f"name {tok.text!r} used as {kind} but earlier as {prev[0]}",
                "NameKindConflict",
            )
        return tok.text

    def end_of_axiom(self) -> None:
        tok = self.peek()
        if tok.type not in ("nl", "eof"):
            raise self.error(tok, f"expected end of line, found {_describe(tok)}")

    # -- grammar ---------------------------------------------------------

    def role(self) -> RoleExpr:
        if self.at("Universal"):
            self.next()
            return Universal()
        if self.at("inv"):
            self.next()
            self.expect("(")
            name = self.name("role")
            self.expect(")")
            return Inverse(name)
        return RoleName(self.name("role"))

    def concept(self) -> ConceptExpr:
        c = self.inter()
        while self.at("or"):
            self.next()
            c = Or(c, self.inter())
        return c

    def inter(self) -> ConceptExpr:
        c = self.unary()
        while self.at("and"):
            self.next()
            c = And(c, self.unary())
        return c

    def unary(self) -> ConceptExpr:
        if self.at("not"):
            self.next()
            return Not(self.unary())
        if self.at("exists") or self.at("forall"):
            ctor = Exists if self.next().text == "exists" else Forall
            r = self.role()
            self.expect(".")
            return ctor(r, self.unary())
        if self.at(">=") or self.at("<="):
            ctor = AtLeast if self.next().text == ">=" else AtMost
            tok = self.peek()
            if tok.type != "num":
                raise self.error(tok, f"expected a number, found {_describe(tok)}")
            self.next()
            r = self.role()
            self.expect(".")
            return ctor(int(tok.text), r, self.unary())
        return self.atom()

    def atom(self) -> ConceptExpr:
        tok = self.peek()
        if self.at("Top"):
            self.next()
            return Top()
        if self.at("Bottom"):
            self.next()
            return Bottom()
        if self.at("{"):
            self.next()
            ind = self.name("individual")
            self.expect("}")
            return Nominal(ind)
        if self.at("Self"):
            self.next()
            self.expect("(")
            r = self.role()
            self.expect(")")
            return Self(r)
        if self.at("("):
            self.next()
            c = self.concept()
            self.expect(")")
            return c
        if tok.type == "name":
            return Named(self.name("concept"))
        raise self.error(tok, f"expected a concept, found {_describe(tok)}")

    def axiom(self) -> Axiom:
        tok = self.peek()
        if tok.type == "kw" and tok.text in _CHARACTERISTICS:
            self.next()
            self.expect("(")
            r = self.role()
            self.expect(")")
            return Characteristic(_CHARACTERISTICS[tok.text], r)
        if self.at("Disjoint"):
            self.next()
            self.expect("(")
            r = self.role()
            self.expect(",")
            s = self.role()
            self.expect(")")
            return RoleDisjoint(r, s)
        if self.at("(") and self.peek(1).type == "name" and self.at(",", 2):
            self.next()
            a = self.name("individual")
            self.expect(",")
            b = self.name("individual")
            self.expect(")")
            self.expect(":")
            return RoleAssertion(self.role(), a, b)
        if tok.type == "name":
            nxt = self.peek(1)
            if nxt.type == "op" and nxt.text in (":", "=", "!="):
                a = self.name("individual")
                op = self.next().text
                if op == ":":
                    return ConceptAssertion(self.concept(), a)
                b = self.name("individual")
                return Equal(a, b) if op == "=" else NotEqual(a, b)
            if nxt.type == "kw" and nxt.text in ("o", "SubRoleOf", "EquivalentRole"):
                return self.role_axiom()
        if self.at("Universal") or self.at("inv"):
            return self.role_axiom()
        c = self.concept()
        op = self.peek()
        if self.at("SubClassOf"):
            self.next()
            return ConceptIncl(c, self.concept())
        if self.at("EquivalentTo"):
            self.next()
            return ConceptEquiv(c, self.concept())
        raise self.error(op, f"expected 'SubClassOf' or 'EquivalentTo', found {_describe(op)}")

    def role_axiom(self) -> Axiom:
        r = self.role()
        if self.at("o"):
            self.next()
            s = self.role()
            if self.at("o"):
                raise self.error(self.peek(), "role chains are limited to two roles")
            self.expect("SubRoleOf")
            return ComplexRoleIncl(r, s, self.role())
        if self.at("SubRoleOf"):
            self.next()
            return RoleIncl(r, self.role())
        if self.at("EquivalentRole"):
            self.next()
            return RoleEquiv(r, self.role())
        tok = self.peek()
        raise self.error(tok, f"expected 'o', 'SubRoleOf' or 'EquivalentRole', found {_describe(tok)}")

    def axiom_lines(self) -> tuple[list[Axiom], list[int]]:
        axioms, lines = [], []
        while self.peek().type != "eof":
            if self.peek().type == "nl":
                self.next()
                continue
            line = self.peek().line
            axioms.append(self.axiom())
            lines.append(line)
            self.end_of_axiom()
        return axioms, lines


_CHARACTERISTICS = {k.value: k for k in CharacteristicKind}


def _describe(tok: Token) -> str:
    if tok.type == "eof":
        return "end of input"
    if tok.type == "nl":
        return "end of line"
    return repr(tok.text)


def _guarded(parser: _Parser, run):
    # pathological nesting must surface as a ParseError, not a crash
    try:
        return run()
    except RecursionError:
        raise parser.error(parser.peek(), "expression nested too deeply") from None


def parse_ontology(text: str) -> Ontology:
    """Parse a whole ontology file; axiom order is preserved."""
    parser = _Parser(tokenize(text))
    axioms, lines = _guarded(parser, parser.axiom_lines)
    return build_ontology(axioms, locations=lines)


def parse_axiom(text: str, signature: Optional[Signature] = None) -> Axiom:
    """Parse exactly one axiom, checking name kinds against `signature`."""
    parser = _Parser(tokenize(text), signature)
    while parser.peek().type == "nl":
        parser.next()
    tok = parser.peek()
    if tok.type == "eof":
        raise parser.error(tok, "expected an axiom, found end of input")
    axiom = _guarded(parser, parser.axiom)
    while parser.peek().type == "nl":
        parser.next()
    if parser.peek().type != "eof":
        raise parser.error(parser.peek(), "expected a single axiom")
    return axiom


def parse_concept(text: str) -> ConceptExpr:
    parser = _Parser(tokenize(text))
    c = _guarded(parser, parser.concept)
    tok = parser.peek()
    if tok.type != "eof":
        raise parser.error(tok, f"unexpected {_describe(tok)}")
    return c


# --------------------------------------------------------------------------
# Rendering
# --------------------------------------------------------------------------


def render_role(r: RoleExpr) -> str:
    if isinstance(r, Universal):
        return "Universal"
    if isinstance(r, Inverse):
        return f"inv({r.name})"
    return r.name


def render_concept(c: ConceptExpr) -> str:
    if isinstance(c, Named):
        return c.name
    if isinstance(c, Top):
        return "Top"
    if isinstance(c, Bottom):
        return "Bottom"
    if isinstance(c, Nominal):
        return "{" + c.individual + "}"
    if isinstance(c, Self):
        return f"Self({render_role(c.role)})"
    if isinstance(c, Not):
        return "not " + _operand(c.operand)
    if isinstance(c, Exists):
        return f"exists {render_role(c.role)}.{_operand(c.filler)}"
    if isinstance(c, Forall):
        return f"forall {render_role(c.role)}.{_operand(c.filler)}"
    if isinstance(c, AtLeast):
        return f">= {c.n} {render_role(c.role)}.{_operand(c.filler)}"
    if isinstance(c, AtMost):
        return f"<= {c.n} {render_role(c.role)}.{_operand(c.filler)}"
    if isinstance(c, (And, Or)):
        op = " and " if isinstance(c, And) else " or "
        # left associativity: only a same-operator left child goes bare
        left = render_concept(c.left) if type(c.left) is type(c) else _operand(c.left)
        return left + op + _operand(c.right)
    raise TypeError(f"not a concept: {c!r}")


def _operand(c: ConceptExpr) -> str:
    s = render_concept(c)
    return f"({s})" if isinstance(c, (And, Or)) else s


def render_axiom(a: Axiom) -> str:
    if isinstance(a, ConceptAssertion):
        return f"{a.individual} : {_operand(a.concept)}"
    if isinstance(a, RoleAssertion):
        return f"({a.subject}, {a.object}) : {render_role(a.role)}"
    if isinstance(a, Equal):
        return f"{a.left} = {a.right}"
    if isinstance(a, NotEqual):
        return f"{a.left} != {a.right}"
    if isinstance(a, ConceptIncl):
        return f"{_operand(a.sub)} SubClassOf {_operand(a.sup)}"
    if isinstance(a, ConceptEquiv):
        return f"{_operand(a.left)} EquivalentTo {_operand(a.right)}"
    if isinstance(a, RoleIncl):
        return f"{render_role(a.sub)} SubRoleOf {render_role(a.sup)}"
    if isinstance(a, RoleEquiv):
        return f"{render_role(a.left)} EquivalentRole {render_role(a.right)}"
    if isinstance(a, ComplexRoleIncl):
        return (
            f"{render_role(a.first)} o {render_role(a.second)} "
            f"SubRoleOf {render_role(a.sup)}"
        )
    if isinstance(a, RoleDisjoint):
        return f"Disjoint({render_role(a.left)}, {render_role(a.right)})"
    if isinstance(a, Characteristic):
        return f"{a.kind.value}({render_role(a.role)})"
    raise TypeError(f"not an axiom: {a!r}")


def render(o: Ontology) -> str:
    """Canonical text, one axiom per line; empty ontology renders as ""."""
    return "".join(render_axiom(a) + "\n" for a in o.axioms)

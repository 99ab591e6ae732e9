"""The ``dimlat`` script language.

A script declares algebras, elements and families and then asks queries::

    algebra M { atom a : II_1; atom b : II_inf(aleph 0); }
    elem p over M = { a: 1/2, b: aleph 0 };
    elem q over M = { a: 3/4, b: 2 };
    family F = [p q];
    family N over M described { a: [0,1], b: naturals };
    meet p q;
    sup N;

Parsing is whitespace-insensitive, ``#`` starts a comment, and every
statement ends with ``;``.  :func:`parse` reports lexical, syntax, binding
and domain errors with the line and column of the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .algebra import (
    IFin,
    II1,
    III,
    IIInf,
    IInf,
    AlgebraDesc,
    AtomType,
    amplify,
    projection_domain,
    value_admissible,
)
from .chainset import ChainSet, Interval, Progression
from .complattice import Described, Explicit
from .dimfun import DimElement
from .extval import Aleph, ExtValue, Fin


class DslError(Exception):
    kind = "syntax"

    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.kind} error: {self.message}"


class LexError(DslError):
    kind = "lexical"


class ParseSyntaxError(DslError):
    kind = "syntax"


class BindingError(DslError):
    kind = "binding"


class DomainValidationError(DslError):
    kind = "domain"


# -- lexer ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, SYM, EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\f\v]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<NAME>[A-Za-z_][A-Za-z0-9_]*)|(?P<INT>[0-9]+)|(?P<SYM>[{}()\[\]:;,=/])"
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise LexError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind in ("NAME", "INT", "SYM"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


# -- syntax tree ---------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraDecl:
    name: str
    atoms: tuple[tuple[str, AtomType], ...]
    pos: tuple[int, int] = field(default=(0, 0), compare=False)

    def pretty(self) -> str:
        body = "".join(f"\n  atom {a} : {t};" for a, t in self.atoms)
        return f"algebra {self.name} {{{body}\n}}"


@dataclass(frozen=True)
class AmplifyDecl:
    name: str
    base: str
    index: ExtValue
    pos: tuple[int, int] = field(default=(0, 0), compare=False)

    def pretty(self) -> str:
        return f"algebra {self.name} = amplify {self.base} by {self.index};"


@dataclass(frozen=True)
class ElemDecl:
    name: str
    algebra: str
    values: tuple[tuple[str, ExtValue], ...]
    cone: bool = False
    pos: tuple[int, int] = field(default=(0, 0), compare=False)

    def pretty(self) -> str:
        kw = "cone" if self.cone else "elem"
        body = ", ".join(f"{a}: {v}" for a, v in self.values)
        return f"{kw} {self.name} over {self.algebra} = {{ {body} }};"


@dataclass(frozen=True)
class FamilyList:
    name: str
    members: tuple[str, ...]
    pos: tuple[int, int] = field(default=(0, 0), compare=False)

    def pretty(self) -> str:
        return f"family {self.name} = [{' '.join(self.members)}];"


@dataclass(frozen=True)
class FamilyDescribed:
    name: str
    algebra: str
    chains: tuple[tuple[str, ChainSet], ...]
    pos: tuple[int, int] = field(default=(0, 0), compare=False)

    def pretty(self) -> str:
        body = ", ".join(f"{a}: {c}" for a, c in self.chains)
        return f"family {self.name} over {self.algebra} described {{ {body} }};"


QUERY_ARITY = {
    "leq": 2, "add": 2, "meet": 2, "join": 2,
    "sup": 1, "inf": 1, "closure": 1, "in_closure": 2,
    "is_T0": 1, "is_T1": 1, "is_normal": 1, "unit": 1,
    "formal_sum": 1, "rep_sub": 2, "rep_super": 2, "oracle_check": 0,
}


@dataclass(frozen=True)
class Query:
    op: str
    args: tuple[str, ...] = ()
    index: Optional[ExtValue] = None  # rep_sub/rep_super ... by <index>
    shape: tuple[int, ...] = ()  # oracle_check
    pos: tuple[int, int] = field(default=(0, 0), compare=False)

    def text(self) -> str:
        if self.op == "oracle_check":
            return f"oracle_check ({', '.join(map(str, self.shape))})"
        s = " ".join((self.op,) + self.args)
        if self.index is not None:
            s += f" by {self.index}"
        return s

    def pretty(self) -> str:
        return self.text() + ";"


Statement = Union[AlgebraDecl, AmplifyDecl, ElemDecl, FamilyList, FamilyDescribed, Query]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]

    def pretty(self) -> str:
        return "".join(s.pretty() + "\n" for s in self.statements)


def pretty_print(script: Script) -> str:
    return script.pretty()


# -- environment -------------------------------------------------------------------


class Environment:
    """Names bound by the definitions of a script, in order."""

    def __init__(self) -> None:
        self.bindings: dict[str, tuple[str, object]] = {}

    def get(self, name: str):
        return self.bindings.get(name)

    def define(self, stmt: Statement):
        if isinstance(stmt, AlgebraDecl):
            obj, kind = AlgebraDesc(stmt.atoms, name=stmt.name), "algebra"
        elif isinstance(stmt, AmplifyDecl):
            base = self.bindings[stmt.base][1]
            B = amplify(base, stmt.index)
            obj, kind = AlgebraDesc(B.atoms, name=stmt.name, origin=(base, stmt.index)), "algebra"
        elif isinstance(stmt, ElemDecl):
            A = self.bindings[stmt.algebra][1]
            obj = DimElement.of(A, dict(stmt.values), kind="cone" if stmt.cone else "projection")
            kind = "elem"
        elif isinstance(stmt, FamilyList):
            obj, kind = Explicit(self.bindings[m][1] for m in stmt.members), "family"
        elif isinstance(stmt, FamilyDescribed):
            A = self.bindings[stmt.algebra][1]
            obj, kind = Described.of(A, dict(stmt.chains)), "family"
        else:
            raise TypeError(f"{type(stmt).__name__} is not a definition")
        self.bindings[stmt.name] = (kind, obj)
        return obj


def algebra_of(kind: str, obj) -> AlgebraDesc:
    return obj if kind == "algebra" else obj.algebra


# -- parser --------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.i = 0
        self.env = Environment()

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "EOF":
            self.i += 1
        return t

    def error(self, msg: str, tok: Optional[Token] = None, cls=ParseSyntaxError):
        tok = tok or self.tok
        return cls(msg, tok.line, tok.col)

    def describe(self, tok: Token) -> str:
        return "end of input" if tok.kind == "EOF" else repr(tok.text)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("SYM", "NAME"):
            raise self.error(f"expected {text!r}, found {self.describe(self.tok)}")
        return self.advance()

    def accept(self, text: str) -> bool:
        if self.tok.text == text and self.tok.kind in ("SYM", "NAME"):
            self.advance()
            return True
        return False

    def name(self, what: str = "a name") -> Token:
        if self.tok.kind != "NAME":
            raise self.error(f"expected {what}, found {self.describe(self.tok)}")
        return self.advance()

    def integer(self) -> tuple[int, Token]:
        if self.tok.kind != "INT":
            raise self.error(f"expected an integer, found {self.describe(self.tok)}")
        t = self.advance()
        return int(t.text), t

    # values

    def aleph(self) -> Aleph:
        start = self.expect("aleph")
        level, tok = self.integer()
        try:
            return Aleph(level)
        except ValueError as exc:
            raise self.error(str(exc), start, DomainValidationError) from None

    def rational(self) -> Fraction:
        num, _ = self.integer()
        if self.accept("/"):
            den, tok = self.integer()
            if den == 0:
                raise self.error("zero denominator", tok, DomainValidationError)
            return Fraction(num, den)
        return Fraction(num)

    def value(self) -> ExtValue:
        if self.tok.text == "aleph":
            return self.aleph()
        if self.tok.kind == "INT":
            return Fin(self.rational())
        raise self.error(f"expected a value, found {self.describe(self.tok)}")

    def atomtype(self) -> AtomType:
        t = self.name("an atom type")
        kind = t.text
        if kind == "II_1":
            return II1()
        if kind == "I_fin":
            self.expect("(")
            n, ntok = self.integer()
            self.expect(")")
            if n < 1:
                raise self.error("I_fin needs a positive size", ntok, DomainValidationError)
            return IFin(n)
        if kind in ("I_inf", "II_inf", "III"):
            self.expect("(")
            a = self.aleph()
            self.expect(")")
            return {"I_inf": IInf, "II_inf": IIInf, "III": III}[kind](a.level)
        raise self.error(f"unknown atom type {kind!r}", t)

    # chain sets

    def chain_item(self, intervals, points, progs, alephs) -> None:
        tok = self.tok
        if tok.text in ("(", "[") and tok.kind == "SYM":
            lo_closed = self.advance().text == "["
            lo = self.rational()
            self.expect(",")
            if self.accept("inf"):
                hi = None
                if not self.accept(")"):
                    raise self.error("an unbounded interval must end with ')'")
                hi_closed = False
            else:
                hi = self.rational()
                if self.accept("]"):
                    hi_closed = True
                else:
                    self.expect(")")
                    hi_closed = False
            if hi is not None and hi < lo:
                raise self.error("interval upper end is below its lower end", tok, DomainValidationError)
            intervals.append(Interval(lo, hi, lo_closed, hi_closed))
        elif tok.text == "naturals":
            self.advance()
            progs.append(Progression(Fraction(0), Fraction(1)))
        elif tok.text == "progression":
            self.advance()
            self.expect("(")
            start = self.rational()
            self.expect(",")
            step_tok = self.tok
            step = self.rational()
            self.expect(")")
            if step <= 0:
                raise self.error("progression step must be positive", step_tok, DomainValidationError)
            progs.append(Progression(start, step))
        elif tok.text == "aleph":
            alephs.add(self.aleph().level)
        elif tok.kind == "INT":
            points.add(self.rational())
        else:
            raise self.error(f"expected a value set item, found {self.describe(tok)}")

    def chainset(self) -> ChainSet:
        intervals, points, progs, alephs = [], set(), [], set()
        if self.accept("{"):
            if not self.accept("}"):
                self.chain_item(intervals, points, progs, alephs)
                while self.accept(","):
                    self.chain_item(intervals, points, progs, alephs)
                self.expect("}")
        else:
            self.chain_item(intervals, points, progs, alephs)
        return ChainSet(tuple(intervals), frozenset(points), tuple(progs), frozenset(alephs))

    # environment

    def fresh(self, tok: Token) -> None:
        if self.env.get(tok.text) is not None:
            raise self.error(f"name {tok.text!r} is already bound", tok, BindingError)

    def lookup(self, tok: Token, *kinds: str):
        entry = self.env.get(tok.text)
        if entry is None:
            raise self.error(f"unbound name {tok.text!r}", tok, BindingError)
        if entry[0] not in kinds:
            raise self.error(f"{tok.text!r} is a {entry[0]}, expected {' or '.join(kinds)}", tok, BindingError)
        return entry

    # statements

    def script(self) -> Script:
        stmts = []
        while self.tok.kind != "EOF":
            stmts.append(self.statement())
        return Script(tuple(stmts))

    def statement(self) -> Statement:
        tok = self.tok
        if tok.kind != "NAME":
            raise self.error(f"expected a statement, found {self.describe(tok)}")
        if tok.text == "algebra":
            stmt = self.algebra_decl()
        elif tok.text in ("elem", "cone"):
            stmt = self.elem_decl()
        elif tok.text == "family":
            stmt = self.family_decl()
        elif tok.text in QUERY_ARITY:
            return self.query()
        else:
            raise self.error(f"unknown statement {tok.text!r}")
        try:
            self.env.define(stmt)
        except ValueError as exc:
            raise DomainValidationError(str(exc), *stmt.pos) from None
        return stmt

    def algebra_decl(self) -> Statement:
        start = self.expect("algebra")
        name = self.name("an algebra name")
        self.fresh(name)
        if self.accept("="):
            self.expect("amplify")
            base_tok = self.name("an algebra name")
            self.lookup(base_tok, "algebra")
            self.expect("by")
            idx_tok = self.tok
            index = self.value()
            if isinstance(index, Fin) and (index.q.denominator != 1 or index.q < 1):
                raise self.error("amplification index must be a positive integer or an aleph",
                                 idx_tok, DomainValidationError)
            self.expect(";")
            return AmplifyDecl(name.text, base_tok.text, index, pos=(start.line, start.col))
        self.expect("{")
        atoms = []
        seen = set()
        while True:
            self.expect("atom")
            aname = self.name("an atom name")
            if aname.text in seen:
                raise self.error(f"duplicate atom {aname.text!r}", aname, BindingError)
            seen.add(aname.text)
            self.expect(":")
            atoms.append((aname.text, self.atomtype()))
            self.expect(";")
            if self.accept("}"):
                break
            if self.tok.text != "atom":
                raise self.error(f"expected 'atom' or '}}', found {self.describe(self.tok)}")
        return AlgebraDecl(name.text, tuple(atoms), pos=(start.line, start.col))

    def _atom_entries(self, A: AlgebraDesc, read_value):
        """``{ atom: <value>, ... }`` with an optional trailing comma."""
        brace = self.expect("{")
        entries = {}
        while True:
            atok = self.name("an atom name")
            if atok.text not in A.ids:
                raise self.error(f"algebra {A.name} has no atom {atok.text!r}", atok, BindingError)
            if atok.text in entries:
                raise self.error(f"atom {atok.text!r} given twice", atok, BindingError)
            self.expect(":")
            vtok = self.tok
            entries[atok.text] = (read_value(), vtok)
            if self.accept(","):
                if self.accept("}"):
                    break
                continue
            if self.accept("}"):
                break
            raise self.error(f"expected ',' or '}}', found {self.describe(self.tok)}")
        missing = [a for a in A.ids if a not in entries]
        if missing:
            raise self.error(f"missing entry for atom(s) {', '.join(missing)}", brace, DomainValidationError)
        return entries

    def elem_decl(self) -> ElemDecl:
        start = self.advance()
        cone = start.text == "cone"
        name = self.name("an element name")
        self.fresh(name)
        self.expect("over")
        alg_tok = self.name("an algebra name")
        _, A = self.lookup(alg_tok, "algebra")
        self.expect("=")
        entries = self._atom_entries(A, self.value)
        self.expect(";")
        for atom, (v, vtok) in entries.items():
            msg = value_admissible(A.type_of(atom), v, projection=not cone)
            if msg is not None:
                raise self.error(msg, vtok, DomainValidationError)
        ordered = tuple((a, entries[a][0]) for a in A.ids)
        return ElemDecl(name.text, alg_tok.text, ordered, cone, pos=(start.line, start.col))

    def family_decl(self) -> Statement:
        start = self.expect("family")
        name = self.name("a family name")
        self.fresh(name)
        if self.accept("="):
            open_tok = self.expect("[")
            members = []
            algebra = None
            while not self.accept("]"):
                mtok = self.name("an element name")
                _, el = self.lookup(mtok, "elem")
                if algebra is None:
                    algebra = el.algebra
                elif el.algebra != algebra:
                    raise self.error(f"{mtok.text!r} lives over a different algebra", mtok, BindingError)
                members.append(mtok.text)
                self.accept(",")
            self.expect(";")
            if not members:
                raise self.error("a family needs at least one member", open_tok, DomainValidationError)
            return FamilyList(name.text, tuple(members), pos=(start.line, start.col))
        self.expect("over")
        alg_tok = self.name("an algebra name")
        _, A = self.lookup(alg_tok, "algebra")
        self.expect("described")
        entries = self._atom_entries(A, self.chainset)
        self.expect(";")
        for atom, (chain, ctok) in entries.items():
            t = A.type_of(atom)
            if chain.is_empty:
                raise self.error(f"value set for atom {atom} is empty", ctok, DomainValidationError)
            if not chain.issubset(projection_domain(t)):
                raise self.error(f"value set {chain} leaves the admissible values of {t}",
                                 ctok, DomainValidationError)
        ordered = tuple((a, entries[a][0]) for a in A.ids)
        return FamilyDescribed(name.text, alg_tok.text, ordered, pos=(start.line, start.col))

    _ARG_KINDS = {
        "leq": [("elem",), ("elem",)], "add": [("elem",), ("elem",)],
        "meet": [("elem",), ("elem",)], "join": [("elem",), ("elem",)],
        "sup": [("family",)], "inf": [("family",)],
        "closure": [("elem", "family")], "in_closure": [("elem",), ("elem", "family")],
        "is_T0": [("algebra",)], "is_T1": [("algebra",)], "is_normal": [("algebra",)],
        "unit": [("algebra",)], "formal_sum": [("elem",)],
        "rep_sub": [("algebra",), ("family",)], "rep_super": [("algebra",), ("family",)],
    }

    def query(self) -> Query:
        start = self.advance()
        op = start.text
        pos = (start.line, start.col)
        if op == "oracle_check":
            self.expect("(")
            shape = []
            while True:
                n, ntok = self.integer()
                if n < 1:
                    raise self.error("matrix sizes must be positive", ntok, DomainValidationError)
                shape.append(n)
                if self.accept(")"):
                    break
                self.expect(",")
            self.expect(";")
            return Query(op, shape=tuple(shape), pos=pos)
        bound = []
        for allowed in self._ARG_KINDS[op]:
            atok = self.name(f"a {' or '.join(allowed)} name")
            bound.append((atok, *self.lookup(atok, *allowed)))
        if op in ("leq", "add", "meet", "join", "in_closure"):
            (_, xk, x), (ytok, yk, y) = bound
            if algebra_of(xk, x) != algebra_of(yk, y):
                raise self.error(f"{ytok.text!r} lives over a different algebra", ytok, BindingError)
        index = None
        if op in ("rep_sub", "rep_super") and self.accept("by"):
            index = self.value()
        self.expect(";")
        return Query(op, tuple(t.text for t, _, _ in bound), index=index, pos=pos)


def parse(text: str) -> Script:
    """Parse and check a script; raises :class:`DslError` on the first problem."""
    return _Parser(text).script()

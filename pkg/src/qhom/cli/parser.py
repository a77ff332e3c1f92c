"""Script language: tokenizer, AST, recursive-descent parser and canonical printer.

    script  := stmt*
    stmt    := "ring" ID "=" "poly" "(" field "," "[" ids "]" ["," ID] ["," list] ")"
                    ["/" "ideal" "(" polys ")"] ";"
             | "module" ID "=" mexpr ";"
             | "complex" ID "=" call ";"
             | "print" call ("," call)* ";"
             | "check" (call | ID) ";"
    mexpr   := "coker" ID matrix ["twists" list] | call
    call    := ID "(" [arg ("," arg)*] ")"
    arg     := list | poly
    list    := "[" [poly ("," poly)*] "]"
    matrix  := "[" list ("," list)* "]"
    field   := "QQ" | "GF" "(" INT ")"
    poly    := ["+" | "-"] term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := atom ["^" INT]
    atom    := INT | ID | "(" poly ")"

Comments run from '#' to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import ParseError

KEYWORDS = {"ring", "module", "complex", "print", "check", "coker"}

_TOKEN = re.compile(r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<int>\d+)"
                    r"|(?P<id>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[=()\[\],;/+\-*^])")


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "id" | "kw" | "op" | "eof"
    text: str
    line: int
    col: int

    def describe(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.text)


def tokenize(text: str) -> list[Token]:
    out = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind == "id":
            word = m.group()
            out.append(Token("kw" if word in KEYWORDS else "id", word, line, col))
        elif kind in ("int", "op"):
            out.append(Token(kind, m.group(), line, col))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


# AST


@dataclass
class Call:
    op: str
    args: list  # str (poly text or name) or list[str]

    def format(self) -> str:
        return f"{self.op}({', '.join(_fmt_arg(a) for a in self.args)})"


def _fmt_arg(a) -> str:
    if isinstance(a, list):
        return "[" + ", ".join(a) + "]"
    return a


@dataclass
class RingStmt:
    name: str
    field: str
    variables: list
    order: str | None = None
    weights: list | None = None
    relations: list = field(default_factory=list)
    line: int = 0

    def format(self) -> str:
        parts = [self.field, "[" + ", ".join(self.variables) + "]"]
        if self.order is not None:
            parts.append(self.order)
        if self.weights is not None:
            parts.append("[" + ", ".join(self.weights) + "]")
        s = f"ring {self.name} = poly({', '.join(parts)})"
        if self.relations:
            s += f" / ideal({', '.join(self.relations)})"
        return s + ";"


@dataclass
class Coker:
    ring: str
    rows: list
    twists: list | None = None

    def format(self) -> str:
        mat = "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.rows) + "]"
        s = f"coker {self.ring} {mat}"
        if self.twists is not None:
            s += " twists [" + ", ".join(self.twists) + "]"
        return s


@dataclass
class ModuleStmt:
    name: str
    expr: object  # Coker | Call
    line: int = 0

    def format(self) -> str:
        return f"module {self.name} = {self.expr.format()};"


@dataclass
class ComplexStmt:
    name: str
    expr: Call
    line: int = 0

    def format(self) -> str:
        return f"complex {self.name} = {self.expr.format()};"


@dataclass
class PrintStmt:
    items: list
    line: int = 0

    def format(self) -> str:
        return "print " + ", ".join(c.format() for c in self.items) + ";"


@dataclass
class CheckStmt:
    target: object  # Call | str
    line: int = 0

    def format(self) -> str:
        t = self.target.format() if isinstance(self.target, Call) else self.target
        return f"check {t};"


@dataclass
class Script:
    statements: list

    def format(self) -> str:
        return "".join(s.format() + "\n" for s in self.statements)


# parser

_POLY_START = ("'('", "'+'", "'-'", "identifier", "integer")


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, expected):
        t = self.peek()
        raise ParseError(f"unexpected {t.describe()}", t.line, t.col, tuple(sorted(expected)))

    def at(self, text: str) -> bool:
        t = self.peek()
        return t.kind in ("op", "kw", "id") and t.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail([repr(text)])
        return self.take()

    def ident(self) -> str:
        if self.peek().kind != "id":
            self.fail(["identifier"])
        return self.take().text

    def integer(self) -> str:
        if self.peek().kind != "int":
            self.fail(["integer"])
        return self.take().text

    # statements

    def script(self) -> Script:
        out = []
        while self.peek().kind != "eof":
            out.append(self.statement())
        return Script(out)

    def statement(self):
        t = self.peek()
        if t.kind == "kw":
            if t.text == "ring":
                return self.ring_stmt()
            if t.text == "module":
                return self.module_stmt()
            if t.text == "complex":
                return self.complex_stmt()
            if t.text == "print":
                return self.print_stmt()
            if t.text == "check":
                return self.check_stmt()
        self.fail(["'check'", "'complex'", "'module'", "'print'", "'ring'"])

    def ring_stmt(self) -> RingStmt:
        line = self.take().line
        name = self.ident()
        self.expect("=")
        self.expect("poly")
        self.expect("(")
        fld = self.field_spec()
        self.expect(",")
        variables = self.id_list()
        order = weights = None
        while self.at(","):
            self.take()
            if self.peek().kind == "id" and order is None and weights is None:
                order = self.take().text
            elif self.at("[") and weights is None:
                weights = self.int_list()
            else:
                self.fail(["'['", "identifier"] if weights is None else ["')'"])
        self.expect(")")
        rels = []
        if self.at("/"):
            self.take()
            self.expect("ideal")
            self.expect("(")
            rels = self.polys(")")
            self.expect(")")
        self.expect(";")
        return RingStmt(name, fld, variables, order, weights, rels, line)

    def field_spec(self) -> str:
        t = self.peek()
        if t.kind == "id" and t.text == "QQ":
            self.take()
            return "QQ"
        if t.kind == "id" and t.text == "GF":
            self.take()
            self.expect("(")
            p = self.integer()
            self.expect(")")
            return f"GF({p})"
        self.fail(["'GF'", "'QQ'"])

    def id_list(self) -> list:
        self.expect("[")
        out = [self.ident()]
        while self.at(","):
            self.take()
            out.append(self.ident())
        self.expect("]")
        return out

    def int_list(self) -> list:
        self.expect("[")
        out = []
        if not self.at("]"):
            out.append(self.signed_int())
            while self.at(","):
                self.take()
                out.append(self.signed_int())
        self.expect("]")
        return out

    def signed_int(self) -> str:
        sign = ""
        if self.at("-"):
            self.take()
            sign = "-"
        return sign + self.integer()

    def module_stmt(self) -> ModuleStmt:
        line = self.take().line
        name = self.ident()
        self.expect("=")
        if self.at("coker"):
            self.take()
            ring = self.ident()
            rows = self.matrix()
            twists = None
            if self.at("twists"):
                self.take()
                twists = self.int_list()
            expr = Coker(ring, rows, twists)
        elif self.peek().kind == "id":
            expr = self.call()
        else:
            self.fail(["'coker'", "identifier"])
        self.expect(";")
        return ModuleStmt(name, expr, line)

    def complex_stmt(self) -> ComplexStmt:
        line = self.take().line
        name = self.ident()
        self.expect("=")
        expr = self.call()
        self.expect(";")
        return ComplexStmt(name, expr, line)

    def print_stmt(self) -> PrintStmt:
        line = self.take().line
        items = [self.call()]
        while self.at(","):
            self.take()
            items.append(self.call())
        self.expect(";")
        return PrintStmt(items, line)

    def check_stmt(self) -> CheckStmt:
        line = self.take().line
        name = self.ident()
        target = self.call_rest(name) if self.at("(") else name
        self.expect(";")
        return CheckStmt(target, line)

    def call(self) -> Call:
        return self.call_rest(self.ident())

    def call_rest(self, op: str) -> Call:
        self.expect("(")
        args = []
        if not self.at(")"):
            args.append(self.arg())
            while self.at(","):
                self.take()
                args.append(self.arg())
        self.expect(")")
        return Call(op, args)

    def arg(self):
        if self.at("["):
            self.take()
            out = self.polys("]")
            self.expect("]")
            return out
        return self.poly()

    def matrix(self) -> list:
        self.expect("[")
        rows = [self.poly_row()]
        while self.at(","):
            self.take()
            rows.append(self.poly_row())
        self.expect("]")
        return rows

    def poly_row(self) -> list:
        self.expect("[")
        out = self.polys("]")
        self.expect("]")
        return out

    def polys(self, close: str) -> list:
        out = []
        if self.at(close):
            return out
        out.append(self.poly())
        while self.at(","):
            self.take()
            out.append(self.poly())
        return out

    # polynomial expressions, kept as canonical text

    def poly(self) -> str:
        s = ""
        if self.at("+") or self.at("-"):
            s = "-" if self.take().text == "-" else ""
        s += self.term()
        while self.at("+") or self.at("-"):
            op = self.take().text
            s += f" {op} " + self.term()
        return s

    def term(self) -> str:
        parts = [self.factor()]
        while self.at("*"):
            self.take()
            parts.append(self.factor())
        return "*".join(parts)

    def factor(self) -> str:
        a = self.atom()
        if self.at("^"):
            self.take()
            a += "^" + self.integer()
        return a

    def atom(self) -> str:
        t = self.peek()
        if t.kind in ("int", "id"):
            return self.take().text
        if self.at("("):
            self.take()
            inner = self.poly()
            self.expect(")")
            return f"({inner})"
        self.fail(_POLY_START)


def parse(text: str) -> Script:
    """Parse a script; raises ParseError at the first syntax error."""
    return _Parser(text).script()


def format_script(text: str) -> str:
    return parse(text).format()

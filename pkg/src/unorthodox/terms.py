"""Term language: AST, parser, printer and evaluator for algebraic terms.

Grammar (ASCII):

    eq      := term "=" term
    term    := sum (("->" | "->h") term)?          right-associative
    sum     := prod ("\\/" prod)*
    prod    := atom ("/\\" atom)*
    atom    := base ("'" | "*" | "+")*              postfix, tightest
    base    := "0" | "1" | ident | "@a" | "@b" | "@c" | "(" term ")"

The postfix operators are sugar: t* = t -> 0, t+ = (t'*)', s ->h t =
s -> (s /\\ t).  The macros expand at parse time: @a = 0 -> 1, @b = 0 -> @a,
@c = 0 -> @b.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from .algebra import FiniteAlgebra


class ParseError(Exception):
    def __init__(self, message, position, expected=None):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.expected = tuple(expected or ())


class UnboundVariable(Exception):
    pass


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Const(Term):
    value: int  # 0 or 1


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Imp(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Star(Term):
    arg: Term


@dataclass(frozen=True)
class Plus(Term):
    arg: Term


@dataclass(frozen=True)
class ImpH(Term):
    left: Term
    right: Term


ZERO = Const(0)
ONE = Const(1)

# named closed terms a := 0->1, b := 0->a, c := 0->b
MACRO_A = Imp(ZERO, ONE)
MACRO_B = Imp(ZERO, MACRO_A)
MACRO_C = Imp(ZERO, MACRO_B)


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term

    def free_vars(self) -> frozenset:
        return free_vars(self.lhs) | free_vars(self.rhs)

    @property
    def closed(self) -> bool:
        return not self.free_vars()

    def __str__(self):
        return f"{term_to_text(self.lhs)} = {term_to_text(self.rhs)}"


# --- structural walks (iterative: no depth limit on evaluation) ------------

def _children(t: Term):
    if isinstance(t, (Join, Meet, Imp, ImpH)):
        return (t.left, t.right)
    if isinstance(t, (Neg, Star, Plus)):
        return (t.arg,)
    return ()


def free_vars(t: Term) -> frozenset:
    out = set()
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Var):
            out.add(s.name)
        else:
            stack.extend(_children(s))
    return frozenset(out)


def desugar(t: Term) -> Term:
    """Eliminate Star, Plus and ImpH nodes.  Idempotent."""
    # post-order rebuild with an explicit stack
    done: dict = {}
    stack = [(t, False)]
    while stack:
        node, visited = stack.pop()
        if id(node) in done:
            continue
        if not visited:
            stack.append((node, True))
            stack.extend((c, False) for c in _children(node))
            continue
        kids = [done[id(c)] for c in _children(node)]
        if isinstance(node, Star):
            new = Imp(kids[0], ZERO)
        elif isinstance(node, Plus):
            new = Neg(Imp(Neg(kids[0]), ZERO))
        elif isinstance(node, ImpH):
            new = Imp(kids[0], Meet(kids[0], kids[1]))
        elif isinstance(node, Join):
            new = Join(*kids)
        elif isinstance(node, Meet):
            new = Meet(*kids)
        elif isinstance(node, Imp):
            new = Imp(*kids)
        elif isinstance(node, Neg):
            new = Neg(*kids)
        else:
            new = node
        done[id(node)] = new
    return done[id(t)]


def substitute(t: Term, sigma: dict) -> Term:
    """Simultaneous substitution; variables outside sigma are unchanged."""
    done: dict = {}
    stack = [(t, False)]
    while stack:
        node, visited = stack.pop()
        if id(node) in done:
            continue
        if not visited:
            stack.append((node, True))
            stack.extend((c, False) for c in _children(node))
            continue
        kids = [done[id(c)] for c in _children(node)]
        if isinstance(node, Var):
            new = sigma.get(node.name, node)
        elif kids:
            new = type(node)(*kids)
        else:
            new = node
        done[id(node)] = new
    return done[id(t)]


def eval_term(alg: FiniteAlgebra, t: Term, valuation: Optional[dict] = None) -> int:
    """Interpret t in alg under the valuation (variable name -> element index)."""
    v = valuation or {}
    # iterative post-order evaluation; safe for very deep terms
    values: dict = {}
    stack = [(t, False)]
    while stack:
        node, visited = stack.pop()
        if id(node) in values:
            continue
        if not visited:
            stack.append((node, True))
            stack.extend((c, False) for c in _children(node))
            continue
        if isinstance(node, Var):
            if node.name not in v:
                raise UnboundVariable(node.name)
            r = v[node.name]
        elif isinstance(node, Const):
            r = alg.zero if node.value == 0 else alg.one
        else:
            kids = [values[id(c)] for c in _children(node)]
            if isinstance(node, Join):
                r = alg.join[kids[0]][kids[1]]
            elif isinstance(node, Meet):
                r = alg.meet[kids[0]][kids[1]]
            elif isinstance(node, Imp):
                r = alg.imp[kids[0]][kids[1]]
            elif isinstance(node, ImpH):
                r = alg.imp[kids[0]][alg.meet[kids[0]][kids[1]]]
            elif isinstance(node, Neg):
                r = alg.neg[kids[0]]
            elif isinstance(node, Star):
                r = alg.imp[kids[0]][alg.zero]
            elif isinstance(node, Plus):
                r = alg.neg[alg.imp[alg.neg[kids[0]]][alg.zero]]
            else:
                raise TypeError(f"unknown term node {node!r}")
        values[id(node)] = r
    return values[id(t)]


# --- parser ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow_h>->h)|(?P<arrow>->)|(?P<jn>\\/)|(?P<mt>/\\)"
    r"|(?P<quote>')|(?P<star>\*)|(?P<plus>\+)"
    r"|(?P<lp>\()|(?P<rp>\))|(?P<eq>=)"
    r"|(?P<macro>@[a-z]+)|(?P<const>[01])|(?P<ident>[A-Za-z_][A-Za-z_0-9]*))"
)

_MACROS = {"@a": MACRO_A, "@b": MACRO_B, "@c": MACRO_C}


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = pos + (len(text[pos:]) - len(stripped))
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'}",
                             tok[2], expected=(kind,))
        return tok

    def term(self) -> Term:
        left = self.sum()
        kind, _, _ = self.peek()
        if kind == "arrow":
            self.next()
            return Imp(left, self.term())
        if kind == "arrow_h":
            self.next()
            return ImpH(left, self.term())
        return left

    def sum(self) -> Term:
        t = self.prod()
        while self.peek()[0] == "jn":
            self.next()
            t = Join(t, self.prod())
        return t

    def prod(self) -> Term:
        t = self.postfix()
        while self.peek()[0] == "mt":
            self.next()
            t = Meet(t, self.postfix())
        return t

    def postfix(self) -> Term:
        t = self.base()
        while True:
            kind = self.peek()[0]
            if kind == "quote":
                self.next()
                t = Neg(t)
            elif kind == "star":
                self.next()
                t = Star(t)
            elif kind == "plus":
                self.next()
                t = Plus(t)
            else:
                return t

    def base(self) -> Term:
        kind, text, pos = self.next()
        if kind == "const":
            return ZERO if text == "0" else ONE
        if kind == "ident":
            return Var(text)
        if kind == "macro":
            if text not in _MACROS:
                raise ParseError(f"unknown macro {text}", pos,
                                 expected=tuple(_MACROS))
            return _MACROS[text]
        if kind == "lp":
            t = self.term()
            self.expect("rp")
            return t
        raise ParseError(f"expected a term, found {text or 'end of input'}", pos,
                         expected=("const", "ident", "macro", "("))


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.expect("end")
    return t


def parse_equation(text: str) -> Equation:
    p = _Parser(text)
    lhs = p.term()
    p.expect("eq")
    rhs = p.term()
    p.expect("end")
    return Equation(lhs, rhs)


# --- printer ---------------------------------------------------------------
# Precedence levels: 0 term (->), 1 sum, 2 prod, 3 postfix/base.

def _level(t: Term) -> int:
    if isinstance(t, (Imp, ImpH)):
        return 0
    if isinstance(t, Join):
        return 1
    if isinstance(t, Meet):
        return 2
    return 3


def term_to_text(t: Term) -> str:
    def render(node, minlevel):
        lvl = _level(node)
        if isinstance(node, Var):
            s = node.name
        elif isinstance(node, Const):
            s = str(node.value)
        elif isinstance(node, Imp):
            s = f"{render(node.left, 1)} -> {render(node.right, 0)}"
        elif isinstance(node, ImpH):
            s = f"{render(node.left, 1)} ->h {render(node.right, 0)}"
        elif isinstance(node, Join):
            s = f"{render(node.left, 1)} \\/ {render(node.right, 2)}"
        elif isinstance(node, Meet):
            s = f"{render(node.left, 2)} /\\ {render(node.right, 3)}"
        elif isinstance(node, Neg):
            s = f"{render(node.arg, 3)}'"
        elif isinstance(node, Star):
            s = f"{render(node.arg, 3)}*"
        elif isinstance(node, Plus):
            s = f"{render(node.arg, 3)}+"
        else:
            raise TypeError(f"unknown term node {node!r}")
        if lvl < minlevel:
            return f"({s})"
        return s

    return render(t, 0)

"""Propositional side: formulas, the 18 axiom schemas, rules SMP and SCP,
Hilbert-style proof checking, matrix semantics over the five algebras, the
tau/rho translations, and the 30 axiomatic-extension bases.

Formula grammar (ASCII):

    formula := iff
    iff     := impl ("<->h" impl)?
    impl    := disj (("->" | "->h") impl)?      right-associative
    disj    := conj ("\\/" conj)*
    conj    := unary ("/\\" unary)*
    unary   := ("~" | "!")* base
    base    := "bot" | "top" | ident | "@alpha" | "@beta" | "@gamma"
             | "(" formula ")"

~ is the De Morgan negation; ! is the sugar !a = a -> bot.  The macros are
the closed formulas @alpha = bot -> top, @beta = bot -> @alpha,
@gamma = bot -> @beta.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import terms
from .algebra import BUILTIN_NAMES, FiniteAlgebra, builtin
from .identities import _load_data, holds
from .terms import Equation, ParseError


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class PVar(Formula):
    name: str


@dataclass(frozen=True)
class _Bot(Formula):
    pass


@dataclass(frozen=True)
class _Top(Formula):
    pass


Bot = _Bot()
Top = _Top()


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Dneg(Formula):
    """The De Morgan negation ~."""
    arg: Formula


# sugar
@dataclass(frozen=True)
class ImpH(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class IffH(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Neg(Formula):
    """!a = a -> bot."""
    arg: Formula


ALPHA = Imp(Bot, Top)
BETA = Imp(Bot, ALPHA)
GAMMA = Imp(Bot, BETA)


def _children(f):
    if isinstance(f, (Or, And, Imp, ImpH, IffH)):
        return (f.left, f.right)
    if isinstance(f, (Dneg, Neg)):
        return (f.arg,)
    return ()


def desugar(f: Formula) -> Formula:
    """Expand ImpH, IffH and Neg.  Idempotent."""
    if isinstance(f, ImpH):
        a, b = desugar(f.left), desugar(f.right)
        return Imp(a, And(a, b))
    if isinstance(f, IffH):
        a, b = desugar(f.left), desugar(f.right)
        return And(Imp(a, And(a, b)), Imp(b, And(b, a)))
    if isinstance(f, Neg):
        return Imp(desugar(f.arg), Bot)
    if isinstance(f, (Or, And, Imp)):
        return type(f)(desugar(f.left), desugar(f.right))
    if isinstance(f, Dneg):
        return Dneg(desugar(f.arg))
    return f


def pvars(f: Formula) -> frozenset:
    out = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, PVar):
            out.add(g.name)
        else:
            stack.extend(_children(g))
    return frozenset(out)


def substitute(f: Formula, sigma: dict) -> Formula:
    if isinstance(f, PVar):
        return sigma.get(f.name, f)
    kids = _children(f)
    if not kids:
        return f
    return type(f)(*(substitute(k, sigma) for k in kids))


# --- parser ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<iff_h>\<->h)|(?P<arrow_h>->h)|(?P<arrow>->)"
    r"|(?P<disj>\\/)|(?P<conj>/\\)"
    r"|(?P<dneg>~)|(?P<neg>!)"
    r"|(?P<lp>\()|(?P<rp>\))"
    r"|(?P<macro>@[a-z]+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*))"
)

_MACROS = {"@alpha": ALPHA, "@beta": BETA, "@gamma": GAMMA}
_KEYWORDS = {"bot": Bot, "top": Top}


def _tokenize(text):
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
    def __init__(self, text):
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

    def formula(self):
        left = self.impl()
        if self.peek()[0] == "iff_h":
            self.next()
            return IffH(left, self.impl())
        return left

    def impl(self):
        left = self.disj()
        kind = self.peek()[0]
        if kind == "arrow":
            self.next()
            return Imp(left, self.impl())
        if kind == "arrow_h":
            self.next()
            return ImpH(left, self.impl())
        return left

    def disj(self):
        f = self.conj()
        while self.peek()[0] == "disj":
            self.next()
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.unary()
        while self.peek()[0] == "conj":
            self.next()
            f = And(f, self.unary())
        return f

    def unary(self):
        kind, _, _ = self.peek()
        if kind == "dneg":
            self.next()
            return Dneg(self.unary())
        if kind == "neg":
            self.next()
            return Neg(self.unary())
        return self.base()

    def base(self):
        kind, text, pos = self.next()
        if kind == "ident":
            if text in _KEYWORDS:
                return _KEYWORDS[text]
            return PVar(text)
        if kind == "macro":
            if text not in _MACROS:
                raise ParseError(f"unknown macro {text}", pos,
                                 expected=tuple(_MACROS))
            return _MACROS[text]
        if kind == "lp":
            f = self.formula()
            self.expect("rp")
            return f
        raise ParseError(f"expected a formula, found {text or 'end of input'}",
                         pos, expected=("bot", "top", "ident", "macro", "("))


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.expect("end")
    return f


# --- printer ---------------------------------------------------------------
# Levels: 0 iff, 1 impl, 2 disj, 3 conj, 4 unary/base.

def _level(f):
    if isinstance(f, IffH):
        return 0
    if isinstance(f, (Imp, ImpH)):
        return 1
    if isinstance(f, Or):
        return 2
    if isinstance(f, And):
        return 3
    return 4


def formula_to_text(f: Formula) -> str:
    def render(node, minlevel):
        if isinstance(node, PVar):
            s = node.name
        elif node is Bot or isinstance(node, _Bot):
            s = "bot"
        elif node is Top or isinstance(node, _Top):
            s = "top"
        elif isinstance(node, IffH):
            s = f"{render(node.left, 1)} <->h {render(node.right, 1)}"
        elif isinstance(node, Imp):
            s = f"{render(node.left, 2)} -> {render(node.right, 1)}"
        elif isinstance(node, ImpH):
            s = f"{render(node.left, 2)} ->h {render(node.right, 1)}"
        elif isinstance(node, Or):
            s = f"{render(node.left, 2)} \\/ {render(node.right, 3)}"
        elif isinstance(node, And):
            s = f"{render(node.left, 3)} /\\ {render(node.right, 4)}"
        elif isinstance(node, Dneg):
            s = f"~{render(node.arg, 4)}"
        elif isinstance(node, Neg):
            s = f"!{render(node.arg, 4)}"
        else:
            raise TypeError(f"unknown formula node {node!r}")
        if _level(node) < minlevel:
            return f"({s})"
        return s

    return render(f, 0)


# --- axiom schemas ---------------------------------------------------------
# Metavariables are spelled alpha, beta, gamma; they match arbitrary formulas.

AXIOM_SCHEMAS = {
    1: "alpha ->h (alpha \\/ beta)",
    2: "beta ->h (alpha \\/ beta)",
    3: "(alpha ->h gamma) ->h ((beta ->h gamma) ->h ((alpha \\/ beta) ->h gamma))",
    4: "(alpha /\\ beta) ->h alpha",
    5: "(gamma ->h alpha) ->h ((gamma ->h beta) ->h (gamma ->h (alpha /\\ beta)))",
    6: "top",
    7: "bot ->h alpha",
    8: "((alpha /\\ beta) ->h gamma) ->h (alpha ->h (beta ->h gamma))",
    9: "(alpha ->h (beta ->h gamma)) ->h ((alpha /\\ beta) ->h gamma)",
    10: "(alpha ->h beta) ->h ((beta ->h alpha) ->h ((alpha -> gamma) ->h (beta -> gamma)))",
    11: "(alpha ->h beta) ->h ((beta ->h alpha) ->h ((gamma -> beta) ->h (gamma -> alpha)))",
    12: "top <->h ~bot",
    13: "~(alpha /\\ beta) <->h (~alpha \\/ ~beta)",
    14: "~(alpha \\/ beta) <->h (~alpha /\\ ~beta)",
    15: "~~alpha <->h alpha",
    16: "~(bot -> top) <->h (bot -> top)",
    17: "(alpha /\\ ~!~alpha) \\/ (beta \\/ !beta) <->h (beta \\/ !beta)",
    18: "!~(alpha /\\ !~alpha) <->h (alpha /\\ !~alpha)",
}

AXIOM_NAMES = {16: "Unorthodoxy", 17: "Regularity", 18: "Level 1"}

METAVARS = ("alpha", "beta", "gamma")

_schema_cache = None


def axiom_schemas() -> dict:
    """Parsed, desugared schema formulas keyed by 1..18."""
    global _schema_cache
    if _schema_cache is None:
        _schema_cache = {i: desugar(parse_formula(s))
                         for i, s in AXIOM_SCHEMAS.items()}
    return _schema_cache


def _match(pattern, target, binding):
    """Match target against pattern; metavariable PVars bind arbitrary
    subformulas.  Both sides must be desugared."""
    if isinstance(pattern, PVar) and pattern.name in METAVARS:
        bound = binding.get(pattern.name)
        if bound is None:
            binding[pattern.name] = target
            return True
        return bound == target
    if type(pattern) is not type(target):
        return False
    pk, tk = _children(pattern), _children(target)
    if not pk:
        return pattern == target
    return all(_match(p, t, binding) for p, t in zip(pk, tk))


def axiom_instance(f: Formula, schema_id: Optional[int] = None):
    """(schema id, substitution) for the first schema matching f, or None.

    Matching happens on desugared ASTs, so instances may be written with or
    without the ->h / <->h / ! sugar.
    """
    target = desugar(f)
    ids = [schema_id] if schema_id else sorted(AXIOM_SCHEMAS)
    for i in ids:
        binding: dict = {}
        if _match(axiom_schemas()[i], target, binding):
            return i, binding
    return None


# --- proofs ----------------------------------------------------------------

@dataclass(frozen=True)
class ProofStep:
    formula: Formula
    just: tuple  # ("assume",) | ("axiom", id or None, subst or None)
                 # | ("smp", i, j) | ("scp", i)   -- 1-based step refs


@dataclass(frozen=True)
class Proof:
    steps: tuple

    @property
    def assumptions(self):
        return tuple(s.formula for s in self.steps if s.just[0] == "assume")

    @property
    def conclusion(self):
        return self.steps[-1].formula if self.steps else None


@dataclass(frozen=True)
class ProofCheck:
    ok: bool
    first_bad_step: Optional[int] = None  # 1-based
    reason: str = ""


class MalformedProof(Exception):
    pass


def _imp_h_parts(f):
    """(phi, gamma) if desugared f has the shape phi -> (phi /\\ gamma)."""
    if isinstance(f, Imp) and isinstance(f.right, And) and f.right.left == f.left:
        return f.left, f.right.right
    return None


def check_proof(proof: Proof) -> ProofCheck:
    done = []  # desugared formulas of verified steps
    for idx, step in enumerate(proof.steps, start=1):
        cur = desugar(step.formula)
        kind = step.just[0]
        if kind == "assume":
            ok, why = True, ""
        elif kind == "axiom":
            _, schema_id, subst = step.just
            if subst is not None:
                if schema_id is None:
                    ok, why = False, "substitution given without a schema id"
                else:
                    inst = substitute(
                        axiom_schemas()[schema_id],
                        {k: desugar(v) for k, v in subst.items()})
                    ok = inst == cur
                    why = "" if ok else (
                        f"schema {schema_id} under the given substitution "
                        f"does not yield this formula")
            else:
                found = axiom_instance(step.formula, schema_id)
                ok = found is not None
                why = "" if ok else "not an instance of any axiom schema" if \
                    schema_id is None else f"not an instance of schema {schema_id}"
        elif kind == "smp":
            i, j = step.just[1], step.just[2]
            if not (1 <= i < idx and 1 <= j < idx):
                ok, why = False, "SMP references must point at earlier steps"
            else:
                expected = Imp(done[i - 1], And(done[i - 1], cur))
                ok = done[j - 1] == expected
                why = "" if ok else (
                    f"step {j} is not (step {i}) ->h (this formula)")
        elif kind == "scp":
            i = step.just[1]
            if not 1 <= i < idx:
                ok, why = False, "SCP reference must point at an earlier step"
            else:
                parts = _imp_h_parts(done[i - 1])
                if parts is None:
                    ok, why = False, f"step {i} is not of the form phi ->h gamma"
                else:
                    phi, gamma = parts
                    want = Imp(Dneg(gamma), And(Dneg(gamma), Dneg(phi)))
                    ok = cur == want
                    why = "" if ok else "conclusion is not ~gamma ->h ~phi"
        else:
            ok, why = False, f"unknown justification {kind!r}"
        if not ok:
            return ProofCheck(False, first_bad_step=idx, reason=why)
        done.append(cur)
    return ProofCheck(True)


def proof_from_json(doc) -> Proof:
    """Steps as a JSON list: {"formula": str, "just": "assume" |
    {"axiom": int, "subst": {metavar: str}} | {"smp": [i, j]} | {"scp": i}}."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if isinstance(doc, dict):
        doc = doc.get("steps", doc)
    if not isinstance(doc, list):
        raise MalformedProof("proof must be a JSON list of steps")
    steps = []
    for k, raw in enumerate(doc, start=1):
        try:
            f = parse_formula(raw["formula"])
            j = raw["just"]
            if j == "assume":
                just = ("assume",)
            elif isinstance(j, dict) and "axiom" in j:
                subst = j.get("subst")
                if subst is not None:
                    subst = {k2: parse_formula(v) for k2, v in subst.items()}
                just = ("axiom", j["axiom"], subst)
            elif isinstance(j, dict) and "smp" in j:
                just = ("smp", int(j["smp"][0]), int(j["smp"][1]))
            elif isinstance(j, dict) and "scp" in j:
                just = ("scp", int(j["scp"]))
            else:
                raise MalformedProof(f"step {k}: bad justification {j!r}")
        except MalformedProof:
            raise
        except (KeyError, TypeError, IndexError, ValueError, ParseError) as exc:
            raise MalformedProof(f"step {k}: {exc}") from exc
        steps.append(ProofStep(f, just))
    return Proof(tuple(steps))


# --- matrix semantics ------------------------------------------------------

def translate(f: Formula) -> terms.Term:
    """Formula -> term under the signature map (~ becomes ', bot/top 0/1)."""
    f = desugar(f)

    def go(g):
        if isinstance(g, PVar):
            return terms.Var(g.name)
        if isinstance(g, _Bot):
            return terms.ZERO
        if isinstance(g, _Top):
            return terms.ONE
        if isinstance(g, Or):
            return terms.Join(go(g.left), go(g.right))
        if isinstance(g, And):
            return terms.Meet(go(g.left), go(g.right))
        if isinstance(g, Imp):
            return terms.Imp(go(g.left), go(g.right))
        if isinstance(g, Dneg):
            return terms.Neg(go(g.arg))
        raise TypeError(f"unknown formula node {g!r}")

    return go(f)


def untranslate(t: terms.Term) -> Formula:
    """Term -> formula, inverse signature map; term sugar desugars first."""
    t = terms.desugar(t)

    def go(s):
        if isinstance(s, terms.Var):
            return PVar(s.name)
        if isinstance(s, terms.Const):
            return Bot if s.value == 0 else Top
        if isinstance(s, terms.Join):
            return Or(go(s.left), go(s.right))
        if isinstance(s, terms.Meet):
            return And(go(s.left), go(s.right))
        if isinstance(s, terms.Imp):
            return Imp(go(s.left), go(s.right))
        if isinstance(s, terms.Neg):
            return Dneg(go(s.arg))
        raise TypeError(f"unknown term node {s!r}")

    return go(t)


@dataclass(frozen=True)
class Matrix:
    algebra: FiniteAlgebra

    @property
    def designated(self):
        return frozenset({self.algebra.one})


def matrices() -> list:
    return [Matrix(builtin(n)) for n in BUILTIN_NAMES]


def eval_formula(alg: FiniteAlgebra, f: Formula, valuation: dict) -> int:
    return terms.eval_term(alg, translate(f), valuation)


@dataclass(frozen=True)
class Validity:
    valid: bool
    counter_valuation: Optional[dict] = None


def is_valid(f: Formula, m: Matrix) -> Validity:
    alg = m.algebra
    t = translate(f)
    names = sorted(pvars(f))
    for tup in product(alg.carrier, repeat=len(names)):
        v = dict(zip(names, tup))
        if terms.eval_term(alg, t, v) != alg.one:
            return Validity(False, v)
    return Validity(True)


def is_theorem(f: Formula) -> bool:
    return all(is_valid(f, m).valid for m in matrices())


def consequence(gamma, f: Formula) -> bool:
    """Local matrix consequence over the five builtin matrices.

    This decides the semantic relation determined by the matrices; for empty
    gamma it is exactly theoremhood.  Identification with the proof-theoretic
    relation for nonempty finite gamma is a quasivariety-level question left
    open here.
    """
    gamma = list(gamma)
    names = sorted(set().union(pvars(f), *(pvars(g) for g in gamma)))
    for m in matrices():
        alg = m.algebra
        ts = [translate(g) for g in gamma]
        tf = translate(f)
        for tup in product(alg.carrier, repeat=len(names)):
            v = dict(zip(names, tup))
            if all(terms.eval_term(alg, t, v) == alg.one for t in ts):
                if terms.eval_term(alg, tf, v) != alg.one:
                    return False
    return True


# --- algebraizability transformers ----------------------------------------

def tau(f: Formula) -> Equation:
    return Equation(translate(f), terms.ONE)


def rho(eq: Equation) -> tuple:
    s, t = untranslate(eq.lhs), untranslate(eq.rhs)
    return (ImpH(s, t), ImpH(t, s))


# --- extensions ------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionInfo:
    id: frozenset
    base_formulas: tuple
    note: str = ""


_ext_cache = None


def extensions() -> list:
    """All 32 axiomatic extensions: the 30 proper nontrivial bases plus the
    whole logic (empty base) and the inconsistent extension (base {bot})."""
    global _ext_cache
    if _ext_cache is None:
        out = [ExtensionInfo(frozenset({1, 2, 3, 4, 5}), (),
                             note="the logic itself: empty relative base"),
               ExtensionInfo(frozenset(), (Bot,),
                             note="inconsistent extension")]
        for key, row in _load_data("extension_bases.json").items():
            out.append(ExtensionInfo(
                id=frozenset(int(d) for d in key),
                base_formulas=tuple(parse_formula(s) for s in row["formulas"]),
                note=row.get("note", ""),
            ))
        _ext_cache = sorted(out, key=lambda e: (len(e.id), sorted(e.id)))
    return list(_ext_cache)


def decide_in_extension(f: Formula, s) -> bool:
    """Theoremhood in the extension generated by {Ai : i in s}: validity in
    every matrix of the set.  Empty set: the inconsistent extension, where
    every formula is a theorem."""
    return all(is_valid(f, Matrix(builtin(f"A{i}"))).valid for i in frozenset(s))


@dataclass
class ExtensionVerification:
    id: frozenset
    valid_inside: bool       # every base formula valid in every generator matrix
    invalid_outside: bool    # jointly, some formula fails in every other matrix
    failures: list

    @property
    def ok(self):
        return self.valid_inside and self.invalid_outside


def verify_extension_bases() -> list:
    """Criterion mirror of the subvariety base check, on the logic side."""
    out = []
    for ext in extensions():
        if not ext.base_formulas and ext.id == frozenset({1, 2, 3, 4, 5}):
            continue  # empty relative base: nothing to verify
        if ext.id == frozenset():
            continue  # inconsistent extension: no generator matrices
        failures = []
        for i in sorted(ext.id):
            m = Matrix(builtin(f"A{i}"))
            for f in ext.base_formulas:
                if not is_valid(f, m).valid:
                    failures.append((i, formula_to_text(f), "should be valid"))
        for j in range(1, 6):
            if j in ext.id:
                continue
            m = Matrix(builtin(f"A{j}"))
            if all(is_valid(f, m).valid for f in ext.base_formulas):
                failures.append((j, None, "all base formulas valid outside"))
        out.append(ExtensionVerification(
            id=ext.id,
            valid_inside=not any(x[2] == "should be valid" for x in failures),
            invalid_outside=not any(
                x[2] == "all base formulas valid outside" for x in failures),
            failures=failures))
    return out


# --- soundness -------------------------------------------------------------

@dataclass
class SoundnessReport:
    schema_results: dict     # schema id -> {algebra name: bool}
    smp_sound: dict          # algebra name -> bool
    scp_sound: dict          # algebra name -> bool

    @property
    def ok(self):
        return (all(all(v.values()) for v in self.schema_results.values())
                and all(self.smp_sound.values()) and all(self.scp_sound.values()))


def soundness_report() -> SoundnessReport:
    schema_results = {}
    for i, text in AXIOM_SCHEMAS.items():
        f = parse_formula(text)  # metavariables read as propositional variables
        schema_results[i] = {
            m.algebra.name: is_valid(f, m).valid for m in matrices()}
    smp_sound = {}
    scp_sound = {}
    for m in matrices():
        alg = m.algebra
        one = alg.one
        smp_sound[alg.name] = all(
            not (a == one and alg.imp_h(a, b) == one) or b == one
            for a in alg.carrier for b in alg.carrier)
        scp_sound[alg.name] = all(
            not (alg.imp_h(a, b) == one)
            or alg.imp_h(alg.neg[b], alg.neg[a]) == one
            for a in alg.carrier for b in alg.carrier)
    return SoundnessReport(schema_results, smp_sound, scp_sound)


# --- algebraizability cross-check ------------------------------------------

@dataclass
class AlgCheckResult:
    alg1_ok: bool
    alg1_details: list  # (formula text, is_theorem, tau profile == full)
    alg4_ok: bool
    alg4_details: list  # (equation text, algebra, sets agree)

    @property
    def ok(self):
        return self.alg1_ok and self.alg4_ok


def cross_check_algebraizability(formulas, equations) -> AlgCheckResult:
    from .identities import profile

    full = frozenset({1, 2, 3, 4, 5})
    alg1_details = []
    for f in formulas:
        thm = is_theorem(f)
        via_tau = profile([tau(f)]) == full
        alg1_details.append((formula_to_text(f), thm, via_tau))
    alg1_ok = all(a == b for _, a, b in alg1_details)

    alg4_details = []
    for eq in equations:
        f1, f2 = rho(eq)
        t1, t2 = translate(f1), translate(f2)
        names = sorted(eq.free_vars())
        for name in BUILTIN_NAMES:
            alg = builtin(name)
            agree = True
            for tup in product(alg.carrier, repeat=len(names)):
                v = dict(zip(names, tup))
                direct = (terms.eval_term(alg, eq.lhs, v)
                          == terms.eval_term(alg, eq.rhs, v))
                via_rho = (terms.eval_term(alg, t1, v) == alg.one
                           and terms.eval_term(alg, t2, v) == alg.one)
                if direct != via_rho:
                    agree = False
                    break
            alg4_details.append((str(eq), name, agree))
    alg4_ok = all(a for _, _, a in alg4_details)
    return AlgCheckResult(alg1_ok, alg1_details, alg4_ok, alg4_details)

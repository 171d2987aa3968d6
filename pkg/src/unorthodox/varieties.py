"""The 32-element Boolean lattice of subvarieties, equational bases for the 30
nontrivial proper subvarieties, and membership classification of finite
algebras by decomposition into simple factors.

Subvarieties are identified with subsets of {1..5}: the generator algebras
among A1..A5.  The CLI encoding is a digit string, e.g. "135" for {1,3,5};
the empty set is spelled "0" (the trivial variety).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .algebra import AlgebraError, FiniteAlgebra, builtin, builtins
from .identities import _load_data, profile
from .structure import NotInVariety, decompose, iso
from .terms import Equation, parse_equation

FULL = frozenset({1, 2, 3, 4, 5})


class BadSubvarietyId(AlgebraError):
    pass


def parse_subvariety_id(text: str) -> frozenset:
    """Digit-string form: "135" -> {1,3,5}; "0" or "" -> the trivial variety."""
    text = text.strip()
    if text in ("", "0"):
        return frozenset()
    out = set()
    for ch in text:
        if ch not in "12345":
            raise BadSubvarietyId(f"bad subvariety id {text!r}: digit {ch!r}")
        out.add(int(ch))
    return frozenset(out)


def format_subvariety_id(s) -> str:
    return "".join(str(i) for i in sorted(s)) or "0"


@dataclass(frozen=True)
class VarietyInfo:
    id: frozenset
    base: tuple          # Equations, relative to the whole variety
    height: int          # |generators|
    note: str = ""

    @property
    def key(self) -> str:
        return format_subvariety_id(self.id)


_bases_cache = None


def _bases() -> dict:
    global _bases_cache
    if _bases_cache is None:
        out = {}
        for key, row in _load_data("variety_bases.json").items():
            out[frozenset(int(d) for d in key)] = (
                tuple(parse_equation(e) for e in row["equations"]),
                row.get("note", ""),
                row["id"],
            )
        _bases_cache = out
    return _bases_cache


def base_of(s) -> VarietyInfo:
    s = frozenset(s)
    if s == frozenset():
        return VarietyInfo(s, (parse_equation("x = y"),), 0,
                           note="trivial variety")
    if s == FULL:
        return VarietyInfo(s, (), 5, note="the whole variety: empty relative base")
    eqs, note, _ = _bases()[s]
    return VarietyInfo(s, eqs, len(s), note=note)


def lattice() -> list:
    """All 32 subvarieties ordered by (height, id)."""
    out = []
    for k in range(6):
        for combo in combinations(range(1, 6), k):
            out.append(base_of(frozenset(combo)))
    return sorted(out, key=lambda v: (v.height, v.key))


def join(s, t):
    return frozenset(s) | frozenset(t)


def meet(s, t):
    return frozenset(s) & frozenset(t)


def complement(s):
    return FULL - frozenset(s)


def lattice_is_boolean() -> bool:
    """Structural check: 32 elements, distributive, complemented."""
    ids = [v.id for v in lattice()]
    if len(ids) != 32 or len(set(ids)) != 32:
        return False
    for a in ids:
        if join(a, complement(a)) != FULL or meet(a, complement(a)) != frozenset():
            return False
    for a in ids:
        for b in ids:
            for c in ids:
                if meet(a, join(b, c)) != join(meet(a, b), meet(a, c)):
                    return False
    return True


# --- verification of the 30 bases ------------------------------------------

@dataclass(frozen=True)
class BaseVerification:
    id: frozenset
    label: str
    equations: tuple
    computed: frozenset
    exact: bool
    note: str


@dataclass
class BaseReport:
    results: list

    @property
    def errata(self):
        return [r for r in self.results if not r.exact]

    @property
    def ok(self):
        return not self.errata

    def to_json(self):
        return {
            "ok": self.ok,
            "bases": [
                {
                    "id": format_subvariety_id(r.id),
                    "label": r.label,
                    "equations": [str(e) for e in r.equations],
                    "computed": format_subvariety_id(r.computed),
                    "exact": r.exact,
                    "note": r.note,
                }
                for r in self.results
            ],
        }

    def to_text(self):
        lines = []
        for r in self.results:
            status = "exact" if r.exact else (
                f"ERRATUM (computed {format_subvariety_id(r.computed)})")
            lines.append(f"{format_subvariety_id(r.id)} [{r.label}]: {status}")
        lines.append(f"{sum(r.exact for r in self.results)}/{len(self.results)} bases exact")
        return "\n".join(lines)


def verify_bases() -> BaseReport:
    """profile(base) must equal the generator set exactly, for all 30 bases."""
    results = []
    for s in sorted(_bases(), key=lambda s: (len(s), sorted(s))):
        eqs, note, label = _bases()[s]
        computed = profile(list(eqs))
        results.append(BaseVerification(
            id=s, label=label, equations=eqs, computed=computed,
            exact=computed == s, note=note))
    return BaseReport(results)


# --- membership classification ---------------------------------------------

def classify(alg: FiniteAlgebra) -> frozenset:
    """Least subvariety containing alg: indices of the builtins isomorphic to
    its simple factors.  Raises NotInVariety outside the variety."""
    out = set()
    for factor in decompose(alg):
        for i, b in enumerate(builtins(), start=1):
            if iso(factor, b):
                out.add(i)
                break
        else:
            raise AlgebraError(
                f"simple factor of {alg.name} matches no generator")
    return frozenset(out)


def corollary_check(size_bound: int = 100) -> bool:
    """Satisfaction of (0->1)->1 = 1 implies satisfaction of (0->1)* = 0,
    over all products of builtins up to size_bound and all enumerated
    members of size <= 4."""
    from .structure import direct_product, enumerate_runo1

    premise = parse_equation("(0->1)->1 = 1")
    conclusion = parse_equation("(0->1)* = 0")
    from .identities import holds

    pool = list(enumerate_runo1(4))
    names = list(range(1, 6))
    for k in (2, 3):
        for combo in combinations_with_replacement(names, k):
            algs = [builtin(f"A{i}") for i in combo]
            size = 1
            for a in algs:
                size *= a.size
            if size <= size_bound:
                pool.append(direct_product(algs))
    for alg in pool:
        if holds(alg, premise) and not holds(alg, conclusion):
            return False
    return True


# --- DOT output ------------------------------------------------------------

def lattice_dot() -> str:
    """Order diagram (covers only) of the 32-element lattice, DOT format."""
    lines = ["digraph subvarieties {", "  rankdir=BT;"]
    infos = lattice()
    for v in infos:
        lines.append(f'  "{v.key}";')
    for v in infos:
        for w in infos:
            if v.id < w.id and len(w.id) == len(v.id) + 1:
                lines.append(f'  "{v.key}" -> "{w.key}";')
    lines.append("}")
    return "\n".join(lines)

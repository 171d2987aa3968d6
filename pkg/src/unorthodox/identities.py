"""Decide identities and quasi-identities on finite algebras by exhaustive
valuation sweep, and maintain the named identity catalog.

Sweep order is deterministic: variables sorted by name, elements by index,
so the first counterexample found is canonical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from typing import Optional

from .algebra import BUILTIN_NAMES, FiniteAlgebra, builtin
from .terms import Equation, eval_term, parse_equation

ALL_FIVE = frozenset({1, 2, 3, 4, 5})


@dataclass(frozen=True)
class HoldsResult:
    holds: bool
    counterexample: Optional[dict] = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class QuasiIdentity:
    premises: tuple
    conclusion: Equation

    def free_vars(self):
        out = self.conclusion.free_vars()
        for p in self.premises:
            out |= p.free_vars()
        return out


def _valuations(alg, names):
    names = sorted(names)
    for tup in product(alg.carrier, repeat=len(names)):
        yield dict(zip(names, tup))


def holds(alg: FiniteAlgebra, eq: Equation) -> HoldsResult:
    """A |= lhs = rhs, swept over all |A|^#vars valuations."""
    for v in _valuations(alg, eq.free_vars()):
        if eval_term(alg, eq.lhs, v) != eval_term(alg, eq.rhs, v):
            return HoldsResult(False, v)
    return HoldsResult(True)


def holds_quasi(alg: FiniteAlgebra, q: QuasiIdentity) -> HoldsResult:
    """Every valuation satisfying all premises must satisfy the conclusion."""
    for v in _valuations(alg, q.free_vars()):
        if any(eval_term(alg, p.lhs, v) != eval_term(alg, p.rhs, v)
               for p in q.premises):
            continue
        if eval_term(alg, q.conclusion.lhs, v) != eval_term(alg, q.conclusion.rhs, v):
            return HoldsResult(False, v)
    return HoldsResult(True)


def _as_equations(eqs):
    if isinstance(eqs, (Equation, str)):
        eqs = [eqs]
    return [parse_equation(e) if isinstance(e, str) else e for e in eqs]


def profile(eqs) -> frozenset:
    """Indices i in {1..5} such that all given equations hold in Ai."""
    eqs = _as_equations(eqs)
    out = set()
    for i, name in enumerate(BUILTIN_NAMES, start=1):
        alg = builtin(name)
        if all(holds(alg, eq) for eq in eqs):
            out.add(i)
    return frozenset(out)


# --- catalog ---------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    id: str
    equations: tuple
    claimed_profile: frozenset
    note: str = ""

    def texts(self):
        return [str(eq) for eq in self.equations]


@dataclass(frozen=True)
class EntryVerification:
    entry: CatalogEntry
    computed_profile: frozenset
    ok: bool               # claimed holds on every claimed algebra
    exact: bool            # computed == claimed


@dataclass
class CatalogReport:
    results: list = field(default_factory=list)

    @property
    def errata(self):
        return [r for r in self.results if not r.ok]

    @property
    def ok(self):
        return not self.errata

    def to_json(self):
        return {
            "ok": self.ok,
            "entries": [
                {
                    "id": r.entry.id,
                    "equations": r.entry.texts(),
                    "claimed": sorted(r.entry.claimed_profile),
                    "computed": sorted(r.computed_profile),
                    "ok": r.ok,
                    "exact": r.exact,
                    "note": r.entry.note,
                }
                for r in self.results
            ],
        }

    def to_text(self):
        lines = []
        for r in self.results:
            status = "ok" if r.ok else "ERRATUM"
            extra = "" if r.exact else f" (computed {sorted(r.computed_profile)})"
            lines.append(f"{r.entry.id}: {status}{extra}")
        return "\n".join(lines)


def _load_data(name):
    with resources.files("unorthodox.data").joinpath(name).open() as fh:
        return json.load(fh)


_catalog_cache = None


def catalog() -> list:
    """All named identity-catalog entries, plus the subvariety base equations
    (one entry per base equation, claimed to hold on the base's generators)."""
    global _catalog_cache
    if _catalog_cache is None:
        entries = []
        for row in _load_data("catalog.json"):
            entries.append(CatalogEntry(
                id=row["id"],
                equations=tuple(parse_equation(e) for e in row["equations"]),
                claimed_profile=frozenset(row["claimed"]),
                note=row.get("note", ""),
            ))
        for key, row in _load_data("variety_bases.json").items():
            claimed = frozenset(int(d) for d in key)
            for label, eq in zip("abcdef", row["equations"]):
                entries.append(CatalogEntry(
                    id=f"{row['id']}-{label}",
                    equations=(parse_equation(eq),),
                    claimed_profile=claimed,
                    note=row.get("note", ""),
                ))
        _catalog_cache = entries
    return list(_catalog_cache)


def verify_catalog() -> CatalogReport:
    """Evaluate every catalog entry on all five algebras.

    The pass condition is that the entry holds on every algebra it is claimed
    for (a superset profile is not an erratum: the sources assert satisfaction,
    not exactness).  Mismatches are reported, never silently corrected.
    """
    report = CatalogReport()
    for entry in catalog():
        computed = profile(list(entry.equations))
        report.results.append(EntryVerification(
            entry=entry,
            computed_profile=computed,
            ok=entry.claimed_profile <= computed,
            exact=computed == entry.claimed_profile,
        ))
    return report

"""Finite algebras of type <join, meet, imp, neg, 0, 1> as validated operation tables.

Elements are dense indices 0..size-1; display labels are metadata only.  The
induced lattice order is x <= y iff meet(x, y) == x, computed once at validation
time and cached on the instance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Optional


class AlgebraError(Exception):
    pass


class ShapeError(AlgebraError):
    """Ragged or missing table entries, or out-of-range indices."""


class NotALattice(AlgebraError):
    """A lattice law fails; carries a witnessing tuple."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BoundsError(AlgebraError):
    """zero is not the least element or one is not the greatest."""


class UnknownName(AlgebraError):
    pass


BUILTIN_NAMES = ("A1", "A2", "A3", "A4", "A5")


@dataclass(frozen=True)
class AxiomCheck:
    holds: bool
    counterexample: Optional[dict] = None


# Axiom names in report order.  SH1 stands for the lattice laws plus bounds.
AXIOM_NAMES = (
    "SH1", "SH2", "SH3", "SH4",
    "E2", "E3", "E4",
    "DM", "UNORTHODOX", "REGULAR", "LEVEL1",
)


@dataclass(frozen=True)
class FiniteAlgebra:
    """Immutable finite algebra; tables are row-major: table[x][y] = op(x, y)."""

    name: str
    labels: tuple
    join: tuple
    meet: tuple
    imp: tuple
    neg: tuple
    zero: int
    one: int
    # leq[x][y] cached by validate()
    _leq: tuple = field(default=None, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def carrier(self) -> range:
        return range(self.size)

    def leq(self, x: int, y: int) -> bool:
        return self._leq[x][y]

    def star(self, x: int) -> int:
        """Pseudocomplement: x -> 0."""
        return self.imp[x][self.zero]

    def plus(self, x: int) -> int:
        """x'*' (negation of the pseudocomplement of the negation)."""
        return self.neg[self.star(self.neg[x])]

    def imp_h(self, x: int, y: int) -> int:
        """The Heyting implication x -> (x /\\ y) derived from imp."""
        return self.imp[x][self.meet[x][y]]

    def label(self, x: int) -> str:
        return self.labels[x]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "labels": list(self.labels),
            "join": [list(row) for row in self.join],
            "meet": [list(row) for row in self.meet],
            "imp": [list(row) for row in self.imp],
            "neg": list(self.neg),
            "zero": self.zero,
            "one": self.one,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _check_binary_table(table, size, opname):
    if len(table) != size:
        raise ShapeError(f"{opname}: expected {size} rows, got {len(table)}")
    for x, row in enumerate(table):
        if len(row) != size:
            raise ShapeError(f"{opname}: row {x} has {len(row)} entries, expected {size}")
        for y, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < size:
                raise ShapeError(f"{opname}[{x}][{y}] = {v!r} is not a carrier index")


def validate(name, labels, join, meet, imp, neg, zero, one) -> FiniteAlgebra:
    """Build a FiniteAlgebra, checking totality, the lattice laws and bounds.

    Raises ShapeError / NotALattice / BoundsError.  The implication and
    negation tables are only checked for totality here; the defining
    identities live in axiom_profile().
    """
    size = len(labels)
    if size < 1:
        raise ShapeError("carrier must be nonempty")
    _check_binary_table(join, size, "join")
    _check_binary_table(meet, size, "meet")
    _check_binary_table(imp, size, "imp")
    if len(neg) != size:
        raise ShapeError(f"neg: expected {size} entries, got {len(neg)}")
    for x, v in enumerate(neg):
        if not isinstance(v, int) or not 0 <= v < size:
            raise ShapeError(f"neg[{x}] = {v!r} is not a carrier index")
    if not (0 <= zero < size and 0 <= one < size):
        raise BoundsError("zero/one outside the carrier")

    for opname, t in (("join", join), ("meet", meet)):
        for x in range(size):
            if t[x][x] != x:
                raise NotALattice(f"{opname} not idempotent at {x}", witness=(x,))
            for y in range(size):
                if t[x][y] != t[y][x]:
                    raise NotALattice(f"{opname} not commutative at ({x},{y})", witness=(x, y))
                for z in range(size):
                    if t[t[x][y]][z] != t[x][t[y][z]]:
                        raise NotALattice(
                            f"{opname} not associative at ({x},{y},{z})", witness=(x, y, z))
    for x in range(size):
        for y in range(size):
            if join[x][meet[x][y]] != x or meet[x][join[x][y]] != x:
                raise NotALattice(f"absorption fails at ({x},{y})", witness=(x, y))

    leq = tuple(tuple(meet[x][y] == x for y in range(size)) for x in range(size))
    for x in range(size):
        if not leq[zero][x]:
            raise BoundsError(f"zero is not below element {x}")
        if not leq[x][one]:
            raise BoundsError(f"element {x} is not below one")

    return FiniteAlgebra(
        name=name,
        labels=tuple(str(l) for l in labels),
        join=tuple(tuple(row) for row in join),
        meet=tuple(tuple(row) for row in meet),
        imp=tuple(tuple(row) for row in imp),
        neg=tuple(neg),
        zero=zero,
        one=one,
        _leq=leq,
    )


def from_json(doc) -> FiniteAlgebra:
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        return validate(
            doc["name"], doc["labels"], doc["join"], doc["meet"],
            doc["imp"], doc["neg"], doc["zero"], doc["one"],
        )
    except KeyError as exc:
        raise ShapeError(f"missing field {exc}") from exc


# ---------------------------------------------------------------------------
# The five built-in unorthodox algebras.
#
# Carrier indices coincide with the element names: index 0 is the bottom,
# index 1 the top (the names are not order-sorted: 1 is the top element).
# A1..A4 are the chain 0 < 2 < 1; A5 is the Boolean lattice with atoms 2, 3.

_CHAIN3_JOIN = ((0, 1, 2), (1, 1, 1), (2, 1, 2))
_CHAIN3_MEET = ((0, 0, 0), (0, 1, 2), (0, 2, 2))

_A5_JOIN = ((0, 1, 2, 3), (1, 1, 1, 1), (2, 1, 2, 1), (3, 1, 1, 3))
_A5_MEET = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 2, 0), (0, 3, 0, 3))

_BUILTIN_TABLES = {
    "A1": (_CHAIN3_JOIN, _CHAIN3_MEET,
           ((1, 2, 1), (0, 1, 2), (0, 1, 1)), (1, 0, 2)),
    "A2": (_CHAIN3_JOIN, _CHAIN3_MEET,
           ((1, 2, 1), (0, 1, 2), (0, 2, 1)), (1, 0, 2)),
    "A3": (_CHAIN3_JOIN, _CHAIN3_MEET,
           ((1, 2, 2), (0, 1, 2), (0, 1, 1)), (1, 0, 2)),
    "A4": (_CHAIN3_JOIN, _CHAIN3_MEET,
           ((1, 2, 2), (0, 1, 2), (0, 2, 1)), (1, 0, 2)),
    "A5": (_A5_JOIN, _A5_MEET,
           ((1, 2, 1, 2), (0, 1, 2, 3), (3, 2, 1, 0), (2, 1, 2, 1)), (1, 0, 2, 3)),
}

_builtin_cache: dict = {}


def builtin(name: str) -> FiniteAlgebra:
    """One of the five generators A1..A5."""
    if name not in _BUILTIN_TABLES:
        raise UnknownName(f"no builtin algebra named {name!r}")
    if name not in _builtin_cache:
        join, meet, imp, neg = _BUILTIN_TABLES[name]
        labels = [str(i) for i in range(len(neg))]
        _builtin_cache[name] = validate(name, labels, join, meet, imp, neg, zero=0, one=1)
    return _builtin_cache[name]


def builtins() -> list:
    return [builtin(n) for n in BUILTIN_NAMES]


def trivial() -> FiniteAlgebra:
    return validate("trivial", ["0"], ((0,),), ((0,),), ((0,),), (0,), 0, 0)


# ---------------------------------------------------------------------------
# Axiom profile

def _sweep(alg, nvars, pred):
    """First tuple violating pred, as a dict, or None.  Lexicographic order."""
    names = "xyz"[:nvars]
    for tup in product(alg.carrier, repeat=nvars):
        if not pred(*tup):
            return dict(zip(names, tup))
    return None


def axiom_profile(alg: FiniteAlgebra) -> dict:
    """Check every defining axiom class by exhaustive sweep.

    Returns an ordered map axiom name -> AxiomCheck.  The REGULAR inequality
    x /\\ x+ <= y \\/ y* is checked as the meet equation
    (x /\\ x+) /\\ (y \\/ y*) == x /\\ x+.
    """
    jn, mt, im, ng = alg.join, alg.meet, alg.imp, alg.neg
    zero, one = alg.zero, alg.one

    def sh1():
        # validate() already enforced these; re-run for a self-contained report
        for x, y in product(alg.carrier, repeat=2):
            if jn[x][y] != jn[y][x] or mt[x][y] != mt[y][x]:
                return {"x": x, "y": y}
            if jn[x][mt[x][y]] != x or mt[x][jn[x][y]] != x:
                return {"x": x, "y": y}
            if not (alg.leq(zero, x) and alg.leq(x, one)):
                return {"x": x}
        return None

    a01 = im[zero][one]
    report = {}
    report["SH1"] = sh1()
    report["SH2"] = _sweep(alg, 2, lambda x, y: mt[x][im[x][y]] == mt[x][y])
    report["SH3"] = _sweep(
        alg, 3, lambda x, y, z: mt[x][im[y][z]] == mt[x][im[mt[x][y]][mt[x][z]]])
    report["SH4"] = _sweep(alg, 1, lambda x: im[x][x] == one)
    report["E2"] = None if ng[zero] == one else {}
    report["E3"] = None if ng[one] == zero else {}
    report["E4"] = _sweep(alg, 2, lambda x, y: ng[mt[x][y]] == jn[ng[x]][ng[y]])
    report["DM"] = _sweep(alg, 1, lambda x: ng[ng[x]] == x)
    report["UNORTHODOX"] = None if ng[a01] == a01 else {}
    report["REGULAR"] = _sweep(
        alg, 2,
        lambda x, y: mt[mt[x][alg.plus(x)]][jn[y][alg.star(y)]] == mt[x][alg.plus(x)])
    report["LEVEL1"] = _sweep(
        alg, 1,
        lambda x: mt[x][alg.star(ng[x])] == alg.star(ng[mt[x][alg.star(ng[x])]]))

    return {name: AxiomCheck(holds=cex is None, counterexample=cex)
            for name, cex in report.items()}


def in_variety(alg: FiniteAlgebra) -> bool:
    """True iff every defining axiom holds (membership in the variety)."""
    return all(c.holds for c in axiom_profile(alg).values())


def height(alg: FiniteAlgebra) -> int:
    """Number of covering steps on the longest chain of the lattice order."""
    h = [0] * alg.size
    # process elements in order of how many elements sit below them
    order = sorted(alg.carrier, key=lambda x: sum(alg.leq(y, x) for y in alg.carrier))
    for x in order:
        below = [h[y] + 1 for y in alg.carrier if y != x and alg.leq(y, x)]
        h[x] = max(below, default=0)
    return max(h)

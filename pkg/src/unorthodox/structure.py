"""Structural analysis: subalgebras, automorphisms, congruences, simplicity,
discriminator and primality checks, products, decomposition, and bounded
enumeration of models of the defining axioms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Optional

from .algebra import (
    AlgebraError, FiniteAlgebra, axiom_profile, builtin, builtins, height,
    in_variety, validate,
)
from .terms import Imp, Join, Meet, Neg, Star, Term, Var, eval_term, free_vars

DEFAULT_SIZE_LIMIT = 4096


class SizeLimit(AlgebraError):
    pass


class NotApplicable(AlgebraError):
    pass


class NotInVariety(AlgebraError):
    pass


class ArityError(AlgebraError):
    pass


# --- subalgebras and automorphisms ----------------------------------------

def _close(alg, seed):
    """Subuniverse generated by seed (plus the constants)."""
    sub = set(seed) | {alg.zero, alg.one}
    frontier = list(sub)
    while frontier:
        x = frontier.pop()
        for y in list(sub):
            for t in (alg.join[x][y], alg.meet[x][y], alg.imp[x][y], alg.imp[y][x]):
                if t not in sub:
                    sub.add(t)
                    frontier.append(t)
        n = alg.neg[x]
        if n not in sub:
            sub.add(n)
            frontier.append(n)
    return frozenset(sub)


def subalgebras(alg: FiniteAlgebra) -> list:
    """All subuniverses (containing the constants), sorted by size."""
    found = {_close(alg, ())}
    frontier = list(found)
    while frontier:
        sub = frontier.pop()
        for x in alg.carrier:
            if x not in sub:
                bigger = _close(alg, sub | {x})
                if bigger not in found:
                    found.add(bigger)
                    frontier.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def automorphisms(alg: FiniteAlgebra) -> list:
    """All carrier permutations commuting with every operation.

    Constants are respected automatically (they are fixed by compatibility
    with imp and neg), but we fix them up front to prune the search.
    """
    rest = [x for x in alg.carrier if x not in (alg.zero, alg.one)]
    out = []
    for images in permutations(rest):
        p = {alg.zero: alg.zero, alg.one: alg.one}
        p.update(zip(rest, images))
        if all(p[alg.neg[x]] == alg.neg[p[x]] for x in alg.carrier) and all(
            p[alg.join[x][y]] == alg.join[p[x]][p[y]]
            and p[alg.meet[x][y]] == alg.meet[p[x]][p[y]]
            and p[alg.imp[x][y]] == alg.imp[p[x]][p[y]]
            for x in alg.carrier for y in alg.carrier
        ):
            out.append(tuple(p[x] for x in alg.carrier))
    return out


# --- congruences -----------------------------------------------------------

def _canon(parent, n):
    """Canonical partition form: tuple mapping element -> block id (by first
    occurrence)."""
    reps = {}
    out = []
    for x in range(n):
        r = _find(parent, x)
        if r not in reps:
            reps[r] = len(reps)
        out.append(reps[r])
    return tuple(out)


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _congruence_close(alg, pairs):
    """Smallest congruence containing the given pairs, as a canonical tuple."""
    parent = list(alg.carrier)
    queue = list(pairs)
    while queue:
        a, b = queue.pop()
        ra, rb = _find(parent, a), _find(parent, b)
        if ra == rb:
            continue
        parent[rb] = ra
        queue.append((alg.neg[a], alg.neg[b]))
        for z in alg.carrier:
            for table in (alg.join, alg.meet, alg.imp):
                queue.append((table[a][z], table[b][z]))
                queue.append((table[z][a], table[z][b]))
    return _canon(parent, alg.size)


def _join_partitions(p, q):
    """Join in the congruence lattice = transitive closure of the union
    (automatically compatible, so no further operation-closure is needed)."""
    n = len(p)
    parent = list(range(n))
    for blocks in (p, q):
        first = {}
        for x, b in enumerate(blocks):
            if b in first:
                ra, rb = _find(parent, first[b]), _find(parent, x)
                if ra != rb:
                    parent[rb] = ra
            else:
                first[b] = x
    return _canon(parent, n)


def _meet_partitions(p, q):
    seen = {}
    out = []
    for pb, qb in zip(p, q):
        key = (pb, qb)
        if key not in seen:
            seen[key] = len(seen)
        out.append(seen[key])
    return tuple(out)


def _refines(p, q):
    """p is a refinement of q (p <= q in the congruence lattice)."""
    image = {}
    for pb, qb in zip(p, q):
        if image.setdefault(pb, qb) != qb:
            return False
    return True


@dataclass(frozen=True)
class CongruenceLattice:
    partitions: tuple  # canonical block-id tuples, delta first, nabla last

    def __len__(self):
        return len(self.partitions)

    @property
    def delta(self):
        return tuple(range(len(self.partitions[0])))

    @property
    def nabla(self):
        return (0,) * len(self.partitions[0])

    def atoms(self):
        delta = self.delta
        proper = [p for p in self.partitions if p != delta]
        return [p for p in proper
                if not any(q != p and q != delta and _refines(q, p) for q in proper)]

    def coatoms(self):
        nabla = self.nabla
        proper = [p for p in self.partitions if p != nabla]
        return [p for p in proper
                if not any(q != p and q != nabla and _refines(p, q) for q in proper)]


def congruences(alg: FiniteAlgebra) -> CongruenceLattice:
    """All congruences: principal congruences closed under joins."""
    principals = {
        _congruence_close(alg, [(a, b)])
        for a in alg.carrier for b in alg.carrier if a < b
    }
    delta = tuple(alg.carrier)
    found = {delta} | principals
    frontier = list(found)
    while frontier:
        p = frontier.pop()
        for q in list(found):
            j = _join_partitions(p, q)
            if j not in found:
                found.add(j)
                frontier.append(j)
    ordered = sorted(found, key=lambda p: (len(set(p)), p), reverse=True)
    return CongruenceLattice(partitions=tuple(ordered))


# --- simplicity and condition (SC) ----------------------------------------

@dataclass(frozen=True)
class ScResult:
    ok: bool
    witness: Optional[int] = None


def sc_check(alg: FiniteAlgebra) -> ScResult:
    """x != 1 implies x /\\ x'* = 0, for all x."""
    for x in alg.carrier:
        if x == alg.one:
            continue
        if alg.meet[x][alg.star(alg.neg[x])] != alg.zero:
            return ScResult(False, witness=x)
    return ScResult(True)


def is_simple(alg: FiniteAlgebra) -> bool:
    if alg.size < 2:
        raise NotApplicable("simplicity is undefined for the trivial algebra")
    simple = len(congruences(alg)) == 2
    _cross_check_sc(alg, simple)
    return simple


def is_si(alg: FiniteAlgebra) -> bool:
    """Subdirectly irreducible: unique atom in the congruence lattice."""
    if alg.size < 2:
        raise NotApplicable("irreducibility is undefined for the trivial algebra")
    si = len(congruences(alg).atoms()) == 1
    _cross_check_sc(alg, si)
    return si


def _cross_check_sc(alg, computed):
    # within the variety (|A| >= 2), simple == SI == (SC); guard against
    # disagreement between the independent computations
    if alg.size >= 2 and in_variety(alg):
        if sc_check(alg).ok != computed:
            raise AssertionError(
                f"congruence computation disagrees with (SC) on {alg.name}")


# --- discriminator ---------------------------------------------------------

@dataclass(frozen=True)
class DiscriminatorReport:
    term: Term
    algebra: str
    ok: bool
    failing_triple: Optional[tuple] = None


def discriminator_term() -> Term:
    """The ternary term T(x,y,z) built from d1(w) = w /\\ w'*:

        T = [z /\\ d] \\/ [x /\\ d*]   with  d = d1((x \\/ y) -> (x /\\ y))
    """
    x, y, z = Var("x"), Var("y"), Var("z")
    w = Imp(Join(x, y), Meet(x, y))
    d = Meet(w, Star(Neg(w)))
    return Join(Meet(z, d), Meet(x, Star(d)))


def discriminator_check(alg: FiniteAlgebra, term: Optional[Term] = None) -> DiscriminatorReport:
    term = term if term is not None else discriminator_term()
    if free_vars(term) != {"x", "y", "z"}:
        raise ArityError("discriminator term must use exactly the variables x, y, z")
    for a, b, c in product(alg.carrier, repeat=3):
        got = eval_term(alg, term, {"x": a, "y": b, "z": c})
        want = c if a == b else a
        if got != want:
            return DiscriminatorReport(term, alg.name, False, (a, b, c))
    return DiscriminatorReport(term, alg.name, True)


# --- primality -------------------------------------------------------------

@dataclass(frozen=True)
class PrimalityReport:
    primal: bool
    discriminator: Optional[DiscriminatorReport]
    subalgebra_count: int
    automorphism_count: int
    clone_binary_count: Optional[int] = None  # oracle, |A| <= 3 only


def binary_term_operation_count(alg: FiniteAlgebra) -> int:
    """Number of binary operations on the carrier definable by terms.

    Independent clone-closure oracle: computes the subalgebra of A^(A x A)
    generated by the two projections, i.e. closes the projection pair under
    the fundamental operations applied pointwise.  Stops early once every
    one of the |A|^(|A|^2) binary operations has been generated.
    """
    import numpy as np

    n = alg.size
    m = n * n
    full = n ** m
    if full > 20_000_000:
        raise NotApplicable(
            f"clone oracle needs a table of {full} binary operations; "
            "only feasible for |A| <= 3")
    jt = np.array(alg.join, dtype=np.int8)
    mt = np.array(alg.meet, dtype=np.int8)
    it = np.array(alg.imp, dtype=np.int8)
    ng = np.array(alg.neg, dtype=np.int8)
    pows = (n ** np.arange(m, dtype=np.int64))

    def codes(rows):
        return rows.astype(np.int64) @ pows

    seen = np.zeros(full, dtype=bool)
    p1 = np.repeat(np.arange(n, dtype=np.int8), n)
    p2 = np.tile(np.arange(n, dtype=np.int8), n)
    members = np.stack([p1, p2])
    seen[codes(members)] = True
    frontier = members

    chunk = 256
    while frontier.size and seen.sum() < full:
        fresh = []

        def absorb(rows):
            rows = rows.reshape(-1, m)
            c = codes(rows)
            new = ~seen[c]
            if new.any():
                rows = rows[new]
                c = c[new]
                c, idx = np.unique(c, return_index=True)
                seen[c] = True
                fresh.append(rows[idx])

        absorb(ng[frontier])
        for lo in range(0, len(frontier), chunk):
            f = frontier[lo:lo + chunk]
            for table in (jt, mt, it):
                absorb(table[f[:, None, :], members[None, :, :]])
                absorb(table[members[None, :, :], f[:, None, :]])
            if seen.sum() == full:
                return full
        if fresh:
            frontier = np.concatenate(fresh)
            members = np.concatenate([members, frontier])
        else:
            frontier = frontier[:0]
    return int(seen.sum())


def is_primal(alg: FiniteAlgebra, oracle: str = "auto") -> PrimalityReport:
    """Primality via the quasiprimality criterion: the discriminator term works
    on A, A has no proper subalgebras and no nontrivial automorphisms.

    The trivial algebra is not primal by convention.  For |A| <= 3 the
    clone-closure oracle independently confirms the verdict on binary
    operations (oracle="auto"/"always"/"never").
    """
    if alg.size < 2:
        return PrimalityReport(False, None, len(subalgebras(alg)),
                               len(automorphisms(alg)))
    disc = discriminator_check(alg)
    subs = subalgebras(alg)
    autos = automorphisms(alg)
    primal = disc.ok and len(subs) == 1 and len(autos) == 1
    clone = None
    if oracle == "always" or (oracle == "auto" and alg.size <= 3):
        clone = binary_term_operation_count(alg)
        if (clone == alg.size ** (alg.size ** 2)) != primal:
            raise AssertionError(
                f"clone oracle disagrees with the quasiprimality criterion on {alg.name}")
    return PrimalityReport(primal, disc, len(subs), len(autos), clone)


# --- products and decomposition -------------------------------------------

def direct_product(algebras, size_limit: int = DEFAULT_SIZE_LIMIT) -> FiniteAlgebra:
    if not algebras:
        raise AlgebraError("direct_product needs at least one factor")
    size = 1
    for a in algebras:
        size *= a.size
    if size > size_limit:
        raise SizeLimit(f"product has {size} elements, limit is {size_limit}")

    elems = list(product(*(a.carrier for a in algebras)))
    index = {e: i for i, e in enumerate(elems)}

    def lift2(tables):
        return tuple(
            tuple(index[tuple(t[x[k]][y[k]] for k, t in enumerate(tables))]
                  for y in elems)
            for x in elems
        )

    join = lift2([a.join for a in algebras])
    meet = lift2([a.meet for a in algebras])
    imp = lift2([a.imp for a in algebras])
    neg = tuple(index[tuple(a.neg[x[k]] for k, a in enumerate(algebras))]
                for x in elems)
    labels = ["(" + ",".join(a.labels[x[k]] for k, a in enumerate(algebras)) + ")"
              for x in elems]
    name = " x ".join(a.name for a in algebras)
    zero = index[tuple(a.zero for a in algebras)]
    one = index[tuple(a.one for a in algebras)]
    return validate(name, labels, join, meet, imp, neg, zero, one)


def power(alg: FiniteAlgebra, k: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FiniteAlgebra:
    return direct_product([alg] * k, size_limit=size_limit)


def quotient(alg: FiniteAlgebra, partition) -> FiniteAlgebra:
    """Quotient by a congruence given as a canonical block-id tuple."""
    nblocks = max(partition) + 1
    rep = [None] * nblocks
    for x, b in enumerate(partition):
        if rep[b] is None:
            rep[b] = x
    labels = ["{" + ",".join(alg.labels[x] for x in alg.carrier if partition[x] == b) + "}"
              for b in range(nblocks)]

    def table(t):
        return tuple(tuple(partition[t[rep[i]][rep[j]]] for j in range(nblocks))
                     for i in range(nblocks))

    return validate(
        f"{alg.name}/theta", labels,
        table(alg.join), table(alg.meet), table(alg.imp),
        tuple(partition[alg.neg[rep[i]]] for i in range(nblocks)),
        partition[alg.zero], partition[alg.one],
    )


def iso(a: FiniteAlgebra, b: FiniteAlgebra) -> Optional[tuple]:
    """An isomorphism a -> b as a tuple of images, or None.

    Backtracking over bijections respecting all operations, pruned by a
    color-refinement fingerprint of each element.
    """
    if a.size != b.size:
        return None

    def colors(alg):
        col = {x: (x == alg.zero, x == alg.one) for x in alg.carrier}
        for _ in range(alg.size):
            nxt = {}
            for x in alg.carrier:
                sig = tuple(sorted(
                    (col[y], col[alg.join[x][y]], col[alg.meet[x][y]],
                     col[alg.imp[x][y]], col[alg.imp[y][x]])
                    for y in alg.carrier
                ))
                nxt[x] = (col[x], col[alg.neg[x]], sig)
            # compress to small ids, canonically (sorted by signature) so that
            # colors are comparable across algebras
            ids = {sig: i for i, sig in enumerate(sorted(set(nxt.values())))}
            col = {x: ids[nxt[x]] for x in alg.carrier}
            if len(ids) == alg.size:
                break
        return col

    ca, cb = colors(a), colors(b)
    if sorted(ca.values()) != sorted(cb.values()):
        return None
    candidates = {x: [y for y in b.carrier if cb[y] == ca[x]] for x in a.carrier}
    order = sorted(a.carrier, key=lambda x: len(candidates[x]))

    mapping = {}
    used = set()

    def consistent(x, y):
        if (x == a.zero) != (y == b.zero) or (x == a.one) != (y == b.one):
            return False
        nx = a.neg[x]
        if nx in mapping and mapping[nx] != b.neg[y]:
            return False
        for u, v in mapping.items():
            for ta, tb in ((a.join, b.join), (a.meet, b.meet), (a.imp, b.imp)):
                r1, r2 = ta[x][u], ta[u][x]
                if r1 in mapping and mapping[r1] != tb[y][v]:
                    return False
                if r2 in mapping and mapping[r2] != tb[v][y]:
                    return False
        return True

    def extend(k):
        if k == len(order):
            # full check (the incremental one is partial)
            f = [mapping[x] for x in a.carrier]
            for x in a.carrier:
                if f[a.neg[x]] != b.neg[f[x]]:
                    return False
                for y in a.carrier:
                    if (f[a.join[x][y]] != b.join[f[x]][f[y]]
                            or f[a.meet[x][y]] != b.meet[f[x]][f[y]]
                            or f[a.imp[x][y]] != b.imp[f[x]][f[y]]):
                        return False
            return True
        x = order[k]
        for y in candidates[x]:
            if y in used or not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend(k + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    if extend(0):
        return tuple(mapping[x] for x in a.carrier)
    return None


def decompose(alg: FiniteAlgebra) -> list:
    """Simple factors of a finite member of the variety.

    Picks maximal congruences greedily (canonical order) until their meet is
    the identity, quotients by each, and verifies internally that the product
    of the factors is isomorphic to the input.
    """
    if not in_variety(alg):
        raise NotInVariety(f"{alg.name} fails the defining axioms")
    if alg.size == 1:
        return []
    lat = congruences(alg)
    if len(lat) == 2:
        return [alg]
    chosen = []
    current = lat.nabla  # running meet; refine toward the identity
    for co in sorted(lat.coatoms()):
        new = _meet_partitions(current, co)
        if new != current:
            chosen.append(co)
            current = new
        if current == lat.delta:
            break
    if current != lat.delta:
        raise AlgebraError(f"could not meet-decompose {alg.name} to the identity")
    factors = [quotient(alg, co) for co in chosen]
    prod = factors[0] if len(factors) == 1 else direct_product(factors)
    if iso(prod, alg) is None:
        raise AssertionError(f"decomposition of {alg.name} failed verification")
    return factors


# --- bounded enumeration ---------------------------------------------------

def _lattice_from_leq(leq):
    n = len(leq)
    join = [[None] * n for _ in range(n)]
    meet = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            ubs = [z for z in range(n) if leq[x][z] and leq[y][z]]
            lbs = [z for z in range(n) if leq[z][x] and leq[z][y]]
            # sum(leq[z]) counts elements above z: maximal for the least ub
            join[x][y] = max(ubs, key=lambda z: sum(leq[z]))
            meet[x][y] = max(lbs, key=lambda z: sum(1 for w in range(n) if leq[w][z]))
    return tuple(map(tuple, join)), tuple(map(tuple, meet))


def _chain_leq(order):
    """leq matrix for a chain given bottom-to-top as element indices."""
    n = len(order)
    rank = {x: i for i, x in enumerate(order)}
    return [[rank[x] <= rank[y] for y in range(n)] for x in range(n)]


def _skeletons(size):
    """Bounded lattices on index sets 0..size-1 with zero=0, one=1.

    Sizes 3 and 4 have exactly one and two lattices: chains, and for size 4
    also the diamond with atoms 2, 3.  Middle elements are indexed to match
    the builtin conventions.
    """
    if size == 1:
        yield _lattice_from_leq([[True]])
    elif size == 2:
        yield _lattice_from_leq(_chain_leq([0, 1]))
    elif size == 3:
        yield _lattice_from_leq(_chain_leq([0, 2, 1]))
    elif size == 4:
        yield _lattice_from_leq(_chain_leq([0, 2, 3, 1]))
        diamond = [[x == y or x == 0 or y == 1 for y in range(4)] for x in range(4)]
        yield _lattice_from_leq(diamond)
    else:
        raise NotApplicable("enumeration is bounded at size 4")


def _neg_tables(size, join, meet):
    """All unary tables satisfying 0' = 1, 1' = 0, the meet-De Morgan law and
    involutivity (filtered exhaustively; the search space is tiny)."""
    middles = [x for x in range(size) if x not in (0, 1)]
    for images in product(range(size), repeat=len(middles)):
        neg = [None] * size
        neg[0], neg[1] = 1, 0
        for x, v in zip(middles, images):
            neg[x] = v
        if any(neg[neg[x]] != x for x in range(size)):
            continue
        if any(neg[meet[x][y]] != join[neg[x]][neg[y]]
               for x in range(size) for y in range(size)):
            continue
        yield tuple(neg)


def _imp_tables(size, join, meet):
    """Backtracking over implication tables with the diagonal pinned to 1 and
    each cell restricted to {z : x /\\ z = x /\\ y} (the SH2 constraint)."""
    cells = [(x, y) for x in range(size) for y in range(size) if x != y]
    options = {
        (x, y): [z for z in range(size) if meet[x][z] == meet[x][y]]
        for (x, y) in cells
    }
    table = [[1 if x == y else None for y in range(size)] for x in range(size)]

    def rec(k):
        if k == len(cells):
            yield tuple(map(tuple, table))
            return
        x, y = cells[k]
        for z in options[(x, y)]:
            table[x][y] = z
            yield from rec(k + 1)
        table[x][y] = None

    yield from rec(0)


def enumerate_runo1(max_size: int) -> list:
    """All nontrivial models of the defining axioms with at most max_size
    elements, up to isomorphism (max_size <= 4)."""
    if not 1 <= max_size <= 4:
        raise NotApplicable("max_size must be between 1 and 4")
    found = []
    for size in range(2, max_size + 1):
        for join, meet in _skeletons(size):
            for neg in _neg_tables(size, join, meet):
                for imp in _imp_tables(size, join, meet):
                    labels = [str(i) for i in range(size)]
                    try:
                        cand = validate(f"model{size}", labels, join, meet, imp,
                                        neg, 0, 1)
                    except AlgebraError:
                        continue
                    if not in_variety(cand):
                        continue
                    if any(iso(cand, seen) for seen in found):
                        continue
                    found.append(cand)
    # name enumerated algebras after the builtin they match, when one does
    named = []
    for cand in found:
        match = next((b.name for b in builtins() if iso(cand, b)), None)
        if match:
            cand = FiniteAlgebra(
                name=match, labels=cand.labels, join=cand.join, meet=cand.meet,
                imp=cand.imp, neg=cand.neg, zero=cand.zero, one=cand.one,
                _leq=cand._leq)
        named.append(cand)
    return named

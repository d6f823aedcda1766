"""Per-prime block partitions of the cyclotomic Hecke algebra, projective
columns with resolution status, and the family partition as the join over
bad primes.

The per-prime computation keeps two bounds: the coarse partition (group
p-blocks intersected with central-exponent level sets, unit Schur elements
split off) is an upper bound; the transitive closure of co-occurrence in
proven-indecomposable projective columns is a lower bound.  A part is exact
when the bounds meet.  Columns are never marked resolved without a completed
subset-search proof.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .cyclotomic import one, zero
from .laurent import LaurentPoly, factor_unit_part, poly_divexact, ratfun_reduce
from .ntheory import lcm
from .schur import a_plus_A, bad_primes, compute_invariants
from .valuation import (
    _completion,
    _ord_int,
    laurent_content_val,
    primes_above,
    val,
    val_at_least,
)

EXACT, UPPER = "exact", "upper-bound"

SUBSET_WEIGHT_CAP = 20


class BlockPartition:
    """Disjoint cover of Irr(W) with a status flag per part."""

    def __init__(self, parts, status):
        order = sorted(range(len(parts)), key=lambda i: min(parts[i]))
        self.parts = tuple(tuple(sorted(parts[i])) for i in order)
        self.status = tuple(status[i] for i in order)
        self._lookup = {}
        for pi, part in enumerate(self.parts):
            for ch in part:
                self._lookup[ch] = pi

    def part_of(self, i: int) -> int:
        return self._lookup[i]

    def n_items(self) -> int:
        return len(self._lookup)

    def all_exact(self) -> bool:
        return all(s == EXACT for s in self.status)

    def refines(self, other: "BlockPartition") -> bool:
        return all(
            len({other.part_of(ch) for ch in part}) == 1 for part in self.parts
        )

    def as_sets(self):
        return [frozenset(p) for p in self.parts]

    def __eq__(self, other):
        return isinstance(other, BlockPartition) and self.parts == other.parts

    def __repr__(self):
        bits = [
            "{" + ",".join(map(str, p)) + "}" + ("" if s == EXACT else "?")
            for p, s in zip(self.parts, self.status)
        ]
        return "[" + " ".join(bits) + "]"


class DecompApprox:
    """Projective-character columns with per-column resolution marks."""

    def __init__(self, columns, resolved, notes):
        self.columns = tuple(tuple(c) for c in columns)
        self.resolved = tuple(bool(r) for r in resolved)
        self.notes = tuple(notes)

    def __repr__(self):
        out = []
        for col, res, note in zip(self.columns, self.resolved, self.notes):
            mark = "ok" if res else "??"
            out.append(f"{col} [{mark}] {note}")
        return "\n".join(out)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def groups(self, n):
        out = {}
        for i in range(n):
            out.setdefault(self.find(i), []).append(i)
        return [tuple(sorted(g)) for g in out.values()]


# -- per-prime context ------------------------------------------------------------


class _PrimeContext:
    """Caches the prime choice, Schur factorizations and residue tables for (W, p)."""

    def __init__(self, W, p):
        self.W = W
        self.p = p
        self.max_order = 2 * W.order
        self.facts = [factor_unit_part(c, self.max_order) for c in W.schur_elements]
        cond = W.field_conductor
        for fact in self.facts:
            for omega, _m in fact.unit_factors:
                cond = lcm(cond, omega.conductor)
        self.conductor = cond
        self.spec = primes_above(p, cond)[0]
        self.unit_shaped = [fact.is_unit() for fact in self.facts]
        self.f_val = []
        for i, c in enumerate(W.schur_elements):
            # Gauss content: equals val(scalar) whenever the element is unit-shaped
            v = laurent_content_val(c, self.spec)
            if v < 0:
                raise ValueError(
                    f"{W.name}: Schur element of {W.char_names[i]} is not integral at p={p}"
                )
            self.f_val.append(v)
        self._testers = {}

    def defect_zero(self, i: int) -> bool:
        return self.f_val[i] == 0

    # subset integrality machinery ------------------------------------------------

    def _tester(self, support: tuple):
        if support in self._testers:
            return self._testers[support]
        W, spec = self.W, self.spec
        for i in support:
            if not self.unit_shaped[i]:
                raise ValueError(
                    f"membership test unsupported: Schur element of "
                    f"{W.char_names[i]} has a non-unit part"
                )
        mu = W.schur_elements[0].mu
        # common unit denominator: product of (y - omega)^max over the support
        maxmult: dict = {}
        for i in support:
            for omega, m in self.facts[i].unit_factors:
                if maxmult.get(omega, 0) < m:
                    maxmult[omega] = m
        D = LaurentPoly.const(one, mu)
        for omega, m in sorted(maxmult.items(), key=lambda kv: str(kv[0])):
            D = D * LaurentPoly({1: one, 0: -omega}, mu) ** m
        numerators = [poly_divexact(D, W.schur_elements[i]) for i in support]
        M = 1
        for npoly in numerators:
            for v in npoly.coeffs.values():
                M = lcm(M, v.denominator_lcm())
        vM = spec.e * _ord_int(M, spec.p)
        L = vM // spec.e + 2
        modulus = spec.p**L
        comp = _completion(spec)
        slots = sorted({e for npoly in numerators for e in npoly.coeffs})
        slot_of = {e: k for k, e in enumerate(slots)}
        A = np.zeros((len(support), len(slots), spec.e, spec.f), dtype=np.int64)
        for ii, npoly in enumerate(numerators):
            for e, v in npoly.coeffs.items():
                vi = v * M
                assert vi.denominator_lcm() == 1
                digits = comp.image(
                    {k: int(c) for k, c in vi.coeffs.items()}, vi.conductor, L
                )
                A[ii, slot_of[e]] = (A[ii, slot_of[e]] + np.array(digits, dtype=np.int64)) % modulus
        # threshold moduli per ramified digit k: val >= vM  <=>  digit_k = 0 mod p^ceil((vM-k)/e)
        tmods = np.ones((1, len(slots), spec.e, spec.f), dtype=np.int64)
        for k in range(spec.e):
            t_k = max(0, -(-(vM - k) // spec.e))
            tmods[0, :, k, :] = spec.p**t_k
        flatA = A.reshape(len(support), -1)
        flat_tmods = tmods.reshape(1, -1)

        def test_many(subsets: np.ndarray) -> np.ndarray:
            """Rows are multiplicity vectors over `support`; True = passes integrality."""
            X = (subsets @ flatA) % modulus
            return ((X % flat_tmods) == 0).all(axis=1)

        self._testers[support] = test_many
        return test_many

    def find_integral_subvector(self, phi):
        """First proper nonzero subvector passing the O_p integrality test, or
        None when all fail (proving indecomposability), or "unsupported"."""
        support = tuple(i for i, m in enumerate(phi) if m)
        mults = [phi[i] for i in support]
        tester = self._tester(support)
        ranges = [range(m + 1) for m in mults]
        total = 1
        for m in mults:
            total *= m + 1
        batch = []
        batch_rows = []
        CHUNK = 2048
        for combo in itertools.product(*ranges):
            if not any(combo) or list(combo) == mults:
                continue
            batch.append(combo)
            if len(batch) == CHUNK:
                batch_rows.append(np.array(batch, dtype=np.int64))
                batch = []
        if batch:
            batch_rows.append(np.array(batch, dtype=np.int64))
        for rows in batch_rows:
            ok = self._tester(support)(rows)
            if ok.any():
                idx = int(np.argmax(ok))
                sub = [0] * len(phi)
                for j, i in enumerate(support):
                    sub[i] = int(rows[idx][j])
                return tuple(sub)
        return None


def _context(W, p) -> _PrimeContext:
    key = ("prime_ctx", p)
    if key not in W._caches:
        W._caches[key] = _PrimeContext(W, p)
    return W._caches[key]


# -- the algorithm steps -----------------------------------------------------------


def group_p_blocks(W, p: int) -> BlockPartition:
    """Brauer p-blocks of the reflection group itself, via central characters
    congruent modulo the fixed prime above p."""
    ctx = _context(W, p)
    k = W.n_irr
    omegas = []
    for i in range(k):
        deg = Fraction(1, W.char_degree(i))
        omegas.append(
            [W.irr[i][ci] * (size * deg) for ci, (size, _w) in enumerate(W.classes)]
        )
    uf = _UnionFind(k)
    for i in range(k):
        for j in range(i + 1, k):
            if uf.find(i) == uf.find(j):
                continue
            if all(
                val_at_least(ctx.spec, omegas[i][ci] - omegas[j][ci], 1)
                for ci in range(len(W.classes))
            ):
                uf.union(i, j)
    parts = uf.groups(k)
    return BlockPartition(parts, [EXACT] * len(parts))


def coarse_partition(W, p: int) -> BlockPartition:
    """Step (1): p-blocks of W intersected with level sets of the central
    exponent (N(chi)+N(chi*))/chi(1); unit Schur elements split off as exact
    singletons."""
    ctx = _context(W, p)
    pb = group_p_blocks(W, p)
    records = compute_invariants(W)
    keys = {}
    for i in range(W.n_irr):
        keys.setdefault((pb.part_of(i), a_plus_A(W, i, records)), []).append(i)
    parts, status = [], []
    for _key, group in sorted(keys.items(), key=lambda kv: min(kv[1])):
        bulk = []
        for i in group:
            if ctx.defect_zero(i):
                parts.append([i])
                status.append(EXACT)
            else:
                bulk.append(i)
        if bulk:
            parts.append(bulk)
            status.append(EXACT if len(bulk) == 1 and len(group) == 1 else UPPER)
    return BlockPartition(parts, status)


def monoid_minimal_generators(vectors) -> list[tuple]:
    """Unique minimal generating set of the additive monoid generated by the
    given nonnegative vectors (bounded exhaustive representability search)."""
    vecs = sorted({tuple(v) for v in vectors if any(v)})
    for v in vecs:
        if any(x < 0 for x in v):
            raise ValueError("monoid generators must be nonnegative")

    def representable(target, gens):
        # DFS with memo: can target be written as a nonnegative combination?
        memo = set()

        def rec(t):
            if not any(t):
                return True
            if t in memo:
                return False
            i = next(j for j, x in enumerate(t) if x)
            for g in gens:
                if g[i] and all(gx <= tx for gx, tx in zip(g, t)):
                    if rec(tuple(tx - gx for tx, gx in zip(t, g))):
                        return True
            memo.add(t)
            return False

        return rec(target)

    kept = []
    for i, v in enumerate(vecs):
        others = [w for j, w in enumerate(vecs) if j != i]
        if not representable(v, others):
            kept.append(v)
    return kept


def candidate_projectives(W, p: int, partition: BlockPartition) -> list[tuple]:
    """Step (2): parabolic projective columns induced up, cut by the parts,
    plus the unit vectors of defect-zero characters; minimized as monoid
    generators."""
    from .groups import induce

    ctx = _context(W, p)
    cands = set()
    for i in range(W.n_irr):
        if ctx.defect_zero(i):
            e = [0] * W.n_irr
            e[i] = 1
            cands.add(tuple(e))
    for P in W.parabolics:
        _parts, decomp = hecke_blocks(P.subgroup, p)
        for col in decomp.columns:
            ind = induce(P, col)
            for part in partition.parts:
                cut = tuple(m if i in part else 0 for i, m in enumerate(ind))
                if any(cut):
                    cands.add(cut)
    return monoid_minimal_generators(cands)


def linking_closure(partition: BlockPartition, columns) -> BlockPartition:
    """Step (3): transitive closure of co-occurrence in a column, within parts."""
    k = partition.n_items()
    uf = _UnionFind(k)
    for col in columns:
        by_part: dict = {}
        for i, m in enumerate(col):
            if m:
                by_part.setdefault(partition.part_of(i), []).append(i)
        for group in by_part.values():
            for a, b in zip(group, group[1:]):
                uf.union(a, b)
    pieces = []
    status = []
    for pi, part in enumerate(partition.parts):
        comps: dict = {}
        for i in part:
            comps.setdefault(uf.find(i), []).append(i)
        split = len(comps) > 1
        for comp in comps.values():
            pieces.append(comp)
            status.append(UPPER if split else partition.status[pi])
    return BlockPartition(pieces, status)


def indecomposability_check(phi, W, p: int, cap: int = SUBSET_WEIGHT_CAP):
    """Step (4): phi is proven indecomposable when no proper nonzero
    subcharacter passes the O_p integrality test.

    Returns ("indecomposable", None), ("splittable", (phi1, phi2)) or
    ("unknown", reason).  A passing subcharacter is only a split *candidate*,
    never a proof, so it is reported as splittable/unknown."""
    phi = tuple(phi)
    if any(m < 0 for m in phi):
        raise ValueError("projective candidates must be nonnegative")
    weight = sum(phi)
    if weight <= 1:
        return ("indecomposable", None)
    if weight > cap:
        return ("unknown", f"support weight {weight} exceeds cap {cap}")
    ctx = _context(W, p)
    try:
        sub = ctx.find_integral_subvector(phi)
    except ValueError as exc:
        return ("unknown", str(exc))
    if sub is None:
        return ("indecomposable", None)
    rest = tuple(a - b for a, b in zip(phi, sub))
    return ("splittable", (sub, rest))


def hecke_blocks(W, p: int):
    """Steps (1)-(4): returns (BlockPartition, DecompApprox) for O_p H(W).

    The partition is the coarse upper bound with parts marked exact when the
    resolved-column linking closure reproduces them."""
    key = ("hecke_blocks", p)
    if key in W._caches:
        return W._caches[key]
    coarse = coarse_partition(W, p)
    columns = candidate_projectives(W, p, coarse)
    resolved, notes = [], []
    for col in columns:
        verdict, detail = indecomposability_check(col, W, p)
        if verdict == "indecomposable":
            resolved.append(True)
            notes.append("proved indecomposable by exhausting proper subcharacters")
        elif verdict == "splittable":
            resolved.append(False)
            notes.append(f"integral proper subcharacter found: {detail[0]} (not a proof)")
        else:
            resolved.append(False)
            notes.append(detail)
    linked = linking_closure(coarse, [c for c, r in zip(columns, resolved) if r])
    parts, status = [], []
    for pi, part in enumerate(coarse.parts):
        sub = [q for q in linked.parts if set(q) <= set(part)]
        meets = len(sub) == 1
        parts.append(part)
        if coarse.status[pi] == EXACT or meets:
            status.append(EXACT)
        else:
            status.append(UPPER)
    partition = BlockPartition(parts, status)
    decomp = DecompApprox(columns, resolved, notes)
    W._caches[key] = (partition, decomp)
    return W._caches[key]


def families(W) -> BlockPartition:
    """Blocks over the Rouquier ring: the join of the per-prime partitions
    over all bad primes, exact where the per-prime lower and upper joins meet."""
    bad = sorted(bad_primes(W))
    k = W.n_irr
    uf_upper = _UnionFind(k)
    uf_lower = _UnionFind(k)
    for p in bad:
        partition, decomp = hecke_blocks(W, p)
        for part in partition.parts:
            for a, b in zip(part, part[1:]):
                uf_upper.union(a, b)
        # members of a resolved (proven indecomposable) column share a block
        linked = linking_closure(
            partition, [c for c, r in zip(decomp.columns, decomp.resolved) if r]
        )
        for part in linked.parts:
            for a, b in zip(part, part[1:]):
                uf_lower.union(a, b)
    upper = uf_upper.groups(k)
    lower = {tuple(g) for g in uf_lower.groups(k)}
    status = [EXACT if tuple(part) in lower else UPPER for part in upper]
    return BlockPartition(upper, status)

"""Symbol combinatorics for classical-group unipotent characters: shift
normalization, rank/defect/family invariants, hooks and cohooks, cores and
cocores, Harish-Chandra series tests, the defect-bridge construction, and
the finest-partition verification."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class Symbol:
    """An (ordered) pair of strictly increasing tuples of nonnegative integers.

    Entries may repeat across the two rows but not within a row; the sign of
    |S| - |T| is retained (the defect is its absolute value)."""

    S: tuple[int, ...]
    T: tuple[int, ...]

    def __post_init__(self):
        for row in (self.S, self.T):
            if list(row) != sorted(set(row)) or (row and row[0] < 0):
                raise ValueError(f"row {row} must be strictly increasing nonnegative")

    # -- basic invariants ------------------------------------------------------

    def signed_defect(self) -> int:
        return len(self.S) - len(self.T)

    def defect(self) -> int:
        return abs(self.signed_defect())

    def rank(self) -> int:
        total = sum(self.S) + sum(self.T)
        size = len(self.S) + len(self.T)
        return total - (size - 1) ** 2 // 4 if size else 0

    def entries(self) -> tuple[int, ...]:
        return tuple(sorted(self.S + self.T))

    def swapped(self) -> "Symbol":
        return Symbol(self.T, self.S)

    def shift(self) -> "Symbol":
        return Symbol(
            tuple([0] + [a + 1 for a in self.S]), tuple([0] + [a + 1 for a in self.T])
        )


def normalize(sym: Symbol) -> Symbol:
    """Undo shifts while both rows start with 0."""
    S, T = sym.S, sym.T
    while S and T and S[0] == 0 and T[0] == 0:
        S = tuple(a - 1 for a in S[1:])
        T = tuple(a - 1 for a in T[1:])
    return Symbol(S, T)


def unordered_key(sym: Symbol):
    """Canonical form ignoring the row order (symbols are unordered pairs)."""
    n = normalize(sym)
    return tuple(sorted((n.S, n.T)))


def defect(sym: Symbol) -> int:
    return sym.defect()


def rank(sym: Symbol) -> int:
    return sym.rank()


def family_key(sym: Symbol) -> tuple[int, ...]:
    """Multiset union of the rows of the normalized symbol: two symbols lie in
    the same Lusztig family exactly when these agree."""
    return normalize(sym).entries()


# -- hooks and cohooks ------------------------------------------------------------


def remove_cohook(sym: Symbol, length: int, value: int, row: str) -> Symbol:
    """Remove a cohook: value moves from its row to the other row as value - length."""
    if row not in ("S", "T"):
        raise ValueError("row must be 'S' or 'T'")
    src = sym.S if row == "S" else sym.T
    dst = sym.T if row == "S" else sym.S
    if value not in src:
        raise ValueError(f"{value} is not in row {row}")
    if value - length < 0:
        raise ValueError("cohook length exceeds the entry")
    if value - length in dst:
        raise ValueError(f"{value - length} already occupies the other row")
    new_src = tuple(a for a in src if a != value)
    new_dst = tuple(sorted(dst + (value - length,)))
    return Symbol(new_src, new_dst) if row == "S" else Symbol(new_dst, new_src)


def add_cohook(sym: Symbol, length: int, value: int, row: str) -> Symbol:
    """Inverse of remove_cohook: value moves to the other row as value + length."""
    if row not in ("S", "T"):
        raise ValueError("row must be 'S' or 'T'")
    src = sym.S if row == "S" else sym.T
    dst = sym.T if row == "S" else sym.S
    if value not in src:
        raise ValueError(f"{value} is not in row {row}")
    if value + length in dst:
        raise ValueError(f"{value + length} already occupies the other row")
    new_src = tuple(a for a in src if a != value)
    new_dst = tuple(sorted(dst + (value + length,)))
    return Symbol(new_src, new_dst) if row == "S" else Symbol(new_dst, new_src)


def _hook_moves(sym: Symbol, d: int):
    for row in ("S", "T"):
        src = sym.S if row == "S" else sym.T
        for v in src:
            if v - d >= 0 and v - d not in src:
                yield row, v


def remove_hook(sym: Symbol, d: int, value: int, row: str) -> Symbol:
    src = sym.S if row == "S" else sym.T
    if value not in src or value - d < 0 or value - d in src:
        raise ValueError("invalid hook removal")
    new = tuple(sorted([a for a in src if a != value] + [value - d]))
    return Symbol(new, sym.T) if row == "S" else Symbol(sym.S, new)


def _cohook_moves(sym: Symbol, e: int):
    for row in ("S", "T"):
        src = sym.S if row == "S" else sym.T
        dst = sym.T if row == "S" else sym.S
        for v in src:
            if v - e >= 0 and v - e not in dst:
                yield row, v


def d_core(sym: Symbol, d: int) -> Symbol:
    """Remove hooks of length d (within a row) until none remain."""
    if d < 1:
        raise ValueError("hook length must be positive")
    cur = sym
    while True:
        moves = list(_hook_moves(cur, d))
        if not moves:
            return normalize(cur)
        row, v = moves[0]
        cur = remove_hook(cur, d, v, row)


def e_cocore(sym: Symbol, e: int) -> Symbol:
    """Remove cohooks of length e (across rows) until none remain."""
    if e < 1:
        raise ValueError("cohook length must be positive")
    cur = sym
    while True:
        moves = list(_cohook_moves(cur, e))
        if not moves:
            return normalize(cur)
        row, v = moves[0]
        cur = remove_cohook(cur, e, v, row)


def core_orders_agree(sym: Symbol, d: int, cocore: bool = False) -> bool:
    """Exhaustively check removal-order independence of the (co)core."""
    results = set()

    def explore(cur):
        moves = list((_cohook_moves if cocore else _hook_moves)(cur, d))
        if not moves:
            results.add(unordered_key(cur))
            return
        for row, v in moves:
            nxt = (remove_cohook if cocore else remove_hook)(cur, d, v, row)
            explore(nxt)

    explore(sym)
    return len(results) == 1


# -- Harish-Chandra series ----------------------------------------------------------


def same_series(a: Symbol, b: Symbol, d: int) -> bool:
    """Same d-Harish-Chandra series: equal d-cores for odd d, equal
    (d/2)-cocores for even d (as unordered normalized symbols)."""
    if a.rank() != b.rank():
        raise ValueError("symbols must have equal rank")
    if d < 1:
        raise ValueError("d must be positive")
    if d % 2 == 1:
        return unordered_key(d_core(a, d)) == unordered_key(d_core(b, d))
    return unordered_key(e_cocore(a, d // 2)) == unordered_key(e_cocore(b, d // 2))


def defect_bridge(sym: Symbol) -> tuple[Symbol, int]:
    """Move the two smallest S-entries absent from T into T; the output shares
    the family and the l-cocore (l their difference), and the signed defect
    drops by 4."""
    singles = [v for v in sym.S if v not in sym.T]
    if len(singles) < 2:
        raise ValueError("need two entries in S absent from T")
    l1, l2 = singles[0], singles[1]
    length = l2 - l1
    mid = remove_cohook(sym, length, l2, "S")
    out = add_cohook(mid, length, l1, "S")
    return out, length


# -- exhaustive family verification ---------------------------------------------------


def _rows_with_sum(length: int, total: int):
    """Strictly increasing nonnegative tuples of the given length and sum."""
    if length == 0:
        if total == 0:
            yield ()
        return

    def rec(prefix, remaining, minimum, k):
        if k == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        # minimal completion: minimum, minimum+1, ...
        v = minimum
        while v * k + k * (k - 1) // 2 <= remaining:
            yield from rec(prefix + [v], remaining - v, v + 1, k - 1)
            v += 1

    yield from rec([], total, 0, length)


def _min_row_sum(length: int, start: int) -> int:
    return length * start + length * (length - 1) // 2


def _symbols_of_rank(r: int, max_defect: int, parity):
    """All normalized unordered symbols of the given rank and defect bound."""
    seen = {}
    size = 1
    while True:
        total = r + (size - 1) ** 2 // 4
        feasible = False
        for a in range(size + 1):
            b = size - a
            if abs(a - b) > max_defect or not parity(abs(a - b)):
                continue
            # cheapest normalized configuration: the larger row starts at 0
            best = min(
                _min_row_sum(a, 0) + _min_row_sum(b, 1) if b else _min_row_sum(a, 0),
                _min_row_sum(b, 0) + _min_row_sum(a, 1) if a else _min_row_sum(b, 0),
            )
            if best > total:
                continue
            feasible = True
            for ssum in range(_min_row_sum(a, 0), total + 1):
                for S in _rows_with_sum(a, ssum):
                    for T in _rows_with_sum(b, total - ssum):
                        if a and b and S[0] == 0 and T[0] == 0:
                            continue  # not shift-reduced
                        sym = Symbol(S, T)
                        if sym.rank() != r:
                            continue
                        key = unordered_key(sym)
                        if key not in seen:
                            seen[key] = normalize(sym)
        if not feasible and size > 2 * (r + max_defect) + 2:
            break
        size += 1
    return list(seen.values())


def verify_family_finest(rank_bound: int, defect_bound: int, parity=None) -> dict:
    """For every family of symbols of each rank <= rank_bound (defects up to
    defect_bound, default odd parity): check (i) equal-defect symbols are
    1-series-linked, (ii) the series-compatibility join is the whole family,
    (iii) every odd defect below the maximum occurs.  Returns a report dict
    with any violations."""
    if parity is None:
        parity = lambda t: t % 2 == 1
    report = {"families": 0, "symbols": 0, "violations": []}
    for r in range(0, rank_bound + 1):
        syms = _symbols_of_rank(r, defect_bound, parity)
        report["symbols"] += len(syms)
        fams: dict = {}
        for sym in syms:
            fams.setdefault(family_key(sym), []).append(sym)
        for key, members in sorted(fams.items()):
            report["families"] += 1
            if len(members) == 1:
                continue
            # join of same-series relations over all relevant d
            max_entry = max(key) if key else 0
            ds = list(range(1, 2 * max_entry + 3))
            idx = {unordered_key(s): i for i, s in enumerate(members)}
            parent = list(range(len(members)))

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            for i, a in enumerate(members):
                for j in range(i + 1, len(members)):
                    b = members[j]
                    if find(i) == find(j):
                        continue
                    if any(same_series(a, b, d) for d in ds):
                        ra, rb = find(i), find(j)
                        parent[max(ra, rb)] = min(ra, rb)
            comps = {find(i) for i in range(len(members))}
            if len(comps) > 1:
                report["violations"].append(
                    {"rank": r, "family": key, "components": len(comps)}
                )
            # every odd defect in {1,...,max} occurs (odd-parity families)
            defects = sorted({m.defect() for m in members})
            if parity(1):
                expect = [t for t in range(1, max(defects) + 1) if t % 2 == 1]
                if [t for t in defects if t % 2 == 1] != expect:
                    report["violations"].append(
                        {"rank": r, "family": key, "missing_defects": expect}
                    )
    return report

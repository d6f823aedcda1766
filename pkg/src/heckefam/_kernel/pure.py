"""Pure-Python implementation of the hot sparse-coefficient kernels.

All maps are dicts {exponent: coefficient} with no zero values stored.
`table` is the per-conductor rewrite table: table[k] is None when the
exponent k is already a basis exponent, otherwise a tuple of
(basis_exponent, integer) pairs expressing zeta_n^k over the basis.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"


def add_maps(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        if s is None:
            out[k] = v
        else:
            s = s + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def scale_map(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def reduce_map(raw, n, table):
    out = {}
    for k, v in raw.items():
        if not v:
            continue
        k %= n
        row = table[k]
        if row is None:
            s = out.get(k)
            if s is None:
                out[k] = v
            else:
                s = s + v
                if s:
                    out[k] = s
                else:
                    del out[k]
        else:
            for j, m in row:
                s = out.get(j)
                if s is None:
                    out[j] = m * v
                else:
                    s = s + m * v
                    if s:
                        out[j] = s
                    else:
                        del out[j]
    return out


def mul_reduce(a, b, n, table):
    if not a or not b:
        return {}
    raw = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            if k >= n:
                k -= n
            v = va * vb
            s = raw.get(k)
            if s is None:
                raw[k] = v
            else:
                raw[k] = s + v
    return reduce_map(raw, n, table)

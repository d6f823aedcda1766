# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementation of the hot sparse-coefficient kernels.

Mirrors heckefam._kernel.pure; coefficients stay arbitrary Python objects
(Fractions), the win comes from typed loops and direct dict C-API usage.
"""

IMPLEMENTATION = "compiled"


def add_maps(dict a, dict b):
    cdef dict out
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


def scale_map(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for k, v in a.items():
        out[k] = v * c
    return out


def reduce_map(dict raw, Py_ssize_t n, tuple table):
    cdef dict out = {}
    cdef Py_ssize_t k
    cdef object row, v, s, m
    for key, v in raw.items():
        if not v:
            continue
        k = key % n
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
            for pair in <tuple>row:
                j = (<tuple>pair)[0]
                m = (<tuple>pair)[1]
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


def mul_reduce(dict a, dict b, Py_ssize_t n, tuple table):
    cdef dict raw = {}
    cdef Py_ssize_t ka, kb, k
    cdef object va, vb, v, s
    if not a or not b:
        return {}
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

"""Elementary number theory helpers shared across the package."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else 0


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: multiplicity}."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = 1
    for p, a in factorize(n).items():
        out *= (p - 1) * p ** (a - 1)
    return out


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    ds = [1]
    for p, a in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(a + 1)]
    return tuple(sorted(ds))


def prime_to_part(n: int, p: int) -> tuple[int, int]:
    """Split n as (prime-to-p part, p-power part)."""
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return n, p**a


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n; requires gcd(a, n) = 1."""
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible mod {n}")
    order = 1
    x = a % n
    while x != 1:
        x = x * a % n
        order += 1
    return order


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # Integer polynomial exact division, dense ascending coefficients.
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in divisors(n):
        if d < n:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)

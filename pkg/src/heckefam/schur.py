"""Schur elements for cyclic and dihedral groups and the numerical
invariants attached to characters: f, a, A, b, N, special, bad primes."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic, one, rat, zeta, zero
from .laurent import LaurentPoly, RationalFunction, derivative_at_one, poly_divexact, ratfun_reduce
from .ntheory import factorize, lcm
from .valuation import laurent_content_val, primes_above


def cyclic_schur(d: int) -> list[LaurentPoly]:
    """Schur elements of the cyclotomic algebra of Z_d, eigenvalue set
    {x, zeta_d, ..., zeta_d^{d-1}}, solving the moment system
    sum_i lambda_i^k / c_i = delta_{k0}."""
    if d < 2:
        raise ValueError("cyclic_schur expects d >= 2")
    z = zeta(d)
    out = [LaurentPoly.from_x_coeffs([1] * d)]  # c_0 = 1 + x + ... + x^{d-1}
    for i in range(1, d):
        gamma = rat(d) * (one - z**i).inverse()
        out.append(LaurentPoly({1: gamma, 0: -gamma * z**i}).shift(-1))
    return out


def dihedral_schur(n: int) -> list[LaurentPoly]:
    """Schur elements of I2(n), ordered as the catalog characters:
    trivial, sign, [the two extra linear characters when n is even], rho_j.

    Validated by the global identity sum deg(chi)/c_chi = 1."""
    if n < 3:
        raise ValueError("dihedral_schur expects n >= 3")
    z = zeta(n)
    P = poly_divexact(
        (LaurentPoly.from_x_coeffs([-1, 0, 1])) * (LaurentPoly.x_power(n) - 1),
        LaurentPoly.from_x_coeffs([-1, 1]) ** 2,
    )
    out = [P, P.shift(-n)]
    m = n // 2
    if n % 2 == 0:
        lin = LaurentPoly.from_x_coeffs([1, 2, 1]).shift(-1) * Fraction(n, 2)
        out += [lin, lin]
    nrot = m if n % 2 == 1 else m - 1
    for j in range(1, nrot + 1):
        f = rat(n) * ((one - z**j) * (one - z ** (-j))).inverse()
        out.append(LaurentPoly({2: one, 1: -(z**j + z ** (-j)), 0: one}).shift(-1) * f)
    # hard validation gate
    gate = LaurentPoly.const(zero)
    degs = [1, 1] + ([1, 1] if n % 2 == 0 else []) + [2] * nrot
    for deg, c in zip(degs, out):
        gate = gate + poly_divexact(P, c) * deg
    if gate != P:
        raise ArithmeticError(f"dihedral Schur identity gate failed for n={n}")
    return out


def f_of(c: LaurentPoly) -> Cyclotomic:
    """The coefficient of the lowest-degree term of a Schur element."""
    if c.is_zero():
        raise ValueError("zero Schur element")
    return c.lowest_coeff()


def bad_primes(W) -> set[int]:
    """Primes dividing some Schur element (positive content at a prime above p)."""
    candidates: set[int] = set()
    for c in W.schur_elements:
        nrm = f_of(c).norm()
        candidates |= set(factorize(abs(nrm.numerator)))
    out = set()
    ncond = W.field_conductor
    for p in sorted(candidates):
        specs = primes_above(p, ncond)
        for c in W.schur_elements:
            if any(laurent_content_val(c, sp) > 0 for sp in specs):
                out.add(p)
                break
    return out


@dataclass(frozen=True)
class InvariantRecord:
    name: str
    f: Cyclotomic
    a: Fraction
    A: Fraction
    b: Fraction
    N: int
    special: bool


def generic_degree(W, i: int):
    """delta_chi = P(W)/c_chi, as a Laurent polynomial when it is one."""
    P = W.poincare()
    c = W.schur_elements[i]
    try:
        return poly_divexact(P, c)
    except ArithmeticError:
        if W.spetsial:
            raise ValueError(
                f"{W.name}: generic degree of {W.char_names[i]} is not a polynomial "
                "(inconsistent spetsial data)"
            )
        return ratfun_reduce(P, c)


def compute_invariants(W) -> list[InvariantRecord]:
    out = []
    for i in range(W.n_irr):
        c = W.schur_elements[i]
        delta = generic_degree(W, i)
        if isinstance(delta, LaurentPoly):
            lo, hi = delta.min_exp(), delta.max_exp()
        else:
            lo = delta.num.min_exp()
            hi = delta.num.max_exp() - delta.den.max_exp()
        R = W.fake_degrees[i]
        rec = InvariantRecord(
            name=W.char_names[i],
            f=f_of(c),
            a=Fraction(lo, W.mu),
            A=Fraction(hi, W.mu),
            b=Fraction(R.min_exp(), W.mu),
            N=int(derivative_at_one(R).as_rational()),
            special=Fraction(lo, W.mu) == Fraction(R.min_exp(), W.mu),
        )
        out.append(rec)
    return out


def a_plus_A(W, i: int, records=None) -> Fraction:
    """(N(chi) + N(chi*))/chi(1), the block-constant central exponent."""
    records = records or compute_invariants(W)
    Nc = records[i].N
    Nc_star = records[W.conj_perm[i]].N
    return Fraction(Nc + Nc_star, W.char_degree(i))


def omega_pi_exponent(W, i: int) -> Fraction:
    """Exponent of x in the scalar action of the full-twist central element."""
    n_hyp, n_refl = W.reflection_counts()
    records = compute_invariants(W)
    return n_hyp + n_refl - a_plus_A(W, i, records)


def relative_trace_scalar(W, P, i: int) -> RationalFunction:
    """c_chi * sum_psi <Res chi, psi> / c_psi for a parabolic embedding P;
    evaluates to [W:W'] at x = 1."""
    sub = P.subgroup
    if not sub.schur_elements:
        raise ValueError(f"missing Schur data for subgroup {sub.name}")
    total = ratfun_reduce(LaurentPoly.const(zero, W.mu), LaurentPoly.const(one, W.mu))
    for si in range(sub.n_irr):
        mult = P.induction_matrix[si][i]
        if mult:
            total = total + ratfun_reduce(LaurentPoly.const(rat(mult), W.mu), sub.schur_elements[si])
    return total * ratfun_reduce(W.schur_elements[i], LaurentPoly.const(one, W.mu))


# -- reporting ---------------------------------------------------------------


def invariants_as_dicts(W) -> list[dict]:
    from .cyclotomic import to_literal

    recs = compute_invariants(W)
    return [
        {
            "chi": r.name,
            "f": to_literal(r.f),
            "a": str(r.a),
            "A": str(r.A),
            "b": str(r.b),
            "N": r.N,
            "special": r.special,
        }
        for r in recs
    ]


def invariants_report(W, fmt: str = "md") -> str:
    rows = invariants_as_dicts(W)
    if fmt == "json":
        return json.dumps({"group": W.name, "invariants": rows}, indent=1)
    recs = compute_invariants(W)
    lines = [
        f"# Invariants for {W.name}",
        "",
        "| chi | f | a | A | b | special |",
        "|---|---|---|---|---|---|",
    ]
    for r in recs:
        lines.append(f"| {r.name} | {r.f} | {r.a} | {r.A} | {r.b} | {'yes' if r.special else ''} |")
    return "\n".join(lines)

"""Reflection-group data: built-in catalog (trivial, cyclic, dihedral, G4),
JSON ingestion with invariant validation, class fusion, induction/restriction
and fake-degree computation."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from .cyclotomic import Cyclotomic, from_literal, one, rat, zero, zeta
from .laurent import (
    LaurentPoly,
    RationalFunction,
    derivative_at_one,
    factor_unit_part,
    laurent_from_doc,
    poly_divexact,
    ratfun_reduce,
)
from .ntheory import lcm
from .schur import cyclic_schur, dihedral_schur

ENUMERATION_BOUND = 50_000

DATA_DIR_ENV = "HECKEFAM_DATA_DIR"


class GroupDataError(ValueError):
    """Raised when a group document violates the schema or an invariant."""


class ParabolicEmbedding:
    def __init__(self, subgroup: "GroupDatum", generator_words: tuple, induction_matrix: tuple):
        self.subgroup = subgroup
        self.generator_words = generator_words
        self.induction_matrix = induction_matrix  # rows: Irr(W'), cols: Irr(W)

    def __repr__(self):
        return f"<Parabolic {self.subgroup.name}>"


class GroupDatum:
    """Complete per-group dataset; treat as immutable after construction."""

    def __init__(self, *, name, order, mu, rank, generators, degrees, classes,
                 char_names, irr, fake_degrees, schur_elements, conj_perm,
                 det_index, spetsial, parabolic_specs=()):
        self.name = name
        self.order = order
        self.mu = mu
        self.rank = rank
        self.generators = generators          # tuple of rank x rank Cyclotomic matrices
        self.degrees = degrees
        self.classes = classes                # tuple of (size, word)
        self.char_names = char_names
        self.irr = irr                        # rows: characters, cols: classes
        self.fake_degrees = fake_degrees
        self.schur_elements = schur_elements
        self.conj_perm = conj_perm
        self.det_index = det_index
        self.spetsial = spetsial
        self.parabolic_specs = parabolic_specs
        self.parabolics: tuple[ParabolicEmbedding, ...] = ()
        self._caches: dict = {}

    # -- simple accessors ---------------------------------------------------

    @property
    def n_irr(self) -> int:
        return len(self.irr)

    def char_degree(self, i: int) -> int:
        return int(self.irr[i][0].as_rational())

    def char_index(self, name: str) -> int:
        return self.char_names.index(name)

    @property
    def field_conductor(self) -> int:
        if "field_conductor" not in self._caches:
            n = 1
            for row in self.irr:
                for v in row:
                    n = lcm(n, v.conductor)
            for c in self.schur_elements:
                n = lcm(n, c.conductor_lcm())
            self._caches["field_conductor"] = n
        return self._caches["field_conductor"]

    def poincare(self) -> LaurentPoly:
        out = LaurentPoly.const(one, self.mu)
        ones = LaurentPoly.const(one, self.mu)
        xm1 = LaurentPoly.x_power(1, self.mu) - ones
        for d in self.degrees:
            out = out * poly_divexact(LaurentPoly.x_power(d, self.mu) - ones, xm1)
        return out

    # -- enumeration ----------------------------------------------------------

    def _matmul(self, A, B):
        r = self.rank
        return tuple(
            tuple(sum((A[i][t] * B[t][j] for t in range(r)), zero) for j in range(r))
            for i in range(r)
        )

    def _identity(self):
        return tuple(tuple(one if i == j else zero for j in range(self.rank)) for i in range(self.rank))

    def word_matrix(self, word) -> tuple:
        m = self._identity()
        for g in word:
            m = self._matmul(m, self.generators[g - 1])
        return m

    def elements(self) -> dict:
        """Map matrix -> shortest word, enumerated by BFS (spec bound enforced)."""
        if "elements" not in self._caches:
            ident = self._identity()
            words = {ident: ()}
            frontier = [ident]
            while frontier:
                nxt = []
                for m in frontier:
                    for gi, g in enumerate(self.generators, start=1):
                        mm = self._matmul(m, g)
                        if mm not in words:
                            if len(words) >= ENUMERATION_BOUND:
                                raise GroupDataError(
                                    f"{self.name}: enumeration bound {ENUMERATION_BOUND} exceeded"
                                )
                            words[mm] = words[m] + (gi,)
                            nxt.append(mm)
                frontier = nxt
            if len(words) != self.order:
                raise GroupDataError(
                    f"{self.name}: generated group has order {len(words)}, datum says {self.order}"
                )
            self._caches["elements"] = words
        return self._caches["elements"]

    def class_index_map(self) -> dict:
        """Map every element matrix to its class index (orbit closure from reps)."""
        if "class_index" not in self._caches:
            words = self.elements()
            gens = self.generators
            inv = {}
            # generator inverses: g^(order-1) found by cycling
            for g in gens:
                m, prev = g, self._identity()
                while m != self._identity():
                    prev = m
                    m = self._matmul(m, g)
                inv[g] = prev
            cmap: dict = {}
            for ci, (size, word) in enumerate(self.classes):
                rep = self.word_matrix(word)
                orbit = {rep}
                frontier = [rep]
                while frontier:
                    nxt = []
                    for m in frontier:
                        for g in gens:
                            mm = self._matmul(inv[g], self._matmul(m, g))
                            if mm not in orbit:
                                orbit.add(mm)
                                nxt.append(mm)
                    frontier = nxt
                if len(orbit) != size:
                    raise GroupDataError(
                        f"{self.name}: class {ci} has size {len(orbit)}, datum says {size}"
                    )
                for m in orbit:
                    if m in cmap:
                        raise GroupDataError(f"{self.name}: classes {cmap[m]} and {ci} overlap")
                    cmap[m] = ci
            if len(cmap) != self.order:
                raise GroupDataError(f"{self.name}: classes do not cover the group")
            self._caches["class_index"] = cmap
        return self._caches["class_index"]

    def reflection_counts(self) -> tuple[int, int]:
        """(number of reflecting hyperplanes, number of reflections), by enumeration."""
        if "refl" not in self._caches:
            words = self.elements()
            nref = 0
            hyperplanes = set()
            for m in words:
                fixed = self._fixed_space_echelon(m)
                if len(fixed) == self.rank - 1:
                    nref += 1
                    hyperplanes.add(fixed)
            self._caches["refl"] = (len(hyperplanes), nref)
        return self._caches["refl"]

    def _fixed_space_echelon(self, m) -> tuple:
        """Canonical (RREF) basis of ker(m - 1), hashable."""
        r = self.rank
        rows = [[m[i][j] - (one if i == j else zero) for j in range(r)] for i in range(r)]
        # column echelon of the kernel: solve rows * v = 0 via RREF of rows
        pivots = []
        rr = 0
        for col in range(r):
            pr = next((i for i in range(rr, r) if rows[i][col]), None)
            if pr is None:
                continue
            rows[rr], rows[pr] = rows[pr], rows[rr]
            inv = rows[rr][col].inverse()
            rows[rr] = [v * inv for v in rows[rr]]
            for i in range(r):
                if i != rr and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [v - f * w for v, w in zip(rows[i], rows[rr])]
            pivots.append(col)
            rr += 1
        free = [c for c in range(r) if c not in pivots]
        basis = []
        for fc in free:
            vec = [zero] * r
            vec[fc] = one
            for pi, pc in enumerate(pivots):
                vec[pc] = -rows[pi][fc]
            basis.append(tuple(vec))
        return tuple(sorted(basis, key=lambda v: tuple(str(x) for x in v)))


# -- class fusion and induction ------------------------------------------------


def enumerate_and_fuse(W: GroupDatum, P: ParabolicEmbedding) -> tuple:
    """Map each class of the parabolic subgroup to the ambient class of its
    representative, by brute-force matrix search in the enumerated group."""
    cmap = W.class_index_map()
    sub = P.subgroup
    fusion = []
    for size, word in sub.classes:
        ambient_word = tuple(w for g in word for w in P.generator_words[g - 1])
        fusion.append(cmap[W.word_matrix(ambient_word)])
    return tuple(fusion)


def induction_matrix_from_fusion(W: GroupDatum, sub: GroupDatum, fusion) -> tuple:
    """Frobenius-formula induction multiplicities; validated nonneg integers."""
    index = W.order // sub.order
    rows = []
    for psi in sub.irr:
        ind_vals = []
        for ci, (size, _w) in enumerate(W.classes):
            tot = zero
            for cj, (ssize, _sw) in enumerate(sub.classes):
                if fusion[cj] == ci:
                    tot = tot + psi[cj] * ssize
            ind_vals.append(tot * Fraction(W.order, size * sub.order))
        # inner products with Irr(W)
        row = []
        for chi in W.irr:
            ip = zero
            for ci, (size, _w) in enumerate(W.classes):
                ip = ip + ind_vals[ci] * chi[ci].conjugate() * size
            ip = ip * Fraction(1, W.order)
            if not ip.is_rational() or ip.as_rational().denominator != 1 or ip.as_rational() < 0:
                raise GroupDataError(
                    f"{W.name}: induction from {sub.name} gives non-integral multiplicity {ip}"
                )
            row.append(int(ip.as_rational()))
        rows.append(tuple(row))
    return tuple(rows)


def induce(P: ParabolicEmbedding, v) -> tuple:
    """Linear extension of the induction matrix to virtual characters."""
    if len(v) != len(P.induction_matrix):
        raise ValueError("virtual character has wrong length for induction")
    ncols = len(P.induction_matrix[0])
    out = [0] * ncols
    for i, mult in enumerate(v):
        if mult:
            for j in range(ncols):
                out[j] += mult * P.induction_matrix[i][j]
    return tuple(out)


def restrict(P: ParabolicEmbedding, v) -> tuple:
    """Adjoint of induce (Frobenius reciprocity)."""
    if len(v) != len(P.induction_matrix[0]):
        raise ValueError("virtual character has wrong length for restriction")
    return tuple(
        sum(P.induction_matrix[i][j] * v[j] for j in range(len(v)))
        for i in range(len(P.induction_matrix))
    )


# -- fake degrees (Molien) -------------------------------------------------------


def _det_one_minus_xw(W: GroupDatum, m) -> LaurentPoly:
    r = W.rank
    entries = [
        [LaurentPoly({0: one if i == j else zero, W.mu: -m[i][j]}, W.mu) for j in range(r)]
        for i in range(r)
    ]

    def det(rows):
        if not rows:
            return LaurentPoly.const(one, W.mu)
        if len(rows) == 1:
            return rows[0][0]
        out = LaurentPoly.const(zero, W.mu)
        sign = 1
        for j in range(len(rows)):
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            term = rows[0][j] * det(minor)
            out = out + (term if sign > 0 else -term)
            sign = -sign
        return out

    return det(entries)


def fake_degrees_molien(W: GroupDatum) -> tuple:
    """All fake degrees by the Molien sum; orientation chosen by validation.

    The two candidate orientations use chi(w) or chi(w^{-1}); exactly one must
    satisfy R_triv = 1 and R_chi(1) = chi(1) for all chi.
    """
    prod = LaurentPoly.const(one, W.mu)
    for d in W.degrees:
        prod = prod * (LaurentPoly.const(one, W.mu) - LaurentPoly.x_power(d, W.mu))
    per_class = []
    for size, word in W.classes:
        m = W.word_matrix(word)
        per_class.append(poly_divexact(prod, _det_one_minus_xw(W, m)))

    def molien(orient_conj: bool):
        out = []
        for chi in W.irr:
            tot = LaurentPoly.const(zero, W.mu)
            for ci, (size, _w) in enumerate(W.classes):
                v = chi[ci].conjugate() if orient_conj else chi[ci]
                tot = tot + per_class[ci] * (v * Fraction(size, W.order))
            out.append(tot)
        return out

    n_refl = W.reflection_counts()[1]

    def valid(fds):
        for i, f in enumerate(fds):
            if f.is_zero():
                return False
            for v in f.coeffs.values():
                if not v.is_rational() or v.as_rational().denominator != 1:
                    return False
            if f.eval_x(rat(1)) != W.irr[i][0]:
                return False
            if all(v == one for v in W.irr[i]) and f != LaurentPoly.const(one, W.mu):
                return False  # R_triv must be 1
        # the determinant character carries the top coinvariant degree
        if W.det_index >= 0 and fds[W.det_index] != LaurentPoly.x_power(n_refl, W.mu):
            return False
        return True

    plain, conj = molien(False), molien(True)
    ok_plain, ok_conj = valid(plain), valid(conj)
    if ok_plain and ok_conj and plain != conj:
        raise GroupDataError(f"{W.name}: Molien orientation ambiguous")
    if ok_plain:
        return tuple(plain)
    if ok_conj:
        return tuple(conj)
    raise GroupDataError(f"{W.name}: no Molien orientation yields integral fake degrees")


def fake_degree(W: GroupDatum, i: int) -> LaurentPoly:
    return W.fake_degrees[i]


def poincare(W: GroupDatum) -> LaurentPoly:
    return W.poincare()


# -- validation --------------------------------------------------------------------


def _validate(W: GroupDatum) -> GroupDatum:
    name = W.name
    k = W.n_irr
    ncl = len(W.classes)
    if any(len(row) != ncl for row in W.irr):
        raise GroupDataError(f"{name}: character table is not {k} x {ncl}")
    if sum(size for size, _ in W.classes) != W.order:
        raise GroupDataError(f"{name}: class sizes sum to "
                             f"{sum(s for s, _ in W.classes)}, group order is {W.order}")
    deg_prod = 1
    for d in W.degrees:
        deg_prod *= d
    if deg_prod != W.order:
        raise GroupDataError(f"{name}: product of degrees {deg_prod} != |W| = {W.order}")
    # row orthogonality
    for i in range(k):
        for j in range(i, k):
            ip = zero
            for ci, (size, _w) in enumerate(W.classes):
                ip = ip + W.irr[i][ci] * W.irr[j][ci].conjugate() * size
            expect = rat(W.order) if i == j else zero
            if ip != expect:
                raise GroupDataError(
                    f"{name}: orthogonality fails for characters "
                    f"({W.char_names[i]}, {W.char_names[j]})"
                )
    # identity column = degrees, positive integers
    for i in range(k):
        d = W.irr[i][0]
        if not d.is_rational() or d.as_rational() < 1 or d.as_rational().denominator != 1:
            raise GroupDataError(f"{name}: character {W.char_names[i]} has bad degree {d}")
    if sum(W.char_degree(i) ** 2 for i in range(k)) != W.order:
        raise GroupDataError(f"{name}: sum of squared degrees != |W|")
    # enumeration-backed checks
    W.elements()
    W.class_index_map()
    # conj_perm
    for i in range(k):
        conj_row = tuple(v.conjugate() for v in W.irr[i])
        if tuple(W.irr[W.conj_perm[i]]) != conj_row:
            raise GroupDataError(f"{name}: conj_perm wrong at {W.char_names[i]}")
    # det character
    det_vals = []
    for size, word in W.classes:
        m = W.word_matrix(word)
        det_vals.append(_matrix_det(m))
    if tuple(W.irr[W.det_index]) != tuple(det_vals):
        raise GroupDataError(f"{name}: det_index does not match the determinant character")
    # fake degrees
    molien = fake_degrees_molien(W)
    if W.fake_degrees:
        if tuple(W.fake_degrees) != molien:
            bad = next(i for i in range(k) if W.fake_degrees[i] != molien[i])
            raise GroupDataError(
                f"{name}: stored fake degree for {W.char_names[bad]} disagrees with Molien"
            )
    else:
        W.fake_degrees = molien
    P = W.poincare()
    tot = LaurentPoly.const(zero, W.mu)
    for i in range(k):
        tot = tot + W.fake_degrees[i] * W.irr[i][0]
    if tot != P:
        raise GroupDataError(f"{name}: sum of deg * fake degree != Poincare polynomial")
    # Schur identities
    if len(W.schur_elements) != k:
        raise GroupDataError(f"{name}: expected {k} Schur elements")
    gate = LaurentPoly.const(zero, W.mu)
    gate_rf = None
    for i, c in enumerate(W.schur_elements):
        val_at_1 = c.eval_y(rat(1))
        if val_at_1 != rat(Fraction(W.order, W.char_degree(i))):
            raise GroupDataError(
                f"{name}: c({W.char_names[i]})(1) != |W|/deg "
                f"(got {val_at_1})"
            )
        try:
            delta = poly_divexact(P, c)
        except ArithmeticError:
            if W.spetsial:
                raise GroupDataError(
                    f"{name}: generic degree P/c is not a Laurent polynomial "
                    f"for {W.char_names[i]}"
                )
            if gate_rf is None:
                gate_rf = ratfun_reduce(gate, LaurentPoly.const(one, W.mu))
            gate_rf = gate_rf + ratfun_reduce(P * rat(W.char_degree(i)), c)
            continue
        if gate_rf is None:
            gate = gate + delta * W.irr[i][0]
        else:
            gate_rf = gate_rf + ratfun_reduce(delta * W.irr[i][0], LaurentPoly.const(one, W.mu))
    if gate_rf is not None:
        if gate_rf != ratfun_reduce(P, LaurentPoly.const(one, W.mu)):
            raise GroupDataError(f"{name}: symmetrizing-form gate sum deg/c != 1 fails")
    elif gate != P:
        raise GroupDataError(f"{name}: symmetrizing-form gate sum deg/c != 1 fails")
    if W.spetsial:
        for i, c in enumerate(W.schur_elements):
            if not c.is_x_polynomial():
                raise GroupDataError(
                    f"{name}: spetsial flag set but c({W.char_names[i]}) has "
                    "y-exponents not divisible by mu"
                )
            fact = factor_unit_part(c, 2 * W.order)
            if not fact.is_unit():
                raise GroupDataError(
                    f"{name}: spetsial flag set but c({W.char_names[i]}) has a "
                    f"non-unit part {fact.non_unit}"
                )
    # parabolics
    paras = []
    for pspec in W.parabolic_specs:
        sub = pspec["datum"]
        gen_words = tuple(tuple(w) for w in pspec["generators"])
        emb = ParabolicEmbedding(sub, gen_words, ())
        fusion = enumerate_and_fuse(W, emb)
        matrix = induction_matrix_from_fusion(W, sub, fusion)
        if pspec.get("induction_matrix") is not None:
            given = tuple(tuple(int(x) for x in row) for row in pspec["induction_matrix"])
            if given != matrix:
                raise GroupDataError(
                    f"{name}: supplied induction matrix for {sub.name} disagrees with fusion"
                )
        emb.induction_matrix = matrix
        # dimension identity: sum_chi M[psi,chi] deg(chi) = [W:W'] deg(psi)
        index = W.order // sub.order
        for si in range(sub.n_irr):
            total = sum(matrix[si][j] * W.char_degree(j) for j in range(k))
            if total != index * sub.char_degree(si):
                raise GroupDataError(
                    f"{name}: induction column sums for {sub.name} violate degree identity"
                )
        paras.append(emb)
    # always provide the trivial parabolic (recursion ground)
    if W.order > 1:
        triv = trivial_group()
        emb = ParabolicEmbedding(triv, (), ())
        emb.induction_matrix = (tuple(W.char_degree(i) for i in range(k)),)
        paras.append(emb)
    W.parabolics = tuple(paras)
    return W


def _matrix_det(m) -> Cyclotomic:
    n = len(m)
    if n == 0:
        return one
    if n == 1:
        return m[0][0]
    out = zero
    sign = 1
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _matrix_det(minor)
        out = out + (term if sign > 0 else -term)
        sign = -sign
    return out


# -- built-in catalog -----------------------------------------------------------------


_catalog_cache: dict = {}


def trivial_group() -> GroupDatum:
    if "1" not in _catalog_cache:
        W = GroupDatum(
            name="1", order=1, mu=1, rank=0, generators=(), degrees=(),
            classes=((1, ()),), char_names=("phi{1,0}",), irr=((one,),),
            fake_degrees=(LaurentPoly.const(one),), schur_elements=(LaurentPoly.const(one),),
            conj_perm=(0,), det_index=0, spetsial=True,
        )
        _catalog_cache["1"] = _validate(W)
    return _catalog_cache["1"]


def cyclic_group(d: int) -> GroupDatum:
    """Z_d with its one-parameter cyclotomic Hecke data."""
    if d < 2:
        raise ValueError("cyclic_group expects d >= 2")
    key = f"Z{d}"
    if key not in _catalog_cache:
        z = zeta(d)
        gens = (((z,),),)
        classes = tuple((1, (1,) * k) for k in range(d))
        irr = tuple(tuple(z ** (i * k) for k in range(d)) for i in range(d))
        # chi_i has fake degree x^{d-i} (coinvariants of the dual space)
        names = tuple(f"phi{{1,{(d - i) % d}}}" for i in range(d))
        conj_perm = tuple((-i) % d for i in range(d))
        W = GroupDatum(
            name=key, order=d, mu=1, rank=1, generators=gens, degrees=(d,),
            classes=classes, char_names=names, irr=irr, fake_degrees=(),
            schur_elements=tuple(cyclic_schur(d)), conj_perm=conj_perm,
            det_index=1, spetsial=True,
        )
        _catalog_cache[key] = _validate(W)
    return _catalog_cache[key]


def dihedral_group(n: int) -> GroupDatum:
    """I2(n), n >= 3, generated by two reflections."""
    if n < 3:
        raise ValueError("dihedral_group expects n >= 3")
    key = f"I2({n})"
    if key not in _catalog_cache:
        z = zeta(n)
        s = ((zero, one), (one, zero))
        t = ((zero, z.inverse()), (z, zero))
        m = n // 2
        classes = [(1, ())]
        rot_range = range(1, m + 1) if n % 2 == 1 else range(1, m)
        for k in rot_range:
            classes.append((2, (1, 2) * k))
        if n % 2 == 0:
            classes.append((1, (1, 2) * m))
            classes.append((n // 2, (1,)))
            classes.append((n // 2, (2,)))
        else:
            classes.append((n, (1,)))
        classes = tuple(classes)

        def rot_val(j, k):
            return z ** (j * k) + z ** (-j * k)

        chars = []
        names = []
        nrot = m if n % 2 == 1 else m - 1
        # trivial
        chars.append(tuple([one] + [one] * nrot + ([one, one, one] if n % 2 == 0 else [one])))
        names.append("phi{1,0}")
        # sign
        chars.append(
            tuple([one] + [one] * nrot + ([one, -one, -one] if n % 2 == 0 else [-one]))
        )
        names.append(f"phi{{1,{n}}}")
        if n % 2 == 0:
            eps = [one] + [(-one) ** k for k in range(1, m)] + [(-one) ** m]
            chars.append(tuple(eps + [one, -one]))
            names.append(f"phi{{1,{m}}}'")
            chars.append(tuple(eps + [-one, one]))
            names.append(f"phi{{1,{m}}}''")
        for j in range(1, nrot + 1):
            row = [rat(2)] + [rot_val(j, k) for k in range(1, nrot + 1)]
            if n % 2 == 0:
                row += [rat(2) * (-one) ** j, zero, zero]
            else:
                row += [zero]
            chars.append(tuple(row))
            names.append(f"phi{{2,{j}}}")
        conj_perm = tuple(range(len(chars)))  # all values real
        parabolics = [{"datum": cyclic_group(2), "generators": ((1,),)}]
        if n % 2 == 0:
            parabolics.append({"datum": cyclic_group(2), "generators": ((2,),)})
        W = GroupDatum(
            name=key, order=2 * n, mu=1, rank=2, generators=(s, t), degrees=(2, n),
            classes=classes, char_names=tuple(names), irr=tuple(chars), fake_degrees=(),
            schur_elements=tuple(dihedral_schur(n)), conj_perm=conj_perm,
            det_index=1, spetsial=True, parabolic_specs=tuple(parabolics),
        )
        _catalog_cache[key] = _validate(W)
    return _catalog_cache[key]


def _data_dir() -> Path:
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def load_group(doc) -> GroupDatum:
    """Build and validate a GroupDatum from a parsed JSON document or a path."""
    if isinstance(doc, (str, Path)):
        with open(doc) as fh:
            doc = json.load(fh)
    if not isinstance(doc, dict):
        raise GroupDataError("group document must be a JSON object")
    if doc.get("format") != 1:
        raise GroupDataError(f"unsupported format {doc.get('format')!r} (expected 1)")
    required = ["name", "order", "rank", "degrees", "generators", "classes",
                "characters", "schur_elements"]
    for fkey in required:
        if fkey not in doc:
            raise GroupDataError(f"missing required field {fkey!r}")
    try:
        generators = tuple(
            tuple(tuple(from_literal(v) for v in row) for row in g) for g in doc["generators"]
        )
        classes = tuple((int(c["size"]), tuple(int(w) for w in c["word"])) for c in doc["classes"])
        names = tuple(ch["name"] for ch in doc["characters"])
        irr = tuple(
            tuple(from_literal(v) for v in ch["values"]) for ch in doc["characters"]
        )
        fake = tuple(laurent_from_doc(f) for f in doc.get("fake_degrees", []))
        schur = tuple(laurent_from_doc(cdoc) for cdoc in doc["schur_elements"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupDataError(f"malformed group document: {exc}") from exc
    mu = int(doc.get("mu", 1))
    paraspecs = []
    for p in doc.get("parabolics", []):
        paraspecs.append(
            {
                "datum": get_group(p["name"]),
                "generators": tuple(tuple(int(w) for w in word) for word in p["generators"]),
                "induction_matrix": p.get("induction_matrix"),
            }
        )
    conj_perm = tuple(doc["conj_perm"]) if "conj_perm" in doc else _infer_conj_perm(irr)
    W = GroupDatum(
        name=doc["name"], order=int(doc["order"]), mu=mu, rank=int(doc["rank"]),
        generators=generators, degrees=tuple(int(d) for d in doc["degrees"]),
        classes=classes, char_names=names, irr=irr, fake_degrees=fake,
        schur_elements=schur, conj_perm=conj_perm,
        det_index=int(doc["det_index"]) if "det_index" in doc else -1,
        spetsial=bool(doc.get("spetsial", False)),
        parabolic_specs=tuple(paraspecs),
    )
    if W.det_index < 0:
        det_vals = tuple(_matrix_det(W.word_matrix(word)) for _size, word in W.classes)
        for i, row in enumerate(W.irr):
            if tuple(row) == det_vals:
                W.det_index = i
                break
        else:
            raise GroupDataError(f"{W.name}: determinant character not found in the table")
    return _validate(W)


def _infer_conj_perm(irr) -> tuple:
    out = []
    for row in irr:
        target = tuple(v.conjugate() for v in row)
        for j, other in enumerate(irr):
            if tuple(other) == target:
                out.append(j)
                break
        else:
            raise GroupDataError("character table is not closed under complex conjugation")
    return tuple(out)


def g4_group() -> GroupDatum:
    if "G4" not in _catalog_cache:
        _catalog_cache["G4"] = load_group(_data_dir() / "g4.json")
    return _catalog_cache["G4"]


def get_group(name: str) -> GroupDatum:
    """Resolve a group by catalog name ("G4", "Z5", "I2.7", "I2(7)") or file path."""
    name = str(name)
    if name in ("1", "triv", "trivial"):
        return trivial_group()
    if name.upper() == "G4":
        return g4_group()
    if name.upper().startswith("Z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    for prefix in ("I2.", "I2(", "i2.", "i2("):
        if name.startswith(prefix):
            num = name[len(prefix):].rstrip(")")
            if num.isdigit():
                return dihedral_group(int(num))
    if os.path.exists(name):
        return load_group(name)
    raise GroupDataError(f"unknown group {name!r} (not a catalog name or file)")


def builtin_names() -> list[str]:
    return ["G4", "Z<d> (d >= 2)", "I2.<n> (n >= 3)", "1"]


def group_to_doc(W: GroupDatum) -> dict:
    """Serialize a GroupDatum to the external JSON schema (format 1)."""
    from .cyclotomic import to_literal
    from .laurent import laurent_to_doc

    doc = {
        "format": 1,
        "name": W.name,
        "order": W.order,
        "mu": W.mu,
        "rank": W.rank,
        "degrees": list(W.degrees),
        "spetsial": W.spetsial,
        "generators": [[[to_literal(v) for v in row] for row in g] for g in W.generators],
        "classes": [{"size": size, "word": list(word)} for size, word in W.classes],
        "characters": [
            {"name": W.char_names[i], "values": [to_literal(v) for v in W.irr[i]]}
            for i in range(W.n_irr)
        ],
        "fake_degrees": [laurent_to_doc(f) for f in W.fake_degrees],
        "schur_elements": [laurent_to_doc(c) for c in W.schur_elements],
        "conj_perm": list(W.conj_perm),
        "det_index": W.det_index,
        "parabolics": [
            {
                "name": P.subgroup.name,
                "generators": [list(wd) for wd in P.generator_words],
                "induction_matrix": [list(row) for row in P.induction_matrix],
            }
            for P in W.parabolics
            if P.subgroup.order > 1
        ],
    }
    return doc

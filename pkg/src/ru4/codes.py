"""Cyclic codes of odd length n over R, i.e. ideals of R_n = R[x]/<x^n - 1>.

A code is held as its Z4-span inside Z4^{2n}: a codeword A(x) + uB(x) is
the vector (A_0..A_{n-1} | B_0..B_{n-1}).  Every structural question (size,
Res/Tor, canonical generators, rank, freeness) is answered from the Howell
basis of that span.  Because the A-block comes first, the basis rows with a
zero A-part span exactly u*Tor(C).

The CRT splitting R_n = sum of S_i = R[x]/<f_i> gives a second view: each
component e_i C is one of the q_i + 5 ideals of the local ring S_i
(q_i = 2^{deg f_i}).  Duals, enumeration and freeness go through that view.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import f2
from .factor import PreconditionError, check_odd_length, crt_idempotents, factor_xn1
from .poly import (
    R,
    Z4,
    Polynomial,
    ResiduePolynomial,
    bezout_lift,
    divmod_monic,
    is_regular,
    monic_associate,
    product,
)
from .ring import GRAY_TABLE, LEE_TABLE, pack
from .z4module import Z4Module

DEFAULT_MAX_ENUM = 1 << 24
_U = pack(0, 1)


def max_enum(override: int | None = None) -> int:
    """Enumeration bound: explicit value, else RU4_MAX_ENUM, else 2^24."""
    if override is not None:
        return int(override)
    env = os.environ.get("RU4_MAX_ENUM")
    return int(env) if env else DEFAULT_MAX_ENUM


class EnumerationLimitError(OverflowError):
    """The code is larger than the configured enumeration bound."""


# --------------------------------------------------------------------------
# vector layout


def to_vector(c: ResiduePolynomial) -> tuple[int, ...]:
    return tuple(x & 3 for x in c.coeffs) + tuple(x >> 2 for x in c.coeffs)


def from_vector(v: Sequence[int], n: int) -> ResiduePolynomial:
    return ResiduePolynomial._raw(n, [pack(v[j], v[n + j]) for j in range(n)], R)


def _as_residue(g, n: int, ring=R) -> ResiduePolynomial:
    if isinstance(g, ResiduePolynomial):
        if g.n != n:
            raise ValueError(f"generator has length {g.n}, expected {n}")
        return g.as_ring(ring) if g.ring is not ring else g
    if isinstance(g, str):
        g = Polynomial.parse(g, ring)
    if isinstance(g, Polynomial):
        return ResiduePolynomial(n, g.as_ring(ring) if g.ring is not ring else g)
    return ResiduePolynomial(n, g, ring)


def _ideal_vectors(gens: Iterable[ResiduePolynomial], n: int):
    """Z4 generators of the ideal: x^k g and u x^k g for every g."""
    for g in gens:
        v = to_vector(g)
        A, B = v[:n], v[n:]
        for k in range(n):
            a = A[-k:] + A[:-k] if k else A
            b = B[-k:] + B[:-k] if k else B
            yield a + b
            yield (0,) * n + a


def ideal_module(gens: Iterable[ResiduePolynomial], n: int) -> Z4Module:
    return Z4Module(_ideal_vectors(gens, n), 2 * n)


def r_span_module(elements: Iterable[ResiduePolynomial], n: int) -> Z4Module:
    """R-linear span (no shifts): Z4-span of each e and u e."""
    vecs = []
    for e in elements:
        v = to_vector(e)
        vecs += [v, (0,) * n + v[:n]]
    return Z4Module(vecs, 2 * n)


def _z4_ideal_module(gens: Iterable[ResiduePolynomial], n: int) -> Z4Module:
    vecs = []
    for g in gens:
        c = tuple(x & 3 for x in g.coeffs)
        vecs += [c[-k:] + c[:-k] if k else c for k in range(n)]
    return Z4Module(vecs, n)


# --------------------------------------------------------------------------
# CRT data


@dataclass(frozen=True)
class _Crt:
    n: int
    factors: tuple[Polynomial, ...]
    f2_factors: tuple[int, ...]
    degrees: tuple[int, ...]
    idempotents: tuple[ResiduePolynomial, ...]


@lru_cache(maxsize=64)
def _crt(n: int) -> _Crt:
    check_odd_length(n)
    rec = factor_xn1(n, "R")
    ids = crt_idempotents(n, "R")
    return _Crt(
        n,
        rec.factors,
        tuple(f.to_f2_int() for f in rec.factors),
        tuple(f.degree for f in rec.factors),
        tuple(ids.idempotents),
    )


# --------------------------------------------------------------------------
# Z4 cyclic codes


class Z4CyclicCode:
    """An ideal of Z4[x]/<x^n - 1> (n odd).

    Each CRT component is 0, <2> or everything, recorded in ``types`` as
    0, 2 or 1 per factor of x^n - 1.
    """

    def __init__(self, n: int, module: Z4Module):
        self.n = n
        self.module = module

    @classmethod
    def from_generators(cls, n: int, gens) -> Z4CyclicCode:
        check_odd_length(n)
        return cls(n, _z4_ideal_module([_as_residue(g, n, Z4) for g in gens], n))

    @classmethod
    def from_types(cls, n: int, types: Sequence[int]) -> Z4CyclicCode:
        crt = _crt(n)
        gen = ResiduePolynomial.zero(n, Z4)
        for t, e in zip(types, crt.idempotents):
            if t:
                gen = gen + e.as_ring(Z4).scale(1 if t == 1 else 2)
        return cls.from_generators(n, [gen])

    @cached_property
    def types(self) -> tuple[int, ...]:
        out = []
        for e in _crt(self.n).idempotents:
            e4 = tuple(x & 3 for x in e.coeffs)
            if e4 in self.module:
                out.append(1)
            elif tuple(2 * x % 4 for x in e4) in self.module:
                out.append(2)
            else:
                out.append(0)
        return tuple(out)

    @cached_property
    def generator(self) -> ResiduePolynomial:
        """Canonical single generator A(B+2), A = prod of absent factors, B = prod of <2> factors.

        It is the monic divisor A itself when no component is <2>.
        """
        crt = _crt(self.n)
        A = product([f.as_ring(Z4) for f, t in zip(crt.factors, self.types) if t == 0], Z4)
        B = product([f.as_ring(Z4) for f, t in zip(crt.factors, self.types) if t == 2], Z4)
        g = A if B.degree == 0 else A * (B + Polynomial.one(Z4).scale(2))
        return ResiduePolynomial(self.n, g)

    @cached_property
    def divisor_degree(self) -> int:
        """Degree of the generator read as a product of factors (n for the zero code)."""
        crt = _crt(self.n)
        return sum(d for d, t in zip(crt.degrees, self.types) if t != 1)

    @property
    def size(self) -> int:
        return self.module.size

    def is_free(self) -> bool:
        return 2 not in self.types

    def structure(self) -> tuple[int, int]:
        return self.module.structure()

    def dual(self) -> Z4CyclicCode:
        ann = Z4CyclicCode.from_types(self.n, [{0: 1, 1: 0, 2: 2}[t] for t in self.types])
        return Z4CyclicCode.from_generators(self.n, [ann.generator.reciprocal()])

    def __contains__(self, c) -> bool:
        return tuple(x & 3 for x in _as_residue(c, self.n, Z4).coeffs) in self.module

    def __eq__(self, other):
        return isinstance(other, Z4CyclicCode) and self.n == other.n and self.module == other.module

    def __hash__(self):
        return hash((self.n, self.module))

    def __repr__(self):
        return f"Z4CyclicCode(n={self.n}, <{self.generator}>)"


# --------------------------------------------------------------------------
# ideals of the local rings S_i


class LocalKind(enum.Enum):
    ZERO = "0"
    TWO_U = "<2u>"
    U = "<u>"
    TWO = "<2>"
    LINE = "<2+ut>"
    MAXIMAL = "<2,u>"
    UNIT = "S"


_LOG2_SIZE = {LocalKind.ZERO: 0, LocalKind.TWO_U: 1, LocalKind.U: 2, LocalKind.TWO: 2, LocalKind.LINE: 2, LocalKind.MAXIMAL: 3, LocalKind.UNIT: 4}


@dataclass(frozen=True)
class LocalIdeal:
    """An ideal of S = R[x]/<f>, f basic irreducible of degree r.

    ``t`` is the residue-field element (an F2 bitmask modulo f mod 2) of the
    line <2 + u t>; it is 0 for every other kind.
    """

    kind: LocalKind
    degree: int
    t: int = 0

    @property
    def label(self) -> str:
        if self.kind is not LocalKind.LINE:
            return self.kind.value
        if self.t == 1:
            return "<2+u>"
        return f"<2+u({f2.to_str(self.t)})>"

    @property
    def log2_size(self) -> int:
        return _LOG2_SIZE[self.kind] * self.degree

    def generators(self) -> list[Polynomial]:
        """Generators in S, as polynomials over R."""
        k = self.kind
        if k is LocalKind.ZERO:
            return []
        if k is LocalKind.UNIT:
            return [Polynomial.one()]
        if k is LocalKind.TWO:
            return [Polynomial._raw((2,), R)]
        if k is LocalKind.U:
            return [Polynomial._raw((_U,), R)]
        if k is LocalKind.TWO_U:
            return [Polynomial._raw((pack(0, 2),), R)]
        if k is LocalKind.MAXIMAL:
            return [Polynomial._raw((2,), R), Polynomial._raw((_U,), R)]
        bits = [(self.t >> i) & 1 for i in range(max(1, self.t.bit_length()))]
        return [Polynomial([(2 if i == 0 else 0, b) for i, b in enumerate(bits)])]

    def annihilator(self) -> LocalIdeal:
        k = self.kind
        swap = {LocalKind.ZERO: LocalKind.UNIT, LocalKind.UNIT: LocalKind.ZERO, LocalKind.TWO_U: LocalKind.MAXIMAL, LocalKind.MAXIMAL: LocalKind.TWO_U}
        if k in swap:
            return LocalIdeal(swap[k], self.degree)
        return self


def local_ideal_choices(degree: int, choices: str = "all") -> list[LocalIdeal]:
    """The ideals of S (all q+5 of them) or the seven with t restricted to 1."""
    ts = range(1, 1 << degree) if choices == "all" else [1]
    if choices not in ("all", "unit-line"):
        raise ValueError("choices must be 'all' or 'unit-line'")
    out = [LocalIdeal(k, degree) for k in (LocalKind.ZERO, LocalKind.TWO_U, LocalKind.U, LocalKind.TWO)]
    out += [LocalIdeal(LocalKind.LINE, degree, t) for t in ts]
    out += [LocalIdeal(LocalKind.MAXIMAL, degree), LocalIdeal(LocalKind.UNIT, degree)]
    return out


def _f2_inverse(a: int, m: int) -> int:
    d, s, _ = f2.xgcd(a, m)
    if d != 1:
        raise ZeroDivisionError("not invertible in the residue field")
    return f2.mod(s, m)


def _classify_component(module: Z4Module, e: ResiduePolynomial, f: Polynomial, fbar: int, n: int) -> LocalIdeal:
    r = f.degree
    comp = Z4Module((to_vector(e * from_vector(row, n)) for row in module.rows), 2 * n)
    size = comp.log2_size
    if size == 0:
        return LocalIdeal(LocalKind.ZERO, r)
    if size == 4 * r:
        return LocalIdeal(LocalKind.UNIT, r)
    if size == 3 * r:
        return LocalIdeal(LocalKind.MAXIMAL, r)
    if size == r:
        return LocalIdeal(LocalKind.TWO_U, r)
    if size != 2 * r:
        raise AssertionError(f"component of size 2^{size} is not an ideal of S")
    if to_vector(e.scale_code(2)) in comp:
        return LocalIdeal(LocalKind.TWO, r)
    if to_vector(e.scale_code(_U)) in comp:
        return LocalIdeal(LocalKind.U, r)
    f4 = f.as_ring(Z4)
    for row in comp.rows:
        A = divmod_monic(Polynomial(row[:n], Z4), f4)[1]
        alpha = sum(((c >> 1) & 1) << i for i, c in enumerate(A.coeffs))
        if any(c & 1 for c in A.coeffs):
            raise AssertionError("line element has a unit A-part")
        alpha = f2.mod(alpha, fbar)
        if alpha:
            beta = f2.mod(sum((c & 1) << i for i, c in enumerate(row[n:])), fbar)
            return LocalIdeal(LocalKind.LINE, r, f2.mulmod(beta, _f2_inverse(alpha, fbar), fbar))
    raise AssertionError("no line element with nonzero 2-part")


# --------------------------------------------------------------------------
# result records


@dataclass(frozen=True)
class CodeDecomposition:
    C1: Z4CyclicCode
    C2: Z4CyclicCode


@dataclass(frozen=True)
class RankReport:
    form: str  # "given" or "canonical"
    k1: int
    k2: int
    theorem_rank: int
    refined_applicable: bool
    refined_rank: int | None
    spanning_set: tuple[ResiduePolynomial, ...]
    spanning_set_spans: bool
    oracle_rank: int
    minimal_generators: tuple[ResiduePolynomial, ...]

    @property
    def claim(self) -> int:
        return self.refined_rank if self.refined_applicable else self.theorem_rank

    @property
    def provenance(self) -> str:
        return "refined-theorem" if self.refined_applicable else "theorem-form"

    @property
    def agrees(self) -> bool:
        return self.claim == self.oracle_rank


@dataclass(frozen=True)
class BchResult:
    root_exponents: frozenset
    longest_run: int
    run_start: int | None
    bound: int
    literal_bound: int
    applicable: bool


@dataclass(frozen=True)
class CodeSummary:
    size: int
    rank: int
    rank_provenance: str
    ideal_generators: int
    is_R_free: bool
    free_rank: int | None
    dH: int | None = None
    dLee: int | None = None

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "rank": self.rank,
            "rank_provenance": self.rank_provenance,
            "ideal_generators": self.ideal_generators,
            "free": self.is_R_free,
            "free_rank": self.free_rank,
            "dH": self.dH,
            "dLee": self.dLee,
        }


@dataclass(frozen=True)
class Implication:
    premise: bool
    conclusion: bool

    @property
    def status(self) -> str:
        if not self.premise:
            return "vacuous"
        return "holds" if self.conclusion else "violated"


@dataclass(frozen=True)
class Z4FreenessReport:
    code: tuple[int, int]
    C1: tuple[int, int]
    C2: tuple[int, int]
    R_free: bool
    components_free_implies_free: Implication = field(repr=False)
    r_free_implies_c1_free: Implication = field(repr=False)

    @property
    def code_free(self) -> bool:
        return self.code[1] == 0

    @property
    def C1_free(self) -> bool:
        return self.C1[1] == 0

    @property
    def C2_free(self) -> bool:
        return self.C2[1] == 0

    def to_json(self) -> dict:
        def part(s):
            return {"z4": s[0], "z2": s[1], "free": s[1] == 0}

        return {
            "code": part(self.code),
            "C1": part(self.C1),
            "C2": part(self.C2),
            "R_free": self.R_free,
            "C1_C2_free_implies_C_free": self.components_free_implies_free.status,
            "R_free_implies_C1_free": self.r_free_implies_c1_free.status,
        }


# --------------------------------------------------------------------------
# the code itself


class CyclicCode:
    """An ideal of R_n, with generators as given and analysis computed on demand."""

    def __init__(self, n: int, generators, form: tuple | None = None):
        check_odd_length(n)
        self.n = n
        self.generators = tuple(_as_residue(g, n) for g in generators)
        self.module = ideal_module(self.generators, n)
        self._form = form

    # construction ---------------------------------------------------------

    @classmethod
    def from_form(cls, n: int, g, p, a) -> CyclicCode:
        """The code <g + u p, u a> with g, p, a over Z4."""
        g, p, a = (_as_residue(x, n, Z4).as_ring(R) for x in (g, p, a))
        return cls(n, [g + p.scale_code(_U), a.scale_code(_U)], form=(g.as_ring(Z4), p.as_ring(Z4), a.as_ring(Z4)))

    @classmethod
    def from_local(cls, n: int, locals_: Sequence[LocalIdeal]) -> CyclicCode:
        crt = _crt(n)
        if len(locals_) != len(crt.factors):
            raise ValueError(f"expected {len(crt.factors)} local ideals")
        first = ResiduePolynomial.zero(n)
        second = ResiduePolynomial.zero(n)
        for loc, e, f in zip(locals_, crt.idempotents, crt.factors):
            if loc.degree != f.degree:
                raise ValueError("local ideal degree does not match its factor")
            gens = loc.generators()
            if gens:
                first = first + e * ResiduePolynomial(n, gens[0])
            if len(gens) > 1:
                second = second + e * ResiduePolynomial(n, gens[1])
        gens = [first] + ([second] if not second.is_zero() else [])
        return cls(n, gens)

    @classmethod
    def zero(cls, n: int) -> CyclicCode:
        return cls(n, [ResiduePolynomial.zero(n)])

    @classmethod
    def full(cls, n: int) -> CyclicCode:
        return cls(n, [ResiduePolynomial.one(n)])

    # basic structure ------------------------------------------------------

    @property
    def size(self) -> int:
        return self.module.size

    @property
    def log2_size(self) -> int:
        return self.module.log2_size

    def __contains__(self, c) -> bool:
        return to_vector(_as_residue(c, self.n)) in self.module

    def __eq__(self, other):
        return isinstance(other, CyclicCode) and self.n == other.n and self.module == other.module

    def __hash__(self):
        return hash((self.n, self.module))

    def __le__(self, other: CyclicCode) -> bool:
        return other.module.contains_module(self.module)

    def is_shift_closed(self) -> bool:
        n = self.n
        return all(to_vector(from_vector(r, n).shift(1)) in self.module for r in self.module.rows)

    @cached_property
    def res(self) -> Z4CyclicCode:
        n = self.n
        return Z4CyclicCode(n, Z4Module((r[:n] for r in self.module.rows), n))

    @cached_property
    def tor(self) -> Z4CyclicCode:
        n = self.n
        return Z4CyclicCode(n, Z4Module((r[n:] for r in self.module.rows if not any(r[:n])), n))

    def decompose(self) -> CodeDecomposition:
        return CodeDecomposition(self.res, self.tor)

    @cached_property
    def canonical(self) -> tuple[ResiduePolynomial, ResiduePolynomial, ResiduePolynomial]:
        """(g, p, a) over Z4 with C = <g + u p, u a>; p is reduced modulo Tor(C)."""
        n = self.n
        g = self.res.generator
        a = self.tor.generator
        rem, _ = self.module.reduce(tuple(x & 3 for x in g.coeffs) + (0,) * n)
        if any(rem[:n]):
            raise AssertionError("Res generator does not lift into the code")
        p_raw = [(-x) % 4 for x in rem[n:]]
        p, _ = self.tor.module.reduce(p_raw)
        return g, ResiduePolynomial(n, p, Z4), a

    def canonical_code(self) -> CyclicCode:
        g, p, a = self.canonical
        return CyclicCode.from_form(self.n, g, p, a)

    @cached_property
    def local_ideals(self) -> tuple[LocalIdeal, ...]:
        crt = _crt(self.n)
        return tuple(
            _classify_component(self.module, e, f, fb, self.n)
            for e, f, fb in zip(crt.idempotents, crt.factors, crt.f2_factors)
        )

    # rank -----------------------------------------------------------------

    @cached_property
    def radical_module(self) -> Z4Module:
        """<2,u> C = 2C + uC."""
        n = self.n
        rows = self.module.rows
        return Z4Module([tuple(2 * x % 4 for x in r) for r in rows] + [(0,) * n + r[:n] for r in rows], 2 * n)

    @cached_property
    def rank(self) -> int:
        """Minimum number of generators of C as an R-module."""
        return self.log2_size - self.radical_module.log2_size

    def minimal_generating_set(self) -> tuple[ResiduePolynomial, ...]:
        """A generating set of size ``rank`` picked greedily from the Howell rows."""
        n = self.n
        span = self.radical_module
        picked = []
        for row in self.module.rows:
            if row not in span:
                picked.append(from_vector(row, n))
                span = span + Z4Module([row, (0,) * n + row[:n]], 2 * n)
        return tuple(picked)

    @property
    def ideal_generators(self) -> int:
        """Minimum number of generators of C as an ideal of R_n."""
        counts = [len(loc.generators()) for loc in self.local_ideals]
        return max(counts, default=0)

    def rank_and_spanning(self, form: str = "auto") -> RankReport:
        """Rank claims from the generator form, next to the exact Nakayama rank.

        ``form`` picks the given (g, p, a) (when built with :meth:`from_form`)
        or the canonical one; "auto" prefers the given form.
        """
        n = self.n
        if form == "auto":
            form = "given" if self._form is not None else "canonical"
        if form == "given":
            if self._form is None:
                raise ValueError("code was not built from a (g, p, a) form")
            g, p, a = self._form
        else:
            g, p, a = self.canonical
        k1 = n if g.is_zero() else g.lift().degree
        k2 = n if a.is_zero() else a.lift().degree
        theorem = 2 * n - k1 - k2
        a_poly = a.lift()
        refined = (not g.is_zero()) and is_regular(g.lift()) and (not a.is_zero()) and a_poly.is_monic()
        gp = g.as_ring(R) + p.as_ring(R).scale_code(_U)
        ua = a.as_ring(R).scale_code(_U)
        span = tuple(gp.shift(i) for i in range(max(0, n - k1))) + tuple(ua.shift(i) for i in range(max(0, k1 - k2)))
        spans = r_span_module(span, n) == self.module
        return RankReport(
            form=form,
            k1=k1,
            k2=k2,
            theorem_rank=theorem,
            refined_applicable=refined,
            refined_rank=n - k2 if refined else None,
            spanning_set=span,
            spanning_set_spans=spans,
            oracle_rank=self.rank,
            minimal_generators=self.minimal_generating_set(),
        )

    # freeness -------------------------------------------------------------

    def is_free(self) -> bool:
        """R-freeness: every CRT component is 0 or the whole local ring."""
        return all(loc.kind in (LocalKind.ZERO, LocalKind.UNIT) for loc in self.local_ideals)

    def free_generator(self) -> Polynomial:
        """Monic divisor g' of x^n - 1 with C = <g'>, for a free C."""
        if not self.is_free():
            raise PreconditionError("code is not R-free")
        crt = _crt(self.n)
        return product([f for f, loc in zip(crt.factors, self.local_ideals) if loc.kind is LocalKind.ZERO], R)

    @property
    def free_rank(self) -> int | None:
        if not self.is_free():
            return None
        return self.n - self.free_generator().degree

    def free_basis(self) -> list[ResiduePolynomial]:
        g = ResiduePolynomial(self.n, self.free_generator())
        return [g.shift(k) for k in range(self.free_rank)]

    def z4_freeness_report(self) -> Z4FreenessReport:
        c, c1, c2 = self.module.structure(), self.res.structure(), self.tor.structure()
        free = self.is_free()
        return Z4FreenessReport(
            code=c,
            C1=c1,
            C2=c2,
            R_free=free,
            components_free_implies_free=Implication(c1[1] == 0 and c2[1] == 0, c[1] == 0),
            r_free_implies_c1_free=Implication(free, c1[1] == 0),
        )

    # codewords ------------------------------------------------------------

    def _check_bound(self, limit):
        limit = max_enum(limit)
        if self.size > limit:
            raise EnumerationLimitError(f"code has {self.size} codewords, above the enumeration bound {limit}")

    def iter_codeword_blocks(self, limit: int | None = None, chunk: int = 1 << 16):
        """int8 blocks of shape (k, 2n) in the (A | B) layout."""
        self._check_bound(limit)
        yield from self.module.iter_chunks(chunk)

    def codewords(self, limit: int | None = None) -> np.ndarray:
        self._check_bound(limit)
        return self.module.elements()

    def enumerate_codewords(self, limit: int | None = None):
        n = self.n
        for block in self.iter_codeword_blocks(limit):
            for row in block:
                yield from_vector(row.tolist(), n)

    def min_distance(self, metric: str = "hamming", limit: int | None = None) -> int | None:
        """Minimum weight of a nonzero codeword (None for the zero code)."""
        if metric not in ("hamming", "lee"):
            raise ValueError("metric must be 'hamming' or 'lee'")
        if self.size == 1:
            return None
        n = self.n
        lee = np.array(LEE_TABLE, dtype=np.int16)
        best = None
        for block in self.iter_codeword_blocks(limit):
            A = block[:, :n].astype(np.int16)
            B = block[:, n:].astype(np.int16)
            if metric == "hamming":
                w = ((A | B) != 0).sum(axis=1)
            else:
                w = lee[A + 4 * B].sum(axis=1)
            w = w[w > 0]
            if w.size:
                m = int(w.min())
                best = m if best is None else min(best, m)
                if best == 1:
                    break
        return best

    def gray_image(self, limit: int | None = None) -> np.ndarray:
        """phi(C) as an int8 array of shape (|C|, 2n): b-part then (a+b)-part."""
        return gray_map_array(self.codewords(limit), self.n)

    def gray_module(self) -> Z4Module:
        """phi(C) as a Z4-linear code of length 2n (image of the Z4 basis)."""
        n = self.n
        return Z4Module((r[n:] + tuple((a + b) % 4 for a, b in zip(r[:n], r[n:])) for r in self.module.rows), 2 * n)

    def summary(self, distances: bool = True, limit: int | None = None) -> CodeSummary:
        free = self.is_free()
        dH = dL = None
        if distances and self.size <= max_enum(limit):
            dH = self.min_distance("hamming", limit)
            dL = self.min_distance("lee", limit)
        return CodeSummary(
            size=self.size,
            rank=self.rank,
            rank_provenance="oracle",
            ideal_generators=self.ideal_generators,
            is_R_free=free,
            free_rank=self.free_rank if free else None,
            dH=dH,
            dLee=dL,
        )

    def to_json(self, distances: bool = True, limit: int | None = None) -> dict:
        g, p, a = self.canonical
        return {
            "n": self.n,
            "g": str(g),
            "p": str(p),
            "a": str(a),
            "local_ideals": [loc.label for loc in self.local_ideals],
            "summary": self.summary(distances, limit).to_json(),
        }

    def __repr__(self):
        g, p, a = self.canonical
        return f"CyclicCode(n={self.n}, g={g}, p={p}, a={a})"


# --------------------------------------------------------------------------
# free functions


def code_from_generators(n: int, gens) -> CyclicCode:
    return CyclicCode(n, gens)


def decompose(code: CyclicCode) -> CodeDecomposition:
    return code.decompose()


def res_code(code: CyclicCode) -> Z4CyclicCode:
    return code.res


def tor_code(code: CyclicCode) -> Z4CyclicCode:
    return code.tor


def rank_and_spanning(code: CyclicCode, form: str = "auto") -> RankReport:
    return code.rank_and_spanning(form)


def is_free(code: CyclicCode) -> bool:
    return code.is_free()


def free_basis(code: CyclicCode) -> list[ResiduePolynomial]:
    return code.free_basis()


def code_size(code: CyclicCode) -> int:
    return code.size


def enumerate_codewords(code: CyclicCode, limit: int | None = None):
    return code.enumerate_codewords(limit)


def min_distance(code: CyclicCode, metric: str = "hamming", limit: int | None = None) -> int | None:
    return code.min_distance(metric, limit)


def gray_image(code: CyclicCode, limit: int | None = None) -> np.ndarray:
    return code.gray_image(limit)


def z4_freeness_report(code: CyclicCode) -> Z4FreenessReport:
    return code.z4_freeness_report()


def gray_map_array(words: np.ndarray, n: int) -> np.ndarray:
    """Apply phi row-wise to (A | B) vectors."""
    A = words[:, :n].astype(np.int16)
    B = words[:, n:].astype(np.int16)
    return np.concatenate([B, (A + B) % 4], axis=1).astype(np.int8)


def gray_vector(c: ResiduePolynomial | Sequence[int]) -> tuple[int, ...]:
    """phi of a single word given as R codes: b-vector followed by (a+b)-vector."""
    codes = c.coeffs if isinstance(c, ResiduePolynomial) else tuple(c)
    pairs = [GRAY_TABLE[x] for x in codes]
    return tuple(p for p, _ in pairs) + tuple(q for _, q in pairs)


def principal_freeness(f, n: int) -> tuple[bool, Polynomial | None]:
    """Theorem path for <f>: free iff the monic associate of f divides x^n - 1.

    Returns (free, monic divisor or None).  Non-regular f are never free
    unless f = 0.
    """
    f = _as_residue(f, n).lift()
    if f.is_zero():
        return True, Polynomial.x_n_minus_1(n)
    if not is_regular(f):
        return False, None
    _, fstar = monic_associate(f)
    if divmod_monic(Polynomial.x_n_minus_1(n), fstar)[1].is_zero():
        return True, fstar
    return False, None


def idempotent_generator(code: CyclicCode | ResiduePolynomial, n: int | None = None) -> ResiduePolynomial:
    """Idempotent e with <e> = <g> for C = <g>, g | x^n - 1 (or u e for C = <u g>)."""
    if isinstance(code, CyclicCode):
        if len(code.generators) != 1:
            raise PreconditionError("idempotent generator needs a principal code <g> or <ug>")
        g, n = code.generators[0], code.n
    else:
        g = _as_residue(code, n if n is not None else code.n)
        n = g.n
    v = to_vector(g)
    u_variant = not any(v[:n]) and any(v[n:])
    base = Polynomial(v[n:], R) if u_variant else g.lift()
    if base.is_zero():
        return ResiduePolynomial.zero(n)
    if not is_regular(base):
        raise PreconditionError(f"{base} is not a divisor of x^{n}-1 (not regular)")
    _, fstar = monic_associate(base)
    h, rem = divmod_monic(Polynomial.x_n_minus_1(n), fstar)
    if not rem.is_zero():
        raise PreconditionError(f"{base} is not a divisor of x^{n}-1")
    lam1, _ = bezout_lift(fstar, h)
    e = ResiduePolynomial(n, lam1 * fstar)
    return e.scale_code(_U) if u_variant else e


def dual_idempotent(e: ResiduePolynomial) -> ResiduePolynomial:
    """1 - e(x^{-1})."""
    return ResiduePolynomial.one(e.n, e.ring) - e.reciprocal()


def annihilator(code: CyclicCode) -> CyclicCode:
    return CyclicCode.from_local(code.n, [loc.annihilator() for loc in code.local_ideals])


def dual(code: CyclicCode) -> CyclicCode:
    """Euclidean dual: the reciprocal of the annihilator ideal."""
    ann = annihilator(code)
    return CyclicCode(code.n, [g.reciprocal() for g in ann.generators])


def _all_words(n: int) -> np.ndarray:
    """Every vector of R^n in (A | B) layout."""
    grid = np.array(list(itertools.product(range(4), repeat=2 * n)), dtype=np.int8)
    return grid


def brute_force_dual(code: CyclicCode, max_n: int = 5) -> Z4Module:
    """All v in R^n with <v, c> = 0 for every codeword c, by exhaustive search."""
    n = code.n
    if n > max_n:
        raise PreconditionError(f"brute-force dual needs n <= {max_n}")
    words = _all_words(n).astype(np.int32)
    va, vb = words[:, :n], words[:, n:]
    keep = np.ones(len(words), dtype=bool)
    for row in code.module.rows:
        ca = np.array(row[:n], dtype=np.int32)
        cb = np.array(row[n:], dtype=np.int32)
        a_part = (va @ ca) % 4
        b_part = (va @ cb + vb @ ca) % 4
        keep &= (a_part == 0) & (b_part == 0)
    return Z4Module(words[keep].tolist(), 2 * n)


def component_dual(code: CyclicCode) -> Z4Module:
    """The set C1^perp + u C2^perp read literally from the components."""
    n = code.n
    d1 = code.res.dual().module
    d2 = code.tor.dual().module
    return Z4Module([r + (0,) * n for r in d1.rows] + [(0,) * n + r for r in d2.rows], 2 * n)


def inner_products_vanish(code: CyclicCode, other: CyclicCode) -> bool:
    """Every basis row of ``code`` is orthogonal to every basis row of ``other``."""
    n = code.n
    for r in code.module.rows:
        for s in other.module.rows:
            a = sum(x * y for x, y in zip(r[:n], s[:n])) % 4
            b = sum(x * y for x, y in zip(r[:n], s[n:])) + sum(x * y for x, y in zip(r[n:], s[:n]))
            if a or b % 4:
                return False
    return True


def bch_bound(code: CyclicCode, context=None) -> BchResult:
    """Longest cyclic run of common root exponents among the n-th roots of unity."""
    from .galois import context_for_length

    n = code.n
    ctx = context if context is not None else context_for_length(n)
    roots = ctx.nth_roots(n)
    exps = set()
    for i, z in enumerate(roots):
        if all(_eval(g, z).is_zero() for g in code.generators):
            exps.add(i)
    run, start = _longest_cyclic_run(exps, n)
    applicable = len(code.generators) == 1 and code.is_free() and principal_freeness(code.generators[0], n)[0]
    return BchResult(frozenset(exps), run, start, run + 1, run, applicable)


def _eval(g: ResiduePolynomial, z):
    acc = z.ring.zero
    for c in reversed(g.coeffs):
        acc = acc * z + z.ring.from_r(c)
    return acc


def _longest_cyclic_run(exps: set, n: int) -> tuple[int, int | None]:
    if not exps:
        return 0, None
    if len(exps) == n:
        return n, 0
    best, best_start = 0, None
    for s in exps:
        if (s - 1) % n in exps:
            continue
        k = 0
        while (s + k) % n in exps:
            k += 1
        if k > best or (k == best and s < best_start):
            best, best_start = k, s
    return best, best_start


def enumerate_cyclic_codes(n: int, choices: str = "all"):
    """Every cyclic code of length n, one per tuple of local ideals."""
    crt = _crt(n)
    per_factor = [local_ideal_choices(d, choices) for d in crt.degrees]
    for combo in itertools.product(*per_factor):
        yield CyclicCode.from_local(n, combo)


def count_cyclic_codes(n: int, choices: str = "all") -> int:
    """prod over factors of (2^{deg f_i} + 5), or 7^m for the restricted choice set."""
    crt = _crt(n)
    out = 1
    for d in crt.degrees:
        out *= len(local_ideal_choices(d, choices)) if choices == "unit-line" else (1 << d) + 5
    return out


def random_code(n: int, rng, choices: str = "all") -> CyclicCode:
    crt = _crt(n)
    return CyclicCode.from_local(n, [rng.choice(local_ideal_choices(d, choices)) for d in crt.degrees])


def divisors_of_xn1(n: int) -> list[Polynomial]:
    """All 2^m monic divisors of x^n - 1 over R, as products of factor subsets."""
    crt = _crt(n)
    out = []
    for mask in range(1 << len(crt.factors)):
        out.append(product([f for i, f in enumerate(crt.factors) if mask >> i & 1], R))
    return out

"""Factorisation of x^n - 1 (n odd) over F2, Z4 and R.

The F2 factors are minimal polynomials of powers of a primitive n-th root of
unity, one per 2-cyclotomic coset.  They are lifted to Z4 by Graeffe's
root-squaring, which is exact in a single step for divisors of x^n - 1; the
Z4 lift is also the lift to R.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import f2
from .poly import (
    F2,
    Z4,
    Polynomial,
    ResiduePolynomial,
    bezout_lift,
    divmod_monic,
    product,
    ring_by_name,
)

MAX_EXTENSION_DEGREE = 20


class PreconditionError(ValueError):
    """An argument violates a documented precondition (e.g. even length)."""


def check_odd_length(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise PreconditionError("length must be a positive integer")
    if n % 2 == 0:
        raise PreconditionError("length must be odd")


@dataclass(frozen=True)
class CyclotomicCoset:
    modulus: int
    leader: int
    members: tuple[int, ...]

    def __contains__(self, i):
        return i % self.modulus in self.members

    def __len__(self):
        return len(self.members)


def cyclotomic_cosets(n: int) -> list[CyclotomicCoset]:
    """2-cyclotomic cosets mod n, ordered by leader; members in orbit order."""
    check_odd_length(n)
    seen = set()
    out = []
    for i in range(n):
        if i in seen:
            continue
        orbit = []
        j = i
        while j not in orbit:
            orbit.append(j)
            j = 2 * j % n
        seen.update(orbit)
        out.append(CyclotomicCoset(n, i, tuple(orbit)))
    return out


def extension_degree(n: int) -> int:
    """ord_n(2): the degree r with n | 2^r - 1."""
    return f2.multiplicative_order(2, n)


@dataclass(frozen=True)
class FactorizationRecord:
    n: int
    ring: object
    factors: tuple[Polynomial, ...]
    cosets: tuple[CyclotomicCoset, ...]

    def factor_for(self, i: int) -> Polynomial:
        """The factor whose roots include the i-th power of the chosen root."""
        for f, c in zip(self.factors, self.cosets):
            if i % self.n in c.members:
                return f
        raise KeyError(i)

    @property
    def degrees(self) -> list[int]:
        return [f.degree for f in self.factors]

    def product(self) -> Polynomial:
        return product(self.factors, self.ring)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ring": self.ring.name,
            "factors": [str(f) for f in self.factors],
            "cosets": [sorted(c.members) for c in self.cosets],
        }


def _check_degree(n, max_degree):
    r = extension_degree(n)
    if r > max_degree:
        raise PreconditionError(f"ord_{n}(2) = {r} exceeds the supported extension degree {max_degree}")
    return r


@lru_cache(maxsize=64)
def _f2_factors(n: int, max_degree: int) -> tuple[tuple[int, ...], tuple[CyclotomicCoset, ...]]:
    check_odd_length(n)
    r = _check_degree(n, max_degree)
    field_ = f2.GF2m(r)
    beta = field_.pow(field_.generator(), (field_.q - 1) // n)
    cosets = tuple(cyclotomic_cosets(n))
    polys = []
    for coset in cosets:
        m = [1]
        for j in coset.members:
            m = field_.poly_mul(m, [field_.pow(beta, j), 1])
        if any(c > 1 for c in m):
            raise AssertionError("minimal polynomial has coefficients outside F2")
        polys.append(sum(c << i for i, c in enumerate(m)))
    return tuple(polys), cosets


def factor_xn1_f2(n: int, max_degree: int = MAX_EXTENSION_DEGREE) -> FactorizationRecord:
    polys, cosets = _f2_factors(n, max_degree)
    return FactorizationRecord(n, F2, tuple(Polynomial.from_f2_int(p) for p in polys), cosets)


def _graeffe(g: Polynomial) -> Polynomial:
    g4 = g.as_ring(F2).as_ring(Z4)
    even = Polynomial([c if i % 2 == 0 else 0 for i, c in enumerate(g4.coeffs)], Z4)
    odd = Polynomial([c if i % 2 == 1 else 0 for i, c in enumerate(g4.coeffs)], Z4)
    sq = even * even - odd * odd
    if any(sq.coefficient(k) for k in range(1, len(sq.coeffs), 2)):
        raise AssertionError("root-squaring left odd-degree terms")
    lifted = Polynomial(sq.coeffs[::2], Z4)
    if lifted.lead == 3:
        lifted = -lifted
    return lifted


def _period(g: Polynomial) -> int:
    """Smallest n with g | x^n - 1 over F2 (g square-free with g(0) = 1)."""
    gi = g.to_f2_int()
    if gi & 1 == 0:
        raise PreconditionError(f"{g} does not divide x^n - 1 for any odd n")
    if f2.deg(gi) == 0:
        return 1
    n = 1
    limit = 1 << f2.deg(gi)
    x = 0b10
    acc = f2.mod(x, gi)
    while acc != 1:
        acc = f2.mulmod(acc, x, gi)
        n += 1
        if n > limit:
            raise PreconditionError(f"{g} does not divide x^n - 1 for any n")
    return n


def hensel_lift(g: Polynomial, target="Z4", n: int | None = None) -> Polynomial:
    """Unique monic lift of an F2 divisor of x^n - 1 that divides x^n - 1 over the target."""
    target = ring_by_name(target)
    g = g.as_ring(F2)
    if g.is_zero() or not g.is_monic():
        raise PreconditionError("polynomial to lift must be monic over F2")
    if n is None:
        n = _period(g)
    check_odd_length(n)
    if f2.mod((1 << n) | 1, g.to_f2_int()) != 0:
        raise PreconditionError(f"{g} does not divide x^{n}-1 over F2")
    lifted = _graeffe(g)
    if not divmod_monic(Polynomial.x_n_minus_1(n, Z4), lifted)[1].is_zero():
        raise PreconditionError(f"{g} does not divide x^{n}-1 over F2")
    return lifted.as_ring(target)


def hensel_lift_newton(g: Polynomial, n: int) -> Polynomial:
    """Classical Hensel lift of the pair (g, (x^n-1)/g) from F2 to Z4.

    Independent of the Graeffe route; used to cross-check it.
    """
    gi = g.as_ring(F2).to_f2_int()
    xn1 = (1 << n) | 1
    hi, rem = f2.divmod_(xn1, gi)
    if rem:
        raise PreconditionError("g must divide x^n - 1 over F2")
    d, s, t = f2.xgcd(gi, hi)
    if d != 1:
        raise PreconditionError("x^n - 1 must be square-free")
    G = Polynomial.from_f2_int(gi, Z4)
    H = Polynomial.from_f2_int(hi, Z4)
    err = Polynomial.x_n_minus_1(n, Z4) - G * H
    if any(c & 1 for c in err.coeffs):
        raise AssertionError("mod-2 factorisation is not exact")
    e = sum(((c >> 1) & 1) << i for i, c in enumerate(err.coeffs))
    # delta*h + eps*g = e over F2, deg delta < deg g
    delta = f2.mod(f2.mul(e, t), gi)
    return G + Polynomial.from_f2_int(delta, Z4).scale(2)


@lru_cache(maxsize=64)
def _factor_xn1_cached(n, ring_name, max_degree) -> FactorizationRecord:
    base = factor_xn1_f2(n, max_degree)
    ring = ring_by_name(ring_name)
    if ring is F2:
        return base
    lifts = tuple(hensel_lift(g, ring, n) for g in base.factors)
    return FactorizationRecord(n, ring, lifts, base.cosets)


def factor_xn1(n: int, ring="R", max_degree: int = MAX_EXTENSION_DEGREE) -> FactorizationRecord:
    """Monic basic irreducible, pairwise coprime factors of x^n - 1."""
    return _factor_xn1_cached(n, ring_by_name(ring).name, max_degree)


def is_basic_irreducible(f: Polynomial) -> bool:
    return f2.is_irreducible(f.to_f2_int())


def is_basic_primitive(f: Polynomial) -> bool:
    return f2.is_primitive(f.to_f2_int())


@dataclass(frozen=True)
class CrtIdempotentSet:
    n: int
    ring: object
    idempotents: tuple[ResiduePolynomial, ...]
    factors: tuple[Polynomial, ...] = field(repr=False)

    def __iter__(self):
        return iter(self.idempotents)

    def __len__(self):
        return len(self.idempotents)

    def __getitem__(self, i):
        return self.idempotents[i]


@lru_cache(maxsize=64)
def _crt(n, ring_name, max_degree):
    rec = factor_xn1(n, ring_name, max_degree)
    ring = rec.ring
    out = []
    for i, fi in enumerate(rec.factors):
        cofactor = product((f for j, f in enumerate(rec.factors) if j != i), ring)
        _, b = bezout_lift(fi, cofactor)
        out.append(ResiduePolynomial(n, b * cofactor))
    return CrtIdempotentSet(n, ring, tuple(out), rec.factors)


def crt_idempotents(n: int, ring="R", max_degree: int = MAX_EXTENSION_DEGREE) -> CrtIdempotentSet:
    """Orthogonal idempotents e_i = 1 mod f_i, 0 mod f_j, summing to 1."""
    return _crt(n, ring_by_name(ring).name, max_degree)

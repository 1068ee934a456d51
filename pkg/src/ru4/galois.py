"""The Galois extension GR(R, r) = R[x]/<f> for a basic primitive f of degree r.

Elements are length-r tuples of R codes in the basis 1, xi, ..., xi^{r-1}.
Moduli are restricted to Z4 coefficients, so the Teichmuller set
{0, 1, xi, ..., xi^{2^r-2}} lies in GR(4, r) and every element splits as
a0 + 2 a1 + u a2 + 2u a3 with a_i in that set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import f2
from .factor import PreconditionError, cyclotomic_cosets, hensel_lift
from .poly import R, Polynomial, format_polynomial, product
from .ring import NotAUnitError, pack, unpack

TEICHMULLER_TABLE_MAX_R = 12
MAX_DEGREE = 20

_ADD = R.add
_MUL = R.mul


class GaloisRing:
    """GR(R, r) with a fixed modulus; immutable once built."""

    def __init__(self, r: int, modulus: Polynomial | None = None):
        if r < 1 or r > MAX_DEGREE:
            raise PreconditionError(f"extension degree must lie in 1..{MAX_DEGREE}")
        self.r = r
        self.order = (1 << r) - 1
        if modulus is None:
            base = Polynomial.from_f2_int(f2.default_primitive(r))
            modulus = hensel_lift(base, "R", n=self.order)
        modulus = modulus.as_ring(R) if modulus.ring is not R else modulus
        if modulus.degree != r or not modulus.is_monic():
            raise PreconditionError(f"modulus must be monic of degree {r}")
        if any(c >> 2 for c in modulus.coeffs):
            raise PreconditionError("modulus must have coefficients in Z4")
        self.modulus = modulus
        # x^r = -(lower part); precompute x^r .. x^{2r-2} in the basis
        tail = [R.neg[c] for c in modulus.coeffs[:r]]
        self._reductions = []
        cur = tuple(tail)
        for _ in range(r - 1):
            self._reductions.append(cur)
            cur = self._times_x(cur, tail)
        self._reductions.append(cur)
        self.zero = GaloisRingElement(self, (0,) * r)
        self.one = GaloisRingElement(self, (1,) + (0,) * (r - 1))
        self.xi = self._from_coeffs([0, 1])
        k = _order_of(self.xi, self.order)
        if k != self.order:
            raise PreconditionError(f"modulus is not basic primitive: xi has order {k}, expected {self.order}")
        self._teich = None

    @staticmethod
    def _times_x(vec, tail):
        top = vec[-1]
        shifted = (0,) + vec[:-1]
        row = _MUL[top]
        return tuple(_ADD[s][row[t]] for s, t in zip(shifted, tail))

    def _from_coeffs(self, coeffs) -> GaloisRingElement:
        """Reduce an ascending coefficient list of any length."""
        r = self.r
        out = list(coeffs[:r]) + [0] * max(0, r - len(coeffs))
        for k, c in enumerate(coeffs[r:]):
            if c:
                red = self._reductions[k] if k < len(self._reductions) else None
                if red is None:
                    return self._from_coeffs(self._slow_reduce(coeffs))
                row = _MUL[c]
                for i in range(r):
                    out[i] = _ADD[out[i]][row[red[i]]]
        return GaloisRingElement(self, tuple(out))

    def _slow_reduce(self, coeffs):
        from .poly import divmod_monic

        return list(divmod_monic(Polynomial._raw(tuple(coeffs), R), self.modulus)[1].coeffs)

    def element(self, value) -> GaloisRingElement:
        """Coerce an int, R code pair, Polynomial in xi, or coefficient list."""
        if isinstance(value, GaloisRingElement):
            return value
        if isinstance(value, Polynomial):
            return self._from_coeffs(list(value.as_ring(R).coeffs))
        if isinstance(value, int):
            return self._from_coeffs([pack(value)])
        return self._from_coeffs([c if isinstance(c, int) else pack(*c) for c in value])

    def from_r(self, code: int) -> GaloisRingElement:
        return self._from_coeffs([code])

    def parse(self, text: str) -> GaloisRingElement:
        """Parse a polynomial in xi (written with x, xi or the Greek letter)."""
        s = text.replace("ξ", "x").replace("xi", "x")
        return self.element(Polynomial.parse(s))

    @property
    def size(self) -> int:
        return 16**self.r

    @property
    def unit_count(self) -> int:
        return 8**self.r * self.order

    def elements(self):
        """Every element (16^r of them); only sensible for small r."""
        import itertools

        for coeffs in itertools.product(range(16), repeat=self.r):
            yield GaloisRingElement(self, coeffs)

    # Teichmuller set -------------------------------------------------------

    def _teich_table(self):
        if self._teich is None:
            table = {0: self.zero}
            p = self.one
            for _ in range(self.order):
                table[p.residue()] = p
                p = p * self.xi
            self._teich = table
        return self._teich

    def teichmuller_set(self) -> list[GaloisRingElement]:
        out = [self.zero]
        p = self.one
        for _ in range(self.order):
            out.append(p)
            p = p * self.xi
        return out

    def teichmuller_lift(self, residue: int) -> GaloisRingElement:
        """The member of T with the given residue (an F_{2^r} bitmask)."""
        if self.r <= TEICHMULLER_TABLE_MAX_R:
            return self._teich_table()[residue]
        y = GaloisRingElement(self, tuple((residue >> i) & 1 for i in range(self.r)))
        return y ** (1 << self.r)

    def power_table(self, start: int | None = None, stop: int | None = None) -> list[tuple[int, GaloisRingElement]]:
        start = self.r if start is None else start
        stop = self.order if stop is None else stop
        p = self.xi**start
        out = []
        for k in range(start, stop + 1):
            out.append((k, p))
            p = p * self.xi
        return out

    # roots of unity ---------------------------------------------------------

    def nth_roots(self, n: int) -> list[GaloisRingElement]:
        """The n-th roots of unity zeta^0, ..., zeta^{n-1}, zeta = xi^{(2^r-1)/n}."""
        if n < 1 or self.order % n:
            raise PreconditionError(f"n = {n} does not divide 2^{self.r}-1 = {self.order}")
        zeta = self.xi ** (self.order // n)
        out, p = [], self.one
        for _ in range(n):
            out.append(p)
            p = p * zeta
        return out

    def minimal_polynomial(self, i: int, n: int) -> Polynomial:
        """Product of (y - zeta^j) over the 2-cyclotomic coset of i mod n."""
        roots = self.nth_roots(n)
        coset = next(c for c in cyclotomic_cosets(n) if i % n in c.members)
        poly = [self.one]
        for j in coset.members:
            poly = _poly_mul_linear(poly, -roots[j])
        coeffs = []
        for c in poly:
            if any(c.coeffs[1:]):
                raise AssertionError(f"minimal polynomial coefficient {c} lies outside R")
            coeffs.append(c.coeffs[0])
        return Polynomial._raw(tuple(coeffs), R)

    def lcm_minimal_polynomials(self, exponents, n: int) -> Polynomial:
        """lcm of M_i over the given exponents: one factor per coset hit."""
        seen, polys = set(), []
        for i in exponents:
            leader = next(c.leader for c in cyclotomic_cosets(n) if i % n in c.members)
            if leader not in seen:
                seen.add(leader)
                polys.append(self.minimal_polynomial(leader, n))
        return product(polys, R)

    def __eq__(self, other):
        return isinstance(other, GaloisRing) and self.r == other.r and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.r, self.modulus))

    def __repr__(self):
        return f"GR(R,{self.r}) mod {self.modulus}"


def _order_of(x: GaloisRingElement, group_order: int) -> int:
    if x ** group_order != x.ring.one:
        return -1
    order = group_order
    for p in f2.prime_factors(group_order) if group_order > 1 else []:
        while order % p == 0 and x ** (order // p) == x.ring.one:
            order //= p
    return order


def _poly_mul_linear(poly, c):
    """(sum poly_k y^k) * (y + c)."""
    out = [c * poly[0]]
    for k in range(1, len(poly)):
        out.append(poly[k - 1] + c * poly[k])
    out.append(poly[-1])
    return out


@dataclass(frozen=True)
class TeichmullerCoords:
    a0: GaloisRingElement
    a1: GaloisRingElement
    a2: GaloisRingElement
    a3: GaloisRingElement

    def recompose(self) -> GaloisRingElement:
        ring = self.a0.ring
        two, u, two_u = ring.from_r(2), ring.from_r(pack(0, 1)), ring.from_r(pack(0, 2))
        return self.a0 + two * self.a1 + u * self.a2 + two_u * self.a3

    def as_tuple(self):
        return (self.a0, self.a1, self.a2, self.a3)


class GaloisRingElement:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GaloisRing, coeffs):
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def _wrap(self, other):
        if isinstance(other, GaloisRingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("elements of different Galois rings")
            return other
        if isinstance(other, int):
            return self.ring.from_r(pack(other))
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return GaloisRingElement(self.ring, tuple(_ADD[a][b] for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return GaloisRingElement(self.ring, tuple(R.neg[a] for a in self.coeffs))

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        r = self.ring.r
        out = [0] * (2 * r - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                row = _MUL[a]
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = _ADD[out[i + j]][row[b]]
        return self.ring._from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.ring.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_r(pack(other))
        if not isinstance(other, GaloisRingElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ring == other.ring

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def residue(self) -> int:
        """Image in F_{2^r} as a bitmask."""
        return sum((c & 1) << i for i, c in enumerate(self.coeffs))

    def split_u(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Z4 coordinate vectors (A, B) with self = A + uB."""
        return tuple(c & 3 for c in self.coeffs), tuple(c >> 2 for c in self.coeffs)

    def decompose(self) -> TeichmullerCoords:
        ring = self.ring
        A, B = self.split_u()
        coords = []
        for part in (A, B):
            bits = sum((c & 1) << i for i, c in enumerate(part))
            t0 = ring.teichmuller_lift(bits)
            # part - t0 is 2 * (something); halve coordinatewise
            rest = [(c - t) % 4 for c, t in zip(part, t0.coeffs)]
            if any(c & 1 for c in rest):
                raise AssertionError("Teichmuller residue mismatch")
            t1 = ring.teichmuller_lift(sum((c >> 1) << i for i, c in enumerate(rest)))
            coords += [t0, t1]
        return TeichmullerCoords(*coords)

    def is_unit(self) -> bool:
        return self.residue() != 0

    def inverse(self) -> GaloisRingElement:
        if not self.is_unit():
            raise NotAUnitError(f"{self} is not a unit (its Teichmuller coordinate a0 is 0)")
        a0 = self.decompose().a0
        a0_inv = a0 ** (self.ring.order - 1)
        w = a0_inv * self - self.ring.one
        return a0_inv * (self.ring.one - w + w * w)

    def frobenius(self) -> GaloisRingElement:
        t = self.decompose()
        return TeichmullerCoords(t.a0 * t.a0, t.a1 * t.a1, t.a2 * t.a2, t.a3 * t.a3).recompose()

    def in_base_ring(self) -> bool:
        return not any(self.coeffs[1:])

    def format(self, var: str = "ξ", paper_style: bool = False) -> str:
        return format_polynomial(self.coeffs, paper_style).replace("x", var)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"GaloisRingElement({self.format('xi')})"

    def to_json(self):
        return [list(unpack(c)) for c in self.coeffs]


@lru_cache(maxsize=32)
def _cached(r, modulus):
    return GaloisRing(r, modulus)


def gr_construct(r: int, modulus: Polynomial | str | None = None) -> GaloisRing:
    if isinstance(modulus, str):
        modulus = Polynomial.parse(modulus)
    return _cached(r, modulus)


def gr_arith(op: str, x: GaloisRingElement, y: GaloisRingElement) -> GaloisRingElement:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def gr_pow(x: GaloisRingElement, k: int) -> GaloisRingElement:
    return x**k


def teichmuller_decompose(x: GaloisRingElement) -> TeichmullerCoords:
    return x.decompose()


def gr_is_unit(x: GaloisRingElement) -> bool:
    return x.is_unit()


def gr_inverse(x: GaloisRingElement) -> GaloisRingElement:
    return x.inverse()


def frobenius(x: GaloisRingElement) -> GaloisRingElement:
    return x.frobenius()


def nth_roots(ctx: GaloisRing, n: int) -> list[GaloisRingElement]:
    return ctx.nth_roots(n)


def minimal_polynomial(ctx: GaloisRing, i: int, n: int) -> Polynomial:
    return ctx.minimal_polynomial(i, n)


def context_for_length(n: int, modulus: Polynomial | None = None) -> GaloisRing:
    """The smallest GR(R, r) holding a primitive n-th root of unity."""
    from .factor import extension_degree

    return gr_construct(extension_degree(n), modulus)

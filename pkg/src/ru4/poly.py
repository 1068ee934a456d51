"""Dense polynomials over F2, Z4 and R, and residues modulo x^n - 1.

Coefficients are the integer codes of :mod:`ru4.ring`, stored in ascending
degree order.  Both classes are immutable and hashable.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Sequence

from . import f2
from .ring import F2, R, Z4, BaseRing, RingElement, format_element, pack, parse_element, ring_by_name, unpack


class NotRegularError(ValueError):
    """The polynomial is a zero divisor in R[x] (its residue image mod <2,u> vanishes)."""


class NotCoprimeError(ValueError):
    pass


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _coerce_coeff(c, ring: BaseRing) -> int:
    """Plain ints are integers (reduced mod 4 or 2); pairs are (a, b)."""
    if isinstance(c, RingElement):
        c = c.code
    elif isinstance(c, (tuple, list)):
        c = pack(*c)
    elif ring is F2:
        c = c % 2
    else:
        c = pack(c)
    return ring.reduce(c)


def _check_same_ring(f, g):
    if f.ring is not g.ring:
        raise TypeError(f"mixed base rings: {f.ring} and {g.ring}")


class Polynomial:
    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable = (), ring: BaseRing | str = R):
        ring = ring_by_name(ring)
        self.ring = ring
        self.coeffs = _trim(_coerce_coeff(c, ring) for c in coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs, ring) -> Polynomial:
        p = cls.__new__(cls)
        p.ring = ring
        p.coeffs = _trim(coeffs)
        p._hash = None
        return p

    @classmethod
    def monomial(cls, k: int, ring=R, coeff: int = 1) -> Polynomial:
        ring = ring_by_name(ring)
        return cls._raw([0] * k + [coeff], ring)

    @classmethod
    def one(cls, ring=R) -> Polynomial:
        return cls._raw([1], ring_by_name(ring))

    @classmethod
    def zero(cls, ring=R) -> Polynomial:
        return cls._raw([], ring_by_name(ring))

    @classmethod
    def x_n_minus_1(cls, n: int, ring=R) -> Polynomial:
        ring = ring_by_name(ring)
        return cls._raw([ring.neg[1]] + [0] * (n - 1) + [1], ring)

    @classmethod
    def from_f2_int(cls, f: int, ring=F2) -> Polynomial:
        return cls._raw([(f >> i) & 1 for i in range(f.bit_length())], ring_by_name(ring))

    @classmethod
    def parse(cls, text: str, ring=R) -> Polynomial:
        return parse_polynomial(text, ring)

    # ------------------------------------------------------------------

    @property
    def degree(self) -> float | int:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def elements(self) -> list[RingElement]:
        return [RingElement.from_code(c) for c in self.coeffs]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def to_f2_int(self) -> int:
        """Reduce mod <2,u> (or mod 2) and pack into an int."""
        out = 0
        for i, c in enumerate(self.coeffs):
            if c & 1:
                out |= 1 << i
        return out

    def as_ring(self, ring) -> Polynomial:
        """Reinterpret (Z4 -> R, F2 -> Z4) or project (R -> Z4 -> F2)."""
        ring = ring_by_name(ring)
        return Polynomial._raw([ring.reduce(c) for c in self.coeffs], ring)

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other: Polynomial) -> Polynomial:
        _check_same_ring(self, other)
        add = self.ring.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add[out[i]][c]
        return Polynomial._raw(out, self.ring)

    def __neg__(self) -> Polynomial:
        neg = self.ring.neg
        return Polynomial._raw([neg[c] for c in self.coeffs], self.ring)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, RingElement)):
            return self.scale(other)
        _check_same_ring(self, other)
        if not self.coeffs or not other.coeffs:
            return Polynomial._raw([], self.ring)
        add, mul = self.ring.add, self.ring.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                row = mul[a]
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = add[out[i + j]][row[b]]
        return Polynomial._raw(out, self.ring)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> Polynomial:
        """Multiply by a scalar (an int is read as an integer, not a code)."""
        return self.scale_code(_coerce_coeff(c, self.ring))

    def scale_code(self, code: int) -> Polynomial:
        row = self.ring.mul[code]
        return Polynomial._raw([row[x] for x in self.coeffs], self.ring)

    def shift(self, k: int) -> Polynomial:
        return Polynomial._raw([0] * k + list(self.coeffs), self.ring)

    def __pow__(self, e: int) -> Polynomial:
        out = Polynomial.one(self.ring)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation at any object supporting + and * with ints."""
        acc = None
        for c in reversed(self.coeffs):
            term = RingElement.from_code(c) if self.ring is not F2 else c
            acc = term if acc is None else acc * x + term
        return 0 if acc is None else acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.name, self.coeffs))
        return self._hash

    def __str__(self):
        return format_polynomial(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self}, ring={self.ring})"

    def to_json(self) -> dict:
        return {"ring": self.ring.name, "coeffs": [list(unpack(c)) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> Polynomial:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls([tuple(c) for c in obj["coeffs"]], obj.get("ring", "R"))


# --------------------------------------------------------------------------
# text form

_TERM_RE = re.compile(
    r"^(?:\((?P<paren>[^()]*)\)|(?P<num>\d*)(?P<u>u?))\s*\*?\s*(?:(?P<x>x)(?:\^(?P<exp>\d+))?)?$"
)


def _split_terms(s: str) -> list[tuple[int, str]]:
    terms, depth, start, sign = [], 0, 0, 1
    i = 0
    if s and s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        start = i = 1
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            terms.append((sign, s[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
        i += 1
    terms.append((sign, s[start:]))
    return terms


def parse_polynomial(text: str, ring=R) -> Polynomial:
    """Parse ``x^3+2x^2+x+3``, ``(1+u)x+1``, ``3ux^2``; '-' normalises mod 4."""
    ring = ring_by_name(ring)
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    acc: dict[int, list[int]] = {}
    for sign, term in _split_terms(s):
        m = _TERM_RE.match(term)
        if not term or not m:
            raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
        if m.group("paren") is not None:
            a, b = unpack(parse_element(m.group("paren")))
        elif m.group("num") or m.group("u"):
            k = int(m.group("num")) if m.group("num") else 1
            a, b = (0, k) if m.group("u") else (k, 0)
        elif m.group("x"):
            a, b = 1, 0
        else:
            raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
        if m.group("x"):
            e = int(m.group("exp")) if m.group("exp") else 1
        else:
            e = 0
        if b and ring is not R:
            raise ValueError(f"u-coefficient in a polynomial over {ring}")
        slot = acc.setdefault(e, [0, 0])
        slot[0] += sign * a
        slot[1] += sign * b
    top = max(acc)
    coeffs = [0] * (top + 1)
    for e, (a, b) in acc.items():
        coeffs[e] = pack(a, b) if ring is not F2 else a % 2
    return Polynomial._raw(coeffs, ring)


def _coeff_text(c: int, paper_style: bool) -> tuple[str, str]:
    """(sign, body) for coefficient code c multiplying a power of x."""
    a, b = unpack(c)
    if paper_style and b == 0 and a == 3:
        return "-", ""
    if c == 1:
        return "+", ""
    body = format_element(c)
    if a and b:
        body = f"({body})"
    return "+", body


def format_polynomial(coeffs: Sequence[int], paper_style: bool = False) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            text = format_element(c, paper_style)
            sign, body = ("-", text[1:]) if text.startswith("-") else ("+", text)
        else:
            sign, body = _coeff_text(c, paper_style)
            body += "x" if k == 1 else f"x^{k}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


# --------------------------------------------------------------------------
# residues mod x^n - 1


class ResiduePolynomial:
    """An element of (base)[x]/<x^n - 1>, stored as exactly n coefficients."""

    __slots__ = ("n", "ring", "coeffs", "_hash")

    def __init__(self, n: int, coeffs=(), ring=R):
        if n < 1:
            raise ValueError("length must be positive")
        if isinstance(coeffs, Polynomial):
            ring = coeffs.ring
            codes = coeffs.coeffs
        else:
            ring = ring_by_name(ring)
            codes = [_coerce_coeff(c, ring) for c in coeffs]
        vals = [0] * n
        add = ring.add
        for i, c in enumerate(codes):
            vals[i % n] = add[vals[i % n]][c]
        self.n = n
        self.ring = ring
        self.coeffs = tuple(vals)
        self._hash = None

    @classmethod
    def _raw(cls, n, coeffs, ring):
        p = cls.__new__(cls)
        p.n, p.ring, p.coeffs, p._hash = n, ring, tuple(coeffs), None
        return p

    @classmethod
    def parse(cls, n: int, text: str, ring=R) -> ResiduePolynomial:
        return cls(n, parse_polynomial(text, ring))

    @classmethod
    def one(cls, n, ring=R):
        ring = ring_by_name(ring)
        return cls._raw(n, [1] + [0] * (n - 1), ring)

    @classmethod
    def zero(cls, n, ring=R):
        return cls._raw(n, [0] * n, ring_by_name(ring))

    def lift(self) -> Polynomial:
        """Representative of degree < n."""
        return Polynomial._raw(self.coeffs, self.ring)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("residues of different lengths")
        _check_same_ring(self, other)

    def __add__(self, other):
        self._check(other)
        add = self.ring.add
        return ResiduePolynomial._raw(self.n, [add[a][b] for a, b in zip(self.coeffs, other.coeffs)], self.ring)

    def __neg__(self):
        neg = self.ring.neg
        return ResiduePolynomial._raw(self.n, [neg[a] for a in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, RingElement)):
            return self.scale(other)
        self._check(other)
        n = self.n
        add, mul = self.ring.add, self.ring.mul
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                row = mul[a]
                for j, b in enumerate(other.coeffs):
                    if b:
                        k = i + j
                        if k >= n:
                            k -= n
                        out[k] = add[out[k]][row[b]]
        return ResiduePolynomial._raw(n, out, self.ring)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        return self.scale_code(_coerce_coeff(c, self.ring))

    def scale_code(self, code: int):
        row = self.ring.mul[code]
        return ResiduePolynomial._raw(self.n, [row[a] for a in self.coeffs], self.ring)

    def shift(self, k: int = 1) -> ResiduePolynomial:
        """Multiply by x^k (the cyclic shift, applied k times)."""
        k %= self.n
        c = self.coeffs
        return ResiduePolynomial._raw(self.n, c[-k:] + c[:-k] if k else c, self.ring)

    def __pow__(self, e: int):
        out = ResiduePolynomial.one(self.n, self.ring)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def reciprocal(self) -> ResiduePolynomial:
        """Substitute x -> x^{-1} = x^{n-1}."""
        n = self.n
        return ResiduePolynomial._raw(n, [self.coeffs[(-k) % n] for k in range(n)], self.ring)

    def as_ring(self, ring) -> ResiduePolynomial:
        ring = ring_by_name(ring)
        return ResiduePolynomial._raw(self.n, [ring.reduce(c) for c in self.coeffs], ring)

    def __eq__(self, other):
        if not isinstance(other, ResiduePolynomial):
            return NotImplemented
        return self.n == other.n and self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.ring.name, self.coeffs))
        return self._hash

    def __str__(self):
        return format_polynomial(self.coeffs)

    def __repr__(self):
        return f"ResiduePolynomial(n={self.n}, {self}, ring={self.ring})"

    def to_json(self) -> dict:
        return {"n": self.n, "ring": self.ring.name, "coeffs": [list(unpack(c)) for c in self.coeffs]}


# --------------------------------------------------------------------------
# projections and regularity


def proj_mod_u(f):
    """Kill the u-part of every coefficient: R[x] -> Z4[x]."""
    if f.ring is not R:
        raise TypeError("proj_mod_u expects a polynomial over R")
    return f.as_ring(Z4)


def proj_mod_maximal(f):
    """Image modulo <2,u> (or modulo 2 for Z4 input) in F2[x]."""
    return f.as_ring(F2)


def is_regular(f: Polynomial) -> bool:
    return any(c & 1 for c in f.coeffs)


# --------------------------------------------------------------------------
# division


def divmod_monic(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Ordinary long division by a polynomial whose leading coefficient is a unit."""
    _check_same_ring(f, g)
    ring = f.ring
    if g.is_zero() or not ring.is_unit(g.lead):
        raise ValueError("divisor must have a unit leading coefficient")
    add, mul, neg = ring.add, ring.mul, ring.neg
    inv = ring.inv[g.lead]
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return Polynomial.zero(ring), f
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if not c:
            continue
        t = mul[c][inv]
        q[k - dg] = t
        nt = neg[t]
        row = mul[nt]
        for i, gc in enumerate(g.coeffs):
            r[k - dg + i] = add[r[k - dg + i]][row[gc]]
    return Polynomial._raw(q, ring), Polynomial._raw(r[:dg], ring)


def unit_inverse(v: Polynomial) -> Polynomial:
    """Inverse of a unit of R[x] (unit constant term, nilpotent elsewhere).

    With c the constant term and w = c^{-1} v - 1 nilpotent, w^3 = 0 because
    <2,u>^3 = 0, so v^{-1} = c^{-1}(1 - w + w^2).
    """
    ring = v.ring
    c = v.coefficient(0)
    if not ring.is_unit(c) or any(x & 1 for x in v.coeffs[1:]):
        raise ValueError(f"{v} is not a unit of {ring}[x]")
    cinv = ring.inv[c]
    one = Polynomial.one(ring)
    w = v.scale_code(cinv) - one
    return (one - w + w * w).scale_code(cinv)


def monic_associate(f: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Split a regular f as v * fstar with v a unit of R[x] and fstar monic.

    Hensel-style correction starting from the top unit coefficient; each pass
    pushes the error one power of <2,u> deeper, so three passes suffice.
    """
    if not is_regular(f):
        raise NotRegularError(f"{f} is not regular")
    ring = f.ring
    d = max(i for i, c in enumerate(f.coeffs) if c & 1)
    c = f.coeffs[d]
    cinv = ring.inv[c]
    v = Polynomial._raw([c], ring)
    fstar = Polynomial._raw([ring.mul[x][cinv] for x in f.coeffs[:d]] + [1], ring)
    for _ in range(4):
        err = f - v * fstar
        if err.is_zero():
            return v, fstar
        q, r = divmod_monic(err.scale_code(cinv), fstar)
        fstar = fstar + r
        v = v + q.scale_code(c)
    raise AssertionError("monic associate did not converge")


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """f = g*q + r with deg r < deg g, for regular g."""
    _check_same_ring(f, g)
    if not is_regular(g):
        raise NotRegularError(f"divisor {g} is not regular")
    if g.ring is F2 or g.ring.is_unit(g.lead):
        return divmod_monic(f, g)
    v, gstar = monic_associate(g)
    q1, r = divmod_monic(f, gstar)
    return unit_inverse(v) * q1, r


# --------------------------------------------------------------------------
# Bezout


def f2_poly(f: Polynomial) -> int:
    return f.to_f2_int()


def bezout_lift(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """A, B with A f + B g = 1 exactly, when the residue images are coprime.

    Extended Euclid over F2, lift, then divide out 1 + t where
    t = A f + B g - 1 lies in <2,u>[x] (so t^3 = 0).
    """
    _check_same_ring(f, g)
    ring = f.ring
    d, s, t = f2.xgcd(f.to_f2_int(), g.to_f2_int())
    if d != 1:
        raise NotCoprimeError(f"{f} and {g} are not coprime: residue gcd {f2.to_str(d)}")
    A = Polynomial.from_f2_int(s, ring)
    B = Polynomial.from_f2_int(t, ring)
    if ring is F2:
        return A, B
    one = Polynomial.one(ring)
    err = A * f + B * g - one
    corr = one - err + err * err
    return A * corr, B * corr


def reciprocal(f):
    """x^{deg f} f(1/x) for plain polynomials; x -> x^{n-1} for residues."""
    if isinstance(f, ResiduePolynomial):
        return f.reciprocal()
    return Polynomial._raw(tuple(reversed(f.coeffs)), f.ring)


def poly_arith(op: str, f, g):
    ops = {"add": lambda: f + g, "sub": lambda: f - g, "mul": lambda: f * g}
    try:
        return ops[op]()
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def product(polys, ring=R) -> Polynomial:
    out = Polynomial.one(ring)
    for p in polys:
        out = out * p
    return out

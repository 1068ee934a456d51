"""Binary polynomials packed into Python ints (bit i = coefficient of x^i).

Also the finite field F_{2^r} on top of them.  Everything over F2 in the
package goes through here; the Polynomial class converts at the boundary.
"""

from __future__ import annotations

from functools import lru_cache


def deg(f: int) -> int:
    return f.bit_length() - 1


def mul(f: int, g: int) -> int:
    out = 0
    while g:
        if g & 1:
            out ^= f
        f <<= 1
        g >>= 1
    return out


def divmod_(f: int, g: int) -> tuple[int, int]:
    if g == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    dg = deg(g)
    while f and deg(f) >= dg:
        s = deg(f) - dg
        q ^= 1 << s
        f ^= g << s
    return q, f


def mod(f: int, g: int) -> int:
    return divmod_(f, g)[1]


def gcd(f: int, g: int) -> int:
    while g:
        f, g = g, mod(f, g)
    return f


def xgcd(f: int, g: int) -> tuple[int, int, int]:
    """Return (d, s, t) with s*f + t*g = d = gcd(f, g)."""
    r0, r1 = f, g
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ mul(q, s1)
        t0, t1 = t1, t0 ^ mul(q, t1)
    return r0, s0, t0


def mulmod(f: int, g: int, m: int) -> int:
    return mod(mul(f, g), m)


def powmod(f: int, e: int, m: int) -> int:
    result = 1 if deg(m) > 0 else 0
    f = mod(f, m)
    while e:
        if e & 1:
            result = mulmod(result, f, m)
        f = mulmod(f, f, m)
        e >>= 1
    return result


def prime_factors(k: int) -> list[int]:
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


def is_irreducible(f: int) -> bool:
    """Rabin's test."""
    d = deg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    x = 0b10
    if powmod(x, 1 << d, f) != mod(x, f):
        return False
    for p in prime_factors(d):
        h = powmod(x, 1 << (d // p), f) ^ x
        if gcd(h, f) != 1:
            return False
    return True


def order_of_x(f: int) -> int:
    """Multiplicative order of x modulo an irreducible f with f(0) = 1."""
    d = deg(f)
    group = (1 << d) - 1
    order = group
    for p in prime_factors(group):
        while order % p == 0 and powmod(0b10, order // p, f) == 1:
            order //= p
    return order


def is_primitive(f: int) -> bool:
    d = deg(f)
    if not is_irreducible(f):
        return False
    if d == 1:
        # x+1 generates F2^* (order 1 = 2^1 - 1); x itself is not usable
        return f == 0b11
    return order_of_x(f) == (1 << d) - 1


@lru_cache(maxsize=None)
def default_primitive(r: int) -> int:
    """Smallest primitive polynomial of degree r (by integer encoding)."""
    if r < 1:
        raise ValueError("degree must be at least 1")
    for f in range((1 << r) | 1, 1 << (r + 1), 2):
        if is_primitive(f):
            return f
    raise AssertionError("no primitive polynomial found")


def to_str(f: int) -> str:
    if f == 0:
        return "0"
    terms = []
    for i in range(deg(f), -1, -1):
        if f >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


class GF2m:
    """F_{2^r} = F2[x]/<modulus>; elements are ints below 2^r."""

    def __init__(self, r: int, modulus: int | None = None):
        self.r = r
        self.modulus = default_primitive(r) if modulus is None else modulus
        if deg(self.modulus) != r or not is_irreducible(self.modulus):
            raise ValueError("modulus must be irreducible of degree r")
        self.q = 1 << r

    def mul(self, a: int, b: int) -> int:
        return mulmod(a, b, self.modulus)

    def pow(self, a: int, e: int) -> int:
        return powmod(a, e, self.modulus)

    def generator(self) -> int:
        """A primitive element (x itself when the modulus is primitive)."""
        group = self.q - 1
        primes = prime_factors(group) if group > 1 else []
        for g in range(2 if self.r > 1 else 1, self.q):
            if all(self.pow(g, group // p) != 1 for p in primes):
                return g
        raise AssertionError("F_{2^r}^* has no generator")

    def poly_mul(self, f: list[int], g: list[int]) -> list[int]:
        """Multiply polynomials with coefficients in this field (ascending lists)."""
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    if b:
                        out[i + j] ^= self.mul(a, b)
        return out


def multiplicative_order(base: int, n: int) -> int:
    """Order of ``base`` modulo n (n >= 1, gcd(base, n) = 1)."""
    if n == 1:
        return 1
    k, acc = 1, base % n
    while acc != 1:
        acc = acc * base % n
        k += 1
    return k

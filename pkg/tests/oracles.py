"""Independent reference implementations used only by the tests.

Nothing here imports the package's arithmetic: elements of R are plain
(a, b) pairs, polynomials are lists of pairs, and ideals are closed by
breadth-first search over explicit codeword sets.
"""

from __future__ import annotations

import itertools


def rmul(x, y):
    a, b = x
    c, d = y
    return ((a * c) % 4, (a * d + b * c) % 4)


def radd(x, y):
    return ((x[0] + y[0]) % 4, (x[1] + y[1]) % 4)


R_ELEMENTS = [(a, b) for b in range(4) for a in range(4)]


def word_mulmod(f, g, n):
    """Product of two length-n words (lists of pairs) in R[x]/<x^n - 1>."""
    out = [(0, 0)] * n
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            k = (i + j) % n
            out[k] = radd(out[k], rmul(x, y))
    return out


def shift(w):
    return [w[-1]] + w[:-1]


def word_add(f, g):
    return [radd(x, y) for x, y in zip(f, g)]


def ideal_closure(gens, n, cap=1 << 16):
    """Smallest set containing gens closed under +, x-shift and u-multiplication."""
    zero = tuple([(0, 0)] * n)
    basis = []
    for g in gens:
        w = list(g)
        for _ in range(n):
            basis.append(tuple(w))
            basis.append(tuple((0, a) for a, _ in w))  # u * w
            w = shift(w)
    basis = [b for b in basis if b != zero]
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for s in frontier:
            for b in basis:
                t = tuple(radd(x, y) for x, y in zip(s, b))
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
                    if len(seen) > cap:
                        raise OverflowError("closure too large")
        frontier = nxt
    return frozenset(seen)


def inner(v, w):
    acc = (0, 0)
    for x, y in zip(v, w):
        acc = radd(acc, rmul(x, y))
    return acc


def brute_dual(code_set, n):
    return frozenset(
        v for v in itertools.product(R_ELEMENTS, repeat=n) if all(inner(v, c) == (0, 0) for c in code_set)
    )


def lee_z4(x):
    return (0, 1, 2, 1)[x % 4]


def gray(word):
    """b-vector followed by (a+b)-vector."""
    return [b for _, b in word] + [(a + b) % 4 for a, b in word]


def lee_word(word):
    return sum(lee_z4(x) for x in gray(word))


# polynomials over Z4 as ascending int lists


def z4_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % 4
    return out


def z4_rem_monic(f, m):
    f = [c % 4 for c in f]
    d = len(m) - 1
    while len(f) > d:
        c = f.pop()
        for i in range(d):
            f[len(f) - d + i] = (f[len(f) - d + i] - c * m[i]) % 4
    return f + [0] * (d - len(f))


def power_table(modulus, top):
    """x^k mod modulus over Z4 for k = 0..top (ascending coefficient lists)."""
    out = []
    cur = [1]
    for _ in range(top + 1):
        out.append(z4_rem_monic(cur, modulus))
        cur = [0] + out[-1]
    return out


def f2_order_of_x(modulus_bits):
    """Order of x in F2[x]/<modulus> by repeated multiplication."""
    d = modulus_bits.bit_length() - 1
    cur, k = 0b10, 1
    while cur != 1:
        cur <<= 1
        if cur >> d & 1:
            cur ^= modulus_bits
        k += 1
        if k > (1 << d):
            return None
    return k

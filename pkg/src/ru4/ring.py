"""Arithmetic in R = Z4 + uZ4 (u^2 = 0), its seven ideals, and the Gray map.

Internally an element a+ub is packed into the integer code ``a + 4*b``
(0..15).  Z4 residues 0..3 are exactly the codes with b = 0 and F2 residues
0..1 are a subset of those, so coefficient lists move between the three base
rings without conversion.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import total_ordering

LEE_Z4 = (0, 1, 2, 1)


def pack(a: int, b: int = 0) -> int:
    return (a % 4) + 4 * (b % 4)


def unpack(code: int) -> tuple[int, int]:
    return code & 3, code >> 2


def _rmul(x: int, y: int) -> int:
    a, b = unpack(x)
    c, d = unpack(y)
    return pack(a * c, a * d + b * c)


def _radd(x: int, y: int) -> int:
    a, b = unpack(x)
    c, d = unpack(y)
    return pack(a + c, b + d)


class BaseRing:
    """One of the three coefficient rings, as lookup tables over codes.

    ``R``, ``Z4`` and ``F2`` are the only instances.
    """

    def __init__(self, name, size, add, mul):
        self.name = name
        self.size = size
        self.elements = tuple(range(size))
        self.add = tuple(tuple(add(x, y) for y in range(size)) for x in range(size))
        self.mul = tuple(tuple(mul(x, y) for y in range(size)) for x in range(size))
        self.neg = tuple(next(y for y in range(size) if self.add[x][y] == 0) for x in range(size))
        inv = {}
        for x in range(size):
            for y in range(size):
                if self.mul[x][y] == 1:
                    inv[x] = y
        self.inv = inv

    def is_unit(self, x: int) -> bool:
        return x in self.inv

    def reduce(self, code: int) -> int:
        """Map a code from a larger ring onto this one (the natural projection)."""
        if self.name == "R":
            return code
        if self.name == "Z4":
            return code & 3
        return code & 1

    def sub(self, x, y):
        return self.add[x][self.neg[y]]

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (ring_by_name, (self.name,))


R = BaseRing("R", 16, _radd, _rmul)
Z4 = BaseRing("Z4", 4, lambda x, y: (x + y) % 4, lambda x, y: (x * y) % 4)
F2 = BaseRing("F2", 2, lambda x, y: x ^ y, lambda x, y: x & y)

_RINGS = {"R": R, "Z4": Z4, "F2": F2}


def ring_by_name(name) -> BaseRing:
    if isinstance(name, BaseRing):
        return name
    try:
        return _RINGS[name.upper()]
    except KeyError:
        raise ValueError(f"unknown ring {name!r}; expected one of R, Z4, F2") from None


@total_ordering
@dataclass(frozen=True)
class RingElement:
    """An element a + ub of R with a, b taken mod 4."""

    a: int
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % 4)
        object.__setattr__(self, "b", self.b % 4)

    @classmethod
    def from_code(cls, code: int) -> RingElement:
        return cls(*unpack(code))

    @classmethod
    def parse(cls, text: str) -> RingElement:
        return cls.from_code(parse_element(text))

    @property
    def code(self) -> int:
        return pack(self.a, self.b)

    def _coerce(self, other):
        if isinstance(other, RingElement):
            return other
        if isinstance(other, int):
            return RingElement(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __lt__(self, other):
        return self.code < other.code

    def is_unit(self) -> bool:
        return self.a % 2 == 1

    def __str__(self):
        return format_element(self.code)

    def __repr__(self):
        return f"RingElement({self})"


def r_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def r_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def r_sub(x: RingElement, y: RingElement) -> RingElement:
    return x - y


def r_neg(x: RingElement) -> RingElement:
    return -x


class NotAUnitError(ArithmeticError):
    """Raised when inverting a non-unit of R (or of an extension of R)."""


def r_inverse(x: RingElement) -> RingElement:
    if not x.is_unit():
        raise NotAUnitError(f"{x} is not a unit (it lies in the ideal {r_classify(x).label})")
    return RingElement.from_code(R.inv[x.code])


# --------------------------------------------------------------------------
# ideals


class IdealTag(enum.Enum):
    ZERO = "0"
    TWO_U = "<2u>"
    U = "<u>"
    TWO = "<2>"
    TWO_PLUS_U = "<2+u>"
    MAXIMAL = "<2,u>"
    UNIT = "R"


def _span(*generators: int) -> frozenset:
    """Ideal of R generated by the given codes."""
    out = {0}
    frontier = [0]
    gens = [R.mul[g][s] for g in generators for s in R.elements]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = R.add[x][g]
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


_IDEAL_GENERATORS = {
    IdealTag.ZERO: (),
    IdealTag.TWO_U: (pack(0, 2),),
    IdealTag.U: (pack(0, 1),),
    IdealTag.TWO: (pack(2),),
    IdealTag.TWO_PLUS_U: (pack(2, 1),),
    IdealTag.MAXIMAL: (pack(2), pack(0, 1)),
    IdealTag.UNIT: (pack(1),),
}


@dataclass(frozen=True)
class IdealOfR:
    tag: IdealTag
    elements: frozenset

    @property
    def label(self) -> str:
        return self.tag.value

    @property
    def generators(self) -> tuple[RingElement, ...]:
        return tuple(RingElement.from_code(c) for c in _IDEAL_GENERATORS[self.tag])

    def __contains__(self, x) -> bool:
        if isinstance(x, RingElement):
            x = x.code
        return x in self.elements

    def __le__(self, other: IdealOfR) -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: IdealOfR) -> bool:
        return self.elements < other.elements

    def comparable(self, other: IdealOfR) -> bool:
        return self <= other or other <= self

    def __len__(self):
        return len(self.elements)


IDEALS = {tag: IdealOfR(tag, _span(*gens)) for tag, gens in _IDEAL_GENERATORS.items()}


def list_ideals() -> list[IdealOfR]:
    """The seven ideals of R, smallest first."""
    return sorted(IDEALS.values(), key=lambda i: (len(i.elements), i.tag.value))


def r_classify(x: RingElement) -> IdealOfR:
    """Smallest ideal of R containing ``x``."""
    return IDEALS[min((i for i in IDEALS.values() if x.code in i.elements), key=len).tag]


# --------------------------------------------------------------------------
# Gray map


@dataclass(frozen=True)
class GrayPair:
    first: int
    second: int

    def lee_weight(self) -> int:
        return LEE_Z4[self.first] + LEE_Z4[self.second]


def gray_symbol(x: RingElement) -> GrayPair:
    return GrayPair(x.b, (x.a + x.b) % 4)


def lee_weight(x: RingElement) -> int:
    return gray_symbol(x).lee_weight()


# per-code tables used by the vectorised code routines
GRAY_TABLE = tuple((unpack(c)[1], (unpack(c)[0] + unpack(c)[1]) % 4) for c in range(16))
LEE_TABLE = tuple(LEE_Z4[p] + LEE_Z4[q] for p, q in GRAY_TABLE)


# --------------------------------------------------------------------------
# text form

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(u?)")


def format_element(code: int, paper_style: bool = False) -> str:
    a, b = unpack(code)
    if paper_style and b == 0 and a == 3:
        return "-1"
    if b == 0:
        return str(a)
    ub = "u" if b == 1 else f"{b}u"
    return ub if a == 0 else f"{a}+{ub}"


def parse_element(text: str) -> int:
    """Parse "2+3u", "3u", "-1", "1-u" ... into a code."""
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty ring element")
    a = b = 0
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse ring element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and not m.group(1):
            raise ValueError(f"cannot parse ring element {text!r}")
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            b += sign * coef
        else:
            a += sign * coef
        pos = m.end()
    return pack(a, b)

"""Exact scalars over Z, Q, Z/n and F_p.

Matrices store raw Python values (``int`` or ``Fraction``) already
normalized by their ring; :class:`Scalar` is the boxed form used at API
boundaries.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import BadSpec, NoInverse

INTEGER = "Z"
RATIONAL = "Q"
MODULAR = "Zn"
PRIME = "Fp"


class _Infinite:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Infinite"

    def __bool__(self):
        return False


#: Returned by :func:`enumerate_ring` for Z and Q.
Infinite = _Infinite()


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class Ring:
    """Base ring descriptor.

    ``kind`` is one of ``"Z"``, ``"Q"``, ``"Zn"``, ``"Fp"``; ``modulus`` is
    0 for Z and Q. ``Ring("Fp", 5) != Ring("Zn", 5)`` even though the
    arithmetic agrees.
    """

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind in (INTEGER, RATIONAL):
            if self.modulus != 0:
                raise BadSpec(f"{self.kind} takes no modulus")
        elif self.kind == MODULAR:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise BadSpec(f"modulus must be >= 2, got {self.modulus}")
        elif self.kind == PRIME:
            if not isinstance(self.modulus, int) or not is_prime(self.modulus):
                raise BadSpec(f"Fp needs a prime, got {self.modulus}")
        else:
            raise BadSpec(f"unknown ring kind {self.kind!r}")

    def __str__(self):
        if self.modulus:
            return f"{self.kind}:{self.modulus}"
        return self.kind

    @property
    def is_field(self):
        return self.kind in (RATIONAL, PRIME)

    @property
    def is_finite(self):
        return self.modulus != 0

    def normalize(self, v):
        if self.kind == RATIONAL:
            if isinstance(v, str):
                v = Fraction(v)
            return Fraction(v)
        if isinstance(v, Fraction):
            if v.denominator != 1:
                if not self.modulus:
                    raise BadSpec(f"{v} is not an integer")
                return (v.numerator * invert_int(v.denominator, self.modulus)) % self.modulus
            v = v.numerator
        if isinstance(v, str):
            v = int(v)
        if not isinstance(v, int) or isinstance(v, bool):
            raise BadSpec(f"bad scalar {v!r}")
        return v % self.modulus if self.modulus else v

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONAL else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONAL else 1

    def add(self, a, b):
        return (a + b) % self.modulus if self.modulus else a + b

    def sub(self, a, b):
        return (a - b) % self.modulus if self.modulus else a - b

    def mul(self, a, b):
        return (a * b) % self.modulus if self.modulus else a * b

    def neg(self, a):
        return (-a) % self.modulus if self.modulus else -a

    def inv(self, a):
        if self.kind == RATIONAL:
            if a == 0:
                raise NoInverse("0 has no inverse in Q")
            return 1 / Fraction(a)
        if self.kind == INTEGER:
            if a in (1, -1):
                return a
            raise NoInverse(f"{a} is not a unit of Z")
        return invert_int(a, self.modulus)

    def is_unit(self, a):
        try:
            self.inv(a)
        except NoInverse:
            return False
        return True

    def elements(self):
        if not self.modulus:
            return Infinite
        return list(range(self.modulus))


def invert_int(a, n):
    g, s, _ = xgcd(a % n, n)
    if g != 1:
        raise NoInverse(f"{a} is not invertible mod {n}")
    return s % n


ZZ = Ring(INTEGER)
QQ = Ring(RATIONAL)


def Zn(n):
    return Ring(MODULAR, n)


def Fp(p):
    return Ring(PRIME, p)


def parse_ring(text):
    """Parse ``"Z"``, ``"Q"``, ``"Zn:<n>"`` or ``"Fp:<p>"``."""
    if isinstance(text, Ring):
        return text
    if not isinstance(text, str):
        raise BadSpec(f"ring descriptor must be a string, got {text!r}")
    text = text.strip()
    if text == INTEGER:
        return ZZ
    if text == RATIONAL:
        return QQ
    kind, sep, rest = text.partition(":")
    if not sep or kind not in (MODULAR, PRIME):
        raise BadSpec(f"unknown ring descriptor {text!r}")
    try:
        m = int(rest)
    except ValueError:
        raise BadSpec(f"bad modulus in {text!r}") from None
    return Ring(kind, m)


@total_ordering
class Scalar:
    """An element of a :class:`Ring`, immutable and canonically reduced."""

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", ring.normalize(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise BadSpec(f"ring mismatch: {self.ring} vs {other.ring}")
            return other.value
        return self.ring.normalize(other)

    def __add__(self, other):
        return Scalar(self.ring, self.ring.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.ring, self.ring.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return Scalar(self.ring, self.ring.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return Scalar(self.ring, self.ring.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.ring, self.ring.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.value == other.value
        try:
            return self.value == self.ring.normalize(other)
        except BadSpec:
            return NotImplemented

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return f"Scalar({self.ring}, {self.value})"

    def __str__(self):
        return str(self.value)


def invert(x):
    """Multiplicative inverse of ``x``; raises :class:`NoInverse` for non-units."""
    return Scalar(x.ring, x.ring.inv(x.value))


def enumerate_ring(ring):
    """All elements of a finite ring in the order 0, 1, ..., n-1, else ``Infinite``."""
    elems = ring.elements()
    if elems is Infinite:
        return Infinite
    return [Scalar(ring, v) for v in elems]

"""Exact base fields: prime fields F_p (p != 2, 3) and the rationals.

Scalars are plain Python objects: residues ``int`` in ``[0, p)`` for prime
fields, ``fractions.Fraction`` for the rationals.  A field object supplies
the arithmetic, so the rest of the package never touches ``%`` or
``Fraction`` directly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CharTwoOrThree, NoOmega, NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic Miller-Rabin, valid far beyond the primes used here
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """Arithmetic of F_p, with p prime and p not 2 or 3."""

    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p in (2, 3):
            raise CharTwoOrThree("characteristic 2 and 3 are excluded")
        self.p = p
        self.has_omega = p % 3 == 1
        self.zero = 0
        self.one = 1
        self._omega = None

    def of(self, n) -> int:
        if isinstance(n, Fraction):
            return self.mul(n.numerator % self.p, self.inv(n.denominator % self.p))
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def omega(self) -> int:
        """Smallest residue that is a primitive cube root of unity."""
        if not self.has_omega:
            raise NoOmega(f"F_{self.p} has no primitive cube root of unity")
        if self._omega is None:
            self._omega = next(
                a for a in range(2, self.p) if pow(a, 3, self.p) == 1
            )
        return self._omega

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """Arithmetic of Q via fractions.Fraction (always canonical)."""

    kind = "rational"
    p = 0
    has_omega = False

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def of(self, n) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def omega(self):
        raise NoOmega("the rationals contain no primitive cube root of unity")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


def make_field(kind: str, p: int | None = None):
    """Build a field: make_field("prime", p) or make_field("rational")."""
    if kind == "prime":
        if p is None:
            raise NotPrime("prime field needs a modulus")
        return PrimeField(p)
    if kind == "rational":
        return RationalField()
    raise ValueError(f"unknown field kind {kind!r}")


#: Default primes: all are 1 mod 3 (omega exists) and exceed 9 = dim C/mC,
#: which the trace-form radical characterization requires.
DEFAULT_PRIMES = (13, 31, 10009)

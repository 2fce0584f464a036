"""Exact field arithmetic over the rationals and over odd prime fields.

Two backends share one immutable element type: arbitrary-precision
rationals (backed by :class:`fractions.Fraction`) and prime fields F_p
for an odd prime p (residues in ``[0, p-1]``). Everything is exact;
no floating point is used anywhere.

Field specs and element values have a stable string form used at every
I/O boundary:

    field spec:   "Q"             the rational numbers
                  "Fp:<prime>"    the prime field F_p, p an odd prime
    element:      "<int>" or "<int>/<int>"   over Q (normalized on ingest)
                  "<int>"                    over F_p (reduced mod p)

Values are decimal strings at the boundary because elements routinely
exceed native machine integers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    EvenOrSmallModulusError,
    ModulusOutOfRangeError,
    NotPrimeError,
    ParseError,
    SpecMismatchError,
)

RATIONALS = "rationals"
PRIME_FIELD = "prime-field"

# Witnesses 2..37 make Miller-Rabin deterministic for every candidate
# below this limit (comfortably past 64 bits).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981

_LITERAL_RE = re.compile(r"(-?\d+)(?:/(-?\d+))?")
_FIELD_SPEC_RE = re.compile(r"Fp:(\d+)")


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n`` below roughly 3.3e24.

    Uses Miller-Rabin with a fixed witness set known to be exact in that
    range. Larger inputs are rejected rather than answered
    probabilistically.

    Raises:
        ModulusOutOfRangeError: if ``n`` is beyond the deterministic range.
    """
    if n >= _MR_LIMIT:
        raise ModulusOutOfRangeError(
            f"deterministic primality check only covers n < {_MR_LIMIT}; got {n}"
        )
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _sqrt_mod_prime(a: int, p: int) -> int | None:
    """Square root of ``a`` modulo an odd prime ``p``, or None.

    Returns some root r with r*r = a (mod p); callers canonicalize.
    Uses the exponentiation shortcut for p = 3 (mod 4) and Tonelli-Shanks
    otherwise.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)

    # Tonelli-Shanks: write p - 1 = q * 2^s with q odd.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, square = 0, t
        while square != 1:
            square = square * square % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        t = t * b * b % p
        c = b * b % p
        m = i
    return r


@dataclass(frozen=True)
class FieldSpec:
    """Identifies a field: the rationals, or F_p for an odd prime p.

    Two specs are equal exactly when kind and modulus match. Use
    :func:`make_field`, :func:`rationals`, or :func:`prime_field` to
    construct validated instances.
    """

    kind: str
    modulus: int | None = None

    @property
    def is_rationals(self) -> bool:
        return self.kind == RATIONALS

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def element(self, value) -> "FieldElement":
        """Coerce ``value`` into this field.

        Accepts an existing element of the same field, an int, a
        Fraction (reduced into F_p when the denominator is invertible),
        or a string literal in the boundary grammar.
        """
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatchError(
                    f"element of {value.spec} used where {self} was expected"
                )
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a field value")
        if isinstance(value, int):
            if self.is_rationals:
                return FieldElement(self, Fraction(value))
            return FieldElement(self, value % self.modulus)
        if isinstance(value, Fraction):
            if self.is_rationals:
                return FieldElement(self, value)
            den = value.denominator % self.modulus
            if den == 0:
                raise DivisionByZeroError(
                    f"denominator of {value} vanishes modulo {self.modulus}"
                )
            num = value.numerator % self.modulus
            return FieldElement(self, num * pow(den, -1, self.modulus) % self.modulus)
        if isinstance(value, str):
            return self._parse_literal(value)
        raise TypeError(f"cannot make a field element from {type(value).__name__}")

    def _parse_literal(self, text: str) -> "FieldElement":
        body = text.strip()
        m = _LITERAL_RE.fullmatch(body)
        if m is None:
            raise ParseError(f"bad element literal {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return self.element(num)
        if self.is_prime_field:
            raise ParseError(
                f"fraction literal {text!r} is not valid over {self}; use a single integer"
            )
        den = int(m.group(2))
        if den == 0:
            raise ParseError(f"zero denominator in literal {text!r}")
        return FieldElement(self, Fraction(num, den))

    def __str__(self) -> str:
        return "Q" if self.is_rationals else f"Fp:{self.modulus}"


@dataclass(frozen=True)
class FieldElement:
    """An immutable element of a :class:`FieldSpec`.

    Over Q the value is a normalized Fraction (lowest terms, positive
    denominator, zero is 0/1); over F_p it is the residue in [0, p-1].
    Arithmetic never mixes fields: mixing raises SpecMismatchError.
    Plain ints are lifted into the element's own field.
    """

    spec: FieldSpec
    value: Fraction | int

    def _lift(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatchError(
                    f"cannot combine elements of {self.spec} and {other.spec}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.spec.element(other)
        return None

    def __add__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if self.spec.is_rationals:
            return FieldElement(self.spec, self.value + rhs.value)
        return FieldElement(self.spec, (self.value + rhs.value) % self.spec.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if self.spec.is_rationals:
            return FieldElement(self.spec, self.value - rhs.value)
        return FieldElement(self.spec, (self.value - rhs.value) % self.spec.modulus)

    def __rsub__(self, other):
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if self.spec.is_rationals:
            return FieldElement(self.spec, self.value * rhs.value)
        return FieldElement(self.spec, self.value * rhs.value % self.spec.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if rhs.value == 0:
            raise DivisionByZeroError(f"division of {self} by zero in {self.spec}")
        if self.spec.is_rationals:
            return FieldElement(self.spec, self.value / rhs.value)
        inv = pow(rhs.value, -1, self.spec.modulus)
        return FieldElement(self.spec, self.value * inv % self.spec.modulus)

    def __rtruediv__(self, other):
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __neg__(self):
        if self.spec.is_rationals:
            return FieldElement(self.spec, -self.value)
        return FieldElement(self.spec, -self.value % self.spec.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def is_square(self) -> bool:
        """Whether some element r of the same field satisfies r*r = self.

        Over Q this holds exactly when the value is nonnegative and both
        the numerator and the denominator (in lowest terms) are perfect
        squares of integers. Over F_p it is the Euler criterion:
        a = 0 or a^((p-1)/2) = 1.
        """
        if self.spec.is_rationals:
            f = self.value
            if f < 0:
                return False
            return _is_perfect_square(f.numerator) and _is_perfect_square(f.denominator)
        p = self.spec.modulus
        return self.value == 0 or pow(self.value, (p - 1) // 2, p) == 1

    def sqrt(self) -> "FieldElement | None":
        """The canonical square root, or None when no root exists.

        Of the two roots r and -r, the canonical one is: over Q the
        nonnegative root; over F_p the representative in
        [0, (p-1)/2]. The choice depends only on the input value, never
        on the algorithm path, so repeated calls agree exactly.
        """
        if self.spec.is_rationals:
            if not self.is_square():
                return None
            f = self.value
            root = Fraction(math.isqrt(f.numerator), math.isqrt(f.denominator))
            return FieldElement(self.spec, root)
        p = self.spec.modulus
        r = _sqrt_mod_prime(self.value, p)
        if r is None:
            return None
        return FieldElement(self.spec, min(r, p - r))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self.spec}, {self.value})"


def make_field(kind: str, modulus: int | None = None) -> FieldSpec:
    """Build a validated field spec.

    ``kind`` is :data:`RATIONALS` or :data:`PRIME_FIELD`. A prime-field
    modulus must be an odd prime at least 3; primality is established
    deterministically (see :func:`is_prime`).

    Raises:
        EvenOrSmallModulusError: modulus below 3 (this covers p = 2).
        NotPrimeError: composite modulus.
        ModulusOutOfRangeError: modulus beyond the deterministic
            primality range.
    """
    if kind == RATIONALS:
        if modulus is not None:
            raise ValueError("the rationals take no modulus")
        return FieldSpec(RATIONALS)
    if kind == PRIME_FIELD:
        if modulus is None:
            raise ValueError("a prime field needs a modulus")
        if modulus < 3:
            raise EvenOrSmallModulusError(
                f"modulus must be an odd prime >= 3; got {modulus}"
            )
        if not is_prime(modulus):
            raise NotPrimeError(f"modulus {modulus} is not prime")
        return FieldSpec(PRIME_FIELD, modulus)
    raise ValueError(f"unknown field kind {kind!r}")


def rationals() -> FieldSpec:
    """The field of rational numbers."""
    return make_field(RATIONALS)


def prime_field(p: int) -> FieldSpec:
    """The prime field F_p for an odd prime p."""
    return make_field(PRIME_FIELD, p)


def parse_field_spec(text: str) -> FieldSpec:
    """Parse the boundary grammar: ``"Q"`` or ``"Fp:<decimal prime>"``."""
    body = text.strip()
    if body == "Q":
        return rationals()
    m = _FIELD_SPEC_RE.fullmatch(body)
    if m is None:
        raise ParseError(f"bad field spec {text!r}; expected 'Q' or 'Fp:<prime>'")
    return prime_field(int(m.group(1)))

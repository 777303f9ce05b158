"""Capped-relative-precision elements of Q_p.

A nonzero element is stored in the normal form ``p**v * u`` where the
valuation ``v`` is exact and the unit part ``u`` is known modulo ``p**N``
for a relative precision ``N >= 1``; the element is therefore pinned down
modulo ``p**(v + N)``.  Two zero-like forms complete the picture: an exact
zero (infinite precision) and an inexact zero ``ZeroAtLeast(A)`` produced
by catastrophic cancellation, which only records that the value vanishes
modulo ``p**A``.

Precision obeys two rules that every operation maintains and the test
suite asserts: multiplication keeps the minimum *relative* precision of
its operands, addition keeps the minimum *absolute* precision
(valuation + relative precision).  All values are immutable and all
operations pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    DivisionByZero,
    IndeterminateValuation,
    InsufficientPrecision,
    NotAnInteger,
    ZeroHasNoExpansion,
)
from .valuation import ExtVal, check_prime, padic_val_int, padic_val_rat

DEFAULT_PRECISION = 32


class Form(Enum):
    EXACT_ZERO = "zero"
    ZERO_AT_LEAST = "zero_at_least"
    UNIT = "unit"


def rational_residue(q, modulus: int) -> int:
    """The residue of a rational with invertible denominator mod ``modulus``."""
    q = Fraction(q)
    if math.gcd(q.denominator, modulus) != 1:
        raise ValueError(
            f"denominator {q.denominator} is not invertible modulo {modulus}"
        )
    return q.numerator * pow(q.denominator, -1, modulus) % modulus


@dataclass(frozen=True)
class PadicNumber:
    """An element of Q_p known to finite precision.

    Use :meth:`from_rational`, :meth:`exact_zero`, or :meth:`zero_at_least`
    to construct values; arithmetic goes through the usual operators.
    For ``Form.UNIT`` the fields mean ``x = p**v * w`` with
    ``w = unit (mod p**prec)``; for ``Form.ZERO_AT_LEAST`` the field ``v``
    holds the absolute-precision floor ``A`` with ``x = 0 (mod p**A)``.
    """

    p: int
    form: Form
    v: int = 0
    unit: int = 0
    prec: int = 0

    def __post_init__(self):
        check_prime(self.p)
        if self.form is Form.UNIT:
            if self.prec < 1:
                raise ValueError("relative precision must be at least 1")
            if not 0 < self.unit < self.p ** self.prec:
                raise ValueError("unit residue out of range")
            if self.unit % self.p == 0:
                raise ValueError("unit residue must be coprime to p")
        elif self.unit != 0 or self.prec != 0:
            raise ValueError("zero forms carry no unit data")

    # ----- constructors -------------------------------------------------

    @classmethod
    def exact_zero(cls, p) -> "PadicNumber":
        return cls(check_prime(p), Form.EXACT_ZERO)

    @classmethod
    def zero_at_least(cls, p, floor: int) -> "PadicNumber":
        return cls(check_prime(p), Form.ZERO_AT_LEAST, int(floor))

    @classmethod
    def from_rational(cls, p, q, prec: int = DEFAULT_PRECISION) -> "PadicNumber":
        """Embed an exact rational, exactly up to the stated relative precision.

        The valuation is computed exactly and the unit part reduced modulo
        ``p**prec``, so the norm of the result equals the norm of ``q``.
        """
        p = check_prime(p)
        if prec < 1:
            raise ValueError("relative precision must be at least 1")
        q = Fraction(q)
        if q == 0:
            return cls.exact_zero(p)
        vn = padic_val_int(p, q.numerator)
        vd = padic_val_int(p, q.denominator)
        num = q.numerator // p**vn
        den = q.denominator // p**vd
        unit = num * pow(den, -1, p**prec) % p**prec
        return cls(p, Form.UNIT, vn - vd, unit, prec)

    # ----- structure ----------------------------------------------------

    @property
    def abs_prec(self):
        """Exponent k such that the value is known modulo p**k (inf if exact)."""
        if self.form is Form.EXACT_ZERO:
            return math.inf
        if self.form is Form.ZERO_AT_LEAST:
            return self.v
        return self.v + self.prec

    def norm(self) -> ExtVal:
        """The norm as an extended valuation exponent (norm = p**-v)."""
        if self.form is Form.EXACT_ZERO:
            return ExtVal.exact_zero()
        if self.form is Form.ZERO_AT_LEAST:
            return ExtVal.zero_at_least(self.v)
        return ExtVal.finite(self.v)

    def is_integer(self) -> bool:
        """True when the norm is certainly at most 1."""
        if self.form is Form.EXACT_ZERO:
            return True
        return self.v >= 0

    def digits(self) -> "DigitExpansion":
        """Base-p digits of the unit part, lowest digit first."""
        if self.form is not Form.UNIT:
            raise ZeroHasNoExpansion("zero has no canonical expansion")
        out = []
        u = self.unit
        for _ in range(self.prec):
            u, r = divmod(u, self.p)
            out.append(r)
        return DigitExpansion(self.p, self.v, tuple(out))

    def reduce_mod(self, k: int) -> int:
        """The unique residue r in [0, p**k) with x = r (mod p**k)."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("k must be a positive integer")
        if not self.is_integer():
            raise NotAnInteger(f"value has valuation {self.v} < 0")
        if self.form is Form.EXACT_ZERO:
            return 0
        if self.form is Form.ZERO_AT_LEAST:
            if self.v >= k:
                return 0
            raise InsufficientPrecision(
                f"value known only modulo {self.p}^{self.v}, need {self.p}^{k}"
            )
        if self.abs_prec < k:
            raise InsufficientPrecision(
                f"value known only modulo {self.p}^{self.abs_prec}, need {self.p}^{k}"
            )
        return self.unit * self.p**self.v % self.p**k

    def eq_to_precision(self, other: "PadicNumber", k: int) -> bool:
        """Whether x = y (mod p**k); both operands must carry that precision."""
        self._check_same_prime(other)
        if self.abs_prec < k or other.abs_prec < k:
            raise InsufficientPrecision(
                f"operands not both known modulo {self.p}^{k}"
            )
        diff = self - other
        if diff.form is Form.EXACT_ZERO:
            return True
        return diff.v >= k

    # ----- arithmetic ---------------------------------------------------

    def _check_same_prime(self, other: "PadicNumber"):
        if self.p != other.p:
            raise ValueError(
                f"cannot mix {self.p}-adic and {other.p}-adic values"
            )

    def _embed_for_add(self, q) -> "PadicNumber":
        # An exact rational operand must never lower the result's absolute
        # precision, so it is embedded at (at least) this value's abs_prec.
        q = Fraction(q)
        if q == 0:
            return PadicNumber.exact_zero(self.p)
        if self.form is Form.EXACT_ZERO:
            return PadicNumber.from_rational(self.p, q, DEFAULT_PRECISION)
        n = max(1, self.abs_prec - padic_val_rat(self.p, q))
        return PadicNumber.from_rational(self.p, q, n)

    def _embed_for_mul(self, q) -> "PadicNumber":
        q = Fraction(q)
        if q == 0:
            return PadicNumber.exact_zero(self.p)
        n = self.prec if self.form is Form.UNIT else DEFAULT_PRECISION
        return PadicNumber.from_rational(self.p, q, n)

    def _add(self, other: "PadicNumber") -> "PadicNumber":
        self._check_same_prime(other)
        a, b = self, other
        if a.form is Form.EXACT_ZERO:
            return b
        if b.form is Form.EXACT_ZERO:
            return a
        floor = min(a.abs_prec, b.abs_prec)
        if a.form is Form.ZERO_AT_LEAST and b.form is Form.ZERO_AT_LEAST:
            return PadicNumber.zero_at_least(a.p, floor)
        if a.form is Form.ZERO_AT_LEAST or b.form is Form.ZERO_AT_LEAST:
            u = a if a.form is Form.UNIT else b
            if u.v >= floor:
                return PadicNumber.zero_at_least(a.p, floor)
            return PadicNumber(
                a.p, Form.UNIT, u.v, u.unit % a.p ** (floor - u.v), floor - u.v
            )
        base = min(a.v, b.v)
        span = floor - base  # >= 1: a unit form always has a known digit
        modulus = a.p**span
        total = (
            a.unit * a.p ** (a.v - base) + b.unit * b.p ** (b.v - base)
        ) % modulus
        if total == 0:
            return PadicNumber.zero_at_least(a.p, floor)
        w = padic_val_int(a.p, total)
        return PadicNumber(
            a.p, Form.UNIT, base + w, total // a.p**w, span - w
        )

    def __add__(self, other):
        if isinstance(other, PadicNumber):
            return self._add(other)
        if isinstance(other, (int, Fraction)):
            return self._add(self._embed_for_add(other))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "PadicNumber":
        if self.form is not Form.UNIT:
            return self
        return PadicNumber(
            self.p, Form.UNIT, self.v, self.p**self.prec - self.unit, self.prec
        )

    def __sub__(self, other):
        if isinstance(other, PadicNumber):
            return self._add(-other)
        if isinstance(other, (int, Fraction)):
            return self._add(-self._embed_for_add(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._embed_for_add(other)._add(-self)
        return NotImplemented

    def _mul(self, other: "PadicNumber") -> "PadicNumber":
        self._check_same_prime(other)
        a, b = self, other
        if a.form is Form.EXACT_ZERO or b.form is Form.EXACT_ZERO:
            return PadicNumber.exact_zero(a.p)
        if a.form is Form.ZERO_AT_LEAST or b.form is Form.ZERO_AT_LEAST:
            # valuations add, whether v is exact or a floor
            return PadicNumber.zero_at_least(a.p, a.v + b.v)
        n = min(a.prec, b.prec)
        return PadicNumber(
            a.p, Form.UNIT, a.v + b.v, a.unit * b.unit % a.p**n, n
        )

    def __mul__(self, other):
        if isinstance(other, PadicNumber):
            return self._mul(other)
        if isinstance(other, (int, Fraction)):
            return self._mul(self._embed_for_mul(other))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "PadicNumber":
        """Multiplicative inverse; requires a value with known valuation."""
        if self.form is Form.EXACT_ZERO:
            raise DivisionByZero("cannot invert zero")
        if self.form is Form.ZERO_AT_LEAST:
            raise IndeterminateValuation(
                f"cannot invert a value only known to vanish modulo "
                f"{self.p}^{self.v}"
            )
        return PadicNumber(
            self.p,
            Form.UNIT,
            -self.v,
            pow(self.unit, -1, self.p**self.prec),
            self.prec,
        )

    def __truediv__(self, other):
        if isinstance(other, PadicNumber):
            return self._mul(other.inverse())
        if isinstance(other, (int, Fraction)):
            return self._mul(self._embed_for_mul(other).inverse())
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._embed_for_mul(other)._mul(self.inverse())
        return NotImplemented

    def __pow__(self, k: int) -> "PadicNumber":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if self.form is Form.EXACT_ZERO:
            if k == 0:
                return PadicNumber(self.p, Form.UNIT, 0, 1, DEFAULT_PRECISION)
            return self
        if self.form is Form.ZERO_AT_LEAST:
            if k == 0:
                return PadicNumber(self.p, Form.UNIT, 0, 1, DEFAULT_PRECISION)
            return PadicNumber.zero_at_least(self.p, self.v * k)
        if k == 0:
            return PadicNumber(self.p, Form.UNIT, 0, 1, self.prec)
        return PadicNumber(
            self.p,
            Form.UNIT,
            self.v * k,
            pow(self.unit, k, self.p**self.prec),
            self.prec,
        )

    # ----- serialization ------------------------------------------------

    def to_record(self) -> dict:
        """Plain record {p, form, v, unit, N}; unit as base-10 string."""
        return {
            "p": self.p,
            "form": self.form.value,
            "v": self.v,
            "unit": str(self.unit),
            "N": self.prec,
        }

    @classmethod
    def from_record(cls, record: dict) -> "PadicNumber":
        return cls(
            int(record["p"]),
            Form(record["form"]),
            int(record["v"]),
            int(record["unit"]),
            int(record["N"]),
        )

    def __str__(self) -> str:
        if self.form is Form.EXACT_ZERO:
            return "0"
        if self.form is Form.ZERO_AT_LEAST:
            return f"O({self.p}^{self.v})"
        return str(self.digits())


@dataclass(frozen=True)
class DigitExpansion:
    """A window of base-p digits, lowest digit (index ``start``) first.

    Represents ``sum(digits[i] * p**(start + i))`` as a truncation of the
    full left-infinite expansion; the lowest digit is nonzero.
    """

    p: int
    start: int
    digits: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if not self.digits:
            raise ValueError("expansion must contain at least one digit")
        if any(not 0 <= d < self.p for d in self.digits):
            raise ValueError("digits out of range")
        if self.digits[0] == 0:
            raise ValueError("lowest digit must be nonzero")

    def value(self) -> Fraction:
        """The exact rational value of the truncated series."""
        return sum(
            (d * Fraction(self.p) ** (self.start + i)
             for i, d in enumerate(self.digits)),
            Fraction(0),
        )

    def to_number(self) -> PadicNumber:
        """Reassemble the source element (same valuation, unit, precision)."""
        unit = 0
        for d in reversed(self.digits):
            unit = unit * self.p + d
        return PadicNumber(self.p, Form.UNIT, self.start, unit, len(self.digits))

    def __str__(self) -> str:
        if self.p <= 10:
            window = "".join(str(d) for d in reversed(self.digits))
        else:
            window = "[" + ",".join(str(d) for d in reversed(self.digits)) + "]"
        text = f"...{window}"
        if self.start != 0:
            text += f" × {self.p}^{self.start}"
        return text

"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as its coefficient vector in the power basis
1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
Coefficients are :class:`fractions.Fraction`; there is no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union

Rational = Union[int, Fraction]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, low-to-high, den monic
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return [0], num
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    rem = num[:dn] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(_cyclotomic(d)))
            assert not any(rem)
    return tuple(poly)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of Phi_n, lowest degree first.

    >>> cyclotomic_polynomial(12)
    [1, 0, -1, 0, 1]
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    return list(_cyclotomic(n))


def euler_phi(n: int) -> int:
    return len(_cyclotomic(n)) - 1


def _mobius(n: int) -> int:
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class CycloNumber:
    """Immutable element of Q(zeta_N) in canonical power-basis form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable[Rational] = ()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.coeffs = _reduce(conductor, [Fraction(c) for c in coeffs])
        self._hash = None

    # constructors ------------------------------------------------------
    @classmethod
    def rational(cls, value: Rational, conductor: int = 1) -> "CycloNumber":
        return cls(conductor, [value])

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CycloNumber":
        """zeta_N ** power, with zeta_N = exp(2 pi i / N)."""
        power %= conductor
        vec = [0] * (power + 1)
        vec[power] = 1
        return cls(conductor, vec)

    # conversions -------------------------------------------------------
    def lift(self, conductor: int) -> "CycloNumber":
        """Re-express in Q(zeta_M) for a multiple M of the current conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot lift conductor {self.conductor} to {conductor}")
        step = conductor // self.conductor
        vec = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            vec[i * step] = c
        return CycloNumber(conductor, vec)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # arithmetic --------------------------------------------------------
    def _coerce(self, other) -> tuple["CycloNumber", "CycloNumber"]:
        if isinstance(other, (int, Fraction)):
            return self, CycloNumber(self.conductor, [other])
        if not isinstance(other, CycloNumber):
            return NotImplemented, NotImplemented
        if other.conductor == self.conductor:
            return self, other
        m = _lcm(self.conductor, other.conductor)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        size = max(len(a.coeffs), len(b.coeffs))
        va = a.coeffs + (Fraction(0),) * (size - len(a.coeffs))
        vb = b.coeffs + (Fraction(0),) * (size - len(b.coeffs))
        return CycloNumber(a.conductor, [x + y for x, y in zip(va, vb)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNumber(self.conductor, [c * other for c in self.coeffs])
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        vec = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        vec[i + j] += x * y
        return CycloNumber(a.conductor, vec)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycloNumber":
        """The automorphism zeta_N -> zeta_N^k applied to self (gcd(k, N) = 1)."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        vec = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            vec[(i * k) % n] += c
        return CycloNumber(n, vec)

    def inverse(self) -> "CycloNumber":
        """1/self as the product of the other Galois conjugates over the norm."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_rational():
            return CycloNumber(self.conductor, [1 / self.coeffs[0]])
        n = self.conductor
        others = CycloNumber(n, [1])
        for k in range(2, n):
            if gcd(k, n) == 1:
                others = others * self.galois(k)
        norm = (self * others).to_rational()
        return others / norm

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycloNumber(self.conductor, [c / other for c in self.coeffs])
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloNumber(self.conductor, [1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloNumber):
            return NotImplemented
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.normalized_trace())
        return self._hash

    def normalized_trace(self) -> Fraction:
        """Average of the Galois conjugates; independent of the conductor used."""
        n = self.conductor
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                m = n // gcd(i, n)
                total += c * _mobius(m) / euler_phi(m)
        return total

    def __repr__(self):
        return f"CycloNumber({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(parts).replace("+-", "-") or "0"


def _reduce(conductor: int, vec: list[Fraction]) -> tuple[Fraction, ...]:
    phi = _cyclotomic(conductor)
    deg = len(phi) - 1
    vec = list(vec)
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            for j in range(deg + 1):
                vec[i - deg + j] -= c * phi[j]
    vec = vec[:deg] + [Fraction(0)] * (deg - len(vec))
    return tuple(vec)


def sqrt3(conductor: int = 12) -> CycloNumber:
    """sqrt(3) = zeta_12 + zeta_12^-1."""
    if conductor % 12:
        raise ValueError(f"sqrt(3) needs a conductor divisible by 12, got {conductor}")
    step = conductor // 12
    z = CycloNumber.zeta(conductor, step)
    return z + CycloNumber.zeta(conductor, -step)


def sqrt3_inverse(conductor: int = 12) -> CycloNumber:
    """1/sqrt(3) as sqrt(3)/3."""
    return sqrt3(conductor) / 3

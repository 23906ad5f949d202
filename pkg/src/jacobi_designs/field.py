"""Finite fields F_q = F_p[lambda]/(F(lambda)) in basis representation.

Elements are stored as coefficient vectors (a_0, ..., a_{f-1}) over F_p.
For bulk work (codeword enumeration) every element also has an integer
index ``a_0 + a_1 p + ... + a_{f-1} p^(f-1)`` and a :class:`FieldSpec`
exposes addition/multiplication tables over those indices.
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .cyclo import CycloNumber

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"

# pinned defaults, low-to-high coefficients (monic)
DEFAULT_MODULI = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (2, 1, 1),  # x^2 + x + 2
}


class FieldMismatchError(ValueError):
    """Operands live in different fields."""


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            f, m = 0, q
            while m % p == 0:
                m //= p
                f += 1
            if m != 1:
                break
            return p, f
    raise ValueError(f"{q} is not a prime power")


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    f = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for i in range(len(prod) - 1, f - 1, -1):
        c = prod[i] % p
        if c:
            for j in range(f + 1):
                prod[i - f + j] -= c * modulus[j]
    prod = [c % p for c in prod[:f]]
    return prod + [0] * (f - len(prod))


def _root_order(modulus: Sequence[int], p: int) -> int:
    # multiplicative order of lambda in F_p[x]/(modulus); 0 if it never returns to 1
    f = len(modulus) - 1
    one = [1] + [0] * (f - 1)
    lam = [0, 1] + [0] * (f - 2) if f > 1 else [(-modulus[0]) % p]
    cur = list(lam)
    for k in range(1, p**f):
        if cur == one:
            return k
        if not any(cur):
            return 0
        cur = _poly_mulmod(cur, lam, modulus, p)
    return 0


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    # no zero divisors in F_p[x]/(modulus); brute force is fine at desk scale
    f = len(modulus) - 1
    elems = list(itertools.product(range(p), repeat=f))[1:]
    zero = [0] * f
    return all(_poly_mulmod(a, b, modulus, p) != zero for a in elems for b in elems)


def find_primitive_modulus(p: int, f: int) -> tuple[int, ...]:
    """Smallest (in lexicographic order of c_0..c_{f-1}) primitive monic polynomial."""
    q = p**f
    for tail in itertools.product(range(p), repeat=f):
        modulus = tuple(tail) + (1,)
        if modulus[0] == 0:
            continue
        if _root_order(modulus, p) == q - 1:
            return modulus
    raise ValueError(f"no primitive polynomial of degree {f} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """The field F_{p^f} defined by a primitive monic modulus (coefficients low-to-high)."""

    p: int
    f: int = 1
    modulus: tuple[int, ...] = field(default=())
    require_primitive: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.f < 1:
            raise ValueError("extension degree must be >= 1")
        modulus = tuple(int(c) % self.p for c in self.modulus)
        if not modulus:
            modulus = DEFAULT_MODULI.get(self.p**self.f) or find_primitive_modulus(self.p, self.f)
        if len(modulus) != self.f + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus {modulus} is not monic of degree {self.f}")
        if self.require_primitive:
            if _root_order(modulus, self.p) != self.q - 1:
                raise ValueError(f"modulus {modulus} is not primitive irreducible over F_{self.p}")
        elif not _is_irreducible(modulus, self.p):
            raise ValueError(f"modulus {modulus} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def from_order(cls, q: int) -> "FieldSpec":
        p, f = _prime_power(q)
        return cls(p, f)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``q=<p>^<f>;modulus=<c0,...,cf>`` (modulus optional, ``q=<q>`` accepted)."""
        fields = dict(part.split("=", 1) for part in text.replace(" ", "").split(";") if part)
        if "q" not in fields:
            raise ValueError(f"field spec {text!r} lacks q=")
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", fields["q"])
        if not m:
            raise ValueError(f"bad field order {fields['q']!r}")
        if m.group(2):
            p, f = int(m.group(1)), int(m.group(2))
        else:
            p, f = _prime_power(int(m.group(1)))
        modulus = ()
        if "modulus" in fields:
            modulus = tuple(int(c) for c in fields["modulus"].split(","))
        return cls(p, f, modulus, require_primitive=fields.get("primitive", "1") != "0")

    def __str__(self):
        text = f"q={self.p}^{self.f};modulus={','.join(map(str, self.modulus))}"
        return text if self.require_primitive else text + ";primitive=0"

    @property
    def q(self) -> int:
        return self.p**self.f

    # element helpers ---------------------------------------------------
    def element(self, value) -> "FieldElement":
        """Build an element from an index, a coefficient sequence, or a FieldElement."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatchError("element belongs to another field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, self.coeffs_of(int(value)))
        return FieldElement(self, tuple(value))

    def coeffs_of(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.q:
            raise ValueError(f"symbol {index} not in F_{self.q}")
        out = []
        for _ in range(self.f):
            index, r = divmod(index, self.p)
            out.append(r)
        return tuple(out)

    def index_of(self, coeffs: Sequence[int]) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(coeffs))

    def elements(self) -> list["FieldElement"]:
        return [self.element(i) for i in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def generator(self) -> "FieldElement":
        """lambda, the root of the modulus."""
        if self.f == 1:
            return self.element((-self.modulus[0]) % self.p)
        return self.element(self.p)

    # index tables --------------------------------------------------------
    @cached_property
    def add_table(self) -> np.ndarray:
        coeffs = np.array([self.coeffs_of(i) for i in range(self.q)], dtype=np.int64)
        weights = self.p ** np.arange(self.f)
        sums = (coeffs[:, None, :] + coeffs[None, :, :]) % self.p
        return (sums @ weights).astype(np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.q
        table = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            ca = self.coeffs_of(a)
            for b in range(a, q):
                prod = self.index_of(_poly_mulmod(ca, self.coeffs_of(b), self.modulus, self.p))
                table[a, b] = table[b, a] = prod
        return table

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.argmin(self.add_table, axis=1).astype(np.int64)

    @cached_property
    def inv_table(self) -> np.ndarray:
        inv = np.zeros(self.q, dtype=np.int64)
        for a in range(1, self.q):
            inv[a] = int(np.nonzero(self.mul_table[a] == 1)[0][0])
        return inv

    @cached_property
    def conj_table(self) -> np.ndarray:
        """x -> x^sqrt(q) on indices; identity when f is odd."""
        if self.f % 2:
            return np.arange(self.q, dtype=np.int64)
        root = self.p ** (self.f // 2)
        out = np.zeros(self.q, dtype=np.int64)
        for a in range(self.q):
            acc = 1
            for _ in range(root):
                acc = int(self.mul_table[acc, a])
            out[a] = acc
        return out


@dataclass(frozen=True)
class FieldElement:
    """a_0 + a_1 lambda + ... + a_{f-1} lambda^(f-1) with a_i in F_p."""

    spec: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.spec.f or any(not 0 <= c < self.spec.p for c in coeffs):
            raise ValueError(f"{coeffs} is not a canonical element of F_{self.spec.q}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def index(self) -> int:
        return self.spec.index_of(self.coeffs)

    def _check(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.spec.element(other % self.spec.p)
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.spec != self.spec:
            raise FieldMismatchError(f"F_{self.spec.q} element combined with F_{other.spec.q} element")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, tuple(_poly_mulmod(self.coeffs, other.coeffs, self.spec.modulus, self.spec.p)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.spec.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.spec.q - 2)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"F{self.spec.q}({'.'.join(map(str, self.coeffs))})"


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def conjugate(x: FieldElement) -> FieldElement:
    """x ** sqrt(q). Over an odd-degree field this is the identity and warns."""
    if x.spec.f % 2:
        warnings.warn(f"conjugation on F_{x.spec.q} (odd degree) is the identity", stacklevel=2)
        return x
    return x ** (x.spec.p ** (x.spec.f // 2))


def char_chi(b: FieldElement, a: FieldElement, conductor: int | None = None) -> CycloNumber:
    """The additive character chi_b(a) = zeta_p ** (a_0 b_0 + ... + a_{f-1} b_{f-1})."""
    if a.spec != b.spec:
        raise FieldMismatchError("character and argument live in different fields")
    p = a.spec.p
    conductor = conductor or p
    if conductor % p:
        raise ValueError(f"conductor {conductor} is not divisible by p={p}")
    exponent = sum(x * y for x, y in zip(a.coeffs, b.coeffs)) % p
    return CycloNumber.zeta(conductor, exponent * (conductor // p))


def inner_product(u: Sequence[FieldElement], v: Sequence[FieldElement], mode: str = EUCLIDEAN) -> FieldElement:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    if not u:
        raise ValueError("empty vectors carry no field")
    spec = u[0].spec
    if mode == HERMITIAN:
        if spec.f % 2:
            raise ValueError(f"Hermitian inner product needs an even-degree field, got F_{spec.q}")
        v = [conjugate(y) for y in v]
    elif mode != EUCLIDEAN:
        raise ValueError(f"unknown inner product {mode!r}")
    total = spec.zero
    for x, y in zip(u, v):
        total = total + x * y
    return total

"""Finite 2x2 matrix groups over cyclotomic fields and their bivariate Molien series.

For a finite group G the series

    f(u, v) = 1/|G| * sum_g 1 / (det(1 - u g) det(1 - v g))

counts invariants of bidegree (i, j) in its u^i v^j coefficient. Each term
is expanded through the trace/determinant recurrence, so no cyclotomic
division is ever needed.
"""

from __future__ import annotations

import csv
import io
import re
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .cyclo import CycloNumber, _lcm, sqrt3_inverse
from .poly import SparsePoly, render

UV_NAMES = ("u", "v")
DEFAULT_DEGREE = 40


class GroupTooLargeError(RuntimeError):
    """Closure did not terminate within the element bound."""


class GroupElement:
    """2x2 matrix ((a, b), (c, d)) with entries in Q(zeta_N) for a shared N."""

    __slots__ = ("conductor", "entries", "_key")

    def __init__(self, entries: Sequence[Sequence], conductor: int | None = None):
        flat = [e if isinstance(e, CycloNumber) else CycloNumber.rational(e) for row in entries for e in row]
        if len(flat) != 4:
            raise ValueError("group elements are 2x2 matrices")
        N = conductor or 1
        for e in flat:
            N = _lcm(N, e.conductor)
        self.conductor = N
        self.entries = tuple(e.lift(N) for e in flat)
        self._key = tuple(e.coeffs for e in self.entries)
        if self.det().is_zero():
            raise ValueError("matrix is singular")

    @classmethod
    def identity(cls, conductor: int = 1) -> "GroupElement":
        return cls([[1, 0], [0, 1]], conductor)

    def trace(self) -> CycloNumber:
        return self.entries[0] + self.entries[3]

    def det(self) -> CycloNumber:
        a, b, c, d = self.entries
        return a * d - b * c

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return GroupElement([[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]])

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.conductor == other.conductor:
            return self._key == other._key
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        a, b, c, d = self.entries
        return f"GroupElement([[{a}, {b}], [{c}, {d}]], N={self.conductor})"


def group_closure(generators: Iterable[GroupElement], bound: int = 10000) -> list[GroupElement]:
    """All products of the generators, found breadth first from the identity."""
    gens = list(generators)
    N = 1
    for g in gens:
        N = _lcm(N, g.conductor)
    gens = [GroupElement([g.entries[:2], g.entries[2:]], N) for g in gens]
    start = GroupElement.identity(N)
    seen = {start._key: start}
    queue = deque([start])
    while queue:
        h = queue.popleft()
        for g in gens:
            prod = h @ g
            if prod._key not in seen:
                if len(seen) >= bound:
                    raise GroupTooLargeError(f"closure exceeded {bound} elements")
                seen[prod._key] = prod
                queue.append(prod)
    return list(seen.values())


# named groups --------------------------------------------------------------


def g3_generators() -> list[GroupElement]:
    """(1/sqrt 3)[[1, 2], [1, -1]] and diag(1, zeta_3), in Q(zeta_12)."""
    s = sqrt3_inverse(12)
    zeta3 = CycloNumber.zeta(12, 4)
    return [
        GroupElement([[s, s * 2], [s, -s]]),
        GroupElement([[1, 0], [0, zeta3]], 12),
    ]


def g4_generators() -> list[GroupElement]:
    """(1/2)[[1, 3], [1, -1]] and diag(1, -1)."""
    h = Fraction(1, 2)
    return [
        GroupElement([[h, 3 * h], [h, -h]]),
        GroupElement([[1, 0], [0, -1]]),
    ]


def named_group(name: str) -> list[GroupElement]:
    name = name.lower()
    if name == "g3":
        return group_closure(g3_generators())
    if name == "g4":
        return group_closure(g4_generators())
    if name in ("identity", "trivial", "1"):
        return [GroupElement.identity()]
    raise KeyError(f"unknown group {name!r}; expected g3, g4, identity")


_ENTRY_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(z(?:\^(\d+))?)?")


def parse_entry(text: str, conductor: int) -> CycloNumber:
    """Parse sums like ``1/2``, ``-z^4``, ``1/3*z+1/3*z^11`` where z = zeta_N."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty matrix entry")
    total = CycloNumber.rational(0, conductor)
    pos = 0
    while pos < len(text):
        m = _ENTRY_TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse matrix entry {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        power = 0
        if m.group(3):
            power = int(m.group(4)) if m.group(4) else 1
        total = total + CycloNumber.zeta(conductor, power) * (sign * coeff)
        pos = m.end()
    return total


def parse_group(text: str) -> list[GroupElement]:
    """Generators from text.

    The first non-comment line is ``conductor=N``; every later line holds one
    generator as ``a b ; c d`` where entries are sums of ``c*z^k`` terms
    (z = exp(2 pi i / N)).
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("conductor="):
        raise ValueError("group file must start with conductor=N")
    N = int(lines[0].split("=", 1)[1])
    gens = []
    for ln in lines[1:]:
        rows = [r.split() for r in ln.split(";")]
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError(f"generator line {ln!r} is not 'a b ; c d'")
        gens.append(GroupElement([[parse_entry(e, N) for e in r] for r in rows], N))
    if not gens:
        raise ValueError("group file lists no generators")
    return gens


def load_group(path: str | Path) -> list[GroupElement]:
    return group_closure(parse_group(Path(path).read_text()))


# series --------------------------------------------------------------------


def _inverse_char_series(tau: CycloNumber, delta: CycloNumber, D: int) -> list[CycloNumber]:
    """Coefficients of 1/(1 - tau u + delta u^2) up to u^D."""
    c = [CycloNumber.rational(1, tau.conductor)]
    if D >= 1:
        c.append(tau)
    for m in range(2, D + 1):
        c.append(tau * c[m - 1] - delta * c[m - 2])
    return c


@dataclass(frozen=True)
class MolienTable:
    """c[(i, j)] = coefficient of u^i v^j for i + j <= max_degree."""

    max_degree: int
    order: int
    coefficients: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if i < 0 or j < 0 or i + j > self.max_degree:
            raise KeyError(f"({i}, {j}) outside the table of degree {self.max_degree}")
        return self.coefficients[(i, j)]

    def univariate(self) -> list[int]:
        return [self.coefficients[(i, 0)] for i in range(self.max_degree + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "j", "c"])
        for d in range(self.max_degree + 1):
            for i in range(d, -1, -1):
                writer.writerow([i, d - i, self.coefficients[(i, d - i)]])
        return buf.getvalue()


def molien_bivariate(group: Sequence[GroupElement], D: int = DEFAULT_DEGREE) -> MolienTable:
    if D < 0:
        raise ValueError("degree bound must be nonnegative")
    classes = Counter((g.trace(), g.det()) for g in group)
    sums: dict[tuple[int, int], CycloNumber] = {}
    for (tau, delta), mult in classes.items():
        a = _inverse_char_series(tau, delta, D)
        for i in range(D + 1):
            ai = a[i] * mult
            for j in range(D + 1 - i):
                term = ai * a[j]
                sums[(i, j)] = sums[(i, j)] + term if (i, j) in sums else term
    coeffs = {}
    for key, total in sums.items():
        value = total.to_rational() / len(group)
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"Molien coefficient at {key} is {value}, not a nonnegative integer")
        coeffs[key] = int(value)
    return MolienTable(D, len(group), coeffs)


def homogeneous_part(table: MolienTable, d: int) -> SparsePoly:
    """f[d] as a polynomial in u, v."""
    if not 0 <= d <= table.max_degree:
        raise ValueError(f"degree {d} outside 0..{table.max_degree}")
    terms = {(i, d - i): table.coefficients[(i, d - i)] for i in range(d + 1)}
    return SparsePoly(0, terms, names=UV_NAMES)


def render_part(table: MolienTable, d: int) -> str:
    return render(homogeneous_part(table, d))


def poly_from_roots_text(text: str) -> list[int]:
    """Integer coefficients (low to high) of a product of factors in u.

    Accepts the notation of :func:`jacobi_designs.poly.parse` in the single
    letter ``u``, for instance ``(u-1)^2(u^2+1)``.
    """
    from .poly import parse

    P = parse(text, 0, names=("u", "v"))
    if any(e[1] for e in P.terms):
        raise ValueError("denominator must only involve u")
    deg = P.degree()
    out = [0] * (deg + 1)
    for (i, _), c in P.terms.items():
        if c.denominator != 1:
            raise ValueError("denominator must have integer coefficients")
        out[i] = int(c)
    return out


@dataclass(frozen=True)
class DenominatorCheck:
    ok: bool
    checked: int
    witness: tuple[int, int, int] | None = None

    def __bool__(self):
        return self.ok


def verify_denominator(table: MolienTable, d_u: Sequence[int], d_v: Sequence[int] | None = None, D: int | None = None) -> DenominatorCheck:
    """Truncated check that d_u(u) d_v(v) f(u, v) is a polynomial.

    Every summand of f has degree -2 in u (and in v) as a rational function,
    so a valid denominator leaves a numerator with u-degree at most
    deg d_u - 2 and v-degree at most deg d_v - 2. The product is exact for
    total degree up to ``D``; every coefficient there outside that box must
    vanish. ``d_u`` and ``d_v`` list coefficients from the constant term up.
    """
    d_v = d_u if d_v is None else d_v
    D = table.max_degree if D is None else D
    if D > table.max_degree:
        raise ValueError(f"check degree {D} exceeds table degree {table.max_degree}")
    du, dv = len(d_u) - 1, len(d_v) - 1
    checked = 0
    for i in range(D + 1):
        for j in range(D + 1 - i):
            if i <= du - 2 and j <= dv - 2:
                continue
            total = 0
            for a in range(min(i, du) + 1):
                if d_u[a]:
                    for b in range(min(j, dv) + 1):
                        if d_v[b]:
                            total += d_u[a] * d_v[b] * table.coefficients[(i - a, j - b)]
            checked += 1
            if total:
                return DenominatorCheck(False, checked, (i, j, total))
    return DenominatorCheck(True, checked)


G3_DENOMINATOR = "(u-1)^2(u+1)^2(u^2+1)^2(u^2-u+1)(u^2+u+1)(u^4-u^2+1)"
G4_PRINTED_DENOMINATOR = "(1-u+u^2)(1+u+u^2)(1+2u^6+3u^12+4u^18+5u^24+6u^30+7u^36)"

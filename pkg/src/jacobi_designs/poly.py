"""Sparse multivariate polynomials with exact rational coefficients.

Variables are indexed by bitstrings ``a`` of length ``ell + 1``; variable
number ``int(a, 2)`` carries the bitstring ``a`` (so the index order is the
lexicographic order of the bitstrings). Letter names:

* ``ell = 0``: ``(0) -> x``, ``(1) -> y``
* ``ell = 1``: ``(0,0) -> x``, ``(1,0) -> y``, ``(0,1) -> w``, ``(1,1) -> z``
* ``ell >= 2``: ``x``, ``y`` for the all-zero / leading-one strings, ``w<j>``
  and ``z<j>`` for a single reference bit at position ``j + 1``, and
  ``x_{bits}`` for everything else.

A polynomial maps exponent tuples to nonzero :class:`~fractions.Fraction`
coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

Coefficient = Union[int, Fraction]
Exponent = tuple[int, ...]


def var_index(bits: Sequence[int]) -> int:
    out = 0
    for b in bits:
        out = 2 * out + (1 if b else 0)
    return out


def var_bits(index: int, ell: int) -> tuple[int, ...]:
    return tuple((index >> (ell - k)) & 1 for k in range(ell + 1))


def outside_vars(ell: int) -> tuple[int, int]:
    """Indices of x_0 = x_(0,...,0) and x_1 = x_(1,0,...,0)."""
    return 0, 1 << ell


def reference_vars(ell: int, j: int) -> tuple[int, int]:
    """Indices of w_j and z_j for 1 <= j <= ell."""
    if not 1 <= j <= ell:
        raise ValueError(f"reference index {j} outside 1..{ell}")
    w = 1 << (ell - j)
    return w, w | (1 << ell)


@lru_cache(maxsize=None)
def letter_names(ell: int) -> tuple[str, ...]:
    if ell == 0:
        return ("x", "y")
    if ell == 1:
        return ("x", "w", "y", "z")
    names = [f"x_{{{''.join(map(str, var_bits(i, ell)))}}}" for i in range(2 ** (ell + 1))]
    x0, x1 = outside_vars(ell)
    names[x0], names[x1] = "x", "y"
    for j in range(1, ell + 1):
        w, z = reference_vars(ell, j)
        names[w], names[z] = f"w{j}", f"z{j}"
    return tuple(names)


@lru_cache(maxsize=None)
def raw_names(ell: int) -> tuple[str, ...]:
    return tuple(f"x_{{{''.join(map(str, var_bits(i, ell)))}}}" for i in range(2 ** (ell + 1)))


@lru_cache(maxsize=None)
def _display_order(ell: int) -> tuple[int, ...]:
    # reference letters first (w1, z1, w2, z2, ..., then any others), then x, y
    if ell == 0:
        return (0, 1)
    x0, x1 = outside_vars(ell)
    order = []
    for j in range(1, ell + 1):
        order.extend(reference_vars(ell, j))
    order += [i for i in range(2 ** (ell + 1)) if i not in order and i not in (x0, x1)]
    return tuple(order + [x0, x1])


class SparsePoly:
    """Immutable polynomial in the 2**(ell+1) Jacobi variables."""

    __slots__ = ("ell", "terms", "names", "_hash")

    def __init__(
        self,
        ell: int,
        terms: Mapping[Exponent, Coefficient] | Iterable[tuple[Exponent, Coefficient]] = (),
        names: Sequence[str] | None = None,
    ):
        self.ell = ell
        nvars = 2 ** (ell + 1)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            c = clean.get(exp, 0) + Fraction(c)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self.terms = clean
        self.names = tuple(names) if names is not None else None
        self._hash = None

    # constructors ------------------------------------------------------
    @property
    def nvars(self) -> int:
        return 2 ** (self.ell + 1)

    @classmethod
    def zero(cls, ell: int) -> "SparsePoly":
        return cls(ell)

    @classmethod
    def constant(cls, ell: int, value: Coefficient) -> "SparsePoly":
        return cls(ell, {(0,) * 2 ** (ell + 1): value})

    @classmethod
    def var(cls, ell: int, index: int) -> "SparsePoly":
        exp = [0] * 2 ** (ell + 1)
        exp[index] = 1
        return cls(ell, {tuple(exp): 1})

    @classmethod
    def monomial(cls, ell: int, exponents: Mapping[int, int], coeff: Coefficient = 1) -> "SparsePoly":
        exp = [0] * 2 ** (ell + 1)
        for i, e in exponents.items():
            exp[i] += e
        return cls(ell, {tuple(exp): coeff})

    def with_names(self, names: Sequence[str] | None) -> "SparsePoly":
        out = SparsePoly(self.ell, self.terms)
        out.names = tuple(names) if names is not None else None
        return out

    # inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self.terms}
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def evaluate(self, values: Sequence[Coefficient]) -> Fraction:
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(values, exp):
                if e:
                    term *= Fraction(v) ** e
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in graded-lex order, highest first."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    # arithmetic --------------------------------------------------------
    def _check(self, other: "SparsePoly"):
        if other.ell != self.ell:
            raise ValueError(f"arity mismatch: ell={self.ell} vs ell={other.ell}")

    def _lift(self, other) -> "SparsePoly":
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(self.ell, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check(other)
        return other

    def _named(self, terms, other=None) -> "SparsePoly":
        out = SparsePoly(self.ell, terms)
        out.names = self.names if self.names is not None else getattr(other, "names", None)
        return out

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return self._named(terms, other)

    __radd__ = __add__

    def __neg__(self):
        return self._named({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coefficient) -> "SparsePoly":
        c = Fraction(c)
        return self._named({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return self._named(terms, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.scale(Fraction(1) / Fraction(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = SparsePoly.constant(self.ell, 1)
        result.names = self.names
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.ell, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ell, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"SparsePoly(ell={self.ell}, {render(self)!r})"

    def __str__(self):
        return render(self)


# calculus and substitutions ---------------------------------------------


def partial_derivative(P: SparsePoly, var: int | Sequence[int]) -> SparsePoly:
    """Formal partial derivative with respect to a variable index or bitstring."""
    if not isinstance(var, int):
        var = var_index(var)
    terms: dict[Exponent, Fraction] = {}
    for exp, c in P.terms.items():
        e = exp[var]
        if e:
            new = list(exp)
            new[var] = e - 1
            terms[tuple(new)] = c * e
    return P._named(terms)


LinearForm = Mapping[int, Coefficient]


def substitute_linear(P: SparsePoly, mapping: Mapping[int, LinearForm], ell: int | None = None) -> SparsePoly:
    """Replace each variable by a linear combination of variables and expand.

    ``mapping[i]`` is a dict ``{target_var: coefficient}``. Every variable
    appearing in ``P`` must be mapped; targets live in arity ``ell``
    (defaults to ``P.ell``).
    """
    ell = P.ell if ell is None else ell
    images: dict[int, SparsePoly] = {}
    powers: dict[tuple[int, int], SparsePoly] = {}

    def power(i: int, e: int) -> SparsePoly:
        key = (i, e)
        if key not in powers:
            if i not in images:
                if i not in mapping:
                    raise KeyError(f"variable {i} has no image")
                images[i] = sum((SparsePoly.var(ell, t).scale(c) for t, c in mapping[i].items()), SparsePoly.zero(ell))
            powers[key] = images[i] if e == 1 else power(i, e - 1) * images[i]
        return powers[key]

    total: dict[Exponent, Fraction] = {}
    for exp, c in P.terms.items():
        term = SparsePoly.constant(ell, c)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        for e2, c2 in term.terms.items():
            total[e2] = total.get(e2, 0) + c2
    out = SparsePoly(ell, total)
    out.names = P.names if ell == P.ell else None
    return out


def homogeneous_part(P: SparsePoly, d: int) -> SparsePoly:
    return P._named({e: c for e, c in P.terms.items() if sum(e) == d})


# rendering ---------------------------------------------------------------


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _mono_text(exp: Exponent, names: Sequence[str], order: Sequence[int]) -> str:
    out = []
    for i in order:
        e = exp[i]
        if e == 1:
            out.append(names[i])
        elif e > 1:
            out.append(f"{names[i]}^{e}")
    return "".join(out)


def _join(pieces: list[tuple[Fraction, str]]) -> str:
    text = ""
    for k, (c, mono) in enumerate(pieces):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if (mag == 1 and mono) else _coeff_text(mag) + mono
        if k == 0:
            text = ("-" if sign == "-" else "") + body
        else:
            text += sign + body
    return text or "0"


def render(P: SparsePoly, style: str = "styled") -> str:
    """Deterministic text for ``P``.

    ``styled`` uses letter names and groups terms by their reference-variable
    monomial, e.g. ``w(x^3+2y^3)+6zxy^2``; ``raw`` lists every term flat with
    ``x_{bits}`` names in graded-lex order.
    """
    if P.is_zero():
        return "0"
    if style == "raw":
        names = raw_names(P.ell)
        order = range(P.nvars)
        return _join([(c, _mono_text(e, names, order)) for e, c in P.sorted_terms()])
    if style != "styled":
        raise ValueError(f"unknown render style {style!r}")
    names = P.names or letter_names(P.ell)
    order = _display_order(P.ell)
    if P.ell == 0:
        terms = sorted(P.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        return _join([(c, _mono_text(e, names, order)) for e, c in terms])
    x0, x1 = outside_vars(P.ell)
    ref_order = order[:-2]
    groups: dict[tuple[int, ...], list[tuple[Exponent, Fraction]]] = {}
    for exp, c in P.terms.items():
        key = tuple(exp[i] for i in ref_order)
        groups.setdefault(key, []).append((exp, c))
    chunks = []
    for key in sorted(groups, key=lambda k: (sum(k), k), reverse=True):
        members = sorted(groups[key], key=lambda kv: (kv[0][x0] + kv[0][x1], kv[0][x0]), reverse=True)
        ref_mono = _mono_text(members[0][0], names, ref_order)
        if len(members) == 1 or not ref_mono:
            chunks.extend((c, _mono_text(e, names, order)) for e, c in members)
        else:
            inner = _join([(c, _mono_text(e, names, (x0, x1))) for e, c in members])
            chunks.append((Fraction(1), f"{ref_mono}({inner})"))
    return _join(chunks)


# parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x_\{[01]+\}|[wz]\d+|[a-z])|(\^)|([-+*()/{}]))")


def parse(text: str, ell: int, names: Sequence[str] | None = None) -> SparsePoly:
    """Inverse of :func:`render`; also accepts ``*``, ``^{..}``, and nested parentheses."""
    lookup = {}
    for table in (raw_names(ell), names or letter_names(ell)):
        lookup.update({name: i for i, name in enumerate(table)})
    tokens: list[tuple[str, str]] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:pos + 10]!r}")
        num, name, caret, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            if name not in lookup:
                raise ValueError(f"unknown variable {name!r} for ell={ell}")
            tokens.append(("var", name))
        elif caret:
            tokens.append(("op", "^"))
        else:
            tokens.append(("op", op))
        pos = m.end()
    parser = _Parser(tokens, ell, lookup)
    out = parser.expr()
    if parser.pos != len(tokens):
        raise ValueError(f"trailing input in polynomial {text!r}")
    out.names = tuple(names) if names is not None else None
    return out


class _Parser:
    def __init__(self, tokens, ell, lookup):
        self.tokens, self.ell, self.lookup, self.pos = tokens, ell, lookup, 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ValueError(f"unexpected token {tok[1]!r}")
        self.pos += 1
        return tok

    def expr(self) -> SparsePoly:
        total = SparsePoly.zero(self.ell)
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        total = total + self.term().scale(sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
            total = total + self.term().scale(sign)
        return total

    def exponent(self) -> int:
        if self.peek() != ("op", "^"):
            return 1
        self.take()
        if self.peek() == ("op", "{"):
            self.take()
            e = int(self.take("num")[1])
            self.take("op", "}")
            return e
        return int(self.take("num")[1])

    def term(self) -> SparsePoly:
        out = SparsePoly.constant(self.ell, 1)
        seen = False
        while True:
            kind, val = self.peek()
            if kind == "num":
                self.take()
                c = Fraction(int(val))
                if self.peek() == ("op", "/"):
                    self.take()
                    c /= int(self.take("num")[1])
                out = out.scale(c)
            elif kind == "var":
                self.take()
                out = out * SparsePoly.var(self.ell, self.lookup[val]) ** self.exponent()
            elif (kind, val) == ("op", "("):
                self.take()
                inner = self.expr()
                self.take("op", ")")
                out = out * inner ** self.exponent()
            elif (kind, val) == ("op", "*") and seen:
                self.take()
                continue
            else:
                break
            seen = True
        if not seen:
            raise ValueError("empty term")
        return out

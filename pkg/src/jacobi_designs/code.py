"""Linear codes over F_q: construction, duals, enumeration, puncturing, catalog."""

from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .field import EUCLIDEAN, HERMITIAN, FieldElement, FieldSpec
from .poly import SparsePoly

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2**24
BUDGET_ENV = "JACOBI_DESIGNS_BUDGET"


class BudgetExceededError(RuntimeError):
    """The code has more codewords than the enumeration budget allows."""


class CodeFormatError(ValueError):
    """A generator-matrix file or catalog name could not be understood."""


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_BUDGET


def _symbol(spec: FieldSpec, value) -> int:
    if isinstance(value, FieldElement):
        if value.spec != spec:
            raise ValueError("generator entry belongs to another field")
        return value.index
    if isinstance(value, (tuple, list)):
        return spec.element(value).index
    value = int(value)
    if not 0 <= value < spec.q:
        raise ValueError(f"symbol {value} not in F_{spec.q}")
    return value


def row_reduce(spec: FieldSpec, rows: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_q (index representation) and its pivot columns."""
    add, mul, neg, inv = spec.add_table, spec.mul_table, spec.neg_table, spec.inv_table
    M = np.array(rows, dtype=np.int64)
    nrows, ncols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        M[[r, piv]] = M[[piv, r]]
        M[r] = mul[inv[M[r, c]], M[r]]
        for i in range(nrows):
            if i != r and M[i, c]:
                M[i] = add[M[i], mul[neg[M[i, c]], M[r]]]
        pivots.append(c)
        r += 1
    return M[:r].copy(), pivots


class CodewordIter:
    """All codewords of a code in lexicographic order of their message vectors."""

    def __init__(self, code: "LinearCode"):
        self.code = code
        self.array = code.codewords()

    def __len__(self):
        return len(self.array)

    def __iter__(self) -> Iterator[tuple[FieldElement, ...]]:
        spec = self.code.spec
        elems = spec.elements()
        for row in self.array:
            yield tuple(elems[s] for s in row)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An F_q-linear code given by a row-reduced generator matrix of symbol indices."""

    spec: FieldSpec
    n: int
    generator: np.ndarray
    ip_mode: str = EUCLIDEAN
    name: str = ""
    dropped_rows: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.ip_mode not in (EUCLIDEAN, HERMITIAN):
            raise ValueError(f"unknown inner product {self.ip_mode!r}")
        if self.ip_mode == HERMITIAN and self.spec.f % 2:
            raise ValueError(f"Hermitian codes need an even-degree field, got F_{self.spec.q}")
        self.generator.setflags(write=False)

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def size(self) -> int:
        return self.q**self.k

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.n == other.n
            and self.ip_mode == other.ip_mode
            and np.array_equal(self.generator, other.generator)
        )

    def __hash__(self):
        return hash((self.spec, self.n, self.ip_mode, self.generator.tobytes()))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"LinearCode{label}([{self.n},{self.k}] over F_{self.q}, {self.ip_mode})"

    # enumeration -------------------------------------------------------
    def codewords(self, budget: int | None = None) -> np.ndarray:
        """(q^k, n) array of symbol indices; message digit 1 is the most significant."""
        budget = default_budget() if budget is None else budget
        if self.size > budget:
            raise BudgetExceededError(f"{self.size} codewords exceed the budget of {budget}")
        return self._all_codewords

    @cached_property
    def _all_codewords(self) -> np.ndarray:
        words = self._enumerate()
        words.setflags(write=False)
        return words

    def _enumerate(self) -> np.ndarray:
        add, mul = self.spec.add_table, self.spec.mul_table
        words = np.zeros((1, self.n), dtype=np.int64)
        for row in self.generator[::-1]:
            scaled = mul[:, row]  # (q, n): c * row for every c
            words = add[np.tile(words, (self.q, 1)), np.repeat(scaled, len(words), axis=0)]
        return words

    def weights(self, budget: int | None = None) -> np.ndarray:
        return np.count_nonzero(self.codewords(budget), axis=1)

    def weight_distribution(self, budget: int | None = None) -> dict[int, int]:
        values, counts = np.unique(self.weights(budget), return_counts=True)
        return {int(w): int(c) for w, c in zip(values, counts)}

    def minimum_distance(self) -> int | None:
        w = self.weights()
        w = w[w > 0]
        return int(w.min()) if len(w) else None

    def rows(self) -> list[tuple[FieldElement, ...]]:
        elems = self.spec.elements()
        return [tuple(elems[s] for s in row) for row in self.generator]

    def contains(self, vector: Sequence) -> bool:
        vec = np.array([_symbol(self.spec, v) for v in vector], dtype=np.int64)
        stacked = np.vstack([self.generator, vec[None, :]])
        return row_reduce(self.spec, stacked)[0].shape[0] == self.k


def from_generator_matrix(
    spec: FieldSpec,
    rows: Sequence[Sequence],
    ip_mode: str = EUCLIDEAN,
    name: str = "",
    n: int | None = None,
) -> LinearCode:
    """Build a code from generator rows (symbol indices, coefficient tuples, or FieldElements).

    Dependent rows are dropped; the count is kept on ``dropped_rows``.
    """
    rows = [list(r) for r in rows]
    lengths = {len(r) for r in rows}
    if len(lengths) > 1:
        raise CodeFormatError(f"ragged generator rows (lengths {sorted(lengths)})")
    if n is None:
        if not lengths:
            raise CodeFormatError("cannot infer the length of a code with no rows")
        n = lengths.pop()
    elif lengths and lengths != {n}:
        raise CodeFormatError(f"rows have length {lengths.pop()}, expected {n}")
    matrix = np.array([[_symbol(spec, v) for v in r] for r in rows], dtype=np.int64).reshape(len(rows), n)
    reduced, _ = row_reduce(spec, matrix)
    dropped = len(rows) - reduced.shape[0]
    if dropped:
        log.warning("dropped %d dependent generator row(s)", dropped)
    return LinearCode(spec, n, reduced, ip_mode, name, dropped)


def dual(C: LinearCode) -> LinearCode:
    """C-perp under the code's inner product, via the null space of the (conjugated) generator."""
    spec = C.spec
    G = C.generator
    if C.ip_mode == HERMITIAN:
        G = row_reduce(spec, spec.conj_table[G])[0]
    pivots = [int(np.nonzero(row)[0][0]) for row in G]
    free = [c for c in range(C.n) if c not in pivots]
    basis = []
    for fcol in free:
        v = np.zeros(C.n, dtype=np.int64)
        v[fcol] = 1
        for r, pcol in enumerate(pivots):
            v[pcol] = spec.neg_table[G[r, fcol]]
        basis.append(v)
    name = f"{C.name}^perp" if C.name else ""
    return from_generator_matrix(spec, basis, C.ip_mode, name, n=C.n)


def enumerate_codewords(C: LinearCode, budget: int | None = None) -> CodewordIter:
    C.codewords(budget)
    return CodewordIter(C)


def direct_sum(*codes: LinearCode, name: str = "") -> LinearCode:
    if not codes:
        raise ValueError("direct sum of nothing")
    spec, mode = codes[0].spec, codes[0].ip_mode
    if any(c.spec != spec or c.ip_mode != mode for c in codes):
        raise ValueError("direct sum needs codes over one field with one inner product")
    n = sum(c.n for c in codes)
    rows = []
    offset = 0
    for c in codes:
        for row in c.generator:
            full = np.zeros(n, dtype=np.int64)
            full[offset : offset + c.n] = row
            rows.append(full)
        offset += c.n
    return from_generator_matrix(spec, rows, mode, name, n=n)


def puncture(C: LinearCode, i: int) -> LinearCode:
    """Delete coordinate ``i`` (1-based)."""
    if not 1 <= i <= C.n:
        raise IndexError(f"coordinate {i} outside 1..{C.n}")
    G = np.delete(C.generator, i - 1, axis=1)
    name = f"{C.name}-{i}" if C.name else ""
    return from_generator_matrix(C.spec, G, C.ip_mode, name, n=C.n - 1)


def punctured_enumerator_multiset(C: LinearCode, i: int, budget: int | None = None) -> SparsePoly:
    """Sum over u in C of x^(n-1-wt(u')) y^wt(u'), u' = u without coordinate i (1-based)."""
    if not 1 <= i <= C.n:
        raise IndexError(f"coordinate {i} outside 1..{C.n}")
    words = np.delete(C.codewords(budget), i - 1, axis=1)
    values, counts = np.unique(np.count_nonzero(words, axis=1), return_counts=True)
    m = C.n - 1
    return SparsePoly(0, {(m - int(w), int(w)): int(c) for w, c in zip(values, counts)})


def is_self_dual(C: LinearCode) -> bool:
    return 2 * C.k == C.n and dual(C) == C


def type_check(C: LinearCode) -> str | None:
    """'I', 'II', 'III', 'IV', or None."""
    if not is_self_dual(C):
        return None
    weights = C.weights()
    q = C.q
    if q == 2 and C.ip_mode == EUCLIDEAN:
        if C.n % 8 == 0 and not np.any(weights % 4):
            return "II"
        return "I" if not np.any(weights % 2) else None
    if q == 3 and C.ip_mode == EUCLIDEAN:
        return "III" if C.n % 4 == 0 and not np.any(weights % 3) else None
    if q == 4 and C.ip_mode == HERMITIAN:
        return "IV" if not np.any(weights % 2) else None
    return None


# catalog ------------------------------------------------------------------

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F4 = FieldSpec(2, 2)

_GOLAY_A = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, 2, 2, 1],
    [1, 1, 0, 1, 2, 2],
    [1, 2, 1, 0, 1, 2],
    [1, 2, 2, 1, 0, 1],
    [1, 1, 2, 2, 1, 0],
]


def _circulant(first: Sequence[int]) -> np.ndarray:
    return np.array([np.roll(first, i) for i in range(len(first))], dtype=np.int64)


def _bordered(corner: int, top: int, side: int, first: Sequence[int]) -> np.ndarray:
    m = len(first) + 1
    B = np.zeros((m, m), dtype=np.int64)
    B[0, 0], B[0, 1:], B[1:, 0] = corner, top, side
    B[1:, 1:] = _circulant(first)
    return B


def _pure(n: int, A: np.ndarray) -> np.ndarray:
    return np.hstack([np.eye(n, dtype=np.int64), A])


def _base_codes() -> dict:
    return {
        # [4,2,3] Type III
        "tetracode": lambda: from_generator_matrix(F3, [[1, 0, 1, 1], [0, 1, 1, 2]], name="tetracode"),
        # [12,6,6] Type III, holds 5-designs
        "golay12": lambda: from_generator_matrix(F3, _pure(6, np.array(_GOLAY_A)), name="golay12"),
        # [2,1,2] Type IV
        "i2": lambda: from_generator_matrix(F4, [[1, 1]], HERMITIAN, name="i2"),
        "rep2": lambda: from_generator_matrix(F2, [[1, 1]], name="rep2"),
        "rep3": lambda: from_generator_matrix(F2, [[1, 1, 1]], name="rep3"),
        # binary extended Hamming [8,4,4]
        "e8": lambda: from_generator_matrix(F2, _E8, name="e8"),
        # e8 read over F_4 with the Hermitian product: [8,4,4] Type IV
        "e8f4": lambda: from_generator_matrix(F4, _E8, HERMITIAN, name="e8f4"),
        # bordered double circulant [16,8,6] Type III
        "dc16": lambda: from_generator_matrix(F3, _pure(8, _bordered(1, 1, 2, [0, 0, 1, 0, 1, 1, 1])), name="dc16"),
        # double circulant [12,6,4] Type IV (A4=45)
        "dc12f4": lambda: from_generator_matrix(F4, _pure(6, _circulant([0, 1, 1, 1, 1, 1])), HERMITIAN, name="dc12f4"),
    }


_E8 = [
    [1, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 1, 1, 0],
]

CATALOG_NAMES = tuple(_base_codes())


def catalog(name: str) -> LinearCode:
    """Pinned codes by name.

    Accepts base names (``tetracode``, ``golay12``, ``i2``, ...), powers
    ``name^m`` (m-fold direct sum), ``+``-joined direct sums, and
    ``file:<path>`` for generator-matrix files.
    """
    name = name.strip()
    if name.startswith("file:"):
        return load_code(name[5:])
    if "+" in name:
        parts = [catalog(p) for p in name.split("+")]
        return direct_sum(*parts, name=name)
    m = re.fullmatch(r"([A-Za-z0-9_]+)(?:\^(\d+))?", name)
    base = _base_codes()
    if not m or m.group(1) not in base:
        raise CodeFormatError(f"unknown catalog code {name!r}; known: {', '.join(base)}")
    code = base[m.group(1)]()
    power = int(m.group(2) or 1)
    if power < 1:
        raise CodeFormatError("direct-sum power must be >= 1")
    if power == 1:
        return code
    return direct_sum(*([code] * power), name=name)


# generator-matrix files ---------------------------------------------------

_HEADER = re.compile(r"q=(\d+)(?:\^(\d+))?\s+n=(\d+)(?:\s+ip=(euclidean|hermitian))?(?:\s+modulus=([\d,]+))?\s*$")


def parse_code(text: str, source: str = "<string>") -> LinearCode:
    """Parse the generator-matrix text format.

    Line 1: ``q=<p>^<f> n=<n> ip=<euclidean|hermitian>`` (optional ``modulus=c0,..,cf``);
    then one row per line, symbols as integers for prime fields or ``a0.a1...``
    basis tuples for extension fields, separated by whitespace or commas.
    ``#`` starts a comment.
    """
    lines = [(no, raw.split("#", 1)[0].strip()) for no, raw in enumerate(text.splitlines(), 1)]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise CodeFormatError(f"{source}: empty code file")
    no, header = lines[0]
    m = _HEADER.fullmatch(header)
    if not m:
        raise CodeFormatError(f"{source}:{no}: bad header {header!r}")
    qtext = m.group(1) + (f"^{m.group(2)}" if m.group(2) else "")
    spec_text = f"q={qtext}" + (f";modulus={m.group(5)}" if m.group(5) else "")
    spec = FieldSpec.parse(spec_text)
    n = int(m.group(3))
    ip = m.group(4) or EUCLIDEAN
    rows = []
    for no, line in lines[1:]:
        tokens = re.split(r"[\s,]+", line)
        if len(tokens) != n:
            raise CodeFormatError(f"{source}:{no}: expected {n} symbols, got {len(tokens)}")
        row = []
        for tok in tokens:
            try:
                if "." in tok:
                    coeffs = tuple(int(t) for t in tok.split("."))
                    if len(coeffs) != spec.f:
                        raise ValueError(f"basis tuple {tok!r} needs {spec.f} entries")
                    row.append(spec.element(coeffs).index)
                else:
                    value = int(tok)
                    if spec.f > 1 and value >= spec.p:
                        raise ValueError(f"use a0.a1 basis tuples for F_{spec.q}, got {tok!r}")
                    row.append(_symbol(spec, value))
            except ValueError as exc:
                raise CodeFormatError(f"{source}:{no}: {exc}") from None
        rows.append(row)
    return from_generator_matrix(spec, rows, ip, name=Path(source).stem if source != "<string>" else "", n=n)


def load_code(path: str | os.PathLike) -> LinearCode:
    path = Path(path)
    return parse_code(path.read_text(), str(path))


def format_code(C: LinearCode) -> str:
    """Serialize ``C`` in the generator-matrix file format."""
    spec = C.spec
    header = f"q={spec.p}^{spec.f} n={C.n} ip={C.ip_mode}"
    if spec.f > 1:
        header += " modulus=" + ",".join(map(str, spec.modulus))
    lines = [header]
    for row in C.generator:
        if spec.f == 1:
            lines.append(" ".join(str(int(s)) for s in row))
        else:
            lines.append(" ".join(".".join(map(str, spec.coeffs_of(int(s)))) for s in row))
    return "\n".join(lines) + "\n"

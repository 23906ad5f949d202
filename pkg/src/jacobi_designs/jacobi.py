"""Weight enumerators, Jacobi polynomials, the MacWilliams transform, and polarization.

Jacobi polynomials with ``ell`` reference vectors live in arity ``ell`` (see
:mod:`jacobi_designs.poly`): the variable for bitstring ``a`` counts the
coordinates whose zero/nonzero pattern across ``(u, w_1, ..., w_ell)`` is
``a``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

import numpy as np

from .code import LinearCode, _symbol
from .poly import SparsePoly, outside_vars, partial_derivative, reference_vars, substitute_linear


class NonIntegralError(ArithmeticError):
    """A polarization formula produced non-integer coefficients."""


def _terms_from_patterns(patterns: np.ndarray, nvars: int) -> dict[tuple[int, ...], int]:
    counts = np.zeros((patterns.shape[0], nvars), dtype=np.int64)
    for a in range(nvars):
        counts[:, a] = np.count_nonzero(patterns == a, axis=1)
    rows, mult = np.unique(counts, axis=0, return_counts=True)
    return {tuple(int(e) for e in row): int(m) for row, m in zip(rows, mult)}


def weight_enumerator(C: LinearCode, budget: int | None = None) -> SparsePoly:
    """W_C(x, y) = sum over codewords of x^(n - wt) y^wt."""
    dist = C.weight_distribution(budget)
    return SparsePoly(0, {(C.n - w, w): a for w, a in dist.items()})


def _check_positions(T: Sequence[int], n: int) -> list[int]:
    out = sorted(set(int(i) for i in T))
    if out and (out[0] < 1 or out[-1] > n):
        raise ValueError(f"coordinate set {out} not inside 1..{n}")
    return out


def jacobi_set(C: LinearCode, T: Sequence[int], budget: int | None = None) -> SparsePoly:
    """J_{C,T}(w, z, x, y): Hamming composition on T (w, z) and off T (x, y).

    ``T`` holds 1-based coordinate places.
    """
    T = _check_positions(T, C.n)
    nz = C.codewords(budget) != 0
    inside = np.zeros(C.n, dtype=bool)
    inside[[i - 1 for i in T]] = True
    m1 = np.count_nonzero(nz[:, inside], axis=1)
    n1 = np.count_nonzero(nz[:, ~inside], axis=1)
    m0 = len(T) - m1
    n0 = (C.n - len(T)) - n1
    # ell = 1 variable order: x, w, y, z
    stacked = np.stack([n0, m0, n1, m1], axis=1)
    rows, mult = np.unique(stacked, axis=0, return_counts=True)
    return SparsePoly(1, {tuple(int(e) for e in r): int(m) for r, m in zip(rows, mult)})


def reference_pattern(refs: Sequence[Sequence], C: LinearCode) -> np.ndarray:
    """Per-coordinate integer encoding of the reference bits (phi of each w_j)."""
    ell = len(refs)
    pattern = np.zeros(C.n, dtype=np.int64)
    for j, w in enumerate(refs, start=1):
        if len(w) != C.n:
            raise ValueError(f"reference vector {j} has length {len(w)}, code length is {C.n}")
        bits = np.array([_symbol(C.spec, s) != 0 for s in w], dtype=np.int64)
        pattern += bits << (ell - j)
    return pattern


def _jacobi_from_mask(nz: np.ndarray, pattern: np.ndarray, ell: int) -> SparsePoly:
    patterns = (nz.astype(np.int64) << ell) + pattern[None, :]
    return SparsePoly(ell, _terms_from_patterns(patterns, 2 ** (ell + 1)))


def jacobi_multi(C: LinearCode, refs: Sequence[Sequence], budget: int | None = None) -> SparsePoly:
    """J_{C, w_1..w_ell}: sum over codewords of prod_a x_a^{N_a(u, w_1, ..., w_ell)}."""
    pattern = reference_pattern(refs, C)
    return _jacobi_from_mask(C.codewords(budget) != 0, pattern, len(refs))


def indicator(n: int, support: Sequence[int]) -> list[int]:
    """0/1 vector of length n with ones on the 1-based ``support``."""
    vec = [0] * n
    for i in support:
        vec[i - 1] = 1
    return vec


# MacWilliams ---------------------------------------------------------------


def macwilliams_transform(J: SparsePoly, q: int, size: int) -> SparsePoly:
    """J_{C-perp} from J_C, where ``size`` = |C|.

    x_(0,r) -> x_(0,r) + (q-1) x_(1,r) and x_(1,r) -> x_(0,r) - x_(1,r), then
    divide by |C|. This is the character-sum substitution grouped by whether
    the summation variable is zero.
    """
    ell = J.ell
    top = 1 << ell
    mapping = {}
    for a in range(2 ** (ell + 1)):
        rest = a & (top - 1)
        if a & top:
            mapping[a] = {rest: 1, top | rest: -1}
        else:
            mapping[a] = {rest: 1, top | rest: q - 1}
    return substitute_linear(J, mapping) / size


# polarization ----------------------------------------------------------------


def embed(P: SparsePoly, ell: int) -> SparsePoly:
    """View a polynomial of arity P.ell inside arity ell >= P.ell (new reference bits zero)."""
    if ell < P.ell:
        raise ValueError(f"cannot embed ell={P.ell} into ell={ell}")
    if ell == P.ell:
        return P
    shift = ell - P.ell
    nvars = 2 ** (ell + 1)
    terms = {}
    for exp, c in P.terms.items():
        new = [0] * nvars
        for i, e in enumerate(exp):
            new[i << shift] = e
        terms[tuple(new)] = c
    return SparsePoly(ell, terms)


def polarize(P: SparsePoly, j: int, ell: int | None = None) -> SparsePoly:
    """A_j P = w_j dP/dx_0 + z_j dP/dx_1 (x_0, x_1 the all-zero / leading-one variables)."""
    ell = max(P.ell, j) if ell is None else ell
    P = embed(P, ell)
    x0, x1 = outside_vars(ell)
    w, z = reference_vars(ell, j)
    return SparsePoly.var(ell, w) * partial_derivative(P, x0) + SparsePoly.var(ell, z) * partial_derivative(P, x1)


def falling_factorial(n: int, t: int) -> int:
    return prod(range(n - t + 1, n + 1))


def jacobi_via_polarization(W: SparsePoly, t_vec: Sequence[int], n: int | None = None) -> SparsePoly:
    """J_{C,t_1..t_ell} = A_ell^{t_ell} ... A_1^{t_1} W / (n (n-1) ... (n-t+1)).

    Valid for generalized t-homogeneous codes with no nonzero codeword of
    weight <= t; non-integral output raises :class:`NonIntegralError`.
    """
    ell = len(t_vec)
    n = W.degree() if n is None else n
    t = sum(t_vec)
    if not W.is_homogeneous(n):
        raise ValueError(f"weight enumerator is not homogeneous of degree {n}")
    if t >= n:
        raise ValueError(f"t={t} must be smaller than n={n}")
    P = embed(W, ell)
    for j, tj in enumerate(t_vec, start=1):
        for _ in range(tj):
            P = polarize(P, j, ell)
    P = P / falling_factorial(n, t)
    if not P.is_integral():
        raise NonIntegralError(f"polarization with t={tuple(t_vec)} gave non-integral coefficients")
    return P


# invariance ----------------------------------------------------------------


@dataclass(frozen=True)
class InvarianceResult:
    invariant: bool
    polynomial: SparsePoly | None
    witness: tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]] | None = None
    choices: int = 0

    def __bool__(self):
        return self.invariant


def _validate_partition(X: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    parts = [_check_positions(part, n) for part in X]
    seen: set[int] = set()
    for part in parts:
        if seen & set(part):
            raise ValueError("partition blocks overlap")
        seen |= set(part)
    return parts


def invariance_check(C: LinearCode, X: Sequence[Sequence[int]], t_vec: Sequence[int], budget: int | None = None) -> InvarianceResult:
    """Is J_{C,w_1..w_ell} the same for every choice of w_i supported in X_i with wt(w_i) = t_i?

    Only supports matter (the polynomial sees reference entries through phi),
    so reference vectors are enumerated as 0/1 indicators.
    """
    parts = _validate_partition(X, C.n)
    if len(parts) != len(t_vec):
        raise ValueError("need one t entry per partition block")
    if any(t < 0 or t > len(part) for t, part in zip(t_vec, parts)):
        raise ValueError(f"t={tuple(t_vec)} infeasible for block sizes {[len(p) for p in parts]}")
    nz = C.codewords(budget) != 0
    ell = len(parts)
    first = None
    first_choice = None
    count = 0
    for choice in itertools.product(*(itertools.combinations(part, t) for part, t in zip(parts, t_vec))):
        refs = [indicator(C.n, s) for s in choice]
        J = _jacobi_from_mask(nz, reference_pattern(refs, C), ell)
        count += 1
        if first is None:
            first, first_choice = J, choice
        elif J != first:
            return InvarianceResult(False, None, (first_choice, choice), count)
    return InvarianceResult(True, first, None, count)


def _set_histogram_poly(hist: np.ndarray, n: int, m: int) -> SparsePoly:
    # hist[m1 * (n + 1) + wt] counts codewords with weight wt, m1 of it inside T
    terms = {}
    for key in np.nonzero(hist)[0]:
        m1, wt = divmod(int(key), n + 1)
        n1 = wt - m1
        terms[(n - m - n1, m - m1, n1, m1)] = int(hist[key])
    return SparsePoly(1, terms)


def distinct_jacobi_set(C: LinearCode, m: int, budget: int | None = None) -> list[SparsePoly]:
    """The distinct J_{C,T} over all T with |T| = m, in first-seen order.

    J_{C,T} only depends on the joint distribution of (weight on T, total
    weight), so each T costs one histogram instead of a full expansion.
    """
    if not 0 <= m <= C.n:
        raise ValueError(f"|T|={m} outside 0..{C.n}")
    nz = (C.codewords(budget) != 0).astype(np.int64)
    wt = nz.sum(axis=1)
    size = (m + 1) * (C.n + 1)
    seen: dict[bytes, SparsePoly] = {}
    for T in itertools.combinations(range(C.n), m):
        inside = nz[:, list(T)].sum(axis=1)
        hist = np.bincount(inside * (C.n + 1) + wt, minlength=size)
        key = hist.tobytes()
        if key not in seen:
            seen[key] = _set_histogram_poly(hist, C.n, m)
    out: dict[SparsePoly, None] = {}
    for P in seen.values():
        out.setdefault(P, None)
    return list(out)


def span_rank(polys: Sequence[SparsePoly]) -> int:
    """Rank over Q of the coefficient vectors of ``polys``."""
    monos = sorted({e for P in polys for e in P.terms})
    rows = [[P.coefficient(e) for e in monos] for P in polys]
    rank = 0
    ncols = len(monos)
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = Fraction(rows[r][c]) / pv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def collapse_reference(J: SparsePoly, j: int) -> SparsePoly:
    """Merge reference j into the outside letters (w_j -> x, z_j -> y pattern-wise), dropping it."""
    ell = J.ell
    if not 1 <= j <= ell:
        raise ValueError(f"reference {j} outside 1..{ell}")
    bit = ell - j  # position of reference j within the index, counted from the right
    terms: dict[tuple[int, ...], Fraction] = {}
    nvars_new = 2**ell
    for exp, c in J.terms.items():
        new = [0] * nvars_new
        for a, e in enumerate(exp):
            if e:
                high = a >> (bit + 1)
                low = a & ((1 << bit) - 1)
                new[(high << bit) | low] += e
        key = tuple(new)
        terms[key] = terms.get(key, 0) + c
    return SparsePoly(ell - 1, terms)

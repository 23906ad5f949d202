"""Block designs held by the codewords of a fixed weight.

Points are the 1-based coordinate places of the code. A block family can be
built in three modes:

``multiset``
    one block per codeword of the weight (the definition of B(C_k));
``support``
    one block per distinct support;
``projective``
    one block per codeword up to nonzero scalar multiples.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from .code import LinearCode

MODES = ("multiset", "support", "projective")


class EmptyFamilyError(ValueError):
    """No codewords of the requested weight."""


def _mask(points: Sequence[int]) -> int:
    out = 0
    for p in points:
        out |= 1 << (p - 1)
    return out


def _points(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class BlockFamily:
    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...]
    mode: str = "support"

    def __post_init__(self):
        for b in self.blocks:
            if len(b) != self.k or any(not 1 <= p <= self.v for p in b):
                raise ValueError(f"block {b} is not a {self.k}-subset of 1..{self.v}")

    def __len__(self):
        return len(self.blocks)

    @property
    def masks(self) -> np.ndarray:
        return np.array([_mask(b) for b in self.blocks], dtype=np.int64)


def _support_masks(words: np.ndarray) -> np.ndarray:
    weights = 1 << np.arange(words.shape[1], dtype=np.int64)
    return ((words != 0).astype(np.int64) * weights).sum(axis=1)


def _projective_rows(C: LinearCode, words: np.ndarray) -> np.ndarray:
    # scale every word so its first nonzero symbol is 1, then deduplicate
    if len(words) == 0:
        return words
    first = np.argmax(words != 0, axis=1)
    lead = words[np.arange(len(words)), first]
    scaled = C.spec.mul_table[C.spec.inv_table[lead][:, None], words]
    return np.unique(scaled, axis=0)


def blocks_from_code(C: LinearCode, k: int, mode: str = "support") -> BlockFamily:
    """Supports of the weight-k codewords."""
    if not 0 < k <= C.n:
        raise ValueError(f"block size {k} outside 1..{C.n}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; choose from {MODES}")
    words = C.codewords()
    words = words[np.count_nonzero(words, axis=1) == k]
    if mode == "projective":
        words = _projective_rows(C, words)
    masks = _support_masks(words)
    if mode == "support":
        masks = np.unique(masks)
    else:
        masks = np.sort(masks)
    blocks = tuple(sorted(_points(int(m)) for m in masks))
    return BlockFamily(C.n, k, blocks, mode)


@dataclass(frozen=True)
class DesignSpectrum:
    v: int
    k: int
    t: int
    histogram: dict[int, int]
    block_count: int

    @property
    def is_design(self) -> bool:
        return len(self.histogram) == 1

    @property
    def lambda_max(self) -> int:
        return max(self.histogram)

    @property
    def lambda_min(self) -> int:
        return min(self.histogram)

    def parameters(self) -> str:
        """``t-(v,k,(l1^a1,...,lN^aN))`` with groups in increasing lambda."""
        groups = ",".join(f"{lam}^{{{a}}}" for lam, a in sorted(self.histogram.items()))
        return f"{self.t}-({self.v},{self.k},({groups}))"

    def statement(self) -> str:
        return (
            f"D_{self.lambda_max}({self.v},{self.k},{self.t}) ≤ {self.block_count} "
            f"≤ C_{self.lambda_min}({self.v},{self.k},{self.t})"
        )


def t_spectrum(B: BlockFamily, t: int) -> DesignSpectrum:
    """How many blocks contain each t-subset of the points, as a histogram lambda -> #t-subsets."""
    if not 0 <= t <= B.k:
        raise ValueError(f"t={t} must lie in 0..{B.k}")
    masks = B.masks
    hist: dict[int, int] = {}
    for T in itertools.combinations(range(1, B.v + 1), t):
        m = _mask(T)
        lam = int(np.count_nonzero((masks & m) == m))
        hist[lam] = hist.get(lam, 0) + 1
    return DesignSpectrum(B.v, B.k, t, dict(sorted(hist.items())), len(B))


@dataclass(frozen=True)
class DesignReport:
    spectrum: DesignSpectrum
    mode: str
    count_mode: str | None = None

    @property
    def text(self) -> str:
        lines = [self.spectrum.parameters(), self.spectrum.statement()]
        if self.spectrum.is_design:
            lines.append(f"t-design: lambda={self.spectrum.lambda_max}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        s = self.spectrum
        return {
            "v": s.v,
            "k": s.k,
            "t": s.t,
            "mode": self.mode,
            "count_mode": self.count_mode or self.mode,
            "spectrum": [{"lambda": lam, "count": a} for lam, a in sorted(s.histogram.items())],
            "blocks": s.block_count,
            "design": s.is_design,
            "parameters": s.parameters(),
            "statement": s.statement(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True)


def design_report(B: BlockFamily, t: int, block_count: int | None = None, count_mode: str | None = None) -> DesignReport:
    """Spectrum, parameters and packing/covering statement for ``B``.

    ``block_count`` replaces the number printed as B in the statement; it is
    how :func:`code_design_report` reports lambdas from one block mode and
    the block count from another.
    """
    if not B.blocks:
        raise EmptyFamilyError(f"no blocks of size {B.k}")
    spec = t_spectrum(B, t)
    if block_count is not None:
        spec = DesignSpectrum(spec.v, spec.k, spec.t, spec.histogram, block_count)
    return DesignReport(spec, B.mode, count_mode)


def code_design_report(C: LinearCode, k: int, t: int, mode: str = "support", count_mode: str | None = None) -> DesignReport:
    """Design report for the weight-k codewords of C.

    Lambdas are counted over the ``mode`` family. With ``count_mode`` set,
    the block count B comes from that family instead; ``mode="support",
    count_mode="projective"`` gives distinct supports for lambda and
    codewords up to scalars for B.
    """
    B = blocks_from_code(C, k, mode)
    if count_mode is None or count_mode == mode:
        return design_report(B, t)
    return design_report(B, t, len(blocks_from_code(C, k, count_mode)), count_mode)


# generalized designs -------------------------------------------------------


@dataclass(frozen=True)
class GeneralizedDesignResult:
    lam: int | None
    block_count: int
    witness: tuple[tuple[tuple[int, ...], int], tuple[tuple[int, ...], int]] | None = None
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def is_design(self) -> bool:
        return self.lam is not None


def _check_partition(X: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    parts = [tuple(sorted(set(p))) for p in X]
    flat = [i for p in parts for i in p]
    if len(flat) != len(set(flat)):
        raise ValueError("partition blocks overlap")
    if any(not 1 <= i <= n for i in flat):
        raise ValueError(f"partition points outside 1..{n}")
    return parts


def _part_weights(words: np.ndarray, parts: Sequence[tuple[int, ...]]) -> np.ndarray:
    nz = words != 0
    return np.stack([np.count_nonzero(nz[:, [i - 1 for i in p]], axis=1) for p in parts], axis=1)


def _select_words(C: LinearCode, parts, k_vec, mode: str) -> np.ndarray:
    words = C.codewords()
    words = words[np.all(_part_weights(words, parts) == np.array(k_vec), axis=1)]
    if mode == "projective":
        words = _projective_rows(C, words)
    masks = _support_masks(words)
    if mode == "support":
        masks = np.unique(masks)
    return masks


def generalized_design_check(
    C: LinearCode,
    X: Sequence[Sequence[int]],
    k_vec: Sequence[int],
    t_vec: Sequence[int],
    mode: str = "multiset",
) -> GeneralizedDesignResult:
    """Is (X, B(C_k)) a t-(v,k,lambda) design? Returns lambda, or None with a witness pair."""
    parts = _check_partition(X, C.n)
    if not (len(parts) == len(k_vec) == len(t_vec)):
        raise ValueError("X, k_vec and t_vec need the same length")
    for p, k, t in zip(parts, k_vec, t_vec):
        if not 0 <= t <= k <= len(p):
            raise ValueError(f"need 0 <= t <= k <= |X_i|, got t={t}, k={k}, |X_i|={len(p)}")
    masks = _select_words(C, parts, k_vec, mode)
    seen: dict[int, tuple[tuple[int, ...], int]] = {}
    for choice in itertools.product(*(itertools.combinations(p, t) for p, t in zip(parts, t_vec))):
        T = tuple(sorted(i for part in choice for i in part))
        m = _mask(T)
        lam = int(np.count_nonzero((masks & m) == m))
        seen.setdefault(lam, (T, lam))
    counts = {lam: 1 for lam in seen}
    if len(seen) == 1:
        return GeneralizedDesignResult(next(iter(seen)), len(masks), None, counts)
    a, b = list(seen.values())[:2]
    return GeneralizedDesignResult(None, len(masks), (a, b), counts)


@dataclass(frozen=True)
class HomogeneityResult:
    homogeneous: bool
    failure: tuple[tuple[int, ...], tuple[int, ...], GeneralizedDesignResult] | None = None
    checked: int = 0

    def __bool__(self):
        return self.homogeneous


def is_generalized_t_homogeneous(
    C: LinearCode, X: Sequence[Sequence[int]] | None, t: int, mode: str = "multiset"
) -> HomogeneityResult:
    """Do the codewords of every split weight k hold generalized t-designs?

    ``X=None`` means the single block [n].
    """
    parts = _check_partition(X if X is not None else [range(1, C.n + 1)], C.n)
    words = C.codewords()
    weights = _part_weights(words, parts)
    k_vecs = sorted({tuple(int(x) for x in row) for row in weights if 0 < sum(row) and sum(row) >= t})
    checked = 0
    for k_vec in k_vecs:
        for t_vec in itertools.product(*(range(min(k, t) + 1) for k in k_vec)):
            if sum(t_vec) != t:
                continue
            res = generalized_design_check(C, parts, k_vec, t_vec, mode)
            checked += 1
            if not res.is_design:
                return HomogeneityResult(False, (k_vec, t_vec, res), checked)
    return HomogeneityResult(True, None, checked)


def double_count_ok(spec: DesignSpectrum) -> bool:
    """sum lambda * a_lambda == |B| * C(k, t) and sum a_lambda == C(v, t)."""
    total = sum(spec.histogram.values())
    weighted = sum(lam * a for lam, a in spec.histogram.items())
    return total == comb(spec.v, spec.t) and weighted == spec.block_count * comb(spec.k, spec.t)

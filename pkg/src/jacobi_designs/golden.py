"""Reference-value suite: recompute every pinned polynomial, series and design statement.

Golden data lives in the ``golden`` package directory: ``manifest.json``
lists the cases and each polynomial case points at a text file holding the
canonical rendering (one polynomial per line for spanning sets).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable

from .code import catalog
from .design import code_design_report
from .jacobi import distinct_jacobi_set, jacobi_set, jacobi_via_polarization, weight_enumerator
from .molien import molien_bivariate, named_group, render_part
from .poly import render


def default_golden_dir() -> Path:
    return Path(str(resources.files("jacobi_designs") / "golden"))


@dataclass(frozen=True)
class CaseResult:
    id: str
    ok: bool
    expected: str
    actual: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.id}"


def parse_spectrum(text: str) -> tuple[tuple[int, int, int], dict[int, int]]:
    """``t-(v,k,(l1^{a1},...))`` -> ((t, v, k), {lambda: count}); outer parentheses optional."""
    m = re.fullmatch(r"\s*(\d+)-\((\d+),(\d+),\(?(.*?)\)?\)\s*", text)
    if not m:
        raise ValueError(f"cannot parse design parameters {text!r}")
    t, v, k = (int(m.group(i)) for i in (1, 2, 3))
    hist: dict[int, int] = {}
    for part in m.group(4).split(","):
        pm = re.fullmatch(r"(\d+)\^\{?(\d+)\}?", part.strip())
        if not pm:
            raise ValueError(f"bad spectrum group {part!r}")
        hist[int(pm.group(1))] = hist.get(int(pm.group(1)), 0) + int(pm.group(2))
    return (t, v, k), hist


@lru_cache(maxsize=None)
def _code(name: str):
    return catalog(name)


@lru_cache(maxsize=None)
def _table(group: str, d: int):
    return molien_bivariate(named_group(group), d)


def _read(golden_dir: Path, name: str) -> str:
    return (golden_dir / name).read_text().strip()


def run_case(case: dict, golden_dir: Path) -> CaseResult:
    kind = case["kind"]
    if kind == "jacobi":
        actual = render(jacobi_set(_code(case["code"]), case["T"]))
        expected = _read(golden_dir, case["file"])
        return CaseResult(case["id"], actual == expected, expected, actual)
    if kind == "polarization":
        C = _code(case["code"])
        actual = render(jacobi_via_polarization(weight_enumerator(C), case["t"], C.n))
        expected = _read(golden_dir, case["file"])
        return CaseResult(case["id"], actual == expected, expected, actual)
    if kind == "jacobi_span":
        polys = distinct_jacobi_set(_code(case["code"]), case["m"])
        actual_set = sorted(render(P) for P in polys)
        expected_set = sorted(_read(golden_dir, case["file"]).splitlines())
        return CaseResult(case["id"], actual_set == expected_set, "\n".join(expected_set), "\n".join(actual_set))
    if kind == "molien":
        actual = render_part(_table(case["group"], case["d"]), case["d"])
        expected = _read(golden_dir, case["file"])
        return CaseResult(case["id"], actual == expected, expected, actual)
    if kind in ("statement", "spectrum"):
        rep = code_design_report(_code(case["code"]), case["k"], case["t"], case.get("mode", "support"), case.get("count_mode"))
        if kind == "statement":
            actual = rep.spectrum.statement()
            return CaseResult(case["id"], actual == case["expected"], case["expected"], actual)
        s = rep.spectrum
        actual = s.parameters()
        ok = parse_spectrum(actual) == parse_spectrum(case["expected"])
        return CaseResult(case["id"], ok, case["expected"], actual)
    raise ValueError(f"case {case.get('id')!r} has unknown kind {kind!r}")


def load_manifest(golden_dir: Path | None = None) -> list[dict]:
    golden_dir = Path(golden_dir) if golden_dir else default_golden_dir()
    data = json.loads((golden_dir / "manifest.json").read_text())
    return data["cases"]


def select(cases: list[dict], only: Iterable[str] | None) -> list[dict]:
    """Cases whose id starts with any of the ``only`` prefixes (all when ``only`` is empty)."""
    prefixes = list(only or [])
    if not prefixes:
        return cases
    return [c for c in cases if any(c["id"].startswith(p) for p in prefixes)]


def run_suite(golden_dir: Path | None = None, only: Iterable[str] | None = None) -> list[CaseResult]:
    golden_dir = Path(golden_dir) if golden_dir else default_golden_dir()
    cases = select(load_manifest(golden_dir), only)
    results = []
    for case in cases:
        try:
            results.append(run_case(case, golden_dir))
        except (OSError, ValueError, KeyError, ArithmeticError) as exc:
            results.append(CaseResult(case.get("id", "?"), False, "", f"error: {exc}"))
    return results

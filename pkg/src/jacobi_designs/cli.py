"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import code as codes
from .code import BudgetExceededError, CodeFormatError, LinearCode, catalog, dual, type_check
from .design import MODES, EmptyFamilyError, code_design_report, generalized_design_check
from .jacobi import (
    NonIntegralError,
    indicator,
    jacobi_multi,
    jacobi_set,
    jacobi_via_polarization,
    macwilliams_transform,
    polarize,
    weight_enumerator,
)
from .molien import (
    DEFAULT_DEGREE,
    load_group,
    molien_bivariate,
    named_group,
    poly_from_roots_text,
    render_part,
    verify_denominator,
)
from .poly import SparsePoly, parse, render

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# argument helpers ----------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _partition(text: str) -> list[list[int]]:
    return [_int_list(part) for part in text.split("|")]


def _refs(text: str, C: LinearCode) -> list[list]:
    """``;``-separated vectors, entries split by commas; ``a0.a1`` for extension-field symbols."""
    out = []
    for chunk in text.split(";"):
        entries = [e for e in chunk.replace(" ", "").split(",") if e]
        vec = []
        for e in entries:
            try:
                vec.append(tuple(int(c) for c in e.split(".")) if "." in e else int(e))
            except ValueError:
                raise UsageError(f"bad reference entry {e!r}") from None
        if len(vec) != C.n:
            raise UsageError(f"reference vector has {len(vec)} entries, code length is {C.n}")
        out.append(vec)
    return out


def _load(args) -> LinearCode:
    if args.catalog and args.file:
        raise UsageError("give either --catalog or --file, not both")
    if args.catalog:
        return catalog(args.catalog)
    if args.file:
        return codes.load_code(args.file)
    raise UsageError("a code is required: --catalog NAME or --file PATH")


def _emit(args, text_lines: Sequence[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _render(P: SparsePoly, args) -> str:
    return render(P, getattr(args, "style", "styled"))


# subcommands ---------------------------------------------------------------


def cmd_we(args) -> int:
    C = _load(args)
    W = weight_enumerator(C, args.budget)
    text = _render(W, args)
    dist = C.weight_distribution(args.budget)
    _emit(args, [text], {"polynomial": text, "n": C.n, "k": C.k, "q": C.q, "distribution": {str(w): a for w, a in dist.items()}})
    return EXIT_OK


def _direct_for_t(C: LinearCode, t_vec: list[int], budget) -> SparsePoly:
    # disjoint consecutive supports: w_1 on 1..t_1, w_2 on the next t_2 places, ...
    refs, start = [], 1
    for t in t_vec:
        refs.append(indicator(C.n, range(start, start + t)))
        start += t
    if len(t_vec) == 1:
        return jacobi_set(C, list(range(1, t_vec[0] + 1)), budget)
    return jacobi_multi(C, refs, budget)


def cmd_jacobi(args) -> int:
    C = _load(args)
    chosen = [a for a in (args.T, args.refs, args.t) if a is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --T, --refs, --t")
    payload: dict = {}
    lines = []
    status = EXIT_OK
    if args.T is not None:
        P = jacobi_set(C, _int_list(args.T), args.budget)
        method = "direct"
    elif args.refs is not None:
        P = jacobi_multi(C, _refs(args.refs, C), args.budget)
        method = "direct"
    else:
        t_vec = _int_list(args.t)
        if sum(t_vec) > C.n:
            raise UsageError(f"t={t_vec} needs more than {C.n} coordinates")
        try:
            P = jacobi_via_polarization(weight_enumerator(C, args.budget), t_vec, C.n)
        except NonIntegralError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
        method = "polarization"
    if args.via_polarization and method != "polarization":
        raise UsageError("--via-polarization goes with --t")
    text = _render(P, args)
    lines.append(text)
    payload.update({"polynomial": text, "method": method, "ell": P.ell})
    if args.via_polarization:
        direct = _direct_for_t(C, t_vec, args.budget)
        match = direct == P
        lines.append("MATCH" if match else "MISMATCH")
        payload["match"] = match
        payload["direct"] = _render(direct, args)
        if not match:
            status = EXIT_MISMATCH
    _emit(args, lines, payload)
    return status


def cmd_mw(args) -> int:
    if args.poly is not None:
        if args.q is None or args.size is None:
            raise UsageError("--poly needs --q and --size")
        P = parse(args.poly, args.ell)
        out = macwilliams_transform(P, args.q, args.size)
        text = _render(out, args)
        _emit(args, [text], {"polynomial": text})
        return EXIT_OK
    C = _load(args)
    D = dual(C)
    if args.T is not None:
        T = _int_list(args.T)
        J, JD = jacobi_set(C, T, args.budget), jacobi_set(D, T, args.budget)
    elif args.refs is not None:
        refs = _refs(args.refs, C)
        J, JD = jacobi_multi(C, refs, args.budget), jacobi_multi(D, refs, args.budget)
    else:
        J, JD = weight_enumerator(C, args.budget), weight_enumerator(D, args.budget)
    out = macwilliams_transform(J, C.q, C.size)
    consistent = out == JD
    self_dual = consistent and D == C
    verdict = "SELF-DUAL-CONSISTENT" if self_dual else ("DUAL-CONSISTENT" if consistent else "MISMATCH")
    text = _render(out, args)
    _emit(args, [text, verdict], {"polynomial": text, "verdict": verdict, "self_dual": D == C})
    return EXIT_OK if consistent else EXIT_MISMATCH


def cmd_polarize(args) -> int:
    P = parse(args.poly, args.ell)
    ell = max(args.ell, args.j)
    for _ in range(args.times):
        P = polarize(P, args.j, ell)
    if args.divide:
        P = P / args.divide
    text = _render(P, args)
    _emit(args, [text], {"polynomial": text, "ell": P.ell})
    return EXIT_OK


def cmd_design(args) -> int:
    C = _load(args)
    if args.partition:
        X = _partition(args.partition)
        k_vec, t_vec = _int_list(args.k), _int_list(args.t)
        res = generalized_design_check(C, X, k_vec, t_vec, args.mode)
        if res.is_design:
            line = f"generalized design: lambda={res.lam} blocks={res.block_count}"
        else:
            (T1, l1), (T2, l2) = res.witness
            line = f"not a generalized design: T={list(T1)} in {l1} blocks, T={list(T2)} in {l2} blocks"
        payload = {
            "design": res.is_design,
            "lambda": res.lam,
            "blocks": res.block_count,
            "witness": [{"T": list(T), "lambda": lam} for T, lam in res.witness] if res.witness else None,
        }
        _emit(args, [line], payload)
        return EXIT_OK
    k, t = int(args.k), int(args.t)
    try:
        rep = code_design_report(C, k, t, args.mode, args.count_mode)
    except EmptyFamilyError:
        _emit(
            args,
            [f"no blocks: C has no codewords of weight {k}"],
            {"v": C.n, "k": k, "t": t, "blocks": 0, "design": False, "spectrum": [], "statement": None},
        )
        return EXIT_OK
    s = rep.spectrum
    line = f"{s.parameters()} ; {s.statement()}"
    lines = [line]
    if s.is_design:
        lines.append(f"t-design: lambda={s.lambda_max}")
    _emit(args, lines, rep.to_dict())
    return EXIT_OK


def _group(name: str):
    if name.startswith("file:"):
        return load_group(name[5:])
    try:
        return named_group(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def cmd_molien(args) -> int:
    G = _group(args.group)
    D = args.max_degree
    if args.part is not None and args.part > D:
        D = args.part
    table = molien_bivariate(G, D)
    status = EXIT_OK
    if args.denominator:
        check = verify_denominator(table, poly_from_roots_text(args.denominator), D=D)
        verdict = "DENOMINATOR-OK" if check.ok else f"DENOMINATOR-FAIL at u^{check.witness[0]}v^{check.witness[1]}"
        _emit(args, [verdict], {"order": table.order, "max_degree": D, "denominator_ok": check.ok, "witness": check.witness})
        return EXIT_OK if check.ok else EXIT_MISMATCH
    if args.part is not None:
        text = render_part(table, args.part)
        coeffs = [table.coefficients[(i, args.part - i)] for i in range(args.part, -1, -1)]
        _emit(args, [text], {"order": table.order, "degree": args.part, "polynomial": text, "coefficients": coeffs})
        return status
    if args.format == "json":
        rows = [{"i": i, "j": j, "c": c} for (i, j), c in sorted(table.coefficients.items(), key=lambda kv: (sum(kv[0]), -kv[0][0]))]
        _emit(args, [], {"order": table.order, "max_degree": D, "table": rows})
    else:
        sys.stdout.write(table.to_csv())
    return status


def cmd_catalog(args) -> int:
    if args.name:
        C = catalog(args.name)
        if args.format == "json":
            _emit(args, [], {"name": args.name, "n": C.n, "k": C.k, "q": C.q, "ip": C.ip_mode, "type": type_check(C), "generator": codes.format_code(C)})
        else:
            sys.stdout.write(codes.format_code(C))
        return EXIT_OK
    entries = []
    lines = []
    for name in codes.CATALOG_NAMES:
        C = catalog(name)
        kind = type_check(C) or "-"
        dist = C.weight_distribution()
        entries.append({"name": name, "n": C.n, "k": C.k, "q": C.q, "ip": C.ip_mode, "type": type_check(C), "distribution": {str(w): a for w, a in dist.items()}})
        lines.append(f"{name:10s} [{C.n},{C.k}] F_{C.q} {C.ip_mode:9s} type {kind:3s} " + " ".join(f"A{w}={a}" for w, a in dist.items()))
    _emit(args, lines, {"codes": entries})
    return EXIT_OK


def cmd_verify(args) -> int:
    from .golden import default_golden_dir, load_manifest, run_suite, select

    if args.suite != "golden":
        raise UsageError(f"unknown suite {args.suite!r}")
    golden_dir = Path(args.golden_dir) if args.golden_dir else default_golden_dir()
    if not select(load_manifest(golden_dir), args.only):
        raise UsageError("no cases selected")
    results = run_suite(golden_dir, args.only)
    failed = [r for r in results if not r.ok]
    lines = [r.line() for r in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} passed")
    payload = {
        "passed": len(results) - len(failed),
        "total": len(results),
        "results": [{"id": r.id, "ok": r.ok} for r in results],
        "failures": [{"id": r.id, "expected": r.expected, "actual": r.actual} for r in failed],
    }
    _emit(args, lines, payload)
    return EXIT_MISMATCH if failed else EXIT_OK


# parser --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, default=None, help="maximum number of codewords to enumerate")
    common.add_argument("--style", choices=("styled", "raw"), default="styled", help="polynomial variable names")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--catalog", help="catalog name, e.g. tetracode, golay12, i2^3, tetracode+i2")
    source.add_argument("--file", help="generator-matrix file")

    p = _Parser(prog="jacobi-designs", description="Jacobi polynomials, designs and Molien series of linear codes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("we", parents=[common, source], help="weight enumerator")
    s.set_defaults(func=cmd_we)

    s = sub.add_parser("jacobi", parents=[common, source], help="Jacobi polynomial")
    s.add_argument("--T", help="1-based coordinate set, e.g. 1,2")
    s.add_argument("--refs", help="reference vectors separated by ';'")
    s.add_argument("--t", help="polarization strengths t_1,...,t_ell")
    s.add_argument("--via-polarization", action="store_true", help="compare the polarization result with direct enumeration")
    s.set_defaults(func=cmd_jacobi)

    s = sub.add_parser("mw", parents=[common, source], help="MacWilliams transform")
    s.add_argument("--T")
    s.add_argument("--refs")
    s.add_argument("--poly", help="transform a polynomial instead of a code")
    s.add_argument("--ell", type=int, default=0)
    s.add_argument("--q", type=int)
    s.add_argument("--size", type=int, help="|C| for --poly")
    s.set_defaults(func=cmd_mw)

    s = sub.add_parser("polarize", parents=[common], help="apply the polarization operator A_j")
    s.add_argument("--poly", required=True)
    s.add_argument("--ell", type=int, default=0, help="arity of the input polynomial")
    s.add_argument("--j", type=int, default=1)
    s.add_argument("--times", type=int, default=1)
    s.add_argument("--divide", type=int, default=0, help="divide the result by this integer")
    s.set_defaults(func=cmd_polarize)

    s = sub.add_parser("design", parents=[common, source], help="design spectrum of fixed-weight codewords")
    s.add_argument("--k", required=True, help="block size (comma list with --partition)")
    s.add_argument("--t", required=True, help="strength (comma list with --partition)")
    s.add_argument("--mode", choices=MODES, default=None)
    s.add_argument("--count-mode", choices=MODES, default=None, help="family used for the block count B")
    s.add_argument("--partition", help="point blocks separated by '|', e.g. 1,2,3|4,5,6")
    s.set_defaults(func=cmd_design)

    s = sub.add_parser("molien", parents=[common], help="bivariate Molien series")
    s.add_argument("--group", required=True, help="g3, g4, identity, or file:PATH")
    s.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE)
    s.add_argument("--part", type=int, help="print only f[d]")
    s.add_argument("--denominator", help="check a denominator d(u) such as (1-u^2)(1-u^6)")
    s.set_defaults(func=cmd_molien)

    s = sub.add_parser("catalog", parents=[common], help="list or show catalog codes")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("verify", parents=[common], help="run the reference-value suite")
    s.add_argument("--suite", default="golden")
    s.add_argument("--golden-dir")
    s.add_argument("--only", action="append", help="case id prefix (repeatable)")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "command", None) == "design" and args.mode is None:
        args.mode = "multiset" if args.partition else "support"
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CodeFormatError, BudgetExceededError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: roots, group, kl, skl, epsilon, verify-main, sigchar, sweep.
Reduced words are digit strings ("121" is s1 s2 s1, "e" the identity);
roots are comma-separated simple-root coefficients; weights are
comma-separated rationals in fundamental-weight coordinates or the
symbolic "-rho".  Output is deterministic for a fixed configuration.
Exit codes: 0 success, 1 verification mismatch, 2 configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .acceptance import render, run_all
from .affine import alcove_of, gallery, meets_chamber
from .errors import ConfigError, SignedKLError
from .kl import KLTable
from .rootsystem import RootSystem, build_root_system
from .sigchar import signature_character_alcove_sum, signature_character_by_crossings
from .signs import epsilon_hyperplane
from .skl import SKLTable, verify_main_theorem
from .weyl import WeylGroup


def _parse_noncompact(text: str | None, rank: int) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        idx = {int(tok) - 1 for tok in text.split(",") if tok.strip()}
    except ValueError as exc:
        raise ConfigError(f"bad noncompact list {text!r}") from exc
    if any(not 0 <= i < rank for i in idx):
        raise ConfigError(f"noncompact indices out of 1..{rank}")
    return frozenset(idx)


def _parse_lambda(text: str, system: RootSystem) -> tuple[Fraction, ...]:
    if text.strip() in ("-rho", "-ρ"):
        return tuple(-c for c in system.rho())
    try:
        coords = tuple(Fraction(tok.strip()) for tok in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad weight {text!r}") from exc
    if len(coords) != system.rank:
        raise ConfigError(f"weight needs {system.rank} coordinates")
    return coords


def _parse_root(text: str, system: RootSystem) -> tuple[int, ...]:
    try:
        coeffs = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"bad root {text!r}") from exc
    if len(coeffs) != system.rank:
        raise ConfigError(f"root needs {system.rank} coefficients")
    return coeffs


def _read_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"bad config line {line!r}")
            key, value = line.split("=", 1)
            out[key.strip().lower()] = value.strip()
    return out


def _build(args) -> tuple[RootSystem, WeylGroup]:
    ctype, rank, nc_text = args.type, args.rank, args.noncompact
    if getattr(args, "config", None):
        cfg = _read_config(args.config)
        ctype = ctype or cfg.get("type")
        rank = rank or (int(cfg["rank"]) if "rank" in cfg else None)
        nc_text = nc_text or cfg.get("noncompact")
    if not ctype:
        raise ConfigError("missing --type")
    ctype = ctype.strip().upper()
    if rank is None:
        if len(ctype) == 2 and ctype[1].isdigit():
            ctype, rank = ctype[0], int(ctype[1])
        else:
            raise ConfigError("missing --rank")
    elif len(ctype) == 2 and ctype[1].isdigit():
        ctype = ctype[0]
    nc = _parse_noncompact(nc_text, rank)
    system = build_root_system(ctype, rank, nc)
    return system, WeylGroup(system)


def _emit(args, payload, csv_rows=None, pretty: str | None = None) -> None:
    fmt = args.format
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    elif fmt == "csv":
        if csv_rows is None:
            raise ConfigError("csv format not supported for this command")
        buf = io.StringIO()
        writer = csv.writer(buf)
        for row in csv_rows:
            writer.writerow(row)
        text = buf.getvalue().rstrip("\n")
    else:
        text = pretty if pretty is not None else json.dumps(payload, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- subcommands ---------------------------------------------------------------


def _cmd_roots(args) -> int:
    system, _ = _build(args)
    payload = system.to_dict()
    rows = [["coeffs", "height", "norm_sq", "epsilon"]] + [
        [" ".join(map(str, r["coeffs"])), r["height"], r["norm_sq"], r["epsilon"]]
        for r in payload["positive_roots"]
    ]
    pretty = "\n".join(
        f"{tuple(r['coeffs'])}  ht={r['height']}  |.|^2={r['norm_sq']}  eps={r['epsilon']}"
        for r in payload["positive_roots"]
    )
    _emit(args, payload, rows, pretty)
    return 0


def _cmd_group(args) -> int:
    system, group = _build(args)
    elements = [
        {
            "word": group.format_word(group.element(i)),
            "length": group.lengths[i],
            "inversions": len(group.inversion_set(group.element(i))),
        }
        for i in range(group.order)
    ]
    payload = {"system": f"{system.cartan_type}{system.rank}", "order": group.order,
               "elements": elements}
    rows = [["word", "length"]] + [[e["word"], e["length"]] for e in elements]
    pretty = f"|W| = {group.order}\n" + "\n".join(
        f"{e['word']:>10}  l={e['length']}" for e in elements
    )
    _emit(args, payload, rows, pretty)
    return 0


def _cmd_kl(args) -> int:
    system, group = _build(args)
    table = KLTable(group, method=args.method)
    if args.x is not None or args.y is not None:
        if args.x is None or args.y is None:
            raise ConfigError("--x and --y must be given together")
        x, y = group.parse_word(args.x), group.parse_word(args.y)
        p = table.poly(x, y)
        payload = {"x": args.x, "y": args.y, "coeffs": p.to_list(), "poly": str(p)}
        _emit(args, payload, [["x", "y", "coeffs"], [args.x, args.y, p.to_list()]], str(p))
        return 0
    rows = list(table.table_rows())
    payload = [{"x": x, "y": y, "coeffs": c} for x, y, c in rows]
    _emit(args, payload, [["x", "y", "coeffs"]] + [list(r) for r in rows],
          "\n".join(f"P({x}, {y}) = {c}" for x, y, c in rows))
    return 0


def _cmd_skl(args) -> int:
    system, group = _build(args)
    lam = _parse_lambda(args.lam, system)
    table = SKLTable(group, lam)
    if args.x is not None and args.y is not None:
        x, y = group.parse_word(args.x), group.parse_word(args.y)
        p = table.poly(x, y)
        payload = {"x": args.x, "y": args.y, "coeffs": p.to_list(), "poly": str(p)}
        _emit(args, payload, [["x", "y", "coeffs"], [args.x, args.y, p.to_list()]], str(p))
        return 0
    rows = []
    for yi in range(group.order):
        for xi in range(group.order):
            p = table.poly(group.element(xi), group.element(yi))
            if not p.is_zero:
                rows.append((group.format_word(group.element(xi)),
                             group.format_word(group.element(yi)), p.to_list()))
    payload = [{"x": x, "y": y, "coeffs": c} for x, y, c in rows]
    _emit(args, payload, [["x", "y", "coeffs"]] + [list(r) for r in rows],
          "\n".join(f"Ps({x}, {y}) = {c}" for x, y, c in rows))
    return 0


def _cmd_epsilon(args) -> int:
    system, group = _build(args)
    levels = range(1, args.max_level + 1)
    rows = [["root", "level", "chamber", "sign"]]
    payload = []
    for gamma in system.positive_roots:
        for n in levels:
            for s in group.elements():
                if not meets_chamber(system, group, gamma, n, s):
                    continue
                val = epsilon_hyperplane(system, group, gamma, n, s)
                word = group.format_word(s)
                rows.append([",".join(map(str, gamma)), n, word, val])
                payload.append({"root": list(gamma), "level": n,
                                "chamber": word, "sign": val})
    pretty_lines = []
    for gamma in system.positive_roots:
        cells = [p for p in payload if tuple(p["root"]) == gamma and p["level"] == 1]
        row = "  ".join(f"{c['chamber']}:{c['sign']:+d}" for c in cells)
        pretty_lines.append(f"H({','.join(map(str, gamma))}, N=1): {row}")
    _emit(args, payload, rows, "\n".join(pretty_lines))
    return 0


def _cmd_verify_main(args) -> int:
    system, group = _build(args)
    lam = _parse_lambda(args.lam, system)
    report = verify_main_theorem(
        group, lam, a_sign_convention=args.convention, jobs=args.jobs
    )
    rows = [["x", "y", "skl", "kl_neg_q", "sign", "match"]] + [
        [p["x"], p["y"], p["skl"], p["kl_neg_q"], p["sign"], p["match"]]
        for p in report["pairs"]
    ]
    pretty = (
        f"{report['system']} grading={report['grading']} lambda={report['lambda']}: "
        f"{report['pairs_checked']} pairs, {report['mismatches']} mismatches"
    )
    _emit(args, report, rows, pretty)
    return 0 if report["mismatches"] == 0 else 1


def _cmd_sigchar(args) -> int:
    system, group = _build(args)
    lam = _parse_lambda(args.lam, system)
    audit: list | None = [] if args.audit else None
    if args.engine == "alcove":
        ch = signature_character_alcove_sum(system, group, lam, args.cutoff, audit=audit)
    else:
        ch = signature_character_by_crossings(system, group, lam, args.cutoff)
    terms = [{"mu": list(mu), "c": c} for mu, c in ch.sorted_items()]
    payload = {
        "system": f"{system.cartan_type}{system.rank}",
        "grading": sorted(i + 1 for i in system.noncompact),
        "lambda": [str(c) for c in lam],
        "cutoff": args.cutoff,
        "base": [str(b) for b in ch.base],
        "terms": terms,
    }
    if audit is not None:
        payload["audit"] = audit
    rows = [["mu", "coefficient"]] + [[" ".join(map(str, t["mu"])), t["c"]] for t in terms]
    pretty = "\n".join(f"e^(base - {tuple(t['mu'])}) : {t['c']:+d}" for t in terms)
    _emit(args, payload, rows, pretty)
    return 0


def _cmd_sweep(args) -> int:
    results = run_all()
    text = render(results)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if all(r.passed for r in results) else 1


# -- parser ------------------------------------------------------------------------


def _add_system_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="Cartan type letter or letter+rank (e.g. G2)")
    p.add_argument("--rank", type=int, help="rank (optional if given as e.g. A3)")
    p.add_argument("--noncompact", help="comma list of 1-based noncompact simple roots")
    p.add_argument("--config", help="key=value file with type/rank/noncompact")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.add_argument("--out", help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="signedkl",
        description="Signed and classical Kazhdan-Lusztig polynomials, "
                    "wall-crossing signs, and Verma signature characters.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots with grading data")
    _add_system_args(p)
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("group", help="Weyl group elements and lengths")
    _add_system_args(p)
    p.set_defaults(fn=_cmd_group)

    p = sub.add_parser("kl", help="classical KL polynomials")
    _add_system_args(p)
    p.add_argument("--x", help="reduced word, e.g. 121 or e")
    p.add_argument("--y", help="reduced word")
    p.add_argument("--method", choices=("recursion", "oracle"), default="recursion")
    p.set_defaults(fn=_cmd_kl)

    p = sub.add_parser("skl", help="signed KL polynomials")
    _add_system_args(p)
    p.add_argument("--x", help="reduced word")
    p.add_argument("--y", help="reduced word")
    p.add_argument("--lambda", dest="lam", default="-rho",
                   help='weight: "-rho" or comma rationals in fundamental-weight coords')
    p.set_defaults(fn=_cmd_skl)

    p = sub.add_parser("epsilon", help="wall-crossing sign table")
    _add_system_args(p)
    p.add_argument("--max-level", type=int, default=3)
    p.set_defaults(fn=_cmd_epsilon)

    p = sub.add_parser("verify-main", help="verify the signed/classical identity")
    _add_system_args(p)
    p.add_argument("--lambda", dest="lam", default="-rho")
    p.add_argument("--convention", choices=("literal", "semantic"), default="literal")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_verify_main)

    p = sub.add_parser("sigchar", help="truncated signature character")
    _add_system_args(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--cutoff", type=int, default=8)
    p.add_argument("--engine", choices=("alcove", "crossings"), default="alcove")
    p.add_argument("--audit", action="store_true",
                   help="include every subset with its sign and parameter")
    p.set_defaults(fn=_cmd_sigchar)

    p = sub.add_parser("sweep", help="run the acceptance suite")
    p.add_argument("--out", help="also write the pass/fail matrix to a file")
    p.set_defaults(fn=_cmd_sweep)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except SignedKLError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

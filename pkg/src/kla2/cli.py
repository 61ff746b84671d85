"""``kla2`` command line: tables of KL data and verification reports.

Exit codes: 0 success, 1 mathematical mismatch, 2 usage or parse error.

Configuration is read from a ``key=value`` file (``--config`` or
``$KLA2_CONFIG``) with keys ``max_len``, ``cache_path``, ``output_format``
(csv or json) and ``jobs``.  ``$KLA2_CACHE`` names a directory for cached KL
tables; the cache only saves time and never changes any output.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from . import checks, hecke
from .cells import left_cell, two_sided
from .coxeter import MAX_ENUM_LEN, BoundError, enumerate_elements
from .extended import ExtElement
from .lattice import Weight
from .muclosed import predict
from .weights import b_table

log = logging.getLogger("kla2")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Config:
    max_len: int = 12
    cache_path: str = ""
    output_format: str = "csv"
    jobs: int = 1

    def validate(self):
        if not 0 <= self.max_len <= MAX_ENUM_LEN:
            raise UsageError(f"max_len must lie in 0..{MAX_ENUM_LEN}, got {self.max_len}")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"output_format must be csv or json, got {self.output_format!r}")
        if self.jobs < 1:
            raise UsageError(f"jobs must be positive, got {self.jobs}")
        return self


def load_config(path=None):
    cfg = Config()
    path = path or os.environ.get("KLA2_CONFIG")
    if path:
        types = {f.name: f.type for f in fields(Config)}
        try:
            lines = Path(path).read_text().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
        for lineno, line in enumerate(lines, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = (part.strip() for part in line.partition("="))
            if not sep or key not in types:
                raise UsageError(f"{path}:{lineno}: expected one of {', '.join(types)} as key=value")
            try:
                setattr(cfg, key, int(value) if types[key] in (int, "int") else value)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: {key} needs an integer") from None
    if os.environ.get("KLA2_CACHE"):
        cfg.cache_path = os.environ["KLA2_CACHE"]
    return cfg.validate()


def prepare_table(cfg, max_len):
    """Build (or load from the cache directory) the KL table for ``max_len``."""
    if max_len > MAX_ENUM_LEN:
        raise UsageError(f"max_len {max_len} exceeds ceiling {MAX_ENUM_LEN}")
    if not cfg.cache_path:
        return hecke.get_table(max_len)
    path = Path(cfg.cache_path) / f"kl_{max(max_len, 6)}.tsv"
    if path.exists():
        try:
            table = hecke.KLTable.load(path)
        except (ValueError, KeyError) as exc:
            log.warning("ignoring unreadable cache %s: %s", path, exc)
        else:
            hecke.register_table(table)
            return table
    table = hecke.get_table(max_len)
    path.parent.mkdir(parents=True, exist_ok=True)
    table.save(path)
    return table


def _emit(rows, header, cfg, out=None):
    fh = open(out, "w", newline="") if out else sys.stdout
    try:
        if cfg.output_format == "json":
            json.dump([dict(zip(header, r)) for r in rows], fh, indent=1)
            fh.write("\n")
        else:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    finally:
        if out:
            fh.close()


def _element(text):
    try:
        return ExtElement.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def render_q(coeffs):
    if not coeffs:
        return "0"
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


# subcommands ----------------------------------------------------------------


def cmd_enum(args, cfg):
    max_len = args.max_len if args.max_len is not None else cfg.max_len
    if max_len > MAX_ENUM_LEN:
        raise UsageError(f"max_len {max_len} exceeds ceiling {MAX_ENUM_LEN}")
    rows = [(str(w), w.length) for w in enumerate_elements(max_len)]
    _emit(rows, ("word", "length"), cfg)
    return EXIT_OK


def cmd_kl(args, cfg):
    u, w = _element(args.u), _element(args.w)
    prepare_table(cfg, max(u.length, w.length))
    p = hecke.kl_poly(u, w)
    print(f"P = {render_q(p)}, mu = {hecke.mu_direct(u, w)}, gap = {w.length - u.length}")
    return EXIT_OK


def cmd_mu(args, cfg):
    u, w = _element(args.u), _element(args.w)
    prepare_table(cfg, max(u.length, w.length))
    direct = hecke.mu_direct(u, w)
    if args.method == "direct":
        print(f"mu = {direct}")
        return EXIT_OK
    if u.omega != w.omega or not hecke.kl_poly(u, w) or u == w:
        raise UsageError(f"closed form needs u < w in the same component, got ({u}, {w})")
    verdict = predict(u, w)
    if args.method == "closed":
        print(f"mu = {verdict.value} ({verdict.rule})")
        return EXIT_OK
    match = verdict.value == direct
    print(f"mu closed = {verdict.value} ({verdict.rule}), mu direct = {direct}, match = {match}")
    return EXIT_OK if match else EXIT_MISMATCH


def mu_table_rows(table, max_len):
    rows, mismatches = [], 0
    for j, w in enumerate(table.elements):
        if w.length > max_len:
            break
        for i in np.flatnonzero(table.bruhat[:, j]):
            i = int(i)
            if i == j:
                continue
            u = table.elements[i]
            direct = table.mu_at(i, j)
            verdict = predict(u, w)
            if not direct and not verdict.value:
                continue
            match = direct == verdict.value
            mismatches += not match
            rows.append((str(u), str(w), w.length - u.length, verdict.value,
                         verdict.rule, direct, int(match)))
    return rows, mismatches


def cmd_mu_table(args, cfg):
    max_len = args.max_len if args.max_len is not None else cfg.max_len
    table = prepare_table(cfg, max_len)
    rows, mismatches = mu_table_rows(table, max_len)
    _emit(rows, ("u", "w", "gap", "mu_closed", "rule", "mu_direct", "match"), cfg, args.out)
    if mismatches:
        print(f"{mismatches} closed-form mismatches", file=sys.stderr)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_cells(args, cfg):
    max_len = args.max_len if args.max_len is not None else cfg.max_len
    if max_len > MAX_ENUM_LEN:
        raise UsageError(f"max_len {max_len} exceeds ceiling {MAX_ENUM_LEN}")
    rows = [(str(w), w.length, two_sided(w), left_cell(w).left)
            for w in enumerate_elements(max_len)]
    _emit(rows, ("word", "length", "two_sided", "left_cell"), cfg)
    return EXIT_OK


def cmd_b_table(args, cfg):
    try:
        lam2 = Weight.parse(args.weight)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not lam2.is_dominant():
        raise UsageError(f"{lam2} is not dominant")
    rows = [(lam.m, lam.n, b.serialize())
            for lam, b in sorted(b_table(lam2).items(), key=lambda kv: (kv[0].m, kv[0].n))]
    _emit(rows, ("lambda_m", "lambda_n", "coeffs"), cfg)
    return EXIT_OK


def cmd_verify(args, cfg):
    ids = list(checks.CHECKS) if args.id == "all" else [args.id]
    if args.id != "all" and args.id not in checks.CHECKS:
        raise UsageError(f"unknown check {args.id!r}; choose from {', '.join(checks.CHECKS)} or all")
    prepare_table(cfg, checks.SCAN_LEN)
    failed = []
    for check_id in ids:
        if check_id == "mu-scan":
            res = checks.check_mu_scan(jobs=cfg.jobs)
        else:
            res = checks.run(check_id)
        print(res.report())
        if not res.ok:
            failed.append(check_id)
    if len(ids) > 1:
        print(f"summary: {len(ids) - len(failed)}/{len(ids)} passed"
              + (f"; failed: {', '.join(failed)}" if failed else ""))
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="kla2", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key=value configuration file")
    parser.add_argument("--format", choices=("csv", "json"), help="table output format")
    parser.add_argument("--jobs", type=int, help="worker processes for scans")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="list elements up to a length")
    p.add_argument("--max-len", type=int)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("kl", help="print P_{u,w}, mu and the length gap")
    p.add_argument("u")
    p.add_argument("w")
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("mu", help="leading coefficient mu(u, w)")
    p.add_argument("u")
    p.add_argument("w")
    p.add_argument("--method", choices=("closed", "direct", "both"), default="both")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("mu-table", help="nonzero mu pairs with closed-form rule labels")
    p.add_argument("--max-len", type=int)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_mu_table)

    p = sub.add_parser("cells", help="two-sided and left cell of every element")
    p.add_argument("--max-len", type=int)
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("b-table", help="b coefficients below a dominant weight")
    p.add_argument("--lambda", dest="weight", required=True, metavar="M,N")
    p.set_defaults(func=cmd_b_table)

    p = sub.add_parser("verify", help="run a verification report")
    p.add_argument("id", metavar="ID", help=f"one of {', '.join(checks.CHECKS)}, or all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = load_config(args.config)
        if args.format:
            cfg.output_format = args.format
        if args.jobs is not None:
            cfg.jobs = args.jobs
        cfg.validate()
        return args.func(args, cfg)
    except (UsageError, BoundError) as exc:
        print(f"kla2: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

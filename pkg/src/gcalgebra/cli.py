"""Command-line front end: ``verify``, ``fig1``, ``props`` and ``polar``.

Exit codes: 0 success, 1 check failure, 2 usage or parse error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    GC_TABLE,
    DomainError,
    StructureConstantsTable,
    check_associative,
    check_commutative,
    check_power_associative_sampled,
    complex_table,
    find_zero_divisors,
    quaternion_table,
    real_table,
)
from .dirac import Branch, spinor_ratio
from .gc import GcNumber, from_polar, to_polar
from .verify import run_verification

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

BUILTIN_TABLES = {
    "gc": lambda: GC_TABLE,
    "complex": complex_table,
    "real": real_table,
    "quaternion": quaternion_table,
}


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    samples: int = 1000
    seed: int = 0
    format: str = "text"
    table_path: str | None = None
    builtin: str = "gc"
    fail_fast: bool = False
    m_range: tuple[float, float] = (0.5, 5.0)
    p_range: tuple[float, float] = (-5.0, 5.0)
    m_steps: int = 50
    p_steps: int = 50
    branch: str = "both"
    output: str | None = None
    number: str | None = None
    branches: tuple[Branch, ...] = field(init=False, default=())

    def __post_init__(self):
        if self.subcommand == "fig1":
            for label, (lo, hi), n in (("m", self.m_range, self.m_steps), ("p", self.p_range, self.p_steps)):
                if n < 1:
                    raise UsageError(f"--{label}-steps must be >= 1")
                if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
                    raise UsageError(f"{label} range [{lo}, {hi}] is empty")
                # a single grid line only for a single value and vice versa
                if (n == 1) != (lo == hi):
                    raise UsageError(f"{label} range [{lo}, {hi}] needs {'1 step' if lo == hi else '>= 2 steps'}")
            if self.m_range[0] <= 0:
                raise UsageError("m range must be strictly positive")
            if self.branch not in ("positive", "negative", "both"):
                raise UsageError(f"unknown branch {self.branch!r}")
            self.branches = (Branch.POSITIVE, Branch.NEGATIVE) if self.branch == "both" else (Branch(self.branch),)
        if self.samples < 1:
            raise UsageError("--samples must be >= 1")


def _fmt(v: float) -> str:
    return format(float(v) + 0.0, ".17g")


def load_table(path: str) -> StructureConstantsTable:
    """Read a structure-constants JSON file.

    ``json.JSONDecodeError`` and :class:`DomainError` propagate for bad
    content, ``OSError`` for unreadable files.
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return StructureConstantsTable.from_json(text)


def cmd_verify(cfg: CliConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    table = GC_TABLE
    if cfg.table_path is not None:
        try:
            table = load_table(cfg.table_path)
        except OSError as exc:
            print(f"error: cannot read {cfg.table_path}: {exc}", file=sys.stderr)
            return EXIT_IO
        except json.JSONDecodeError as exc:
            print(f"error: {cfg.table_path}: line {exc.lineno} column {exc.colno}: {exc.msg}", file=sys.stderr)
            return EXIT_USAGE
        except DomainError as exc:
            # an ill-formed table is a failed check, not a usage problem
            if cfg.format == "json":
                print(json.dumps({"ok": False, "checks": [
                    {"name": "structure constants", "ok": False, "detail": str(exc)}]}), file=out)
            else:
                print(f"FAIL  structure constants: {exc}", file=out)
            return EXIT_CHECK
    checks = run_verification(table, cfg.samples, cfg.seed, fail_fast=cfg.fail_fast)
    ok = all(c.ok for c in checks)
    if cfg.format == "json":
        print(json.dumps({"ok": ok, "checks": [c.to_dict() for c in checks]}, indent=2), file=out)
    else:
        for c in checks:
            print(c.line(), file=out)
        gammas = [c for c in checks if c.name.startswith("{gamma") or (c.name.startswith("gamma") and "^2" in c.name)]
        print(f"gamma identities: {sum(c.ok for c in gammas)}/{len(gammas)} PASS", file=out)
        print(f"{sum(c.ok for c in checks)}/{len(checks)} checks as expected", file=out)
    return EXIT_OK if ok else EXIT_CHECK


def fig1_rows(cfg: CliConfig):
    ms = np.linspace(cfg.m_range[0], cfg.m_range[1], cfg.m_steps)
    ps = np.linspace(cfg.p_range[0], cfg.p_range[1], cfg.p_steps)
    for branch in cfg.branches:
        for m in ms:
            for p in ps:
                yield float(m), float(p), branch, spinor_ratio(float(m), float(p), branch)


def cmd_fig1(cfg: CliConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    buf = io.StringIO()
    buf.write("m,p,branch,ratio\n")
    for m, p, branch, ratio in fig1_rows(cfg):
        buf.write(f"{_fmt(m)},{_fmt(p)},{branch.value},{_fmt(ratio)}\n")
    text = buf.getvalue()
    if cfg.output is None or cfg.output == "-":
        out.write(text)
        return EXIT_OK
    try:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {cfg.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def props_report(table: StructureConstantsTable, samples: int = 1000, seed: int = 0) -> dict:
    names = table.basis_names
    comm = check_commutative(table)
    assoc = check_associative(table)
    zd = find_zero_divisors(table)
    pa = check_power_associative_sampled(table, samples, seed)
    return {
        "basis": list(names),
        "commutative": not comm,
        "commutativity_witnesses": [w.describe() for w in comm],
        "associative": not assoc,
        "associativity_witnesses": [w.describe() for w in assoc],
        "zero_divisors": [[names[a] for a in w.operands] for w in zd],
        "power_associative_sampled": not pa,
        "power_associativity_violations": len(pa),
    }


def cmd_props(cfg: CliConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    if cfg.table_path is not None:
        try:
            table = load_table(cfg.table_path)
        except OSError as exc:
            print(f"error: cannot read {cfg.table_path}: {exc}", file=sys.stderr)
            return EXIT_IO
        except json.JSONDecodeError as exc:
            print(f"error: {cfg.table_path}: line {exc.lineno} column {exc.colno} (char {exc.pos}): {exc.msg}",
                  file=sys.stderr)
            return EXIT_USAGE
        except DomainError as exc:
            print(f"error: {cfg.table_path}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        table = BUILTIN_TABLES[cfg.builtin]()
    rep = props_report(table, cfg.samples, cfg.seed)
    if cfg.format == "json":
        print(json.dumps(rep, indent=2), file=out)
        return EXIT_OK
    names = table.basis_names

    def first(ws):
        return ws[0] if ws else ""

    comm = "yes" if rep["commutative"] else f"NO ({first(rep['commutativity_witnesses'])})"
    if rep["associative"]:
        assoc = "yes"
    else:
        w = check_associative(table)[0]
        trip = ",".join(names[k] for k in w.operands)
        assoc = f"NO (witness {trip})"
    zd = ", ".join(f"({a},{b})" for a, b in rep["zero_divisors"]) or "none"
    print(f"algebra basis: {', '.join(names)}", file=out)
    print(f"commutative: {comm}; associative: {assoc}; zero divisors: {zd}", file=out)
    for line in rep["commutativity_witnesses"]:
        print(f"  non-commuting: {line}", file=out)
    for line in rep["associativity_witnesses"]:
        print(f"  non-associative: {line}", file=out)
    pa = "yes" if rep["power_associative_sampled"] else f"NO ({rep['power_associativity_violations']} violations)"
    print(f"power associative ({cfg.samples} samples): {pa}", file=out)
    return EXIT_OK


def cmd_polar(cfg: CliConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        q = GcNumber.parse(cfg.number or "")
    except (ValueError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    p = to_polar(q)
    err = from_polar(p).distance(q)
    if cfg.format == "json":
        print(json.dumps({"input": q.to_dict(), "polar": p.to_dict(), "roundtrip_error": err}), file=out)
    else:
        print(f"q = {q}", file=out)
        print(f"R = {_fmt(p.R)}", file=out)
        print(f"theta = {_fmt(p.theta)}", file=out)
        print(f"phi = {_fmt(p.phi)}", file=out)
        print(f"roundtrip error = {err:.3g}", file=out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gcalgebra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run every algebraic and numerical check")
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--table", dest="table_path", help="structure-constants JSON to use instead of Gc")
    v.add_argument("--fail-fast", action="store_true", help="stop at the first unexpected outcome")

    f = sub.add_parser("fig1", help="write the psi1/psi2 surface over an (m, p) grid as CSV")
    f.add_argument("--m-min", type=float, default=0.5)
    f.add_argument("--m-max", type=float, default=5.0)
    f.add_argument("--p-min", type=float, default=-5.0)
    f.add_argument("--p-max", type=float, default=5.0)
    f.add_argument("--m-steps", type=int, default=50)
    f.add_argument("--p-steps", type=int, default=50)
    f.add_argument("--branch", choices=("positive", "negative", "both"), default="both")
    f.add_argument("-o", "--output")

    pr = sub.add_parser("props", help="report algebraic laws of a structure-constants table")
    pr.add_argument("--table", dest="table_path")
    pr.add_argument("--builtin", choices=sorted(BUILTIN_TABLES), default="gc")
    pr.add_argument("--samples", type=int, default=1000)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--format", choices=("text", "json"), default="text")

    po = sub.add_parser("polar", help="polar form (R, theta, phi) of a,b,c")
    po.add_argument("number", metavar="A,B,C")
    po.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def parse_config(argv: list[str]) -> CliConfig:
    argv = list(argv)
    # "-1,0,0" would otherwise be read as an option
    if len(argv) >= 2 and argv[0] == "polar" and argv[1].startswith("-") and argv[1][1:2].isdigit():
        argv.insert(1, "--")
    ns = build_parser().parse_args(argv)
    kw = {"subcommand": ns.subcommand}
    if ns.subcommand == "verify":
        kw.update(samples=ns.samples, seed=ns.seed, format=ns.format, table_path=ns.table_path,
                  fail_fast=ns.fail_fast)
    elif ns.subcommand == "fig1":
        kw.update(m_range=(ns.m_min, ns.m_max), p_range=(ns.p_min, ns.p_max), m_steps=ns.m_steps,
                  p_steps=ns.p_steps, branch=ns.branch, output=ns.output)
    elif ns.subcommand == "props":
        kw.update(table_path=ns.table_path, builtin=ns.builtin, samples=ns.samples, seed=ns.seed,
                  format=ns.format)
    else:
        kw.update(number=ns.number, format=ns.format)
    return CliConfig(**kw)


COMMANDS = {"verify": cmd_verify, "fig1": cmd_fig1, "props": cmd_props, "polar": cmd_polar}


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return COMMANDS[cfg.subcommand](cfg)


if __name__ == "__main__":
    sys.exit(main())

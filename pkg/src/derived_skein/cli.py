"""Command-line front end: resolve diagrams, run the transport and
self-linking checks, and drive the property suites.

Exit codes: 0 pass, 1 property failure, 2 input error, 3 calibration
failure.  With --json-lines every emitted record is one JSON object per
line with sorted keys, so identical configurations produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .words import parse_word, word_str
from .skein import (load_diagram, resolve, occurrences,
                    MalformedDiagramError, NoOccurrenceError)
from . import sl2
from . import transport
from . import selflink
from . import suites

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CALIBRATION = 3


@dataclass
class RunConfig:
    subcommand: str
    seed: int = 0
    tolerance: float = 1e-8
    samples: int = 20
    word: str = ""
    gen: int = 1
    occ: int = 1
    genus: int = 0
    ring: str = "laurent"
    suite: str = "all"
    path: str = ""
    json_lines: bool = False


def emit(records: List[dict], cfg: RunConfig, out) -> None:
    """Collect-then-emit; json-lines output is deterministic byte for byte."""
    if cfg.json_lines:
        for r in records:
            out.write(json.dumps(r, sort_keys=True) + "\n")
        return
    for r in records:
        status = "PASS" if r["pass"] else "FAIL"
        inputs = " ".join(f"{k}={v}" for k, v in r["inputs"].items())
        out.write(f"{status} {r['case']} residual={r['residual']:.3g}"
                  + (f" {inputs}" if inputs else "") + "\n")


def emit_summary(records: List[dict], cfg: RunConfig, out) -> None:
    s = suites.summarize(records)
    if cfg.json_lines:
        out.write(json.dumps({"summary": s}, sort_keys=True) + "\n")
    else:
        verdict = "PASS" if s["failures"] == 0 else "FAIL"
        out.write(f"{verdict}: {s['cases']} cases, {s['failures']} failures, "
                  f"worst residual {s['worst_residual']:.3g}\n")
        for case in s["failed_cases"]:
            out.write(f"  failed: {case}\n")


def cmd_bracket(cfg: RunConfig, out) -> int:
    try:
        with open(cfg.path) as fh:
            data = fh.read()
        d = load_diagram(data)
        element = resolve(d, ring=cfg.ring)
    except FileNotFoundError:
        print(f"error: no such file: {cfg.path}", file=sys.stderr)
        return EXIT_INPUT
    except (MalformedDiagramError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {cfg.path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.write(str(element) + "\n")
    return EXIT_PASS


def cmd_transport(cfg: RunConfig, out) -> int:
    try:
        w = parse_word(cfg.word)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    genus = cfg.genus or max((g for g, _ in w), default=cfg.gen)
    occs = occurrences(w, cfg.gen)
    if not occs or cfg.samples <= 0:
        out.write("PASS (vacuous: no occurrences or no samples)\n")
        return EXIT_PASS
    if not 1 <= cfg.occ <= len(occs):
        print(f"error: occurrence {cfg.occ} of generator {cfg.gen} "
              f"not present in {cfg.word}", file=sys.stderr)
        return EXIT_INPUT
    try:
        kappa = transport.default_kappa()
    except transport.CalibrationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CALIBRATION
    rng = np.random.default_rng(cfg.seed)
    records = []
    for s in range(cfg.samples):
        rho = sl2.random_representation(rng, genus)
        rep = transport.transport_residual(w, cfg.gen, cfg.occ, rho,
                                           kappa, sample=s)
        res = abs(rep.residual) / rep.scale
        records.append(suites.record(
            f"transport/{s}",
            {"word": rep.word, "gen": cfg.gen, "occ": cfg.occ},
            {"f": abs(rep.f_value), "fprime": abs(rep.f_prime),
             "div": abs(rep.divergence), "kappa": kappa},
            res, res < cfg.tolerance))
    emit(records, cfg, out)
    emit_summary(records, cfg, out)
    return EXIT_PASS if suites.passed(records) else EXIT_FAIL


def cmd_selflink(cfg: RunConfig, out) -> int:
    rng = np.random.default_rng(cfg.seed)
    records = []
    if cfg.suite in ("q-identities", "all"):
        for s in range(cfg.samples):
            a = sl2.random_sl2(rng)
            b = sl2.random_sl2(rng)
            r1, r2 = selflink.kauffman_scalar_check(a, b)
            res = max(abs(r1), abs(r2))
            records.append(suites.record(f"q-identities/{s}", {}, {}, res,
                                         res < cfg.tolerance))
    if cfg.suite in ("hessian", "all"):
        for s in range(cfg.samples):
            w = sl2.random_word(rng, 2, 6)
            rho = sl2.random_representation(rng, 2)
            xi = sl2.sl2_matrix(rng.standard_normal(3)
                                + 1j * rng.standard_normal(3))
            eta = sl2.sl2_matrix(rng.standard_normal(3)
                                 + 1j * rng.standard_normal(3))
            dw = selflink.DeformedWord(w, ((1, xi), (4, eta)))
            h = selflink.hessian_pair(dw, rho)
            fd = selflink.fd_hessian_pair(dw, rho)
            res = abs(h - fd) / (1 + abs(h))
            records.append(suites.record(
                f"hessian/{s}", {"word": word_str(w)}, {}, res,
                res < max(cfg.tolerance, suites.FD_TOL)))
    if cfg.suite in ("trace-identity", "all"):
        for s in range(cfg.samples):
            rho = sl2.random_representation(rng, 2)
            alpha = sl2.random_word(rng, 2, 4)
            beta = sl2.random_word(rng, 2, 4)
            if len(alpha) < 2 or len(beta) < 2:
                continue
            xi = sl2.sl2_matrix(rng.standard_normal(3)
                                + 1j * rng.standard_normal(3))
            eta = sl2.sl2_matrix(rng.standard_normal(3)
                                 + 1j * rng.standard_normal(3))
            res = abs(selflink.trace_identity_hessian(
                alpha, beta, rho, (1, 1), (xi, eta)))
            records.append(suites.record(
                f"trace-identity/{s}",
                {"alpha": word_str(alpha), "beta": word_str(beta)}, {},
                res, res < cfg.tolerance * 10))
    if not records:
        out.write("PASS (vacuous: no samples)\n")
        return EXIT_PASS
    emit(records, cfg, out)
    emit_summary(records, cfg, out)
    return EXIT_PASS if suites.passed(records) else EXIT_FAIL


def cmd_suite(cfg: RunConfig, out) -> int:
    if cfg.samples <= 0:
        out.write("warning: no samples requested\nPASS (vacuous)\n")
        return EXIT_PASS
    try:
        records = suites.run_suites(cfg.suite, seed=cfg.seed,
                                    samples=cfg.samples, tol=cfg.tolerance)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_INPUT
    except transport.CalibrationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CALIBRATION
    emit(records, cfg, out)
    emit_summary(records, cfg, out)
    return EXIT_PASS if suites.passed(records) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derived-skein",
        description="Verification workbench for derived Kauffman bracket "
                    "skein computations on handlebodies.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=1e-8)
        p.add_argument("--samples", type=int, default=20)
        p.add_argument("--json-lines", action="store_true")

    p = sub.add_parser("bracket", help="resolve a diagram JSON file")
    p.add_argument("path")
    p.add_argument("--ring", choices=["laurent", "dual"], default="laurent")
    p.add_argument("--json-lines", action="store_true")

    p = sub.add_parser("transport", help="handle-slide transport check")
    p.add_argument("--word", required=True)
    p.add_argument("--gen", type=int, default=1)
    p.add_argument("--occ", type=int, default=1)
    p.add_argument("--genus", type=int, default=0)
    common(p)

    p = sub.add_parser("selflink", help="self-linking identity checks")
    p.add_argument("--suite", default="all",
                   choices=["all", "q-identities", "hessian",
                            "trace-identity"])
    common(p)

    p = sub.add_parser("suite", help="run module property suites")
    p.add_argument("which", nargs="?", default="all",
                   choices=["all"] + sorted(suites.SUITES))
    common(p)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_PASS
    cfg = RunConfig(
        subcommand=args.subcommand,
        seed=getattr(args, "seed", 0),
        tolerance=getattr(args, "tol", 1e-8),
        samples=getattr(args, "samples", 20),
        word=getattr(args, "word", ""),
        gen=getattr(args, "gen", 1),
        occ=getattr(args, "occ", 1),
        genus=getattr(args, "genus", 0),
        ring=getattr(args, "ring", "laurent"),
        suite=getattr(args, "suite", getattr(args, "which", "all")),
        path=getattr(args, "path", ""),
        json_lines=getattr(args, "json_lines", False))
    handler = {"bracket": cmd_bracket, "transport": cmd_transport,
               "selflink": cmd_selflink, "suite": cmd_suite}[cfg.subcommand]
    return handler(cfg, out)


if __name__ == "__main__":
    sys.exit(main())

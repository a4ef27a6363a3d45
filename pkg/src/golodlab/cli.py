"""Command-line surface.

    golodlab golod --ideal fixtures/gorenstein3.txt --order lex
    golodlab betti --ideal "xy,yz"
    golodlab minors --shape 2x3 --t 2 --json

One subcommand per analysis; `--ideal` takes a fixture path or an inline
generator list (ring inferred from the variable names).  Plain text by
default, `--json` for machine output with sorted keys.  `--batch dir/`
runs the same job over every .txt file in the directory, one output file
per input named by the input's hash; GOLODLAB_THREADS caps the pool.

Exit codes: 0 success, 1 input error, 2 caps exceeded, 3 internal
inconsistency (a bug, not a property of the input).
"""
from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .analyzer import (
    AnalyzerConfig,
    _table_summary,
    _witness_json,
    fiber_invariant,
    golod_certificate,
    _monomial_betti,
)
from .betti import BettiTable
from .determinantal import LadderMatrix, verify_sparse_theorems
from .errors import CapExceededError, GolodlabError, InconsistencyError, InputError
from .groebner import GroebnerBasis, QuotientRing
from .koszul import koszul_betti
from .massey import build_trivial_table
from .monomial import MonomialIdeal, detect_rainbow, display_sorted
from .orders import TermOrder, grevlex
from .parsing import (
    IdealFile,
    infer_ring_from_text,
    parse_ideal_text,
    parse_order,
    poly_str,
)

COMMANDS = ("gb", "initial", "betti", "fiber-inv", "rainbow", "massey", "golod", "minors")

# documented configuration caps; jobs outside them are input errors
MAX_N = 16
MAX_P = 8
MAX_D = 1000
MAX_T = 3


@dataclass
class JobSpec:
    command: str
    ideal: Optional[str] = None  # path or inline generator list
    order: Optional[str] = None
    json_out: bool = False
    N: Optional[int] = None
    p_max: Optional[int] = None
    D: Optional[int] = None
    t_max: Optional[int] = None
    shape: Optional[str] = None
    mask: Optional[str] = None

    def validate(self):
        if self.command not in COMMANDS:
            raise InputError("unknown command %r" % self.command)
        if self.command == "minors":
            if not (self.shape or self.mask):
                raise InputError("minors needs --shape RxC or --mask rows-of-01")
        elif self.ideal is None:
            raise InputError("command %s needs --ideal" % self.command)
        for name, val, cap in (
            ("N", self.N, MAX_N),
            ("p_max", self.p_max, MAX_P),
            ("D", self.D, MAX_D),
            ("t_max", self.t_max, MAX_T),
        ):
            if val is not None and not (1 <= val <= cap):
                raise InputError("%s must be between 1 and %d" % (name, cap))


@dataclass
class Report:
    text: str
    payload: dict
    exit_code: int = 0

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.payload, indent=2, sort_keys=True)
        return self.text


def _load_ideal(spec: JobSpec) -> IdealFile:
    src = spec.ideal
    if os.path.exists(src):
        with open(src) as fh:
            return parse_ideal_text(fh.read())
    if "ring:" in src or "ideal:" in src:
        return parse_ideal_text(src)
    ring = infer_ring_from_text(src)
    f = parse_ideal_text("ring: QQ[%s]\nideal: %s" % (",".join(ring.names), src))
    return f


def _resolve_order(spec: JobSpec, f: IdealFile) -> TermOrder:
    if spec.order:
        return parse_order(spec.order, f.ring)
    return f.order if f.order is not None else grevlex(f.ring)


def _config(spec: JobSpec) -> AnalyzerConfig:
    kw = {}
    if spec.N is not None:
        kw["N"] = spec.N
    if spec.p_max is not None:
        kw["p_max"] = spec.p_max
    if spec.D is not None:
        kw["D"] = spec.D
    return AnalyzerConfig(**kw)


def _canonical_monos(ring, monos):
    return display_sorted(monos)


def _betti_json(B: BettiTable) -> dict:
    return {
        "entries": [
            {"i": i, "j": j, "beta": B.entries[(i, j)]}
            for (i, j) in sorted(B.entries)
        ],
        "projective_dimension": B.proj_dim(),
        "regularity": B.regularity(),
    }


def run_job(spec: JobSpec) -> Report:
    spec.validate()
    if spec.command == "minors":
        return _run_minors(spec)
    f = _load_ideal(spec)
    order = _resolve_order(spec, f)
    gb = GroebnerBasis(f.ring, order, f.gens)
    header = {
        "command": spec.command,
        "ring": [str(n) for n in f.ring.names],
        "order": order.descriptor(f.ring),
    }
    if spec.command == "gb":
        gens = sorted(gb.gens, key=lambda p: order.key(order.leading_mono(p)), reverse=True)
        lines = [poly_str(p, order) for p in gens]
        return Report(
            "\n".join(lines),
            dict(header, generators=lines, leading_terms=[f.ring.mono_str(order.leading_mono(p)) for p in gens]),
        )
    if spec.command == "initial":
        I = gb.initial_ideal()
        monos = _canonical_monos(f.ring, I.gens)
        names = [f.ring.mono_str(m) for m in monos]
        return Report(", ".join(names), dict(header, generators=names))
    if spec.command == "betti":
        if all(g.is_monomial() for g in gb.gens):
            B = _monomial_betti(MonomialIdeal.from_monos(f.ring, gb.lts))
        else:
            B = koszul_betti(QuotientRing(gb))
        return Report(B.grid_str(), dict(header, **_betti_json(B)))
    if spec.command == "fiber-inv":
        fi = fiber_invariant(gb)
        lines = ["fiber invariant: %s" % ("yes" if fi.invariant else "no")]
        if fi.fast_path:
            lines.append("via: %s" % fi.fast_path)
        payload = dict(header, invariant=fi.invariant, fast_path=fi.fast_path)
        if not fi.invariant and fi.betti_ideal is not None:
            lines.append("betti of R/I:\n%s" % fi.betti_ideal.grid_str())
            lines.append("betti of R/in(I):\n%s" % fi.betti_initial.grid_str())
            payload["betti_ideal"] = _betti_json(fi.betti_ideal)
            payload["betti_initial"] = _betti_json(fi.betti_initial)
        return Report("\n".join(lines), payload)
    if spec.command == "rainbow":
        if not all(g.is_monomial() for g in gb.gens):
            raise InputError("rainbow detection works on monomial ideals; run `initial` first")
        det = detect_rainbow(MonomialIdeal.from_monos(f.ring, gb.lts))
        payload = dict(header, status=det.status)
        if det.reason:
            payload["reason"] = det.reason
        if det.searched_colors is not None:
            payload["searched_colors"] = det.searched_colors
        if det.structure is not None:
            payload["colors"] = det.structure.describe()
            text = "rainbow: %s\ncolors: %s" % (
                det.status,
                " | ".join(",".join(cls) for cls in det.structure.describe()),
            )
        else:
            text = "rainbow: %s%s" % (det.status, "\n%s" % det.reason if det.reason else "")
        return Report(text, payload)
    if spec.command == "massey":
        cfg = _config(spec)
        quot = QuotientRing(gb)
        outcome = build_trivial_table(quot, p_max=cfg.p_max, tuple_cap=cfg.tuple_cap)
        tbl = _table_summary(outcome.table)
        payload = dict(header, table=tbl, witness=_witness_json(outcome.witness))
        lines = []
        if tbl is not None:
            lines += [
                "homology basis: %d classes" % tbl["basis"],
                "tuples by length: %s" % tbl["tuples_by_length"],
                "verified: %s" % tbl["verified"],
            ]
        if outcome.witness is None:
            lines.append("all products and Massey products vanish through length %d" % cfg.p_max)
        else:
            w = outcome.witness
            lines.append(
                "nonzero %s at tuple of length %d: the trivial operation "
                "stops here" % (w["kind"], w["length"])
            )
        return Report("\n".join(lines), payload)
    if spec.command == "golod":
        cert = golod_certificate(gb, _config(spec))
        payload = dict(header, certificate=cert.to_json())
        lines = [cert.summary(), "rule: %s" % cert.rule]
        if cert.witness is not None:
            w = _witness_json(cert.witness)
            lines.append("witness: %s" % json.dumps(w, sort_keys=True))
        if cert.serre:
            lines.append("poincare: %s" % cert.serre.get("poincare"))
            lines.append("serre bound: %s" % cert.serre.get("bound"))
        if cert.caps_exceeded:
            lines.append("caps exceeded: partial evidence")
        return Report("\n".join(lines), payload)
    raise InputError("unknown command %r" % spec.command)


def _run_minors(spec: JobSpec) -> Report:
    if spec.mask:
        X = LadderMatrix.from_text(spec.mask)
    else:
        m = spec.shape.lower().split("x")
        if len(m) != 2 or not all(s.isdigit() for s in m):
            raise InputError("bad --shape %r, expected RxC like 2x3" % spec.shape)
        X = LadderMatrix.generic(int(m[0]), int(m[1]))
    t_max = spec.t_max if spec.t_max is not None else 2
    cfg = None
    if spec.N is not None or spec.p_max is not None:
        cfg = AnalyzerConfig(
            N=spec.N or 4, p_max=spec.p_max or 3, with_serre=False
        )
    rep = verify_sparse_theorems(X, t_max=t_max, cert_config=cfg)
    lines = [
        "matrix %dx%d mask %s, %d minors, t <= %d"
        % (X.rows, X.cols, X.mask_text(), rep["minors"], t_max),
        rep["order_sampling"],
    ]
    for entry in rep["orders"]:
        lines.append(
            "  [%s] GB %s, fiber invariance %s"
            % (
                entry["order"],
                "pass" if entry["minors_are_groebner_basis"] else "FAIL",
                "pass" if entry["fiber_invariant"] else "FAIL",
            )
        )
    diag = rep["diagonal"]
    if "note" in diag:
        lines.append(diag["note"])
    else:
        lines.append("diagonal initial ideal: %s" % ", ".join(diag["initial_ideal"]))
        lines.append(
            "rainbow colors = rows: %s" % ("pass" if diag["rainbow_colors_are_rows"] else "FAIL")
        )
        for t, ok in sorted(diag["initial_of_power_equals_power_of_initial"].items()):
            lines.append("  in(I^%s) = in(I)^%s: %s" % (t[2:], t[2:], "pass" if ok else "FAIL"))
        for t, ok in sorted(diag["initial_powers_linear_resolution"].items()):
            lines.append("  in(I)^%s linear resolution: %s" % (t[2:], "pass" if ok else "FAIL"))
        for t, cert in sorted(diag["certificates"].items()):
            lines.append("  certificate %s: %s" % (t, cert["summary"]))
    lines.append("all checks pass" if rep["all_pass"] else "SOME CHECKS FAILED")
    return Report("\n".join(lines), rep, exit_code=0 if rep["all_pass"] else 3)


# ---------------------------------------------------------------------------
# entry point


class _Parser(argparse.ArgumentParser):
    # argparse's default usage-error exit code collides with "caps exceeded"
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        sys.exit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="golodlab", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--json", action="store_true", help="machine output, sorted keys")
        sp.add_argument("--out", help="write the report to this file (or directory for --batch)")
        if name == "minors":
            sp.add_argument("--shape", help="generic matrix RxC, e.g. 2x3")
            sp.add_argument("--mask", help="ladder pattern, rows of 0/1 joined by '/', e.g. 111/011")
            sp.add_argument("--t", type=int, dest="t_max", help="verify powers up to this exponent (<= %d)" % MAX_T)
            sp.add_argument("--N", type=int, help="series truncation for certificates")
            sp.add_argument("--p-max", type=int, dest="p_max", help="Massey length cap for certificates")
        else:
            sp.add_argument("--ideal", help="fixture path or inline generator list")
            sp.add_argument("--batch", help="directory of fixture files; outputs named by input hash")
            sp.add_argument("--order", help="term order descriptor, e.g. 'lex', 'lex x>y', 'grevlex', 'weight 1,2 lex x>y', 'diagonal 2x3'")
            sp.add_argument("--N", type=int, help="Poincare/Serre truncation (<= %d)" % MAX_N)
            sp.add_argument("--p-max", type=int, dest="p_max", help="Massey length cap (<= %d)" % MAX_P)
            sp.add_argument("--D", type=int, help="internal degree cap for the small resolution (<= %d)" % MAX_D)
    return p


def _spec_from_args(args, ideal: Optional[str] = None) -> JobSpec:
    return JobSpec(
        command=args.command,
        ideal=ideal if ideal is not None else getattr(args, "ideal", None),
        order=getattr(args, "order", None),
        json_out=args.json,
        N=getattr(args, "N", None),
        p_max=getattr(args, "p_max", None),
        D=getattr(args, "D", None),
        t_max=getattr(args, "t_max", None),
        shape=getattr(args, "shape", None),
        mask=getattr(args, "mask", None),
    )


def _exit_code_of(exc: BaseException) -> int:
    if isinstance(exc, InputError):
        return 1
    if isinstance(exc, CapExceededError):
        return 2
    return 3  # InconsistencyError and anything unexpected: a bug


def _threads() -> int:
    env = os.environ.get("GOLODLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError("GOLODLAB_THREADS must be an integer")
    return min(8, os.cpu_count() or 1)


def _run_batch(args) -> int:
    indir = args.batch
    if not os.path.isdir(indir):
        print("error: --batch %r is not a directory" % indir, file=sys.stderr)
        return 1
    outdir = args.out or os.path.join(indir, "out")
    os.makedirs(outdir, exist_ok=True)
    files = sorted(
        os.path.join(indir, nm)
        for nm in os.listdir(indir)
        if nm.endswith(".txt") and os.path.isfile(os.path.join(indir, nm))
    )
    if not files:
        print("error: no .txt fixtures in %r" % indir, file=sys.stderr)
        return 1

    def one(path):
        # each job parses its own input and catches its own failures
        with open(path, "rb") as fh:
            raw = fh.read()
        tag = hashlib.sha256(raw).hexdigest()[:16]
        ext = ".json" if args.json else ".out"
        dest = os.path.join(outdir, tag + ext)
        try:
            rep = run_job(_spec_from_args(args, ideal=path))
            body = rep.render(args.json)
            code = rep.exit_code
        except Exception as e:
            code = _exit_code_of(e)
            body = (
                json.dumps({"error": str(e), "exit_code": code}, indent=2, sort_keys=True)
                if args.json
                else "error: %s" % e
            )
        with open(dest, "w") as fh:
            fh.write(body + "\n")
        return path, dest, code

    worst = 0
    with concurrent.futures.ThreadPoolExecutor(max_workers=_threads()) as pool:
        for path, dest, code in pool.map(one, files):
            print("%s -> %s (exit %d)" % (os.path.basename(path), os.path.basename(dest), code))
            worst = max(worst, code)
    return worst


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if getattr(args, "batch", None):
            return _run_batch(args)
        rep = run_job(_spec_from_args(args))
        body = rep.render(args.json)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(body + "\n")
        else:
            print(body)
        return rep.exit_code
    except InconsistencyError as e:
        print("internal inconsistency (this is a bug): %s" % e, file=sys.stderr)
        return 3
    except CapExceededError as e:
        print("caps exceeded: %s" % e, file=sys.stderr)
        return 2
    except InputError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except GolodlabError as e:
        print("internal error: %s" % e, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Experiment runner: config parsing, subcommand dispatch, deterministic reports.

Subcommands: dirichlet-pairs | measure | qia | disjointness | gallagher |
dichotomy | verify-suite.  Reports are byte-identical across runs with
equal configuration (including seed); exact values are serialized as
"num/den" strings, floating estimates carry explicit stderr columns.
Exit codes: 0 pass, 1 check failure, 2 config error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from datetime import date
from fractions import Fraction
from pathlib import Path

from . import IMPLEMENTATION, __version__
from .analysis import (
    MaskCache,
    basic_bound_audit,
    closed_form_measure,
    disjointness_check,
    gallagher_overlap_sum,
    local_density_check,
    qia_ratio,
    rational_pair_audit,
    step_bounds_audit,
)
from .circle import CircleIntervalUnion
from .dichotomy import dichotomy_experiment, tail_sum_bound, zero_one_invariance_sample
from .dirichlet import PairTable, TargetScheme, rational_surrogate
from .pins import PINS_PATH, frac_str, load_pins, parse_rational, save_pins
from .sets import VARIANTS, ApproxFunction, build_interval_set

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_CONFIG_ERROR = 2

DEFAULT_SEED = 20260826

SURROGATE_CONSTANTS = {
    "sqrt2-1": lambda: math.sqrt(2.0) - 1.0,
    "e-2": lambda: math.e - 2.0,
}


class ConfigError(ValueError):
    pass


# ----------------------------------------------------------------- parsing

def parse_psi(spec: str, q_max: int = 10**6) -> ApproxFunction:
    """Grammar: zero | power:C:E | capped:C:E | table:q=v,q=v | sparse:V:q,q,..

    C and v are rationals ("num/den"); E is an integer or decimal exponent.
    capped:C:E means min(C*q^-E, 1/q).
    """
    try:
        head, _, rest = spec.partition(":")
        if head == "zero":
            return ApproxFunction.zero()
        if head in ("power", "capped"):
            c_str, _, e_str = rest.partition(":")
            c = parse_rational(c_str)
            exponent = int(e_str) if e_str.lstrip("+-").isdigit() else float(e_str)
            f = ApproxFunction.power(c, exponent, q_max=q_max)
            return ApproxFunction.capped(f) if head == "capped" else f
        if head == "table":
            table = {}
            for item in rest.split(","):
                q_str, _, v_str = item.partition("=")
                table[int(q_str)] = parse_rational(v_str)
            for q, v in table.items():
                if not 0 <= v < Fraction(1, 2):
                    raise ConfigError(
                        f"psi({q}) = {v} must lie in [0, 1/2)"
                    )
            return ApproxFunction.from_table(table)
        if head == "sparse":
            v_str, _, qs = rest.partition(":")
            value = parse_rational(v_str)
            if not 0 <= value < Fraction(1, 2):
                raise ConfigError(f"sparse value {value} must lie in [0, 1/2)")
            return ApproxFunction.sparse(
                [int(q) for q in qs.split(",")], value, q_max=q_max
            )
    except ConfigError:
        raise
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        raise ConfigError(f"invalid psi spec {spec!r}: {exc}") from exc
    raise ConfigError(f"unknown psi kind in {spec!r}")


def parse_target(spec: str) -> TargetScheme:
    """Grammar: RATIONAL | pair:a:b | surrogate:NAME:MIN_DEN.

    surrogate names: sqrt2-1, e-2 (continued-fraction convergent whose
    denominator exceeds MIN_DEN).
    """
    try:
        if spec.startswith("pair:"):
            _, a, b = spec.split(":")
            return TargetScheme.fixed_pair(int(a), int(b))
        if spec.startswith("surrogate:"):
            _, name, min_den = spec.split(":")
            if name not in SURROGATE_CONSTANTS:
                raise ConfigError(f"unknown surrogate constant {name!r}")
            y = rational_surrogate(SURROGATE_CONSTANTS[name](), int(min_den))
            return TargetScheme.fixed_rational(y)
        return TargetScheme.fixed_rational(parse_rational(spec))
    except ConfigError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"invalid target spec {spec!r}: {exc}") from exc


def parse_schedule(spec: str) -> list[tuple[int, int]]:
    """Grammar: Q0-Q1,Q0-Q1,...  (increasing windows)."""
    try:
        windows = []
        for item in spec.split(","):
            lo, _, hi = item.partition("-")
            windows.append((int(lo), int(hi)))
        return windows
    except ValueError as exc:
        raise ConfigError(f"invalid schedule {spec!r}: {exc}") from exc


def _merge_config(args: argparse.Namespace) -> argparse.Namespace:
    """Fill unset CLI options from the JSON config document, if given."""
    if not getattr(args, "config", None):
        return args
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object")
    for key, value in doc.items():
        attr = key.replace("-", "_")
        if getattr(args, attr, None) is None and attr != "config":
            setattr(args, attr, value)
    return args


# ---------------------------------------------------------------- reporting

def emit_report(
    args, command: str, header: list[str], rows: list[dict], summary: dict
) -> None:
    """Write the CSV table or the JSON summary (config + results)."""
    fmt = args.format or "csv"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    elif fmt == "json":
        doc = {
            "command": command,
            "config": {
                k: v
                for k, v in sorted(vars(args).items())
                if k not in ("config", "out", "func") and v is not None
            },
            "rows": rows,
            "summary": summary,
        }
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        raise ConfigError(f"unknown format {fmt!r}")
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)


# -------------------------------------------------------------- subcommands

def cmd_dirichlet_pairs(args) -> int:
    target = parse_target(args.target or "0")
    if target.kind != "fixed-rational":
        raise ConfigError("dirichlet-pairs requires a fixed rational target")
    d_max = int(args.dmax or 100)
    table = PairTable(target.y1)
    rows = []
    failures = 0
    for d in range(1, d_max + 1):
        pr = table.pair(d)
        err = pr.error(target.y1)
        ok = err * d < 1 and 1 <= pr.b <= d and math.gcd(abs(pr.a), pr.b) == 1
        failures += not ok
        rows.append(
            {"d": d, "a": pr.a, "b": pr.b, "error": frac_str(err), "ok": ok}
        )
    emit_report(args, "dirichlet-pairs",
                ["d", "a", "b", "error", "ok"], rows,
                {"target": frac_str(target.y1), "failures": failures})
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILURE


def _pair_for(variant: str, target: TargetScheme, d: int, table: PairTable | None):
    if variant == "fixed-pair":
        return (target.a[0], target.b)
    if variant == "tilde":
        return table.pair(d)
    return None


def cmd_measure(args) -> int:
    variant = args.variant or "tilde"
    if variant not in VARIANTS:
        raise ConfigError(f"unknown variant {variant!r}")
    target = parse_target(args.target or "0")
    delta = parse_rational(args.delta or "1/10")
    if not 0 <= delta < Fraction(1, 2):
        raise ConfigError("delta must lie in [0, 1/2)")
    moduli = [int(args.d)] if args.d else list(range(1, int(args.dmax or 50) + 1))
    table = PairTable(target.y1) if target.kind == "fixed-rational" else None
    rows = []
    failures = 0
    for d in moduli:
        pair = _pair_for(variant, target, d, table)
        closed = closed_form_measure(1, 1, d, delta, pair=pair, variant=variant)
        oracle = build_interval_set(variant, d, delta, target, table).measure
        ok = closed == oracle
        failures += not ok
        rows.append({
            "d": d, "variant": variant, "delta": frac_str(delta),
            "target": frac_str(target.y1),
            "closed_form": frac_str(closed), "oracle": frac_str(oracle),
            "match": ok,
        })
    emit_report(args, "measure",
                ["d", "variant", "delta", "target", "closed_form", "oracle",
                 "match"],
                rows, {"failures": failures})
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILURE


def cmd_qia(args) -> int:
    psi = parse_psi(args.psi or "capped:1/4:1")
    target = parse_target(args.target or "0")
    variant = args.variant or "tilde"
    if variant not in VARIANTS:
        raise ConfigError(f"unknown variant {variant!r}")
    if variant == "tilde" and not psi.is_capped:
        raise ConfigError("tilde QIA requires a capped psi (psi(q) <= 1/q)")
    cutoffs = [int(q) for q in str(args.Q or "100").split(",")]
    rows = []
    for Q in cutoffs:
        rep = qia_ratio(psi, target, variant, Q, threads=int(args.threads or 1))
        rows.append({
            "Q": Q, "variant": variant,
            "S1": frac_str(rep.S1),
            "S2_parallel": frac_str(rep.S2_parallel),
            "S2_nonparallel": frac_str(rep.S2_nonparallel),
            "ratio": frac_str(rep.ratio),
            "step2_lhs": frac_str(rep.step2_lhs),
            "step2_rhs": frac_str(rep.step2_rhs),
            "step3_lhs": frac_str(rep.step3_lhs),
            "step3_rhs": frac_str(rep.step3_rhs),
            "degenerate": rep.degenerate,
        })
    emit_report(args, "qia",
                ["Q", "variant", "S1", "S2_parallel", "S2_nonparallel",
                 "ratio", "step2_lhs", "step2_rhs", "step3_lhs", "step3_rhs",
                 "degenerate"],
                rows, {"psi": psi.describe(), "target": frac_str(target.y1)})
    return EXIT_OK


def cmd_disjointness(args) -> int:
    psi = parse_psi(args.psi or "capped:1:1")
    target = parse_target(args.target or "1/7")
    rows = []
    failures = 0
    if args.d and args.e and args.q and args.r:
        tuples = [(int(args.d), int(args.e), int(args.q), int(args.r))]
    else:
        d_max = int(args.dmax or 12)
        tuples = []
        for d in range(3, d_max + 1):
            for e in range(1, d):
                if math.gcd(d, e) < 3:
                    continue
                r = 2 * d * d
                tuples.append((d, e, r + 1, r))
    for d, e, q, r in tuples:
        res = disjointness_check(d, e, q, r, psi, target.y1)
        bad = res.hypotheses_ok and res.measure != 0
        failures += bad
        rows.append({
            "d": d, "e": e, "q": q, "r": r,
            "measure": frac_str(res.measure),
            "hypotheses_ok": res.hypotheses_ok,
            "violated": ";".join(res.violated),
        })
    emit_report(args, "disjointness",
                ["d", "e", "q", "r", "measure", "hypotheses_ok", "violated"],
                rows, {"failures": failures})
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILURE


def cmd_gallagher(args) -> int:
    a = parse_rational(args.a or "3/4")
    b = parse_rational(args.b or "3/4")
    ms = [int(m) for m in str(args.m or "1,2").split(",")]
    rows = []
    for m in ms:
        total = gallagher_overlap_sum(a, b, m)
        ratio = total / (a * b) ** m if a and b else Fraction(0)
        rows.append({
            "a": frac_str(a), "b": frac_str(b), "m": m,
            "sum": frac_str(total), "ratio_to_(ab)^m": frac_str(ratio),
        })
    emit_report(args, "gallagher",
                ["a", "b", "m", "sum", "ratio_to_(ab)^m"], rows, {})
    return EXIT_OK


def cmd_dichotomy(args) -> int:
    psi = parse_psi(args.psi or "power:1:2.2")
    target = parse_target(args.target or "1/3")
    schedule = parse_schedule(args.schedule or "100-200,150-200,180-200")
    samples = int(args.samples or 5000)
    seed = int(args.seed if args.seed is not None else DEFAULT_SEED)
    floor = float(args.floor) if args.floor is not None else None
    result = dichotomy_experiment(psi, target, schedule, samples, seed,
                                  floor=floor)
    rows = []
    for row in result.rows:
        t = row.tail
        rows.append({
            "Q0": t.Q0, "Q1": t.Q1, "samples": t.samples, "hits": t.hits,
            "estimate": t.estimate, "stderr": t.stderr,
            "tail_bound": frac_str(row.tail_bound),
            "floor": row.floor if row.floor is not None else "",
        })
    emit_report(args, "dichotomy",
                ["Q0", "Q1", "samples", "hits", "estimate", "stderr",
                 "tail_bound", "floor"],
                rows, {"diagnosis": result.diagnosis, "seed": seed})
    return EXIT_OK


# ------------------------------------------------------------- verify-suite

MEASURE_RADII = (Fraction(1, 10), Fraction(1, 7), Fraction(3, 8))
MEASURE_TARGETS = (Fraction(0), Fraction(1, 3), Fraction(2, 7), Fraction(5, 12))
QIA_CUTOFFS = (100, 200, 400, 800)
AUDIT_TARGETS = (Fraction(0), Fraction(1, 3))
DICHOTOMY_SEED = DEFAULT_SEED
DICHOTOMY_SAMPLES = 100_000


def qia_preset_targets() -> list[TargetScheme]:
    """y in {0, 1/3, 2/7} plus the convergent surrogate of sqrt(2)-1."""
    ys = [Fraction(0), Fraction(1, 3), Fraction(2, 7),
          rational_surrogate(math.sqrt(2.0) - 1.0, max(QIA_CUTOFFS))]
    return [TargetScheme.fixed_rational(y) for y in ys]


def qia_preset_psi() -> ApproxFunction:
    return ApproxFunction.capped(ApproxFunction.power(Fraction(1, 4), 1))


def compute_qia_floors(cutoffs=QIA_CUTOFFS, threads: int = 1) -> dict:
    psi = qia_preset_psi()
    floors = {}
    for target in qia_preset_targets():
        key = frac_str(target.y1)
        floors[key] = {}
        for Q in cutoffs:
            rep = qia_ratio(psi, target, "tilde", Q, threads=threads)
            floors[key][str(Q)] = frac_str(rep.ratio)
    return floors


def compute_audit_constants() -> dict:
    """Max lhs/rhs over the frozen calibration grids, one per audit."""
    best_basic = Fraction(0)
    for y in AUDIT_TARGETS:
        target = TargetScheme.fixed_rational(y)
        for d in range(1, 16):
            for e in list(range(1, d + 1)) + [-x for x in range(1, d + 1)]:
                for d1 in (Fraction(1, 10), Fraction(2, 5)):
                    for d2 in (Fraction(1, 10), Fraction(1, 7)):
                        lhs, rhs = basic_bound_audit(d, e, d1, d2, target)
                        if lhs:
                            best_basic = max(best_basic, lhs / rhs)
    psi = qia_preset_psi()
    best_s2 = Fraction(0)
    best_s3 = Fraction(0)
    for q in list(range(2, 61)) + [120, 240, 360]:
        s2l, s2r, s3l, s3r = step_bounds_audit(q, psi)
        best_s2 = max(best_s2, s2l / s2r)
        best_s3 = max(best_s3, s3l / s3r)
    best_rp = Fraction(0)
    for (a, b) in ((1, 3), (2, 5), (0, 1)):
        target = TargetScheme.fixed_pair(a, b)
        for q in range(2, 21):
            for r in list(range(1, q)) + [-x for x in range(1, q)]:
                for d1 in (Fraction(1, 8), Fraction(1, 10)):
                    lhs, rhs = rational_pair_audit(q, r, d1, d1, target)
                    if lhs:
                        best_rp = max(best_rp, lhs / rhs)
    grid = [Fraction(1, 8), Fraction(1, 4), Fraction(1, 2), Fraction(1),
            Fraction(3, 2), Fraction(2)]
    best_gal = Fraction(0)
    for a in grid:
        for b in grid:
            for m in (1, 2):
                best_gal = max(best_gal, gallagher_overlap_sum(a, b, m) / (a * b) ** m)
    return {
        "basic_bound": frac_str(best_basic),
        "step2": frac_str(best_s2),
        "step3": frac_str(best_s3),
        "rational_pair": frac_str(best_rp),
        "gallagher": frac_str(best_gal),
    }


def compute_local_density_margin() -> Fraction:
    """Min lhs - rhs over the frozen window grid (threshold cases only)."""
    windows = [
        CircleIntervalUnion.from_arcs([(Fraction(1, 4), Fraction(1, 4))]),
        CircleIntervalUnion.from_arcs([(Fraction(1, 3), Fraction(1, 8))]),
        CircleIntervalUnion.from_arcs([(Fraction(0), Fraction(1, 16))]),
    ]
    margin = None
    for y in AUDIT_TARGETS:
        target = TargetScheme.fixed_rational(y)
        for d in range(1, 101):
            for w in windows:
                lhs, rhs, ok = local_density_check(d, Fraction(1, 10), w, target)
                if not ok:
                    continue
                gap = lhs - rhs
                margin = gap if margin is None else min(margin, gap)
    return margin


def divergent_preset():
    psi = ApproxFunction.capped(ApproxFunction.power(Fraction(1, 2), 1))
    target = TargetScheme.fixed_rational(Fraction(1, 3))
    return psi, target


def compute_divergent_estimate() -> float:
    from .dichotomy import tail_union_estimate

    psi, target = divergent_preset()
    est = tail_union_estimate(psi, target, 100, 1000, DICHOTOMY_SAMPLES,
                              DICHOTOMY_SEED)
    return est.estimate


def recalibrate(threads: int = 1, full: bool = True) -> dict:
    cutoffs = QIA_CUTOFFS if full else QIA_CUTOFFS[:1]
    pins = {
        "provenance": {
            "generated": date.today().isoformat(),
            "command": "groshevlab verify-suite --recalibrate",
            "kernel": IMPLEMENTATION,
            "version": __version__,
            "note": "oracle-run values; regression tolerance is exact equality",
        },
        "qia_floors": compute_qia_floors(cutoffs, threads=threads),
        "audit_constants": compute_audit_constants(),
        "local_density": {
            "c_m": "1/4",
            "min_margin": frac_str(compute_local_density_margin()),
        },
        "dichotomy": {
            "divergent_estimate": compute_divergent_estimate(),
            "divergent_floor": 0.95,
            "seed": DICHOTOMY_SEED,
            "samples": DICHOTOMY_SAMPLES,
            "window": [100, 1000],
        },
    }
    return pins


def cmd_verify_suite(args) -> int:
    quick = bool(getattr(args, "quick", False))
    threads = int(args.threads or 1)
    if getattr(args, "recalibrate", False):
        pins = recalibrate(threads=threads, full=not quick)
        path = save_pins(pins, Path(args.out) if args.out else None)
        sys.stdout.write(f"pins written to {path}\n")
        return EXIT_OK
    try:
        pins = load_pins()
    except OSError as exc:
        raise ConfigError(f"pins file missing ({exc}); run --recalibrate") from exc
    checks: list[tuple[str, bool, str]] = []

    # measure formula on a reduced grid
    bad = 0
    cases = 0
    for y in (Fraction(0), Fraction(1, 3)):
        target = TargetScheme.fixed_rational(y)
        table = PairTable(y)
        for d in range(1, 31 if quick else 61):
            for delta in MEASURE_RADII:
                pair = table.pair(d)
                closed = closed_form_measure(1, 1, d, delta, pair=pair)
                oracle = build_interval_set("tilde", d, delta, target, table).measure
                cases += 1
                bad += closed != oracle
    checks.append(("measure-formula", bad == 0, f"{cases} cases, {bad} mismatches"))

    # dirichlet pair conditions
    bad = 0
    for y in (Fraction(0), Fraction(1, 3), Fraction(2, 7)):
        table = PairTable(y)
        for d in range(1, 501 if quick else 2001):
            pr = table.pair(d)
            if not (pr.error(y) * d < 1 and 1 <= pr.b <= d):
                bad += 1
    hom = PairTable(Fraction(0)).pair(123)
    checks.append(("dirichlet-pairs", bad == 0 and (hom.a, hom.b) == (0, 1),
                   f"{bad} violations; homogeneous pair ({hom.a},{hom.b})"))

    # QIA hand value at Q = 1
    rep = qia_ratio(ApproxFunction.power(Fraction(1, 4), 1),
                    TargetScheme.fixed_rational(0), "coprime", 1)
    hand_ok = (rep.S1, rep.S2, rep.ratio) == (4, 20, Fraction(4, 5))
    checks.append(("qia-hand-value", hand_ok,
                   f"S1={rep.S1} S2={rep.S2} ratio={rep.ratio}"))

    # QIA floors vs pins
    cutoffs = QIA_CUTOFFS[:1] if quick else QIA_CUTOFFS
    floors = compute_qia_floors(cutoffs, threads=threads)
    pinned = pins["qia_floors"]
    bad = sum(
        floors[key][q] != pinned.get(key, {}).get(q)
        for key in floors for q in floors[key]
    )
    checks.append(("qia-floors", bad == 0,
                   f"{sum(len(v) for v in floors.values())} ratios, {bad} regressions"))

    # audit constants vs pins
    consts = compute_audit_constants()
    bad = sum(consts[k] != pins["audit_constants"].get(k) for k in consts)
    one_ok = all(parse_rational(v) > 0 for v in consts.values())
    checks.append(("audit-constants", bad == 0 and one_ok,
                   f"{consts} vs pinned"))

    # gallagher hand values
    g1 = gallagher_overlap_sum(Fraction(3, 4), Fraction(3, 4), 1)
    g2 = gallagher_overlap_sum(Fraction(3, 4), Fraction(3, 4), 2)
    checks.append(("gallagher-hand-values", (g1, g2) == (1, 4), f"{g1}, {g2}"))

    # local density margin
    margin = compute_local_density_margin()
    checks.append(("local-density", margin >= 0 and
                   frac_str(margin) == pins["local_density"]["min_margin"],
                   f"min margin {margin}"))

    # dichotomy divergent floor
    if not quick:
        est = compute_divergent_estimate()
        dp = pins["dichotomy"]
        checks.append(("dichotomy-divergent",
                       est >= dp["divergent_floor"] and est == dp["divergent_estimate"],
                       f"estimate {est} floor {dp['divergent_floor']}"))

    # zero-one invariance
    viol = zero_one_invariance_sample(
        TargetScheme.fixed_rational(Fraction(1, 3)),
        ApproxFunction.capped(ApproxFunction.power(Fraction(1, 2), 1)),
        1000 if quick else 5000, DEFAULT_SEED)
    checks.append(("zero-one-invariance", viol == 0, f"{viol} violations"))

    failures = 0
    for name, ok, detail in checks:
        sys.stdout.write(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n")
        failures += not ok
    sys.stdout.write(
        f"{len(checks) - failures}/{len(checks)} checks passed "
        f"(kernel: {IMPLEMENTATION})\n")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILURE


# --------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groshevlab",
        description="Verification laboratory for gcd-restricted approximation sets",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config supplying defaults")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--seed", type=int)
        p.add_argument("--threads", type=int)

    p = sub.add_parser("dirichlet-pairs", help="canonical pair per modulus")
    common(p)
    p.add_argument("--target")
    p.add_argument("--dmax", type=int)
    p.set_defaults(func=cmd_dirichlet_pairs)

    p = sub.add_parser("measure", help="closed-form vs interval-union measure")
    common(p)
    p.add_argument("--variant")
    p.add_argument("--target")
    p.add_argument("--delta")
    p.add_argument("--d", type=int)
    p.add_argument("--dmax", type=int)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("qia", help="quasi-independence-on-average report")
    common(p)
    p.add_argument("--psi")
    p.add_argument("--target")
    p.add_argument("--variant")
    p.add_argument("--Q")
    p.set_defaults(func=cmd_qia)

    p = sub.add_parser("disjointness", help="gcd >= 3 disjointness criterion")
    common(p)
    p.add_argument("--psi")
    p.add_argument("--target")
    p.add_argument("--d", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--dmax", type=int)
    p.set_defaults(func=cmd_disjointness)

    p = sub.add_parser("gallagher", help="shifted-box overlap sums")
    common(p)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--m")
    p.set_defaults(func=cmd_gallagher)

    p = sub.add_parser("dichotomy", help="Monte Carlo tail-union windows")
    common(p)
    p.add_argument("--psi")
    p.add_argument("--target")
    p.add_argument("--schedule")
    p.add_argument("--samples", type=int)
    p.add_argument("--floor")
    p.set_defaults(func=cmd_dichotomy)

    p = sub.add_parser("verify-suite", help="run all checks against the pins")
    common(p)
    p.add_argument("--recalibrate", action="store_true",
                   help="regenerate the pins file from oracle runs")
    p.add_argument("--quick", action="store_true",
                   help="reduced grids (development aid)")
    p.set_defaults(func=cmd_verify_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _merge_config(args)
        return args.func(args)
    except ConfigError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())

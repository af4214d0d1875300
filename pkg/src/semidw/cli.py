"""Command-line front end.

Commands
--------
compute       seminorm, minimum modulus, numerical radius, Crawford number
              and Davis-Wielandt radius of one (metric, operator) pair
bounds        evaluate the full bound catalog, report only
verify        same as bounds but exits 4 when any record is unsatisfied
exact         closed-form block radii of [[I,X],[O,O]] and [[O,X],[O,O]]
              cross-checked against the sampling oracle
remark-repro  built-in regression: A = diag(1,2), X = [[0,1],[0,0]],
              Y = [[1,0],[0,0]]; checks the four published bound values
suite         randomized property suites with violation replay files

Exit codes: 0 success, 2 parse error, 3 precondition failure, 4 property
violation, 1 internal error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import bounds as bnd
from . import exact as exm
from . import jsonio
from . import radii as rad
from . import sampling as smp
from .errors import ParseError, PreconditionError, PropertyViolation, SemidwError
from .metric import build_metric
from .semiop import block2, sharp

REMARK_EXPECTED = {
    "feki-sum-upper": 4.2994,
    "sum-split-upper": 2.621320,
    "product-sum-balanced-upper": 3.240466,
    "product-sum-aligned-upper": 3.26928,
}
REMARK_TOL = 5e-4


def _fmt(x) -> str:
    if x is None:
        return "n/a"
    return f"{float(x):.6g}"


def _emit(args, payload: dict, text_lines: list[str], csv_text: str | None = None) -> None:
    if args.format == "json":
        out = jsonio.dump_json(payload, args.out)
        if args.out is None:
            print(out)
    elif args.format == "csv":
        body = csv_text if csv_text is not None else _kv_csv(payload)
        if args.out is None:
            sys.stdout.write(body)
        else:
            Path(args.out).write_text(body)
    else:
        body = "\n".join(text_lines) + "\n"
        if args.out is None:
            sys.stdout.write(body)
        else:
            Path(args.out).write_text(body)


def _kv_csv(payload: dict, prefix: str = "") -> str:
    rows = ["key,value"]

    def walk(obj, pre):
        if isinstance(obj, dict):
            for k in sorted(obj):
                walk(obj[k], f"{pre}{k}." if not pre else f"{pre}{k}.")
        elif isinstance(obj, list):
            rows.append(f"{pre[:-1]},\"{obj}\"")
        else:
            rows.append(f"{pre[:-1]},{obj}")

    walk(payload, prefix)
    return "\n".join(rows) + "\n"


def _load_pair(args):
    metric = build_metric(jsonio.load_matrix(args.metric))
    operator = jsonio.load_matrix(args.operator)
    return metric, operator


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args) -> int:
    m, t = _load_pair(args)
    quantities = {
        "seminorm": rad.op_seminorm(m, t),
        "min_modulus": rad.min_modulus(m, t),
        "numerical_radius": rad.numerical_radius(m, t),
        "crawford": rad.crawford(m, t, seed=args.seed),
        "dw_radius": rad.dw_radius(m, t, seed=args.seed),
    }
    payload = {name: est.to_dict() for name, est in quantities.items()}
    lines = [f"metric dim {m.dim}, rank {m.rank}"]
    for name, est in quantities.items():
        lines.append(f"{name:17s} = {_fmt(est.value):>12s}   ({est.method})")
    wit = quantities["dw_radius"].witness
    if wit is not None:
        lines.append("dw witness (ambient, null-space component zero):")
        lines.append("  " + np.array2string(wit, precision=6, suppress_small=True))
    _emit(args, payload, lines)
    return 0


def _bounds_report(args):
    m, t = _load_pair(args)
    if args.operator2:
        t2 = jsonio.load_matrix(args.operator2)
        return bnd.pair_report(m, t, t2, seed=args.seed,
                               oracle_samples=args.samples, tol=args.tol)
    return bnd.verify_all(m, t, seed=args.seed, oracle_samples=args.samples,
                          tol=args.tol)


def _report_text(report) -> list[str]:
    lines = [
        f"instance: dim {report.instance['dim']} rank {report.instance['rank']} "
        f"(metric {report.instance['metric_sha']}, operator {report.instance['operator_sha']})",
        f"reference dw = {_fmt(report.reference_dw)} "
        f"(multistart {_fmt(report.dw_multistart)}, oracle {_fmt(report.dw_oracle)})",
        f"{'record':34s} {'kind':6s} {'value':>12s} {'gap':>12s}  ok",
    ]
    for rec in report.records:
        ok = "n/a" if rec.satisfied is None else ("yes" if rec.satisfied else "NO")
        lines.append(f"{rec.anchor:34s} {rec.kind:6s} {_fmt(rec.value):>12s} "
                     f"{_fmt(rec.gap):>12s}  {ok}")
    lines.append(f"overall: {'pass' if report.overall_pass else 'FAIL'}")
    return lines


def cmd_bounds(args) -> int:
    report = _bounds_report(args)
    _emit(args, jsonio.report_to_dict(report), _report_text(report), jsonio.report_csv(report))
    return 0


def cmd_verify(args) -> int:
    report = _bounds_report(args)
    _emit(args, jsonio.report_to_dict(report), _report_text(report), jsonio.report_csv(report))
    return 0 if report.overall_pass else 4


def cmd_exact(args) -> int:
    m, x = _load_pair(args)
    est_ix = exm.dw_exact_ix(m, x)
    est_0x = exm.dw_exact_0x(m, x)
    payload = {"identity_block": est_ix.to_dict(), "zero_block": est_0x.to_dict()}
    lines = [
        f"||X||_A = {_fmt(rad.op_seminorm(m, x).value)}",
        f"dw of [[I,X],[O,O]] = {_fmt(est_ix.value)}",
        f"dw of [[O,X],[O,O]] = {_fmt(est_0x.value)}",
    ]
    if 0 < 2 * m.rank <= 6:
        eye = np.eye(m.dim)
        zero = np.zeros((m.dim, m.dim))
        records = []
        for label, top, est in (("identity-block-exact", eye, est_ix),
                                ("zero-block-exact", zero, est_0x)):
            blk = block2(m, top, x, zero, zero)
            ora = rad.oracle_extremum(blk.metric2, blk.assembled, "dw",
                                      samples=args.samples, seed=args.seed)
            tol = args.tol if args.tol is not None else 1e-4 * (1.0 + ora.value)
            gap = est.value - ora.value
            records.append(bnd.BoundRecord(
                name=label.replace("-", " "),
                anchor=label,
                kind="exact",
                value=est.value,
                reference_dw=ora.value,
                satisfied=bool(abs(gap) <= tol),
                gap=gap,
            ))
            payload[f"oracle_{label.split('-')[0]}_block"] = ora.to_dict()
        payload["records"] = [jsonio.record_to_dict(rec) for rec in records]
        for rec in records:
            ok = "yes" if rec.satisfied else "NO"
            lines.append(f"{rec.anchor:22s} value {_fmt(rec.value):>12s} "
                         f"oracle {_fmt(rec.reference_dw):>12s}  ok {ok}")
        if not all(rec.satisfied for rec in records):
            _emit(args, payload, lines)
            return 4
    _emit(args, payload, lines)
    return 0


def _remark_instance():
    m = build_metric(np.diag([1.0, 2.0]))
    x = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    y = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    return m, x, y


def cmd_remark_repro(args) -> int:
    m, x, y = _remark_instance()
    eye = np.eye(2)
    ref = rad.dw_radius(m, x + y, seed=args.seed)
    oracle = rad.oracle_extremum(m, x + y, "dw", samples=args.samples, seed=args.seed)
    dw_ref = max(ref.value, oracle.value)
    records = [
        bnd.feki_sum_upper(m, x, y, reference=dw_ref),
        bnd.sum_upper(m, x, y, reference=dw_ref)[0],
        bnd.product_sum_upper_b(m, eye, eye, x, y, reference=dw_ref),
        bnd.product_sum_upper_c(m, eye, eye, x, y, reference=dw_ref),
    ]
    ordering = [
        "sum-split-upper",
        "product-sum-balanced-upper",
        "product-sum-aligned-upper",
        "feki-sum-upper",
    ]
    by_anchor = {rec.anchor: rec for rec in records}
    rows = []
    all_ok = True
    for rec in records:
        expected = REMARK_EXPECTED[rec.anchor]
        ok = abs(rec.value - expected) <= REMARK_TOL and bool(rec.satisfied)
        all_ok &= ok
        rows.append((rec.anchor, rec.value, expected, ok))
    values = [by_anchor[a].value for a in ordering]
    order_ok = all(values[i] < values[i + 1] for i in range(len(values) - 1))
    all_ok &= order_ok
    payload = {
        "dw": dw_ref,
        "dw_multistart": ref.value,
        "dw_oracle": oracle.value,
        "tolerance": REMARK_TOL,
        "ordering_ok": order_ok,
        "overall_pass": bool(all_ok),
        "bounds": [
            {"anchor": a, "value": v, "expected": e, "ok": ok} for a, v, e, ok in rows
        ],
    }
    lines = [
        "built-in instance: A = diag(1,2), X = [[0,1],[0,0]], Y = [[1,0],[0,0]]",
        f"computed dw_A(X+Y) = {_fmt(dw_ref)}",
        f"{'bound':28s} {'value':>12s} {'reference':>12s}  ok",
    ]
    for a, v, e, ok in rows:
        lines.append(f"{a:28s} {_fmt(v):>12s} {_fmt(e):>12s}  {'yes' if ok else 'NO'}")
    lines.append(f"ordering sum-split < balanced < aligned < feki: {'yes' if order_ok else 'NO'}")
    lines.append(f"overall: {'pass' if all_ok else 'FAIL'}")
    csv_text = "anchor,value,expected,ok\n" + "\n".join(
        f"{a},{v!r},{e!r},{str(ok).lower()}" for a, v, e, ok in rows
    ) + "\n"
    _emit(args, payload, lines, csv_text)
    return 0 if all_ok else 4


# ---------------------------------------------------------------------------
# suite


def _suite_bounds_one(seed_entropy, dim: int, rank: int, samples: int):
    rng = np.random.default_rng(seed_entropy)
    m = smp.random_metric(rng, dim, rank)
    t = smp.random_bounded_operator(rng, m)
    report = bnd.verify_all(m, t, seed=int(seed_entropy[-1]), oracle_samples=samples)
    return m, t, report


def _suite_exact_one(seed_entropy, dim: int, target_b: float, samples: int):
    rng = np.random.default_rng(seed_entropy)
    m = smp.random_metric(rng, dim)
    x = smp.random_bounded_operator(rng, m)
    b = rad.op_seminorm(m, x).value
    if target_b == 0.0:
        x = np.zeros_like(x)
    elif b > 0:
        x = x * (target_b / b)
    failures = []
    values = {}
    for label, maker in (("identity_block", exm.dw_exact_ix), ("zero_block", exm.dw_exact_0x)):
        closed = maker(m, x)
        eye = np.eye(dim)
        zero = np.zeros((dim, dim))
        top = eye if label == "identity_block" else zero
        blk = block2(m, top, x, zero, zero)
        oracle = rad.oracle_extremum(blk.metric2, blk.assembled, "dw", samples=samples,
                                     seed=int(seed_entropy[-1]))
        values[label] = (closed.value, oracle.value)
        if abs(closed.value - oracle.value) > 1e-3 * (1.0 + closed.value):
            failures.append(label)
    return values, failures


def _suite_invariance_one(seed_entropy, dim: int):
    rng = np.random.default_rng(seed_entropy)
    m = smp.random_metric(rng, dim)
    t = smp.random_bounded_operator(rng, m)
    seed = int(seed_entropy[-1])
    dw_t = rad.dw_radius(m, t, seed=seed).value
    u = smp.random_phase_unitary(rng, m)
    conj = sharp(m, u) @ t @ u
    dw_conj = rad.dw_radius(m, conj, seed=seed).value
    failures = []
    if abs(dw_t - dw_conj) > 1e-6 * (1.0 + dw_t):
        failures.append("unitary-conjugation")
    x = smp.random_bounded_operator(rng, m)
    y = smp.random_bounded_operator(rng, m)
    theta = rng.uniform(0.0, 2.0 * np.pi)
    zero = np.zeros((dim, dim))
    base = block2(m, zero, x, y, zero)
    phased = block2(m, zero, x, np.exp(1j * theta) * y, zero)
    swapped = block2(m, zero, y, x, zero)
    dw_base = rad.dw_radius(base.metric2, base.assembled, seed=seed).value
    dw_phase = rad.dw_radius(phased.metric2, phased.assembled, seed=seed).value
    dw_swap = rad.dw_radius(swapped.metric2, swapped.assembled, seed=seed).value
    if abs(dw_base - dw_phase) > 1e-6 * (1.0 + dw_base):
        failures.append("block-phase")
    if abs(dw_base - dw_swap) > 1e-6 * (1.0 + dw_base):
        failures.append("block-swap")
    return (dw_t, dw_conj, dw_base, dw_phase, dw_swap), failures


def cmd_suite(args) -> int:
    if args.replay:
        return _replay(args)
    root = np.random.SeedSequence(args.seed)
    dims = [2, 3, 4]
    lines = []
    payload = {"seed": args.seed, "suites": {}}
    failed = None

    passed = 0
    for k in range(args.verify_count):
        dim = dims[k % len(dims)]
        rank = dim if k % 3 else max(1, dim - 1)
        entropy = [args.seed, 1, k]
        m, t, report = _suite_bounds_one(entropy, dim, rank, args.samples)
        if report.overall_pass:
            passed += 1
        elif failed is None:
            failed = {
                "suite": "bounds",
                "entropy": entropy,
                "dim": dim,
                "rank": rank,
                "samples": args.samples,
                "metric": jsonio.matrix_to_dict(m.a),
                "operator": jsonio.matrix_to_dict(t),
                "records": [jsonio.record_to_dict(r) for r in report.records
                            if r.satisfied is False or r.status == "error"],
            }
    lines.append(f"bounds suite:     {passed}/{args.verify_count} instances pass")
    payload["suites"]["bounds"] = {"pass": passed, "total": args.verify_count}

    branch_targets = [0.0, 0.3, 1.0 / np.sqrt(2.0), 0.9, 1.6]
    passed = 0
    for k in range(args.exact_count):
        dim = 2 + (k % 2)
        target = branch_targets[k % len(branch_targets)]
        entropy = [args.seed, 2, k]
        values, failures = _suite_exact_one(entropy, dim, target, args.samples)
        if not failures:
            passed += 1
        elif failed is None:
            failed = {"suite": "exact", "entropy": entropy, "dim": dim,
                      "target_b": target, "failures": failures,
                      "values": {k2: list(v) for k2, v in values.items()}}
    lines.append(f"exact suite:      {passed}/{args.exact_count} instances pass")
    payload["suites"]["exact"] = {"pass": passed, "total": args.exact_count}

    passed = 0
    for k in range(args.invariance_count):
        dim = dims[k % len(dims)]
        entropy = [args.seed, 3, k]
        _, failures = _suite_invariance_one(entropy, dim)
        if not failures:
            passed += 1
        elif failed is None:
            failed = {"suite": "invariance", "entropy": entropy, "dim": dim,
                      "failures": failures}
    lines.append(f"invariance suite: {passed}/{args.invariance_count} instances pass")
    payload["suites"]["invariance"] = {"pass": passed, "total": args.invariance_count}

    if failed is not None:
        replay_path = Path(args.out or ".") if (args.out and Path(args.out).is_dir()) \
            else Path(".")
        replay_file = replay_path / "semidw-violation.json"
        jsonio.dump_json(failed, replay_file)
        lines.append(f"violation detail written to {replay_file}")
        payload["violation"] = failed
        _emit(args, payload, lines)
        return 4
    _emit(args, payload, lines)
    return 0


def _replay(args) -> int:
    import json

    data = json.loads(Path(args.replay).read_text())
    entropy = data["entropy"]
    if data["suite"] == "bounds":
        m, t, report = _suite_bounds_one(entropy, data["dim"], data["rank"],
                                         data.get("samples", args.samples))
        _emit(args, jsonio.report_to_dict(report), _report_text(report),
              jsonio.report_csv(report))
        return 0 if report.overall_pass else 4
    if data["suite"] == "exact":
        values, failures = _suite_exact_one(entropy, data["dim"], data["target_b"],
                                            args.samples)
        payload = {"values": {k: list(v) for k, v in values.items()},
                   "failures": failures}
        _emit(args, payload, [str(payload)])
        return 0 if not failures else 4
    if data["suite"] == "invariance":
        values, failures = _suite_invariance_one(entropy, data["dim"])
        payload = {"values": list(values), "failures": failures}
        _emit(args, payload, [str(payload)])
        return 0 if not failures else 4
    raise ParseError(f"unknown suite {data['suite']!r} in replay file")


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semidw",
        description="Semi-Hilbertian operator radii and Davis-Wielandt bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input: bool):
        if needs_input:
            p.add_argument("--metric", required=True, help="metric JSON file")
            p.add_argument("--operator", required=True, help="operator JSON file")
            p.add_argument("--operator2", help="second operator JSON file (pair bounds)")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--samples", type=int, default=None,
                       help="oracle sample count (default 200000; 4096 for suite)")
        p.add_argument("--tol", type=float, default=None,
                       help="verification tolerance override")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", help="write the report to this path")

    p = sub.add_parser("compute", help="compute the five radius functionals")
    common(p, True)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("bounds", help="evaluate the bound catalog (report only)")
    common(p, True)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("verify", help="evaluate the bound catalog, exit 4 on failure")
    common(p, True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("exact", help="closed-form block radii with oracle cross-check")
    common(p, True)
    p.set_defaults(fn=cmd_exact)

    p = sub.add_parser("remark-repro", help="built-in published-value regression")
    common(p, False)
    p.set_defaults(fn=cmd_remark_repro)

    p = sub.add_parser("suite", help="randomized property suites")
    common(p, False)
    p.add_argument("--verify-count", type=int, default=60)
    p.add_argument("--exact-count", type=int, default=30)
    p.add_argument("--invariance-count", type=int, default=30)
    p.add_argument("--replay", help="re-run one serialized violation instance")
    p.set_defaults(fn=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.samples is None:
        args.samples = 4096 if args.command == "suite" else 200_000
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 3
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 4
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except SemidwError as exc:  # pragma: no cover - safety net
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

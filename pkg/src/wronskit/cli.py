"""Command line front end.

``verify`` sweeps whole suites of exact checks and writes a deterministic
JSON or markdown report; ``matrix``, ``wronskian`` and ``identity`` are
single-shot conveniences for one matrix, one symbolic Wronskian or one
identity instance.  Exit status: 0 all checks pass, 1 at least one failed,
2 bad usage or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Callable

from .combinatorics import check_even_binomial_sum, check_odd_binomial_sum
from .independence import (
    ChainSpec,
    verify_basis_columns,
    verify_dependence,
    verify_even_hankel_transform,
    verify_full_rank,
    verify_wronskian_factorization,
    verify_wronskian_transform,
    wronskian_hankel,
)
from .report import VerificationReport
from .structured import (
    MatrixKind,
    MatrixSpec,
    build,
    det_closed_form,
    det_identity,
    verify_even_from_odd,
    verify_pascal_product,
    verify_triangularization,
)
from .trigring import Trig, is_constant

SUITES = ("identities", "determinants", "pascal", "wronskian", "coords", "open-identity")

# fixed affine-progression grid swept by the determinants suite
AFFINE_SLOPES = (-2, -1, 1, 2, 3, Fraction(1, 2))
AFFINE_OFFSETS = (-1, 0, 1, 2)

# representative node tuples for the determinants suite; the last one has a
# repeated node, so its determinant must vanish
NODE_TUPLES = (
    (1, 3, 5),
    (0, 2, 7, 11),
    (Fraction(1, 2), 2, Fraction(7, 3), 4),
    (-3, -1, 2, 5, 8),
    (2, 2, 6),
)


@dataclass
class SuiteConfig:
    suites: tuple[str, ...] = SUITES
    max_n: int = 3
    max_j: int | None = None
    shifts: tuple[int, ...] = (0, 1, 2)
    kinds: tuple[Trig, ...] = (Trig.SIN, Trig.COS)
    fmt: str = "json"
    output: str | None = None
    jobs: int = 1

    def validate(self) -> None:
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ValueError(f"unknown suite(s): {', '.join(bad)}; valid: {', '.join(SUITES)}")
        if not self.suites:
            raise ValueError("at least one suite is required")
        if self.max_n < 1:
            raise ValueError("max-n must be >= 1")
        if self.max_j is not None and self.max_j < 1:
            raise ValueError("max-j must be >= 1")
        if any(s < 0 for s in self.shifts) or not self.shifts:
            raise ValueError("shifts must be a nonempty list of integers >= 0")
        if not self.kinds:
            raise ValueError("kinds must be nonempty")
        if self.fmt not in ("json", "markdown"):
            raise ValueError("format must be json or markdown")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


Check = tuple[str, Callable[[], VerificationReport]]


def plan_checks(config: SuiteConfig) -> list[Check]:
    """Expand the configured suites into independent check thunks."""
    max_j = config.max_j if config.max_j is not None else config.max_n
    plan: list[Check] = []

    def add(suite: str, fn: Callable[..., VerificationReport], *args) -> None:
        plan.append((suite, lambda fn=fn, args=args: fn(*args)))

    if "identities" in config.suites:
        for n in range(1, config.max_n + 1):
            for j in range(1, max_j + 1):
                add("identities", check_odd_binomial_sum, n, j)
    if "open-identity" in config.suites:
        for n in range(1, config.max_n + 1):
            for j in range(1, max_j + 1):
                add("open-identity", check_even_binomial_sum, n, j)
    if "determinants" in config.suites:
        for n in range(1, config.max_n + 1):
            add("determinants", det_identity, MatrixSpec(MatrixKind.BINOM_ODD, n=n))
            add("determinants", det_identity, MatrixSpec(MatrixKind.BINOM_EVEN, n=n))
            add("determinants", verify_triangularization, n)
            add("determinants", verify_even_from_odd, n)
        for n in range(1, min(config.max_n, 7) + 1):
            for a in AFFINE_SLOPES:
                for b in AFFINE_OFFSETS:
                    add("determinants", det_identity, MatrixSpec(MatrixKind.BINOM_AFFINE, n=n, a=a, b=b))
        for nodes in NODE_TUPLES:
            add("determinants", det_identity, MatrixSpec(MatrixKind.BINOM_NODES, nodes=nodes))
    if "pascal" in config.suites:
        for n in range(2, config.max_n + 1):
            add("pascal", verify_pascal_product, n)
    if "wronskian" in config.suites:
        for n in range(0, min(config.max_n, 3) + 1):
            for shift in config.shifts:
                for kind in config.kinds:
                    add("wronskian", verify_wronskian_factorization, n, shift, kind)
        for n in range(0, min(config.max_n, 2) + 1):
            for kind in config.kinds:
                add("wronskian", verify_dependence, n, kind)
        for steps in (1, 2, 3):
            for shift in (0, 1, 2):
                for n in range(1, min(config.max_n, 3) + 1):
                    for kind in config.kinds:
                        add("wronskian", verify_even_hankel_transform, steps, shift, n, kind)
        for n in range(1, min(config.max_n, 3) + 1):
            for kind in config.kinds:
                add("wronskian", verify_wronskian_transform, n, kind)
    if "coords" in config.suites:
        for n in range(1, config.max_n + 1):
            add("coords", verify_full_rank, n)
        for n in range(1, min(config.max_n, 3) + 1):
            add("coords", verify_basis_columns, n)
    return plan


def run_checks(config: SuiteConfig) -> tuple[list[tuple[str, VerificationReport]], float]:
    started = time.perf_counter()
    plan = plan_checks(config)
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(lambda item: (item[0], item[1]()), plan))
    else:
        reports = [(suite, thunk()) for suite, thunk in plan]
    duration = (time.perf_counter() - started) * 1000.0
    reports.sort(key=lambda sr: (sr[0], sr[1].check, json.dumps(sr[1].params, sort_keys=True)))
    return reports, duration


def to_record(suite: str, report: VerificationReport) -> dict:
    record = {
        "suite": suite,
        "check": report.check,
        "params": report.params,
        "expected": report.expected,
        "computed": report.computed,
        "pass": report.passed,
        "millis": round(report.millis, 3),
    }
    if report.note:
        record["note"] = report.note
    return record


def render_json(reports: list[tuple[str, VerificationReport]], duration: float) -> str:
    records = [to_record(s, r) for s, r in reports]
    passed = sum(1 for r in records if r["pass"])
    doc = {
        "records": records,
        "aggregate": {
            "total": len(records),
            "passed": passed,
            "failed": len(records) - passed,
            "duration": round(duration, 3),
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_markdown(reports: list[tuple[str, VerificationReport]], duration: float) -> str:
    lines = ["# verification report"]
    current = None
    for suite, rep in reports:
        if suite != current:
            lines.extend(["", f"## {suite}", "",
                          "| check | params | expected | computed | pass | millis |",
                          "|---|---|---|---|---|---|"])
            current = suite
        params = ", ".join(f"{k}={v}" for k, v in sorted(rep.params.items()))
        verdict = "pass" if rep.passed else "**FAIL**"
        lines.append(f"| {rep.check} | {params} | {rep.expected} | {rep.computed} "
                     f"| {verdict} | {rep.millis:.3f} |")
    passed = sum(1 for _, r in reports if r.passed)
    lines.extend(["", f"**total** {len(reports)}, **passed** {passed}, "
                      f"**failed** {len(reports) - passed}, **duration** {duration:.3f} ms", ""])
    return "\n".join(lines)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {text!r}") from exc


def _parse_kinds(text: str) -> tuple[Trig, ...]:
    out = []
    for part in text.split(","):
        try:
            out.append(Trig(part.strip()))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"kind must be sin or cos, got {part!r}") from exc
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wronskit",
        description="Exact verification of Wronskian and binomial determinant identities "
                    "for the derivative families of x^n sin x and x^n cos x.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run suites of checks and emit a report")
    verify.add_argument("--suite", action="append", default=None,
                        help="suite name or comma list; repeatable; 'all' selects every suite")
    verify.add_argument("--max-n", type=int, default=None, help="largest family parameter n")
    verify.add_argument("--max-j", type=int, default=None,
                        help="largest column index for the identity sweeps (default: max-n)")
    verify.add_argument("--shifts", type=_parse_int_list, default=None,
                        help="comma list of derivative shifts for the wronskian suite")
    verify.add_argument("--kinds", type=_parse_kinds, default=None, help="comma list: sin,cos")
    verify.add_argument("--format", dest="fmt", choices=("json", "markdown"), default=None)
    verify.add_argument("--output", default=None, help="write the report here instead of stdout")
    verify.add_argument("--config", default=None, help="JSON config file; flags override it")
    verify.add_argument("--jobs", type=int, default=None, help="worker threads (default 1)")

    matrix = sub.add_parser("matrix", help="print one structured matrix")
    matrix.add_argument("--kind", required=True, choices=[k.value for k in MatrixKind])
    matrix.add_argument("--n", type=int, default=0, help="size / family parameter")
    matrix.add_argument("--k", type=int, default=None, help="shift cutoff for the shift kinds")
    matrix.add_argument("--a", type=_parse_fraction, default=None, help="affine slope")
    matrix.add_argument("--b", type=_parse_fraction, default=None, help="affine offset")
    matrix.add_argument("--nodes", default=None, help="comma list of rational nodes")
    matrix.add_argument("--json", action="store_true", help="emit JSON instead of aligned text")

    wronskian = sub.add_parser("wronskian", help="symbolic Wronskian of a derivative chain")
    wronskian.add_argument("--n", type=int, required=True, help="f = x^n sin x or x^n cos x")
    wronskian.add_argument("--shift", type=int, default=0, help="first derivative order in the chain")
    wronskian.add_argument("--kind", choices=("sin", "cos"), default="sin")
    wronskian.add_argument("--count", type=int, default=None,
                           help="chain length (default 2n+2, the independence threshold)")
    wronskian.add_argument("--print-matrix", action="store_true")

    identity = sub.add_parser("identity", help="check one binomial-sum identity instance")
    identity.add_argument("--which", choices=("odd", "even"), required=True,
                          help="odd: proved row sum; even: unproved analogue")
    identity.add_argument("--n", type=int, required=True)
    identity.add_argument("--j", type=int, required=True)
    return parser


def _load_config(args: argparse.Namespace) -> SuiteConfig:
    config = SuiteConfig()
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        known = {f.name for f in fields(SuiteConfig)}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config key(s): {', '.join(sorted(unknown))}")
        if "suites" in raw:
            config.suites = tuple(raw["suites"])
        if "max_n" in raw:
            config.max_n = int(raw["max_n"])
        if "max_j" in raw and raw["max_j"] is not None:
            config.max_j = int(raw["max_j"])
        if "shifts" in raw:
            config.shifts = tuple(int(s) for s in raw["shifts"])
        if "kinds" in raw:
            config.kinds = tuple(Trig(k) for k in raw["kinds"])
        if "fmt" in raw:
            config.fmt = str(raw["fmt"])
        if "output" in raw and raw["output"] is not None:
            config.output = str(raw["output"])
        if "jobs" in raw:
            config.jobs = int(raw["jobs"])
    if args.suite is not None:
        names: list[str] = []
        for chunk in args.suite:
            names.extend(part.strip() for part in chunk.split(",") if part.strip())
        config.suites = SUITES if "all" in names else tuple(dict.fromkeys(names))
    if args.max_n is not None:
        config.max_n = args.max_n
    if args.max_j is not None:
        config.max_j = args.max_j
    if args.shifts is not None:
        config.shifts = args.shifts
    if args.kinds is not None:
        config.kinds = args.kinds
    if args.fmt is not None:
        config.fmt = args.fmt
    if args.output is not None:
        config.output = args.output
    if args.jobs is not None:
        config.jobs = args.jobs
    config.validate()
    return config


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        config = _load_config(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    reports, duration = run_checks(config)
    text = render_json(reports, duration) if config.fmt == "json" else render_markdown(reports, duration)
    if config.output:
        try:
            with open(config.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for _, r in reports) else 1


def _cmd_matrix(args: argparse.Namespace) -> int:
    kind = MatrixKind(args.kind)
    nodes = None
    if args.nodes is not None:
        try:
            nodes = tuple(_parse_fraction(part) for part in args.nodes.split(","))
        except argparse.ArgumentTypeError as exc:
            print(f"configuration error: {exc}", file=sys.stderr)
            return 2
    spec = MatrixSpec(kind, n=args.n, k=args.k, a=args.a, b=args.b, nodes=nodes)
    try:
        mat = build(spec)
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    identity_report = None
    try:
        det_closed_form(spec)
        identity_report = det_identity(spec)
    except ValueError:
        pass
    if args.json:
        doc = mat.to_json_dict()
        if identity_report is not None:
            doc["det_identity"] = to_record("determinants", identity_report)
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        print(mat.pretty())
        if identity_report is not None:
            print(identity_report.line())
    if identity_report is not None and not identity_report.passed:
        return 1
    return 0


def _cmd_wronskian(args: argparse.Namespace) -> int:
    if args.n < 0 or args.shift < 0:
        print("configuration error: n and shift must be >= 0", file=sys.stderr)
        return 2
    count = args.count if args.count is not None else 2 * args.n + 2
    if count < 1:
        print("configuration error: count must be >= 1", file=sys.stderr)
        return 2
    spec = ChainSpec(n=args.n, shift=args.shift, kind=Trig(args.kind), count=count)
    hankel = wronskian_hankel(spec)
    if args.print_matrix:
        print(hankel.pretty())
    det = hankel.determinant()
    constant = is_constant(det) if not isinstance(det, int) else det
    value = constant if constant is not None else det
    print(f"Wronskian of D^{spec.shift} f .. D^{spec.shift + count - 1} f, "
          f"f = x^{spec.n} {spec.kind.value}(x): {value}")
    return 0


def _cmd_identity(args: argparse.Namespace) -> int:
    checker = check_odd_binomial_sum if args.which == "odd" else check_even_binomial_sum
    try:
        report = checker(args.n, args.j)
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    print(report.line())
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "matrix":
        return _cmd_matrix(args)
    if args.command == "wronskian":
        return _cmd_wronskian(args)
    return _cmd_identity(args)


def run_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run_main()

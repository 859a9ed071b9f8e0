"""Command-line front end: verification suites, experiments, reports.

Every command is deterministic given its flags and seed; repeated runs emit
byte-identical output (reports carry no timestamps — timings go to stderr).
CSV output is comma-separated with a header row, '.' decimal separator,
complex values as two columns (re, im), UTF-8, LF line endings.

A plain key=value config file can preset any long option (flags override).
The environment variable CUBICSUMS_CACHE names a directory for cached prime
lists (binary format: u64 little-endian count, then per prime two i64
little-endian coordinates).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import core, expsums, largesieve, sieve, verify
from .core import EisensteinInt, primes_up_to_norm
from .expsums import LambdaShifted
from .symbol import cubic_symbol

SCHEMA_PATH = Path(__file__).parent / "schemas" / "cli_output.schema.json"


def _fmt_complex(z: complex) -> str:
    re = f"{z.real:.12g}"
    im = f"{z.imag:+.12g}"
    return f"{re}{im}i"


def _parse_eis(text: str) -> EisensteinInt:
    try:
        return EisensteinInt.parse(text)
    except core.DomainError as exc:
        raise SystemExit(f"error: {exc}") from exc


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, sort_keys=True, indent=2) if args.json else text
    if getattr(args, "out", None):
        Path(args.out).write_text(out + "\n", encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(out + "\n")


def _write_csv(args, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join("" if v is None else (f"{v:.12g}" if isinstance(v, float) else str(v)) for v in row))
    text = "\n".join(lines) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


# -- prime cache ------------------------------------------------------------------

def cached_primes(x: float) -> list[EisensteinInt]:
    cache_dir = os.environ.get("CUBICSUMS_CACHE")
    if not cache_dir:
        return list(primes_up_to_norm(x))
    path = Path(cache_dir) / f"primes_le_{int(x)}.bin"
    if path.exists():
        return core.read_prime_cache(path)
    primes = list(primes_up_to_norm(x))
    path.parent.mkdir(parents=True, exist_ok=True)
    core.write_prime_cache(path, primes)
    return primes


# -- subcommands -------------------------------------------------------------------

def cmd_verify_all(args) -> int:
    cfg = verify.VerifyConfig(
        cap_norm=args.cap_norm, seed=args.seed, tolerance=args.tolerance, fault=args.inject_fault
    )
    t0 = time.time()
    results = verify.run_suites(cfg)
    report = verify.report_as_dict(results, cfg)
    print(f"verify-all: {len(results)} suites in {time.time() - t0:.1f}s", file=sys.stderr)
    if args.json:
        _emit(args, report, "")
    else:
        lines = [
            f"{'PASS' if s.passed else 'FAIL'} {s.name} (checks={s.checks}, max_residual={s.max_residual:.3e})"
            + (f" [{s.note}]" if s.note else "")
            for s in results
        ]
        lines.append("all passed" if report["all_passed"] else "FAILED: " + ", ".join(report["failed"]))
        _emit(args, report, "\n".join(lines))
    return 0 if report["all_passed"] else 1


def cmd_symbol(args) -> int:
    a = _parse_eis(args.a)
    b = _parse_eis(args.b)
    try:
        value = cubic_symbol(a, b)
    except core.DomainError as exc:
        raise SystemExit(f"usage error: {exc}")
    payload = {
        "command": "symbol",
        "inputs": {"a": str(a), "b": str(b)},
        "value": {"tag": value.value, "re": value.to_complex().real, "im": value.to_complex().imag},
    }
    _emit(args, payload, value.value)
    return 0


def cmd_gauss(args) -> int:
    c = _parse_eis(args.c)
    mu = LambdaShifted(_parse_eis(args.mu), args.mu_shift)
    try:
        if args.method == "direct":
            res = expsums.gauss_direct(mu, c, cap=args.cap)
        else:
            res = expsums.gauss_fast(mu, c)
    except (core.DomainError, expsums.ResourceError) as exc:
        raise SystemExit(f"usage error: {exc}")
    v = res.value
    payload = {
        "command": "gauss",
        "inputs": {"mu": str(mu.numerator), "mu_shift": mu.lam_exp, "c": str(c), "method": args.method},
        "value": {"re": v.value.real, "im": v.value.imag},
        "terms": v.terms,
        "error_budget": v.error_budget,
    }
    _emit(args, payload, f"{_fmt_complex(v.value)}  (terms={v.terms}, error_budget={v.error_budget:.3e})")
    return 0


def cmd_kloosterman(args) -> int:
    c = _parse_eis(args.c)
    m = LambdaShifted(_parse_eis(args.m), args.m_shift)
    n = LambdaShifted(_parse_eis(args.n), args.n_shift)
    try:
        if args.variant == "ss":
            res = expsums.kloosterman_ss(m, n, c, cap=args.cap)
        else:
            res = expsums.kloosterman_sx(m, n, c, cap=args.cap)
    except (core.DomainError, expsums.ResourceError) as exc:
        raise SystemExit(f"usage error: {exc}")
    payload = {
        "command": "kloosterman",
        "inputs": {
            "variant": args.variant,
            "m": str(m.numerator),
            "m_shift": m.lam_exp,
            "n": str(n.numerator),
            "n_shift": n.lam_exp,
            "c": str(c),
        },
        "value": {"re": res.value.real, "im": res.value.imag},
        "terms": res.terms,
    }
    text = f"{_fmt_complex(res.value)}  (terms={res.terms})"
    if m.is_integral() and n.is_integral():
        printed = expsums.weil_bound(m, n, c)
        covered = expsums.weil_bound_covered(m, n, c, args.variant)
        payload["weil_printed"] = printed
        payload["weil_covered"] = covered
        payload["weil_margin"] = covered - abs(res.value)
        text += f"\n|K| = {abs(res.value):.6g}, Weil printed = {printed:.6g}, covered = {covered:.6g}, margin = {covered - abs(res.value):.6g}"
    _emit(args, payload, text)
    return 0


def cmd_ramanujan(args) -> int:
    r = _parse_eis(args.r)
    k = _parse_eis(args.k)
    try:
        val = expsums.ramanujan_closed(r, k)
    except core.DomainError as exc:
        raise SystemExit(f"usage error: {exc}")
    payload = {
        "command": "ramanujan",
        "inputs": {"r": str(r), "k": str(k)},
        "value": {"re": float(val), "im": 0.0},
        "exact": f"{val.numerator}/{val.denominator}",
    }
    _emit(args, payload, f"{val.numerator}/{val.denominator} = {float(val):.12g}")
    return 0


def cmd_vaughan_check(args) -> int:
    if args.decomposition:
        src = _make_source(args.src, args.seed)
        try:
            residual = sieve.vaughan_decomposition_check(
                args.x, args.R, args.S, None, src, sieve.SmoothWeight(), sieve.DyadicPartition()
            )
        except core.DomainError:
            raise SystemExit(
                f"usage error: (R, S) violates the admissibility condition "
                f"S < X/10000 and 10000X < RS < 10000000X at X = {args.x}"
            )
        payload = {
            "command": "vaughan-check",
            "inputs": {"x": args.x, "R": args.R, "S": args.S, "src": args.src},
            "decomposition_residual": residual,
        }
        _emit(args, payload, f"decomposition residual: {residual:.3e}")
        return 0 if residual <= args.tolerance * 1e3 else 1
    grid = []
    for cell in args.grid.split(";"):
        r_s = cell.split(",")
        grid.append((float(r_s[0]), float(r_s[1])))
    checks = 0
    misses = 0
    worst = 0.0
    for nu in core.primary_in_norm_range(1, args.max_norm):
        for big_r, s in grid:
            t1, t2, t3 = sieve.vaughan_terms(nu, big_r, s)
            want = core.von_mangoldt(nu) if nu.norm() > s else 0.0
            defect = abs(t1 - t2 + t3 - want)
            worst = max(worst, defect)
            checks += 1
            if defect > args.tolerance:
                misses += 1
    pct = 100.0 * (checks - misses) / checks if checks else 100.0
    payload = {
        "command": "vaughan-check",
        "inputs": {"max_norm": args.max_norm, "grid": args.grid},
        "checks": checks,
        "exact_matches_percent": pct,
        "max_defect": worst,
    }
    _emit(args, payload, f"exact matches: {pct:.1f}% ({checks} checks, max defect {worst:.3e})")
    return 0 if misses == 0 else 1


def _make_source(kind: str, seed: int) -> sieve.CoefficientSource:
    if kind == "constant":
        return sieve.constant_source()
    if kind == "synthetic":
        return sieve.synthetic_source(seed)
    if kind == "gauss":
        return sieve.gauss_proxy_source()
    raise SystemExit(f"usage error: unknown source {kind!r}")


def cmd_type_sums(args) -> int:
    a = _parse_eis(args.a)
    src = _make_source(args.src, args.seed)
    w = sieve.SmoothWeight()
    try:
        pointwise = sieve.type1_pointwise(a, args.x, None, src, w)
    except core.DomainError as exc:
        raise SystemExit(f"usage error: {exc}")
    rng_alpha = {}
    rng_beta = {}
    aa = args.x ** 0.4
    for i, p in enumerate(core.primary_in_norm_range(aa, 2 * aa)):
        rng_alpha[p] = sieve.synthetic_source(args.seed + 1)(LambdaShifted(p * core.LAMBDA ** 3, 3))
    bb = 27 * args.x / max(aa, 1.0)
    for i, q in enumerate(core.primary_in_norm_range(bb / 2, 3 * bb)):
        rng_beta[q] = sieve.synthetic_source(args.seed + 2)(LambdaShifted(q * core.LAMBDA ** 3, 3))
    average = sieve.type1_average(rng_alpha, args.x, None, src, w)
    bilinear = sieve.type2_bilinear(rng_alpha, rng_beta, args.x, None, src, w)
    payload = {
        "command": "type-sums",
        "inputs": {"x": args.x, "a": str(a), "src": args.src, "seed": args.seed},
        "type1_pointwise": {"re": pointwise.real, "im": pointwise.imag},
        "type1_average": {"re": average.real, "im": average.imag},
        "type2_bilinear": {"re": bilinear.real, "im": bilinear.imag},
    }
    text = (
        f"type1_pointwise(a={a}) = {_fmt_complex(pointwise)}\n"
        f"type1_average            = {_fmt_complex(average)}\n"
        f"type2_bilinear           = {_fmt_complex(bilinear)}"
    )
    _emit(args, payload, text)
    return 0


def cmd_large_sieve(args) -> int:
    ms = [float(v) for v in args.m_grid.split(",")]
    ns = [float(v) for v in args.n_grid.split(",")]
    seeds = list(range(args.seeds))
    t0 = time.time()
    rows = largesieve.grid_report(ms, ns, seeds, with_omega=args.with_omega)
    print(f"large-sieve: {len(rows)} rows in {time.time() - t0:.1f}s", file=sys.stderr)
    header = ["M", "N", "seed", "lhs", "ratio"]
    if args.with_omega:
        header += ["dual_sq", "cs_bound"]
    table = []
    for r in rows:
        row = [r["M"], r["N"], r["seed"], r["lhs"], r["ratio"]]
        if args.with_omega:
            row += [r.get("dual_sq"), r.get("cs_bound")]
        table.append(row)
    _write_csv(args, header, table)
    return 0


def cmd_bias(args) -> int:
    schedule = [int(v) for v in args.schedule.split(",") if v]
    rows = []
    total = 0j
    count = 0
    done = 0.0
    for x in sorted(schedule):
        for pi in cached_primes(x):
            n = pi.norm()
            if n <= done or n > x:
                continue
            total += expsums.gauss_prime(pi) / math.sqrt(n)
            count += 1
        done = x
        ratio = abs(total) / count if count else None
        rows.append([float(x), count, total.real, total.imag, ratio])
    _write_csv(args, ["X", "count", "sumRe", "sumIm", "ratio"], rows)
    return 0


# -- argument plumbing ---------------------------------------------------------------

def _load_config(path: str) -> dict[str, str]:
    values = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SystemExit(f"usage error: bad config line {line!r}")
        key, _, val = line.partition("=")
        values[key.strip().replace("-", "_")] = val.strip()
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicsums",
        description="Exact-arithmetic cubic character/exponential sum toolkit over Z[ω].",
    )
    parser.add_argument("--config", help="key=value file presetting long options")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="write output to a file instead of stdout")

    p = sub.add_parser("verify-all", help="run every invariant suite")
    common(p)
    p.add_argument("--cap-norm", type=int, default=400)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--inject-fault", default="", help="test hook: flip a named law (e.g. cuberel)")
    p.add_argument("--workers", type=int, default=1, help="reserved; suites already run chunk-deterministically")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("symbol", help="cubic residue symbol (a/b)₃")
    common(p)
    p.add_argument("--a", required=True, help='numerator, e.g. "0+1*w"')
    p.add_argument("--b", required=True, help='primary denominator, e.g. "-2+0*w"')
    p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("gauss", help="cubic Gauss sum g(μ, c)")
    common(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--mu-shift", type=int, default=0, help="λ-denominator exponent of μ")
    p.add_argument("--c", required=True)
    p.add_argument("--method", choices=["fast", "direct"], default="fast")
    p.add_argument("--cap", type=int, default=expsums.GAUSS_DIRECT_CAP)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("kloosterman", help="cubic Kloosterman sum (cusp pair σσ or σξ)")
    common(p)
    p.add_argument("--variant", choices=["ss", "sx"], required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--m-shift", type=int, default=0)
    p.add_argument("--n", required=True)
    p.add_argument("--n-shift", type=int, default=0)
    p.add_argument("--c", required=True)
    p.add_argument("--cap", type=int, default=expsums.KLOOSTERMAN_CAP)
    p.set_defaults(func=cmd_kloosterman)

    p = sub.add_parser("ramanujan", help="normalized Ramanujan sum ψ̂_r(k), exact")
    common(p)
    p.add_argument("--r", required=True)
    p.add_argument("--k", required=True)
    p.set_defaults(func=cmd_ramanujan)

    p = sub.add_parser("vaughan-check", help="three-term identity across all primary ν")
    common(p)
    p.add_argument("--max-norm", type=float, default=1000.0)
    p.add_argument("--grid", default="1,1;10,30;60,8", help='semicolon-separated "R,S" cells')
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--decomposition", action="store_true", help="check the smoothed decomposition identity instead")
    p.add_argument("--x", type=float, default=200.0)
    p.add_argument("--R", type=float, default=10.0 ** 9)
    p.add_argument("--S", type=float, default=0.01)
    p.add_argument("--src", choices=["constant", "synthetic", "gauss"], default="constant")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_vaughan_check)

    p = sub.add_parser("type-sums", help="Type-I/II sums over a coefficient source")
    common(p)
    p.add_argument("--x", type=float, default=100.0)
    p.add_argument("--a", default="1+0*w")
    p.add_argument("--src", choices=["constant", "synthetic", "gauss"], default="constant")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_type_sums)

    p = sub.add_parser("large-sieve", help="bilinear-form ratio experiment grid (CSV)")
    common(p)
    p.add_argument("--m-grid", default="8,16,32")
    p.add_argument("--n-grid", default="8,16,32")
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--with-omega", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_large_sieve)

    p = sub.add_parser("bias", help="normalized Gauss-sum partial sums over primes (CSV)")
    common(p)
    p.add_argument("--schedule", default="1000,10000,100000")
    p.add_argument("--src", choices=["gauss"], default="gauss")
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(func=cmd_bias)

    return parser


#: options whose values are Eisenstein integers and may start with '-'
_EIS_VALUE_OPTS = {"--a", "--b", "--mu", "--m", "--n", "--c", "--r", "--k"}


def _join_eis_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _EIS_VALUE_OPTS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _join_eis_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        presets = _load_config(args.config)
        provided = {
            tok[2:].split("=", 1)[0].replace("-", "_") for tok in argv if tok.startswith("--")
        }
        for key, raw in presets.items():
            if key in provided or not hasattr(args, key):
                continue
            current = getattr(args, key)
            if isinstance(current, bool):
                setattr(args, key, raw.lower() in ("1", "true", "yes", "on"))
            elif isinstance(current, int):
                setattr(args, key, int(raw))
            elif isinstance(current, float):
                setattr(args, key, float(raw))
            else:
                setattr(args, key, raw)
    if args.command == "bias":
        schedule = [int(v) for v in args.schedule.split(",") if v]
        if schedule and max(schedule) > args.cap:
            raise SystemExit("usage error: schedule exceeds --cap resource limit")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

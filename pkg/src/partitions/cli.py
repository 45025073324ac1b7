"""Command-line interface.

Subcommands cover every part of the library: exact values, certified
series evaluation, asymptotics, the error table, Farey/Ford data, Dedekind
sums, A_k sums, Bessel evaluation, and the transformation-law verifiers.

Exit codes: 0 on success, 1 when a verification or series certification
fails (and for I/O trouble), 2 for usage errors.  All error text goes to
stderr.  Output is deterministic for fixed arguments: summation orders,
sample schedules, and precision policies contain no randomness.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf

from .asymptotics import TABLE_NS, display_eps, relative_error_table
from .dedekind import a_k, dedekind_sum
from .bessel import bessel_i_3_2_closed, bessel_i_series
from .eta import verify_eta, verify_f_transform
from .exact import PartitionCache, cache_load, cache_save, p_exact
from .farey import farey_sequence, w_chord
from .precision import PrecisionContext
from .rademacher import CertificationError, default_precision, p_series

CACHE_ENV_VAR = "PARTITIONS_CACHE"


@dataclass
class CliConfig:
    precision_bits: int | None = None
    cache_path: str | None = None
    output_format: str = "plain"


class UsageError(Exception):
    pass


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_prec(value) -> int | None:
    if value is None:
        return None
    if value < 64:
        raise UsageError("--prec must be at least 64 bits")
    return value


def _load_cache(path) -> PartitionCache:
    if path and os.path.exists(path):
        return cache_load(path)
    return PartitionCache()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partitions",
        description="Integer partition counts, exactly and via the convergent series.",
    )
    parser.add_argument(
        "--format",
        choices=("plain", "csv", "json"),
        default="plain",
        help="output format where the subcommand supports a choice",
    )
    parser.add_argument(
        "--cache",
        default=None,
        metavar="PATH",
        help=f"partition value cache file (default: ${CACHE_ENV_VAR})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="p(n) by the pentagonal recurrence")
    p.add_argument("n", type=int)

    p = sub.add_parser("series", help="certified series evaluation of p(n), JSON report")
    p.add_argument("n", type=int)
    p.add_argument("--prec", type=int, default=None, help="working bits (raises the default only)")
    p.add_argument("--terms", type=int, default=None, help="initial term count")

    p = sub.add_parser("asym", help="leading term L(n) and relative error")
    p.add_argument("n", type=int)
    p.add_argument("--prec", type=int, default=None)

    p = sub.add_parser("table", help="error table as CSV")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", choices=("paper",), dest="table_set",
                       help="the built-in reference grid 10..15000")
    group.add_argument("--list", dest="table_list", metavar="N1,N2,...",
                       help="comma-separated n values")

    p = sub.add_parser("farey", help="Farey sequence of the given order as CSV")
    p.add_argument("order", type=int, metavar="N")

    p = sub.add_parser("ford", help="w-plane chord data for the contour of order N as CSV")
    p.add_argument("order", type=int, metavar="N")

    p = sub.add_parser("dedekind", help="exact Dedekind sum s(h,k) as num/den")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("ak", help="A_k(n) as a decimal")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--prec", type=int, default=None)

    p = sub.add_parser("bessel", help="I_{3/2}(x) by series and closed form")
    p.add_argument("x")
    p.add_argument("--prec", type=int, default=None)

    p = sub.add_parser("verify", help="numerical checks of the transformation laws")
    p.add_argument("what", choices=("eta", "ftransform"))
    p.add_argument("--samples", type=int, default=24)
    p.add_argument("--prec", type=int, default=None)

    return parser


def _cmd_exact(cfg: CliConfig, args) -> int:
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    cache = _load_cache(cfg.cache_path)
    value = p_exact(args.n, cache)
    if cfg.cache_path:
        cache_save(cache, cfg.cache_path)
    if cfg.output_format == "json":
        print(json.dumps({"n": args.n, "p": str(value)}))
    elif cfg.output_format == "csv":
        print("n,p_n")
        print(f"{args.n},{value}")
    else:
        print(value)
    return 0


def _cmd_series(cfg: CliConfig, args) -> int:
    if args.n < 1:
        raise UsageError("n must be a positive integer")
    prec = _parse_prec(cfg.precision_bits)
    bits = default_precision(args.n)
    if prec is not None:
        bits = max(bits, prec)  # --prec only raises the policy precision
    if args.terms is not None and args.terms < 1:
        raise UsageError("--terms must be positive")
    report = p_series(args.n, initial_terms=args.terms, prec=bits)
    payload = {
        "n": report.n,
        "prec_bits": report.prec,
        "n_terms_used": report.n_terms_used,
        "terms": [
            {"k": t.k, "a_k": mp.nstr(t.a_k, 20), "r_k": mp.nstr(t.r_k, 20)}
            for t in report.terms
        ],
        "partial_sum": mp.nstr(report.partial_sum, 40),
        "rounded": str(report.rounded),
        "gap": mp.nstr(report.gap, 10),
    }
    print(json.dumps(payload))
    return 0


def _cmd_asym(cfg: CliConfig, args) -> int:
    if args.n < 1:
        raise UsageError("n must be a positive integer")
    ctx = PrecisionContext(_parse_prec(cfg.precision_bits) or 128)
    cache = _load_cache(cfg.cache_path)
    row = relative_error_table([args.n], cache, ctx)[0]
    if cfg.cache_path:
        cache_save(cache, cfg.cache_path)
    if cfg.output_format == "json":
        print(json.dumps({
            "n": row.n,
            "p": str(row.p_n),
            "L": mp.nstr(row.l_n, 20),
            "eps_percent": display_eps(row.eps_percent),
        }))
    elif cfg.output_format == "csv":
        print("n,p_n,L_n,eps_percent")
        print(f"{row.n},{row.p_n},{mp.nstr(row.l_n, 20)},{display_eps(row.eps_percent)}")
    else:
        print(f"L({row.n}) = {mp.nstr(row.l_n, 20)}")
        print(f"eps_percent = {display_eps(row.eps_percent)}")
    return 0


def _cmd_table(cfg: CliConfig, args) -> int:
    if args.table_set == "paper":
        ns = list(TABLE_NS)
    else:
        try:
            ns = [int(part) for part in args.table_list.split(",") if part]
        except ValueError:
            raise UsageError("--list expects comma-separated integers") from None
        if not ns or any(n < 1 for n in ns):
            raise UsageError("--list expects positive integers")
    cache = _load_cache(cfg.cache_path)
    rows = relative_error_table(ns, cache)
    if cfg.cache_path:
        cache_save(cache, cfg.cache_path)
    print("n,p_n,L_n,eps_percent")
    for row in rows:
        print(f"{row.n},{row.p_n},{mp.nstr(row.l_n, 20)},{display_eps(row.eps_percent)}")
    return 0


def _cmd_farey(cfg: CliConfig, args) -> int:
    if args.order < 1:
        raise UsageError("N must be a positive integer")
    print("h,k")
    for frac in farey_sequence(args.order):
        print(f"{frac.numerator},{frac.denominator}")
    return 0


def _cmd_ford(cfg: CliConfig, args) -> int:
    if args.order < 1:
        raise UsageError("N must be a positive integer")
    seq = farey_sequence(args.order)
    extended = seq + [Fraction(args.order + 1, args.order)]
    print("h,k,k1,k2,w1_re,w1_im,w2_re,w2_im")
    for j in range(1, len(seq)):
        chord = w_chord(extended[j - 1], extended[j], extended[j + 1], args.order)
        frac = extended[j]
        print(
            f"{frac.numerator},{frac.denominator},{chord.k1},{chord.k2},"
            f"{_frac_str(chord.w1.re)},{_frac_str(chord.w1.im)},"
            f"{_frac_str(chord.w2.re)},{_frac_str(chord.w2.im)}"
        )
    return 0


def _cmd_dedekind(cfg: CliConfig, args) -> int:
    if args.k < 1:
        raise UsageError("k must be a positive integer")
    value = dedekind_sum(args.h, args.k)
    print(_frac_str(value))
    return 0


def _cmd_ak(cfg: CliConfig, args) -> int:
    if args.k < 1 or args.n < 1:
        raise UsageError("k and n must be positive integers")
    ctx = PrecisionContext(_parse_prec(cfg.precision_bits) or 128)
    print(mp.nstr(a_k(args.k, args.n, ctx), 20))
    return 0


def _cmd_bessel(cfg: CliConfig, args) -> int:
    ctx = PrecisionContext(_parse_prec(cfg.precision_bits) or 128)
    try:
        x = ctx.real(args.x)
    except ValueError:
        raise UsageError(f"cannot parse x = {args.x!r}") from None
    if x <= 0:
        raise UsageError("x must be positive (both routes defined)")
    series = bessel_i_series(Fraction(3, 2), x, ctx)
    closed = bessel_i_3_2_closed(x, ctx)
    with ctx.workprec():
        diff = abs(series - closed)
    print(f"series = {mp.nstr(series, 30)}")
    print(f"closed = {mp.nstr(closed, 30)}")
    print(f"abs_diff = {mp.nstr(diff, 5)}")
    return 0


def eta_verification_cases(count: int):
    """Deterministic (matrix, tau) stream: determinant-1 matrices with c > 0."""
    taus = (
        mpc(0, 1), mpc("0.3", "0.8"), mpc("-0.25", "1.1"),
        mpc("0.5", "0.6"), mpc("0.7", "1.4"), mpc("-0.4", "0.9"),
    )
    cases = []
    j = 0
    while len(cases) < count:
        c = j % 6 + 1
        d = j // 6 + 1
        while math.gcd(c, d) != 1:
            d += 1
        a = pow(d, -1, c) if c > 1 else 1
        b = (a * d - 1) // c
        cases.append(((a, b, c, d), taus[j % len(taus)]))
        j += 1
    return cases


def f_transform_cases(count: int):
    """Deterministic (h, k, z) stream with Re z > 0."""
    zs = (
        mpc(1), mpc("0.5"), mpc(1, "0.4"), mpc("0.8", "-0.3"),
        mpc("1.3", "0.2"), mpc("0.6"), mpc("0.9", "0.7"),
    )
    cases = []
    j = 0
    while len(cases) < count:
        k = j % 6 + 1
        coprime = [h for h in range(1, k + 1) if math.gcd(h, k) == 1]
        h = coprime[(j // 6) % len(coprime)]
        cases.append((h, k, zs[j % len(zs)]))
        j += 1
    return cases


def _cmd_verify(cfg: CliConfig, args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    bits = _parse_prec(cfg.precision_bits) or 128
    ctx = PrecisionContext(bits)
    with ctx.workprec():
        tolerance = mpf(2) ** (mpf(-bits) / 2)
    failures = 0
    worst = mpf(0)
    if args.what == "eta":
        for matrix, tau in eta_verification_cases(args.samples):
            report = verify_eta(matrix, tau, ctx)
            ok = report.residual < tolerance
            failures += 0 if ok else 1
            worst = max(worst, report.residual)
            print(
                f"eta {matrix} tau={mp.nstr(tau, 6)}: residual = "
                f"{mp.nstr(report.residual, 5)} [{'ok' if ok else 'FAIL'}]"
            )
    else:
        for h, k, z in f_transform_cases(args.samples):
            residual = verify_f_transform(h, k, z, ctx)
            ok = residual < tolerance
            failures += 0 if ok else 1
            worst = max(worst, residual)
            print(
                f"ftransform (h,k)=({h},{k}) z={mp.nstr(z, 6)}: residual = "
                f"{mp.nstr(residual, 5)} [{'ok' if ok else 'FAIL'}]"
            )
    print(
        f"{args.samples} cases, worst residual {mp.nstr(worst, 5)}, "
        f"tolerance {mp.nstr(tolerance, 5)}: "
        f"{'all ok' if failures == 0 else f'{failures} FAILED'}"
    )
    return 0 if failures == 0 else 1


_HANDLERS = {
    "exact": _cmd_exact,
    "series": _cmd_series,
    "asym": _cmd_asym,
    "table": _cmd_table,
    "farey": _cmd_farey,
    "ford": _cmd_ford,
    "dedekind": _cmd_dedekind,
    "ak": _cmd_ak,
    "bessel": _cmd_bessel,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = CliConfig(
        precision_bits=getattr(args, "prec", None),
        cache_path=args.cache or os.environ.get(CACHE_ENV_VAR),
        output_format=args.format,
    )
    try:
        return _HANDLERS[args.command](cfg, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CertificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""Command-line front end.

Exit codes: 0 success, 1 unexpected error, 2 usage error, 3 bad parameters
or key, 4 malformed ciphertext, 5 key mismatch, 6 plaintext/encoding error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, dragon
from .cipher import decrypt_text, encrypt_text, generate_key, split_units, start_points
from .codec import MODES, read_key, write_key
from .errors import DragonCryptoError, MalformedCiphertext, ParameterError
from .fixedpoint import DEFAULT_PRECISION, FixedPoint
from .koblitz import DEFAULT_SPREAD


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: str | None, data: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(data)
    else:
        Path(path).write_text(data, encoding="utf-8", newline="\n")


def _load_key(path: str):
    try:
        return read_key(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParameterError(f"cannot read key file: {exc}") from None


def cmd_keygen(args) -> None:
    key = generate_key(
        args.bits,
        iterations=args.iterations,
        size=args.size,
        angle_deg=args.angle_deg,
        precision=args.precision,
        d=args.d,
        mode=args.mode,
        seed=args.seed,
    )
    _write_text(args.out, write_key(key))


def cmd_encrypt(args) -> None:
    key = _load_key(args.key)
    _write_text(args.out, encrypt_text(_read_text(args.input), key) + "\n")


def cmd_decrypt(args) -> None:
    key = _load_key(args.key)
    raw = _read_text(args.input)
    if raw.endswith("\n"):
        raw = raw[:-1]
    if "\n" in raw:
        raise MalformedCiphertext("ciphertext must be a single line")
    _write_text(args.out, decrypt_text(raw, key))


def _trace_params(args):
    """Fractal parameters from the key file, with explicit flags taking precedence."""
    key = _load_key(args.key) if args.key else None

    def pick(flag, attr, fallback=None):
        if flag is not None:
            return flag
        return getattr(key, attr) if key else fallback

    l = pick(args.size, "size")
    n = pick(args.iterations, "iterations")
    theta = pick(args.angle_deg, "angle_deg", 0)
    q = pick(args.precision, "precision", 0)
    if l is None or n is None:
        raise ParameterError("trace needs --key or both --size and --iterations")

    if args.text is not None:
        if key is None:
            raise ParameterError("--text needs --key to place the character on a curve")
        units = split_units(args.text, key)
        if not units:
            raise ParameterError("--text must not be empty")
        pt = start_points(units[0], key)[0]
        start = (pt.x, pt.y)
    else:
        start = tuple(args.point) if args.point else (0, 0)
    return start, l, theta, n, q


def svg_document(vertices, scale: int = 10) -> str:
    """Single-polyline SVG with integer coordinates and a fitted viewBox."""
    pts = [(round(x.mantissa * scale / 10**x.q), -round(y.mantissa * scale / 10**y.q)) for x, y in vertices]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    pad = scale
    min_x, min_y = min(xs) - pad, min(ys) - pad
    width, height = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    body = " ".join(f"{x},{y}" for x, y in pts)
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{min_x} {min_y} {width} {height}">\n'
        f'<polyline fill="none" stroke="black" stroke-width="{max(1, scale // 5)}" points="{body}"/>\n'
        "</svg>\n"
    )


def csv_document(vertices) -> str:
    return "x,y\n" + "".join(f"{x},{y}\n" for x, y in vertices)


def cmd_trace(args) -> None:
    start, l, theta, n, q = _trace_params(args)
    origin = (FixedPoint.from_int(start[0], q), FixedPoint.from_int(start[1], q))
    vertices = dragon.trace_polyline(origin, l, theta, n)
    if args.svg:
        _write_text(args.svg, svg_document(vertices, args.scale))
    if args.csv or not args.svg:
        _write_text(args.csv, csv_document(vertices))


def cmd_turns(args) -> None:
    if args.index is not None:
        print(dragon.nth_turn(args.index).value)
    elif args.n is not None:
        print(dragon.turn_sequence(args.n))
    else:
        raise ParameterError("give an iteration count or --index")


def cmd_bench(args) -> None:
    if args.step < 1 or args.min_len < 0 or args.max_len < args.min_len:
        raise ParameterError("need 0 <= min-len <= max-len and step >= 1")
    lengths = range(args.min_len, args.max_len + 1, args.step)
    records = bench.run_bench(lengths, trials=args.trials, seed=args.seed)
    if args.out in (None, "-"):
        bench.write_csv(records, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            bench.write_csv(records, fh)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dragon-crypto", description="Dragon-curve toy cipher.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a private key file")
    p.add_argument("--bits", type=int, default=32, help="bit length of the prime p")
    p.add_argument("--iterations", type=int, help="dragon iterations (random if omitted)")
    p.add_argument("--size", type=int, help="step length (random if omitted)")
    p.add_argument("--angle-deg", type=int, help="starting heading in degrees (random if omitted)")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="fractional decimal digits")
    p.add_argument("-d", type=int, default=DEFAULT_SPREAD, help="Koblitz spread")
    p.add_argument("--mode", choices=MODES, default="per-char")
    p.add_argument("--seed", type=int, help="make the key reproducible")
    p.add_argument("-o", "--out", help="key file (stdout if omitted)")
    p.set_defaults(func=cmd_keygen)

    for name, func, helptext in (
        ("encrypt", cmd_encrypt, "encrypt a UTF-8 text file"),
        ("decrypt", cmd_decrypt, "decrypt a ciphertext file"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("-k", "--key", required=True)
        p.add_argument("-i", "--in", dest="input", default="-", help="input file ('-' for stdin)")
        p.add_argument("-o", "--out", help="output file (stdout if omitted)")
        p.set_defaults(func=func)

    p = sub.add_parser("trace", help="dump the dragon polyline as SVG or CSV")
    p.add_argument("-k", "--key")
    p.add_argument("--text", help="trace from the start point of the first character/block (needs --key)")
    p.add_argument("--point", type=int, nargs=2, metavar=("X", "Y"))
    p.add_argument("--size", type=int)
    p.add_argument("--iterations", type=int)
    p.add_argument("--angle-deg", type=int, default=None)
    p.add_argument("--precision", type=int, help="fractional digits (key value, else 0)")
    p.add_argument("--scale", type=int, default=10, help="SVG units per coordinate unit")
    p.add_argument("--svg")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("turns", help="print a turn sequence or a single turn")
    p.add_argument("n", type=int, nargs="?", help="iteration number")
    p.add_argument("--index", type=int, help="1-based turn index")
    p.set_defaults(func=cmd_turns)

    p = sub.add_parser("bench", help="time encrypt+decrypt cycles, write CSV")
    p.add_argument("--min-len", type=int, default=bench.TABLE_LENGTHS[0])
    p.add_argument("--max-len", type=int, default=bench.TABLE_LENGTHS[-1])
    p.add_argument("--step", type=int, default=1040)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=bench.BENCH_SEED)
    p.add_argument("-o", "--out", help="CSV file (stdout if omitted)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DragonCryptoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

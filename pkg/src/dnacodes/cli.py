"""Command-line front end.

Exit codes: 0 success, 1 usage or invalid parameters, 2 data or constraint
errors while decoding.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import List, Optional, Sequence

from . import tables, verify
from .alphabet import AlphabetError, parse_dna, render_dna
from .channel_oracle import KINDS, ChannelError, inject_random
from .constrained import RLL_MODES, REPLACE, DecodeError, ParamsError
from .error_control import NONE, PROTECT_MODES
from .framing import GC_C, GC_D, FramingError, decode_file, encode_file, make_codec
from .gc_balance import BalanceError, as_eps

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _eps(text: str):
    try:
        return as_eps(text)
    except (ValueError, ZeroDivisionError, BalanceError) as exc:
        raise argparse.ArgumentTypeError(f"invalid eps {text!r}: {exc}") from None


def _add_codec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=200, help="strand length before protection")
    p.add_argument("--ell", type=int, default=4, help="maximum homopolymer run")
    p.add_argument("--eps", type=_eps, default=as_eps("1/20"), help="GC tolerance, e.g. 1/20 or 0.05")
    p.add_argument("--rll-mode", choices=RLL_MODES, default=REPLACE)
    p.add_argument(
        "--gc-mode",
        choices=(GC_C, GC_D),
        default=None,
        help="GC balancing only (no run-length limit, no protection)",
    )
    p.add_argument("--protect", choices=PROTECT_MODES, default=NONE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dnacodes", description="Constrained DNA strand codecs.")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    enc = sub.add_parser("encode", help="payload file -> strand file")
    _add_codec_flags(enc)
    enc.add_argument("input", help="payload file ('-' for stdin)")
    enc.add_argument("-o", "--output", default="-")
    enc.add_argument("--format", choices=("bin", "hex"), default="bin", help="payload file format")

    dec = sub.add_parser("decode", help="strand file -> payload file")
    _add_codec_flags(dec)
    dec.add_argument("input", help="strand file ('-' for stdin)")
    dec.add_argument("-o", "--output", default="-")
    dec.add_argument("--format", choices=("bin", "hex"), default="bin", help="payload file format")

    cor = sub.add_parser("corrupt", help="apply one random error to every strand")
    cor.add_argument("input")
    cor.add_argument("-o", "--output", default="-")
    cor.add_argument("--kind", choices=tuple(KINDS), default="edit")
    cor.add_argument("--seed", type=int, default=0)

    tab = sub.add_parser("tables", help="print block bounds and rate tables")
    tab.add_argument("--csv", action="store_true")

    ver = sub.add_parser("verify", help="run the self-check suites")
    ver.add_argument("--suite", choices=tuple(verify.SUITES), default="all")
    ver.add_argument("--fast", action="store_true", help="reduced bounds and sample sizes")
    return parser


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_bytes(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def read_strands(path: str) -> List[tuple]:
    text = _read_bytes(path).decode("utf-8")
    return [parse_dna(line.strip().upper()) for line in text.splitlines() if line.strip()]


def write_strands(path: str, strands: Sequence[Sequence[int]]) -> None:
    _write_bytes(path, "".join(render_dna(s) + "\n" for s in strands).encode("ascii"))


def _codec(args):
    try:
        return make_codec(args.n, args.ell, args.eps, args.rll_mode, args.protect, args.gc_mode)
    except (ParamsError, BalanceError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def cmd_encode(args) -> int:
    codec = _codec(args)
    data = _read_bytes(args.input)
    if args.format == "hex":
        try:
            data = bytes.fromhex(data.decode("ascii"))
        except ValueError as exc:
            raise DecodeError(f"invalid hex payload: {exc}") from None
    write_strands(args.output, encode_file(data, codec))
    return EXIT_OK


def cmd_decode(args) -> int:
    codec = _codec(args)
    data = decode_file(read_strands(args.input), codec)
    if args.format == "hex":
        data = (data.hex() + "\n").encode("ascii") if data else b""
    _write_bytes(args.output, data)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    strands = read_strands(args.input)
    rng = random.Random(args.seed)
    out = [inject_random(s, args.kind, rng.getrandbits(64))[0] for s in strands]
    write_strands(args.output, out)
    print(f"corrupt: kind={args.kind} seed={args.seed} strands={len(out)}", file=sys.stderr)
    return EXIT_OK


def cmd_tables(args) -> int:
    print(tables.render(args.csv))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = []
    for i in verify.SUITES[args.suite]:
        r = verify.CRITERIA[i](args.fast)
        print(r.line(), flush=True)
        results.append(r)
    print(verify.summarize(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_DATA


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "corrupt": cmd_corrupt,
    "tables": cmd_tables,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(f"dnacodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"dnacodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DecodeError, FramingError, AlphabetError, ChannelError, BalanceError, UnicodeDecodeError) as exc:
        print(f"dnacodes: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

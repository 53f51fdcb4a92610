"""Command-line front-end.

Payload (ciphertext, plaintext, keys, CSV reports) goes to the output path
or stdout; diagnostics go to stderr.  Exit codes: 0 success, 1 runtime
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, pipeline
from .errors import CipherError


def _add_input_args(parser: argparse.ArgumentParser, what: str) -> None:
    parser.add_argument("input", nargs="?", metavar="INPUT",
                        help=f"{what} path, or - for stdin")
    parser.add_argument("--text", metavar="TEXT",
                        help=f"inline {what} instead of a path (UTF-8)")


def _read_input(args) -> bytes:
    if args.text is not None and args.input is not None:
        raise CipherError("give either an input path or --text, not both")
    if args.text is not None:
        return args.text.encode("utf-8")
    if args.input is None:
        raise CipherError("no input: give a path, -, or --text")
    if args.input == "-":
        return sys.stdin.buffer.read()
    with open(args.input, "rb") as fh:
        return fh.read()


def _read_text_file(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _write_bytes(path, data: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    with open(path, "wb") as fh:
        fh.write(data)


def _load_key(args) -> pipeline.CipherParams:
    return pipeline.parse_key(_read_text_file(args.key))


def _cmd_encrypt(args) -> int:
    key = _load_key(args)
    ciphertext = pipeline.encrypt(_read_input(args), key)
    _write_text(args.output, pipeline.format_ciphertext(ciphertext, args.format))
    return 0


def _cmd_decrypt(args) -> int:
    key = _load_key(args)
    ciphertext = pipeline.parse_ciphertext(_read_text_file(args.input or "-"))
    _write_bytes(args.output, pipeline.decrypt(ciphertext, key))
    return 0


def _cmd_keygen(args) -> int:
    key = pipeline.keygen(mode=args.mode, seed=args.seed)
    _write_text(args.output, pipeline.serialize_key(key))
    return 0


_SCORERS = {"english": analysis.english_score, "printable": analysis.printable_ratio}


def _cmd_crack(args) -> int:
    ciphertext = pipeline.parse_ciphertext(_read_text_file(args.input or "-"))
    scorer = _SCORERS[args.scorer]
    if args.method == "grid":
        result = analysis.brute_force(
            ciphertext, scorer, mode=args.mode,
            cap_b=args.cap_b, cap_k=args.cap_k, min_score=args.min_score,
        )
        _write_text(args.output, pipeline.serialize_key(result.recovered_key))
    else:
        result = analysis.caesar_lane_attack(
            ciphertext, scorer, mode=args.mode, min_score=args.min_score,
        )
        _write_bytes(args.output, result.plaintext)
    if args.report:
        _write_text(args.report, analysis.attack_csv(result))
    if args.plaintext_out:
        _write_bytes(args.plaintext_out, result.plaintext)
    return 0


def _cmd_avalanche(args) -> int:
    key = _load_key(args)
    reports = analysis.avalanche(_read_input(args), key)
    _write_text(args.output, analysis.avalanche_csv(reports))
    return 0


def _cmd_freq(args) -> int:
    if args.bits:
        ciphertext = pipeline.parse_ciphertext(_read_text_file(args.input or "-"))
        profile = analysis.frequency_profile(ciphertext)
    else:
        profile = analysis.frequency_profile(_read_input(args))
    _write_text(args.output, analysis.frequency_csv(profile))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paddycrypt",
        description="Dual-lane affine/caesar cipher with a rice-paddy bit "
                    "transposition, plus cryptanalysis tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encrypt", help="encrypt a file or inline text")
    _add_input_args(enc, "plaintext")
    enc.add_argument("--key", required=True, metavar="PATH", help="key file")
    enc.add_argument("--format", choices=("bits", "hex"), default="bits",
                     help="ciphertext encoding (default bits)")
    enc.add_argument("-o", "--output", metavar="PATH")
    enc.set_defaults(func=_cmd_encrypt)

    dec = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    dec.add_argument("input", nargs="?", metavar="INPUT",
                     help="ciphertext path, or - for stdin")
    dec.add_argument("--key", required=True, metavar="PATH", help="key file")
    dec.add_argument("-o", "--output", metavar="PATH")
    dec.set_defaults(func=_cmd_decrypt)

    gen = sub.add_parser("keygen", help="generate a random key file")
    gen.add_argument("--mode", choices=("byte", "letters"), default="byte")
    gen.add_argument("--seed", type=int, help="seed for reproducible keys")
    gen.add_argument("-o", "--output", metavar="PATH")
    gen.set_defaults(func=_cmd_keygen)

    crk = sub.add_parser("crack", help="recover key or plaintext from a ciphertext")
    crk.add_argument("input", nargs="?", metavar="INPUT",
                     help="ciphertext path, or - for stdin")
    crk.add_argument("--method", choices=("grid", "caesar-lane"), default="grid",
                     help="grid: full key search (writes a key file); "
                          "caesar-lane: <=n shift trials (writes plaintext)")
    crk.add_argument("--mode", choices=("byte", "letters"), default="byte")
    crk.add_argument("--cap-b", type=int, default=16, help="largest b tried (grid)")
    crk.add_argument("--cap-k", type=int, default=16, help="largest k tried (grid)")
    crk.add_argument("--scorer", choices=sorted(_SCORERS), default="english")
    crk.add_argument("--min-score", type=float)
    crk.add_argument("--report", metavar="PATH", help="write a CSV attack report")
    crk.add_argument("--plaintext-out", metavar="PATH",
                     help="also write the recovered plaintext")
    crk.add_argument("-o", "--output", metavar="PATH")
    crk.set_defaults(func=_cmd_crack)

    ava = sub.add_parser("avalanche", help="per-bit diffusion report (CSV)")
    _add_input_args(ava, "plaintext")
    ava.add_argument("--key", required=True, metavar="PATH", help="key file")
    ava.add_argument("-o", "--output", metavar="PATH")
    ava.set_defaults(func=_cmd_avalanche)

    frq = sub.add_parser("freq", help="value histogram of a file (CSV)")
    _add_input_args(frq, "data")
    frq.add_argument("--bits", action="store_true",
                     help="input is a ciphertext file; profile its bit balance")
    frq.add_argument("-o", "--output", metavar="PATH")
    frq.set_defaults(func=_cmd_freq)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CipherError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""``spirale`` command line.

Success output goes to stdout with exit status 0. Failures print one
line ``ERROR <code>: <message>`` on stderr: exit 2 for usage errors,
exit 1 for everything else.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis
from .alphabet import Alphabet
from .cipher import KeySet, build_stream, decrypt_with, encrypt_with, group, normalize_text
from .errors import SpiraleError
from .keygen import derive_keys_from_extracts, frequency_correct
from .permutation import new_ranks, permute_alphabet
from .table import build_ciphering_table
from .validation import check_alphabet

ALPHABET_ENV = "SPIRALE_ALPHABET"


class UsageError(Exception):
    code = "UsageError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _alphabet(args) -> Alphabet:
    return check_alphabet(args.alphabet or os.environ.get(ALPHABET_ENV))


def _keys(args, count: int) -> list[str]:
    parts = [p.strip() for p in args.keys.split(",")]
    if len(parts) != count:
        raise UsageError(f"--keys needs {count} comma-separated keys, got {len(parts)}")
    return parts


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_permute(args) -> str:
    alpha = _alphabet(args)
    permuted = permute_alphabet(alpha, args.key)
    return alpha.join(permuted) + "\n" + " ".join(map(str, new_ranks(alpha, permuted))) + "\n"


def cmd_table(args) -> str:
    alpha = _alphabet(args)
    k1, k2 = _keys(args, 2)
    return build_ciphering_table(alpha, k1, k2).to_tsv()


def cmd_keystream(args) -> str:
    alpha = _alphabet(args)
    _, gen = build_stream(KeySet(*_keys(args, 4)), alpha, d=args.lag)
    if args.dump_longkey:
        return alpha.join(gen.long_key) + "\n"
    if args.length is None:
        raise UsageError("--length is required unless --dump-longkey is given")
    return alpha.join(gen.prefix(args.length)) + "\n"


def _cipher(args, decrypting: bool) -> None:
    alpha = _alphabet(args)
    table, gen = build_stream(KeySet(*_keys(args, 4)), alpha)
    raw = _read(args.infile)
    if decrypting:
        text = raw.rstrip("\r\n")
        if " " not in alpha:
            text = "".join(text.split())
        out = decrypt_with(table, gen, text)
    else:
        out = encrypt_with(table, gen, normalize_text(alpha, raw))
    _write(args.outfile, group(out, args.group) + "\n")


def cmd_derive_keys(args) -> str:
    alpha = _alphabet(args)
    rows = [ln.strip() for ln in _read(args.extracts).splitlines() if ln.strip()]
    keys = derive_keys_from_extracts(rows, alpha)
    if args.correct:
        keys = frequency_correct(keys, alphabet=alpha)
    return " ".join(keys) + "\n"


def cmd_analyze(args) -> str:
    alpha = _alphabet(args)
    if args.mode == "errprop":
        if not args.keys:
            raise UsageError("--mode errprop needs --keys")
        _, gen = build_stream(KeySet(*_keys(args, 4)), alpha)
        horizon = args.horizon or 3 * gen.k
        diff = analysis.error_propagation_profile(gen, args.flip, horizon)
        closure = analysis.dependency_closure(gen.k, gen.d, args.flip, horizon)
        return (f"k={gen.k} d={gen.d} flip={args.flip} horizon={horizon}\n"
                f"affected {' '.join(map(str, sorted(diff)))}\n"
                f"closure {' '.join(map(str, sorted(closure)))}\n")
    raw = _read(args.infile)
    text = "".join(raw.split()) if " " not in alpha else raw.rstrip("\r\n")
    tokens = alpha.tokenize(text)
    if args.mode == "freq":
        hist = analysis.frequency_histogram(alpha, tokens)
        return "".join(f"{s}\t{c}\n" for s, c in hist.items())
    if args.mode == "ic":
        return f"{analysis.index_of_coincidence(tokens):.6f}\n"
    if args.mode == "chi2":
        return f"{analysis.chi_square_uniform(analysis.frequency_histogram(alpha, tokens)):.6f}\n"
    if args.mode == "autocorr":
        return f"{analysis.autocorrelation_coincidence(tokens, args.lag):.6f}\n"
    if args.mode == "ngrams":
        reps = analysis.repeated_ngrams(tokens, args.n)
        gaps = analysis.ngram_gaps(reps)
        lines = []
        for g in sorted(reps, key=lambda g: (reps[g][0], g)):
            lines.append(json.dumps({"ngram": alpha.join(g), "positions": reps[g], "gaps": gaps[g]},
                                    ensure_ascii=False))
        return "".join(line + "\n" for line in lines)
    raise UsageError(f"unknown mode {args.mode}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spirale", description="Spirale one-time-pad hand cipher")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--alphabet", help="alphabet file or built-in name (letters, alphanumeric, extended)")
        p.set_defaults(func=func)
        return p

    p = add("permute", cmd_permute, "print the permuted alphabet for a key")
    p.add_argument("--key", required=True)

    p = add("table", cmd_table, "dump the ciphering table")
    p.add_argument("--keys", required=True, help="K1,K2")
    p.add_argument("--format", choices=["tsv"], default="tsv")

    p = add("keystream", cmd_keystream, "print the keystream")
    p.add_argument("--keys", required=True, help="K1,K2,K3,K4")
    p.add_argument("--length", type=int)
    p.add_argument("--lag", type=int, help="short lag d (default (k-1)//2)")
    p.add_argument("--dump-longkey", action="store_true")

    for name, decrypting in (("encrypt", False), ("decrypt", True)):
        p = add(name, None, f"{name} a file")
        p.set_defaults(func=lambda a, _d=decrypting: _cipher(a, _d))
        p.add_argument("--keys", required=True, help="K1,K2,K3,K4")
        p.add_argument("--in", dest="infile", default="-")
        p.add_argument("--out", dest="outfile", default="-")
        p.add_argument("--group", type=int, default=0)

    p = add("derive-keys", cmd_derive_keys, "derive four keys from four book extracts")
    p.add_argument("--extracts", required=True, help="file with 4 lines, one extract each")
    p.add_argument("--correct", action="store_true", help="apply the frequency correction")

    p = add("analyze", cmd_analyze, "statistics over a symbol file")
    p.add_argument("--mode", required=True, choices=["freq", "ic", "chi2", "autocorr", "ngrams", "errprop"])
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--lag", type=int, default=1)
    p.add_argument("--n", type=int, default=3, help="n-gram size")
    p.add_argument("--keys", help="K1,K2,K3,K4 (errprop)")
    p.add_argument("--flip", type=int, default=1, help="1-based long-key position to flip (errprop)")
    p.add_argument("--horizon", type=int, help="positions to compare (errprop, default 3k)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = args.func(args)
        if out:
            sys.stdout.write(out)
        return 0
    except UsageError as exc:
        print(f"ERROR UsageError: {exc}", file=sys.stderr)
        return 2
    except SpiraleError as exc:
        print(f"ERROR {exc.code}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"ERROR {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

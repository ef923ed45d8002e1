"""Ordered alphabets of distinct symbol tokens.

Ranks are 0-based residues in ``[0, N-1]``. Printed tables in the hand
procedure count from 1 (A=1 ... Z=26, with 26 congruent to 0); use
``rank_of(s) + 1`` when a 1-based rank is wanted for display.
"""

from __future__ import annotations

import string
from typing import Iterable, Iterator, Sequence, Union

from .errors import AlphabetTooSmall, DuplicateSymbol, NotInAlphabet

SINGLE_LINE = "single-line"
TOKEN_PER_LINE = "token-per-line"

Symbols = Union[str, Sequence[str]]


class Alphabet:
    """Immutable ordered set of symbol tokens with rank lookup."""

    __slots__ = ("_symbols", "_rank", "_max_token")

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        if len(symbols) < 2:
            raise AlphabetTooSmall(f"alphabet needs at least 2 symbols, got {len(symbols)}")
        rank = {}
        for i, s in enumerate(symbols):
            if not isinstance(s, str) or not s:
                raise ValueError(f"symbol tokens must be non-empty strings, got {s!r}")
            if s in rank:
                raise DuplicateSymbol(f"duplicate symbol {s!r} at positions {rank[s]} and {i}")
            rank[s] = i
        self._symbols = symbols
        self._rank = rank
        self._max_token = max(len(s) for s in symbols)

    @property
    def symbols(self) -> tuple[str, ...]:
        return self._symbols

    @property
    def size(self) -> int:
        return len(self._symbols)

    def __len__(self) -> int:
        return len(self._symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self._symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._rank

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self._symbols == other._symbols

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __repr__(self) -> str:
        return f"Alphabet({self.join(self._symbols)!r})"

    def symbol_at(self, rank: int) -> str:
        return self._symbols[rank]

    def rank_of(self, symbol: str) -> int:
        try:
            return self._rank[symbol]
        except KeyError:
            raise NotInAlphabet(f"symbol {symbol!r} is not in the alphabet") from None

    @property
    def single_char(self) -> bool:
        return self._max_token == 1

    def tokenize(self, text: Symbols) -> list[str]:
        """Split ``text`` into alphabet tokens, rejecting anything unknown.

        A list or tuple is taken as already tokenized and only checked.
        Strings are split greedily, longest token first.
        """
        if not isinstance(text, str):
            tokens = list(text)
            for t in tokens:
                self.rank_of(t)
            return tokens
        if self.single_char:
            for ch in text:
                if ch not in self._rank:
                    raise NotInAlphabet(f"symbol {ch!r} is not in the alphabet")
            return list(text)
        tokens = []
        i = 0
        while i < len(text):
            tok = self.match_at(text, i)
            if tok is None:
                raise NotInAlphabet(f"symbol {text[i]!r} at offset {i} is not in the alphabet")
            tokens.append(tok)
            i += len(tok)
        return tokens

    def match_at(self, text: str, i: int) -> str | None:
        for width in range(min(self._max_token, len(text) - i), 0, -1):
            piece = text[i:i + width]
            if piece in self._rank:
                return piece
        return None

    def ranks(self, text: Symbols) -> list[int]:
        return [self._rank[t] for t in self.tokenize(text)]

    def from_ranks(self, ranks: Iterable[int]) -> list[str]:
        return [self._symbols[r] for r in ranks]

    def join(self, tokens: Iterable[str]) -> str:
        """Concatenate tokens for display; multi-character alphabets get a space separator."""
        return ("" if self.single_char else " ").join(tokens)

    @property
    def has_lowercase(self) -> bool:
        return any(ch.islower() for s in self._symbols for ch in s)

    def serialize(self, format: str = SINGLE_LINE) -> str:
        if format == SINGLE_LINE:
            if not self.single_char:
                raise ValueError("single-line format requires one-character tokens")
            return "".join(self._symbols) + "\n"
        if format == TOKEN_PER_LINE:
            return "\n".join(self._symbols) + "\n"
        raise ValueError(f"unknown alphabet format {format!r}")


def parse_alphabet(source: str, format: str = SINGLE_LINE) -> Alphabet:
    """Parse an alphabet from text.

    ``single-line``: every character of the (first) line is one token.
    ``token-per-line``: each line is one token; blank lines are rejected.
    Only line terminators are stripped, so a space can be a token.
    """
    if not source.strip():
        raise AlphabetTooSmall("alphabet source is empty")
    if format == SINGLE_LINE:
        line = source.rstrip("\r\n")
        if "\n" in line:
            raise ValueError("single-line alphabet source spans several lines")
        return Alphabet(line)
    if format == TOKEN_PER_LINE:
        body = source[:-1] if source.endswith("\n") else source
        lines = [ln.rstrip("\r") for ln in body.split("\n")]
        for no, ln in enumerate(lines, 1):
            if not ln:
                raise ValueError(f"blank line {no} in token-per-line alphabet")
        return Alphabet(lines)
    raise ValueError(f"unknown alphabet format {format!r}")


def load_alphabet(path: str, format: str | None = None) -> Alphabet:
    """Read an alphabet file; the format is guessed from the line count when not given."""
    with open(path, encoding="utf-8") as fh:
        source = fh.read()
    if format is None:
        body = source.rstrip("\r\n")
        format = TOKEN_PER_LINE if "\n" in body else SINGLE_LINE
    return parse_alphabet(source, format)


LETTERS = Alphabet(string.ascii_uppercase)
ALPHANUMERIC = Alphabet(string.ascii_uppercase + string.digits)
# '(' and ')' are distinct cells here; with the space this gives 53 symbols.
EXTENDED = Alphabet(string.ascii_uppercase + string.digits + " ,.()+-*/^<=>%€£$")

BUILTIN = {
    "letters": LETTERS,
    "alphanumeric": ALPHANUMERIC,
    "extended": EXTENDED,
}


def builtin_alphabet(name: str) -> Alphabet:
    try:
        return BUILTIN[name]
    except KeyError:
        raise ValueError(f"no built-in alphabet named {name!r}; choose from {sorted(BUILTIN)}") from None


def integer_alphabet(modulus: int) -> Alphabet:
    """Tokens ``"0" .. str(modulus - 1)``, rank equal to value; for numeric recurrences."""
    return Alphabet(str(i) for i in range(modulus))

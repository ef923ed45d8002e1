"""End-to-end encryption and decryption.

Pipeline for one message: K1/K2 permute the row/column entry alphabets
of the ciphering table, K3/K4 span the product matrix whose diagonal
read is the long key, the long key seeds the keystream, and each
plaintext symbol is combined (as row) with the keystream symbol (as
column).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .alphabet import LETTERS, Alphabet, Symbols
from .errors import EmptyKey, EmptyMessage, KeyLengthMismatch, ResultEmpty
from .keystream import KeystreamGenerator, diagonal_read, product_matrix
from .table import CipheringTable, build_ciphering_table

DEFAULT_KEY_LENGTH = 7


@dataclass(frozen=True)
class KeySet:
    """Four equal-length keys: row permutation, column permutation, matrix rows, matrix columns."""

    k1: str | tuple[str, ...]
    k2: str | tuple[str, ...]
    k3: str | tuple[str, ...]
    k4: str | tuple[str, ...]

    @classmethod
    def from_string(cls, text: str, sep: str = ",") -> "KeySet":
        parts = [p.strip() for p in text.split(sep)] if sep else text.split()
        if len(parts) != 4:
            raise ValueError(f"expected 4 keys, got {len(parts)}")
        return cls(*parts)

    @classmethod
    def coerce(cls, keys: "KeySet | str | Sequence[str]") -> "KeySet":
        if isinstance(keys, KeySet):
            return keys
        if isinstance(keys, str):
            return cls.from_string(keys, sep="," if "," in keys else None)
        keys = list(keys)
        if len(keys) != 4:
            raise ValueError(f"expected 4 keys, got {len(keys)}")
        return cls(*keys)

    def __iter__(self):
        return iter((self.k1, self.k2, self.k3, self.k4))

    def tokens(self, alphabet: Alphabet) -> tuple[list[str], ...]:
        """Tokenize and check all four keys; they must share one non-zero length."""
        toks = tuple(alphabet.tokenize(k) for k in self)
        lengths = {len(t) for t in toks}
        if 0 in lengths:
            raise EmptyKey("keys must be non-empty")
        if len(lengths) != 1:
            raise KeyLengthMismatch(f"keys differ in length: {[len(t) for t in toks]}")
        return toks

    def key_length(self, alphabet: Alphabet) -> int:
        return len(self.tokens(alphabet)[0])

    def __str__(self) -> str:
        return ",".join(k if isinstance(k, str) else " ".join(k) for k in self)


def normalize_text(alphabet: Alphabet, raw: str) -> list[str]:
    """Keep only alphabet symbols, longest token first; fold case when the alphabet has no lowercase."""
    if not alphabet.has_lowercase:
        raw = raw.upper()
    out = []
    i = 0
    while i < len(raw):
        tok = alphabet.match_at(raw, i)
        if tok is None:
            i += 1
        else:
            out.append(tok)
            i += len(tok)
    if not out:
        raise ResultEmpty("no alphabet symbols left after normalization")
    return out


def build_stream(keys: KeySet | str | Sequence[str], alphabet: Alphabet = LETTERS,
                 d: int | None = None) -> tuple[CipheringTable, KeystreamGenerator]:
    """Ciphering table and fresh keystream generator for a key set."""
    ks = KeySet.coerce(keys)
    k1, k2, k3, k4 = ks.tokens(alphabet)
    table = build_ciphering_table(alphabet, k1, k2)
    long_key = diagonal_read(product_matrix(table, k3, k4))
    return table, KeystreamGenerator(long_key, table, d=d)


def _check_message(alphabet: Alphabet, message: Symbols) -> list[int]:
    ranks = alphabet.ranks(message) if len(message) else []
    if not ranks:
        raise EmptyMessage("message is empty")
    return ranks


def encrypt_with(table: CipheringTable, gen: KeystreamGenerator, plaintext: Symbols) -> list[str]:
    ranks = _check_message(table.base, plaintext)
    stream = gen.prefix_ranks(len(ranks))
    return table.base.from_ranks(table.combine_ranks(p, s) for p, s in zip(ranks, stream))


def decrypt_with(table: CipheringTable, gen: KeystreamGenerator, ciphertext: Symbols) -> list[str]:
    ranks = _check_message(table.base, ciphertext)
    stream = gen.prefix_ranks(len(ranks))
    return table.base.from_ranks(table.invert_ranks(s, c) for s, c in zip(stream, ranks))


def encrypt(keys: KeySet | str | Sequence[str], alphabet: Alphabet, plaintext: Symbols) -> list[str]:
    """Encrypt already-normalized plaintext; returns ciphertext tokens."""
    _check_message(alphabet, plaintext)
    return encrypt_with(*build_stream(keys, alphabet), plaintext)


def decrypt(keys: KeySet | str | Sequence[str], alphabet: Alphabet, ciphertext: Symbols) -> list[str]:
    _check_message(alphabet, ciphertext)
    return decrypt_with(*build_stream(keys, alphabet), ciphertext)


def group(tokens: Sequence[str], size: int, sep: str = " ") -> str:
    """Insert ``sep`` every ``size`` tokens; ``size`` 0 keeps one continuous line."""
    joiner = "" if all(len(t) == 1 for t in tokens) else " "
    if size <= 0:
        return joiner.join(tokens)
    return sep.join(joiner.join(tokens[i:i + size]) for i in range(0, len(tokens), size))

"""Deriving the four keys from book extracts.

Four extracts of equal length are written one per row; the grid is read
column by column from the rightmost column, top to bottom, and the
result is cut into four keys. An optional correction step swaps some
frequent letters for rare ones.
"""

from __future__ import annotations

from typing import Sequence

from .alphabet import LETTERS, Alphabet
from .errors import BadExtractLength, NotInAlphabet, SetSizeMismatch

ENGLISH_HIGH = "ETAOIN"
ENGLISH_LOW = "ZQXJKV"


def derive_keys_from_extracts(rows: Sequence[str], alphabet: Alphabet = LETTERS) -> tuple[str, ...]:
    """Interlace four extracts into four keys.

    Characters that are not alphabet symbols (compared case-insensitively
    for letter-only alphabets) are dropped first; case is preserved.

    >>> derive_keys_from_extracts(["wegotin", "dedusin", "saidthi", "hisneck"])
    ('nnikiih', 'ctsteou', 'dngdise', 'eaiwdsh')
    """
    if len(rows) != 4:
        raise BadExtractLength(f"need exactly 4 extracts, got {len(rows)}")
    fold = not alphabet.has_lowercase
    cleaned = ["".join(ch for ch in row if (ch.upper() if fold else ch) in alphabet) for row in rows]
    lengths = [len(r) for r in cleaned]
    if len(set(lengths)) != 1 or lengths[0] == 0:
        raise BadExtractLength(f"extracts must share a non-zero length, got {lengths}")
    width = lengths[0]
    stream = "".join(row[col] for col in range(width - 1, -1, -1) for row in cleaned)
    return tuple(stream[i * width:(i + 1) * width] for i in range(4))


def frequency_correct(keys: Sequence[str], high: str = ENGLISH_HIGH, low: str = ENGLISH_LOW,
                      alphabet: Alphabet = LETTERS) -> tuple[str, ...]:
    """Replace every second occurrence of ``high[i]`` by ``low[i]``.

    Occurrences are counted across the keys in order (key 1 first), not
    per key. Output is uppercased.
    """
    high, low = high.upper(), low.upper()
    if len(high) != len(low):
        raise SetSizeMismatch(f"high set has {len(high)} letters, low set has {len(low)}")
    for ch in high + low:
        if ch not in alphabet:
            raise NotInAlphabet(f"symbol {ch!r} is not in the alphabet")
    swap = dict(zip(high, low))
    seen = dict.fromkeys(high, 0)
    out = []
    for key in keys:
        chars = []
        for ch in key.upper():
            if ch in swap:
                seen[ch] += 1
                if seen[ch] % 2 == 0:
                    ch = swap[ch]
            chars.append(ch)
        out.append("".join(chars))
    return tuple(out)

"""Key-driven alphabet permutation.

The key is turned into a list of 1-based alphabet ranks. Counting starts
just right of the last symbol and moves leftward, wrapping around, over
symbols not yet picked; each count in the list (read cyclically) picks
one symbol, and the next count resumes from the picked position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import Alphabet, Symbols
from .errors import EmptyKey


@dataclass(frozen=True)
class PermutationKey:
    key: tuple[str, ...]
    rank_list: tuple[int, ...]

    @classmethod
    def from_key(cls, alphabet: Alphabet, key: Symbols) -> "PermutationKey":
        tokens = tuple(alphabet.tokenize(key)) if key else ()
        if not tokens:
            raise EmptyKey("permutation key is empty")
        return cls(tokens, tuple(alphabet.rank_of(t) + 1 for t in tokens))


def key_to_rank_list(alphabet: Alphabet, key: Symbols) -> list[int]:
    return list(PermutationKey.from_key(alphabet, key).rank_list)


def permutation_order(size: int, rank_list: list[int] | tuple[int, ...]) -> list[int]:
    """Return the original indices in picking order for an alphabet of ``size``."""
    if not rank_list:
        raise EmptyKey("permutation key is empty")
    live = list(range(size))
    order = []
    pos = size  # just past the rightmost symbol
    i = 0
    while live:
        count = rank_list[i % len(rank_list)]
        # the removed slot is invisible: stepping left from pos lands on live[pos - 1]
        pos = (pos - count) % len(live)
        order.append(live.pop(pos))
        i += 1
    return order


def permute_alphabet(alphabet: Alphabet, key: Symbols | PermutationKey) -> Alphabet:
    if not isinstance(key, PermutationKey):
        key = PermutationKey.from_key(alphabet, key)
    order = permutation_order(alphabet.size, key.rank_list)
    return Alphabet(alphabet.symbol_at(i) for i in order)


def new_ranks(alphabet: Alphabet, permuted: Alphabet) -> list[int]:
    """1-based rank of each original symbol inside ``permuted`` (the "its rank" row)."""
    return [permuted.rank_of(s) + 1 for s in alphabet]

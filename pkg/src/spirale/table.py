"""Ciphering table: a Vigenere tableau entered through two permuted alphabets.

The body of the table is never permuted; only the entry points are. A
row symbol ``a`` enters at its rank in the row alphabet, a column symbol
``b`` at its rank in the column alphabet, and the cell holds the base
symbol at ``(row_rank(a) + col_rank(b)) mod N``. With both entry
alphabets left in base order this is plain modular addition.
"""

from __future__ import annotations

from .alphabet import Alphabet, Symbols
from .errors import NotInAlphabet
from .permutation import PermutationKey, permute_alphabet


class CipheringTable:
    """Non-commutative combining operator over ``base``.

    The first operand of :meth:`combine` selects the row, the second the
    column. Rank-level helpers (``*_ranks``) work on base ranks and are
    what the keystream and cipher loops use.
    """

    __slots__ = ("base", "row_perm", "col_perm", "row_rank", "col_rank", "_row_symbol")

    def __init__(self, base: Alphabet, row_perm: Alphabet, col_perm: Alphabet):
        for name, perm in (("row", row_perm), ("column", col_perm)):
            if sorted(perm.symbols) != sorted(base.symbols):
                raise NotInAlphabet(f"{name} alphabet is not a permutation of the base alphabet")
        self.base = base
        self.row_perm = row_perm
        self.col_perm = col_perm
        # indexed by base rank
        self.row_rank = tuple(row_perm.rank_of(s) for s in base)
        self.col_rank = tuple(col_perm.rank_of(s) for s in base)
        # base rank of the symbol entering row r
        self._row_symbol = tuple(base.rank_of(s) for s in row_perm)

    @property
    def size(self) -> int:
        return self.base.size

    def combine_ranks(self, a: int, b: int) -> int:
        return (self.row_rank[a] + self.col_rank[b]) % self.base.size

    def invert_ranks(self, b: int, c: int) -> int:
        return self._row_symbol[(c - self.col_rank[b]) % self.base.size]

    def combine(self, a: str, b: str) -> str:
        base = self.base
        return base.symbol_at(self.combine_ranks(base.rank_of(a), base.rank_of(b)))

    def invert_combine(self, b: str, c: str) -> str:
        """Return the row symbol ``a`` with ``combine(a, b) == c``."""
        base = self.base
        return base.symbol_at(self.invert_ranks(base.rank_of(b), base.rank_of(c)))

    def cell(self, row: int, col: int) -> str:
        """Body cell at 0-based grid position; the body is the unpermuted tableau."""
        return self.base.symbol_at((row + col) % self.base.size)

    def rows(self) -> list[list[str]]:
        """Results of ``combine(a, b)`` for every base symbol pair, in base order."""
        return [[self.combine(a, b) for b in self.base] for a in self.base]

    def to_tsv(self) -> str:
        """Tab-separated dump in the layout of the hand form sheet.

        Header lines: base symbols, their 1-based column ranks, the grid
        index, the column entry alphabet. Each body line: base symbol, its
        1-based row rank, grid index, row entry symbol, then the grid row.
        """
        base = self.base
        n = base.size
        pad = ["", "", ""]
        lines = [
            ["□", *pad, *base.symbols],
            ["", *pad, *(str(r + 1) for r in self.col_rank)],
            ["", *pad, *(str(i + 1) for i in range(n))],
            ["", *pad, *self.col_perm.symbols],
        ]
        for i, s in enumerate(base):
            lines.append([
                s, str(self.row_rank[i] + 1), str(i + 1), self.row_perm.symbol_at(i),
                *(self.cell(i, j) for j in range(n)),
            ])
        return "\n".join("\t".join(line) for line in lines) + "\n"

    def __repr__(self) -> str:
        return (f"CipheringTable(rows={self.base.join(self.row_perm)!r}, "
                f"cols={self.base.join(self.col_perm)!r})")


def build_ciphering_table(alphabet: Alphabet, k1: Symbols | PermutationKey,
                          k2: Symbols | PermutationKey) -> CipheringTable:
    """Rows entered through ``permute(alphabet, k1)``, columns through ``permute(alphabet, k2)``."""
    return CipheringTable(alphabet, permute_alphabet(alphabet, k1), permute_alphabet(alphabet, k2))


def identity_table(alphabet: Alphabet) -> CipheringTable:
    """The plain Vigenere table: ``combine`` is modular addition of ranks."""
    return CipheringTable(alphabet, alphabet, alphabet)

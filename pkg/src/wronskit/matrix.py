"""Dense immutable matrices over the exact rings used here (int, Fraction,
TrigPoly): ring-generic division-free determinants, fraction-free rank, and
the even/odd interleave split for checkerboard matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable

Entry = Any  # int | Fraction | TrigPoly; anything with ring +, -, * and truthiness


class ExactMatrix:
    """Row-major immutable matrix; entries are shared, never copied."""

    __slots__ = ("_rows", "_cols", "_e")

    def __init__(self, rows: Iterable[Iterable[Entry]]):
        data = [tuple(r) for r in rows]
        if not data or not data[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("rows have unequal lengths")
        self._rows = len(data)
        self._cols = width
        self._e = tuple(x for r in data for x in r)

    @classmethod
    def from_fn(cls, rows: int, cols: int, fn: Callable[[int, int], Entry]) -> "ExactMatrix":
        """Build from a 1-indexed entry function fn(i, j)."""
        return cls([[fn(i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_fn(n, n, lambda i, j: 1 if i == j else 0)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    def __getitem__(self, ij: tuple[int, int]) -> Entry:
        """0-indexed access: m[i, j]."""
        i, j = ij
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f"entry ({i}, {j}) outside {self._rows}x{self._cols}")
        return self._e[i * self._cols + j]

    def row(self, i: int) -> tuple[Entry, ...]:
        return self._e[i * self._cols:(i + 1) * self._cols]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self._rows, self._cols) == (other._rows, other._cols) and self._e == other._e

    def __hash__(self):
        return hash((self._rows, self._cols, self._e))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self._cols != other._rows:
            raise ValueError(
                f"dimension mismatch: {self._rows}x{self._cols} @ {other._rows}x{other._cols}")
        out = []
        for i in range(self._rows):
            left = self.row(i)
            row = []
            for j in range(other._cols):
                acc = left[0] * other[0, j]
                for k in range(1, self._cols):
                    e = left[k]
                    if e:
                        acc = acc + e * other[k, j]
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self[i, j] for i in range(self._rows)] for j in range(self._cols)])

    def determinant(self) -> Entry:
        """Division-free determinant, valid over any commutative ring.

        Expansion along the last row of each leading-rows submatrix, memoized
        over column subsets: O(2^n) ring operations instead of n! and no
        divisions, so TrigPoly entries work as well as numbers.
        """
        if self._rows != self._cols:
            raise ValueError("determinant needs a square matrix")
        n = self._rows
        flat = self._e
        memo: dict[int, Entry] = {}

        def minor(mask: int) -> Entry:
            got = memo.get(mask)
            if got is not None:
                return got
            k = mask.bit_count()
            base = (k - 1) * n
            acc: Entry = 0
            pos = 0
            m = mask
            while m:
                c = (m & -m).bit_length() - 1
                entry = flat[base + c]
                if entry:
                    term = entry if k == 1 else entry * minor(mask ^ (1 << c))
                    acc = acc - term if (k - 1 + pos) % 2 else acc + term
                pos += 1
                m &= m - 1
            memo[mask] = acc
            return acc

        return minor((1 << n) - 1)

    def rank(self) -> int:
        """Rank by fraction-free (Bareiss) elimination with exact division.

        Pivot choice: first nonzero entry in row order.  Entries must embed in
        the rationals; TrigPoly matrices have no rank here.
        """
        for v in self._e:
            if not isinstance(v, (int, Fraction)):
                raise TypeError("rank needs integer or rational entries")
        m = [list(self.row(i)) for i in range(self._rows)]
        prev: Entry = 1
        r = 0
        for col in range(self._cols):
            piv = next((i for i in range(r, self._rows) if m[i][col]), None)
            if piv is None:
                continue
            if piv != r:
                m[r], m[piv] = m[piv], m[r]
            for i in range(r + 1, self._rows):
                for j in range(col + 1, self._cols):
                    num = m[r][col] * m[i][j] - m[i][col] * m[r][j]
                    if isinstance(num, int) and isinstance(prev, int):
                        quot, rem = divmod(num, prev)
                        m[i][j] = quot if not rem else Fraction(num, prev)
                    else:
                        m[i][j] = num / prev
                m[i][col] = 0
            prev = m[r][col]
            r += 1
            if r == self._rows:
                break
        return r

    def interleave_split(self) -> tuple["ExactMatrix", "ExactMatrix"]:
        """Split a checkerboard matrix of even order 2m into its odd/odd and
        even/even m x m sub-blocks (parities of the 1-indexed positions).

        Every entry whose row+column index sum is odd must be zero; the first
        violation is reported with its 1-indexed position.  For such matrices
        det(whole) = det(odd block) * det(even block).
        """
        if self._rows != self._cols or self._rows % 2:
            raise ValueError("interleave split needs a square matrix of even order")
        for i in range(self._rows):
            for j in range(self._cols):
                if (i + j) % 2 and self[i, j]:
                    raise ValueError(
                        f"checkerboard violation: nonzero entry at row {i + 1}, column {j + 1}")
        m = self._rows // 2
        odd = ExactMatrix([[self[2 * i, 2 * j] for j in range(m)] for i in range(m)])
        even = ExactMatrix([[self[2 * i + 1, 2 * j + 1] for j in range(m)] for i in range(m)])
        return odd, even

    def pretty(self) -> str:
        """Aligned text rendering with exact entries."""
        cells = [[str(self[i, j]) for j in range(self._cols)] for i in range(self._rows)]
        widths = [max(len(cells[i][j]) for i in range(self._rows)) for j in range(self._cols)]
        return "\n".join(
            "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]"
            for row in cells)

    def to_json_dict(self) -> dict:
        return {
            "rows": self._rows,
            "cols": self._cols,
            "entries": [str(v) for v in self._e],
        }

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"ExactMatrix({self._rows}x{self._cols})"


def first_difference(got: ExactMatrix, want: ExactMatrix) -> str:
    """Human-readable location of the first disagreement, 'ok' if none."""
    if (got.rows, got.cols) != (want.rows, want.cols):
        return f"shape {got.rows}x{got.cols} != {want.rows}x{want.cols}"
    for i in range(got.rows):
        for j in range(got.cols):
            if got[i, j] != want[i, j]:
                return f"entry ({i + 1},{j + 1}) is {got[i, j]}, want {want[i, j]}"
    return "ok"

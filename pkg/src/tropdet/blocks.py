"""Threshold matchings and low-entry blocks.

For a threshold t, build the bipartite graph joining row i to column j
whenever A[i][j] > t.  A maximum matching there is a longest partial
transversal of entries above t; its complement, through minimum vertex
covers, is the largest all-low block: index sets R, S with every entry of
R x S at most t and |R| + |S| = 2n - matching size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import MatrixShapeError
from .matrices import IntMatrix

__all__ = [
    "BlockDecomposition",
    "max_matching_above",
    "largest_low_block",
    "arrange_block_corner",
]


def _adjacency(a: IntMatrix, t: int) -> list[list[int]]:
    adj = []
    for i in range(a.rows):
        row = a.row(i)
        adj.append([j for j in range(a.cols) if row[j] > t])
    return adj


def max_matching_above(
    a: IntMatrix, t: int
) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Maximum bipartite matching on entries strictly above t.

    Works on rectangular matrices.  Returns the matching size and the
    matched (row, column) pairs sorted by row.  Deterministic: rows are
    processed in order and columns tried in ascending order.
    """
    adj = _adjacency(a, t)
    match_of_col = [-1] * a.cols

    def try_augment(i: int, visited: list[bool]) -> bool:
        for j in adj[i]:
            if not visited[j]:
                visited[j] = True
                if match_of_col[j] < 0 or try_augment(match_of_col[j], visited):
                    match_of_col[j] = i
                    return True
        return False

    size = 0
    for i in range(a.rows):
        if try_augment(i, [False] * a.cols):
            size += 1
    pairs = sorted((i, j) for j, i in enumerate(match_of_col) if i >= 0)
    return size, tuple(pairs)


@dataclass(frozen=True)
class BlockDecomposition:
    """Largest all-low block of a square matrix at a given threshold.

    row_set x col_set holds only entries <= threshold and maximizes
    |row_set| + |col_set|.  k1, k2 are the complementary dimensions,
    and row_perm / col_perm reorder the matrix so the block lands in the
    lower-right corner.  Either index set may be empty; when no entry is
    low at all the row side is empty and the column side is everything.
    """

    row_set: tuple[int, ...]
    col_set: tuple[int, ...]
    k1: int
    k2: int
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    threshold: int

    @property
    def dimension_sum(self) -> int:
        return len(self.row_set) + len(self.col_set)


def largest_low_block(a: IntMatrix, t: int) -> BlockDecomposition:
    """Index sets R, S maximizing |R| + |S| with all of R x S at most t.

    Found through the minimum vertex cover of the above-t graph: rows
    reachable from unmatched rows by alternating paths lie outside every
    minimum cover, so taking R = reachable rows yields the unique maximal
    block with fewest rows.  |R| + |S| always equals 2n - matching size.
    """
    if a.rows != a.cols:
        raise MatrixShapeError(f"not square: {a.rows}x{a.cols}")
    n = a.rows
    _, pairs = max_matching_above(a, t)
    match_of_row = [-1] * n
    match_of_col = [-1] * n
    for i, j in pairs:
        match_of_row[i] = j
        match_of_col[j] = i

    adj = _adjacency(a, t)
    reached_rows = [False] * n
    reached_cols = [False] * n
    queue: deque[int] = deque()
    for i in range(n):
        if match_of_row[i] < 0:
            reached_rows[i] = True
            queue.append(i)
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if not reached_cols[j]:
                reached_cols[j] = True
                i2 = match_of_col[j]
                if i2 >= 0 and not reached_rows[i2]:
                    reached_rows[i2] = True
                    queue.append(i2)

    row_set = tuple(i for i in range(n) if reached_rows[i])
    col_set = tuple(j for j in range(n) if not reached_cols[j])
    row_perm = tuple(
        [i for i in range(n) if not reached_rows[i]] + list(row_set)
    )
    col_perm = tuple(
        [j for j in range(n) if reached_cols[j]] + list(col_set)
    )
    return BlockDecomposition(
        row_set=row_set,
        col_set=col_set,
        k1=n - len(row_set),
        k2=n - len(col_set),
        row_perm=row_perm,
        col_perm=col_perm,
        threshold=t,
    )


def arrange_block_corner(
    a: IntMatrix, t: int
) -> tuple[IntMatrix, BlockDecomposition]:
    """Permute rows and columns so the largest low block sits lower-right.

    Returns the permuted matrix together with the decomposition that
    produced it.  Row and column permutations leave all transversal values
    unchanged.
    """
    block = largest_low_block(a, t)
    permuted = a.submatrix(block.row_perm, block.col_perm)
    return permuted, block

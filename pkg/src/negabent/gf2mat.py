"""Dense linear algebra over GF(2) on integer-packed matrices.

A matrix is a list (or tuple) of ints, one per row; bit j of a row is the
entry in column j.  Vectors are single ints packed the same way.  All sizes
here are tiny (n <= 24), so plain Python ints beat any array machinery.
"""

from __future__ import annotations


def identity(n: int) -> list[int]:
    return [1 << i for i in range(n)]


def matvec(rows: list[int], x: int) -> int:
    """y_i = <row_i, x> over GF(2)."""
    y = 0
    for i, r in enumerate(rows):
        y |= ((r & x).bit_count() & 1) << i
    return y


def transpose(rows: list[int], ncols: int) -> list[int]:
    out = [0] * ncols
    for i, r in enumerate(rows):
        for j in range(ncols):
            out[j] |= ((r >> j) & 1) << i
    return out


def matmul(a: list[int], b: list[int], ncols_b: int) -> list[int]:
    """Rows of a times matrix b (rows over ncols_b columns)."""
    bt = transpose(b, ncols_b)
    return [matvec(bt, r) for r in a]


def rank(rows: list[int]) -> int:
    rs = list(rows)
    rk = 0
    for col in range(max((r.bit_length() for r in rs), default=0)):
        piv = None
        for i in range(rk, len(rs)):
            if (rs[i] >> col) & 1:
                piv = i
                break
        if piv is None:
            continue
        rs[rk], rs[piv] = rs[piv], rs[rk]
        for i in range(len(rs)):
            if i != rk and (rs[i] >> col) & 1:
                rs[i] ^= rs[rk]
        rk += 1
    return rk


def inverse(rows: list[int], n: int) -> list[int]:
    """Invert an n x n matrix; raises ValueError if singular."""
    aug = [rows[i] | (1 << (n + i)) for i in range(n)]
    rk = 0
    for col in range(n):
        piv = None
        for i in range(rk, n):
            if (aug[i] >> col) & 1:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular over GF(2)")
        aug[rk], aug[piv] = aug[piv], aug[rk]
        for i in range(n):
            if i != rk and (aug[i] >> col) & 1:
                aug[i] ^= aug[rk]
        rk += 1
    mask = (1 << n) - 1
    return [(r >> n) & mask for r in aug]


def solve(rows: list[int], b: int, n: int) -> int:
    """Solve A x = b for an invertible n x n matrix A."""
    return matvec(inverse(rows, n), b)


def is_invertible(rows: list[int], n: int) -> bool:
    return len(rows) == n and rank(list(rows)) == n

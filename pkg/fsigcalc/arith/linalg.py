# fsigcalc/arith/linalg.py
"""Exact linear algebra: fraction-free (Bareiss) elimination over Z and row reduction mod p."""
from fractions import Fraction
from math import lcm
from typing import List, Sequence

import numpy as np

from fsigcalc.config import PRIME_LIMIT
from fsigcalc.exceptions import DomainError


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix; every intermediate stays integral."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in a):
        raise DomainError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix (hence over Q) by fraction-free elimination."""
    if not matrix:
        return 0
    a = [list(map(int, row)) for row in matrix]
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(cols):
        if rank == rows:
            break
        pivot_row = next((i for i in range(rank, rows) if a[i][col] != 0), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        pivot = a[rank][col]
        for i in range(rank + 1, rows):
            factor = a[i][col]
            row_i = a[i]
            row_r = a[rank]
            for j in range(col + 1, cols):
                row_i[j] = (row_i[j] * pivot - factor * row_r[j]) // prev
            row_i[col] = 0
        prev = pivot
        rank += 1
    return rank


def rank_mod_p(matrix, p: int) -> int:
    """Rank over F_p of an integer matrix, p < 2^31 so int64 products cannot overflow."""
    if not (2 <= p < PRIME_LIMIT):
        raise DomainError(f"modulus out of range: {p}")
    if len(matrix) == 0:
        return 0
    a = np.array([[int(x) % p for x in row] for row in matrix], dtype=np.int64)
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.nonzero(a[rank:, col])[0]
        if nonzero.size == 0:
            continue
        pivot_row = rank + int(nonzero[0])
        if pivot_row != rank:
            a[[rank, pivot_row]] = a[[pivot_row, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, col].copy()
        if below.any():
            a[rank + 1:] = (a[rank + 1:] - np.outer(below, a[rank])) % p
        rank += 1
    return rank


def integer_rows(rows: List[List]) -> List[List[int]]:
    """Scale rational rows by a common denominator so the rank can be taken over Z."""
    den = 1
    for row in rows:
        for value in row:
            den = lcm(den, Fraction(value).denominator)
    return [[int(Fraction(value) * den) for value in row] for row in rows]

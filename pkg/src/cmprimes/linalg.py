"""Exact integer and rational linear algebra.

Dense matrices of Python ints: Smith normal form with both transforms,
fraction-free (Bareiss) determinants, maximal-minor gcds, and rational pivot
selection.  Matrices here are small (a few hundred rows at most) but their
entries can be huge, so everything stays in exact arbitrary precision.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InternalCheckError, ParseError


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ParseError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.entries)))

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ParseError("dimension mismatch in matrix product")
        bt = list(zip(*other.entries))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.entries]
        )

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def with_column(self, col: Sequence[int]) -> "IntMatrix":
        if self.rows and len(col) != self.rows:
            raise ParseError("column length mismatch")
        return IntMatrix([list(row) + [c] for row, c in zip(self.entries, col)])

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]})"


@dataclass(frozen=True)
class SNFResult:
    """P * A * Q = D with unimodular P, Q and divisor chain on the diagonal."""

    P: IntMatrix
    D: IntMatrix
    Q: IntMatrix
    divisors: tuple[int, ...]

    def verify(self, A: IntMatrix) -> bool:
        return (self.P * A * self.Q).entries == self.D.entries


def smith_normal_form(A: IntMatrix) -> SNFResult:
    """Diagonalize A over the integers, tracking both unimodular transforms.

    Pivot choice is the nonzero entry of least absolute value (ties broken by
    smallest row, then column), which keeps coefficient growth moderate and
    makes the computation deterministic.
    """
    m, n = A.rows, A.cols
    if m == 0 or n == 0:
        raise ParseError("empty matrix has no Smith normal form")
    d = [list(row) for row in A.entries]
    P = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    Q = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i: int, k: int, q: int) -> None:
        # row i -= q * row k
        di, dk = d[i], d[k]
        pi, pk = P[i], P[k]
        for j in range(n):
            di[j] -= q * dk[j]
        for j in range(m):
            pi[j] -= q * pk[j]

    def col_op(j: int, k: int, q: int) -> None:
        # col j -= q * col k
        for row in d:
            row[j] -= q * row[k]
        for row in Q:
            row[j] -= q * row[k]

    def swap_rows(i: int, k: int) -> None:
        d[i], d[k] = d[k], d[i]
        P[i], P[k] = P[k], P[i]

    def swap_cols(j: int, k: int) -> None:
        for row in d:
            row[j], row[k] = row[k], row[j]
        for row in Q:
            row[j], row[k] = row[k], row[j]

    def find_pivot(t: int) -> tuple[int, int] | None:
        best = None
        best_val = None
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                v = row[j]
                if v and (best_val is None or abs(v) < best_val):
                    best, best_val = (i, j), abs(v)
                    if best_val == 1:
                        return best
        return best

    t = 0
    while t < min(m, n):
        piv = find_pivot(t)
        if piv is None:
            break
        if piv != (t, t):
            if piv[0] != t:
                swap_rows(t, piv[0])
            if piv[1] != t:
                swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    row_op(i, t, q)
                    if d[i][t]:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    col_op(j, t, q)
                    if d[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility of the remaining block
            offender = None
            pivot = d[t][t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(n):
                d[t][j] += d[offender][j]
            for j in range(m):
                P[t][j] += P[offender][j]
        if d[t][t] < 0:
            for j in range(n):
                d[t][j] = -d[t][j]
            for j in range(m):
                P[t][j] = -P[t][j]
        t += 1

    divisors = tuple(d[i][i] for i in range(min(m, n)))
    result = SNFResult(P=IntMatrix(P), D=IntMatrix(d), Q=IntMatrix(Q), divisors=divisors)
    if not result.verify(A):
        raise InternalCheckError("Smith normal form transforms failed to reproduce D")
    return result


def snf_divisors(A: IntMatrix) -> tuple[int, ...]:
    """Elementary divisors only, skipping the transform bookkeeping.

    The working matrix stays small under minimal-pivot elimination; it is the
    accumulated transforms that swell, so this is the cheap way to get at
    minor gcds.
    """
    m, n = A.rows, A.cols
    if m == 0 or n == 0:
        raise ParseError("empty matrix has no Smith normal form")
    d = [list(row) for row in A.entries]

    def find_pivot(t: int) -> tuple[int, int] | None:
        best = None
        best_val = None
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                v = row[j]
                if v and (best_val is None or abs(v) < best_val):
                    best, best_val = (i, j), abs(v)
                    if best_val == 1:
                        return best
        return best

    t = 0
    while t < min(m, n):
        piv = find_pivot(t)
        if piv is None:
            break
        if piv[0] != t:
            d[t], d[piv[0]] = d[piv[0]], d[t]
        if piv[1] != t:
            for row in d:
                row[t], row[piv[1]] = row[piv[1]], row[t]
        while True:
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    di, dt = d[i], d[t]
                    for j in range(t, n):
                        di[j] -= q * dt[j]
                    if d[i][t]:
                        d[t], d[i] = d[i], d[t]
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    for row in d:
                        row[j] -= q * row[t]
                    if d[t][j]:
                        for row in d:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            pivot = d[t][t]
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            dt, do = d[t], d[offender]
            for j in range(n):
                dt[j] += do[j]
        if d[t][t] < 0:
            for j in range(n):
                d[t][j] = -d[t][j]
        t += 1
    return tuple(abs(d[i][i]) for i in range(min(m, n)))


def divisor_product(divisors: Sequence[int]) -> int:
    prod = 1
    for v in divisors:
        prod *= v
    return prod


def left_kernel_basis(A: IntMatrix) -> IntMatrix:
    """Basis of the saturated lattice {x : x A = 0}, as rows.

    Computed from a unimodular row echelon reduction: the transform rows
    matched with zero rows of the echelon form are a basis of the full left
    kernel lattice.  Euclidean pivoting keeps entries tame compared to a
    two-sided Smith reduction.
    """
    m, n = A.rows, A.cols
    d = [list(row) for row in A.entries]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    rank = 0
    for col in range(n):
        while True:
            live = [i for i in range(rank, m) if d[i][col]]
            if not live:
                break
            piv = min(live, key=lambda i: (abs(d[i][col]), i))
            if piv != rank:
                d[rank], d[piv] = d[piv], d[rank]
                U[rank], U[piv] = U[piv], U[rank]
            done = True
            for i in range(rank + 1, m):
                if d[i][col]:
                    q = d[i][col] // d[rank][col]
                    di, dr = d[i], d[rank]
                    for j in range(col, n):
                        di[j] -= q * dr[j]
                    ui, ur = U[i], U[rank]
                    for j in range(m):
                        ui[j] -= q * ur[j]
                    if d[i][col]:
                        done = False
            if done:
                rank += 1
                break
    return IntMatrix(U[rank:])


def fraction_free_determinant(A: IntMatrix) -> int:
    """Exact determinant by Bareiss elimination (all divisions exact)."""
    n = A.rows
    if n != A.cols:
        raise ParseError("determinant of a non-square matrix")
    if n == 0:
        return 1
    d = [list(row) for row in A.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if d[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if d[i][k]), None)
            if swap is None:
                return 0
            d[k], d[swap] = d[swap], d[k]
            sign = -sign
        pivot = d[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                d[i][j] = (d[i][j] * pivot - d[i][k] * d[k][j]) // prev
            d[i][k] = 0
        prev = pivot
    return sign * d[n - 1][n - 1]


def minor_gcd(A: IntMatrix, method: str = "auto") -> int:
    """gcd of all maximal minors of a tall matrix (rows >= cols).

    ``minors`` enumerates determinants directly; ``snf`` multiplies the
    elementary divisors.  ``auto`` keeps the enumeration for narrow matrices
    and switches to the Smith form beyond three columns.
    """
    if A.rows < A.cols:
        raise ParseError("minor_gcd expects rows >= cols")
    if method not in ("auto", "minors", "snf"):
        raise ParseError(f"unknown method {method!r}")
    if method == "auto":
        method = "minors" if A.cols <= 3 else "snf"
    if method == "minors":
        g = 0
        for rows in itertools.combinations(range(A.rows), A.cols):
            sub = IntMatrix([A.entries[i] for i in rows])
            g = math.gcd(g, fraction_free_determinant(sub))
            if g == 1:
                return 1
        return g
    divisors = snf_divisors(A)
    if any(v == 0 for v in divisors):
        return 0
    return divisor_product(divisors)


def rational_column_select(
    rows: Sequence[Sequence[int | Fraction]], target_rank: int | None = None
) -> tuple[int, ...]:
    """Leftmost pivot columns of a rational matrix via exact elimination.

    Raises when the rank falls short of ``target_rank``.
    """
    work = [[Fraction(v) for v in row] for row in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    pivots: list[int] = []
    used_rows: list[int] = []
    pivot_of_row: dict[int, int] = {}
    for col in range(n):
        r = next((i for i in range(m) if i not in used_rows and work[i][col]), None)
        if r is None:
            continue
        pivots.append(col)
        used_rows.append(r)
        pivot_of_row[r] = col
        inv = 1 / work[r][col]
        work[r] = [v * inv for v in work[r]]
        for i in range(m):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        if target_rank is not None and len(pivots) == target_rank:
            return tuple(pivots)
    if target_rank is not None and len(pivots) < target_rank:
        raise InternalCheckError(
            f"rank {len(pivots)} below requested target {target_rank}"
        )
    return tuple(pivots)

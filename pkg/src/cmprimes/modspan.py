"""Coordinates of module generators in the orbit-sum basis (shared internals).

The degree-d piece of the module generated by secondaries over the ambient
invariants is spanned by products (ambient orbit sum) * theta_j.  Ambient
orbit sums and monomials in the ambient generators are both integral bases of
the ambient invariants, so spanning with orbit sums changes nothing while
keeping products cheap: an orbit sum is just a list of monomials with unit
coefficients.

Coordinates are read off at orbit representatives only (an invariant is
determined there), either exactly into Python ints or modulo a prime into
numpy vectors for the elimination-heavy paths.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import InternalCheckError
from .frame import AmbientFrame
from .poly import Monomial, OrbitTable, SparsePoly, monomial_orbit, orbit_table

# fixed word-size primes for the certified fast rank path
FAST_PRIMES = (2147483647, 2147483629)


def sigma_orbit_members(frame: AmbientFrame, rep: Monomial) -> list[Monomial]:
    """Distinct monomials in the ambient orbit of a representative."""
    _, signs = monomial_orbit(frame.sigma, rep)
    if signs is None:
        raise InternalCheckError("ambient orbit sum of a basis monomial cancelled")
    if any(s != 1 for s in signs.values()):
        raise InternalCheckError("ambient orbit of an even monomial acquired signs")
    return list(signs)


def generator_index(
    frame: AmbientFrame, theta_degrees: Sequence[int], d: int
) -> list[tuple[int, Monomial]]:
    """(theta index, ambient orbit representative) pairs spanning degree d."""
    out: list[tuple[int, Monomial]] = []
    for j, aj in enumerate(theta_degrees):
        if aj > d:
            continue
        for rep in frame.sigma_orbit_reps(d - aj):
            out.append((j, rep))
    return out


class DegreeContext:
    """Cached per-degree data: orbit table plus packed encodings for numpy work."""

    def __init__(self, frame: AmbientFrame, d: int):
        self.frame = frame
        self.d = d
        self.table: OrbitTable = orbit_table(frame.subgroup, d)
        n = frame.n
        base = d + 1
        self.base = base
        self._packable = base**n < 2**62
        if self._packable:
            weights = [base ** (n - 1 - i) for i in range(n)]
            self.weights = np.array(weights, dtype=np.int64)
            enc = np.array(
                [self._encode(rep) for rep in self.table.reps], dtype=np.int64
            )
            order = np.argsort(enc, kind="stable")
            self.rep_enc_sorted = enc[order]
            self.rep_row = order.astype(np.int64)
        self.rep_index = {rep: i for i, rep in enumerate(self.table.reps)}

    def _encode(self, m: Monomial) -> int:
        v = 0
        for e in m:
            v = v * self.base + e
        return v

    @property
    def nrows(self) -> int:
        return len(self.table.reps)

    # -- column builders ------------------------------------------------

    def column_modp(
        self, orbit: list[Monomial], theta: SparsePoly, p: int
    ) -> np.ndarray:
        """Coordinates of (sum of orbit) * theta at the reps, modulo p."""
        if not self._packable:
            exact = self.column_exact(orbit, theta)
            return np.array([v % p for v in exact], dtype=np.int64)
        orb_enc = np.array([self._encode(m) for m in orbit], dtype=np.int64)
        t_items = list(theta.terms.items())
        t_enc = np.array([self._encode(m) for m, _ in t_items], dtype=np.int64)
        t_co = np.array([c % p for _, c in t_items], dtype=np.int64)
        prod = (orb_enc[:, None] + t_enc[None, :]).ravel()
        co = np.tile(t_co, len(orb_enc))
        col = np.zeros(self.nrows, dtype=np.int64)
        if len(self.rep_enc_sorted):
            pos = np.searchsorted(self.rep_enc_sorted, prod)
            np.clip(pos, 0, len(self.rep_enc_sorted) - 1, out=pos)
            valid = self.rep_enc_sorted[pos] == prod
            np.add.at(col, self.rep_row[pos[valid]], co[valid])
            col %= p
        return col

    def column_exact(self, orbit: list[Monomial], theta: SparsePoly) -> list[int]:
        col = [0] * self.nrows
        rep_index = self.rep_index
        for m1 in orbit:
            for m2, c2 in theta.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                row = rep_index.get(m)
                if row is not None:
                    col[row] += c2
        return col

    def unit_column(self, idx: int) -> list[int]:
        col = [0] * self.nrows
        col[idx] = 1
        return col


def pivot_columns_modp(matrix: np.ndarray, p: int) -> list[int]:
    """Pivot columns of the reduced row echelon form over F_p, left to right.

    The matrix is consumed.  All arithmetic stays below 2^62, so int64 is
    exact for any prime below 2^31.
    """
    A = matrix % p
    nrows, ncols = A.shape
    used = np.zeros(nrows, dtype=bool)
    pivots: list[int] = []
    for c in range(ncols):
        col = A[:, c]
        rows = np.nonzero((col != 0) & ~used)[0]
        if not len(rows):
            continue
        r = int(rows[0])
        inv = pow(int(col[r]), -1, p)
        A[r] = (A[r] * inv) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if len(others):
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        used[r] = True
        pivots.append(c)
        if len(pivots) == nrows:
            break
    return pivots


def rank_and_unit_pivots(
    ctx: DegreeContext,
    thetas: Sequence[SparsePoly],
    theta_degrees: Sequence[int],
    p: int,
) -> tuple[int, int, list[int]]:
    """(span columns, span rank, unit pivot indices) over F_p at ctx's degree.

    Appends the full identity after the span columns, so the unit pivots list
    the orbit-sum classes outside the span image, in scan order.
    """
    gens = generator_index(ctx.frame, theta_degrees, ctx.d)
    nrows = ctx.nrows
    cols: list[np.ndarray] = []
    for j, rep in gens:
        orbit = sigma_orbit_members(ctx.frame, rep)
        cols.append(ctx.column_modp(orbit, thetas[j], p))
    span = np.array(cols, dtype=np.int64).T if cols else np.zeros((nrows, 0), dtype=np.int64)
    matrix = np.hstack([span, np.eye(nrows, dtype=np.int64)])
    pivots = pivot_columns_modp(matrix, p)
    ncols = span.shape[1]
    span_rank = sum(1 for c in pivots if c < ncols)
    unit_pivots = [c - ncols for c in pivots if c >= ncols]
    return ncols, span_rank, unit_pivots


def exact_span_columns(
    ctx: DegreeContext, thetas: Sequence[SparsePoly], theta_degrees: Sequence[int]
) -> list[list[int]]:
    """Exact integer coordinate columns of the degree-d module generators."""
    out: list[list[int]] = []
    for j, rep in generator_index(ctx.frame, theta_degrees, ctx.d):
        orbit = sigma_orbit_members(ctx.frame, rep)
        out.append(ctx.column_exact(orbit, thetas[j]))
    return out

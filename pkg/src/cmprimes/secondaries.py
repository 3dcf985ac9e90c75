"""Greedy construction of a universal set of secondary invariants.

Secondaries are chosen degree by degree.  At each step the candidates are the
orbit sums whose classes are independent modulo the module generated so far;
the Smith normal form of the evaluated matrix then picks the integer
combination that minimizes the gcd of maximal minors, which is exactly what
makes the finished set universal.  All choices are deterministic, so repeated
runs produce identical secondaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegeneratePointError, InternalCheckError, ParseError
from .frame import (
    AmbientFrame,
    coset_evaluation_points,
    evaluation_points,
    point_is_regular,
)
from .hilbert import HilbertData, secondary_degrees
from .linalg import (
    IntMatrix,
    divisor_product,
    fraction_free_determinant,
    left_kernel_basis,
    rational_column_select,
    smith_normal_form,
    snf_divisors,
)
from .modspan import (
    FAST_PRIMES,
    DegreeContext,
    exact_span_columns,
    rank_and_unit_pivots,
)
from .poly import Monomial, SparsePoly, orbit_table

Combo = tuple[tuple[int, Monomial], ...]


@dataclass(frozen=True)
class SecondarySet:
    """Homogeneous invariants theta_1..theta_k with their evaluation data.

    ``evaluated_matrix`` holds theta_j(w_i) for w_i = gamma_i^{-1} . z; the set
    is complete when k equals the coset index, and then the matrix is square
    with nonzero determinant.
    """

    thetas: tuple[SparsePoly, ...]
    degrees: tuple[int, ...]
    combos: tuple[Combo, ...]
    evaluation_point: tuple[int, ...]
    evaluated_matrix: IntMatrix

    @property
    def count(self) -> int:
        return len(self.thetas)

    def is_complete(self, frame: AmbientFrame) -> bool:
        return self.count == frame.index


def initial_secondaries(frame: AmbientFrame, point: Sequence[int]) -> SecondarySet:
    """The forced starting set: the constant 1."""
    n = frame.n
    one = SparsePoly.one(n)
    ell = frame.index
    return SecondarySet(
        thetas=(one,),
        degrees=(0,),
        combos=(((1, (0,) * n),),),
        evaluation_point=tuple(point),
        evaluated_matrix=IntMatrix([[1]] * ell),
    )


def module_span_at_degree(
    frame: AmbientFrame, partial: SecondarySet, d: int
) -> tuple[list[list[int]], list[Monomial]]:
    """Exact coordinate columns of the partial module at degree d.

    Returns (columns, orbit representatives); each column is the coordinate
    vector of one product (ambient orbit sum) * theta_j in the orbit-sum basis.
    """
    ctx = DegreeContext(frame, d)
    cols = exact_span_columns(ctx, partial.thetas, partial.degrees)
    return cols, list(ctx.table.reps)


def candidate_complement(
    frame: AmbientFrame,
    partial: SecondarySet,
    d: int,
    expected: int | None = None,
) -> list[Monomial]:
    """Orbit-sum representatives spanning the quotient at degree d.

    Fast path: eliminate modulo a fixed word-size prime.  Because the partial
    module is free, the span columns are independent over Q; seeing them all
    as pivots modulo p certifies the rank, which makes every unit pivot a
    genuinely independent class.  If a prime loses rank, the next one is
    tried, and exact rational elimination is the last resort.
    """
    ctx = DegreeContext(frame, d)
    for p in FAST_PRIMES:
        ncols, span_rank, unit_pivots = rank_and_unit_pivots(
            ctx, partial.thetas, partial.degrees, p
        )
        if span_rank == ncols:
            break
    else:
        cols = exact_span_columns(ctx, partial.thetas, partial.degrees)
        nrows = ctx.nrows
        rows = [
            [col[i] for col in cols] + [1 if j == i else 0 for j in range(nrows)]
            for i in range(nrows)
        ]
        ncols = len(cols)
        pivots = rational_column_select(rows)
        if sum(1 for c in pivots if c < ncols) != ncols:
            raise InternalCheckError("partial module span lost rank over Q")
        unit_pivots = [c - ncols for c in pivots if c >= ncols]
    if expected is not None and len(unit_pivots) != expected:
        raise InternalCheckError(
            f"complement at degree {d} has size {len(unit_pivots)}, expected {expected}"
        )
    return [ctx.table.reps[i] for i in unit_pivots]


@dataclass(frozen=True)
class ExtensionStep:
    """What one greedy step produced, kept around for the minimality checks."""

    theta: SparsePoly
    combo: Combo
    column: tuple[int, ...]
    gcd_factor: int
    candidate_columns: tuple[tuple[int, ...], ...]


def extend_secondaries(
    frame: AmbientFrame, partial: SecondarySet, candidates: Sequence[Monomial]
) -> tuple[SecondarySet, ExtensionStep]:
    """Add the next secondary as the minor-gcd-optimal combination of the candidates.

    A basis of the left kernel lattice of the evaluated matrix projects each
    candidate column onto "what it adds": augmenting by a column with kernel
    image v multiplies the minor gcd by gcd(v).  The optimum over the integer
    span of the candidates is the gcd of the whole projected block, attained
    either by a single candidate (preferred: keeps coefficients small) or by
    the first transform column of the block's Smith form.
    """
    if not candidates:
        raise InternalCheckError("no candidates supplied")
    G = frame.subgroup
    d = sum(candidates[0])
    table = orbit_table(G, d)
    psis = [table.orbit_sum(table.rep_index_of(rep)) for rep in candidates]

    A = partial.evaluated_matrix
    ell, k = A.rows, A.cols
    w = coset_evaluation_points(frame, partial.evaluation_point)
    psi_cols = [[psi.evaluate(wi) for wi in w] for psi in psis]

    kernel = left_kernel_basis(A)  # (ell - k) x ell
    if kernel.rows > ell - k:
        raise DegeneratePointError("evaluated matrix lost column rank")
    if kernel.rows != ell - k:
        raise InternalCheckError("left kernel has unexpected rank")
    V_rows = [
        [sum(kernel.entries[i][t] * psi_cols[s][t] for t in range(ell)) for s in range(len(psis))]
        for i in range(ell - k)
    ]
    if all(v == 0 for row in V_rows for v in row):
        raise DegeneratePointError("all candidates evaluate into the span of the partial matrix")
    target = 0
    for row in V_rows:
        for v in row:
            target = math.gcd(target, v)

    q: tuple[int, ...] | None = None
    for s in range(len(psis)):
        col_gcd = 0
        for row in V_rows:
            col_gcd = math.gcd(col_gcd, row[s])
        if col_gcd == target:
            q = tuple(1 if t == s else 0 for t in range(len(psis)))
            break
    if q is None:
        snf0 = smith_normal_form(IntMatrix(V_rows))
        if snf0.divisors[0] != target:
            raise InternalCheckError("Smith form of projected block lost the entry gcd")
        q = snf0.Q.column(0)
    gcd_factor = target

    theta = SparsePoly.zero(frame.n)
    combo = []
    for qs, psi, rep in zip(q, psis, candidates):
        if qs:
            theta = theta + psi.scale(qs)
            combo.append((qs, rep))
    column = tuple(
        sum(qs * psi_cols[s][i] for s, qs in enumerate(q)) for i in range(ell)
    )
    new_matrix = A.with_column(column)

    # the projection identity guarantees mu(new) = mu(old) * gcd_factor;
    # recomputing minor gcds is affordable only at small index, so assert there
    if ell <= 8:
        mu_before = divisor_product(snf_divisors(A))
        mu_after = divisor_product(snf_divisors(new_matrix))
        if mu_after != mu_before * gcd_factor:
            raise InternalCheckError(
                f"minor gcd {mu_after} != {mu_before} * {gcd_factor} after extension"
            )

    extended = SecondarySet(
        thetas=partial.thetas + (theta,),
        degrees=partial.degrees + (d,),
        combos=partial.combos + (tuple(combo),),
        evaluation_point=partial.evaluation_point,
        evaluated_matrix=new_matrix,
    )
    step = ExtensionStep(
        theta=theta,
        combo=tuple(combo),
        column=column,
        gcd_factor=gcd_factor,
        candidate_columns=tuple(tuple(c) for c in psi_cols),
    )
    return extended, step


def universal_secondaries(
    frame: AmbientFrame,
    hilbert: HilbertData | None = None,
    point: Sequence[int] | None = None,
) -> SecondarySet:
    """Run the greedy construction to a complete universal set.

    The evaluation point defaults to (1..n); if a point ever collapses the
    candidate system the construction restarts with the next deterministic
    choice.
    """
    hd = hilbert if hilbert is not None else secondary_degrees(frame)
    points: list[tuple[int, ...]] = []
    if point is not None:
        z = tuple(point)
        if len(z) != frame.n:
            raise ParseError(f"evaluation point has length {len(z)}, expected {frame.n}")
        if not point_is_regular(frame, z):
            raise ParseError(f"evaluation point {z} lies on a reflecting hyperplane")
        points.append(z)
    for z in evaluation_points(frame):
        if z not in points:
            points.append(z)
    last_error: DegeneratePointError | None = None
    for z in points:
        try:
            return _construct(frame, hd, z)
        except DegeneratePointError as exc:
            last_error = exc
    raise InternalCheckError(f"all evaluation points degenerate: {last_error}")


def _construct(frame: AmbientFrame, hd: HilbertData, z: tuple[int, ...]) -> SecondarySet:
    partial = initial_secondaries(frame, z)
    for d in sorted(hd.tau):
        if d == 0:
            continue
        # cross-check the quotient dimension against the Hilbert data before
        # touching this degree; the extension itself searches every orbit sum
        # of the degree, since restricting to a complement basis can miss the
        # optimal integer combination
        candidate_complement(frame, partial, d, expected=hd.tau[d])
        pool = orbit_table(frame.subgroup, d).reps
        for _ in range(hd.tau[d]):
            partial, _ = extend_secondaries(frame, partial, pool)
    if partial.degrees != hd.degrees:
        raise InternalCheckError(
            f"constructed degrees {partial.degrees} differ from expected {hd.degrees}"
        )
    if fraction_free_determinant(partial.evaluated_matrix) == 0:
        raise DegeneratePointError("completed evaluated matrix is singular")
    return partial

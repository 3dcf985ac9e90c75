"""Independent mod-p oracle: does the reduced module decomposition survive?

A prime is good for a secondary set when the reductions of the secondaries
still generate the invariants freely over the reduced ambient invariants.
That is tested degree by degree as surjectivity of the multiplication map
onto the span of reduced orbit sums; the sweep stops at the generator degree
bound, beyond which surjectivity propagates.  None of this consults the
deficiency, which is the point: it confirms good/bad verdicts independently.

Caveat for signed groups: at p = 2 the sign characters collapse, the reduced
representation is no longer faithful, and the deficiency criterion and this
direct module check genuinely measure different things.  The oracle is
therefore only meaningful for unsigned groups, and for odd primes otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InternalCheckError, ParseError
from .frame import AmbientFrame
from .linalg import IntMatrix, smith_normal_form
from .modspan import (
    DegreeContext,
    exact_span_columns,
    generator_index,
    pivot_columns_modp,
    rank_and_unit_pivots,
    sigma_orbit_members,
)
from .poly import Monomial, SparsePoly, render_orbit_sum
from .secondaries import SecondarySet


@dataclass(frozen=True)
class ModPVerdict:
    prime: int
    is_good: bool
    witness: tuple[int, Monomial] | None  # (degree, orbit representative)

    def witness_label(self) -> str | None:
        if self.witness is None:
            return None
        return render_orbit_sum(self.witness[1])


def _thetas_and_degrees(
    thetas: Sequence[SparsePoly] | SecondarySet,
) -> tuple[list[SparsePoly], list[int]]:
    if isinstance(thetas, SecondarySet):
        return list(thetas.thetas), list(thetas.degrees)
    polys = list(thetas)
    for f in polys:
        if not f.is_homogeneous():
            raise ParseError("secondaries must be homogeneous")
    return polys, [max(f.degree(), 0) for f in polys]


def sweep_bound(frame: AmbientFrame, theta_degrees: Sequence[int]) -> int:
    """Degrees that must be checked before surjectivity propagates.

    For subgroups of a symmetric or Young ambient the invariants are module
    generated in degrees up to C(n, 2); the top secondary degree is folded in
    as a safety margin for the signed ambient.
    """
    return max(math.comb(frame.n, 2), max(theta_degrees, default=0))


def rho_surjective(
    frame: AmbientFrame,
    thetas: Sequence[SparsePoly] | SecondarySet,
    p: int,
    d: int,
) -> tuple[bool, Monomial | None]:
    """Is multiplication by the reduced secondaries onto in degree d?

    Builds the degree-d products (reduced ambient orbit sum) * theta_j over
    F_p and compares their rank with the orbit-sum count.  When the map is
    not onto, the first orbit-sum class outside the image (in scan order)
    is returned as the witness.
    """
    if p < 2 or p >= 2**31:
        raise ParseError(f"prime {p} outside the supported range")
    polys, degrees = _thetas_and_degrees(thetas)
    ctx = DegreeContext(frame, d)
    _, _, unit_pivots = rank_and_unit_pivots(ctx, polys, degrees, p)
    if not unit_pivots:
        return True, None
    return False, ctx.table.reps[unit_pivots[0]]


def is_good_prime(
    frame: AmbientFrame,
    thetas: Sequence[SparsePoly] | SecondarySet,
    p: int,
) -> ModPVerdict:
    """Sweep all degrees up to the generation bound; good iff every one passes."""
    polys, degrees = _thetas_and_degrees(thetas)
    for d in range(sweep_bound(frame, degrees) + 1):
        ok, witness = rho_surjective(frame, polys if not isinstance(thetas, SecondarySet) else thetas, p, d)
        if not ok:
            return ModPVerdict(prime=p, is_good=False, witness=(d, witness))
    return ModPVerdict(prime=p, is_good=True, witness=None)


def module_membership(
    f: SparsePoly,
    frame: AmbientFrame,
    thetas: Sequence[SparsePoly] | SecondarySet,
    p: int | None = None,
) -> bool:
    """Is f in the module spanned by the secondaries, over F_p or over Z?

    Over the integers (p None) membership means solvable with integer
    coefficients; see membership_denominator for the finer invariant.
    """
    if p is None:
        return membership_denominator(f, frame, thetas) == 1
    polys, degrees = _thetas_and_degrees(thetas)
    if f.is_zero():
        return True
    if not f.is_homogeneous():
        raise ParseError("membership test expects a homogeneous invariant")
    d = f.degree()
    ctx = DegreeContext(frame, d)
    cols = []
    for j, rep in generator_index(frame, degrees, d):
        orbit = sigma_orbit_members(frame, rep)
        cols.append(ctx.column_modp(orbit, polys[j], p))
    target = np.array([v % p for v in ctx.table.coordinates(f)], dtype=np.int64)
    span = np.array(cols, dtype=np.int64).T if cols else np.zeros((ctx.nrows, 0), dtype=np.int64)
    rank_without = len(pivot_columns_modp(span.copy(), p))
    with_target = np.hstack([span, target[:, None]])
    rank_with = len(pivot_columns_modp(with_target, p))
    return rank_with == rank_without


def membership_denominator(
    f: SparsePoly,
    frame: AmbientFrame,
    thetas: Sequence[SparsePoly] | SecondarySet,
) -> int:
    """Least c >= 1 with c*f in the integral module spanned by the secondaries.

    Computed from the Smith form of the integral generator matrix: c*f is
    solvable over Z exactly when each transformed coordinate is divisible by
    the matching elementary divisor.
    """
    if f.is_zero():
        return 1
    if not f.is_homogeneous():
        raise ParseError("membership test expects a homogeneous invariant")
    polys, degrees = _thetas_and_degrees(thetas)
    d = f.degree()
    ctx = DegreeContext(frame, d)
    cols = exact_span_columns(ctx, polys, degrees)
    target = ctx.table.coordinates(f)
    if not cols:
        raise InternalCheckError("empty module at the degree of a nonzero invariant")
    matrix = IntMatrix([[col[i] for col in cols] for i in range(ctx.nrows)])
    snf = smith_normal_form(matrix)
    transformed = [
        sum(snf.P.entries[i][t] * target[t] for t in range(ctx.nrows))
        for i in range(ctx.nrows)
    ]
    rank = sum(1 for v in snf.divisors if v)
    for i in range(rank, ctx.nrows):
        if transformed[i]:
            raise InternalCheckError("invariant lies outside the module even over Q")
    c = 1
    for i in range(rank):
        need = snf.divisors[i] // math.gcd(snf.divisors[i], transformed[i])
        c = c * need // math.gcd(c, need)
    return c

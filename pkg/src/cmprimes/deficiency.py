"""The deficiency of a secondary set and the bad primes it determines.

The matrix of coset translates of the secondaries has determinant equal (up
to sign) to the deficiency times the group discriminant.  The fast route
evaluates everything at an integer point and divides; the symbolic route
expands the determinant as a polynomial, takes its content, and checks that
the primitive part really is the discriminant.  Both are exposed so each can
serve as the other's oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InternalCheckError, ParseError, UnsupportedSizeError
from .frame import (
    AmbientFrame,
    coset_evaluation_points,
    evaluate_discriminant,
    evaluation_points,
    group_discriminant,
    point_is_regular,
)
from .linalg import IntMatrix, fraction_free_determinant
from .poly import SparsePoly, apply_group_element, poly_determinant
from .secondaries import SecondarySet

SYMBOLIC_INDEX_GUARD = 8


@dataclass(frozen=True)
class DeficiencyReport:
    deficiency: int
    bad_primes: tuple[int, ...]
    det_sign: int
    method: str  # "evaluated" | "symbolic"
    identity_checked: bool


def _theta_list(thetas: Sequence[SparsePoly] | SecondarySet) -> list[SparsePoly]:
    if isinstance(thetas, SecondarySet):
        return list(thetas.thetas)
    return list(thetas)


def coset_matrix(
    frame: AmbientFrame,
    thetas: Sequence[SparsePoly] | SecondarySet,
    symbolic: bool = False,
    point: Sequence[int] | None = None,
):
    """Matrix with entry (i, j) the i-th coset translate of theta_j.

    Symbolic: a list of polynomial rows, first row the secondaries themselves.
    Evaluated: the integer matrix theta_j(w_i) at w_i = gamma_i^{-1} . z.
    """
    polys = _theta_list(thetas)
    if len(polys) != frame.index:
        raise ParseError(
            f"{len(polys)} secondaries supplied, expected the coset index {frame.index}"
        )
    if symbolic:
        return [
            [apply_group_element(rep, theta) for theta in polys]
            for rep in frame.coset_reps
        ]
    z = _resolve_point(frame, thetas, point)
    w = coset_evaluation_points(frame, z)
    return IntMatrix([[theta.evaluate(wi) for theta in polys] for wi in w])


def _resolve_point(
    frame: AmbientFrame,
    thetas: Sequence[SparsePoly] | SecondarySet,
    point: Sequence[int] | None,
) -> tuple[int, ...]:
    if point is not None:
        z = tuple(point)
    elif isinstance(thetas, SecondarySet):
        z = thetas.evaluation_point
    else:
        z = evaluation_points(frame)[0]
    if not point_is_regular(frame, z):
        raise ParseError(f"evaluation point {z} lies on a reflecting hyperplane")
    return z


def bad_primes(
    deficiency: int, group_order: int, require_divides_order: bool = True
) -> tuple[int, ...]:
    """Sorted prime divisors of the deficiency.

    Universal secondaries can only be deficient at primes dividing the group
    order, so that containment is asserted by default; pass False when
    factoring the deficiency of a hand-picked (non-universal) set.
    """
    if deficiency < 1:
        raise ParseError("deficiency must be a positive integer")
    primes = []
    rest = deficiency
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            primes.append(p)
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1:
        primes.append(rest)
    if require_divides_order:
        for q in primes:
            if group_order % q:
                raise InternalCheckError(
                    f"bad prime {q} does not divide the group order {group_order}"
                )
    return tuple(primes)


def deficiency_evaluated(
    frame: AmbientFrame,
    thetas: Sequence[SparsePoly] | SecondarySet,
    point: Sequence[int] | None = None,
    universal: bool = False,
) -> DeficiencyReport:
    """Deficiency via one determinant over the integers.

    det M at a regular point divided by the discriminant value there is the
    deficiency up to sign; the division must be exact, and a failure means
    the frame data or the secondaries are wrong.
    """
    z = _resolve_point(frame, thetas, point)
    if isinstance(thetas, SecondarySet) and point is None and z == thetas.evaluation_point:
        matrix = thetas.evaluated_matrix
    else:
        matrix = coset_matrix(frame, thetas, symbolic=False, point=z)
    det = fraction_free_determinant(matrix)
    if det == 0:
        raise InternalCheckError("evaluated secondary matrix is singular")
    delta = evaluate_discriminant(frame, z)
    if delta == 0:
        raise InternalCheckError("discriminant vanished at a supposedly regular point")
    q, r = divmod(det, delta)
    if r:
        raise InternalCheckError(
            f"determinant {det} not divisible by discriminant value {delta}"
        )
    mho = abs(q)
    sign = 1 if q > 0 else -1
    return DeficiencyReport(
        deficiency=mho,
        bad_primes=bad_primes(mho, frame.subgroup.order, require_divides_order=universal),
        det_sign=sign,
        method="evaluated",
        identity_checked=False,
    )


def deficiency_symbolic(
    frame: AmbientFrame,
    thetas: Sequence[SparsePoly] | SecondarySet,
    universal: bool = False,
) -> DeficiencyReport:
    """Deficiency as the content of the fully expanded determinant.

    Serves as the independent oracle for the evaluated route: the primitive
    part of the determinant must equal the discriminant up to sign, and that
    identity is asserted here, not assumed.
    """
    if frame.index > SYMBOLIC_INDEX_GUARD:
        raise UnsupportedSizeError(
            f"symbolic determinant guarded to index <= {SYMBOLIC_INDEX_GUARD}, got {frame.index}"
        )
    rows = coset_matrix(frame, thetas, symbolic=True)
    det = symbolic_determinant(rows)
    if det.is_zero():
        raise InternalCheckError("symbolic secondary matrix is singular")
    mho = det.content()
    primitive = det.exact_divide_scalar(mho)
    delta = group_discriminant(frame)
    if primitive == delta:
        sign = 1
    elif primitive == -delta:
        sign = -1
    else:
        raise InternalCheckError(
            "primitive part of det M is not the group discriminant up to sign"
        )
    return DeficiencyReport(
        deficiency=mho,
        bad_primes=bad_primes(mho, frame.subgroup.order, require_divides_order=universal),
        det_sign=sign,
        method="symbolic",
        identity_checked=True,
    )


def symbolic_determinant(rows: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """Determinant of the polynomial matrix, columns processed by ascending degree."""
    size = len(rows)
    degrees = [max(rows[i][j].degree() for i in range(size)) for j in range(size)]
    order = sorted(range(size), key=lambda j: degrees[j])
    reordered = [[rows[i][j] for j in order] for i in range(size)]
    det = poly_determinant(reordered)
    inversions = sum(
        1
        for a in range(size)
        for b in range(a + 1, size)
        if order[a] > order[b]
    )
    return -det if inversions % 2 else det


def deficiency_cross_checked(
    frame: AmbientFrame,
    thetas: Sequence[SparsePoly] | SecondarySet,
    universal: bool = False,
) -> DeficiencyReport:
    """Evaluated deficiency, with the symbolic oracle run whenever it fits."""
    report = deficiency_evaluated(frame, thetas, universal=universal)
    if frame.index <= SYMBOLIC_INDEX_GUARD:
        oracle = deficiency_symbolic(frame, thetas, universal=universal)
        if oracle.deficiency != report.deficiency:
            raise InternalCheckError(
                f"evaluated deficiency {report.deficiency} != symbolic {oracle.deficiency}"
            )
        return DeficiencyReport(
            deficiency=report.deficiency,
            bad_primes=report.bad_primes,
            det_sign=oracle.det_sign,
            method="evaluated+symbolic",
            identity_checked=True,
        )
    return report

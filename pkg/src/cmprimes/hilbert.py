"""Graded dimension counts and secondary-invariant degrees.

For unsigned groups the degree-d invariant dimension is the monomial orbit
count, obtained from the cycle-type generating functions (Burnside); for
signed groups it is the number of monomial orbits whose signed orbit sum
survives, counted directly.  Multiplying the resulting series by the
product of (1 - t^d) over the ambient generator degrees yields the finite
numerator whose exponents are the secondary degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalCheckError
from .frame import AmbientFrame, delta_degree
from .perm import Group
from .poly import orbit_table


def goebel_bound(n: int) -> int:
    """Degree bound for algebra generators of permutation invariants."""
    return max(n, math.comb(n, 2))


def secondary_degree_bound(n: int) -> int:
    """Secondary invariants can always be chosen of degree at most C(n, 2)."""
    return math.comb(n, 2)


@dataclass(frozen=True)
class HilbertData:
    tau: dict[int, int]
    degrees: tuple[int, ...]
    goebel_bound: int

    @property
    def count(self) -> int:
        return len(self.degrees)


def _series_inverse_one_minus(power: int, out: list[int]) -> None:
    # multiply the truncated series ``out`` by 1/(1 - t^power) in place
    for d in range(power, len(out)):
        out[d] += out[d - power]


def fixed_monomial_series(cycle_lengths: list[int], limit: int) -> list[int]:
    """Coefficients up to ``limit`` of prod over cycles of 1/(1 - t^len)."""
    out = [0] * (limit + 1)
    out[0] = 1
    for length in cycle_lengths:
        _series_inverse_one_minus(length, out)
    return out


def invariant_series(G: Group, limit: int) -> list[int]:
    """dim of the degree-d invariants for d = 0..limit."""
    if not G.is_signed:
        total = [0] * (limit + 1)
        for g in G.elements:
            per_elem = fixed_monomial_series([len(c) for c in g.cycles()], limit)
            for d in range(limit + 1):
                total[d] += per_elem[d]
        order = G.order
        out = []
        for d, v in enumerate(total):
            q, r = divmod(v, order)
            if r:
                raise InternalCheckError(f"Burnside count not divisible by |G| at degree {d}")
            out.append(q)
        return out
    return [len(orbit_table(G, d)) for d in range(limit + 1)]


def invariant_dimension(G: Group, d: int) -> int:
    """Dimension of the degree-d invariants of G."""
    if d < 0:
        raise InternalCheckError("negative degree")
    if not G.is_signed:
        return invariant_series(G, d)[d]
    return len(orbit_table(G, d))


def invariant_dimension_by_orbits(G: Group, d: int) -> int:
    """Independent oracle: enumerate the monomial orbits directly."""
    return len(orbit_table(G, d))


def secondary_degrees(frame: AmbientFrame) -> HilbertData:
    """Secondary degrees of the subgroup over the ambient invariants.

    The series is truncated at deg Delta(G), the largest degree any secondary
    can reach; the numerator coefficients must be nonnegative, sum to the
    coset index, and their degree-weighted sum must reproduce deg Delta(G).
    """
    G = frame.subgroup
    ell = frame.index
    limit = delta_degree(frame)
    series = invariant_series(G, limit)
    numerator = list(series)
    for d in frame.primary_degrees:
        # multiply by (1 - t^d)
        for k in range(limit, d - 1, -1):
            numerator[k] -= numerator[k - d]
    tau: dict[int, int] = {}
    running = 0
    for d, c in enumerate(numerator):
        if c < 0:
            raise InternalCheckError(f"negative secondary count {c} at degree {d}")
        if c:
            tau[d] = c
            running += c
    if running != ell:
        raise InternalCheckError(
            f"secondary counts sum to {running}, expected the coset index {ell}"
        )
    if tau.get(0, 0) != 1:
        raise InternalCheckError("expected exactly one secondary of degree zero")
    degrees = tuple(d for d in sorted(tau) for _ in range(tau[d]))
    if sum(degrees) != limit:
        raise InternalCheckError(
            f"secondary degrees sum to {sum(degrees)}, expected deg Delta = {limit}"
        )
    return HilbertData(tau=tau, degrees=degrees, goebel_bound=goebel_bound(G.n))

"""Ambient reflection group data for a subgroup: cosets, hyperplanes, discriminant.

A frame fixes the ambient group (symmetric, a Young product, or the full
signed-permutation group), enumerates left cosets with the identity first,
and attaches to every hyperplane class the exponent read off from the cycle
structure of its reflection on the cosets.  The product of the hyperplane
forms raised to those exponents is the group discriminant; its degree obeys
an exact reflection-count identity that is asserted, not assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalCheckError, ParseError, UnsupportedSizeError
from .linalg import IntMatrix
from .perm import (
    Group,
    Permutation,
    count_reflections,
    cycle_type_of_map,
    group_from_generators,
    hyperoctahedral_group,
    symmetric_group,
    young_group,
)
from .poly import Monomial, SparsePoly, elementary_symmetric, monomials_of_degree

AMBIENT_KINDS = ("sym", "young", "hyperoctahedral")

# A linear form is the tuple of its integer coefficients, first nonzero positive.
LinearForm = tuple[int, ...]


@dataclass(frozen=True)
class HyperplaneOrbit:
    label: str
    forms: tuple[LinearForm, ...]
    reflections: tuple[Permutation, ...]  # generator of the pointwise stabilizer, per form
    cyclic_order: int
    exponent: int


@dataclass(frozen=True)
class AmbientFrame:
    kind: str
    sigma: Group
    subgroup: Group
    coset_reps: tuple[Permutation, ...]
    hyperplane_orbits: tuple[HyperplaneOrbit, ...]
    primary_degrees: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    coset_index: dict = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.subgroup.n

    @property
    def index(self) -> int:
        return len(self.coset_reps)

    def coset_of(self, g: Permutation) -> int:
        return self.coset_index[g]

    def coset_action_map(self, g: Permutation) -> tuple[int, ...]:
        """Index map i -> j for g moving coset gamma_i G to gamma_j G."""
        return tuple(self.coset_index[g * rep] for rep in self.coset_reps)

    def primary_polynomials(self) -> tuple[SparsePoly, ...]:
        """Algebra generators of the ambient invariants, degrees matching primary_degrees."""
        n = self.n
        polys: list[SparsePoly] = []
        if self.kind == "hyperoctahedral":
            for k in range(1, n + 1):
                polys.append(elementary_symmetric(n, k, squared=True))
        else:
            for block in self.blocks:
                for k in range(1, len(block) + 1):
                    terms = {}
                    for combo in itertools.combinations(block, k):
                        e = [0] * n
                        for i in combo:
                            e[i] = 1
                        terms[tuple(e)] = 1
                    polys.append(SparsePoly(n, terms))
        polys.sort(key=lambda p: p.degree())
        return tuple(polys)

    def sigma_orbit_reps(self, degree: int) -> list[Monomial]:
        """Monomial-orbit representatives for the ambient group, one per basis
        element of its degree-``degree`` invariants, descending graded-lex."""
        n = self.n
        reps: list[Monomial] = []
        if self.kind == "hyperoctahedral":
            if degree % 2:
                return []
            for m in monomials_of_degree(n, degree // 2):
                if tuple(sorted(m, reverse=True)) == m:
                    reps.append(tuple(2 * e for e in m))
        else:
            for m in monomials_of_degree(n, degree):
                ok = True
                for block in self.blocks:
                    vals = [m[i] for i in block]
                    if sorted(vals, reverse=True) != vals:
                        ok = False
                        break
                if ok:
                    reps.append(m)
        reps.sort(key=lambda m: (sum(m), m), reverse=True)
        return reps


def _orbit_partition_of_points(G: Group) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    for start in range(G.n):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for i in frontier:
                for g in G.generators:
                    j = g.images[i]
                    if j not in orbit:
                        orbit.add(j)
                        nxt.append(j)
            frontier = nxt
        seen |= orbit
        blocks.append(tuple(sorted(orbit)))
    return blocks


def _transposition(n: int, i: int, j: int) -> Permutation:
    images = list(range(n))
    images[i], images[j] = j, i
    return Permutation(images)


def _signed_transposition(n: int, i: int, j: int) -> Permutation:
    images = list(range(n))
    images[i], images[j] = j, i
    signs = [1] * n
    signs[i] = signs[j] = -1
    return Permutation(images, signs)


def _diagonal_flip(n: int, i: int) -> Permutation:
    signs = [1] * n
    signs[i] = -1
    return Permutation(range(n), signs)


def build_frame(G: Group, ambient: str | None = None) -> AmbientFrame:
    """Fix the ambient group and compute cosets, hyperplane data, and degrees.

    ``ambient`` is one of "sym", "young", "hyperoctahedral"; None selects
    "sym" for unsigned groups and "hyperoctahedral" for signed ones.  The
    Young ambient is the stabilizer of the orbit partition of G on points.
    """
    if ambient is None:
        ambient = "hyperoctahedral" if G.is_signed else "sym"
    if ambient not in AMBIENT_KINDS:
        raise ParseError(f"unknown ambient kind {ambient!r}")
    n = G.n
    if ambient in ("sym", "young") and G.is_signed:
        raise ParseError(f"signed group is not contained in the {ambient} ambient")

    orbits_forms: list[tuple[str, list[LinearForm], list[Permutation]]] = []
    if ambient == "sym":
        sigma = symmetric_group(n)
        blocks: tuple[tuple[int, ...], ...] = (tuple(range(n)),)
        primary_degrees = tuple(range(1, n + 1))
        forms = []
        refls = []
        for i in range(n):
            for j in range(i + 1, n):
                form = [0] * n
                form[i], form[j] = 1, -1
                forms.append(tuple(form))
                refls.append(_transposition(n, i, j))
        if forms:
            orbits_forms.append(("transposition-type", forms, refls))
    elif ambient == "young":
        blocks = tuple(_orbit_partition_of_points(G))
        sigma = young_group(n, blocks)
        primary_degrees = tuple(sorted(d for b in blocks for d in range(1, len(b) + 1)))
        multi = len([b for b in blocks if len(b) >= 2]) > 1
        for block in blocks:
            if len(block) < 2:
                continue
            forms = []
            refls = []
            for i, j in itertools.combinations(block, 2):
                form = [0] * n
                form[i], form[j] = 1, -1
                forms.append(tuple(form))
                refls.append(_transposition(n, i, j))
            label = "transposition-type"
            if multi:
                label += "{" + ",".join(str(i + 1) for i in block) + "}"
            orbits_forms.append((label, forms, refls))
    else:
        sigma = hyperoctahedral_group(n)
        blocks = (tuple(range(n)),)
        primary_degrees = tuple(2 * k for k in range(1, n + 1))
        t_forms, t_refls = [], []
        s_forms, s_refls = [], []
        for i in range(n):
            for j in range(i + 1, n):
                form = [0] * n
                form[i], form[j] = 1, -1
                t_forms.append(tuple(form))
                t_refls.append(_transposition(n, i, j))
                form = [0] * n
                form[i], form[j] = 1, 1
                s_forms.append(tuple(form))
                s_refls.append(_signed_transposition(n, i, j))
        d_forms, d_refls = [], []
        for i in range(n):
            form = [0] * n
            form[i] = 1
            d_forms.append(tuple(form))
            d_refls.append(_diagonal_flip(n, i))
        if t_forms:
            orbits_forms.append(("transposition-type", t_forms, t_refls))
            orbits_forms.append(("signed-type", s_forms, s_refls))
        orbits_forms.append(("diagonal-type", d_forms, d_refls))

    sigma_set = set(sigma.elements)
    for g in G.elements:
        if g not in sigma_set:
            raise ParseError(f"group element {g} is not contained in the {ambient} ambient")
    if sigma.order % G.order:
        raise InternalCheckError("subgroup order does not divide ambient order")

    # cosets: sweeping the canonically ordered ambient assigns each coset its
    # lexicographically least element as representative; the identity leads.
    coset_index: dict[Permutation, int] = {}
    coset_reps: list[Permutation] = []
    for s in sigma.elements:
        if s in coset_index:
            continue
        idx = len(coset_reps)
        coset_reps.append(s)
        for h in G.elements:
            coset_index[s * h] = idx
    ell = len(coset_reps)
    if ell * G.order != sigma.order:
        raise InternalCheckError("coset enumeration failed to cover the ambient group")

    frame = AmbientFrame(
        kind=ambient,
        sigma=sigma,
        subgroup=G,
        coset_reps=tuple(coset_reps),
        hyperplane_orbits=(),
        primary_degrees=primary_degrees,
        blocks=blocks,
        coset_index=coset_index,
    )

    hyperplane_orbits = []
    for label, forms, refls in orbits_forms:
        e = _orbit_exponent(frame, refls[0])
        hyperplane_orbits.append(
            HyperplaneOrbit(
                label=label,
                forms=tuple(forms),
                reflections=tuple(refls),
                cyclic_order=2,
                exponent=e,
            )
        )
    object.__setattr__(frame, "hyperplane_orbits", tuple(hyperplane_orbits))
    delta_degree_check(frame)
    return frame


def _orbit_exponent(frame: AmbientFrame, reflection: Permutation) -> int:
    """e(G, orbit) from the cycle type of the reflection on the cosets.

    Only order-2 pointwise stabilizers occur for the supported ambients, so
    the general (c/2) * sum of b_i (i-1) collapses to the number of 2-cycles.
    """
    if (reflection * reflection).sort_key() != frame.subgroup.identity.sort_key():
        raise InternalCheckError("hyperplane stabilizer generator is not an involution")
    btype = cycle_type_of_map(frame.coset_action_map(reflection))
    if set(btype) - {1, 2}:
        raise InternalCheckError("involution produced cycles of length > 2 on cosets")
    c = 2
    total = sum((c // 2) * b * (i - 1) for i, b in btype.items() if i >= 2)
    return total


def discriminant_exponents(frame: AmbientFrame) -> dict[str, int]:
    """Exponent e(G, orbit) per hyperplane-orbit label."""
    return {orb.label: orb.exponent for orb in frame.hyperplane_orbits}


def discriminant_factors(frame: AmbientFrame) -> tuple[tuple[LinearForm, int], ...]:
    """The group discriminant in factored form: (linear form, exponent) pairs."""
    out = []
    for orb in frame.hyperplane_orbits:
        if orb.exponent:
            out.extend((form, orb.exponent) for form in orb.forms)
    return tuple(out)


def delta_degree(frame: AmbientFrame) -> int:
    return sum(orb.exponent * len(orb.forms) for orb in frame.hyperplane_orbits)


def evaluate_discriminant(frame: AmbientFrame, z: Sequence[int]) -> int:
    """Value of the group discriminant at an integer point, never expanded."""
    total = 1
    for form, e in discriminant_factors(frame):
        v = sum(c * zi for c, zi in zip(form, z))
        total *= v**e
    return total


_EXPANSION_TERM_GUARD = 2_000_000


def group_discriminant(frame: AmbientFrame) -> SparsePoly:
    """The group discriminant expanded as a polynomial.

    Guarded: a discriminant of degree D in n variables can have on the order
    of C(D+n-1, n-1) terms, so expansion is refused beyond a fixed budget
    (evaluation never needs it; see evaluate_discriminant).
    """
    import math

    n = frame.n
    deg = delta_degree(frame)
    bound = math.comb(deg + n - 1, n - 1)
    if bound > _EXPANSION_TERM_GUARD:
        raise UnsupportedSizeError(
            f"discriminant of degree {deg} in {n} variables is too large to expand"
        )
    result = SparsePoly.one(n)
    for form, e in discriminant_factors(frame):
        lin = SparsePoly(n, {tuple(1 if k == i else 0 for k in range(n)): c
                             for i, c in enumerate(form) if c})
        for _ in range(e):
            result = result * lin
    return result


def delta_degree_check(frame: AmbientFrame) -> tuple[int, bool]:
    """deg Delta from the exponents, checked against the reflection-count identity."""
    deg = delta_degree(frame)
    ell = frame.index
    r_sigma = count_reflections(frame.sigma)
    r_sub = count_reflections(frame.subgroup)
    expected2 = ell * (r_sigma - r_sub)
    if 2 * deg != expected2:
        raise InternalCheckError(
            f"discriminant degree {deg} violates (l/2)(|R(Sigma)|-|R(G)|) = {expected2}/2"
        )
    return deg, True


def reflections_via_coset_formula(frame: AmbientFrame) -> int:
    """|R(G)| recovered from coset fixed points of every ambient reflection.

    Cross-check of the counting identity: each reflection contributes
    |C_P| * (orbits on cosets) / l - 1.
    """
    ell = frame.index
    total2 = 0  # accumulate 2*l*value to stay in integers
    for orb in frame.hyperplane_orbits:
        for refl in orb.reflections:
            btype = cycle_type_of_map(frame.coset_action_map(refl))
            orbits = sum(btype.values())
            total2 += orb.cyclic_order * orbits - ell
    if total2 % ell:
        raise InternalCheckError("reflection-count formula did not return an integer")
    return total2 // ell


def evaluation_points(frame: AmbientFrame) -> tuple[tuple[int, ...], ...]:
    """Deterministic points off every reflecting hyperplane: (1..n), powers of
    two, and the first n primes."""
    n = frame.n
    pts = [tuple(range(1, n + 1)), tuple(2**i for i in range(n))]
    primes: list[int] = []
    c = 2
    while len(primes) < n:
        if all(c % p for p in primes):
            primes.append(c)
        c += 1
    pts.append(tuple(primes))
    return tuple(pts)


def point_is_regular(frame: AmbientFrame, z: Sequence[int]) -> bool:
    """True when z avoids every reflecting hyperplane of the ambient group."""
    for orb in frame.hyperplane_orbits:
        for form in orb.forms:
            if sum(c * zi for c, zi in zip(form, z)) == 0:
                return False
    return True


def coset_evaluation_points(frame: AmbientFrame, z: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """The points w_i = gamma_i^{-1} . z indexing the evaluated matrix rows."""
    return tuple(rep.inverse().apply_to_point(z) for rep in frame.coset_reps)

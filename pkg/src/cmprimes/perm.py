"""Permutations, signed permutations, and small (signed) permutation groups.

Elements act on the basis vectors e_0..e_{n-1} of an n-dimensional lattice:
an element g with ``images`` and ``signs`` sends e_i to signs[i] * e_{images[i]}.
Groups are enumerated in full; ranks are capped so that the ambient groups
(symmetric on up to 8 points, hyperoctahedral on up to 6) stay listable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ParseError, UnsupportedSizeError

MAX_RANK_UNSIGNED = 8
MAX_RANK_SIGNED = 6


@dataclass(frozen=True)
class Permutation:
    """A signed or unsigned permutation; unsigned means all signs are +1."""

    images: tuple[int, ...]
    signs: tuple[int, ...]

    def __init__(self, images: Sequence[int], signs: Sequence[int] | None = None):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ParseError(f"images {images} are not a bijection on 0..{n - 1}")
        if signs is None:
            signs = (1,) * n
        else:
            signs = tuple(signs)
            if len(signs) != n or any(s not in (1, -1) for s in signs):
                raise ParseError(f"signs {signs} must be +-1 of length {n}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "signs", signs)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(n))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]], one_based: bool = True) -> "Permutation":
        """Build an unsigned permutation from disjoint cycles."""
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            pts = [p - 1 for p in cycle] if one_based else list(cycle)
            if any(p < 0 or p >= n for p in pts):
                raise ParseError(f"cycle {tuple(cycle)} out of range for n={n}")
            if len(set(pts)) != len(pts) or seen & set(pts):
                raise ParseError(f"cycle {tuple(cycle)} repeats an index")
            seen |= set(pts)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return Permutation(images)

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def is_signed(self) -> bool:
        return any(s < 0 for s in self.signs)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        # + sorts before -, so the identity is the global minimum.
        return (tuple(0 if s > 0 else 1 for s in self.signs), self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition; (self * other) acts as self after other."""
        if self.n != other.n:
            raise ParseError("rank mismatch in composition")
        images = tuple(self.images[other.images[i]] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.images[i]] for i in range(self.n))
        return Permutation(images, signs)

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        signs = [1] * self.n
        for i, j in enumerate(self.images):
            images[j] = i
            signs[j] = self.signs[i]
        return Permutation(images, signs)

    def apply_to_point(self, z: Sequence[int]) -> tuple[int, ...]:
        """Image of the point z under the linear action."""
        w = [0] * self.n
        for i in range(self.n):
            w[self.images[i]] = self.signs[i] * z[i]
        return tuple(w)

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles of the underlying unsigned permutation, each starting at its minimum."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_sign_products(self) -> list[tuple[int, int]]:
        """(length, product of signs) for each cycle of the unsigned part."""
        out = []
        for cyc in self.cycles():
            s = 1
            for i in cyc:
                s *= self.signs[i]
            out.append((len(cyc), s))
        return out

    def fixed_space_dimension(self) -> int:
        """Dimension of the fixed subspace: one per cycle whose signs multiply to +1."""
        return sum(1 for _, s in self.cycle_sign_products() if s == 1)

    def is_reflection(self) -> bool:
        return self.n - self.fixed_space_dimension() == 1

    def parity(self) -> int:
        """Sign of the underlying unsigned permutation."""
        p = 1
        for cyc in self.cycles():
            if len(cyc) % 2 == 0:
                p = -p
        return p

    def __str__(self) -> str:
        if not self.is_signed:
            cycs = [c for c in self.cycles() if len(c) > 1]
            if not cycs:
                return "()"
            return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cycs)
        return "[" + ",".join(str(self.signs[i] * (self.images[i] + 1)) for i in range(self.n)) + "]"


def _check_rank(n: int, signed: bool) -> None:
    limit = MAX_RANK_SIGNED if signed else MAX_RANK_UNSIGNED
    if n < 1 or n > limit:
        kind = "signed" if signed else "unsigned"
        raise UnsupportedSizeError(
            f"rank n={n} outside supported range 1..{limit} for {kind} groups"
        )


@dataclass(frozen=True)
class Group:
    """A fully enumerated group of (signed) permutations of fixed rank."""

    n: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...] = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_signed(self) -> bool:
        return any(g.is_signed for g in self.generators)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.n)

    def __contains__(self, g: Permutation) -> bool:
        return g in set(self.elements)

    def __hash__(self) -> int:
        return hash((self.n, self.generators))


def group_from_generators(n: int, generators: Iterable[Permutation]) -> Group:
    """Close the generators under composition; elements come out in canonical order."""
    gens = tuple(generators)
    for g in gens:
        if g.n != n:
            raise ParseError(f"generator {g} has rank {g.n}, expected {n}")
    _check_rank(n, any(g.is_signed for g in gens))
    ident = Permutation.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                p = g * h
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    elements = tuple(sorted(seen, key=Permutation.sort_key))
    return Group(n=n, generators=gens, elements=elements)


def symmetric_group(n: int) -> Group:
    _check_rank(n, signed=False)
    elements = tuple(Permutation(p) for p in itertools.permutations(range(n)))
    gens: tuple[Permutation, ...]
    if n == 1:
        gens = ()
    else:
        gens = (Permutation.from_cycles(n, [(1, 2)]), Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return Group(n=n, generators=gens, elements=tuple(sorted(elements, key=Permutation.sort_key)))


def young_group(n: int, blocks: Sequence[Sequence[int]]) -> Group:
    """Direct product of symmetric groups on the given disjoint 0-based blocks."""
    _check_rank(n, signed=False)
    flat = sorted(i for b in blocks for i in b)
    if flat != list(range(n)):
        raise ParseError("blocks must partition 0..n-1")
    elements = []
    per_block = [list(itertools.permutations(b)) for b in blocks]
    for combo in itertools.product(*per_block):
        images = list(range(n))
        for block, perm in zip(blocks, combo):
            for src, dst in zip(block, perm):
                images[src] = dst
        elements.append(Permutation(images))
    gens = []
    for block in blocks:
        b = sorted(block)
        if len(b) >= 2:
            gens.append(Permutation.from_cycles(n, [(b[0] + 1, b[1] + 1)]))
        if len(b) >= 3:
            gens.append(Permutation.from_cycles(n, [tuple(i + 1 for i in b)]))
    return Group(n=n, generators=tuple(gens), elements=tuple(sorted(elements, key=Permutation.sort_key)))


def hyperoctahedral_group(n: int) -> Group:
    """All signed permutations of rank n."""
    _check_rank(n, signed=True)
    elements = []
    for p in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            elements.append(Permutation(p, signs))
    flip = Permutation(range(n), [-1] + [1] * (n - 1))
    gens = [flip]
    if n >= 2:
        gens.append(Permutation.from_cycles(n, [(1, 2)]))
    if n >= 3:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return Group(n=n, generators=tuple(gens), elements=tuple(sorted(elements, key=Permutation.sort_key)))


def count_reflections(group: Group) -> int:
    """Number of elements whose fixed subspace has codimension one.

    For unsigned groups these are exactly the transpositions; for signed groups
    they are the transposition, signed-transposition, and single-sign-flip types.
    """
    return sum(1 for g in group.elements if g.is_reflection())


def cycle_type_of_map(images: Sequence[int]) -> dict[int, int]:
    """Cycle-length histogram {i: number of cycles of size i} of a self-map.

    Raises if the map is not a bijection (action not closed).
    """
    n = len(images)
    if sorted(images) != list(range(n)):
        raise ParseError("map is not a bijection; action not closed")
    counts: dict[int, int] = {}
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        counts[length] = counts.get(length, 0) + 1
    return counts

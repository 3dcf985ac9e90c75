"""Sparse multivariate polynomials over the integers, plus orbit sums.

Monomials are exponent tuples; coefficients are Python ints, so everything is
exact at any size.  The graded-lex order (total degree first, then lex on the
exponent tuple) fixes every deterministic choice downstream: orbit
representatives, term rendering, candidate scan order.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InternalCheckError, ParseError
from .perm import Group, Permutation

Monomial = tuple[int, ...]


def grlex_key(m: Monomial) -> tuple[int, Monomial]:
    return (sum(m), m)


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All exponent tuples of length n with entries summing to d."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


class SparsePoly:
    """Immutable-by-convention polynomial: {exponent tuple: nonzero int}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | None = None):
        self.n = n
        self.terms: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n: int) -> "SparsePoly":
        return SparsePoly(n)

    @staticmethod
    def constant(n: int, c: int) -> "SparsePoly":
        return SparsePoly(n, {(0,) * n: c})

    @staticmethod
    def one(n: int) -> "SparsePoly":
        return SparsePoly.constant(n, 1)

    @staticmethod
    def from_monomial(m: Monomial, c: int = 1) -> "SparsePoly":
        return SparsePoly(len(m), {tuple(m): c})

    @staticmethod
    def variable(n: int, i: int) -> "SparsePoly":
        e = [0] * n
        e[i] = 1
        return SparsePoly(n, {tuple(e): 1})

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)

    def iter_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if self.is_zero():
            raise InternalCheckError("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        r = SparsePoly(self.n)
        r.terms = out
        return r

    def __neg__(self) -> "SparsePoly":
        r = SparsePoly(self.n)
        r.terms = {m: -c for m, c in self.terms.items()}
        return r

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, c: int) -> "SparsePoly":
        if c == 0:
            return SparsePoly.zero(self.n)
        r = SparsePoly(self.n)
        r.terms = {m: c * v for m, v in self.terms.items()}
        return r

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        if self.is_zero() or other.is_zero():
            return SparsePoly.zero(self.n)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        fast = _packed_mul(self.n, a, b)
        if fast is not None:
            r = SparsePoly(self.n)
            r.terms = fast
            return r
        out: dict[Monomial, int] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        r = SparsePoly(self.n)
        r.terms = out
        return r

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ParseError("negative power of a polynomial")
        result = SparsePoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SparsePoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- integer structure ---------------------------------------------

    def content(self) -> int:
        """gcd of the coefficients; 0 for the zero polynomial."""
        import math

        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def primitive_part(self) -> "SparsePoly":
        g = self.content()
        if g in (0, 1):
            return self
        r = SparsePoly(self.n)
        r.terms = {m: c // g for m, c in self.terms.items()}
        return r

    def exact_divide_scalar(self, c: int) -> "SparsePoly":
        if c == 0:
            raise InternalCheckError("division by zero scalar")
        out = {}
        for m, v in self.terms.items():
            q, rem = divmod(v, c)
            if rem:
                raise InternalCheckError(f"coefficient {v} not divisible by {c}")
            out[m] = q
        r = SparsePoly(self.n)
        r.terms = out
        return r

    def evaluate(self, z: Sequence[int]) -> int:
        """Exact value at an integer point."""
        if len(z) != self.n:
            raise ParseError(f"point has length {len(z)}, expected {self.n}")
        max_exp = [0] * self.n
        for m in self.terms:
            for i, e in enumerate(m):
                if e > max_exp[i]:
                    max_exp[i] = e
        powers = [[1] * (max_exp[i] + 1) for i in range(self.n)]
        for i in range(self.n):
            for e in range(1, max_exp[i] + 1):
                powers[i][e] = powers[i][e - 1] * z[i]
        total = 0
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    v *= powers[i][e]
            total += v
        return total

    # -- rendering ------------------------------------------------------

    def render(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.iter_terms():
            mono = render_monomial(m)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePoly({self.render()})"


def render_monomial(m: Monomial) -> str:
    pieces = []
    for i, e in enumerate(m):
        if e == 1:
            pieces.append(f"x{i + 1}")
        elif e > 1:
            pieces.append(f"x{i + 1}^{e}")
    return "*".join(pieces) if pieces else "1"


def _packed_mul(n: int, a: dict, b: dict) -> dict | None:
    """numpy-packed product for large integer polynomials; None if ineligible.

    Exponents are packed 8 bits per variable, so products stay carry-free as
    long as each variable's exponent sum is below 256.  Coefficient
    accumulation runs in int64; eligibility bounds rule out overflow.
    """
    if len(a) * len(b) < 50_000 or n > 7:
        return None
    max_a = max(abs(c) for c in a.values())
    max_b = max(abs(c) for c in b.values())
    if max_a * max_b * min(len(a), len(b)) >= 2**62:
        return None
    dega = max(max(m) for m in a)
    degb = max(max(m) for m in b)
    if dega + degb >= 256:
        return None
    import numpy as np

    def pack(terms: dict) -> tuple:
        monos = list(terms.keys())
        arr = np.array(monos, dtype=np.int64)
        weights = (256 ** np.arange(n - 1, -1, -1)).astype(np.int64)
        enc = arr @ weights
        coef = np.array([terms[m] for m in monos], dtype=np.int64)
        return enc, coef

    enc_a, co_a = pack(a)
    enc_b, co_b = pack(b)
    enc = (enc_a[:, None] + enc_b[None, :]).ravel()
    co = (co_a[:, None] * co_b[None, :]).ravel()
    uniq, inv = np.unique(enc, return_inverse=True)
    acc = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(acc, inv, co)
    out: dict[Monomial, int] = {}
    for enc_v, c in zip(uniq.tolist(), acc.tolist()):
        if not c:
            continue
        m = []
        for _ in range(n):
            m.append(enc_v % 256)
            enc_v //= 256
        out[tuple(reversed(m))] = c
    return out


# -- the group action on polynomials ------------------------------------


def act_on_monomial(g: Permutation, m: Monomial) -> tuple[Monomial, int]:
    """Image monomial and sign of g acting on x^m via x_j -> signs[j] x_{g(j)}."""
    out = [0] * len(m)
    sign = 1
    for j, e in enumerate(m):
        out[g.images[j]] = e
        if e % 2 and g.signs[j] < 0:
            sign = -sign
    return tuple(out), sign


def apply_group_element(g: Permutation, f: SparsePoly) -> SparsePoly:
    """The contragredient action (g . f)(v) = f(g^{-1} v)."""
    if g.n != f.n:
        raise ParseError("rank mismatch between element and polynomial")
    out: dict[Monomial, int] = {}
    for m, c in f.terms.items():
        im, s = act_on_monomial(g, m)
        v = out.get(im, 0) + s * c
        if v:
            out[im] = v
        else:
            out.pop(im, None)
    r = SparsePoly(f.n)
    r.terms = out
    return r


def monomial_orbit(group: Group, m: Monomial) -> tuple[Monomial, dict[Monomial, int] | None]:
    """G-orbit of a monomial with sign bookkeeping.

    Returns (representative, {monomial: sign}) where the representative is the
    graded-lex maximum and is normalized to sign +1.  If any group element
    stabilizes a monomial of the orbit while flipping its sign, the orbit sum
    collapses and the mapping is None.
    """
    m = tuple(m)
    signs = {m: 1}
    frontier = [m]
    gens = group.generators if group.generators else (group.identity,)
    while frontier:
        nxt = []
        for mono in frontier:
            base = signs[mono]
            for g in gens:
                im, s = act_on_monomial(g, mono)
                val = base * s
                if im in signs:
                    if signs[im] != val:
                        rep = max(signs, key=grlex_key)
                        return rep, None
                else:
                    signs[im] = val
                    nxt.append(im)
        frontier = nxt
    rep = max(signs, key=grlex_key)
    if signs[rep] < 0:
        signs = {k: -v for k, v in signs.items()}
    return rep, signs


def orbit_sum(group: Group, m: Monomial) -> SparsePoly:
    """Sum of the (signed) monomial orbit of m; zero when the orbit cancels."""
    rep, signs = monomial_orbit(group, m)
    if signs is None:
        return SparsePoly.zero(group.n)
    r = SparsePoly(group.n)
    r.terms = dict(signs)
    return r


class OrbitTable:
    """All monomial orbits of one degree for a group, in scan order.

    reps are descending graded-lex; ``index_sign`` maps every non-cancelled
    monomial to (orbit index, sign inside the normalized orbit sum).
    """

    __slots__ = ("group", "degree", "reps", "index_sign", "cancelled")

    def __init__(self, group: Group, degree: int):
        self.group = group
        self.degree = degree
        reps: list[Monomial] = []
        index_sign: dict[Monomial, tuple[int, int]] = {}
        cancelled: set[Monomial] = set()
        seen: set[Monomial] = set()
        for m in monomials_of_degree(group.n, degree):
            if m in seen:
                continue
            rep, signs = monomial_orbit(group, m)
            if signs is None:
                orbit_members = _orbit_members(group, m)
                cancelled |= orbit_members
                seen |= orbit_members
                continue
            idx = len(reps)
            reps.append(rep)
            for mono, s in signs.items():
                index_sign[mono] = (idx, s)
            seen |= set(signs)
        order = sorted(range(len(reps)), key=lambda i: grlex_key(reps[i]), reverse=True)
        remap = {old: new for new, old in enumerate(order)}
        self.reps = [reps[i] for i in order]
        self.index_sign = {m: (remap[i], s) for m, (i, s) in index_sign.items()}
        self.cancelled = cancelled

    def __len__(self) -> int:
        return len(self.reps)

    def rep_index_of(self, rep: Monomial) -> int:
        try:
            return self.reps.index(tuple(rep))
        except ValueError:
            raise InternalCheckError(f"{rep} is not an orbit representative") from None

    def orbit_sum(self, idx: int) -> SparsePoly:
        out: dict[Monomial, int] = {}
        for m, (i, s) in self.index_sign.items():
            if i == idx:
                out[m] = s
        r = SparsePoly(self.group.n)
        r.terms = out
        return r

    def coordinates(self, f: SparsePoly) -> list[int]:
        """Coordinates of an invariant polynomial in the orbit-sum basis."""
        coords = [f.terms.get(rep, 0) for rep in self.reps]
        return coords


def _orbit_members(group: Group, m: Monomial) -> set[Monomial]:
    members = {tuple(m)}
    frontier = [tuple(m)]
    gens = group.generators if group.generators else (group.identity,)
    while frontier:
        nxt = []
        for mono in frontier:
            for g in gens:
                im, _ = act_on_monomial(g, mono)
                if im not in members:
                    members.add(im)
                    nxt.append(im)
        frontier = nxt
    return members


_orbit_table_cache: dict[tuple[int, tuple, int], OrbitTable] = {}


def orbit_table(group: Group, degree: int) -> OrbitTable:
    key = (group.n, group.generators, degree)
    table = _orbit_table_cache.get(key)
    if table is None:
        table = OrbitTable(group, degree)
        _orbit_table_cache[key] = table
    return table


# -- classical symmetric polynomials -------------------------------------


def elementary_symmetric(n: int, k: int, squared: bool = False) -> SparsePoly:
    """e_k in x_1..x_n, or in the squared variables when requested."""
    if not 1 <= k <= n:
        raise ParseError(f"elementary symmetric index k={k} outside 1..{n}")
    step = 2 if squared else 1
    terms: dict[Monomial, int] = {}
    for combo in itertools.combinations(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] = step
        terms[tuple(e)] = 1
    return SparsePoly(n, terms)


def difference_product(n: int) -> SparsePoly:
    """Product of (x_i - x_j) over i < j."""
    result = SparsePoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            result = result * (SparsePoly.variable(n, i) - SparsePoly.variable(n, j))
    return result


def render_orbit_sum(rep: Monomial) -> str:
    return f"Z({render_monomial(rep)})"


# -- polynomial determinants ---------------------------------------------


def poly_determinant(rows: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """Determinant of a square matrix of polynomials.

    Laplace expansion with minors memoized over column subsets, processing
    columns left to right; with columns ordered by ascending degree the
    intermediate minors stay as small as possible.
    """
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise InternalCheckError("polynomial determinant needs a square matrix")
    if size == 0:
        raise InternalCheckError("empty matrix")
    n = rows[0][0].n
    # minors[frozenset of rows] = determinant over columns 0..k-1 and those rows
    minors: dict[frozenset[int], SparsePoly] = {frozenset(): SparsePoly.one(n)}
    for col in range(size):
        nxt: dict[frozenset[int], SparsePoly] = {}
        for rowset in itertools.combinations(range(size), col + 1):
            acc = SparsePoly.zero(n)
            for pos, i in enumerate(rowset):
                prev = minors[frozenset(rowset) - {i}]
                if prev.is_zero() or rows[i][col].is_zero():
                    continue
                term = rows[i][col] * prev
                # expansion along the last column: sign (-1)^(pos + col)
                acc = acc + (term if (pos + col) % 2 == 0 else -term)
            nxt[frozenset(rowset)] = acc
        minors = nxt
    return minors[frozenset(range(size))]

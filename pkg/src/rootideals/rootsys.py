"""Positive root systems of the simple Lie types.

A root is stored as its integer coordinate vector over the simple roots
alpha_1..alpha_l.  Node numbering follows the bundled reference tables:
the common (Bourbaki) labelling for A-E and G2 (alpha_1 short), while F4
is numbered along the chain alpha_1 - alpha_3 = alpha_4 - alpha_2 with
alpha_1, alpha_3 short.  The positive roots are materialized in a
canonical order -- height first, ties broken so that alpha_1..alpha_l
occupy positions 0..l-1 -- and that ordering is the stable bitset
indexing used everywhere downstream.

Simple roots are referred to by their 1-based diagram number i (as in
alpha_i); positions in the canonical root ordering are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

#: rank validity per kind
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class UnsupportedType(ValueError):
    """Raised for a (kind, rank) pair that names no simple Lie type."""


@dataclass(frozen=True)
class SimpleType:
    """A simple Lie type: a kind A-G and a rank valid for that kind."""

    kind: str
    rank: int

    def __post_init__(self) -> None:
        if self.kind not in _RANK_RANGE:
            raise UnsupportedType(f"unknown kind {self.kind!r}")
        lo, hi = _RANK_RANGE[self.kind]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise UnsupportedType(f"rank {self.rank} invalid for kind {self.kind}")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        """Parse a name like ``E6`` or ``g2``."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise UnsupportedType(f"cannot parse type name {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"


def positive_root_count(t: SimpleType) -> int:
    """Number of positive roots of the given type."""
    l = t.rank
    if t.kind == "A":
        return l * (l + 1) // 2
    if t.kind in "BC":
        return l * l
    if t.kind == "D":
        return l * (l - 1)
    if t.kind == "E":
        return {6: 36, 7: 63, 8: 120}[l]
    return 24 if t.kind == "F" else 6


def _edges(t: SimpleType) -> list[tuple[int, int]]:
    """Dynkin diagram edges as 0-based node pairs (single edges only)."""
    l = t.rank
    chain = [(i, i + 1) for i in range(l - 1)]
    if t.kind in "ABC":
        return chain
    if t.kind == "D":
        # alpha_{l-1} and alpha_l both hang off alpha_{l-2}
        return chain[:-2] + [(l - 3, l - 2), (l - 3, l - 1)]
    if t.kind == "E":
        # bottom chain alpha_1-alpha_3-alpha_4-...-alpha_l, branch alpha_2 on alpha_4
        bottom = [0] + list(range(2, l))
        return [(a, b) for a, b in zip(bottom, bottom[1:])] + [(1, 3)]
    if t.kind == "F":
        # chain alpha_1 - alpha_3 = alpha_4 - alpha_2: the numbering the
        # bundled reference tables are indexed by
        return [(0, 2), (2, 3), (3, 1)]
    return chain  # G2: chain shape, multiplicity handled in cartan_matrix


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Integer matrix whose (i, j) entry pairs alpha_{i+1} with the coroot
    of alpha_{j+1}; diagonal 2, off-diagonal entries encode the diagram."""
    l = t.rank
    m = [[0] * l for _ in range(l)]
    for i in range(l):
        m[i][i] = 2
    for a, b in _edges(t):
        m[a][b] = m[b][a] = -1
    # arrows: the entry <long, short-coroot> drops below -1
    if t.kind == "B":  # alpha_l short
        m[l - 2][l - 1] = -2
    elif t.kind == "C":  # alpha_l long
        m[l - 1][l - 2] = -2
    elif t.kind == "F":  # alpha_1, alpha_3 short; alpha_2, alpha_4 long
        m[3][2] = -2
    elif t.kind == "G":  # alpha_1 short, alpha_2 long
        m[1][0] = -3
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class Root:
    """A positive root: coordinates over the simple roots, its height, and
    its position in the canonical ordering."""

    coords: tuple[int, ...]
    height: int
    index: int

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords, start=1):
            if c == 1:
                terms.append(f"a{i}")
            elif c:
                terms.append(f"{c}a{i}")
        return "+".join(terms)


class _Zero:
    """Outcome of subtracting a simple root from itself."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "ZERO"


ZERO = _Zero()


@dataclass(frozen=True, eq=False)
class RootSystem:
    """The positive roots of a simple type, with exact lookup tables.

    ``sub_simple[i-1][j]`` is the canonical index of root_j - alpha_i when
    that difference is again a positive root, else -1; ``highest_partner[j]``
    likewise indexes theta - root_j.  Instances are immutable after
    construction and safe to share between threads.
    """

    simple_type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    theta_index: int
    lookup: dict[tuple[int, ...], int]
    sub_simple: tuple[tuple[int, ...], ...]
    highest_partner: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    @property
    def n(self) -> int:
        return len(self.positive_roots)

    @property
    def theta(self) -> Root:
        return self.positive_roots[self.theta_index]

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    def root(self, coords: tuple[int, ...]) -> Root | None:
        idx = self.lookup.get(coords)
        return None if idx is None else self.positive_roots[idx]


def build_root_system(t: SimpleType) -> RootSystem:
    """Construct the positive root system of ``t``.

    Roots are grown level by level from the simple roots: root + alpha_i is
    kept whenever the alpha_i-string through the root extends upward, which
    the pairing against the coroot of alpha_i decides exactly.
    """
    l = t.rank
    cartan = cartan_matrix(t)
    zero = (0,) * l
    simple = [tuple(int(k == i) for k in range(l)) for i in range(l)]
    height = {c: 1 for c in simple}
    level = list(simple)
    while level:
        grown = []
        for c in level:
            for i in range(l):
                p = 0
                down = list(c)
                while True:
                    down[i] -= 1
                    td = tuple(down)
                    if td == zero or td in height:
                        p += 1
                    else:
                        break
                if p - sum(c[k] * cartan[k][i] for k in range(l)) >= 1:
                    up = list(c)
                    up[i] += 1
                    tu = tuple(up)
                    if tu not in height:
                        height[tu] = height[c] + 1
                        grown.append(tu)
        level = grown

    order = sorted(height, key=lambda c: (height[c], tuple(-x for x in c)))
    assert len(order) == positive_root_count(t)
    roots = tuple(
        Root(coords=c, height=height[c], index=k) for k, c in enumerate(order)
    )
    lookup = {c: k for k, c in enumerate(order)}

    theta = order[-1]
    assert all(all(a >= b for a, b in zip(theta, c)) for c in order)

    sub = tuple(
        tuple(
            lookup.get(tuple(c[k] - int(k == i) for k in range(l)), -1)
            for c in order
        )
        for i in range(l)
    )
    partner = tuple(
        lookup.get(tuple(a - b for a, b in zip(theta, c)), -1) for c in order
    )
    return RootSystem(
        simple_type=t,
        cartan=cartan,
        positive_roots=roots,
        theta_index=len(order) - 1,
        lookup=lookup,
        sub_simple=sub,
        highest_partner=partner,
    )


def add_roots(rs: RootSystem, a: Root, b: Root) -> Root | None:
    """The root a + b, or None when that vector is not a positive root."""
    return rs.root(tuple(x + y for x, y in zip(a.coords, b.coords)))


def subtract_simple(rs: RootSystem, b: Root, i: int) -> Root | _Zero | None:
    """b - alpha_i as a three-way outcome: ZERO when b is alpha_i itself,
    the difference root when it lies among the positive roots, else None."""
    if b.index == i - 1:
        return ZERO
    k = rs.sub_simple[i - 1][b.index]
    return None if k < 0 else rs.positive_roots[k]

"""Dominance order on the positive roots, and antichain enumeration.

Root subsets are plain ints used as fixed-width bitsets over the canonical
root indexing: bit j stands for ``positive_roots[j]``.  On positive roots
the dominance order (beta - alpha has non-negative coordinates everywhere)
coincides with the sum-of-positive-roots order; the test suite verifies
that coincidence computationally for every supported type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .rootsys import RootSystem

RootSet = int


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_indices(indices: Iterable[int]) -> RootSet:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


@dataclass(frozen=True, eq=False)
class Poset:
    """The order on the n positive roots as per-element reachability bitsets.

    ``up[i]`` holds every j with root_i <= root_j (including i itself),
    ``down[i]`` the transpose, and ``covers[i]`` the immediate successors.
    Immutable after construction.
    """

    n: int
    up: tuple[int, ...]
    down: tuple[int, ...]
    covers: tuple[tuple[int, ...], ...]

    def leq(self, i: int, j: int) -> bool:
        return self.up[i] >> j & 1 == 1


def build_poset(rs: RootSystem) -> Poset:
    """Dominance order of the root system, by coordinatewise comparison."""
    coords = [r.coords for r in rs.positive_roots]
    n = len(coords)
    up = []
    for i in range(n):
        ci = coords[i]
        mask = 0
        for j in range(n):
            if all(a <= b for a, b in zip(ci, coords[j])):
                mask |= 1 << j
        up.append(mask)
    down = [0] * n
    for i in range(n):
        for j in iter_bits(up[i]):
            down[j] |= 1 << i
    covers = []
    for i in range(n):
        above = up[i] ^ (1 << i)
        covers.append(
            tuple(
                j
                for j in iter_bits(above)
                if above & (down[j] ^ (1 << j)) == 0
            )
        )
    return Poset(n=n, up=tuple(up), down=tuple(down), covers=tuple(covers))


def minimal_elements(p: Poset, s: RootSet) -> RootSet:
    """The members of ``s`` with nothing of ``s`` strictly below them."""
    out = 0
    for j in iter_bits(s):
        if p.down[j] & s == 1 << j:
            out |= 1 << j
    return out


def upward_closure(p: Poset, a: RootSet) -> RootSet:
    """Everything lying above some member of ``a`` (a filter)."""
    out = 0
    for j in iter_bits(a):
        out |= p.up[j]
    return out


def is_antichain(p: Poset, a: RootSet) -> bool:
    """True when no two distinct members of ``a`` are comparable."""
    for j in iter_bits(a):
        if (p.up[j] | p.down[j]) & a != 1 << j:
            return False
    return True


def _extension_masks(p: Poset) -> list[int]:
    """For each i, the indices j > i incomparable to i."""
    full = (1 << p.n) - 1
    return [
        full & ~((2 << i) - 1) & ~(p.up[i] | p.down[i]) for i in range(p.n)
    ]


def enumerate_filters(
    p: Poset, starts: Iterable[int] | None = None
) -> Iterator[tuple[RootSet, RootSet]]:
    """Depth-first stream of (antichain, upward closure) pairs.

    Every antichain of ``p`` appears exactly once, in an order that depends
    only on the poset.  With ``starts``, only the subtrees of antichains
    whose smallest member is listed are walked (and the empty antichain is
    omitted), so disjoint start sets shard the stream: merging the shards,
    plus the empty pair, reproduces the full stream as a multiset.
    """
    cand = _extension_masks(p)
    up = p.up

    def subtree(
        chosen: int, closure: int, allowed: int
    ) -> Iterator[tuple[int, int]]:
        yield chosen, closure
        a = allowed
        while a:
            low = a & -a
            a ^= low
            j = low.bit_length() - 1
            yield from subtree(chosen | low, closure | up[j], a & cand[j])

    if starts is None:
        yield 0, 0
        seq: Iterable[int] = range(p.n)
    else:
        seq = starts
    for i in seq:
        yield from subtree(1 << i, up[i], cand[i])


def enumerate_antichains(
    p: Poset, starts: Iterable[int] | None = None
) -> Iterator[RootSet]:
    """Deterministic stream of every antichain of ``p``, the empty one first."""
    for antichain, _ in enumerate_filters(p, starts):
        yield antichain

"""Brute-force reference implementations, for tests and the --oracle path.

Nothing here shares an algorithm with the fast code it checks: roots come
from a reflection orbit instead of string extension, and filters from a
scan of every subset instead of the antichain walk.  Simplicity over
speed, single-threaded.
"""

from __future__ import annotations

from typing import Iterator

from .poset import Poset, RootSet
from .rootsys import SimpleType, cartan_matrix

#: largest root count for which scanning all subsets is on the table
SUBSET_SCAN_LIMIT = 24


class TooLarge(ValueError):
    """Raised when a brute-force scan would exceed the configured bound."""


def reflection_closure(t: SimpleType) -> frozenset[tuple[int, ...]]:
    """Coordinates of the positive roots, via the reflection orbit.

    Closes the simple roots under every simple reflection
    s_i(beta) = beta - <beta, coroot_i> alpha_i (the full orbit covers both
    signs) and keeps the vectors with all coordinates non-negative.
    """
    l = t.rank
    cartan = cartan_matrix(t)
    simple = [tuple(int(k == i) for k in range(l)) for i in range(l)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        grown = []
        for c in frontier:
            for i in range(l):
                pairing = sum(c[k] * cartan[k][i] for k in range(l))
                image = list(c)
                image[i] -= pairing
                t_img = tuple(image)
                if t_img not in seen:
                    seen.add(t_img)
                    grown.append(t_img)
        frontier = grown
    return frozenset(c for c in seen if min(c) >= 0)


def iter_subset_scan_filters(p: Poset) -> Iterator[RootSet]:
    """Every upward-closed subset, found by testing all 2^n subsets.

    A subset qualifies when each member's up-set lies inside it, checked
    literally with a short-circuit on the first offending member.
    """
    if p.n > SUBSET_SCAN_LIMIT:
        raise TooLarge(f"{p.n} roots means 2^{p.n} subsets; bound is 2^{SUBSET_SCAN_LIMIT}")
    up = p.up
    for m in range(1 << p.n):
        t = m
        while t:
            low = t & -t
            if up[low.bit_length() - 1] & ~m:
                break
            t ^= low
        else:
            yield m


def subset_scan_filters(p: Poset) -> int:
    """Number of upward-closed subsets, by exhaustive scan."""
    return sum(1 for _ in iter_subset_scan_filters(p))

"""Classifying root-poset filters as ideals of parabolic subalgebras.

A filter Phi of the root poset encodes an ad-nilpotent ideal of the Borel
subalgebra; it stays an ideal of the parabolic generated by a set I of
simple roots exactly when, for each alpha_i in I, subtracting alpha_i from
any member never leaves the filter through a positive root, and alpha_i
itself is not a member.  ``compatibility_mask`` records that per simple
root, so that one pass over the filters settles all 2^l parabolics at
once.  The ideal is abelian exactly when no two members (repeats allowed)
sum to the highest root.

Parabolic subsets are l-bit masks with bit i-1 standing for alpha_i;
``parabolic_compatible`` and friends take 1-based simple-root numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poset import Poset, RootSet, enumerate_filters, iter_bits, minimal_elements
from .rootsys import RootSystem

ParabolicMask = int


def parabolic_compatible(rs: RootSystem, filter_mask: RootSet, i: int) -> bool:
    """Does the filter survive as an ideal when alpha_i joins the Levi part?

    True iff alpha_i is not in the filter and beta - alpha_i, whenever it is
    a positive root for a member beta, is again a member.
    """
    if filter_mask >> (i - 1) & 1:
        return False
    sub = rs.sub_simple[i - 1]
    for j in iter_bits(filter_mask):
        k = sub[j]
        if k >= 0 and not filter_mask >> k & 1:
            return False
    return True


def compatibility_mask(rs: RootSystem, filter_mask: RootSet) -> ParabolicMask:
    """Bit i-1 set iff ``parabolic_compatible(rs, filter_mask, i)``."""
    out = 0
    for i in range(1, rs.rank + 1):
        if parabolic_compatible(rs, filter_mask, i):
            out |= 1 << (i - 1)
    return out


def is_abelian(rs: RootSystem, filter_mask: RootSet) -> bool:
    """True when no two members of the filter sum to the highest root.

    Single pass: any such pair has a member of at most half the highest
    root's height, so testing theta - beta for those members suffices.
    """
    top = rs.theta.height
    for j in iter_bits(filter_mask):
        if 2 * rs.positive_roots[j].height <= top:
            k = rs.highest_partner[j]
            if k >= 0 and filter_mask >> k & 1:
                return False
    return True


def root_pair_sums(rs: RootSystem, mask: RootSet) -> RootSet:
    """Oracle: all positive roots expressible as a sum of two members of
    ``mask`` (repeats allowed), by scanning every pair."""
    coords = [rs.positive_roots[j].coords for j in iter_bits(mask)]
    out = 0
    for a in range(len(coords)):
        for b in range(a, len(coords)):
            k = rs.lookup.get(tuple(x + y for x, y in zip(coords[a], coords[b])))
            if k is not None:
                out |= 1 << k
    return out


def _span_roots(rs: RootSystem, parabolic: ParabolicMask) -> RootSet:
    """Positive roots supported entirely on the chosen simple roots."""
    out = 0
    for j, r in enumerate(rs.positive_roots):
        if all(c == 0 or parabolic >> i & 1 for i, c in enumerate(r.coords)):
            out |= 1 << j
    return out


def is_filter_for(
    rs: RootSystem, filter_mask: RootSet, parabolic: ParabolicMask
) -> bool:
    """Oracle: the literal by-definition membership test.

    The set must avoid the roots spanned by the chosen simple roots, and
    adding any positive root -- or any root of that span, either sign -- to
    a member must land inside the set whenever it lands among the positive
    roots at all.
    """
    span = _span_roots(rs, parabolic)
    if filter_mask & span:
        return False
    betas = [r.coords for r in rs.positive_roots]
    betas += [
        tuple(-x for x in rs.positive_roots[j].coords) for j in iter_bits(span)
    ]
    for a in iter_bits(filter_mask):
        ca = rs.positive_roots[a].coords
        for cb in betas:
            k = rs.lookup.get(tuple(x + y for x, y in zip(ca, cb)))
            if k is not None and not filter_mask >> k & 1:
                return False
    return True


@dataclass(frozen=True)
class IdealRecord:
    """One ideal: its root set, minimal roots, the parabolics it serves,
    whether it is abelian, and its dimension."""

    roots: RootSet
    min_roots: RootSet
    compat: ParabolicMask
    abelian: bool
    size: int


class Classifier:
    """Precomputed jump tables for classifying many filters of one system.

    ``classify`` matches ``compatibility_mask`` + ``is_abelian`` but runs a
    single fused pass per filter; the drop list of a root bundles every
    simple root whose subtraction leads from it to another positive root.
    """

    def __init__(self, rs: RootSystem):
        l = rs.rank
        self.full: ParabolicMask = (1 << l) - 1
        drops: list[list[tuple[int, int]]] = [[] for _ in range(rs.n)]
        for z in range(l):
            sub = rs.sub_simple[z]
            for j in range(rs.n):
                if sub[j] >= 0:
                    drops[j].append((1 << z, 1 << sub[j]))
        self.drops = tuple(tuple(d) for d in drops)
        self.theta_pairs = tuple(
            (1 << j, 1 << rs.highest_partner[j])
            for j in range(rs.n)
            if rs.highest_partner[j] >= j
        )

    def classify(self, filter_mask: RootSet) -> tuple[ParabolicMask, bool]:
        compat = self.full & ~filter_mask
        drops = self.drops
        m = filter_mask
        while m and compat:
            low = m & -m
            m ^= low
            for ibit, target in drops[low.bit_length() - 1]:
                if compat & ibit and not filter_mask & target:
                    compat &= ~ibit
                    if not compat:
                        break
        abelian = True
        for b1, b2 in self.theta_pairs:
            if filter_mask & b1 and filter_mask & b2:
                abelian = False
                break
        return compat, abelian


def ideal_record(rs: RootSystem, p: Poset, filter_mask: RootSet) -> IdealRecord:
    return IdealRecord(
        roots=filter_mask,
        min_roots=minimal_elements(p, filter_mask),
        compat=compatibility_mask(rs, filter_mask),
        abelian=is_abelian(rs, filter_mask),
        size=filter_mask.bit_count(),
    )


def list_ideals(
    rs: RootSystem,
    p: Poset,
    parabolic: ParabolicMask = 0,
    abelian_only: bool = False,
) -> list[IdealRecord]:
    """All ideals of the chosen parabolic, sorted by (dimension, root set)."""
    cls = Classifier(rs)
    out = []
    for antichain, closure in enumerate_filters(p):
        compat, abelian = cls.classify(closure)
        if parabolic & ~compat:
            continue
        if abelian_only and not abelian:
            continue
        out.append(
            IdealRecord(
                roots=closure,
                min_roots=antichain,
                compat=compat,
                abelian=abelian,
                size=closure.bit_count(),
            )
        )
    out.sort(key=lambda r: (r.size, r.roots))
    return out

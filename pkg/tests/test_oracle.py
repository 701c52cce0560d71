from __future__ import annotations

import pytest

import rootideals as ri
from rootideals import SimpleType


def test_reflection_closure_a2():
    assert ri.reflection_closure(SimpleType("A", 2)) == {(1, 0), (0, 1), (1, 1)}


def test_reflection_closure_g2():
    got = ri.reflection_closure(SimpleType("G", 2))
    assert len(got) == 6
    assert (3, 2) in got


@pytest.mark.parametrize("name,count", [("E6", 36), ("E7", 63), ("E8", 120)])
def test_reflection_closure_e_sizes(name, count):
    assert len(ri.reflection_closure(SimpleType.parse(name))) == count


@pytest.mark.parametrize("name,count", [("G2", 8), ("A1", 2), ("A2", 5), ("A3", 14), ("B2", 6)])
def test_subset_scan_counts(poset_of, name, count):
    assert ri.subset_scan_filters(poset_of(name)) == count


def test_subset_scan_yields_filters_only(poset_of):
    p = poset_of("G2")
    scanned = set(ri.iter_subset_scan_filters(p))
    walked = {f for _, f in ri.enumerate_filters(p)}
    assert scanned == walked


def test_subset_scan_refuses_large_posets(poset_of):
    with pytest.raises(ri.TooLarge):
        ri.subset_scan_filters(poset_of("E6"))


@pytest.mark.slow
def test_subset_scan_f4_count(poset_of):
    assert ri.subset_scan_filters(poset_of("F4")) == 105

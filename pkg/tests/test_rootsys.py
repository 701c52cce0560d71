from __future__ import annotations

import pytest

import rootideals as ri
from rootideals import ZERO, SimpleType, UnsupportedType

G2_COORDS = {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


def test_g2_exact_roots(system):
    rs = system("G2")
    assert {r.coords for r in rs.positive_roots} == G2_COORDS
    assert rs.theta.coords == (3, 2)
    # canonical order: simple roots in diagram order, then by height
    assert [r.coords for r in rs.positive_roots[:2]] == [(1, 0), (0, 1)]
    assert [r.height for r in rs.positive_roots] == [1, 1, 2, 3, 4, 5]


def test_a1_trivial(system):
    rs = system("A1")
    assert rs.n == 1
    assert rs.theta.coords == (1,)


@pytest.mark.parametrize(
    "name,count",
    [("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120)],
)
def test_exceptional_sizes(system, name, count):
    rs = system(name)
    assert rs.n == count == ri.positive_root_count(rs.simple_type)


@pytest.mark.parametrize(
    "name",
    ["A1", "A2", "A3", "A4", "A7", "B2", "B3", "B4", "C3", "C4", "D3", "D4", "D5",
     "G2", "F4", "E6", "E7", "E8"],
)
def test_builder_matches_reflection_oracle(system, name):
    rs = system(name)
    assert {r.coords for r in rs.positive_roots} == set(
        ri.reflection_closure(rs.simple_type)
    )


def test_theta_componentwise_maximal(system):
    for name in ("G2", "F4", "E6", "E7", "E8"):
        rs = system(name)
        theta = rs.theta.coords
        for r in rs.positive_roots:
            assert all(a <= b for a, b in zip(r.coords, theta))


def test_add_roots_g2(system):
    rs = system("G2")
    a1, a2 = rs.simple_roots
    got = ri.add_roots(rs, a1, a2)
    assert got is not None and got.coords == (1, 1)
    assert ri.add_roots(rs, rs.theta, a1) is None
    assert ri.add_roots(rs, a1, a1) is None


def test_add_roots_commutes_with_height(system):
    rs = system("F4")
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            ab = ri.add_roots(rs, a, b)
            assert ab == ri.add_roots(rs, b, a)
            if ab is not None:
                assert ab.height == a.height + b.height


def test_subtract_simple_g2(system):
    rs = system("G2")
    got = ri.subtract_simple(rs, rs.theta, 2)
    assert got is not None and got is not ZERO and got.coords == (3, 1)
    assert ri.subtract_simple(rs, rs.simple_roots[0], 1) is ZERO
    assert ri.subtract_simple(rs, rs.theta, 1) is None


def test_subtract_zero_iff_simple(system):
    rs = system("F4")
    for b in rs.positive_roots:
        for i in range(1, rs.rank + 1):
            outcome = ri.subtract_simple(rs, b, i)
            assert (outcome is ZERO) == (b.coords == rs.simple_roots[i - 1].coords)


def test_root_index_and_lookup_are_consistent(system):
    rs = system("E7")
    for j, r in enumerate(rs.positive_roots):
        assert r.index == j
        assert rs.lookup[r.coords] == j


@pytest.mark.parametrize("kind,rank", [("E", 5), ("E", 9), ("F", 3), ("G", 4), ("A", 0), ("B", 1), ("D", 2)])
def test_invalid_ranks_rejected(kind, rank):
    with pytest.raises(UnsupportedType):
        SimpleType(kind, rank)


def test_parse():
    assert SimpleType.parse("e6") == SimpleType("E", 6)
    assert str(SimpleType.parse("A13")) == "A13"
    with pytest.raises(UnsupportedType):
        SimpleType.parse("Q4")
    with pytest.raises(UnsupportedType):
        SimpleType.parse("E")

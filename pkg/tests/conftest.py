from __future__ import annotations

import pytest

import rootideals as ri

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")

#: types cheap enough for exhaustive oracle cross-checks
SMALL = ("A1", "A2", "A3", "B2", "G2")


@pytest.fixture(scope="session")
def system():
    cache: dict[str, ri.RootSystem] = {}

    def get(name: str) -> ri.RootSystem:
        if name not in cache:
            cache[name] = ri.build_root_system(ri.SimpleType.parse(name))
        return cache[name]

    return get


@pytest.fixture(scope="session")
def poset_of(system):
    cache: dict[str, ri.Poset] = {}

    def get(name: str) -> ri.Poset:
        if name not in cache:
            cache[name] = ri.build_poset(system(name))
        return cache[name]

    return get


@pytest.fixture(scope="session")
def table_of(system):
    cache: dict[str, list[ri.TableRow]] = {}

    def get(name: str) -> list[ri.TableRow]:
        if name not in cache:
            cache[name] = ri.tabulate(system(name))
        return cache[name]

    return get


@pytest.fixture(scope="session")
def filters_of(poset_of):
    cache: dict[str, list[tuple[int, int]]] = {}

    def get(name: str) -> list[tuple[int, int]]:
        if name not in cache:
            cache[name] = list(ri.enumerate_filters(poset_of(name)))
        return cache[name]

    return get

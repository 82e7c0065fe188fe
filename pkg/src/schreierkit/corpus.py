"""Named test groups used by the verification harness and the test suite."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .constructions import (
    AbelianSpec,
    SchreierQuotientSpec,
    alternating,
    build_abelian,
    cyclic,
    dihedral,
    direct_product,
    prop23_group,
    quaternion,
    schreier_quotient,
    symmetric,
    wreath,
)
from .permgrp import Perm, PermGroup


def _dicyclic12() -> PermGroup:
    # C3 ⋊ C4 with the generator of C4 inverting C3: x -> -x on Z/3, degree 3 + 4
    a = Perm([1, 2, 0, 3, 4, 5, 6])
    b = Perm([0, 2, 1, 4, 5, 6, 3])
    return PermGroup(7, [a, b], name="Dic3")


_BUILDERS: dict[str, Callable[[], PermGroup]] = {}

for _n in range(1, 17):
    _BUILDERS[f"C{_n}"] = (lambda n=_n: cyclic(n))
for _orders in [(2, 2), (2, 4), (2, 2, 2), (3, 3), (2, 6), (4, 4), (2, 2, 4), (2, 8), (2, 2, 2, 2)]:
    _BUILDERS["x".join(f"C{c}" for c in _orders)] = (lambda o=_orders: build_abelian(AbelianSpec(o)))
for _n in range(3, 9):
    _BUILDERS[f"D{_n}"] = (lambda n=_n: dihedral(n))
_BUILDERS["Q8"] = quaternion
_BUILDERS["V4:C3"] = lambda: prop23_group(2, (3,)).group
_BUILDERS["S3"] = lambda: symmetric(3)
_BUILDERS["Dic3"] = _dicyclic12
_BUILDERS["S4"] = lambda: symmetric(4)
_BUILDERS["A5"] = lambda: alternating(5)
_BUILDERS["S3xS3"] = lambda: direct_product(symmetric(3), symmetric(3))
_BUILDERS["S3xC3"] = lambda: direct_product(symmetric(3), cyclic(3))
_BUILDERS["ext(3,[4])"] = lambda: prop23_group(3, (4,)).group
_BUILDERS["ext(2,[3,3])"] = lambda: prop23_group(2, (3, 3)).group
_BUILDERS["ext(2,[5])"] = lambda: prop23_group(2, (5,)).group
_BUILDERS["ext(5,[3])"] = lambda: prop23_group(5, (3,)).group
_BUILDERS["C3wrC2"] = lambda: wreath(3, 1, cyclic(2)).group
_BUILDERS["C3x(C3wrC2)"] = lambda: direct_product(cyclic(3), wreath(3, 1, cyclic(2)).group)
_BUILDERS["C3^2wrC2"] = lambda: wreath(3, 2, cyclic(2)).group
_BUILDERS["sq(2,3,[2])"] = lambda: schreier_quotient(SchreierQuotientSpec(2, 3, AbelianSpec((2,)))).group
_BUILDERS["sq(3,2,[])"] = lambda: schreier_quotient(SchreierQuotientSpec(3, 2, AbelianSpec(()))).group
_BUILDERS["sq(2,5,[2])"] = lambda: schreier_quotient(SchreierQuotientSpec(2, 5, AbelianSpec((2,)))).group
_BUILDERS["sq(2,7,[2])"] = lambda: schreier_quotient(SchreierQuotientSpec(2, 7, AbelianSpec((2,)))).group
_BUILDERS["sq(3,3,[2])"] = lambda: schreier_quotient(SchreierQuotientSpec(3, 3, AbelianSpec((2,)))).group

NAMES: tuple[str, ...] = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def get(name: str) -> PermGroup:
    G = _BUILDERS[name]()
    if G.name is None or G.name != name:
        G.name = name
    return G


def groups(max_order: int | None = None) -> list[tuple[str, PermGroup]]:
    out = []
    for name in NAMES:
        G = get(name)
        if max_order is None or G.order() <= max_order:
            out.append((name, G))
    return out

#!/usr/bin/env python3
"""Reproduce every headline census in one run.

Prints the flat counts, the subdivided Petersen structure, the radial face
censuses of the two worked three-edge cones, and the full obstruction
example, each against its expected table.
"""

from __future__ import annotations

import sys
import time

from tropfan import (
    Graph,
    bergman_fan,
    enumerate_flats,
    enumerate_types,
    fans_equal,
    is_balanced,
    moduli_fan_rad,
    project_fan,
    radial_face_census,
    tropical_type,
)


def check(label: str, got, expected) -> bool:
    ok = got == expected
    mark = "ok " if ok else "FAIL"
    print(f"  [{mark}] {label}: {got}" + ("" if ok else f" (expected {expected})"))
    return ok


def main() -> int:
    t0 = time.perf_counter()
    ok = True

    print("flat censuses")
    k4 = Graph.complete([2, 3, 4, 5])
    flats = enumerate_flats(k4)
    ok &= check("complete, 4 vertices", [sum(1 for f in flats if f.rank == r) for r in range(4)], [1, 6, 7, 1])
    g = Graph.from_edges([(2, 3), (2, 4), (3, 4), (3, 5), (4, 5)])
    flats = enumerate_flats(g)
    ok &= check("one edge removed", [sum(1 for f in flats if f.rank == r) for r in range(4)], [1, 5, 6, 1])
    for m, bell in [(3, 5), (4, 15), (5, 52)]:
        ok &= check(f"complete, {m} vertices", len(enumerate_flats(Graph.complete(range(2, m + 2)))), bell)

    print("subdivided Petersen structure")
    types = enumerate_types(5)
    ok &= check("five-end types with 1 and 2 edges", (len(types[1]), len(types[2])), (10, 15))
    fan = bergman_fan(k4)
    ok &= check("fan census", fan.census(), (1, 13, 18))
    ok &= check("moduli fan equals it", fans_equal(moduli_fan_rad(5, "complete"), fan), True)
    ok &= check("balanced", is_balanced(fan).balanced, True)

    print("radial face censuses")
    six = tropical_type(6, [frozenset({2, 3}), frozenset({4, 5, 6}), frozenset({5, 6})])
    ok &= check("six-end cone", radial_face_census(six), {0: 1, 1: 5, 2: 7, 3: 3})
    seven = tropical_type(7, [frozenset({2, 3}), frozenset({4, 5}), frozenset({6, 7})])
    ok &= check("seven-end cone", radial_face_census(seven), {0: 1, 1: 7, 2: 12, 3: 6})

    print("obstruction example (two adjacent edges removed)")
    gamma = Graph.from_edges([(2, 3), (2, 4), (2, 5), (3, 4)])
    radial = moduli_fan_rad(5, gamma)
    ok &= check("radial census", radial.census(), (1, 9, 10))
    projected = project_fan(radial, gamma)
    ok &= check("projected census", projected.census(), (1, 8, 9))
    fibers = sorted(len(c.provenance) for c in projected.cones)
    ok &= check("largest fiber", max(fibers), 3)
    ok &= check("projected equals the small fan", fans_equal(projected, bergman_fan(gamma)), True)

    print(f"total {time.perf_counter() - t0:.2f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

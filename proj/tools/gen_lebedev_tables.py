#!/usr/bin/env python3
"""Regenerates core/src/lebedev_tables.cpp from SciPy's Lebedev-Laikov rules.

Points are emitted as (theta, phi, weight) in canonical order: weight class
descending, then theta ascending, then phi ascending. Pole points carry phi = 0.

Usage: python3 tools/gen_lebedev_tables.py > core/src/lebedev_tables.cpp
"""
import numpy as np
from scipy.integrate import lebedev_rule

DEGREES = [3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29]


def canonical_points(degree):
    xyz, w = lebedev_rule(degree)
    x, y, z = xyz
    theta = np.arccos(np.clip(z, -1.0, 1.0))
    phi = np.mod(np.arctan2(y, x), 2.0 * np.pi)
    pole = np.hypot(x, y) < 1e-14
    theta[pole & (z > 0)] = 0.0
    theta[pole & (z < 0)] = np.pi
    phi[pole] = 0.0
    phi[phi >= 2.0 * np.pi] = 0.0
    # weight classes: identical up to table rounding
    classes = np.round(w / w.max(), 12)
    order = sorted(range(len(w)), key=lambda i: (-classes[i], theta[i], phi[i]))
    return [(theta[i], phi[i], w[i]) for i in order]


def main():
    print("// Generated by tools/gen_lebedev_tables.py. Do not edit.")
    print('#include "lebedev_tables.hpp"')
    print()
    print("namespace scatcm::detail {")
    print()
    names = []
    for degree in DEGREES:
        pts = canonical_points(degree)
        name = f"kLebedev{len(pts)}"
        names.append((name, len(pts), degree))
        print(f"constexpr LebedevPoint {name}[] = {{")
        for t, p, w in pts:
            print(f"    {{{t:.17g}, {p:.17g}, {w:.17g}}},")
        print("};")
        print()
    print("const std::array<LebedevTable, kLebedevTableCount> kLebedevTables = {{")
    for name, n, degree in names:
        print(f"    {{{n}, {degree}, {name}}},")
    print("}};")
    print()
    print("}  // namespace scatcm::detail")


if __name__ == "__main__":
    main()

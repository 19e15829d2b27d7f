#!/usr/bin/env python3
"""Emit the Lebedev sphere rules used by the C++ library as a header.

Weights from scipy are normalized to sum 4*pi.
"""
import sys
from scipy.integrate import lebedev_rule

DEGREES = (5, 7, 11, 17, 27, 41)

out = sys.argv[1] if len(sys.argv) > 1 else "include/rvmb/lebedev_data.hpp"
lines = [
    "// generated by tools/gen_lebedev.py, do not edit",
    "#pragma once",
    "#include <array>",
    "#include <cstddef>",
    "",
    "namespace rvmb::lebedev_data {",
    "",
]
for d in DEGREES:
    x, w = lebedev_rule(d)
    n = w.size
    lines.append(f"inline constexpr std::size_t kN{d} = {n};")
    lines.append(f"inline constexpr std::array<double, {4 * n}> kRule{d} = {{")
    for i in range(n):
        lines.append(f"    {float(x[0, i])!r}, {float(x[1, i])!r}, {float(x[2, i])!r}, {float(w[i])!r},")
    lines.append("};")
    lines.append("")
lines.append("}  // namespace rvmb::lebedev_data")
with open(out, "w") as f:
    f.write("\n".join(lines) + "\n")

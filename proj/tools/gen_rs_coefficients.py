#!/usr/bin/env python3
"""Writes src/rs_coefficients.inc: Taylor coefficients of the Riemann-Siegel
correction terms C0..C4 in powers of z = p - 1/2.

Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) is entire; its Taylor series
about p = 1/2 is taken from a Cauchy integral on a circle of radius 1.
"""
import sys
from pathlib import Path
import mpmath as mp

mp.mp.dps = 60
DEG = 90  # degree of the Psi expansion
M = 512   # nodes on the Cauchy circle
R = mp.mpf(1)


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


vals = [psi(mp.mpf(1) / 2 + R * mp.expjpi(2 * mp.mpf(k) / M)) for k in range(M)]
coef = []
for j in range(DEG + 1):
    s = mp.fsum(vals[k] * mp.expjpi(-2 * mp.mpf(j * k) / M) for k in range(M))
    coef.append(mp.re(s) / M / R**j)


def deriv(c, n):
    """n-th derivative of a power series."""
    out = c
    for _ in range(n):
        out = [out[i] * i for i in range(1, len(out))]
    return out


def combo(terms):
    n = max(len(deriv(coef, d)) for d, _ in terms)
    out = [mp.mpf(0)] * n
    for d, w in terms:
        c = deriv(coef, d)
        for i, v in enumerate(c):
            out[i] += w * v
    return out


pi = mp.pi
C = [
    combo([(0, 1)]),
    combo([(3, -1 / (96 * pi**2))]),
    combo([(2, 1 / (64 * pi**2)), (6, 1 / (18432 * pi**4))]),
    combo([(1, -1 / (64 * pi**2)), (5, -1 / (3840 * pi**4)), (9, -1 / (5308416 * pi**6))]),
    combo([(0, 1 / (128 * pi**2)), (4, 19 / (24576 * pi**4)),
           (8, 11 / (5898240 * pi**6)), (12, 1 / (2038431744 * pi**8))]),
]

lines = ["// Generated by tools/gen_rs_coefficients.py. Do not edit.",
         "// Taylor coefficients of C_k(p) in z = p - 1/2, k = 0..4."]
for k, c in enumerate(C):
    # drop terms that cannot matter for |z| <= 1/2
    last = max(i for i, v in enumerate(c) if abs(v) * mp.mpf(0.5) ** i > mp.mpf(10) ** -22)
    body = ",\n    ".join("0.0" if abs(v) < mp.mpf(10) ** -40 else mp.nstr(v, 20, min_fixed=1, max_fixed=0)
                           for v in c[: last + 1])
    lines.append(f"inline constexpr double kRsC{k}[] = {{\n    {body}}};")
out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "src" / "rs_coefficients.inc"
out.write_text("\n".join(lines) + "\n")
print("wrote", out)

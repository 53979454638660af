#!/usr/bin/env python3
"""Independent arbitrary-precision reference values for the unit tests.

Every number in tests/oracle_values.hpp comes from this script (mpmath at
40 digits). Run it again after adding a case:
    python3 tests/oracles/make_oracles.py
"""
from pathlib import Path
import mpmath as mp
import numpy as np

mp.mp.dps = 40
out = []


def emit(name, v):
    out.append(f"inline constexpr double {name} = {mp.nstr(v, 20, min_fixed=1, max_fixed=0)};")


def emit_c(name, v):
    v = mp.mpc(v)
    out.append(f"inline const std::complex<double> {name}{{{mp.nstr(v.real, 20, min_fixed=1, max_fixed=0)}, "
               f"{mp.nstr(v.imag, 20, min_fixed=1, max_fixed=0)}}};")


def emit_table(name, rows):
    body = ",\n    ".join("{" + ", ".join(mp.nstr(c, 20, min_fixed=1, max_fixed=0) for c in r) + "}" for r in rows)
    out.append(f"inline constexpr double {name}[][{len(rows[0])}] = {{\n    {body}}};")


# ---- Gamma, digamma, Barnes G (complex point sets) ----
gamma_pts = [mp.mpc(0.5, 0), mp.mpc(3.7, -2.1), mp.mpc(-4.3, 0.2), mp.mpc(10, 40), mp.mpc(0.1, 0.01),
             mp.mpc(-20.5, 1), mp.mpc(25, -30), mp.mpc(-7.25, -3.5), mp.mpc(1e-3, 0), mp.mpc(0.5, 48)]
emit_table("kLogGammaCases", [(z.real, z.imag, mp.re(mp.loggamma(z)), mp.im(mp.loggamma(z))) for z in gamma_pts])
emit_table("kDigammaCases", [(z.real, z.imag, mp.re(mp.digamma(z)), mp.im(mp.digamma(z))) for z in gamma_pts])
# Barnes G: compare G itself through log|G| and arg G (mod 2 pi)
g_pts = [mp.mpc(0.5, 0), mp.mpc(1.5, 2), mp.mpc(-2.5, 0), mp.mpc(2.5, 0), mp.mpc(10.3, 4), mp.mpc(0.3, -7),
         mp.mpc(-6.2, 1.1), mp.mpc(19, 0), mp.mpc(3, 12)]
rows = []
for z in g_pts:
    g = mp.barnesg(z)
    rows.append((z.real, z.imag, mp.log(abs(g)), mp.arg(g)))
emit_table("kBarnesGCases", rows)


# ---- double gamma: independent high-precision quadrature of the integral form ----
def log_dg(z, x):
    z = mp.mpc(z)
    x = mp.mpf(x)
    Q = x + 1 / x
    a = Q / 2

    def f(t):
        with mp.workdps(200):
            return +g(t)

    def g(t):
        return ((mp.exp(-a * t) - mp.exp(-z * t)) / ((1 - mp.exp(-x * t)) * (1 - mp.exp(-t / x)))
                + mp.exp(-t) / 2 * (a - z) ** 2 + (a - z) / t) / t

    return (z - a) / 2 * mp.log(2 * mp.pi) + mp.quad(f, [0, 0.5, 2, 8, 30, mp.inf])


mp.mp.dps = 45
dg_rows = []
for (zr, zi, x) in [(1.3, 0, 0.5), (2, 1, 0.5), (1.7, -0.4, 0.8), (3.5, 2.5, 0.3), (1.0, 0, 1.0), (2.2, 0, 0.7)]:
    v = log_dg(mp.mpc(zr, zi), x)
    dg_rows.append((zr, zi, x, v.real, v.imag))
mp.mp.dps = 40
emit_table("kDoubleGammaCases", dg_rows)

# ---- Bessel K ----
emit_table("kBesselCases", [(u, mp.besselk(0, u), mp.besselk(1, u)) for u in [1e-8, 1e-3, 0.5, 1, 2.5, 10, 55, 300, 700]])

# ---- theory ----
def lgG(x):
    return mp.log(mp.barnesg(x))


def g_beta_ref(y, b):
    q = mp.exp(b * y)
    return mp.quad(lambda t: mp.exp(-t - q * t ** (-b * b)), [0, 0.1, 1, 5, 20, mp.inf])


emit_table("kGBetaCases", [(y, b, g_beta_ref(y, b)) for (y, b) in
                           [(-8, 0.4), (-2, 0.4), (0, 0.6), (1.5, 0.8), (4, 0.6), (0, 1.0), (-3, 1.0), (2, 0.3)]])


def clm_ref(phi, beta):
    f = lambda s: mp.re(mp.exp(-1j * s * phi) * mp.gamma(1 + 1j * s) ** 2 / mp.gamma(1 + 1j * s / beta))
    return mp.quad(f, mp.linspace(0, 60, 31)) / mp.pi


emit_table("kClmCases", [(phi, beta, clm_ref(phi, beta)) for (phi, beta) in [(0, 2), (-2, 2), (2.5, 1.5), (-4, 3)]])


# mesoscopic cumulants from derivatives of log(M(s) Gamma(s)) at s = 1
def logF(s):
    return ((2 * s * s + s - 2) * mp.log(2) - 2 * lgG(2.5) - (s - 1) * mp.log(mp.pi) - mp.loggamma(s + 2)
            + 2 * (mp.log(mp.barnesg(s + 1.5)) - mp.log(mp.barnesg(s))))


emit_table("kMesoCumulants", [(n, mp.diff(logF, 1, n)) for n in range(1, 6)])

# typical scales
b = mp.mpf(0.5)
emit("kLogZe_b05_N64", (1 + b * b) * mp.log(64) + 2 * lgG(1 + b) - lgG(1 + 2 * b) - mp.loggamma(1 - b * b))
x = mp.mpf(0.5)
emit("kLogMuE_x05_N64", -x * x * mp.log(64) + mp.log(mp.sqrt(1 / (mp.pi * mp.log(64)))) + 2 * lgG(1 + x)
     - lgG(1 + 2 * x) - mp.log(2 * x) - mp.loggamma(1 - x * x))

# path integral right-hand side at p=1, beta=0.5, variance = 2 H_512
H = mp.fsum(mp.mpf(1) / n for n in range(1, 513))
ze = mp.exp(b * b * 2 * H / 2) / mp.gamma(1 - b * b)
emit("kPathIntegral_p1_b05_K512",
     mp.quad(lambda t: mp.exp(-t - ze * t ** (-b * b)), [0, 0.1, 1, 5, 20, mp.inf]))
emit("kTwoHarmonic512", 2 * H)


# arithmetic factor: partial products at 30 digits with Richardson extrapolation in 1/(P log P)
def primes(n):
    s = bytearray([1]) * (n + 1)
    s[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if s[i]:
            s[i * i::i] = bytearray(len(s[i * i::i]))
    return [i for i in range(n + 1) if s[i]]


def arith_partial(xv, P, plist):
    mp.mp.dps = 30
    xv = mp.mpf(xv)
    acc = mp.mpf(0)
    for p in plist:
        if p > P:
            break
        c = mp.mpf(1)
        tot = mp.mpf(0)
        pw = mp.mpf(1)
        m = 0
        while True:
            c *= (xv + m) / (m + 1)
            pw /= p
            t = c * c * pw
            tot += t
            m += 1
            if t < mp.mpf(10) ** -28:
                break
        acc += xv * xv * mp.log(1 - mp.mpf(1) / p) + mp.log(1 + tot)
    return acc


plist = primes(1000000)
rows = []
for xv in [0.5, 0.75, 2.0]:
    l1 = arith_partial(xv, 500000, plist)
    l2 = arith_partial(xv, 1000000, plist)
    # log a(P) ~ log a + C/(P log P)
    h1 = 1 / (mp.mpf(500000) * mp.log(500000))
    h2 = 1 / (mp.mpf(1000000) * mp.log(1000000))
    lim = l2 + (l2 - l1) * h2 / (h1 - h2)
    rows.append((xv, mp.exp(lim), mp.exp(l2)))
mp.mp.dps = 40
emit_table("kArithmeticFactor", rows)  # x, extrapolated a(x), partial product to 1e6

# ---- zeta on and near the critical line ----
mp.mp.dps = 30
emit_table("kSiegelTheta", [(t, mp.siegeltheta(t)) for t in [100, 1000, 10000, 1000000]])
emit_table("kZetaHalfLine", [(t, mp.re(mp.zeta(mp.mpc(0.5, t))), mp.im(mp.zeta(mp.mpc(0.5, t))), mp.siegelz(t))
                             for t in [14, 20, 50, 100, 500, 1000, 5000, 10000, 1000000, 36000000]])
emit("kZetaHalf", mp.zeta(0.5))
emit_c("kZetaOnePlus001i", mp.zeta(mp.mpc(1, 0.01)))
emit_c("kZetaComplexA", mp.zeta(mp.mpc(0.8, 30)))
emit_c("kZetaComplexB", mp.zeta(mp.mpc(2.5, -7)))
emit_c("kZetaComplexC", mp.zeta(mp.mpc(0.3, 2000)))
emit("kFirstZero", mp.im(mp.zetazero(1)))
# window [14, 14 + 2 pi]: dense scan at step 1e-3, then Newton on Z'
a = mp.mpf(14)
grid = [a + k * mp.mpf("0.001") for k in range(int(2 * mp.pi / mp.mpf("0.001")) + 1)]
best = max(grid, key=lambda t: abs(mp.siegelz(t)))
tmax = mp.findroot(lambda t: mp.siegelz(t, derivative=1), best)
emit_table("kWindowMaxFirst", [(tmax, abs(mp.siegelz(tmax)))])
# (1/2pi) log(T/2pi) int_T^{T+2pi} Z^2 dt at T = 1e6
T0 = mp.mpf(10) ** 6
# Gauss-Legendre, 12 nodes on each of 160 panels (Z varies on scale ~0.4)
gx, gw = np.polynomial.legendre.leggauss(12)
h = 2 * mp.pi / 160
integral = mp.mpf(0)
for k in range(160):
    c = T0 + h * (k + mp.mpf(0.5))
    integral += sum(mp.mpf(w) * mp.siegelz(c + h / 2 * mp.mpf(x)) ** 2 for x, w in zip(gx, gw)) * h / 2
emit("kZetaPartitionT1e6Beta1", mp.log(mp.log(T0 / (2 * mp.pi)) / (2 * mp.pi) * integral))
emit("kHalfReLogZeta1p001i", mp.re(mp.log(mp.zeta(mp.mpc(1, 0.01)))) / 2)
mp.mp.dps = 40

Path(__file__).resolve().parent.parent.joinpath("oracle_values.hpp").write_text(
    "// Generated by tests/oracles/make_oracles.py. Do not edit.\n#pragma once\n#include <complex>\n\n"
    "namespace oracle {\n" + "\n".join(out) + "\n}  // namespace oracle\n")
print("ok", len(out))

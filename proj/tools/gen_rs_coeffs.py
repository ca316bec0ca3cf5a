#!/usr/bin/env python3
"""Generate Taylor coefficients of the Riemann-Siegel correction terms C0..C4.

The terms are expanded in u = p - 1/2, where p is the fractional part of
sqrt(t / 2pi). Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p) is entire; its
series is built with exact power-series arithmetic at high precision and the
derivative combinations are the classical ones:

  C0 = Psi
  C1 = -Psi'''/(96 pi^2)
  C2 = Psi''/(64 pi^2) + Psi^(6)/(18432 pi^4)
  C3 = -Psi'/(64 pi^2) - Psi^(5)/(3840 pi^4) - Psi^(9)/(5308416 pi^6)
  C4 = Psi/(128 pi^2) + 19 Psi^(4)/(24576 pi^4) + 11 Psi^(8)/(5898240 pi^6)
       + Psi^(12)/(2038431744 pi^8)

Usage: gen_rs_coeffs.py > include/szeta/detail/rs_coeffs.hpp
"""
import mpmath as mp

mp.mp.dps = 120
DEG = 110
pi = mp.pi


def cos_series(scale, power):
    """Series of cos(scale * u^power)."""
    out = [mp.mpf(0)] * (DEG + 1)
    k = 0
    while 2 * k * power <= DEG:
        out[2 * k * power] = (-1) ** k * scale ** (2 * k) / mp.factorial(2 * k)
        k += 1
    return out


def sin_series(scale, power):
    out = [mp.mpf(0)] * (DEG + 1)
    k = 0
    while (2 * k + 1) * power <= DEG:
        out[(2 * k + 1) * power] = (-1) ** k * scale ** (2 * k + 1) / mp.factorial(2 * k + 1)
        k += 1
    return out


def divide(num, den):
    q = [mp.mpf(0)] * (DEG + 1)
    for n in range(DEG + 1):
        acc = num[n]
        for k in range(n):
            acc -= q[k] * den[n - k]
        q[n] = acc / den[0]
    return q


# Psi(u) = -cos(2 pi u^2 - 5 pi / 8) / cos(2 pi u)
c58, s58 = mp.cos(5 * pi / 8), mp.sin(5 * pi / 8)
num = [-(a * c58 + b * s58) for a, b in zip(cos_series(2 * pi, 2), sin_series(2 * pi, 2))]
psi = divide(num, cos_series(2 * pi, 1))


def deriv(series, m):
    return [series[n + m] * mp.factorial(n + m) / mp.factorial(n) if n + m <= DEG else mp.mpf(0)
            for n in range(DEG + 1)]


def combo(terms):
    out = [mp.mpf(0)] * (DEG + 1)
    for weight, m in terms:
        d = deriv(psi, m)
        for n in range(DEG + 1):
            out[n] += weight * d[n]
    return out


terms = [
    combo([(1, 0)]),
    combo([(-1 / (96 * pi ** 2), 3)]),
    combo([(1 / (64 * pi ** 2), 2), (1 / (18432 * pi ** 4), 6)]),
    combo([(-1 / (64 * pi ** 2), 1), (-1 / (3840 * pi ** 4), 5), (-1 / (5308416 * pi ** 6), 9)]),
    combo([(1 / (128 * pi ** 2), 0), (19 / (24576 * pi ** 4), 4), (11 / (5898240 * pi ** 6), 8),
           (1 / (2038431744 * pi ** 8), 12)]),
]

# sanity: C0 series vs closed form
for u in (mp.mpf("0.49"), mp.mpf("-0.37"), mp.mpf("0.1")):
    p = u + mp.mpf(1) / 2
    direct = mp.cos(2 * pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * pi * p)
    approx = sum(c * u ** n for n, c in enumerate(terms[0]))
    assert abs(direct - approx) < mp.mpf("1e-40"), (u, direct - approx)

print("// Generated by tools/gen_rs_coeffs.py; do not edit.")
print("#pragma once")
print()
print("#include <array>")
print("#include <span>")
print()
print("namespace szeta::detail {")
print()
print("// Taylor coefficients of the Riemann-Siegel correction terms in u = p - 1/2.")
for k, series in enumerate(terms):
    # keep coefficients that matter on |u| <= 1/2
    last = max(n for n, c in enumerate(series) if abs(c) * mp.mpf(2) ** (-n) > mp.mpf("1e-24"))
    vals = series[: last + 1]
    print(f"inline constexpr std::array<double, {len(vals)}> kRsC{k} = {{")
    for v in vals:
        print(f"    {mp.nstr(v, 20, min_fixed=-1, max_fixed=-1)},")
    print("};")
print()
print("inline constexpr std::array<std::span<const double>, 5> kRsCorrections = {")
print("    std::span<const double>(kRsC0), std::span<const double>(kRsC1),")
print("    std::span<const double>(kRsC2), std::span<const double>(kRsC3),")
print("    std::span<const double>(kRsC4)};")
print()
print("}  // namespace szeta::detail")

"""Reference values for the unit tests, computed with mpmath at 30 digits.

Run: python3 tests/oracles/oracles.py
The printed values are copied into tests/oracle_values.hpp.
"""
import mpmath as mp

mp.mp.dps = 30


def show(name, value):
    if isinstance(value, mp.mpc):
        print(f"{name} = {mp.nstr(value.real, 20)} {mp.nstr(value.imag, 20)}i")
    else:
        print(f"{name} = {mp.nstr(value, 20)}")


def specfun():
    show("loggamma(0.25+25i)", mp.loggamma(mp.mpc(0.25, 25)))
    show("loggamma(-3.7+0.2i)", mp.loggamma(mp.mpc(-3.7, 0.2)))
    show("gamma(0.5+1i)", mp.gamma(mp.mpc(0.5, 1)))
    show("rgamma(-2.5)", mp.rgamma(-2.5))
    show("hurwitz(3+4i, 1.5)", mp.zeta(mp.mpc(3, 4), 1.5))
    show("hurwitz(-1.5, 2.5)", mp.zeta(-1.5, 2.5))
    show("zeta(0.5+14i)", mp.zeta(mp.mpc(0.5, 14)))
    show("zeta(-2.5+3i)", mp.zeta(mp.mpc(-2.5, 3)))
    show("zeta'(2)", mp.zeta(2, derivative=1))
    show("zeta'/zeta(2)", mp.zeta(2, derivative=1) / mp.zeta(2))
    show("zeta'/zeta(0.5+10i)", mp.zeta(mp.mpc(0.5, 10), derivative=1) / mp.zeta(mp.mpc(0.5, 10)))
    show("log|zeta(0.75)|", mp.log(abs(mp.zeta(0.75))))
    show("(s-1)zeta(s) at 1.001", (mp.mpf("1.001") - 1) * mp.zeta(mp.mpf("1.001")))


def smooth_terms():
    for t in (5, 10, 100, 1000):
        show(f"siegeltheta({t})", mp.siegeltheta(t))
    for t in (14, 100, 1000, 5000.5):
        show(f"siegelz({t})", mp.siegelz(t))
    for n in (0, 100, 1000):
        show(f"grampoint({n})", mp.grampoint(n))
    for k in (1, 2, 29, 5000, 100000):
        show(f"zetazero({k})", mp.zetazero(k).imag)
    # theta(t) = t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760t^3) + ...
    show("theta_1", mp.mpf(1) / 48)
    show("theta_2", mp.mpf(7) / 5760)


def constants():
    show("C1 closed form", mp.mpf(7) / 8 - (1 + mp.log(2 * mp.pi)) / (2 * mp.pi))
    tilde = mp.quad(lambda x: mp.log(abs(mp.zeta(x))), [0.5, 1, 2, 10, mp.inf]) / mp.pi
    show("C~1", tilde)
    # sum over rho of 1/(rho(1-rho)) = 2 + euler - log 4 pi; under RH each pair gives 2/(1/4+gamma^2).
    show("sum 2/(1/4+gamma^2)", 2 + mp.euler - mp.log(4 * mp.pi))


def secondary_zeta():
    mp.mp.dps = 20
    for s in (2, 3, 1.5, mp.mpc(0.5, 5), mp.mpc(2, 10), mp.mpc(-0.5, 3)):
        show(f"G({mp.nstr(s, 5)})", mp.secondzeta(s))
    mp.mp.dps = 30


def super_zeta():
    # explicit formula at alpha = 3, primes up to 2e6, tail ~ N^{-2}
    limit = 2_000_000
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    primes = [p for p in range(2, limit + 1) if sieve[p]]
    mp.mp.dps = 20
    for s in (mp.mpf(2), mp.mpf(1.5), mp.mpc(2.5, 1)):
        acc = mp.mpc(0)
        for p in primes:
            lp = mp.log(p)
            q = p
            while q <= limit:
                lq = mp.log(q)
                acc += lp * lq ** (s - 1) * mp.mpf(q) ** -3
                q *= p
        # beyond the sieve, psi(x) ~ x turns the prime sum into an integral
        acc += mp.quad(lambda x: mp.log(x) ** (s - 1) * x ** -3, [limit, 10 * limit, mp.inf])
        value = 2 ** (-s) - mp.rgamma(s) * acc - 2 ** (-s) * mp.zeta(s, 2.5)
        show(f"M_3({mp.nstr(s, 5)})", value)
    mp.mp.dps = 30
    # kernel integral over the Hankel contour, direct quadrature
    alpha, eps, c = 3, mp.mpf("0.5"), 1
    for n, s in ((2, mp.mpf("0.5")), (3, mp.mpf(2))):
        f = lambda w: mp.power(n, -w) * mp.exp(-s * mp.log(alpha - w))
        upper = mp.quad(lambda x: f(x + 1j * eps), [c, 10, 60])
        lower = mp.quad(lambda x: f(x - 1j * eps), [c, 10, 60])
        arc = mp.quad(lambda ph: f(c + eps * mp.expjpi(ph / mp.pi)) * 1j * eps * mp.expjpi(ph / mp.pi),
                      [mp.pi / 2, mp.pi, 3 * mp.pi / 2])
        lhs = (upper - lower - arc) / (2j * mp.pi)
        show(f"kernel lhs n={n} s={s}", lhs)
        show(f"(log n)^(s-1) n^-3 / Gamma(s)", mp.log(n) ** (s - 1) * mp.mpf(n) ** -3 * mp.rgamma(s))


def dyadic():
    # D(x) = int_1^T |sum_{x<g<=2x} g^(-1/2-it)|^2 dt by Gauss-Legendre panels; table from $SZETA_ZEROS
    import os
    import numpy as np
    g = np.array([float(l) for l in open(os.environ["SZETA_ZEROS"]) if l.strip() and l[0] != "#"])
    nodes, weights = np.polynomial.legendre.leggauss(16)
    for x, T in ((300, 2000), (1000, 2000), (2000, 2000)):
        block = g[(g > x) & (g <= 2 * x)]
        edges = np.arange(1, T + 1e-9, 0.05)
        total = 0.0
        for i in range(0, len(edges) - 1, 200):
            panel = edges[i:i + 201]
            lo, hi = panel[:-1], panel[1:]
            t = ((hi - lo)[:, None] * (nodes + 1) / 2 + lo[:, None]).ravel()
            w = ((hi - lo)[:, None] * weights / 2).ravel()
            total += np.sum(w * np.abs(np.exp(np.outer(t, -1j * np.log(block))) @ block ** -0.5) ** 2)
        print(f"D({x}, {T}) = {total!r}  ratio to x log^2 T = {total / (x * np.log(T) ** 2)!r}")


if __name__ == "__main__":
    import sys
    parts = {"specfun": specfun, "smooth_terms": smooth_terms, "constants": constants,
             "secondary_zeta": secondary_zeta, "super_zeta": super_zeta, "dyadic": dyadic}
    for name in sys.argv[1:] or parts:
        parts[name]()

#!/usr/bin/env python3
"""Generate the high-precision fixture values used by the test suite.

Everything is computed with mpmath at >= 60 decimal digits by direct
summation of the defining series (plus closed forms where they exist),
then frozen to 50 significant digits in tests/fixtures.json.  The Rust
library never sees more than f64, so the frozen strings are simply
parsed and rounded by the tests.

Run from the repository root:

    python3 tools/gen_fixtures.py > crates/convexity-radii/tests/fixtures.json
"""

import json
from mpmath import mp, mpf, mpc, pi, sin, cos, sqrt, gamma, psi

mp.dps = 120

DIGITS = 50


def fmt(x):
    return mp.nstr(x, DIGITS, strip_zeros=False)


# ---------------------------------------------------------------------------
# Series evaluators.
#
# Lommel: s_{mu-1/2,1/2}(z) = z^{mu+1/2}/(mu(mu+1)) * phi0(z) with
#   phi0(z) = sum_n c_n z^{2n},  c_0 = 1,
#   c_{n+1} = c_n * (-1/4) / (((mu+2)/2 + n) ((mu+3)/2 + n)).
# Struve: H_nu(x) = x^{nu+1}/(sqrt(pi) 2^nu Gamma(nu+3/2)) * calH(x) with
#   calH(x) = sum_n d_n x^{2n},  d_0 = 1,
#   d_{n+1} = d_n * (-1/4) / ((3/2 + n)(nu + 3/2 + n)).
# Weighted variants carry the exponent factors of the term-wise derivatives.
# ---------------------------------------------------------------------------

def lommel_coeff(mu, n_max):
    c = [mpf(1)]
    for n in range(n_max):
        c.append(c[-1] * mpf(-1) / (4 * ((mu + 2) / 2 + n) * ((mu + 3) / 2 + n)))
    return c


def struve_coeff(nu, n_max):
    d = [mpf(1)]
    for n in range(n_max):
        d.append(d[-1] * mpf(-1) / (4 * (mpf(3) / 2 + n) * (nu + mpf(3) / 2 + n)))
    return d


def terms_needed(z):
    return 60 + int(2 * abs(z))


def lommel(mu, z, deriv=0):
    """s_{mu-1/2,1/2}^{(deriv)}(z) by term-wise differentiated series."""
    c = lommel_coeff(mu, terms_needed(z))
    s = mpf(0)
    for n, cn in enumerate(c):
        e = mu + mpf(1) / 2 + 2 * n
        w = mpf(1)
        for j in range(deriv):
            w *= e - j
        s += cn * w * z ** (e - deriv)
    return s / (mu * (mu + 1))


def phi0(mu, z):
    c = lommel_coeff(mu, terms_needed(z))
    return sum(cn * z ** (2 * n) for n, cn in enumerate(c))


def struve(nu, x, deriv=0):
    """H_nu^{(deriv)}(x) by term-wise differentiated series."""
    d = struve_coeff(nu, terms_needed(x))
    pref = 1 / (sqrt(pi) * 2 ** nu * gamma(nu + mpf(3) / 2))
    s = mpf(0)
    for n, dn in enumerate(d):
        e = nu + 1 + 2 * n
        w = mpf(1)
        for j in range(deriv):
            w *= e - j
        s += dn * w * x ** (e - deriv)
    return pref * s


def bisect(f, a, b, steps=240):
    fa = f(a)
    for _ in range(steps):
        m = (a + b) / 2
        fm = f(m)
        if fa * fm <= 0:
            b = m
        else:
            a, fa = m, fm
    return (a + b) / 2


def scan_zeros(f, count, step=mpf("0.25"), start=mpf("0.05")):
    zeros = []
    prev, fprev = start, f(start)
    x = start + step
    while len(zeros) < count:
        fx = f(x)
        if fprev * fx < 0:
            zeros.append(bisect(f, prev, x))
        prev, fprev = x, fx
        x += step
    return zeros


# ---------------------------------------------------------------------------
# Curvature functionals (real axis, direct series ratios).
#
# shift(r)  = 1 + r E'(r)/E(r)          E = term-wise derivative series
# power(r)  = shift(r) + (1/(lam) - 1) * r F'(r)/F(r),  F = function series,
#             lam = mu + 1/2 (Lommel) or nu + 1 (Struve)
# sqrt-norm: shift evaluated at sqrt(r).
# ---------------------------------------------------------------------------

def lommel_ratio_parts(mu, r):
    c = lommel_coeff(mu, terms_needed(r))
    lam = mu + mpf(1) / 2
    F = sum(cn * r ** (2 * n) for n, cn in enumerate(c))
    Fp = sum(cn * 2 * n * r ** (2 * n - 1) for n, cn in enumerate(c) if n)
    E = sum(cn * (lam + 2 * n) * r ** (2 * n) for n, cn in enumerate(c))
    Ep = sum(cn * (lam + 2 * n) * 2 * n * r ** (2 * n - 1)
             for n, cn in enumerate(c) if n)
    return F, Fp, E, Ep


def struve_ratio_parts(nu, r):
    d = struve_coeff(nu, terms_needed(r))
    lam = nu + 1
    F = sum(dn * r ** (2 * n) for n, dn in enumerate(d))
    Fp = sum(dn * 2 * n * r ** (2 * n - 1) for n, dn in enumerate(d) if n)
    E = sum(dn * (lam + 2 * n) * r ** (2 * n) for n, dn in enumerate(d))
    Ep = sum(dn * (lam + 2 * n) * 2 * n * r ** (2 * n - 1)
             for n, dn in enumerate(d) if n)
    return F, Fp, E, Ep


def curvature(family, p, norm, r):
    if norm == "sqrt":
        return curvature(family, p, "shift", sqrt(r))
    parts = lommel_ratio_parts(p, r) if family == "lommel" else struve_ratio_parts(p, r)
    F, Fp, E, Ep = parts
    lam = p + mpf(1) / 2 if family == "lommel" else p + 1
    val = 1 + r * Ep / E
    if norm == "power":
        val += (1 / lam - 1) * r * Fp / F
    return val


def solve_radius(family, p, norm, alpha, hi):
    return bisect(lambda r: curvature(family, p, norm, r) - alpha,
                  mpf("1e-30"), hi * (1 - mpf("1e-25")))


def main():
    out = {"digits": DIGITS, "lommel": {}, "struve": {}, "radius": {}}

    # --- Lommel values -----------------------------------------------------
    lo = out["lommel"]
    lo["phi0_mu0.5_z1"] = fmt(phi0(mpf("0.5"), mpf(1)))
    lo["s_mu0.25_z2"] = fmt(lommel(mpf("0.25"), mpf(2)))
    lo["s_mu0.25_z2_d1"] = fmt(lommel(mpf("0.25"), mpf(2), 1))
    lo["s_mu0.5_z1_d2"] = fmt(lommel(mpf("0.5"), mpf(1), 2))
    # large-argument anchors (exercise the asymptotic evaluation path)
    for mu_s, z in (("0.5", 50), ("-0.75", 40), ("0.9", 120)):
        mu = mpf(mu_s)
        for d in (0, 1, 2):
            lo[f"s_mu{mu_s}_z{z}_d{d}"] = fmt(lommel(mu, mpf(z), d))

    for mu_s in ("0.5", "0.25", "-0.25"):
        mu = mpf(mu_s)
        fz = scan_zeros(lambda x: phi0(mu, x), 3)
        lam = mu + mpf(1) / 2
        c = lommel_coeff(mu, 400)

        def eser(x):
            return sum(cn * (lam + 2 * n) * x ** (2 * n) for n, cn in enumerate(c))

        dz = scan_zeros(eser, 1)
        for i, z in enumerate(fz, 1):
            lo[f"xi_mu{mu_s}_{i}"] = fmt(z)
        lo[f"xip_mu{mu_s}_1"] = fmt(dz[0])

    # --- Struve values ------------------------------------------------------
    st = out["struve"]
    # closed forms at nu = 1/2:   H_{1/2}(x) = sqrt(2/(pi x)) (1 - cos x),
    # derivative zeros solve sin(x/2) = 2x cos(x/2) (plus the double zeros
    # of 1 - cos x at 2 pi n, which are zeros of H' as well).
    g = lambda x: sin(x / 2) - 2 * x * cos(x / 2)
    st["hp_nu0.5_1"] = fmt(bisect(g, mpf("1e-9"), pi - mpf("1e-9")))
    st["hp_nu-0.5_1"] = fmt(bisect(lambda x: sin(x) - 2 * x * cos(x),
                                   mpf("1e-9"), pi / 2 - mpf("1e-9")))
    st["H_nu0.25_x1"] = fmt(struve(mpf("0.25"), mpf(1)))
    st["H_nu0.25_x1_d1"] = fmt(struve(mpf("0.25"), mpf(1), 1))
    st["H_nu-0.25_x3_d2"] = fmt(struve(mpf("-0.25"), mpf(3), 2))
    for nu_s, x in (("0.25", 50), ("-0.5", 40), ("0.5", 80)):
        nu = mpf(nu_s)
        for d in (0, 1, 2):
            st[f"H_nu{nu_s}_x{x}_d{d}"] = fmt(struve(nu, mpf(x), d))
    nu = mpf("0.25")
    d = struve_coeff(nu, 400)
    fz = scan_zeros(lambda x: sum(dn * x ** (2 * n) for n, dn in enumerate(d)), 2)
    st["h_nu0.25_1"] = fmt(fz[0])
    st["h_nu0.25_2"] = fmt(fz[1])
    dz = scan_zeros(lambda x: sum(dn * (nu + 1 + 2 * n) * x ** (2 * n)
                                  for n, dn in enumerate(d)), 1)
    st["hp_nu0.25_1"] = fmt(dz[0])

    # --- Radius anchors -----------------------------------------------------
    ra = out["radius"]
    hp_half_1 = mpf(st["hp_nu0.5_1"])
    ra["struve_nu0.5_shift_a0"] = fmt(solve_radius("struve", mpf("0.5"),
                                                   "shift", mpf(0), hp_half_1))
    ra["struve_nu0.5_sqrt_a0"] = fmt(solve_radius("struve", mpf("0.5"),
                                                  "sqrt", mpf(0), hp_half_1 ** 2))
    xip = mpf(lo["xip_mu0.5_1"])
    ra["lommel_mu0.5_power_a0"] = fmt(solve_radius("lommel", mpf("0.5"),
                                                   "power", mpf(0), xip))
    ra["lommel_mu0.5_shift_a0.3"] = fmt(solve_radius("lommel", mpf("0.5"),
                                                     "shift", mpf("0.3"), xip))
    ra["lommel_mu-0.25_shift_a0"] = fmt(solve_radius("lommel", mpf("-0.25"),
                                                     "shift", mpf(0),
                                                     mpf(lo["xip_mu-0.25_1"])))

    # curvature spot values for dual-path tests
    cv = out.setdefault("curvature", {})
    cv["lommel_mu0.5_shift_r0.5"] = fmt(curvature("lommel", mpf("0.5"), "shift", mpf("0.5")))
    cv["lommel_mu0.5_power_r0.5"] = fmt(curvature("lommel", mpf("0.5"), "power", mpf("0.5")))
    cv["struve_nu0.25_power_r1.5"] = fmt(curvature("struve", mpf("0.25"), "power", mpf("1.5")))
    cv["struve_nu0.5_shift_r1.3"] = fmt(curvature("struve", mpf("0.5"), "shift", mpf("1.3")))

    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()

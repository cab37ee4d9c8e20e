#!/usr/bin/env python3
"""Brute-force multiprecision reference values for the test suites.

Everything here is computed straight from defining series or defining
integrals with mpmath at >= 50 significant digits, independently of any
evaluation strategy used by the C++ code.  The output header freezes the
values as double literals.

Usage:  python3 generate_reference_values.py > ../../include/fractel/detail/reference_values.hpp
"""

import sys
import mpmath as mp

LN10 = mp.log(10)


def wright_phi(beta, mu, z):
    """phi(-beta, mu; z) = sum_k z^k / (k! Gamma(-beta k + mu)), plain series.

    Working precision is raised until the cancellation between partial sums
    leaves at least ~45 correct digits in the result.
    """
    beta = mp.mpf(beta)
    mu = mp.mpf(mu)
    z = mp.mpf(z)
    if z == 0:
        return mp.rgamma(mu)
    # crude peak-index estimate for the stopping rule
    kpeak = int((abs(z) * beta ** beta) ** (1 / (1 - beta))) + 8
    dps = 60
    while True:
        with mp.workdps(dps):
            zb = mp.mpf(z)
            term_pow = mp.mpf(1)  # z^k / k!
            total = mp.rgamma(mu)
            max_abs = abs(total)
            small_count = 0
            k = 0
            while k < 400000:
                k += 1
                term_pow = term_pow * zb / k
                term = term_pow * mp.rgamma(mu - beta * k)
                total += term
                if abs(total) > max_abs:
                    max_abs = abs(total)
                if abs(term) < mp.mpf(10) ** (-(dps + 10)) * max(max_abs, mp.mpf(10) ** (-dps)):
                    small_count += 1
                    if small_count >= 5 and k > kpeak:
                        break
                else:
                    small_count = 0
            cancel_digits = mp.log10(max_abs / abs(total)) if total != 0 else mp.inf
            if total != 0 and cancel_digits < dps - 47:
                return +total
        dps = int(dps * 2)
        if dps > 4000:
            raise RuntimeError("wright_phi: precision blow-up at %s %s %s" % (beta, mu, z))


def wright_log10_saddle(beta, r):
    """Leading-order log10 magnitude of phi(-beta, mu; -r) for large r."""
    beta = mp.mpf(beta)
    r = mp.mpf(r)
    sig = (1 - beta) * beta ** (beta / (1 - beta))
    Y = sig * r ** (1 / (1 - beta))
    return float(-Y / LN10)


def dnu_gamma(alpha, b, c, nu, x, y, dps=50):
    """D^nu_{0y} Gamma(x,y) for the telegraph kernel, by direct quadrature of

        (1/2) Int_{|x|}^{inf} 0F1(1; a(tau^2-x^2)) e^{b1 tau} y^{-nu-1}
                              phi(-beta, -nu; -tau y^{-beta}) dtau

    The Wright factor is summed by the series above (termwise Riemann-
    Liouville differentiation of the defining series; the same identity is
    verified against a direct RL integral in check_shift_identity()).
    """
    alpha = mp.mpf(alpha)
    b = mp.mpf(b)
    c = mp.mpf(c)
    x = mp.mpf(x)
    y = mp.mpf(y)
    nu = mp.mpf(nu)
    beta = alpha / 2
    b1 = -b / 2
    a = b1 * b1 - c
    sig = (1 - beta) * beta ** (beta / (1 - beta))
    eps_ = 1 / (1 - beta)

    # upper cutoff: stretched-exponential decay beats every exponential factor
    lam = max(b1, mp.mpf(0)) + 2 * mp.sqrt(max(a, mp.mpf(0)))
    tau_up = abs(x) + 1
    while float(lam * tau_up - sig * (tau_up * y ** (-beta)) ** eps_) > -(dps + 15) * float(LN10):
        tau_up *= mp.mpf(1.25)
        if tau_up > 10 ** 6:
            raise RuntimeError("tau cutoff runaway")

    def integrand(tau):
        h0 = mp.hyp0f1(1, a * (tau * tau - x * x))
        w = wright_phi(beta, -nu, -tau * y ** (-beta))
        return h0 * mp.e ** (b1 * tau) * y ** (-nu - 1) * w

    with mp.workdps(dps):
        pts = [abs(x)]
        step = mp.mpf(1) / 2
        t = abs(x)
        while t < tau_up:
            t = min(t + step, tau_up)
            pts.append(t)
            step *= 2
        val = mp.quad(integrand, pts, maxdegree=8)
        return val / 2


def gamma_fs(alpha, b, c, x, y, dps=50):
    return dnu_gamma(alpha, b, c, 0, x, y, dps)


def check_shift_identity():
    """Sanity check: termwise RL derivative of g equals the direct RL integral.

    D^nu_{0y} g(y,tau) with nu<0 is the integral
        1/Gamma(-nu) Int_0^y g(s,tau) (y-s)^{-nu-1} ds
    and must match e^{b1 tau} y^{-nu-1} phi(-beta, -nu; -tau y^{-beta}).
    """
    beta = mp.mpf("0.4")
    b1 = mp.mpf("-0.25")
    tau = mp.mpf("0.7")
    y = mp.mpf("0.9")
    nu = mp.mpf("-0.6")

    def g(s):
        return mp.e ** (b1 * tau) / s * wright_phi(beta, 0, -tau * s ** (-beta))

    direct = mp.quad(lambda s: g(s) * (y - s) ** (-nu - 1), [0, y / 2, y]) / mp.gamma(-nu)
    shifted = mp.e ** (b1 * tau) * y ** (-nu - 1) * wright_phi(beta, -nu, -tau * y ** (-beta))
    rel = abs(direct - shifted) / abs(shifted)
    if rel > mp.mpf(10) ** (-30):
        raise RuntimeError("shift identity check failed: rel err %s" % mp.nstr(rel, 5))


def dlit(v):
    """Shortest round-tripping double literal."""
    return repr(float(v))


def main():
    mp.mp.dps = 60
    check_shift_identity()

    out = []
    w = out.append
    w("// Reference values computed by tests/oracle/generate_reference_values.py")
    w("// (brute-force multiprecision series and quadrature, >= 50 digits).")
    w("// Regenerate with:  python3 tests/oracle/generate_reference_values.py")
    w("#pragma once")
    w("")
    w("namespace fractel::refvals {")
    w("")
    w("struct WrightRef { double beta, mu, z, value; bool underflow; };")
    w("struct F01Ref { double nu, z, value; };")
    w("struct MlRef { double alpha, z, value; };")
    w("struct KernelRef { double alpha, b, c, nu, x, y, value; };")
    w("")

    betas = [0.25, 0.4, 0.5, 0.75]
    mus = [-1.5, -1.0, -0.5, 0.0, 0.5, 1.0]
    zs = [-30.0, -25.0, -20.0, -15.0, -10.0, -7.0, -5.0, -3.0, -2.0,
          -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0]

    w("inline constexpr WrightRef kWright[] = {")
    for beta in betas:
        for mu in mus:
            for z in zs:
                if z < 0 and wright_log10_saddle(beta, -z) < -360:
                    w("    {%s, %s, %s, 0.0, true}," % (dlit(beta), dlit(mu), dlit(z)))
                    continue
                v = wright_phi(beta, mu, z)
                fv = float(v)
                if fv == 0.0 and v != 0:
                    w("    {%s, %s, %s, 0.0, true}," % (dlit(beta), dlit(mu), dlit(z)))
                else:
                    w("    {%s, %s, %s, %s, false}," % (dlit(beta), dlit(mu), dlit(z), dlit(v)))
        sys.stderr.write("wright beta=%s done\n" % beta)
    w("};")
    w("")

    nus = [0.5, 1.0, 1.5, 2.0, 3.0]
    f01_zs = zs + [-100.0, -400.0, -2000.0, 20.0, 100.0]
    w("inline constexpr F01Ref kF01[] = {")
    for nu in nus:
        for z in f01_zs:
            v = mp.hyp0f1(nu, z)
            w("    {%s, %s, %s}," % (dlit(nu), dlit(z), dlit(v)))
    w("};")
    w("")

    w("inline constexpr MlRef kMittagLeffler[] = {")
    ml_pts = [(1.0, -1.0), (1.5, -2.0), (0.7, -3.0), (1.2, -5.0), (0.5, -0.5),
              (1.9, -4.0), (0.3, -1.5)]
    for alpha, z in ml_pts:
        v = mp.nsum(lambda k: mp.mpf(z) ** k / mp.gamma(mp.mpf(alpha) * k + 1), [0, mp.inf])
        w("    {%s, %s, %s}," % (dlit(alpha), dlit(z), dlit(v)))
    for alpha in [0.5, 1.0, 1.5]:
        for y in [0.25, 0.5, 1.0]:
            z = -mp.mpf(y) ** mp.mpf(alpha)
            v = mp.nsum(lambda k: z ** k / mp.gamma(mp.mpf(alpha) * k + 1), [0, mp.inf])
            w("    {%s, %s, %s}," % (dlit(alpha), dlit(z), dlit(v)))
    w("};")
    w("")

    # Fundamental-solution and D^nu values pinned by direct quadrature.
    kernel_pts = [
        # (alpha, b, c, nu, x, y)
        (1.0, 0.0, 0.0, 0.0, 0.0, 1.0),       # heat kernel 1/(2 sqrt(pi))
        (1.0, 1.0, 0.5, 0.0, 0.5, 0.8),
        (0.8, 0.5, 0.25, 0.0, 0.5, 0.8),
        (1.4, 0.2, 0.3, 0.0, 0.7, 0.5),
        (0.6, 0.3, 0.1, 0.0, 0.3, 0.6),
        (1.0, 0.6, 0.2, 0.0, 0.7, 0.4),       # green_half pin, image 1
        (1.0, 0.6, 0.2, 0.0, 1.3, 0.4),       # green_half pin, image 2
        (1.0, 1.0, 0.0, 0.0, 0.5, 0.4),       # initial-kernel pin, D^0 part
        (1.0, 1.0, 0.0, -0.5, 0.5, 0.4),      # initial-kernel pin, D^{beta-1} part
        (0.8, 0.5, 0.25, -0.2, 0.5, 0.8),     # D^{alpha-1}
        (0.8, 0.5, 0.25, -0.6, 0.5, 0.8),     # D^{beta-1}
        (1.4, 0.2, 0.3, 0.4, 0.7, 0.5),       # D^{alpha-1}, nu > 0
    ]
    w("inline constexpr KernelRef kKernel[] = {")
    for (alpha, b, c, nu, x, y) in kernel_pts:
        v = dnu_gamma(alpha, b, c, nu, x, y)
        w("    {%s, %s, %s, %s, %s, %s, %s}," %
          (dlit(alpha), dlit(b), dlit(c), dlit(nu), dlit(x), dlit(y), dlit(v)))
        sys.stderr.write("kernel %s done\n" % str((alpha, b, c, nu, x, y)))
    w("};")
    w("")

    # a few scalar anchors
    w("inline constexpr double kRecipGammaHalf       = %s;  // 1/Gamma(1/2)" % dlit(mp.rgamma(mp.mpf(1) / 2)))
    w("inline constexpr double kRecipGammaNegQuarter = %s;  // 1/Gamma(-1/4)" % dlit(mp.rgamma(mp.mpf(-1) / 4)))
    w("inline constexpr double kWrightHalfHalfm1     = %s;  // phi(-1/2,1/2;-1)" % dlit(wright_phi(0.5, 0.5, -1)))
    w("inline constexpr double kI0Of2                = %s;  // 0F1(1;1)  = I0(2)" % dlit(mp.hyp0f1(1, 1)))
    w("inline constexpr double kJ0Of2                = %s;  // 0F1(1;-1) = J0(2)" % dlit(mp.hyp0f1(1, -1)))
    w("inline constexpr double kHeatKernel01         = %s;  // 1/(2 sqrt(pi))" % dlit(1 / (2 * mp.sqrt(mp.pi))))
    w("")
    w("}  // namespace fractel::refvals")
    print("\n".join(out))


if __name__ == "__main__":
    main()

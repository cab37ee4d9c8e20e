#pragma once

#include "fractel/errors.hpp"

namespace fractel::specfun {

/// Summation mode for the power series branches.
enum class Summation { standard, compensated };

/// Configuration for evaluating the Wright function phi(-beta, mu; z).
///
/// The series branch is used for |z| below asym_threshold; beyond it the
/// value is produced by the saddle-point branch, whose magnitude follows the
/// stretched-exponential decay exp(-sigma(beta) |z|^{1/(1-beta)}).
struct WrightEval {
    double beta = 0.5;            // delta = -beta, 0 < beta < 1
    double series_tol = 1e-12;    // relative tolerance
    int max_terms = 4096;
    double asym_threshold = 0.0;  // |z| where the saddle branch takes over
    Summation working_precision = Summation::compensated;

    static WrightEval make(double beta);
    static WrightEval make(double beta, double series_tol, int max_terms,
                           double asym_threshold, Summation mode);
};

/// Configuration for the confluent hypergeometric limit 0F1(nu; z).
struct F01Eval {
    double series_tol = 1e-12;
    int max_terms = 4096;

    static F01Eval make(double series_tol = 1e-12, int max_terms = 4096);
};

/// Sign/log-magnitude pair; sign == 0 encodes an exact (or underflowed) zero.
struct LogValue {
    double log_abs;
    int sign;

    double value() const;
};

/// 1/Gamma(x).  Exactly zero at the poles x = 0, -1, -2, ...; finite
/// everywhere else a double can represent the result.
double recip_gamma(double x);

/// Wright function phi(-cfg.beta, mu; z) = sum_k z^k / (k! Gamma(-beta k + mu)).
double wright_phi(const WrightEval& cfg, double mu, double z);

/// Same value in sign/log form (needed where magnitudes leave double range).
LogValue wright_phi_log(const WrightEval& cfg, double mu, double z);

/// d/dz phi(-beta, mu; z); equals phi(-beta, mu - beta; z).
double wright_phi_dz(const WrightEval& cfg, double mu, double z);

/// 0F1(nu; z) = sum_k Gamma(nu)/Gamma(k+nu) z^k / k!.
double f01(const F01Eval& cfg, double nu, double z);

/// Sign/log form of 0F1 (for z >> 1 where the value overflows double).
LogValue f01_log(const F01Eval& cfg, double nu, double z);

/// Mittag-Leffler function E_alpha(z) on alpha in (0,2), z <= 0.
/// Test-oracle quality: relative error <= 1e-10 inside the validated range.
double mittag_leffler(double alpha, double z);

/// sigma(beta) = (1-beta) beta^{beta/(1-beta)}: the coefficient of the
/// stretched-exponential decay of phi(-beta, mu; -r) in r^{1/(1-beta)}.
double stretched_decay_rate(double beta);

/// Conservative upper bound for log |phi(-beta, mu; -r)|, r >= 0.
double wright_log_bound(double beta, double mu, double r);

}  // namespace fractel::specfun

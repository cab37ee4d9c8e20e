#include "fractel/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "fractel/detail/dd.hpp"
#include "fractel/quadrature.hpp"

namespace fractel::specfun {

namespace {

using detail::DD;
using std::complex;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogTiny = -708.0;   // below this, exp() underflows to 0
// Estimated cancellation ratio (max partial sum / result) at which the
// series branch stops meeting a 1e-10 accuracy budget in double precision.
constexpr double kCancelCap = 2.5e4;

// sin(pi x) without the argument-reduction error of sin(M_PI*x).
double sinpi(double x) {
    double r = std::remainder(x, 2.0);  // r in [-1, 1]
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// log(1+w) and exp(w)-1 for complex w, stable near w = 0.
complex<double> clog1p(complex<double> w) {
    if (std::abs(w) < 1e-4) {
        // w - w^2/2 + w^3/3 - w^4/4 + w^5/5
        complex<double> w2 = w * w;
        return w * (1.0 - w / 2.0 + w2 / 3.0 - w2 * w / 4.0 + w2 * w2 / 5.0);
    }
    return std::log(1.0 + w);
}

struct SeriesResult {
    double value = 0.0;
    double sum_abs = 0.0;  // sum of |terms|
    bool converged = false;
};

// Plain/compensated Taylor series of phi(-beta, mu; z).
SeriesResult wright_series(const WrightEval& cfg, double mu, double z) {
    SeriesResult out;
    DD pow_term(1.0);  // z^k / k!
    DD sum(recip_gamma(mu));
    double sum_abs = std::fabs(sum.hi);
    const bool dd_mode = cfg.working_precision == Summation::compensated;
    const double peak = std::pow(std::fabs(z) * std::pow(cfg.beta, cfg.beta),
                                 1.0 / (1.0 - cfg.beta));
    const int k_min = static_cast<int>(peak) + 8;
    int small_run = 0;
    for (int k = 1; k <= cfg.max_terms; ++k) {
        if (dd_mode) {
            pow_term = detail::div(detail::mul(pow_term, z), static_cast<double>(k));
        } else {
            pow_term.hi = pow_term.hi * z / k;
            pow_term.lo = 0.0;
        }
        const double arg = mu - cfg.beta * k;
        if (arg < -170.0) {
            // 1/Gamma(arg) would leave double range; inside the series branch
            // envelope this only happens deep in the negligible tail.
            if (std::fabs(pow_term.hi) * 1e300 < 1e-3 * sum_abs || pow_term.hi == 0.0) {
                out.converged = true;
                break;
            }
            return out;  // not converged: caller decides what to do
        }
        const double rg = recip_gamma(arg);
        DD term = dd_mode ? detail::mul(pow_term, rg) : DD(pow_term.hi * rg);
        sum = dd_mode ? detail::add(sum, term) : DD(sum.hi + term.hi);
        const double at = std::fabs(term.hi);
        sum_abs += at;
        if (at <= 0.01 * cfg.series_tol * std::fabs(sum.value()) + 1e-320) {
            if (++small_run >= 3 && k >= k_min) {
                out.converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    out.value = sum.value();
    out.sum_abs = sum_abs;
    return out;
}

// --- saddle-point contour branch ------------------------------------------
//
// phi(-beta, mu; -r) = (1/2 pi i) Int_Ha s0^{1-mu} t^{-mu}
//                        exp(s0 (t - t^beta/beta)) dt,   s0 = (beta r)^{1/(1-beta)},
// evaluated on the steepest-descent path t(theta) = rho(theta) e^{i theta},
// rho = (sin(beta theta)/(beta sin theta))^{1/(1-beta)}, theta in (-pi, pi).
// On that path Im(t - t^beta/beta) = 0, so there is no oscillation and the
// quadrature keeps full relative accuracy after the factor e^{-Y} is pulled
// out, Y = s0 (1-beta)/beta.

// rho and d(rho)/d(theta); series used near theta = 0 where the ratio is 0/0.
void contour_point(double beta, double theta, double& rho, double& drho) {
    const double inv1mb = 1.0 / (1.0 - beta);
    if (theta < 1e-5) {
        const double c2 = (1.0 + beta) / 6.0;  // rho = 1 + c2 th^2 + O(th^4)
        rho = 1.0 + c2 * theta * theta;
        drho = 2.0 * c2 * theta;
        return;
    }
    const double ratio = std::sin(beta * theta) / (beta * std::sin(theta));
    rho = std::pow(ratio, inv1mb);
    // d log rho / d theta = inv1mb * (beta cot(beta theta) - cot(theta))
    double diff;
    if (theta < 1e-3) {
        diff = theta * (1.0 - beta * beta) / 3.0 +
               theta * theta * theta * (1.0 - beta * beta * beta * beta) / 45.0;
    } else {
        diff = beta * std::cos(beta * theta) / std::sin(beta * theta) -
               std::cos(theta) / std::sin(theta);
    }
    drho = rho * inv1mb * diff;
}

// psi(t) - psi(1) with psi(t) = t - t^beta/beta, stable near t = 1.
complex<double> psi_shifted(double beta, complex<double> t) {
    const complex<double> u = t - 1.0;
    // (1+u)^beta - 1 = expm1(beta log1p(u))
    const complex<double> w = beta * clog1p(u);
    complex<double> em1;
    if (std::abs(w) < 1e-4) {
        em1 = w * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0)));
    } else {
        em1 = std::exp(w) - 1.0;
    }
    return u - em1 / beta;
}

LogValue wright_contour_log(const WrightEval& cfg, double mu, double r) {
    const double beta = cfg.beta;
    const double s0 = std::pow(beta * r, 1.0 / (1.0 - beta));
    const double big_y = s0 * (1.0 - beta) / beta;
    const double log_pref = (1.0 - mu) * std::log(s0);

    // clip the path where exp(s0 Re(psi - psi(1))) is negligible
    auto decay = [&](double theta) {
        double rho, drho;
        contour_point(beta, theta, rho, drho);
        const complex<double> t = std::polar(rho, theta);
        return s0 * psi_shifted(beta, t).real();
    };
    const double log_clip = std::log(0.05 * cfg.series_tol) - 6.0;
    double theta_max = kPi - 1e-9;
    if (decay(theta_max) < log_clip)
        theta_max = quad::tail_cutoff(decay, 1e-6, log_clip);

    auto integrand = [&](double theta) -> complex<double> {
        double rho, drho;
        contour_point(beta, theta, rho, drho);
        const complex<double> eit = std::polar(1.0, theta);
        const complex<double> t = rho * eit;
        const complex<double> dt = (drho + complex<double>(0.0, rho)) * eit;
        const complex<double> tpmu =
            std::polar(std::pow(rho, -mu), -mu * theta);  // t^{-mu}, principal branch
        return tpmu * std::exp(s0 * psi_shifted(beta, t)) * dt;
    };

    // seed panels on the saddle width scale
    const double width = std::sqrt(2.0 / std::max(s0 * (1.0 - beta), 1e-8));
    std::vector<double> breaks;
    for (double w = width; w < theta_max; w *= 2.0) breaks.push_back(w);

    QuadratureConfig qc;
    qc.rel_tol = std::max(1e-14, 0.05 * cfg.series_tol);
    qc.abs_tol = 1e-280;
    qc.max_panels = 600;
    const complex<double> integral = quad::integrate(integrand, 0.0, theta_max, qc, breaks);
    const double im = integral.imag() / kPi;

    LogValue lv;
    if (im == 0.0) {
        lv = {-std::numeric_limits<double>::infinity(), 0};
        return lv;
    }
    lv.log_abs = log_pref - big_y + std::log(std::fabs(im));
    lv.sign = im > 0.0 ? 1 : -1;
    return lv;
}

LogValue log_from_value(double v) {
    if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
}

void validate(const WrightEval& cfg) {
    if (!(cfg.beta > 0.0 && cfg.beta < 1.0))
        throw ConfigError("WrightEval: beta must lie in (0,1)");
    if (!(cfg.series_tol > 0.0)) throw ConfigError("WrightEval: series_tol must be > 0");
    if (cfg.max_terms < 32) throw ConfigError("WrightEval: max_terms must be >= 32");
    if (!(cfg.asym_threshold > 0.0))
        throw ConfigError("WrightEval: asym_threshold must be > 0");
}

}  // namespace

double stretched_decay_rate(double beta) {
    return (1.0 - beta) * std::pow(beta, beta / (1.0 - beta));
}

WrightEval WrightEval::make(double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("WrightEval: beta must lie in (0,1)");
    WrightEval cfg;
    cfg.beta = beta;
    // Smallest |z| where the estimated series cancellation exp(2 sigma |z|^eps)
    // exceeds the double-precision budget kCancelCap.
    const double y_cap = 0.5 * std::log(kCancelCap);
    cfg.asym_threshold = std::pow(y_cap / stretched_decay_rate(beta), 1.0 - beta);
    return cfg;
}

WrightEval WrightEval::make(double beta, double series_tol, int max_terms,
                            double asym_threshold, Summation mode) {
    WrightEval cfg = make(beta);
    cfg.series_tol = series_tol;
    cfg.max_terms = max_terms;
    if (asym_threshold > 0.0) cfg.asym_threshold = asym_threshold;
    cfg.working_precision = mode;
    validate(cfg);
    return cfg;
}

double LogValue::value() const {
    if (sign == 0) return 0.0;
    if (log_abs > 709.0) return sign * std::numeric_limits<double>::infinity();
    return sign * std::exp(log_abs);
}

double recip_gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("recip_gamma: argument must be finite");
    if (is_nonpositive_integer(x)) return 0.0;
    if (x >= 0.5) {
        if (x > 178.0) return 0.0;  // 1/Gamma underflows
        return 1.0 / std::tgamma(x);
    }
    // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    const double s = sinpi(x);
    if (1.0 - x <= 170.0) return std::tgamma(1.0 - x) * s / kPi;
    const double lg = std::lgamma(1.0 - x);
    const double lv = lg + std::log(std::fabs(s) / kPi);
    const double mag = lv > 709.0 ? std::numeric_limits<double>::infinity() : std::exp(lv);
    return s > 0.0 ? mag : -mag;
}

LogValue wright_phi_log(const WrightEval& cfg, double mu, double z) {
    validate(cfg);
    if (!std::isfinite(z) || !std::isfinite(mu))
        throw DomainError("wright_phi: arguments must be finite");
    if (z == 0.0) return log_from_value(recip_gamma(mu));

    if (z <= -cfg.asym_threshold) return wright_contour_log(cfg, mu, -z);

    SeriesResult sr = wright_series(cfg, mu, z);
    if (sr.converged) {
        const double cancel = sr.value == 0.0
                                  ? std::numeric_limits<double>::infinity()
                                  : sr.sum_abs / std::fabs(sr.value);
        if (cancel <= kCancelCap) return log_from_value(sr.value);
        // cancellation beyond budget: fall back to the contour for z < 0
        if (z < 0.0) return wright_contour_log(cfg, mu, -z);
        const double eps_term = cfg.working_precision == Summation::compensated ? 3e-31 : 3e-16;
        if (eps_term * sr.sum_abs <= cfg.series_tol * std::fabs(sr.value))
            return log_from_value(sr.value);
        throw NonConvergence("wright_phi: series cancellation exceeds tolerance at z = " +
                             std::to_string(z));
    }
    if (z < 0.0) return wright_contour_log(cfg, mu, -z);
    throw NonConvergence("wright_phi: series did not converge within max_terms at z = " +
                         std::to_string(z));
}

double wright_phi(const WrightEval& cfg, double mu, double z) {
    return wright_phi_log(cfg, mu, z).value();
}

double wright_phi_dz(const WrightEval& cfg, double mu, double z) {
    return wright_phi(cfg, mu - cfg.beta, z);
}

namespace {

void validate(const F01Eval& cfg) {
    if (!(cfg.series_tol > 0.0)) throw ConfigError("F01Eval: series_tol must be > 0");
    if (cfg.max_terms < 32) throw ConfigError("F01Eval: max_terms must be >= 32");
}

// 0F1 series; all terms positive for z > 0, alternating for z < 0.
double f01_series(const F01Eval& cfg, double nu, double z) {
    DD term(1.0);
    DD sum(1.0);
    for (int k = 1; k <= cfg.max_terms; ++k) {
        term = detail::div(detail::mul(term, z), static_cast<double>(k) * (nu + k - 1.0));
        sum = detail::add(sum, term);
        if (std::fabs(term.hi) <= 0.01 * cfg.series_tol * std::fabs(sum.value()) + 1e-320 &&
            k > std::sqrt(std::fabs(z)) + 4.0)
            return sum.value();
    }
    throw NonConvergence("f01: series did not converge within max_terms");
}

// J_p(x) for possibly negative non-integer p in (-1, 0) via the reflection
// J_{-s} = J_s cos(s pi) - Y_s sin(s pi).
double bessel_j_any(double p, double x) {
    if (p >= 0.0) return std::cyl_bessel_j(p, x);
    const double s = -p;
    return std::cyl_bessel_j(s, x) * std::cos(s * kPi) - std::cyl_neumann(s, x) * std::sin(s * kPi);
}

constexpr double kF01SeriesFloor = -36.0;  // series handles z >= this

}  // namespace

F01Eval F01Eval::make(double series_tol, int max_terms) {
    F01Eval cfg{series_tol, max_terms};
    validate(cfg);
    return cfg;
}

double f01(const F01Eval& cfg, double nu, double z) {
    validate(cfg);
    if (!(nu > 0.0)) throw DomainError("f01: nu must be positive");
    if (!std::isfinite(z)) throw DomainError("f01: z must be finite");
    if (z >= kF01SeriesFloor) return f01_series(cfg, nu, z);
    // deep oscillatory range: 0F1(nu; z) = Gamma(nu) (-z)^{(1-nu)/2} J_{nu-1}(2 sqrt(-z))
    const double x = 2.0 * std::sqrt(-z);
    return std::tgamma(nu) * std::pow(-z, 0.5 * (1.0 - nu)) * bessel_j_any(nu - 1.0, x);
}

LogValue f01_log(const F01Eval& cfg, double nu, double z) {
    validate(cfg);
    if (!(nu > 0.0)) throw DomainError("f01: nu must be positive");
    if (z <= 1e4) {
        double v = f01(cfg, nu, z);
        if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
        return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
    }
    // large positive argument: 0F1(nu; z) = Gamma(nu) z^{(1-nu)/2} I_{nu-1}(2 sqrt z),
    // I_p(x) ~ e^x/sqrt(2 pi x) (1 - a1/x + a2/x^2 - a3/x^3), a_k from 4p^2.
    const double p = nu - 1.0;
    const double x = 2.0 * std::sqrt(z);
    const double m = 4.0 * p * p;
    const double a1 = (m - 1.0) / 8.0;
    const double a2 = (m - 1.0) * (m - 9.0) / 128.0;
    const double a3 = (m - 1.0) * (m - 9.0) * (m - 25.0) / 3072.0;
    const double corr = 1.0 - a1 / x + a2 / (x * x) - a3 / (x * x * x);
    const double log_i = x - 0.5 * std::log(2.0 * kPi * x) + std::log(corr);
    return {std::lgamma(nu) + 0.5 * (1.0 - nu) * std::log(z) + log_i, 1};
}

double mittag_leffler(double alpha, double z) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw DomainError("mittag_leffler: alpha must lie in (0,2)");
    if (!(z <= 0.0)) throw DomainError("mittag_leffler: only z <= 0 is supported");
    DD pow_term(1.0);
    DD sum(1.0);  // k = 0 term: 1/Gamma(1) = 1
    double sum_abs = 1.0;
    for (int k = 1; k <= 20000; ++k) {
        pow_term = detail::div(detail::mul(pow_term, z), 1.0);
        // term = z^k / Gamma(alpha k + 1); accumulate z^k first, scale after
        const double rg = recip_gamma(alpha * k + 1.0);
        DD term = detail::mul(pow_term, rg);
        sum = detail::add(sum, term);
        sum_abs += std::fabs(term.hi);
        if (std::fabs(term.hi) < 1e-22 * std::fabs(sum.value()) + 1e-320 &&
            k > std::pow(std::fabs(z), 1.0 / alpha) + 4.0) {
            if (3e-31 * sum_abs > 1e-10 * std::fabs(sum.value()))
                throw NonConvergence("mittag_leffler: cancellation outside validated range");
            return sum.value();
        }
    }
    throw NonConvergence("mittag_leffler: series did not converge");
}

double wright_log_bound(double beta, double mu, double r) {
    if (r <= 0.0) return std::log(3.0);
    const double sigma = stretched_decay_rate(beta);
    const double y = sigma * std::pow(r, 1.0 / (1.0 - beta));
    const double s0 = y * beta / (1.0 - beta);
    const double pw = std::max(0.0, 0.5 - mu) + 0.5;
    return std::log(6.0 / std::sqrt(2.0 * kPi * (1.0 - beta)) + 3.0) +
           pw * std::log1p(s0) - y;
}

}  // namespace fractel::specfun

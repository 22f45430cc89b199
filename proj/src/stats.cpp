#include "mhg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mhg/errors.hpp"

namespace mhg {

namespace {

int nonnegative_integer_or_throw(double c, const char* what) {
    const double r = std::nearbyint(c);
    if (r < 0.0 || std::abs(c - r) > 1e-9 * std::max(1.0, std::abs(c)))
        throw UsageError(std::string(what) + " must be a nonnegative integer, got " + std::to_string(c));
    return static_cast<int>(r);
}

double laguerre_log_prefactor(const EnsembleParams& p) {
    const double alpha = p.alpha();
    const double shift = (p.n - 1) / alpha + 1.0;
    return log_mv_gamma(alpha, p.n, shift) - log_mv_gamma(alpha, p.n, p.a + shift);
}

}  // namespace

void EnsembleParams::validate_laguerre() const {
    if (n < 1) throw UsageError("ensemble size n must be at least 1");
    if (!(beta > 0.0)) throw UsageError("beta must be positive");
    if (!(a > beta * (n - 1) / 2.0)) throw UsageError("Laguerre parameter a must exceed beta (n - 1) / 2");
}

void EnsembleParams::validate_wishart() const {
    if (n < 1) throw UsageError("ensemble size n must be at least 1");
    if (l <= n) throw UsageError("Wishart degrees of freedom l must exceed n");
    if (static_cast<int>(sigma_eigs.size()) != n)
        throw UsageError("expected " + std::to_string(n) + " covariance eigenvalues");
    for (double s : sigma_eigs)
        if (!(s > 0.0) || !std::isfinite(s)) throw UsageError("covariance eigenvalues must be positive");
}

double log_mv_gamma(double alpha, int n, double c) {
    if (!(alpha > 0.0) || n < 1) throw UsageError("log_mv_gamma requires alpha > 0 and n >= 1");
    if (!(c > (n - 1) / alpha)) throw UsageError("log_mv_gamma requires c > (n - 1) / alpha");
    double r = n * (n - 1) / (2.0 * alpha) * std::log(std::numbers::pi);
    for (int i = 1; i <= n; ++i) r += std::lgamma(c - (i - 1) / alpha);
    return r;
}

double mv_gamma(double alpha, int n, double c) { return std::exp(log_mv_gamma(alpha, n, c)); }

double lmax_cdf_laguerre(double x, const EnsembleParams& params, int m) {
    params.validate_laguerre();
    if (x < 0.0) throw UsageError("lmax_cdf_laguerre requires x >= 0");
    if (x == 0.0) return 0.0;
    const double alpha = params.alpha();
    const int n = params.n;
    const double shift = (n - 1) / alpha + 1.0;
    SeriesParameters sp{alpha, {shift}, {params.a + shift}, m};
    const double half = x / 2.0;
    const double f = hg_identity(sp, n, std::span<const double>(&half, 1)).front().value;
    const double log_rest = laguerre_log_prefactor(params) + params.a * n * std::log(half) - n * half;
    return std::exp(log_rest + std::log(f));
}

double lmax_cdf_laguerre_direct(double x, const EnsembleParams& params, int m) {
    params.validate_laguerre();
    if (x < 0.0) throw UsageError("lmax_cdf_laguerre_direct requires x >= 0");
    if (x == 0.0) return 0.0;
    const double alpha = params.alpha();
    const int n = params.n;
    const double shift = (n - 1) / alpha + 1.0;
    SeriesParameters sp{alpha, {params.a}, {params.a + shift}, m};
    const double arg = -x / 2.0;
    const double f = hg_identity(sp, n, std::span<const double>(&arg, 1)).front().value;
    return std::exp(laguerre_log_prefactor(params) + params.a * n * std::log(x / 2.0)) * f;
}

double lmax_cdf_wishart(double x, const EnsembleParams& params, int m, Kernel kernel) {
    params.validate_wishart();
    if (x < 0.0) throw UsageError("lmax_cdf_wishart requires x >= 0");
    if (x == 0.0) return 0.0;
    const int n = params.n;
    const double l = params.l;
    std::vector<double> arg(params.sigma_eigs.size());
    double log_det = 0.0;
    double trace = 0.0;
    for (std::size_t i = 0; i < arg.size(); ++i) {
        arg[i] = x / (2.0 * params.sigma_eigs[i]);
        log_det += std::log(arg[i]);
        trace += arg[i];
    }
    SeriesParameters sp{2.0, {(n + 1) / 2.0}, {(n + l + 1) / 2.0}, m};
    const double f = hg_general(sp, arg, std::nullopt, kernel).value;
    const double log_pref = log_mv_gamma(2.0, n, (n + 1) / 2.0) - log_mv_gamma(2.0, n, (l + n + 1) / 2.0);
    return std::exp(log_pref + l / 2.0 * log_det - trace + std::log(f));
}

int lmin_termination_degree(const EnsembleParams& params) {
    params.validate_laguerre();
    const int c = nonnegative_integer_or_throw(params.a - params.beta * (params.n - 1) / 2.0 - 1.0,
                                               "c = a - beta (n - 1) / 2 - 1");
    return c * (params.n - 1);
}

double lmin_pdf_laguerre(double x, const EnsembleParams& params) {
    const int degree = lmin_termination_degree(params);
    const int n = params.n;
    const int c = n > 1 ? degree / (n - 1)
                        : nonnegative_integer_or_throw(params.a - 1.0, "c = a - beta (n - 1) / 2 - 1");
    if (x < 0.0) throw UsageError("lmin_pdf_laguerre requires x >= 0");
    if (x == 0.0) return c == 0 ? 1.0 : 0.0;
    // The 2F0 is homogeneous by degree: its degree-k sum at -2/x is
    // D_k (-2)^k x^{-k}, with D_k the degree sum at argument one. Folding
    // x^{cn} into each term keeps every power nonnegative and avoids
    // 0 * inf at extreme x.
    std::vector<double> sums{1.0};
    if (n > 1) {
        SeriesParameters sp{params.alpha(), {-static_cast<double>(c), params.beta * n / 2.0 + 1.0}, {}, degree};
        const double one = 1.0;
        sums = hg_identity(sp, n - 1, std::span<const double>(&one, 1)).front().degree_sums;
    }
    const double log_x = std::log(x);
    double f = 0.0;
    for (std::size_t k = 0; k < sums.size(); ++k) {
        const double power = static_cast<double>(c) * n - static_cast<double>(k);
        f += sums[k] * std::pow(-2.0, static_cast<double>(k)) * std::exp(power * log_x - n * x / 2.0);
    }
    return f;
}

double lmin_pdf_normalization(const EnsembleParams& params) {
    const double mass = integrate_half_line([&](double x) { return lmin_pdf_laguerre(x, params); });
    return 1.0 / mass;
}

TraceDensity::TraceDensity(const EnsembleParams& params, int m, Kernel kernel) {
    params.validate_wishart();
    const auto [lo, hi] = std::minmax_element(params.sigma_eigs.begin(), params.sigma_eigs.end());
    lambda_ = 2.0 * *lo * *hi / (*lo + *hi);
    shape_ = params.l * params.n / 2.0;
    log_det_ = 0.0;
    std::vector<double> y;
    y.reserve(params.sigma_eigs.size());
    for (double s : params.sigma_eigs) {
        log_det_ -= params.l / 2.0 * std::log(s / lambda_);
        y.push_back(1.0 - lambda_ / s);
    }
    const double half_l = params.l / 2.0;
    series_ = hg_custom(
        m, 2.0,
        [half_l](const Partition& kappa) {
            return pochhammer(half_l, kappa, 2.0) / std::tgamma(kappa.weight() + 1.0);
        },
        y, kernel);
    diagnostic_ = convergence_diagnostic(series_);
}

double TraceDensity::operator()(double u) const {
    if (!(u > 0.0)) return 0.0;
    const double scale = 2.0 * lambda_;
    double s = 0.0;
    for (std::size_t k = 0; k < series_.degree_sums.size(); ++k) {
        const double r = shape_ + static_cast<double>(k);
        const double log_g = -u / scale + (r - 1.0) * std::log(u) - r * std::log(scale) - std::lgamma(r);
        s += std::exp(log_g) * series_.degree_sums[k];
    }
    return std::exp(log_det_) * s;
}

double trace_pdf_wishart(double u, const EnsembleParams& params, int m) { return TraceDensity(params, m)(u); }

std::vector<double> sample_wishart_trace(const EnsembleParams& params, std::size_t count, std::uint64_t seed) {
    params.validate_wishart();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> out(count);
    for (auto& v : out) {
        double tr = 0.0;
        for (double sigma : params.sigma_eigs) {
            double sq = 0.0;
            for (int i = 0; i < params.l; ++i) {
                const double z = normal(rng);
                sq += z * z;
            }
            tr += sigma * sq;
        }
        v = tr;
    }
    return out;
}

double integrate_half_line(const std::function<double(double)>& f) {
    double peak = 0.0;
    double upper = 0.0;
    bool past_peak = false;
    for (double x = 1e-3; x < 1e7; x *= 1.05) {
        const double v = std::abs(f(x));
        if (v > peak) {
            peak = v;
            past_peak = false;
        } else if (peak > 0.0) {
            past_peak = true;
        }
        if (past_peak && v < 1e-12 * peak) {
            upper = x;
            break;
        }
    }
    if (upper == 0.0) throw UsageError("integrand does not decay on [0, 1e7]");
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 61>::integrate(f, 0.0, upper, 20, 1e-13);
}

}  // namespace mhg

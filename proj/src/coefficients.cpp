#include "mhg/coefficients.hpp"

#include <cmath>
#include <string>

#include "mhg/errors.hpp"

namespace mhg {

namespace {

void require_box(const Partition& kappa, int i, int j) {
    if (!kappa.contains_box(i, j))
        throw UsageError("box (" + std::to_string(i) + "," + std::to_string(j) + ") is not in " + kappa.to_string());
}

[[noreturn]] void throw_pole(std::size_t which, int i, int j, std::span<const int> parts) {
    std::string s = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + std::to_string(parts[k]);
    throw PoleError("pole: denominator parameter b_" + std::to_string(which + 1) + " vanishes at box (" +
                    std::to_string(i) + "," + std::to_string(j) + ") of " + s + ")");
}

}  // namespace

void SeriesParameters::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw UsageError("alpha must be a positive finite number");
    if (m < 0) throw UsageError("truncation degree m must be nonnegative");
    for (double v : a)
        if (!std::isfinite(v)) throw UsageError("numerator parameters must be finite");
    for (double v : b)
        if (!std::isfinite(v)) throw UsageError("denominator parameters must be finite");
}

double hook_upper(const Partition& kappa, int i, int j, double alpha) {
    require_box(kappa, i, j);
    return kappa.conjugate_part(j) - i + alpha * (kappa.part(i) - j + 1);
}

double hook_lower(const Partition& kappa, int i, int j, double alpha) {
    require_box(kappa, i, j);
    return kappa.conjugate_part(j) - i + 1 + alpha * (kappa.part(i) - j);
}

double pochhammer(double a, const Partition& kappa, double alpha) {
    double r = 1.0;
    for (int i = 1; i <= kappa.length(); ++i)
        for (int j = 1; j <= kappa.part(i); ++j) r *= a - (i - 1) / alpha + j - 1;
    return r;
}

double j_norm(const Partition& kappa, double alpha) {
    double r = 1.0;
    for (int i = 1; i <= kappa.length(); ++i)
        for (int j = 1; j <= kappa.part(i); ++j) r *= hook_lower(kappa, i, j, alpha) * hook_upper(kappa, i, j, alpha);
    return r;
}

double q_coefficient_direct(const SeriesParameters& params, const Partition& kappa) {
    const double alpha = params.alpha;
    double num = std::pow(alpha, kappa.weight());
    for (double a : params.a) num *= pochhammer(a, kappa, alpha);
    double den = j_norm(kappa, alpha);
    for (std::size_t k = 0; k < params.b.size(); ++k) {
        for (int i = 1; i <= kappa.length(); ++i) {
            for (int j = 1; j <= kappa.part(i); ++j) {
                const double f = params.b[k] - (i - 1) / alpha + j - 1;
                if (std::abs(f) < kPoleThreshold) throw_pole(k, i, j, kappa.parts());
                den *= f;
            }
        }
    }
    return num / den;
}

double q_hook_correction(std::span<const int> parts, std::span<const int> conjugate, int i, double alpha) {
    const int ki = parts[static_cast<std::size_t>(i - 1)];
    const double d = ki * alpha - i;
    double r = 1.0;
    for (int j = 1; j < ki; ++j) {
        const double e = d - j * alpha + conjugate[static_cast<std::size_t>(j - 1)];
        const double g = e + 1.0;
        r *= (g - alpha) * e / (g * (e + alpha));
    }
    for (int j = 1; j < i; ++j) {
        const double f = parts[static_cast<std::size_t>(j - 1)] * alpha - j - d;
        const double h = f + alpha;
        const double l = h * f;
        r *= (l - f) / (l + h);
    }
    return r;
}

double q_coefficient_update(double q_prev, std::span<const int> parts, std::span<const int> conjugate, int i,
                            const SeriesParameters& params) {
    const int ki = parts[static_cast<std::size_t>(i - 1)];
    const double c = -(i - 1) / params.alpha + ki - 1;
    double r = q_prev;
    for (double a : params.a) r *= a + c;
    for (std::size_t k = 0; k < params.b.size(); ++k) {
        const double f = params.b[k] + c;
        if (std::abs(f) < kPoleThreshold) throw_pole(k, i, ki, parts);
        r /= f;
    }
    return r * q_hook_correction(parts, conjugate, i, params.alpha);
}

double q_coefficient_update(double q_prev, const Partition& kappa, int i, const SeriesParameters& params) {
    if (i < 1 || i > kappa.length() || kappa.part(i) <= kappa.part(i + 1))
        throw UsageError("q update needs kappa_i > kappa_{i+1}");
    return q_coefficient_update(q_prev, kappa.parts(), kappa.conjugate_parts(), i, params);
}

}  // namespace mhg

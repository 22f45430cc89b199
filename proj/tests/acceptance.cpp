// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mhg/coefficients.hpp"
#include "mhg/jack.hpp"
#include "mhg/partition.hpp"
#include "mhg/series.hpp"
#include "mhg/stats.hpp"
#include "oracles.hpp"

namespace {

constexpr double kTol0F0 = 1e-12;
constexpr double kSeconds0F0 = 2.0;
constexpr double kTol1F0 = 1e-8;
constexpr double kTolCoefficients = 1e-12;
constexpr double kTolJack = 1e-12;
constexpr double kTolNormalization = 1e-11;
constexpr double kTolIdentity = 1e-12;
constexpr double kTolTwoArg = 1e-12;
constexpr double kTolKummer = 1e-8;
constexpr double kSecondsSmall = 1.0;
constexpr double kSecondsLarge = 60.0;
constexpr double kMaxRatioN = 3.0;
constexpr double kTraceDiagnostic = 1e-6;
constexpr double kStdErrors = 3.0;
constexpr double kBinFraction = 0.95;
constexpr double kTolMass = 1e-4;
constexpr double kTolMonotone = 1e-10;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

Outcome c1_exp() {
    std::mt19937_64 rng(101);
    double worst = 0.0, slowest = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = oracle::uniform(rng, 10, 0.0, 0.5);
        mhg::SeriesParameters sp{2.0, {}, {}, 30};
        double v = 0.0;
        slowest = std::max(slowest, seconds([&] { v = mhg::hg_general(sp, x).value; }));
        worst = std::max(worst, oracle::rel_err(v, std::exp(sum(x))));
    }
    return {worst <= kTol0F0 && slowest <= kSeconds0F0,
            "max rel err " + fmt("%.2e", worst) + ", slowest trial " + fmt("%.3f", slowest) + " s"};
}

// Degree-m Taylor truncation of prod (1 - t x_i)^{-a} at t = 1.
double truncated_det_power(const std::vector<double>& x, double a, int m) {
    std::vector<long double> poly(static_cast<std::size_t>(m) + 1, 0.0L);
    poly[0] = 1.0L;
    for (double xi : x) {
        std::vector<long double> factor(poly.size());
        factor[0] = 1.0L;
        for (std::size_t k = 1; k < factor.size(); ++k)
            factor[k] = factor[k - 1] * (a + static_cast<long double>(k) - 1.0L) / static_cast<long double>(k) * xi;
        std::vector<long double> next(poly.size(), 0.0L);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t j = 0; i + j < poly.size(); ++j) next[i + j] += poly[i] * factor[j];
        poly = std::move(next);
    }
    return static_cast<double>(std::accumulate(poly.begin(), poly.end(), 0.0L));
}

Outcome c2_det_power() {
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> ua(0.5, 3.0);
    double worst = 0.0, untruncated = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = oracle::uniform(rng, 10, 0.0, 0.5);
        const double a = ua(rng);
        mhg::SeriesParameters sp{2.0, {a}, {}, 30};
        const double v = mhg::hg_general(sp, x).value;
        worst = std::max(worst, oracle::rel_err(v, truncated_det_power(x, a, 30)));
        double det = 1.0;
        for (double xi : x) det *= 1.0 - xi;
        untruncated = std::max(untruncated, oracle::rel_err(v, std::pow(det, -a)));
    }
    return {worst <= kTol1F0, "max rel err vs degree-30 truncation of det(I-X)^-a " + fmt("%.2e", worst) +
                                  " (vs untruncated " + fmt("%.2e", untruncated) + ")"};
}

Outcome c3_coefficients() {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> ua(-3.0, 3.0), ub(0.6, 4.5), ual(0.3, 3.0);
    std::uniform_int_distribution<int> count(0, 3);
    double worst = 0.0;
    long checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        mhg::SeriesParameters sp;
        sp.alpha = ual(rng);
        sp.m = 10;
        for (int i = count(rng); i > 0; --i) sp.a.push_back(ua(rng));
        for (int i = count(rng); i > 0; --i) sp.b.push_back(ub(rng));
        std::vector<double> level(7, 1.0);
        mhg::enumerate_partitions(10, 6, [&](const mhg::PartitionView& v) {
            const int i = v.changed_row;
            const int from = v.parts[static_cast<std::size_t>(i - 1)] == 1 ? i - 1 : i;
            auto& q = level[static_cast<std::size_t>(i)];
            q = mhg::q_coefficient_update(level[static_cast<std::size_t>(from)], v.parts, v.conjugate, i, sp);
            const mhg::Partition kappa(std::vector<int>(v.parts.begin(), v.parts.end()));
            worst = std::max(worst, oracle::rel_err(q, mhg::q_coefficient_direct(sp, kappa)));
            ++checked;
        });
    }
    return {worst <= kTolCoefficients, std::to_string(checked) + " chains, max rel err " + fmt("%.2e", worst)};
}

Outcome c4_jack() {
    std::mt19937_64 rng(104);
    double worst = 0.0;
    long checked = 0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (int n = 1; n <= 5; ++n) {
            const auto x = oracle::uniform(rng, static_cast<std::size_t>(n), -1.0, 1.0);
            auto table = std::make_shared<const mhg::PartitionTable>(mhg::PartitionTable::build(8, n));
            mhg::JackWorkspace ws(table, alpha, x);
            ws.fill();
            oracle::JackByStrips ref(x, alpha);
            for (const auto& p : oracle::brute_partitions(8, n)) {
                const auto idx = table->index_of(mhg::Partition(p));
                worst = std::max(worst, oracle::rel_err(ws.value(idx, n), ref(p, n)));
                ++checked;
            }
        }
    }
    return {worst <= kTolJack, std::to_string(checked) + " values, max rel err " + fmt("%.2e", worst)};
}

Outcome c5_normalization() {
    std::mt19937_64 rng(105);
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
        // Positive x keeps (tr x)^k well conditioned against the partition sum.
        const auto x = oracle::uniform(rng, 5, 0.05, 1.0);
        auto table = std::make_shared<const mhg::PartitionTable>(mhg::PartitionTable::build(8, 5));
        mhg::JackWorkspace ws(table, alpha, x);
        ws.fill();
        for (int k = 1; k <= 8; ++k) {
            double s = 0.0;
            for (const auto& p : oracle::partitions_of(k, 5)) {
                const mhg::Partition kappa(p);
                s += mhg::c_from_j(ws.value(table->index_of(kappa), 5), kappa, alpha);
            }
            worst = std::max(worst, oracle::rel_err(s, std::pow(sum(x), k)));
        }
    }
    return {worst <= kTolNormalization, "max rel err " + fmt("%.2e", worst)};
}

// Alternating partial sums can cancel to well below their terms, so the
// error is taken relative to max(|value|, 1).
double worst_partials(const mhg::TruncationResult& a, const mhg::TruncationResult& b) {
    double w = 0.0;
    for (std::size_t k = 0; k < a.degree_partials.size(); ++k) {
        const double want = b.degree_partials[k];
        w = std::max(w, std::abs(a.degree_partials[k] - want) / std::max(std::abs(want), 1.0));
    }
    return w;
}

Outcome c6_identity() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        mhg::SeriesParameters sp{alpha, {0.7, 1.3}, {2.2}, 20};
        for (int n = 1; n <= 8; ++n) {
            for (double x : {-0.4, 0.25, 0.5}) {
                const auto id = mhg::hg_identity(sp, n, std::span<const double>(&x, 1)).front();
                const std::vector<double> xs(static_cast<std::size_t>(n), x);
                worst = std::max(worst, worst_partials(id, mhg::hg_general(sp, xs)));
            }
        }
    }
    return {worst <= kTolIdentity, "all m <= 20 via degree partials, max err " + fmt("%.2e", worst)};
}

Outcome c7_two_arg() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        mhg::SeriesParameters sp{alpha, {0.6}, {1.9}, 20};
        for (int n = 1; n <= 6; ++n) {
            const std::vector<double> x(static_cast<std::size_t>(n), 0.8), y(static_cast<std::size_t>(n), -0.45);
            const double xy = 0.8 * -0.45;
            const auto one = mhg::hg_identity(sp, n, std::span<const double>(&xy, 1)).front();
            worst = std::max(worst, worst_partials(mhg::hg_general(sp, x, std::span<const double>(y)), one));
        }
    }
    return {worst <= kTolTwoArg, "all m <= 20 via degree partials, max err " + fmt("%.2e", worst)};
}

Outcome c8_kummer() {
    std::mt19937_64 rng(108);
    std::uniform_real_distribution<double> up(0.2, 3.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = oracle::uniform(rng, 4, -0.2, 0.2);
        std::vector<double> neg(x);
        for (auto& v : neg) v = -v;
        const double a = up(rng), c = up(rng) + 0.5;
        mhg::SeriesParameters lhs{2.0, {a}, {c}, 25}, rhs{2.0, {c - a}, {c}, 25};
        const double d =
            std::abs(mhg::hg_general(lhs, x).value - std::exp(sum(x)) * mhg::hg_general(rhs, neg).value);
        worst = std::max(worst, d);
    }
    return {worst <= kTolKummer, "max abs diff " + fmt("%.2e", worst)};
}

Outcome c9_performance() {
    std::mt19937_64 rng(109);
    const auto x5 = oracle::uniform(rng, 5, 0.0, 1.0);
    const auto x120 = oracle::uniform(rng, 120, 0.0, 0.1);
    mhg::SeriesParameters small{2.0, {1.5}, {3.3}, 20}, large{2.0, {1.5}, {3.3}, 30};
    const double t_small = seconds([&] { (void)mhg::hg_general(small, x5); });
    const double t_large = seconds([&] { (void)mhg::hg_general(large, x120); });
    return {t_small < kSecondsSmall && t_large < kSecondsLarge,
            "m=20 n=5: " + fmt("%.4f", t_small) + " s, m=30 n=120: " + fmt("%.2f", t_large) + " s"};
}

Outcome c10_linear_in_n() {
    std::mt19937_64 rng(110);
    mhg::SeriesParameters sp{2.0, {1.5}, {3.3}, 20};
    auto median_time = [&](int n) {
        const auto x = oracle::uniform(rng, static_cast<std::size_t>(n), 0.0, 0.2);
        std::vector<double> t;
        for (int r = 0; r < 5; ++r) t.push_back(seconds([&] { (void)mhg::hg_general(sp, x); }));
        std::sort(t.begin(), t.end());
        return t[2];
    };
    const double t40 = median_time(40), t80 = median_time(80);
    const double ratio = t80 / t40;
    return {ratio <= kMaxRatioN,
            "t(40)=" + fmt("%.3f", t40) + " s, t(80)=" + fmt("%.3f", t80) + " s, ratio " + fmt("%.2f", ratio)};
}

Outcome c11_trace_monte_carlo() {
    mhg::EnsembleParams p{3, 0.0, 1.0, 6, {1.0, 2.0, 3.0}};
    int m = 10;
    std::unique_ptr<mhg::TraceDensity> f;
    for (;; m += 10) {
        f = std::make_unique<mhg::TraceDensity>(p, m);
        if (f->diagnostic() < kTraceDiagnostic || m >= 200) break;
    }
    const std::size_t count = 100000;
    const auto samples = mhg::sample_wishart_trace(p, count, 2024);
    const double width = 2.0;
    const int bins = 50;
    std::vector<double> hist(bins, 0.0);
    for (double s : samples) {
        const auto b = static_cast<long>(s / width);
        if (b >= 0 && b < bins) hist[static_cast<std::size_t>(b)] += 1.0;
    }
    using boost::math::quadrature::gauss_kronrod;
    int inside = 0;
    for (int b = 0; b < bins; ++b) {
        const double prob = gauss_kronrod<double, 61>::integrate(*f, b * width, (b + 1) * width, 10, 1e-12);
        const double expected = count * prob;
        const double se = std::sqrt(count * prob * (1.0 - prob));
        if (std::abs(hist[static_cast<std::size_t>(b)] - expected) <= kStdErrors * se) ++inside;
    }
    const double frac = static_cast<double>(inside) / bins;
    return {f->diagnostic() < kTraceDiagnostic && frac >= kBinFraction,
            "m=" + std::to_string(m) + ", diagnostic " + fmt("%.1e", f->diagnostic()) + ", " + std::to_string(inside) +
                "/" + std::to_string(bins) + " bins within 3 standard errors"};
}

Outcome c12_densities() {
    boost::math::quadrature::exp_sinh<double> half_line;
    double worst_mass = 0.0;
    for (int c : {0, 1, 2}) {
        for (double beta : {1.0, 2.0}) {
            mhg::EnsembleParams p{3, beta + 1.0 + c, beta};
            const double z = mhg::lmin_pdf_normalization(p);
            const double mass = half_line.integrate([&](double x) { return z * mhg::lmin_pdf_laguerre(x, p); });
            worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
        }
    }
    for (const auto& sigma : {std::vector<double>{1.0, 2.0, 3.0}, std::vector<double>{0.5, 0.7, 1.2}}) {
        mhg::TraceDensity f(mhg::EnsembleParams{3, 0.0, 1.0, 6, sigma}, 60);
        worst_mass = std::max(worst_mass, std::abs(half_line.integrate(f) - 1.0));
    }

    double worst_drop = 0.0;
    mhg::EnsembleParams lag{3, 3.0, 2.0};
    mhg::EnsembleParams wis{3, 0.0, 1.0, 5, {0.5, 1.0, 2.0}};
    double prev_l = 0.0, prev_w = 0.0;
    for (double x = 0.1; x <= 15.0; x += 0.1) {
        const double vl = mhg::lmax_cdf_laguerre(x, lag, 60);
        const double vw = mhg::lmax_cdf_wishart(x, wis, 40);
        worst_drop = std::max({worst_drop, prev_l - vl, prev_w - vw});
        prev_l = vl;
        prev_w = vw;
    }
    return {worst_mass <= kTolMass && worst_drop <= kTolMonotone,
            "max |mass - 1| " + fmt("%.2e", worst_mass) + ", largest cdf decrease " + fmt("%.2e", worst_drop)};
}

Outcome c13_partitions() {
    const auto degree20 = mhg::count_partitions_bounded(20, 20) - mhg::count_partitions_bounded(19, 20);
    bool bijective = true;
    for (int m = 0; m <= 20 && bijective; ++m) {
        for (int n = 1; n <= 20 && bijective; ++n) {
            const auto t = mhg::PartitionTable::build(m, n);
            std::set<std::vector<int>> seen;
            for (mhg::PartitionTable::Index idx = 1; idx <= t.count(); ++idx) {
                const auto parts = t.parts(idx);
                seen.emplace(parts.begin(), parts.end());
                bijective = bijective && t.index_of(parts) == idx;
            }
            bijective = bijective && seen.size() == t.count() && seen.size() == oracle::brute_partitions(m, n).size();
        }
    }
    return {degree20 == 627 && bijective,
            "weight-20 count " + std::to_string(degree20) + ", index bijective for m, n <= 20: " +
                (bijective ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> checks{
        c1_exp,    c2_det_power,   c3_coefficients,       c4_jack,      c5_normalization,
        c6_identity, c7_two_arg,   c8_kummer,             c9_performance, c10_linear_in_n,
        c11_trace_monte_carlo, c12_densities, c13_partitions};
    int failed = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto r = checks[i]();
        failed += r.pass ? 0 : 1;
        std::printf("criterion %2zu: %s  %s\n", i + 1, r.pass ? "PASS" : "FAIL", r.detail.c_str());
        std::fflush(stdout);
    }
    return failed;
}

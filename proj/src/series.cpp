#include "mhg/series.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "mhg/errors.hpp"

namespace mhg {

namespace {

// Only a nonpositive integer a_i makes the series a polynomial: a zero in a
// lower row caps that row but leaves the first row unbounded.
bool terminates(const SeriesParameters& params) {
    for (double a : params.a) {
        const double r = std::nearbyint(a);
        if (r <= 0.0 && std::abs(a - r) <= 1e-12 * std::max(1.0, std::abs(a))) return true;
    }
    return false;
}

std::vector<std::string> divergence_warnings(const SeriesParameters& params, double max_abs_x) {
    std::vector<std::string> w;
    const auto p = params.a.size();
    const auto q = params.b.size();
    if (p <= q || terminates(params)) return w;
    if (p > q + 1)
        w.emplace_back("divergent: p > q + 1 and the series does not terminate; the truncation is finite but does "
                       "not approximate a convergent series");
    else if (max_abs_x >= 1.0)
        w.emplace_back("divergent: p = q + 1 with max |x_i| >= 1");
    return w;
}

double max_abs(std::span<const double> x) {
    double r = 0.0;
    for (double v : x) r = std::max(r, std::abs(v));
    return r;
}

struct Accumulator {
    explicit Accumulator(int m) : m(m), sums(static_cast<std::size_t>(m) + 1, 0.0) {}

    void add(int weight, double term) {
        sums[static_cast<std::size_t>(weight)] += term;
        if (weight == m) tail = std::max(tail, std::abs(term));
    }

    TruncationResult finish(std::vector<std::string> warnings) const {
        TruncationResult r;
        r.degree_sums = sums;
        r.degree_partials.resize(sums.size());
        double s = 0.0;
        for (std::size_t k = 0; k < sums.size(); ++k) r.degree_partials[k] = s += sums[k];
        r.value = r.degree_partials.back();
        r.tail_magnitude = tail;
        r.warnings = std::move(warnings);
        return r;
    }

    int m;
    std::vector<double> sums;
    double tail = 0.0;
};

TruncationResult trivial_result(int m, double empty_term, std::vector<std::string> warnings) {
    Accumulator acc(m);
    acc.add(0, empty_term);
    return acc.finish(std::move(warnings));
}

std::shared_ptr<const PartitionTable> make_table(int m, int n) {
    return std::make_shared<const PartitionTable>(PartitionTable::build(m, n));
}

}  // namespace

std::vector<TruncationResult> hg_identity(const SeriesParameters& params, int n, std::span<const double> xs) {
    params.validate();
    if (n < 1) throw UsageError("matrix size n must be at least 1");
    const std::size_t nx = xs.size();
    const int m = params.m;
    const double alpha = params.alpha;

    std::vector<Accumulator> acc(nx, Accumulator(m));
    for (auto& a : acc) a.add(0, 1.0);

    // z[level * nx + k]: kappa-term at x = xs[k] for the current prefix of
    // `level` parts. Level 0 is the empty partition.
    const int depth = std::min(m, n);
    std::vector<double> z((static_cast<std::size_t>(depth) + 1) * nx, 0.0);
    std::fill_n(z.begin(), nx, 1.0);

    PartitionWalker walker(m, n);
    while (walker.next()) {
        const auto parts = walker.parts();
        const int i = walker.changed_row();
        const int ki = parts[static_cast<std::size_t>(i - 1)];
        const int from = ki == 1 ? i - 1 : i;
        const double ratio = q_coefficient_update(1.0, parts, walker.conjugate(), i, params);
        const double jack_factor = n - i + 1 + alpha * (ki - 1);
        const double* src = z.data() + static_cast<std::size_t>(from) * nx;
        double* dst = z.data() + static_cast<std::size_t>(i) * nx;
        for (std::size_t k = 0; k < nx; ++k) {
            dst[k] = src[k] * xs[k] * jack_factor * ratio;
            acc[k].add(walker.weight(), dst[k]);
        }
    }

    std::vector<TruncationResult> out;
    out.reserve(nx);
    for (std::size_t k = 0; k < nx; ++k)
        out.push_back(acc[k].finish(divergence_warnings(params, std::abs(xs[k]))));
    return out;
}

TruncationResult hg_general(const SeriesParameters& params, std::span<const double> x,
                            std::optional<std::span<const double>> y, Kernel kernel) {
    params.validate();
    if (y && y->size() != x.size()) throw UsageError("both matrix arguments must have the same size");
    const int m = params.m;
    const int n = static_cast<int>(x.size());
    double reach = max_abs(x);
    if (y) reach *= max_abs(*y);
    auto warnings = divergence_warnings(params, reach);
    if (n == 0) return trivial_result(m, 1.0, std::move(warnings));

    const auto table = make_table(m, n);
    JackWorkspace wx(table, params.alpha, x);
    std::optional<JackWorkspace> wy;
    if (y) wy.emplace(table, params.alpha, *y);
    if (kernel == Kernel::parallel) {
        wx.fill(kernel);
        if (wy) wy->fill(kernel);
    }

    const std::size_t slots = table->count() + 1;
    std::vector<double> q(slots, 0.0);
    std::vector<double> identity(y ? slots : 0, 0.0);
    q[0] = 1.0;
    if (y) identity[0] = 1.0;

    Accumulator acc(m);
    acc.add(0, 1.0);
    const auto order = table->walk_order();
    std::size_t pos = 0;
    PartitionWalker walker(m, n);
    while (walker.next()) {
        const auto idx = order[pos++];
        const int i = walker.changed_row();
        const auto pred = table->predecessor(idx);
        q[idx] = q_coefficient_update(q[pred], walker.parts(), walker.conjugate(), i, params);
        if (kernel == Kernel::serial) {
            wx.fill_entry(idx);
            if (wy) wy->fill_entry(idx);
        }
        double term = q[idx] * wx.value(idx, n);
        if (wy) {
            const int ki = walker.parts()[static_cast<std::size_t>(i - 1)];
            identity[idx] = identity[pred] * (n - i + 1 + params.alpha * (ki - 1));
            term *= wy->value(idx, n) / identity[idx];
        }
        acc.add(walker.weight(), term);
    }
    return acc.finish(std::move(warnings));
}

TruncationResult hg_custom(int m, double alpha, const CoefficientFn& coeff, std::span<const double> x,
                           Kernel kernel) {
    SeriesParameters params{alpha, {}, {}, m};
    params.validate();
    const int n = static_cast<int>(x.size());
    const double empty_term = coeff(Partition{});
    if (n == 0) return trivial_result(m, empty_term, {});

    const auto table = make_table(m, n);
    JackWorkspace wx(table, alpha, x);
    if (kernel == Kernel::parallel) wx.fill(kernel);

    // c_to_j[idx] = alpha^k k! / j_kappa, so that C_kappa = c_to_j * J_kappa.
    std::vector<double> c_to_j(table->count() + 1, 0.0);
    c_to_j[0] = 1.0;

    Accumulator acc(m);
    acc.add(0, empty_term);
    const auto order = table->walk_order();
    std::size_t pos = 0;
    PartitionWalker walker(m, n);
    while (walker.next()) {
        const auto idx = order[pos++];
        const auto parts = walker.parts();
        c_to_j[idx] = c_to_j[table->predecessor(idx)] * walker.weight() *
                      q_hook_correction(parts, walker.conjugate(), walker.changed_row(), alpha);
        if (kernel == Kernel::serial) wx.fill_entry(idx);
        const double c = c_to_j[idx] * wx.value(idx, n);
        const double a = coeff(Partition(std::vector<int>(parts.begin(), parts.end())));
        acc.add(walker.weight(), a * c);
    }
    return acc.finish({});
}

double convergence_diagnostic(const TruncationResult& result) {
    return result.tail_magnitude / std::max(std::abs(result.value), 1.0);
}

}  // namespace mhg

#include "mhg/jack.hpp"

#include <cmath>
#include <limits>
#include <new>
#include <string>

#include "mhg/coefficients.hpp"
#include "mhg/errors.hpp"
#include "strip_sum.hpp"

namespace mhg {

namespace {

// 1-based copies with a trailing zero, the layout beta_ratio expects.
struct Padded {
    std::vector<int> parts;
    std::vector<int> conj;
    explicit Padded(const Partition& p) : parts(static_cast<std::size_t>(p.length()) + 2, 0) {
        for (int i = 1; i <= p.length(); ++i) parts[static_cast<std::size_t>(i)] = p.part(i);
        conj.assign(static_cast<std::size_t>(p.part(1)) + 2, 0);
        for (int j = 1; j <= p.part(1); ++j) conj[static_cast<std::size_t>(j)] = p.conjugate_part(j);
    }
};

}  // namespace

double beta_direct(const Partition& kappa, const Partition& mu, double alpha) {
    if (!is_horizontal_strip(kappa, mu))
        throw UsageError(kappa.to_string() + "/" + mu.to_string() + " is not a horizontal strip");
    auto factor = [&](const Partition& nu, int i, int j) {
        return kappa.conjugate_part(j) == mu.conjugate_part(j) ? hook_upper(nu, i, j, alpha)
                                                               : hook_lower(nu, i, j, alpha);
    };
    double r = 1.0;
    for (int i = 1; i <= kappa.length(); ++i)
        for (int j = 1; j <= kappa.part(i); ++j) r *= factor(kappa, i, j);
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) r /= factor(mu, i, j);
    return r;
}

double beta_update(double beta_prev, const Partition& kappa, const Partition& mu, int k, double alpha) {
    if (k < 1 || k > mu.length() || mu.part(k) <= mu.part(k + 1))
        throw UsageError("mu_(k) is not a partition");
    Partition nu = mu;
    nu.decrement(k);
    if (!is_horizontal_strip(kappa, mu) || !is_horizontal_strip(kappa, nu))
        throw UsageError("beta update requires kappa/mu and kappa/mu_(k) to be horizontal strips");
    for (int j = 1; j < mu.part(k); ++j)
        if (kappa.conjugate_part(j) != mu.conjugate_part(j))
            throw UsageError("beta update requires kappa and mu to agree left of the lowered box");
    const Padded pk(kappa);
    const Padded pm(mu);
    return beta_prev * detail::beta_ratio(pk.parts.data(), pm.parts.data(), pm.conj.data(), k, alpha);
}

double jack_identity_arg(const Partition& kappa, double alpha, int n, double x) {
    if (kappa.length() > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= kappa.length(); ++i)
        for (int j = 1; j <= kappa.part(i); ++j) r *= x * (n - (i - 1) + alpha * (j - 1));
    return r;
}

double jack_identity_update(double j_prev, const Partition& kappa, int i, double alpha, int n, double x) {
    return j_prev * x * (n - i + 1 + alpha * (kappa.part(i) - 1));
}

double c_from_j(double jval, const Partition& kappa, double alpha) {
    return std::pow(alpha, kappa.weight()) * std::tgamma(kappa.weight() + 1.0) / j_norm(kappa, alpha) * jval;
}

JackWorkspace::JackWorkspace(std::shared_ptr<const PartitionTable> table, double alpha, std::span<const double> x)
    : table_(std::move(table)), alpha_(alpha), n_(static_cast<int>(x.size())) {
    if (!table_) throw UsageError("jack workspace needs a partition table");
    if (!(alpha > 0.0)) throw UsageError("alpha must be positive");
    rows_ = table_->count() + 1;
    stride_pow_ = static_cast<std::size_t>(table_->m()) + 1;
    const std::size_t cells = rows_ * (static_cast<std::size_t>(n_) + 1);
    if (rows_ != 0 && cells / rows_ != static_cast<std::size_t>(n_) + 1)
        throw ResourceError("jack table size overflows");
    try {
        powers_.assign(stride_pow_ * (static_cast<std::size_t>(n_) + 1), 0.0);
        data_.assign(cells, 0.0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("cannot allocate jack table of " + std::to_string(rows_) + " x " +
                            std::to_string(n_ + 1) + " entries (P_mn = " + std::to_string(table_->count()) + ")");
    }
    for (int i = 1; i <= n_; ++i) {
        double* row = powers_.data() + static_cast<std::size_t>(i) * stride_pow_;
        row[0] = 1.0;
        for (std::size_t j = 1; j < stride_pow_; ++j) row[j] = row[j - 1] * x[static_cast<std::size_t>(i - 1)];
    }
    for (int t = 0; t <= n_; ++t) at(0, t) = 1.0;
}

void JackWorkspace::fill_first_column(Index idx) {
    if (n_ < 1) return;
    if (table_->length(idx) == 1) {
        const int k = table_->parts(idx)[0];
        at(idx, 1) = power(1, 1) * (1.0 + alpha_ * (k - 1)) * value(idx - 1, 1);
    }
}

void JackWorkspace::fill_row(Index idx, detail::StripSummer& strips) {
    fill_first_column(idx);
    const auto parts = table_->parts(idx);
    const int len = static_cast<int>(parts.size());
    for (int t = 2; t <= n_; ++t) {
        if (len > t) continue;
        const double* prev = data_.data() + static_cast<std::size_t>(t - 1) * rows_;
        const double* xpow = powers_.data() + static_cast<std::size_t>(t) * stride_pow_;
        at(idx, t) = strips.sum(parts, prev, xpow) + prev[idx];
    }
}

void JackWorkspace::fill_entry(Index idx) {
    if (idx == 0) return;
    if (idx > table_->count()) throw UsageError("partition index outside the workspace");
    detail::StripSummer strips(*table_, alpha_);
    fill_row(idx, strips);
}

void JackWorkspace::fill(Kernel kernel) {
    const auto order = table_->walk_order();
    if (kernel == Kernel::serial) {
        detail::StripSummer strips(*table_, alpha_);
        for (Index idx : order) fill_row(idx, strips);
        return;
    }

    std::vector<std::vector<Index>> levels(static_cast<std::size_t>(table_->m()) + 1);
    for (Index idx : order) levels[static_cast<std::size_t>(table_->weight(idx))].push_back(idx);
    for (const auto& level : levels) {
        const auto count = static_cast<std::ptrdiff_t>(level.size());
#pragma omp parallel if (count > 1)
        {
            detail::StripSummer strips(*table_, alpha_);
#pragma omp for schedule(dynamic, 4)
            for (std::ptrdiff_t pos = 0; pos < count; ++pos) fill_row(level[static_cast<std::size_t>(pos)], strips);
        }
    }
}

double jack_eval(const Partition& kappa, JackWorkspace& ws) {
    const auto idx = ws.table().index_of(kappa);
    ws.fill_entry(idx);
    return ws.value(idx, ws.variables());
}

double jack_value(const Partition& kappa, std::span<const double> x, double alpha) {
    if (kappa.empty()) return 1.0;
    if (kappa.length() > static_cast<int>(x.size())) return 0.0;
    auto table = std::make_shared<const PartitionTable>(PartitionTable::build(kappa.weight(), static_cast<int>(x.size())));
    JackWorkspace ws(table, alpha, x);
    ws.fill(Kernel::serial);
    return ws.value(table->index_of(kappa), ws.variables());
}

}  // namespace mhg

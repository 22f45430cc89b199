#ifndef MHG_STRIP_SUM_HPP
#define MHG_STRIP_SUM_HPP

// Internal: the horizontal-strip recursion shared by both Jack kernels.

#include <span>
#include <vector>

#include "mhg/partition.hpp"

namespace mhg::detail {

/// beta_{kappa, mu_(k)} / beta_{kappa mu}. Arrays are 1-based (slot 0
/// unused); mu_conj is the conjugate of mu before lowering row k.
inline double beta_ratio(const int* kappa, const int* mu, const int* mu_conj, int k, double alpha) {
    const int l = mu[k];
    const double alpha1 = alpha - 1.0;
    const double t = k - alpha * l;
    const double q = t + 1.0;
    double r = alpha;
    for (int s = 1; s <= k; ++s) {
        const double u = q - s + alpha * kappa[s];
        r *= u / (u + alpha1);
    }
    for (int s = 1; s < k; ++s) {
        const double v = t - s + alpha * mu[s];
        r *= (v + alpha) / v;
    }
    for (int s = 1; s < l; ++s) {
        const double w = mu_conj[s] - t - alpha * s;
        r *= (w + alpha) / w;
    }
    return r;
}

/// Sums beta_{kappa mu} * prev[N_mu] * xpow[|kappa/mu|] over every mu < kappa
/// with kappa/mu a horizontal strip. Parts are lowered row by row from the
/// top, which keeps every strip box right of the one being removed and so
/// satisfies the preconditions of the beta update.
class StripSummer {
public:
    using Index = PartitionTable::Index;

    explicit StripSummer(const PartitionTable& table, double alpha)
        : child_(table.child_array().data()), alpha_(alpha) {
        const auto cap = static_cast<std::size_t>(table.m()) + 2;
        kappa_.assign(cap, 0);
        mu_.assign(cap, 0);
        mu_conj_.assign(cap, 0);
        prefix_.assign(cap, 0);
    }

    double sum(std::span<const int> kappa, const double* prev, const double* xpow) {
        len_ = static_cast<int>(kappa.size());
        for (int i = 1; i <= len_; ++i) kappa_[i] = mu_[i] = kappa[static_cast<std::size_t>(i - 1)];
        kappa_[len_ + 1] = mu_[len_ + 1] = 0;
        const int width = len_ ? kappa_[1] : 0;
        for (int j = 1; j <= width; ++j) mu_conj_[j] = 0;
        for (int i = 1; i <= len_; ++i)
            for (int j = 1; j <= kappa_[i]; ++j) ++mu_conj_[j];
        prefix_[0] = 0;
        reindex(1);
        prev_ = prev;
        xpow_ = xpow;
        acc_ = 0.0;
        descend(1, 1.0, 0);
        return acc_;
    }

private:
    void reindex(int from) {
        for (int r = from; r <= len_ && mu_[r] > 0; ++r)
            prefix_[r] = r == 1 ? static_cast<Index>(mu_[1]) : child_[prefix_[r - 1]] + static_cast<Index>(mu_[r]) - 1;
    }

    void descend(int k, double beta, int c) {
        for (int i = k; i <= len_; ++i) {
            if (mu_[i] <= kappa_[i + 1]) continue;
            const int l = mu_[i];
            const double b = beta * beta_ratio(kappa_.data(), mu_.data(), mu_conj_.data(), i, alpha_);
            mu_[i] = l - 1;
            --mu_conj_[l];
            reindex(i);
            const Index n_mu = mu_[i] > 0 ? prefix_[len_] : prefix_[i - 1];
            acc_ += b * prev_[n_mu] * xpow_[c + 1];
            if (mu_[i] > 0) descend(i, b, c + 1);
            mu_[i] = l;
            ++mu_conj_[l];
            reindex(i);
        }
    }

    const Index* child_;
    double alpha_;
    int len_ = 0;
    const double* prev_ = nullptr;
    const double* xpow_ = nullptr;
    double acc_ = 0.0;
    std::vector<int> kappa_;
    std::vector<int> mu_;
    std::vector<int> mu_conj_;
    std::vector<Index> prefix_;
};

}  // namespace mhg::detail

#endif  // MHG_STRIP_SUM_HPP

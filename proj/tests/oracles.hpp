#ifndef MHG_TESTS_ORACLES_HPP
#define MHG_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests. Nothing here
// touches the partition table, the walker, or any update formula.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "mhg/jack.hpp"
#include "mhg/partition.hpp"

namespace oracle {

using Parts = std::vector<int>;

// All nonempty partitions with weight <= m and at most n parts, generated
// weight by weight with a largest-part bound.
inline std::vector<Parts> brute_partitions(int m, int n) {
    std::vector<Parts> out;
    std::function<void(Parts&, int, int)> rec = [&](Parts& cur, int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == n) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(cur, remaining - p, p);
            cur.pop_back();
        }
    };
    for (int w = 1; w <= m; ++w) {
        Parts cur;
        rec(cur, w, w);
    }
    return out;
}

inline std::vector<Parts> partitions_of(int k, int n) {
    std::vector<Parts> out;
    for (auto& p : brute_partitions(k, n)) {
        int w = 0;
        for (int v : p) w += v;
        if (w == k) out.push_back(p);
    }
    return out;
}

// Every mu with kappa/mu a horizontal strip, mu != kappa.
inline std::vector<Parts> strips_below(const Parts& kappa) {
    std::vector<Parts> out;
    Parts mu(kappa.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == kappa.size()) {
            if (mu != kappa) {
                Parts trimmed = mu;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                out.push_back(trimmed);
            }
            return;
        }
        const int lo = i + 1 < kappa.size() ? kappa[i + 1] : 0;
        for (int v = lo; v <= kappa[i]; ++v) {
            mu[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// J_kappa(x_1..x_t) by the strip recursion with beta from the direct
// hook-product formula only, memoized on (kappa, t).
class JackByStrips {
public:
    JackByStrips(std::vector<double> x, double alpha) : x_(std::move(x)), alpha_(alpha) {}

    double operator()(const Parts& kappa, int t) {
        if (kappa.empty()) return 1.0;
        if (static_cast<int>(kappa.size()) > t || t == 0) return 0.0;
        auto key = std::make_pair(kappa, t);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const mhg::Partition k(kappa);
        int wk = k.weight();
        double s = (*this)(kappa, t - 1);
        for (const auto& mu : strips_below(kappa)) {
            const mhg::Partition m(mu);
            s += (*this)(mu, t - 1) * std::pow(x_[static_cast<std::size_t>(t - 1)], wk - m.weight()) *
                 mhg::beta_direct(k, m, alpha_);
        }
        memo_[key] = s;
        return s;
    }

private:
    std::vector<double> x_;
    double alpha_;
    std::map<std::pair<Parts, int>, double> memo_;
};

inline long double determinant(std::vector<std::vector<long double>> a) {
    const std::size_t n = a.size();
    long double det = 1.0L;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        if (a[piv][c] == 0.0L) return 0.0L;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const long double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// Schur function by the bialternant formula (distinct x required).
inline double schur(const Parts& kappa, const std::vector<double>& x) {
    const std::size_t n = x.size();
    if (kappa.size() > n) return 0.0;
    std::vector<std::vector<long double>> num(n, std::vector<long double>(n));
    std::vector<std::vector<long double>> den(n, std::vector<long double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int kj = j < kappa.size() ? kappa[j] : 0;
            num[i][j] = std::pow(static_cast<long double>(x[i]), kj + static_cast<int>(n - 1 - j));
            den[i][j] = std::pow(static_cast<long double>(x[i]), static_cast<int>(n - 1 - j));
        }
    }
    return static_cast<double>(determinant(num) / determinant(den));
}

// Classical hook product H_kappa; J^(1)_kappa = H_kappa s_kappa.
inline double hook_product(const Parts& kappa) {
    const mhg::Partition k(kappa);
    double h = 1.0;
    for (int i = 1; i <= k.length(); ++i)
        for (int j = 1; j <= k.part(i); ++j) h *= k.part(i) - j + k.conjugate_part(j) - i + 1;
    return h;
}

inline double rel_err(double got, double want) {
    const double d = std::abs(got - want);
    return want == 0.0 ? d : d / std::abs(want);
}

inline std::vector<double> uniform(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& e : v) e = u(rng);
    return v;
}

}  // namespace oracle

#endif  // MHG_TESTS_ORACLES_HPP

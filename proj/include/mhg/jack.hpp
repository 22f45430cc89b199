#ifndef MHG_JACK_HPP
#define MHG_JACK_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "mhg/partition.hpp"

namespace mhg {

namespace detail {
class StripSummer;
}

/// beta_{kappa mu} from the hook-length products over kappa and mu.
/// Requires kappa/mu to be a horizontal strip.
double beta_direct(const Partition& kappa, const Partition& mu, double alpha);

/// beta_{kappa nu} for nu = mu_(k), given beta_prev = beta_{kappa mu}.
/// Requires kappa/mu and kappa/nu to be horizontal strips and columns
/// 1..mu_k - 1 of kappa and mu to agree.
double beta_update(double beta_prev, const Partition& kappa, const Partition& mu, int k, double alpha);

/// J_kappa(x I_n) = x^|kappa| prod (n - (i-1) + alpha (j-1)); zero when
/// kappa has more than n parts.
double jack_identity_arg(const Partition& kappa, double alpha, int n, double x);

/// J_kappa(x I_n) from J_{kappa_(i)}(x I_n).
double jack_identity_update(double j_prev, const Partition& kappa, int i, double alpha, int n, double x);

/// C_kappa = alpha^|kappa| |kappa|! / j_kappa * J_kappa.
double c_from_j(double jval, const Partition& kappa, double alpha);

/// How a JackWorkspace fills its table.
enum class Kernel {
    /// Partition-major sweep in walk order; the reference implementation.
    serial,
    /// A row depends only on rows of strictly smaller weight and on its own
    /// earlier columns, so each weight level is an OpenMP parallel loop over
    /// whole rows. Bitwise identical to serial.
    parallel,
};

/// Memo table of J_kappa(x_1..x_t) for every indexed partition and every
/// t = 0..n, where n = x.size(). Columns are stored contiguously; column 0
/// is J of zero variables (1 for the empty partition, 0 otherwise).
class JackWorkspace {
public:
    using Index = PartitionTable::Index;

    JackWorkspace(std::shared_ptr<const PartitionTable> table, double alpha, std::span<const double> x);

    const PartitionTable& table() const { return *table_; }
    double alpha() const { return alpha_; }
    int variables() const { return n_; }

    /// x_i^j for 1 <= i <= n, 0 <= j <= m.
    double power(int i, int j) const { return powers_[static_cast<std::size_t>(i) * stride_pow_ + static_cast<std::size_t>(j)]; }

    double value(Index idx, int t) const { return data_[static_cast<std::size_t>(t) * rows_ + idx]; }
    std::span<const double> column(int t) const { return {data_.data() + static_cast<std::size_t>(t) * rows_, rows_}; }

    /// Fills every entry.
    void fill(Kernel kernel = Kernel::parallel);

    /// Fills J(idx, t) for t = 1..n. Every strip mu of kappa(idx) must
    /// already be filled, which holds for all indices earlier in walk order.
    void fill_entry(Index idx);

private:
    double& at(Index idx, int t) { return data_[static_cast<std::size_t>(t) * rows_ + idx]; }
    void fill_first_column(Index idx);
    void fill_row(Index idx, detail::StripSummer& strips);

    std::shared_ptr<const PartitionTable> table_;
    double alpha_;
    int n_;
    std::size_t rows_;
    std::size_t stride_pow_;
    std::vector<double> powers_;
    std::vector<double> data_;
};

/// Fills table(N_kappa, t) for t = 1..n and returns J_kappa(x_1..x_n).
double jack_eval(const Partition& kappa, JackWorkspace& ws);

/// J_kappa^(alpha)(x) from scratch, building a workspace just large enough.
double jack_value(const Partition& kappa, std::span<const double> x, double alpha);

}  // namespace mhg

#endif  // MHG_JACK_HPP

#ifndef MHG_SERIES_HPP
#define MHG_SERIES_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhg/coefficients.hpp"
#include "mhg/jack.hpp"
#include "mhg/partition.hpp"

namespace mhg {

/// Outcome of one truncated series evaluation.
struct TruncationResult {
    /// Sum over all |kappa| <= m.
    double value = 1.0;
    /// degree_partials[k]: sum over |kappa| <= k. degree_partials[m] == value.
    std::vector<double> degree_partials;
    /// degree_sums[k]: sum over |kappa| == k.
    std::vector<double> degree_sums;
    /// Largest |kappa-term| over |kappa| == m.
    double tail_magnitude = 0.0;
    std::vector<std::string> warnings;
};

/// Truncation at X = x I_n for each x in xs. One partition sweep serves
/// every x; the kappa-term is carried as Q_kappa J_kappa(x I) and updated in
/// O(kappa_i + i) work per partition, independent of n.
std::vector<TruncationResult> hg_identity(const SeriesParameters& params, int n, std::span<const double> xs);

/// Truncation at X = diag(x). With y, the two-argument series whose
/// kappa-term carries the extra factor C_kappa(Y) / C_kappa(I).
TruncationResult hg_general(const SeriesParameters& params, std::span<const double> x,
                            std::optional<std::span<const double>> y = std::nullopt,
                            Kernel kernel = Kernel::parallel);

using CoefficientFn = std::function<double(const Partition&)>;

/// sum over |kappa| <= m of coeff(kappa) C_kappa^(alpha)(x).
TruncationResult hg_custom(int m, double alpha, const CoefficientFn& coeff, std::span<const double> x,
                           Kernel kernel = Kernel::parallel);

/// tail_magnitude / max(|value|, 1). A heuristic relative tail estimate;
/// the kappa-terms need not decrease monotonically, so this is not a bound.
double convergence_diagnostic(const TruncationResult& result);

}  // namespace mhg

#endif  // MHG_SERIES_HPP

#ifndef MHG_COEFFICIENTS_HPP
#define MHG_COEFFICIENTS_HPP

#include <span>
#include <vector>

#include "mhg/partition.hpp"

namespace mhg {

/// Parameters of the truncated series pFq^(alpha)(a; b; X) at degree m.
struct SeriesParameters {
    double alpha = 2.0;
    std::vector<double> a;
    std::vector<double> b;
    int m = 0;

    /// Throws UsageError unless alpha > 0 and m >= 0. Poles in b are found
    /// lazily by the evaluation that hits them.
    void validate() const;
};

/// Denominator factors with magnitude below this count as a pole.
inline constexpr double kPoleThreshold = 1e-300;

/// h^*_kappa(i,j) = kappa'_j - i + alpha (kappa_i - j + 1); (i,j) must be a box.
double hook_upper(const Partition& kappa, int i, int j, double alpha);
/// h_*^kappa(i,j) = kappa'_j - i + 1 + alpha (kappa_i - j).
double hook_lower(const Partition& kappa, int i, int j, double alpha);

/// (a)^(alpha)_kappa = prod over boxes of (a - (i-1)/alpha + j - 1).
double pochhammer(double a, const Partition& kappa, double alpha);

/// j_kappa = prod over boxes of h_* h^*.
double j_norm(const Partition& kappa, double alpha);

/// Q_kappa = alpha^|kappa| prod (a_i)_kappa / (j_kappa prod (b_j)_kappa),
/// evaluated box by box. Throws PoleError if some (b_j)_kappa vanishes.
double q_coefficient_direct(const SeriesParameters& params, const Partition& kappa);

/// Q_kappa from Q_{kappa_(i)} in O(p + q + kappa_i + i) operations.
/// `parts` and `conjugate` describe kappa itself (after raising row i).
double q_coefficient_update(double q_prev, std::span<const int> parts, std::span<const int> conjugate, int i,
                            const SeriesParameters& params);
double q_coefficient_update(double q_prev, const Partition& kappa, int i, const SeriesParameters& params);

/// The two hook-correction products of the Q update (everything except the
/// a/b factors). Always in (0, 1) for alpha > 0.
double q_hook_correction(std::span<const int> parts, std::span<const int> conjugate, int i, double alpha);

}  // namespace mhg

#endif  // MHG_COEFFICIENTS_HPP

#ifndef MHG_STATS_HPP
#define MHG_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mhg/jack.hpp"
#include "mhg/series.hpp"

namespace mhg {

/// Parameters of the beta-Laguerre and Wishart ensembles. Laguerre uses
/// n, a and beta (alpha = 2 / beta); Wishart uses n, l and sigma_eigs.
struct EnsembleParams {
    int n = 1;
    double a = 1.0;
    double beta = 1.0;
    int l = 2;
    std::vector<double> sigma_eigs;

    double alpha() const { return 2.0 / beta; }
    void validate_laguerre() const;
    void validate_wishart() const;
};

/// log Gamma_n^(alpha)(c) = n(n-1)/(2 alpha) log pi + sum_i log Gamma(c - (i-1)/alpha).
/// Requires c > (n-1)/alpha.
double log_mv_gamma(double alpha, int n, double c);
double mv_gamma(double alpha, int n, double c);

/// P(lambda_max < x) for the beta-Laguerre ensemble, in the Kummer form
/// whose 1F1 has all-positive terms.
double lmax_cdf_laguerre(double x, const EnsembleParams& params, int m);
/// The same c.d.f. from the alternating 1F1(a; ...; -x/2 I) form.
double lmax_cdf_laguerre_direct(double x, const EnsembleParams& params, int m);

/// P(lambda_max < x) for W_n(l, Sigma), Kummer form, zonal (alpha = 2).
double lmax_cdf_wishart(double x, const EnsembleParams& params, int m, Kernel kernel = Kernel::parallel);

/// Unnormalized density of lambda_min for the beta-Laguerre ensemble,
/// x^{cn} e^{-nx/2} 2F0(-c, beta n/2 + 1; -2/x I_{n-1}). Requires
/// c = a - beta(n-1)/2 - 1 to be a nonnegative integer; the 2F0 is then a
/// polynomial and is summed exactly.
double lmin_pdf_laguerre(double x, const EnsembleParams& params);

/// Degree at which the 2F0 above terminates: c (n - 1).
int lmin_termination_degree(const EnsembleParams& params);

/// Z such that Z * lmin_pdf_laguerre integrates to one, by quadrature.
double lmin_pdf_normalization(const EnsembleParams& params);

/// Density of tr A for A ~ W_n(l, Sigma), as a gamma-density mixture whose
/// weights are a zonal series in I - lambda Sigma^{-1} truncated at |kappa| <= m.
/// The series is summed once; evaluating at u is O(m).
class TraceDensity {
public:
    TraceDensity(const EnsembleParams& params, int m, Kernel kernel = Kernel::parallel);

    double operator()(double u) const;

    /// lambda = 2 lambda_1 lambda_l / (lambda_1 + lambda_l).
    double scale() const { return lambda_; }
    /// convergence_diagnostic of the inner series.
    double diagnostic() const { return diagnostic_; }
    const TruncationResult& series() const { return series_; }

private:
    double shape_;
    double lambda_;
    double log_det_;
    double diagnostic_;
    TruncationResult series_;
};

double trace_pdf_wishart(double u, const EnsembleParams& params, int m);

/// count draws of tr A, A = Sigma^{1/2} Z^T Z Sigma^{1/2} with diagonal Sigma:
/// sum_j sigma_j |z_j|^2 over l-vectors of standard normals. Deterministic
/// for a given seed.
std::vector<double> sample_wishart_trace(const EnsembleParams& params, std::size_t count, std::uint64_t seed);

/// Integral of a density-like f over [0, U], where U is the first point past
/// the peak at which f drops below 1e-12 of the largest sampled value.
/// Adaptive Gauss-Kronrod on the truncated interval.
double integrate_half_line(const std::function<double(double)>& f);

}  // namespace mhg

#endif  // MHG_STATS_HPP

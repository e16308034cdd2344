#pragma once

#include "l2limits/complex.hpp"
#include "l2limits/measures.hpp"
#include "l2limits/rational.hpp"
#include "l2limits/rng.hpp"
#include "l2limits/spectral.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace l2limits {

/// Largest order computed with integer arithmetic by local_moment.
inline constexpr int kExactMomentOrder = 8;

/// sum over p-simplices s containing the root of <Delta_p^r s, s>, divided
/// by p + 1. Evaluated inside the (r+1)-ball of the root, which determines
/// it. Integer arithmetic (int64, widened on overflow).
Rational local_moment_exact(const RootedComplex& rc, int p, int r);

/// local_moment_exact for r <= kExactMomentOrder, floating point beyond.
double local_moment(const RootedComplex& rc, int p, int r);

/// (1/|V|) tr(Delta_p^r), exact, without forming powers of the matrix.
Rational trace_moment(const SimplicialComplex& k, int p, int r);

struct MomentVector {
  int p = 0;
  std::vector<double> moments;          // m_0..m_R
  std::vector<Rational> exact;          // filled when computed exactly
  std::vector<double> standard_errors;  // filled by Monte Carlo estimates

  /// det [[m0, m1], [m1, m2]] >= -tol (true when R < 2).
  bool hankel_nonnegative(double tol = 1e-9) const;
};

/// m_r = sum of weight * local moment of each support point, exact.
MomentVector moments_of_measure(const RandomRootedComplex& m, int p, int max_order);

/// Moments of the spectral measure of K, m_r = (1/|V|) tr(Delta_p^r), exact.
MomentVector moments_of_complex(const SimplicialComplex& k, int p, int max_order);

/// Draws the sample with the given index. Rooted balls must have radius
/// at least max_order + 1 around the root.
struct RootSampler {
  std::function<RootedComplex(std::size_t index, Rng& rng)> draw;
};

/// Uniform root of K (with replacement), returning its ball of the given radius.
RootSampler uniform_vertex_sampler(const SimplicialComplex& k, std::size_t radius);

/// Sample i is rooted at the i-th vertex of K; |V| samples enumerate K
/// without replacement.
RootSampler exhaustive_sampler(const SimplicialComplex& k, std::size_t radius);

/// Empirical means and standard errors of local_moment over n samples.
/// Sample i uses an Rng seeded with stream_seed(seed, i); samples are
/// evaluated in parallel and reduced in index order by pairwise summation,
/// so the result does not depend on the thread count.
MomentVector monte_carlo_moments(const RootSampler& sampler, int p, int max_order, std::size_t samples,
                                 std::uint64_t seed);

struct KernelBound {
  int p = 0;
  std::size_t max_degree = 0;
  double eps = 0;
  double radius = 0;            // spectral radius used in the bound
  bool radius_from_spectrum = false;
  double bound = 0;             // ln(radius) C(D,p) / ((p+1) ln(1/eps))
  Rational observed;            // nu((-eps, eps) \ {0}), when a spectrum is given
  bool holds = true;
};

/// Upper bound on ||Delta_p|| for complexes of vertex degree <= D, from the
/// Schur test: (p+1)(D-p+1) + (p+2)(D-p), the first term dropped for p = 0.
double a_priori_radius(int p, std::size_t max_degree);

/// max(0, ln radius) C(D,p) / ((p+1) ln(1/eps)). Throws ValidationError
/// unless 0 < eps < 1.
double kernel_mass_bound_value(double radius, std::size_t max_degree, int p, double eps);

/// Bound with the a priori radius (no spectrum available).
KernelBound kernel_mass_bound(std::size_t max_degree, int p, double eps);

/// Bound with the true spectral radius, compared against the small
/// nonzero eigenvalue mass of nu.
KernelBound kernel_mass_bound(const SpectralMeasure& nu, std::size_t max_degree, double eps);

}  // namespace l2limits

#pragma once

#include "l2limits/complex.hpp"
#include "l2limits/exact_linalg.hpp"
#include "l2limits/rational.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <vector>

namespace l2limits {

// Chain-level operators of a finite complex. The basis of C_p is
// K.simplices(p) in lexicographic order, each simplex oriented by increasing
// vertex order; face i of [v_0..v_p] (v_i removed) carries sign (-1)^i.

/// Zero-eigenvalue threshold of the floating-point route.
inline constexpr double kZeroTolerance = 1e-7;

/// Largest complex (in p-simplices) handed to the dense eigensolver.
inline constexpr std::size_t kDenseEigenLimit = 2000;

struct BoundaryOperator {
  int p = 0;
  IntSparse matrix;  // rows: (p-1)-simplices, cols: p-simplices
};

struct Laplacian {
  int p = 0;
  IntSparse matrix;  // symmetric, rows/cols: p-simplices
};

/// Signed incidence matrix C_p -> C_{p-1}. For p > dim+1 (or p = 0) the
/// result is the zero operator with the appropriate (possibly 0) shape.
BoundaryOperator boundary(const SimplicialComplex& k, int p);

/// Delta_p = B_p^T B_p + B_{p+1} B_{p+1}^T (B_0 = 0).
Laplacian laplacian(const SimplicialComplex& k, int p);

/// rank over Q of the p-th boundary (0 for p = 0 or p > dim).
std::size_t boundary_rank(const SimplicialComplex& k, int p);

/// Ordinary Betti number over Q: |K(p)| - rank B_p - rank B_{p+1}.
std::size_t betti(const SimplicialComplex& k, int p);

/// b_p / |V|.
Rational betti_normalized(const SimplicialComplex& k, int p);

/// Ascending eigenvalues of Delta_p (dense symmetric solver). Throws
/// std::length_error above kDenseEigenLimit p-simplices.
Eigen::VectorXd laplacian_eigenvalues(const SimplicialComplex& k, int p);

/// Number of eigenvalues with |lambda| < kZeroTolerance.
std::size_t numerical_kernel_dimension(const Eigen::VectorXd& eigenvalues);

struct Atom {
  double eigenvalue = 0;
  std::size_t multiplicity = 0;
  Rational weight;  // multiplicity / |V|
};

/// Finite atomic measure: eigenvalue atoms of Delta_p, each eigenvalue
/// weighted 1/|V|.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  SpectralMeasure(int p, std::size_t num_vertices, std::vector<Atom> atoms);

  int p() const { return p_; }
  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  Rational total_mass() const;
  Rational mass_at_zero() const;
  /// Mass of {lambda : pred(lambda)}, with the zero atom exactly at 0.
  Rational mass_where(const std::function<bool(double)>& pred) const;
  /// nu((-eps, eps) \ {0})
  Rational small_nonzero_mass(double eps) const;
  /// nu((-eps, eps))
  Rational near_zero_mass(double eps) const;

  double moment(int r) const;
  double spectral_radius() const;

 private:
  int p_ = 0;
  std::size_t num_vertices_ = 0;
  std::vector<Atom> atoms_;
};

/// Eigenvalue atoms of Delta_p. Eigenvalues below kZeroTolerance form the
/// zero atom, and its multiplicity is cross-checked against the exact
/// Betti number (NumericalMismatch on disagreement). Values within 1e-9
/// relative of each other share an atom; values within 1e-9 of an
/// integer are snapped to it.
SpectralMeasure spectral_measure(const SimplicialComplex& k, int p);

/// Operator-norm estimates for a complex of vertex degree <= D.
struct NormBounds {
  double boundary_bound = 0;    // sqrt(p+1)
  double coboundary_bound = 0;  // sqrt(D-(p-1))
  double laplacian_bound = 0;   // 2 sqrt((p+2) D)
  /// Bound that always holds: ||B_p||^2 <= (p+1)(D-p+1) by the Schur
  /// test (rows and columns of B_p have at most D-p+1 and p+1 entries),
  /// so ||Delta_p|| <= (p+1)(D-p+1) + (p+2)(D-p).
  double schur_laplacian_bound = 0;
  double boundary_norm = 0;  // largest singular value of B_p (= ||B_p^*||)
  double spectral_radius = 0;
  bool within_laplacian_bound = false;
};

/// Throws HypothesisViolation when the vertex degree of K exceeds D.
/// Requires |K(p)| and |K(p-1)| <= kDenseEigenLimit.
NormBounds operator_norm_bounds(const SimplicialComplex& k, int p, std::size_t max_degree);

/// Largest singular value of B_p.
double boundary_norm(const SimplicialComplex& k, int p);

struct EulerPoincare {
  Rational lhs;                  // sum (-1)^p b_p / |V|
  Rational rhs;                  // sum (-1)^p |K(p)| / |V|
  Rational rhs_expected_degree;  // sum (-1)^p E(deg_p) / (p+1), from vertex degrees
  bool equal = false;
};

EulerPoincare euler_poincare_check(const SimplicialComplex& k);

}  // namespace l2limits

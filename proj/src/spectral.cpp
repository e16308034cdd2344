#include "l2limits/spectral.hpp"

#include "l2limits/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace l2limits {

BoundaryOperator boundary(const SimplicialComplex& k, int p) {
  BoundaryOperator b;
  b.p = p;
  const auto rows = p >= 1 ? static_cast<Eigen::Index>(k.count(p - 1)) : 0;
  const auto cols = static_cast<Eigen::Index>(k.count(p));
  b.matrix.resize(rows, cols);
  if (p < 1 || cols == 0) return b;

  std::vector<Eigen::Triplet<int>> entries;
  entries.reserve(static_cast<std::size_t>(cols) * (p + 1));
  Simplex face;
  const auto& columns = k.simplices(p);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Simplex& s = columns[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      auto row = k.index_of(face);
      entries.emplace_back(static_cast<int>(*row), static_cast<int>(j), (i % 2 == 0) ? 1 : -1);
    }
  }
  b.matrix.setFromTriplets(entries.begin(), entries.end());
  b.matrix.makeCompressed();
  return b;
}

Laplacian laplacian(const SimplicialComplex& k, int p) {
  Laplacian l;
  l.p = p;
  const auto n = static_cast<Eigen::Index>(k.count(p));
  l.matrix.resize(n, n);
  if (n == 0) return l;
  IntSparse down(n, n);
  if (p >= 1) {
    const IntSparse b = boundary(k, p).matrix;
    down = IntSparse(b.transpose()) * b;
  }
  const IntSparse c = boundary(k, p + 1).matrix;
  IntSparse up = c * IntSparse(c.transpose());
  if (up.rows() == 0) up.resize(n, n);
  l.matrix = down + up;
  l.matrix.prune(0);
  l.matrix.makeCompressed();
  return l;
}

std::size_t boundary_rank(const SimplicialComplex& k, int p) {
  if (p < 1 || p > k.dim()) return 0;
  return exact_rank(boundary(k, p).matrix);
}

std::size_t betti(const SimplicialComplex& k, int p) {
  if (p < 0 || p > k.dim()) return 0;
  return k.count(p) - boundary_rank(k, p) - boundary_rank(k, p + 1);
}

Rational betti_normalized(const SimplicialComplex& k, int p) {
  if (k.empty()) throw ValidationError("normalized Betti number of the empty complex");
  return Rational(BigInt(betti(k, p)), BigInt(k.num_vertices()));
}

Eigen::VectorXd laplacian_eigenvalues(const SimplicialComplex& k, int p) {
  const std::size_t n = k.count(p);
  if (n == 0) return Eigen::VectorXd();
  if (n > kDenseEigenLimit) {
    throw std::length_error("dense spectrum limited to " + std::to_string(kDenseEigenLimit) +
                            " simplices, got " + std::to_string(n));
  }
  const Eigen::MatrixXd dense = Eigen::MatrixXd(laplacian(k, p).matrix.cast<double>());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::size_t numerical_kernel_dimension(const Eigen::VectorXd& eigenvalues) {
  std::size_t n = 0;
  for (double v : eigenvalues) n += std::abs(v) < kZeroTolerance;
  return n;
}

SpectralMeasure::SpectralMeasure(int p, std::size_t num_vertices, std::vector<Atom> atoms)
    : p_(p), num_vertices_(num_vertices), atoms_(std::move(atoms)) {}

Rational SpectralMeasure::total_mass() const {
  Rational m = 0;
  for (const Atom& a : atoms_) m += a.weight;
  return m;
}

Rational SpectralMeasure::mass_at_zero() const {
  return mass_where([](double x) { return x == 0.0; });
}

Rational SpectralMeasure::mass_where(const std::function<bool(double)>& pred) const {
  Rational m = 0;
  for (const Atom& a : atoms_) {
    if (pred(a.eigenvalue)) m += a.weight;
  }
  return m;
}

Rational SpectralMeasure::small_nonzero_mass(double eps) const {
  return mass_where([eps](double x) { return x != 0.0 && std::abs(x) < eps; });
}

Rational SpectralMeasure::near_zero_mass(double eps) const {
  return mass_where([eps](double x) { return std::abs(x) < eps; });
}

double SpectralMeasure::moment(int r) const {
  double m = 0;
  for (const Atom& a : atoms_) m += std::pow(a.eigenvalue, r) * to_double(a.weight);
  return m;
}

double SpectralMeasure::spectral_radius() const {
  double r = 0;
  for (const Atom& a : atoms_) r = std::max(r, std::abs(a.eigenvalue));
  return r;
}

SpectralMeasure spectral_measure(const SimplicialComplex& k, int p) {
  if (k.empty()) throw ValidationError("spectral measure of the empty complex");
  const Eigen::VectorXd ev = laplacian_eigenvalues(k, p);
  const std::size_t zero_count = numerical_kernel_dimension(ev);
  const std::size_t exact = betti(k, p);
  if (zero_count != exact) {
    throw NumericalMismatch("eigensolver finds " + std::to_string(zero_count) +
                            " zero eigenvalues but the exact kernel dimension is " + std::to_string(exact));
  }

  std::vector<Atom> atoms;
  const BigInt nv(k.num_vertices());
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };
  std::size_t i = 0;
  const auto n = static_cast<std::size_t>(ev.size());
  if (zero_count > 0) {
    atoms.push_back({0.0, zero_count, Rational(BigInt(zero_count), nv)});
  }
  for (i = 0; i < n; ++i) {
    if (std::abs(ev[i]) < kZeroTolerance) continue;
    std::size_t j = i;
    double sum = 0;
    while (j < n && close(ev[j], ev[i])) sum += ev[j++];
    const std::size_t mult = j - i;
    double value = sum / static_cast<double>(mult);
    const double nearest = std::round(value);
    if (close(value, nearest)) value = nearest;
    atoms.push_back({value, mult, Rational(BigInt(mult), nv)});
    i = j - 1;
  }
  return SpectralMeasure(p, k.num_vertices(), std::move(atoms));
}

namespace {

double largest_eigenvalue(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  return std::max(0.0, solver.eigenvalues().maxCoeff());
}

}  // namespace

double boundary_norm(const SimplicialComplex& k, int p) {
  const IntSparse b = boundary(k, p).matrix;
  if (b.rows() == 0 || b.cols() == 0) return 0.0;
  if (std::min(b.rows(), b.cols()) > static_cast<Eigen::Index>(kDenseEigenLimit)) {
    throw std::length_error("boundary norm limited to " + std::to_string(kDenseEigenLimit) + " simplices");
  }
  const Eigen::MatrixXd bd = Eigen::MatrixXd(b.cast<double>());
  const Eigen::MatrixXd gram = b.rows() < b.cols() ? Eigen::MatrixXd(bd * bd.transpose())
                                                   : Eigen::MatrixXd(bd.transpose() * bd);
  return std::sqrt(largest_eigenvalue(gram));
}

NormBounds operator_norm_bounds(const SimplicialComplex& k, int p, std::size_t max_degree) {
  if (k.max_degree() > max_degree) {
    throw HypothesisViolation("vertex degree " + std::to_string(k.max_degree()) + " exceeds the bound " +
                              std::to_string(max_degree));
  }
  const double d = static_cast<double>(max_degree);
  const double pd = static_cast<double>(p);
  NormBounds nb;
  nb.boundary_bound = std::sqrt(pd + 1);
  nb.coboundary_bound = std::sqrt(std::max(0.0, d - (pd - 1)));
  nb.laplacian_bound = 2 * std::sqrt((pd + 2) * d);
  nb.schur_laplacian_bound =
      (p >= 1 ? (pd + 1) * std::max(0.0, d - pd + 1) : 0.0) + (pd + 2) * std::max(0.0, d - pd);
  nb.boundary_norm = boundary_norm(k, p);
  if (k.count(p) > 0) {
    const Eigen::VectorXd ev = laplacian_eigenvalues(k, p);
    nb.spectral_radius = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
  }
  nb.within_laplacian_bound = nb.spectral_radius <= nb.laplacian_bound + 1e-9;
  return nb;
}

EulerPoincare euler_poincare_check(const SimplicialComplex& k) {
  if (k.empty()) throw ValidationError("Euler-Poincare check of the empty complex");
  EulerPoincare ep;
  const BigInt nv(k.num_vertices());
  for (int p = 0; p <= k.dim(); ++p) {
    const int sign = (p % 2 == 0) ? 1 : -1;
    ep.lhs += sign * Rational(BigInt(betti(k, p)), nv);
    ep.rhs += sign * Rational(BigInt(k.count(p)), nv);
    BigInt degree_sum = 0;
    for (Vertex v : k.vertices()) degree_sum += k.degree(v, p);
    ep.rhs_expected_degree += sign * Rational(degree_sum, nv * (p + 1));
  }
  ep.equal = ep.lhs == ep.rhs && ep.rhs == ep.rhs_expected_degree;
  return ep;
}

}  // namespace l2limits

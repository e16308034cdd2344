#include "l2limits/error.hpp"
#include "l2limits/exact_linalg.hpp"
#include "l2limits/generators.hpp"
#include "l2limits/spectral.hpp"
#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace l2limits;
using Catch::Approx;

namespace {

std::vector<SimplicialComplex> corpus() {
  std::vector<SimplicialComplex> out;
  for (const auto& [name, k] : fixtures()) out.push_back(k);
  for (std::uint64_t s = 0; s < 6; ++s) {
    out.push_back(linial_meshulam(2, 7, 0.4, s));
    out.push_back(random_flag(9, 0.5, 3, s));
  }
  return out;
}

Eigen::MatrixXd dense(const IntSparse& m) { return Eigen::MatrixXd(m.cast<double>()); }

}  // namespace

TEST_CASE("boundary of the hollow triangle") {
  const BoundaryOperator b = boundary(fixture("hollow_triangle"), 1);
  REQUIRE(b.matrix.rows() == 3);
  REQUIRE(b.matrix.cols() == 3);
  const Eigen::MatrixXd d = dense(b.matrix);
  for (int j = 0; j < 3; ++j) {
    CHECK(d.col(j).cwiseAbs().sum() == 2);
    CHECK(d.col(j).sum() == 0);
  }
  CHECK(exact_rank(b.matrix) == 2);
  CHECK(oracle::rank(oracle::to_rational(d)) == 2);
}

TEST_CASE("boundary of the filled triangle and composition") {
  const auto& f = fixture("filled_triangle");
  const Eigen::MatrixXd b2 = dense(boundary(f, 2).matrix);
  REQUIRE(b2.rows() == 3);
  REQUIRE(b2.cols() == 1);
  // faces {1,2}, {0,2}, {0,1} carry signs +, -, + in lexicographic row order {0,1},{0,2},{1,2}
  CHECK(b2(0, 0) == 1);
  CHECK(b2(1, 0) == -1);
  CHECK(b2(2, 0) == 1);
  CHECK((dense(boundary(f, 1).matrix) * b2).isZero());
}

TEST_CASE("boundary in degenerate dimensions is a zero operator") {
  const auto& v = fixture("single_vertex");
  const BoundaryOperator b = boundary(v, 1);
  CHECK(b.matrix.cols() == 0);
  CHECK(b.matrix.nonZeros() == 0);
  CHECK(boundary(fixture("hollow_triangle"), 4).matrix.nonZeros() == 0);
}

TEST_CASE("boundary of boundary vanishes and columns have p+1 entries") {
  for (const auto& k : corpus()) {
    for (int p = 1; p <= k.dim(); ++p) {
      const IntSparse b = boundary(k, p).matrix;
      for (int j = 0; j < b.outerSize(); ++j) {
        int nnz = 0;
        for (IntSparse::InnerIterator it(b, j); it; ++it) ++nnz;
        CHECK(nnz == p + 1);
      }
      if (p >= 2) CHECK(IntSparse(boundary(k, p - 1).matrix * b).norm() == 0);
      CHECK(dense(b) == oracle::boundary(oracle::all_faces(k), p));
    }
  }
}

TEST_CASE("laplacian spectra of small fixtures") {
  auto eig = [](const SimplicialComplex& k, int p) { return laplacian_eigenvalues(k, p); };
  const Eigen::VectorXd h = eig(fixture("hollow_triangle"), 1);
  CHECK(h[0] == Approx(0).margin(1e-12));
  CHECK(h[1] == Approx(3));
  CHECK(h[2] == Approx(3));
  const Eigen::VectorXd f = eig(fixture("filled_triangle"), 1);
  for (int i = 0; i < 3; ++i) CHECK(f[i] == Approx(3));
  const Eigen::VectorXd c = eig(fixture("cycle4"), 0);
  const std::vector<double> expected{0, 2, 2, 4};
  for (int i = 0; i < 4; ++i) CHECK(c[i] == Approx(expected[i]).margin(1e-12));
}

TEST_CASE("laplacian equals the dense oracle and is symmetric positive semidefinite") {
  for (const auto& k : corpus()) {
    const auto faces = oracle::all_faces(k);
    for (int p = 0; p <= k.dim(); ++p) {
      const Eigen::MatrixXd l = dense(laplacian(k, p).matrix);
      CHECK(l == oracle::laplacian(faces, p));
      CHECK(l == l.transpose());
      if (l.rows() > 0) CHECK(laplacian_eigenvalues(k, p).minCoeff() >= -1e-9);
    }
  }
}

TEST_CASE("betti numbers of fixtures") {
  CHECK(betti(fixture("hollow_triangle"), 0) == 1);
  CHECK(betti(fixture("hollow_triangle"), 1) == 1);
  CHECK(betti(fixture("filled_triangle"), 0) == 1);
  CHECK(betti(fixture("filled_triangle"), 1) == 0);
  CHECK(betti(fixture("filled_triangle"), 2) == 0);
  CHECK(betti(fixture("octahedron"), 0) == 1);
  CHECK(betti(fixture("octahedron"), 1) == 0);
  CHECK(betti(fixture("octahedron"), 2) == 1);
  CHECK(betti(fixture("torus4"), 1) == 2);
  CHECK(betti(fixture("torus4"), 2) == 1);
  // Rational coefficients kill the torsion of the projective plane.
  CHECK(betti(fixture("rp2"), 1) == 0);
  CHECK(betti(fixture("rp2"), 2) == 0);
}

TEST_CASE("exact betti numbers agree with the dense rational oracle and with the kernel of the laplacian") {
  for (const auto& k : corpus()) {
    for (int p = 0; p <= k.dim(); ++p) {
      const std::size_t b = betti(k, p);
      CHECK(b == oracle::betti(k, p));
      if (k.count(p) <= 200) CHECK(numerical_kernel_dimension(laplacian_eigenvalues(k, p)) == b);
    }
  }
}

TEST_CASE("exact rank survives large intermediate values") {
  // Dense pseudo-random +-1 matrix; fraction-free elimination grows entries quickly.
  std::mt19937_64 rng(1);
  const int n = 40;
  std::vector<Eigen::Triplet<int>> t;
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = static_cast<int>(rng() % 7) - 3;
      d(i, j) = v;
      if (v) t.emplace_back(i, j, v);
    }
  }
  IntSparse m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  CHECK(exact_rank(m) == oracle::rank(oracle::to_rational(d)));
}

TEST_CASE("spectral measures of the triangles") {
  const SpectralMeasure h = spectral_measure(fixture("hollow_triangle"), 1);
  REQUIRE(h.atoms().size() == 2);
  CHECK(h.atoms()[0].eigenvalue == 0);
  CHECK(h.atoms()[0].weight == Rational(1, 3));
  CHECK(h.atoms()[1].eigenvalue == 3);
  CHECK(h.atoms()[1].weight == Rational(2, 3));
  CHECK(h.mass_at_zero() == Rational(1, 3));
  const SpectralMeasure f = spectral_measure(fixture("filled_triangle"), 1);
  REQUIRE(f.atoms().size() == 1);
  CHECK(f.atoms()[0].eigenvalue == 3);
  CHECK(f.atoms()[0].weight == 1);
  CHECK(f.mass_at_zero() == 0);
  CHECK(f.total_mass() == 1);
}

TEST_CASE("mass identities of spectral measures") {
  for (const auto& k : corpus()) {
    for (int p = 0; p <= k.dim(); ++p) {
      const SpectralMeasure nu = spectral_measure(k, p);
      CHECK(nu.total_mass() * k.num_vertices() == k.count(p));
      CHECK(nu.mass_at_zero() * k.num_vertices() == betti(k, p));
      CHECK(nu.mass_at_zero() == betti_normalized(k, p));
    }
  }
}

TEST_CASE("normalized betti numbers") {
  CHECK(betti_normalized(fixture("hollow_triangle"), 1) == Rational(1, 3));
  CHECK(betti_normalized(fixture("two_hollow_triangles"), 1) == Rational(1, 3));
  for (std::size_t n : {3u, 4u, 5u, 7u}) CHECK(betti_normalized(torus_tower(2, n), 1) == Rational(2, n * n));
  CHECK_THROWS_AS(betti_normalized(SimplicialComplex(), 0), ValidationError);
}

TEST_CASE("characteristic polynomials of laplacians are integral") {
  for (const auto& k : corpus()) {
    for (int p = 0; p <= k.dim(); ++p) {
      if (k.count(p) > 40) continue;
      const auto c = characteristic_polynomial(laplacian(k, p).matrix);
      CHECK(all_integral(c));
      CHECK(c.back() == 1);
      // Lowest nonzero coefficient sits at the kernel dimension.
      const std::size_t b = betti(k, p);
      for (std::size_t i = 0; i < b; ++i) CHECK(c[i] == 0);
      CHECK(c[b] != 0);
    }
  }
  // Hollow triangle, p = 1: x (x - 3)^2 = x^3 - 6x^2 + 9x.
  const auto c = characteristic_polynomial(laplacian(fixture("hollow_triangle"), 1).matrix);
  CHECK(c == std::vector<Rational>{0, 9, -6, 1});
}

TEST_CASE("operator norm bound report") {
  const NormBounds h = operator_norm_bounds(fixture("hollow_triangle"), 1, 2);
  CHECK(h.laplacian_bound == Approx(2 * std::sqrt(6.0)));
  CHECK(h.spectral_radius == Approx(3));
  CHECK(h.within_laplacian_bound);
  CHECK(h.boundary_bound == Approx(std::sqrt(2.0)));
  CHECK(h.coboundary_bound == Approx(std::sqrt(2.0)));
  CHECK(h.boundary_norm == Approx(std::sqrt(3.0)));
  const NormBounds f = operator_norm_bounds(fixture("filled_triangle"), 2, 2);
  CHECK(f.spectral_radius == Approx(3));
  CHECK(f.laplacian_bound == Approx(2 * std::sqrt(8.0)));
  CHECK_THROWS_AS(operator_norm_bounds(fixture("star5"), 1, 4), HypothesisViolation);
}

TEST_CASE("the Schur bound holds on every complex") {
  for (const auto& k : corpus()) {
    const std::size_t d = k.max_degree();
    for (int p = 0; p <= k.dim(); ++p) {
      const NormBounds nb = operator_norm_bounds(k, p, d);
      CHECK(nb.spectral_radius <= nb.schur_laplacian_bound + 1e-9);
      CHECK(nb.boundary_norm * nb.boundary_norm <= (p + 1) * (static_cast<double>(d) - p + 1) + 1e-9);
    }
  }
}

TEST_CASE("Euler-Poincare identity") {
  const EulerPoincare f = euler_poincare_check(fixture("filled_triangle"));
  CHECK(f.lhs == Rational(1, 3));
  CHECK(f.rhs == Rational(1, 3));
  CHECK(f.equal);
  const EulerPoincare t = euler_poincare_check(torus_tower(2, 5));
  CHECK(t.lhs == 0);
  CHECK(t.equal);
  const EulerPoincare h = euler_poincare_check(fixture("hollow_triangle"));
  CHECK(h.lhs == 0);
  CHECK(h.equal);
  for (const auto& k : corpus()) CHECK(euler_poincare_check(k).equal);
}

TEST_CASE("dense eigensolver refuses oversized inputs") {
  CHECK_THROWS_AS(laplacian_eigenvalues(torus_tower(2, 30), 1), std::length_error);
}

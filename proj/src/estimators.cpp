#include "l2limits/estimators.hpp"

#include "l2limits/error.hpp"
#include "l2limits/parallel.hpp"

#include <cmath>
#include <unordered_map>

namespace l2limits {

namespace {

struct Overflow {};

using Rows = std::vector<std::vector<std::pair<int, int>>>;

Rows rows_of(const IntSparse& m) {
  Rows rows(static_cast<std::size_t>(m.cols()));
  for (int j = 0; j < m.outerSize(); ++j) {
    for (IntSparse::InnerIterator it(m, j); it; ++it) rows[j].emplace_back(static_cast<int>(it.row()), it.value());
  }
  return rows;
}

inline void add_to(std::int64_t& acc, std::int64_t x) {
  if (__builtin_add_overflow(acc, x, &acc)) throw Overflow{};
}
inline std::int64_t times(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}
inline void add_to(BigInt& acc, const BigInt& x) { acc += x; }
inline BigInt times(const BigInt& a, std::int64_t b) { return a * b; }
inline void add_to(double& acc, double x) { acc += x; }
inline double times(double a, std::int64_t b) { return a * static_cast<double>(b); }

template <typename T>
using SparseVec = std::unordered_map<int, T>;

template <typename T>
SparseVec<T> multiply(const Rows& rows, const SparseVec<T>& v) {
  SparseVec<T> out;
  for (const auto& [j, x] : v) {
    for (auto [i, a] : rows[j]) add_to(out[i], times(x, a));
  }
  return out;
}

// <Delta^r e_s, e_s> as <Delta^a e_s, Delta^b e_s> with a + b = r.
template <typename T>
T diagonal_of_power(const Rows& rows, int s, int r) {
  const int a = (r + 1) / 2, b = r / 2;
  SparseVec<T> v;
  v.emplace(s, T(1));
  SparseVec<T> half;
  if (b == 0) half = v;
  for (int k = 1; k <= a; ++k) {
    v = multiply(rows, v);
    if (k == b) half = v;
  }
  T sum(0);
  for (const auto& [i, x] : half) {
    auto it = v.find(i);
    if (it != v.end()) add_to(sum, T(x * it->second));
  }
  return sum;
}

template <>
std::int64_t diagonal_of_power<std::int64_t>(const Rows& rows, int s, int r) {
  const int a = (r + 1) / 2, b = r / 2;
  SparseVec<std::int64_t> v;
  v.emplace(s, 1);
  SparseVec<std::int64_t> half;
  if (b == 0) half = v;
  for (int k = 1; k <= a; ++k) {
    v = multiply(rows, v);
    if (k == b) half = v;
  }
  std::int64_t sum = 0;
  for (const auto& [i, x] : half) {
    auto it = v.find(i);
    if (it != v.end()) add_to(sum, times(x, it->second));
  }
  return sum;
}

// Sum of diagonal entries of Delta^r over the given simplex indices.
BigInt diagonal_sum_exact(const Rows& rows, const std::vector<int>& indices, int r) {
  try {
    std::int64_t total = 0;
    for (int s : indices) add_to(total, diagonal_of_power<std::int64_t>(rows, s, r));
    return BigInt(total);
  } catch (const Overflow&) {
    BigInt total = 0;
    for (int s : indices) total += diagonal_of_power<BigInt>(rows, s, r);
    return total;
  }
}

struct LocalSetup {
  Rows rows;
  std::vector<int> root_simplices;
};

LocalSetup local_setup(const RootedComplex& rc, int p, int r) {
  const RootedComplex b = ball(rc, static_cast<std::size_t>(r) + 1);
  const SimplicialComplex& k = b.complex();
  LocalSetup setup;
  if (p < 0 || p > k.dim()) return setup;
  setup.rows = rows_of(laplacian(k, p).matrix);
  for (const SimplexRef& ref : k.star(b.root())) {
    if (ref.dim == p) setup.root_simplices.push_back(static_cast<int>(ref.index));
  }
  return setup;
}

}  // namespace

Rational local_moment_exact(const RootedComplex& rc, int p, int r) {
  if (r < 0) throw ValidationError("moment order must be non-negative");
  const LocalSetup setup = local_setup(rc, p, r);
  return Rational(diagonal_sum_exact(setup.rows, setup.root_simplices, r), BigInt(p + 1));
}

double local_moment(const RootedComplex& rc, int p, int r) {
  if (r <= kExactMomentOrder) return to_double(local_moment_exact(rc, p, r));
  const LocalSetup setup = local_setup(rc, p, r);
  double total = 0;
  for (int s : setup.root_simplices) total += diagonal_of_power<double>(setup.rows, s, r);
  return total / (p + 1);
}

Rational trace_moment(const SimplicialComplex& k, int p, int r) {
  if (k.empty()) throw ValidationError("moments of the empty complex");
  if (r < 0) throw ValidationError("moment order must be non-negative");
  if (p < 0 || p > k.dim()) return Rational(0);
  const Rows rows = rows_of(laplacian(k, p).matrix);
  std::vector<int> all(k.count(p));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Rational(diagonal_sum_exact(rows, all, r), BigInt(k.num_vertices()));
}

bool MomentVector::hankel_nonnegative(double tol) const {
  if (moments.size() < 3) return true;
  return moments[0] * moments[2] - moments[1] * moments[1] >= -tol;
}

namespace {

MomentVector from_exact(int p, std::vector<Rational> exact) {
  MomentVector mv;
  mv.p = p;
  for (const Rational& q : exact) mv.moments.push_back(to_double(q));
  mv.exact = std::move(exact);
  return mv;
}

}  // namespace

MomentVector moments_of_measure(const RandomRootedComplex& m, int p, int max_order) {
  std::vector<Rational> exact(static_cast<std::size_t>(max_order) + 1);
  for (const SupportPoint& sp : m.support()) {
    for (int r = 0; r <= max_order; ++r) exact[r] += sp.weight * local_moment_exact(sp.representative, p, r);
  }
  return from_exact(p, std::move(exact));
}

MomentVector moments_of_complex(const SimplicialComplex& k, int p, int max_order) {
  std::vector<Rational> exact;
  for (int r = 0; r <= max_order; ++r) exact.push_back(trace_moment(k, p, r));
  return from_exact(p, std::move(exact));
}

RootSampler uniform_vertex_sampler(const SimplicialComplex& k, std::size_t radius) {
  if (k.empty()) throw ValidationError("cannot sample roots of the empty complex");
  return {[&k, radius](std::size_t, Rng& rng) {
    const Vertex x = k.vertices()[uniform_index(rng, k.num_vertices())];
    return ball(k, x, radius);
  }};
}

RootSampler exhaustive_sampler(const SimplicialComplex& k, std::size_t radius) {
  return {[&k, radius](std::size_t index, Rng&) {
    if (index >= k.num_vertices()) throw std::out_of_range("exhaustive sampler ran out of vertices");
    return ball(k, k.vertices()[index], radius);
  }};
}

namespace {

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

}  // namespace

MomentVector monte_carlo_moments(const RootSampler& sampler, int p, int max_order, std::size_t samples,
                                 std::uint64_t seed) {
  if (samples == 0) throw ValidationError("Monte Carlo estimate needs at least one sample");
  const std::size_t orders = static_cast<std::size_t>(max_order) + 1;
  // values[r][i]: order r moment of sample i
  std::vector<std::vector<double>> values(orders, std::vector<double>(samples));
  parallel_for(samples, [&](std::size_t i) {
    Rng rng(stream_seed(seed, i));
    const RootedComplex rc = sampler.draw(i, rng);
    for (std::size_t r = 0; r < orders; ++r) values[r][i] = local_moment(rc, p, static_cast<int>(r));
  });
  MomentVector mv;
  mv.p = p;
  const double n = static_cast<double>(samples);
  for (std::size_t r = 0; r < orders; ++r) {
    const double mean = pairwise_sum(values[r].data(), samples) / n;
    std::vector<double> sq(samples);
    for (std::size_t i = 0; i < samples; ++i) sq[i] = (values[r][i] - mean) * (values[r][i] - mean);
    const double var = samples > 1 ? pairwise_sum(sq.data(), samples) / (n - 1) : 0.0;
    mv.moments.push_back(mean);
    mv.standard_errors.push_back(std::sqrt(var / n));
  }
  return mv;
}

double a_priori_radius(int p, std::size_t max_degree) {
  const double d = static_cast<double>(max_degree), q = p;
  const double down = p >= 1 ? (q + 1) * std::max(0.0, d - q + 1) : 0.0;
  return down + (q + 2) * std::max(0.0, d - q);
}

double kernel_mass_bound_value(double radius, std::size_t max_degree, int p, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("eps must lie strictly between 0 and 1");
  if (p < 0 || static_cast<std::size_t>(p) > max_degree) return 0.0;
  // Nonzero eigenvalues of an integer matrix multiply to at least 1, so a
  // radius <= 1 leaves no room for eigenvalues below eps.
  if (radius <= 1.0) return 0.0;
  const double binom = std::exp(std::lgamma(max_degree + 1.0) - std::lgamma(p + 1.0) -
                                std::lgamma(static_cast<double>(max_degree) - p + 1.0));
  return std::log(radius) * std::round(binom) / ((p + 1) * std::log(1.0 / eps));
}

KernelBound kernel_mass_bound(std::size_t max_degree, int p, double eps) {
  KernelBound kb;
  kb.p = p;
  kb.max_degree = max_degree;
  kb.eps = eps;
  kb.radius = a_priori_radius(p, max_degree);
  kb.bound = kernel_mass_bound_value(kb.radius, max_degree, p, eps);
  return kb;
}

KernelBound kernel_mass_bound(const SpectralMeasure& nu, std::size_t max_degree, double eps) {
  KernelBound kb;
  kb.p = nu.p();
  kb.max_degree = max_degree;
  kb.eps = eps;
  kb.radius = nu.spectral_radius();
  kb.radius_from_spectrum = true;
  kb.bound = kernel_mass_bound_value(kb.radius, max_degree, nu.p(), eps);
  kb.observed = nu.small_nonzero_mass(eps);
  kb.holds = kb.observed <= Rational(kb.bound);
  return kb;
}

}  // namespace l2limits

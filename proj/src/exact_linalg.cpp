#include "l2limits/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace l2limits {

namespace {

struct Overflow {};

// Checked arithmetic: int64 throws Overflow, BigInt never overflows.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_abs(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <typename T>
using SparseColumn = std::vector<std::pair<std::size_t, T>>;  // row-sorted, no zeros

// col <- a * col - b * other, where a = other's pivot value and b = col's
// value at that pivot row; the pivot entry cancels.
template <typename T>
void eliminate(SparseColumn<T>& col, const SparseColumn<T>& other) {
  const T a = other.back().second;
  const T b = col.back().second;
  SparseColumn<T> out;
  out.reserve(col.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
      out.emplace_back(col[i].first, mul(a, col[i].second));
      ++i;
    } else if (i == col.size() || other[j].first < col[i].first) {
      out.emplace_back(other[j].first, sub(T(0), mul(b, other[j].second)));
      ++j;
    } else {
      T v = sub(mul(a, col[i].second), mul(b, other[j].second));
      if (v != 0) out.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  T g = 0;
  for (const auto& e : out) g = gcd_abs(g, e.second);
  if (g > 1) {
    for (auto& e : out) e.second /= g;
  }
  col = std::move(out);
}

template <typename T>
std::size_t reduce_rank(const IntSparse& m) {
  std::vector<SparseColumn<T>> reduced(m.cols());
  std::vector<std::ptrdiff_t> owner(m.rows(), -1);
  std::size_t rank = 0;
  for (Eigen::Index j = 0; j < m.outerSize(); ++j) {
    SparseColumn<T> col;
    for (IntSparse::InnerIterator it(m, j); it; ++it) {
      if (it.value() != 0) col.emplace_back(static_cast<std::size_t>(it.row()), T(it.value()));
    }
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!col.empty() && owner[col.back().first] >= 0) {
      eliminate(col, reduced[owner[col.back().first]]);
    }
    if (!col.empty()) {
      owner[col.back().first] = j;
      reduced[j] = std::move(col);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const IntSparse& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  try {
    return reduce_rank<std::int64_t>(m);
  } catch (const Overflow&) {
    return reduce_rank<BigInt>(m);
  }
}

std::vector<Rational> characteristic_polynomial(const IntSparse& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = static_cast<std::size_t>(a.rows());
  using Dense = std::vector<std::vector<Rational>>;
  Dense am(n, std::vector<Rational>(n));
  for (Eigen::Index j = 0; j < a.outerSize(); ++j) {
    for (IntSparse::InnerIterator it(a, j); it; ++it) am[it.row()][j] = it.value();
  }
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  Dense mk(n, std::vector<Rational>(n));
  Dense prod(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (am[i][l] != 0 && mk[l][j] != 0) s += am[i][l] * mk[l][j];
        }
        prod[i][j] = std::move(s);
      }
    }
    for (std::size_t i = 0; i < n; ++i) prod[i][i] += c[n - k + 1];
    mk.swap(prod);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (am[i][l] != 0 && mk[l][i] != 0) trace += am[i][l] * mk[l][i];
      }
    }
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

bool all_integral(const std::vector<Rational>& coefficients) {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
}

}  // namespace l2limits

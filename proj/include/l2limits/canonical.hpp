#pragma once

#include "l2limits/complex.hpp"
#include "l2limits/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace l2limits {

// Enumeration of the finite non-empty subsets of the natural numbers:
// index n corresponds to the set of bit positions of n + 1, so
// 0 -> {0}, 1 -> {1}, 2 -> {0,1}, 3 -> {2}, 4 -> {0,2}, ...
// All subsets of {0..k} occur among the first 2^(k+1) indices.

/// Requires n < 2^63 - 1.
Simplex upsilon(std::uint64_t n);

/// Throws ValidationError on the empty set and std::overflow_error when the
/// index does not fit 64 bits (a vertex >= 63); see upsilon_index_big.
std::uint64_t upsilon_inverse(const Simplex& s);

/// Arbitrary-precision enumeration index.
BigInt upsilon_index_big(const Simplex& s);

/// Canonical encoding of a rooted isomorphism class: the 0/1 sequence of
/// the lexicographically smallest labelled copy inside the universal
/// complex, root labelled 0. Stored as the labelled simplices in increasing
/// enumeration index (i.e. the positions of the 1 bits).
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<Simplex> simplices_in_code_order);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t num_vertices() const;

  /// Positions of the 1 bits, ascending.
  std::vector<BigInt> bit_indices() const;

  SimplicialComplex decode() const;
  /// Decoded minimal representative rooted at vertex 0.
  RootedComplex decode_rooted() const;

  /// Space-separated bit indices.
  std::string to_string() const;

  /// Smaller code = a 1 bit at the first position where the codes differ.
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b);
  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.simplices_ == b.simplices_;
  }

 private:
  std::vector<Simplex> simplices_;
};

/// Code of a complex whose vertices are already labelled 0..N-1 (no
/// minimisation); the labels are taken as given.
CanonicalCode code_of_labelled(const SimplicialComplex& labelled);

/// Lexicographically minimal code over all root-preserving relabellings.
/// Throws ValidationError for disconnected input (guaranteed connected by
/// RootedComplex, so only reachable through the overload below).
CanonicalCode canonical_code(const RootedComplex& rc);

/// Root-preserving labelling realising canonical_code(rc): entry i is the
/// vertex of rc receiving label i.
std::vector<Vertex> canonical_labelling(const RootedComplex& rc);

bool rooted_isomorphic(const RootedComplex& a, const RootedComplex& b);

/// 2^-R where R is the largest radius with root-isomorphic balls; 0 when
/// the two (finite) classes coincide.
Rational bs_distance(const RootedComplex& a, const RootedComplex& b);

struct BoundedDistance {
  Rational value;
  bool exact = true;  // false: the balls agree up to r_max, value is 2^-r_max
};

/// bs_distance looking at radii up to r_max only.
BoundedDistance bs_distance(const RootedComplex& a, const RootedComplex& b, std::size_t r_max);

}  // namespace l2limits

#pragma once

#include "l2limits/canonical.hpp"
#include "l2limits/complex.hpp"
#include "l2limits/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace l2limits {

struct SupportPoint {
  CanonicalCode code;
  RootedComplex representative;  // decoded minimal representative, root 0
  Rational weight;
};

/// Finite-support probability measure on rooted isomorphism classes.
/// Support points are distinct, sorted by code, with positive weights
/// summing exactly to one.
class RandomRootedComplex {
 public:
  /// Merges isomorphic inputs; throws ValidationError when weights are not
  /// positive or do not sum to one.
  static RandomRootedComplex from_weighted(const std::vector<std::pair<RootedComplex, Rational>>& points);

  const std::vector<SupportPoint>& support() const { return support_; }

 private:
  std::vector<SupportPoint> support_;
};

/// mu_K: uniform root, each root taken inside its connected component.
/// Throws ValidationError on the empty complex.
RandomRootedComplex uniform_rooting(const SimplicialComplex& k);

/// Distribution of canonical radius-r balls.
class BallDistribution {
 public:
  BallDistribution(std::size_t radius, std::map<CanonicalCode, Rational> weights);

  std::size_t radius() const { return radius_; }
  const std::map<CanonicalCode, Rational>& weights() const { return weights_; }
  Rational weight(const CanonicalCode& code) const;

  friend bool operator==(const BallDistribution&, const BallDistribution&) = default;

 private:
  std::size_t radius_;
  std::map<CanonicalCode, Rational> weights_;
};

BallDistribution ball_distribution(const RandomRootedComplex& m, std::size_t radius);

/// Ball distribution of mu_K computed directly from the balls around each
/// vertex, without canonicalising whole components.
BallDistribution ball_distribution(const SimplicialComplex& k, std::size_t radius);

/// Half the l1 distance between the two weight maps.
Rational total_variation(const BallDistribution& a, const BallDistribution& b);

/// sum_{r=0}^{r_max} 2^-r TV(ball distributions at radius r), exact.
Rational measure_distance_exact(const RandomRootedComplex& a, const RandomRootedComplex& b, std::size_t r_max);
double measure_distance(const RandomRootedComplex& a, const RandomRootedComplex& b, std::size_t r_max);
/// Same for mu_K and mu_L, via the direct ball distributions.
Rational measure_distance_exact(const SimplicialComplex& a, const SimplicialComplex& b, std::size_t r_max);

/// Doubly rooted complex passed to mass-transport test functions.
struct DoublyRooted {
  const SimplicialComplex& complex;
  Vertex first;
  Vertex second;
};

/// Non-negative function of a doubly rooted isomorphism class. Must be
/// invariant under isomorphism for the mass-transport check to be
/// meaningful.
struct TestFunction {
  std::string name;
  std::function<Rational(const DoublyRooted&)> eval;
};

/// Twelve isomorphism-invariant functions built from distance indicators
/// (<= 2), ball statistics (radius <= 2) and bounded degree statistics.
std::vector<TestFunction> standard_battery();

/// f([K,x,y]) = table[(code of B_r(K,x), code of B_r(K,y))] when
/// d(x,y) <= max_distance, 0 otherwise (missing keys count as 0).
TestFunction ball_table_function(std::string name, std::size_t radius, std::size_t max_distance,
                                 std::map<std::pair<CanonicalCode, CanonicalCode>, Rational> table);

struct MassTransportResult {
  Rational lhs;  // E[sum_y f(K, root, y)]
  Rational rhs;  // E[sum_x f(K, x, root)]
  bool pass = false;
};

/// Exhaustive summation over support points and vertex pairs; passes iff
/// |lhs - rhs| <= tolerance (tolerance 0 means exact equality).
MassTransportResult mass_transport_check(const RandomRootedComplex& m, const TestFunction& f,
                                         const Rational& tolerance = Rational(0));

/// E[deg_p(root)].
Rational expected_p_degree(const RandomRootedComplex& m, int p);

/// Removes edges at vertices of degree > max_degree, together with every
/// simplex containing them, until the degree cap holds. Each round picks
/// the vertex of largest degree (smallest id on ties) and drops its edge
/// towards the neighbour of largest degree (smallest id on ties).
/// Vertices are never removed.
SimplicialComplex degree_truncate(const SimplicialComplex& k, std::size_t max_degree);

}  // namespace l2limits

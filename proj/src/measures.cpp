#include "l2limits/measures.hpp"

#include "l2limits/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace l2limits {

namespace {

Rational one_over(std::size_t n) { return Rational(BigInt(1), BigInt(n)); }

}  // namespace

RandomRootedComplex RandomRootedComplex::from_weighted(
    const std::vector<std::pair<RootedComplex, Rational>>& points) {
  std::map<CanonicalCode, Rational> merged;
  Rational total = 0;
  for (const auto& [rc, w] : points) {
    if (w <= 0) throw ValidationError("support weights must be positive, got " + to_string(w));
    merged[canonical_code(rc)] += w;
    total += w;
  }
  if (total != 1) throw ValidationError("support weights sum to " + to_string(total) + ", expected 1");
  RandomRootedComplex m;
  for (auto& [code, w] : merged) m.support_.push_back({code, code.decode_rooted(), w});
  return m;
}

RandomRootedComplex uniform_rooting(const SimplicialComplex& k) {
  if (k.empty()) throw ValidationError("uniform rooting of the empty complex");
  std::vector<std::pair<RootedComplex, Rational>> points;
  const Rational w = one_over(k.num_vertices());
  for (const auto& comp : k.components()) {
    const SimplicialComplex sub = comp.size() == k.num_vertices() ? k : k.induced(comp);
    for (Vertex x : comp) points.emplace_back(RootedComplex(sub, x), w);
  }
  return RandomRootedComplex::from_weighted(points);
}

BallDistribution::BallDistribution(std::size_t radius, std::map<CanonicalCode, Rational> weights)
    : radius_(radius), weights_(std::move(weights)) {}

Rational BallDistribution::weight(const CanonicalCode& code) const {
  auto it = weights_.find(code);
  return it == weights_.end() ? Rational(0) : it->second;
}

BallDistribution ball_distribution(const RandomRootedComplex& m, std::size_t radius) {
  std::map<CanonicalCode, Rational> weights;
  for (const SupportPoint& sp : m.support()) {
    weights[canonical_code(ball(sp.representative, radius))] += sp.weight;
  }
  return BallDistribution(radius, std::move(weights));
}

BallDistribution ball_distribution(const SimplicialComplex& k, std::size_t radius) {
  if (k.empty()) throw ValidationError("ball distribution of the empty complex");
  std::map<CanonicalCode, Rational> weights;
  const Rational w = one_over(k.num_vertices());
  for (Vertex x : k.vertices()) weights[canonical_code(ball(k, x, radius))] += w;
  return BallDistribution(radius, std::move(weights));
}

Rational total_variation(const BallDistribution& a, const BallDistribution& b) {
  Rational sum = 0;
  for (const auto& [code, w] : a.weights()) sum += boost::multiprecision::abs(w - b.weight(code));
  for (const auto& [code, w] : b.weights()) {
    if (!a.weights().contains(code)) sum += w;
  }
  return sum / 2;
}

namespace {

template <typename Source>
Rational weighted_tv_sum(const Source& a, const Source& b, std::size_t r_max) {
  Rational total = 0;
  for (std::size_t r = 0; r <= r_max; ++r) {
    Rational tv = total_variation(ball_distribution(a, r), ball_distribution(b, r));
    total += tv / Rational(BigInt(1) << static_cast<unsigned>(r));
  }
  return total;
}

}  // namespace

Rational measure_distance_exact(const RandomRootedComplex& a, const RandomRootedComplex& b, std::size_t r_max) {
  return weighted_tv_sum(a, b, r_max);
}

double measure_distance(const RandomRootedComplex& a, const RandomRootedComplex& b, std::size_t r_max) {
  return to_double(measure_distance_exact(a, b, r_max));
}

Rational measure_distance_exact(const SimplicialComplex& a, const SimplicialComplex& b, std::size_t r_max) {
  return weighted_tv_sum(a, b, r_max);
}

namespace {

// Graph distance if at most cap, otherwise cap + 1.
std::size_t capped_distance(const SimplicialComplex& k, Vertex x, Vertex y, std::size_t cap) {
  if (x == y) return 0;
  std::unordered_map<Vertex, std::size_t> dist{{x, 0}};
  std::deque<Vertex> queue{x};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const std::size_t du = dist[u];
    if (du == cap) continue;
    for (Vertex w : k.neighbors(u)) {
      if (!dist.emplace(w, du + 1).second) continue;
      if (w == y) return du + 1;
      queue.push_back(w);
    }
  }
  return cap + 1;
}

Rational count(std::size_t n) { return Rational(BigInt(n)); }

bool edge_in_triangle(const SimplicialComplex& k, Vertex x, Vertex y) {
  for (const SimplexRef& ref : k.star(x)) {
    if (ref.dim != 2) continue;
    const Simplex& t = k.simplex(ref);
    if (std::find(t.begin(), t.end(), y) != t.end()) return true;
  }
  return false;
}

}  // namespace

std::vector<TestFunction> standard_battery() {
  using D = DoublyRooted;
  auto d = [](const D& a, std::size_t cap) { return capped_distance(a.complex, a.first, a.second, cap); };
  auto deg = [](const D& a, Vertex v, int p = 1) { return a.complex.degree(v, p); };
  auto ball_size = [](const D& a, Vertex v, std::size_t r) {
    return ball(a.complex, v, r).complex().total_simplices();
  };
  std::vector<TestFunction> fs;
  fs.push_back({"adjacent", [=](const D& a) { return count(d(a, 1) == 1); }});
  fs.push_back({"degree_on_diagonal", [=](const D& a) { return count(a.first == a.second ? deg(a, a.second) : 0); }});
  fs.push_back({"distance_two", [=](const D& a) { return count(d(a, 2) == 2); }});
  fs.push_back({"target_degree_on_edges", [=](const D& a) { return count(d(a, 1) == 1 ? deg(a, a.second) : 0); }});
  fs.push_back({"source_degree_on_edges", [=](const D& a) { return count(d(a, 1) == 1 ? deg(a, a.first) : 0); }});
  fs.push_back({"adjacent_to_degree_two",
                [=](const D& a) { return count(d(a, 1) == 1 && deg(a, a.second) == 2); }});
  fs.push_back({"target_triangle_degree_within_two",
                [=](const D& a) { return count(d(a, 2) <= 2 ? deg(a, a.second, 2) : 0); }});
  fs.push_back({"source_degree_on_triangle_edges", [=](const D& a) {
                  const bool hit = a.first != a.second && edge_in_triangle(a.complex, a.first, a.second);
                  return count(hit ? deg(a, a.first) : 0);
                }});
  fs.push_back({"target_ball1_size_on_edges",
                [=](const D& a) { return count(d(a, 1) == 1 ? ball_size(a, a.second, 1) : 0); }});
  fs.push_back({"target_ball2_size_at_distance_two",
                [=](const D& a) { return count(d(a, 2) == 2 ? ball_size(a, a.second, 2) : 0); }});
  fs.push_back({"source_degree_times_target_ball1_vertices", [=](const D& a) {
                  if (d(a, 2) > 2) return count(0);
                  return count(deg(a, a.first) * ball(a.complex, a.second, 1).complex().num_vertices());
                }});
  fs.push_back({"degree_drop_on_edges",
                [=](const D& a) { return count(d(a, 1) == 1 && deg(a, a.first) > deg(a, a.second)); }});
  return fs;
}

TestFunction ball_table_function(std::string name, std::size_t radius, std::size_t max_distance,
                                 std::map<std::pair<CanonicalCode, CanonicalCode>, Rational> table) {
  return {std::move(name), [radius, max_distance, table = std::move(table)](const DoublyRooted& a) {
            if (capped_distance(a.complex, a.first, a.second, max_distance) > max_distance) return Rational(0);
            auto key = std::make_pair(canonical_code(ball(a.complex, a.first, radius)),
                                      canonical_code(ball(a.complex, a.second, radius)));
            auto it = table.find(key);
            return it == table.end() ? Rational(0) : it->second;
          }};
}

MassTransportResult mass_transport_check(const RandomRootedComplex& m, const TestFunction& f,
                                         const Rational& tolerance) {
  MassTransportResult res;
  for (const SupportPoint& sp : m.support()) {
    const SimplicialComplex& k = sp.representative.complex();
    const Vertex root = sp.representative.root();
    Rational out = 0, in = 0;
    for (Vertex v : k.vertices()) {
      out += f.eval(DoublyRooted{k, root, v});
      in += f.eval(DoublyRooted{k, v, root});
    }
    res.lhs += sp.weight * out;
    res.rhs += sp.weight * in;
  }
  res.pass = boost::multiprecision::abs(res.lhs - res.rhs) <= tolerance;
  return res;
}

Rational expected_p_degree(const RandomRootedComplex& m, int p) {
  Rational e = 0;
  for (const SupportPoint& sp : m.support()) e += sp.weight * count(p_degree(sp.representative, p));
  return e;
}

SimplicialComplex degree_truncate(const SimplicialComplex& k, std::size_t max_degree) {
  if (k.max_degree() <= max_degree) return k;
  std::unordered_set<Simplex, SimplexHash> alive;
  std::map<Vertex, std::set<Simplex>> star;
  std::map<Vertex, std::set<Vertex>> adj;
  for (int p = 0; p <= k.dim(); ++p) {
    for (const Simplex& s : k.simplices(p)) {
      alive.insert(s);
      for (Vertex v : s) star[v].insert(s);
    }
  }
  for (Vertex v : k.vertices()) {
    const auto& nb = k.neighbors(v);
    adj[v] = std::set<Vertex>(nb.begin(), nb.end());
  }

  while (true) {
    Vertex worst = 0;
    std::size_t worst_deg = 0;
    for (const auto& [v, nb] : adj) {
      if (nb.size() > worst_deg) {
        worst = v;
        worst_deg = nb.size();
      }
    }
    if (worst_deg <= max_degree) break;
    Vertex partner = 0;
    std::size_t partner_deg = 0;
    bool found = false;
    for (Vertex w : adj[worst]) {
      if (!found || adj[w].size() > partner_deg) {
        partner = w;
        partner_deg = adj[w].size();
        found = true;
      }
    }
    std::vector<Simplex> doomed;
    for (const Simplex& s : star[worst]) {
      if (std::binary_search(s.begin(), s.end(), partner)) doomed.push_back(s);
    }
    for (const Simplex& s : doomed) {
      alive.erase(s);
      for (Vertex v : s) star[v].erase(s);
    }
    adj[worst].erase(partner);
    adj[partner].erase(worst);
  }
  return SimplicialComplex::from_closed(std::vector<Simplex>(alive.begin(), alive.end()));
}

}  // namespace l2limits

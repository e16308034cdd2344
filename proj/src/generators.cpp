#include "l2limits/generators.hpp"

#include "l2limits/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace l2limits {

SimplicialComplex torus_tower(int d, std::size_t n) {
  if (n < 3) throw std::invalid_argument("torus side length must be at least 3");
  std::vector<Simplex> top;
  if (d == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      top.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    }
    return SimplicialComplex::from_maximal(top);
  }
  if (d != 2) throw std::invalid_argument("torus dimension must be 1 or 2");
  auto id = [n](std::size_t i, std::size_t j) { return static_cast<Vertex>((i % n) * n + (j % n)); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      top.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      top.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::from_maximal(top);
}

namespace {

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  Simplex s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Vertex>(i);
  while (true) {
    f(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace

SimplicialComplex linial_meshulam(int d, std::size_t n, double p, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("Linial-Meshulam dimension must be positive");
  if (n < static_cast<std::size_t>(d) + 1) throw std::invalid_argument("need n >= d + 1 vertices");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Simplex> top;
  for_each_subset(n, static_cast<std::size_t>(d), [&](const Simplex& s) { top.push_back(s); });
  for_each_subset(n, static_cast<std::size_t>(d) + 1, [&](const Simplex& s) {
    if (bernoulli(rng, p)) top.push_back(s);
  });
  return SimplicialComplex::from_maximal(top);
}

SimplicialComplex flag_complex(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, int max_dim) {
  if (max_dim < 0) throw std::invalid_argument("max_dim must be non-negative");
  std::vector<std::vector<Vertex>> higher(n);
  for (auto [a, b] : edges) {
    if (a == b || a >= n || b >= n) throw std::invalid_argument("bad edge");
    higher[std::min(a, b)].push_back(std::max(a, b));
  }
  for (auto& h : higher) {
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
  }
  std::vector<Simplex> all;
  const std::size_t max_size = static_cast<std::size_t>(max_dim) + 1;
  // Extend each clique by common higher neighbours only.
  auto extend = [&](auto&& self, Simplex& clique, const std::vector<Vertex>& common) -> void {
    all.push_back(clique);
    if (clique.size() == max_size) return;
    for (Vertex v : common) {
      std::vector<Vertex> next;
      std::set_intersection(common.begin(), common.end(), higher[v].begin(), higher[v].end(),
                            std::back_inserter(next));
      clique.push_back(v);
      self(self, clique, next);
      clique.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    Simplex clique{v};
    extend(extend, clique, higher[v]);
  }
  return SimplicialComplex::from_closed(std::move(all));
}

SimplicialComplex random_flag(std::size_t n, double p, int max_dim, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
  if (max_dim < 1) throw std::invalid_argument("max_dim must be at least 1");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (bernoulli(rng, p)) edges.emplace_back(a, b);
    }
  }
  return flag_complex(n, edges, max_dim);
}

SimplicialComplex path_complex(std::size_t n) {
  std::vector<Simplex> top;
  if (n == 1) top.push_back({0});
  for (std::size_t i = 0; i + 1 < n; ++i) top.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return SimplicialComplex::from_maximal(top);
}

SimplicialComplex cycle_complex(std::size_t n) { return torus_tower(1, n); }

SimplicialComplex star_complex(std::size_t leaves) {
  std::vector<Simplex> top;
  if (leaves == 0) top.push_back({0});
  for (std::size_t i = 1; i <= leaves; ++i) top.push_back({0, static_cast<Vertex>(i)});
  return SimplicialComplex::from_maximal(top);
}

SimplicialComplex full_simplex(std::size_t n) {
  Simplex s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Vertex>(i);
  return SimplicialComplex::from_maximal({s});
}

const std::map<std::string, SimplicialComplex>& fixtures() {
  static const std::map<std::string, SimplicialComplex> corpus = [] {
    std::map<std::string, SimplicialComplex> m;
    m["single_vertex"] = SimplicialComplex::from_maximal({{0}});
    m["single_edge"] = SimplicialComplex::from_maximal({{0, 1}});
    m["hollow_triangle"] = SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}});
    m["filled_triangle"] = SimplicialComplex::from_maximal({{0, 1, 2}});
    m["path3"] = path_complex(3);
    m["path5"] = path_complex(5);
    m["cycle4"] = cycle_complex(4);
    m["cycle5"] = cycle_complex(5);
    m["cycle6"] = cycle_complex(6);
    m["star5"] = star_complex(5);
    m["two_hollow_triangles"] =
        SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    m["bowtie"] = SimplicialComplex::from_maximal({{0, 1, 2}, {0, 3, 4}});
    m["tetrahedron"] = full_simplex(4);
    m["tetrahedron_boundary"] = SimplicialComplex::from_maximal({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    // Boundary of the cross-polytope: antipodal pairs (0,1), (2,3), (4,5).
    m["octahedron"] = SimplicialComplex::from_maximal({{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                                                      {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
    // Six-vertex real projective plane.
    m["rp2"] = SimplicialComplex::from_maximal({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    m["torus3"] = torus_tower(2, 3);
    m["torus4"] = torus_tower(2, 4);
    return m;
  }();
  return corpus;
}

const SimplicialComplex& fixture(const std::string& name) {
  auto it = fixtures().find(name);
  if (it == fixtures().end()) throw std::invalid_argument("unknown fixture '" + name + "'");
  return it->second;
}

}  // namespace l2limits

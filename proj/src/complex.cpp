#include "l2limits/complex.hpp"

#include "l2limits/error.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace l2limits {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Vertex v : s) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool colex_less(const Simplex& a, const Simplex& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  // Fewer vertices means fewer bits in the enumeration index.
  return ia == a.rend() && ib != b.rend();
}

namespace {

const std::vector<Simplex> kNoSimplices;
const std::vector<Vertex> kNoVertices;

std::string describe(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Simplex normalized(const Simplex& raw) {
  if (raw.empty()) throw MalformedInput("empty simplex");
  Simplex s = raw;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw MalformedInput("repeated vertex in simplex " + describe(raw));
  }
  return s;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(std::span<const Simplex> simplices) {
  std::unordered_set<Simplex, SimplexHash> all;
  for (const Simplex& raw : simplices) {
    Simplex s = normalized(raw);
    if (s.size() > 24) throw MalformedInput("simplex of dimension > 23 is not supported");
    if (all.contains(s)) continue;
    const std::size_t n = s.size();
    Simplex face;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      face.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      all.insert(face);
    }
  }
  std::vector<Simplex> list(all.begin(), all.end());
  return from_closed(std::move(list));
}

SimplicialComplex SimplicialComplex::from_maximal(std::initializer_list<Simplex> simplices) {
  return from_maximal(std::span<const Simplex>(simplices.begin(), simplices.size()));
}

SimplicialComplex SimplicialComplex::from_closed(std::vector<Simplex> simplices) {
  SimplicialComplex k;
  std::size_t max_size = 0;
  for (Simplex& s : simplices) {
    s = normalized(s);
    max_size = std::max(max_size, s.size());
  }
  k.by_dim_.resize(max_size);
  for (Simplex& s : simplices) k.by_dim_[s.size() - 1].push_back(std::move(s));
  for (auto& list : k.by_dim_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  k.lookup_.resize(k.by_dim_.size());
  for (std::size_t d = 0; d < k.by_dim_.size(); ++d) {
    k.lookup_[d].reserve(k.by_dim_[d].size());
    for (std::size_t i = 0; i < k.by_dim_[d].size(); ++i) k.lookup_[d].emplace(k.by_dim_[d][i], i);
  }

  if (!k.by_dim_.empty()) {
    for (const Simplex& s : k.by_dim_[0]) k.vertices_.push_back(s[0]);
  }
  for (std::size_t i = 0; i < k.vertices_.size(); ++i) k.vertex_index_.emplace(k.vertices_[i], i);

  k.star_.resize(k.vertices_.size());
  k.neighbors_.resize(k.vertices_.size());
  for (std::size_t d = 0; d < k.by_dim_.size(); ++d) {
    for (std::size_t i = 0; i < k.by_dim_[d].size(); ++i) {
      for (Vertex v : k.by_dim_[d][i]) {
        auto it = k.vertex_index_.find(v);
        if (it == k.vertex_index_.end()) {
          throw ValidationError("vertex " + std::to_string(v) + " of " + describe(k.by_dim_[d][i]) +
                                " is not a 0-simplex");
        }
        k.star_[it->second].push_back({static_cast<int>(d), i});
      }
    }
  }
  if (k.by_dim_.size() > 1) {
    for (const Simplex& e : k.by_dim_[1]) {
      k.neighbors_[k.local(e[0])].push_back(e[1]);
      k.neighbors_[k.local(e[1])].push_back(e[0]);
    }
    for (auto& nb : k.neighbors_) std::sort(nb.begin(), nb.end());
  }
  if (!k.is_downward_closed()) throw ValidationError("simplex set is not downward closed");
  return k;
}

std::size_t SimplicialComplex::local(Vertex v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) throw ValidationError("unknown vertex " + std::to_string(v));
  return it->second;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
  if (p < 0 || p >= static_cast<int>(by_dim_.size())) return kNoSimplices;
  return by_dim_[p];
}

std::size_t SimplicialComplex::total_simplices() const {
  std::size_t total = 0;
  for (const auto& list : by_dim_) total += list.size();
  return total;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > lookup_.size()) return std::nullopt;
  const auto& table = lookup_[s.size() - 1];
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::span<const SimplexRef> SimplicialComplex::star(Vertex v) const { return star_[local(v)]; }

const std::vector<Vertex>& SimplicialComplex::neighbors(Vertex v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) return kNoVertices;
  return neighbors_[it->second];
}

std::size_t SimplicialComplex::degree(Vertex v, int p) const {
  if (p == 1) return neighbors(v).size();
  std::size_t n = 0;
  for (const SimplexRef& ref : star(v)) n += ref.dim == p;
  return n;
}

std::size_t SimplicialComplex::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : neighbors_) best = std::max(best, nb.size());
  return best;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    for (const Simplex& s : by_dim_[d]) {
      bool maximal = true;
      if (d + 1 < by_dim_.size()) {
        for (const SimplexRef& ref : star_[local(s[0])]) {
          if (ref.dim != static_cast<int>(d) + 1) continue;
          const Simplex& t = by_dim_[ref.dim][ref.index];
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::induced(std::span<const Vertex> keep) const {
  std::unordered_set<Vertex> inside(keep.begin(), keep.end());
  std::vector<Simplex> out;
  for (Vertex v : keep) {
    for (const SimplexRef& ref : star(v)) {
      const Simplex& s = by_dim_[ref.dim][ref.index];
      // Collect each simplex once, from its smallest vertex.
      if (s.front() != v) continue;
      if (std::all_of(s.begin(), s.end(), [&](Vertex w) { return inside.contains(w); })) out.push_back(s);
    }
  }
  return from_closed(std::move(out));
}

std::vector<std::vector<Vertex>> SimplicialComplex::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(vertices_.size(), false);
  for (std::size_t start = 0; start < vertices_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> comp;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(vertices_[u]);
      for (Vertex w : neighbors_[u]) {
        std::size_t lw = vertex_index_.at(w);
        if (!seen[lw]) {
          seen[lw] = true;
          queue.push_back(lw);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool SimplicialComplex::is_connected() const {
  if (vertices_.empty()) return false;
  return distances_from(vertices_.front()).size() == vertices_.size();
}

std::unordered_map<Vertex, std::size_t> SimplicialComplex::distances_from(Vertex source) const {
  std::unordered_map<Vertex, std::size_t> dist;
  dist.emplace(source, 0);
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const std::size_t du = dist[u];
    for (Vertex w : neighbors(u)) {
      if (dist.emplace(w, du + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

SimplicialComplex SimplicialComplex::relabeled(const std::unordered_map<Vertex, Vertex>& map) const {
  std::vector<Simplex> out;
  out.reserve(total_simplices());
  for (const auto& list : by_dim_) {
    for (const Simplex& s : list) {
      Simplex t;
      t.reserve(s.size());
      for (Vertex v : s) t.push_back(map.at(v));
      out.push_back(std::move(t));
    }
  }
  return from_closed(std::move(out));
}

bool SimplicialComplex::is_downward_closed() const {
  Simplex facet;
  for (std::size_t d = 1; d < by_dim_.size(); ++d) {
    for (const Simplex& s : by_dim_[d]) {
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        facet.clear();
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != skip) facet.push_back(s[i]);
        }
        if (!lookup_[d - 1].contains(facet)) return false;
      }
    }
  }
  return true;
}

RootedComplex::RootedComplex(SimplicialComplex complex, Vertex root)
    : complex_(std::move(complex)), root_(root) {
  if (!complex_.has_vertex(root_)) {
    throw ValidationError("root " + std::to_string(root_) + " is not a vertex of the complex");
  }
  if (!complex_.is_connected()) throw ValidationError("rooted complex must be connected");
}

RootedComplex ball(const SimplicialComplex& k, Vertex root, std::size_t radius) {
  if (!k.has_vertex(root)) throw ValidationError("root " + std::to_string(root) + " is not a vertex");
  std::vector<Vertex> keep;
  std::unordered_map<Vertex, std::size_t> dist{{root, 0}};
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    keep.push_back(u);
    const std::size_t du = dist[u];
    if (du == radius) continue;
    for (Vertex w : k.neighbors(u)) {
      if (dist.emplace(w, du + 1).second) queue.push_back(w);
    }
  }
  return RootedComplex(k.induced(keep), root);
}

RootedComplex ball(const RootedComplex& rc, std::size_t radius) {
  return ball(rc.complex(), rc.root(), radius);
}

RootedComplex component_of(const SimplicialComplex& k, Vertex root) {
  if (!k.has_vertex(root)) throw ValidationError("root " + std::to_string(root) + " is not a vertex");
  std::vector<Vertex> keep;
  for (const auto& [v, d] : k.distances_from(root)) keep.push_back(v);
  if (keep.size() == k.num_vertices()) return RootedComplex(k, root);
  return RootedComplex(k.induced(keep), root);
}

std::size_t p_degree(const RootedComplex& rc, int p) {
  if (p < 0) return 0;
  return rc.complex().degree(rc.root(), p);
}

}  // namespace l2limits

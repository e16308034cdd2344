#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace l2limits {

using Vertex = std::uint32_t;

/// A simplex as its strictly increasing list of vertex ids. The increasing
/// order doubles as the orientation used by every boundary operator.
using Simplex = std::vector<Vertex>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Colexicographic order: compare the largest vertices first. This is the
/// order of the enumeration index of a vertex set inside the universal
/// complex on the natural numbers.
bool colex_less(const Simplex& a, const Simplex& b);

/// (dimension, index within that dimension's sorted list)
struct SimplexRef {
  int dim;
  std::size_t index;
};

/// Finite abstract simplicial complex. Immutable once built; every face of
/// every simplex is present and each vertex is a 0-simplex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given simplices. Each input list may be in any
  /// order; a repeated vertex inside one list throws MalformedInput.
  static SimplicialComplex from_maximal(std::span<const Simplex> simplices);
  static SimplicialComplex from_maximal(std::initializer_list<Simplex> simplices);

  /// Builds from a simplex set that is already downward closed. Throws
  /// ValidationError when a face is missing.
  static SimplicialComplex from_closed(std::vector<Simplex> simplices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool has_vertex(Vertex v) const { return vertex_index_.contains(v); }

  /// Largest simplex dimension; -1 for the empty complex.
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  /// p-simplices in lexicographic order (empty when p is out of range).
  const std::vector<Simplex>& simplices(int p) const;
  std::size_t count(int p) const { return simplices(p).size(); }
  std::size_t total_simplices() const;

  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::optional<std::size_t> index_of(const Simplex& s) const;

  /// Simplices containing v, all dimensions.
  std::span<const SimplexRef> star(Vertex v) const;
  const Simplex& simplex(SimplexRef ref) const { return by_dim_[ref.dim][ref.index]; }

  /// Neighbours of v in the 1-skeleton, ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const;

  /// Number of p-simplices containing v (p = 1 is the vertex degree).
  std::size_t degree(Vertex v, int p = 1) const;
  std::size_t max_degree() const;

  std::vector<Simplex> maximal_simplices() const;

  /// Subcomplex of all simplices whose vertices lie in `keep`.
  SimplicialComplex induced(std::span<const Vertex> keep) const;

  /// Vertex sets of the connected components, each ascending, ordered by
  /// smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  bool is_connected() const;

  /// Graph distances from `source`; unreachable vertices are absent.
  std::unordered_map<Vertex, std::size_t> distances_from(Vertex source) const;

  /// Applies a vertex relabelling; `map` must be injective on vertices().
  SimplicialComplex relabeled(const std::unordered_map<Vertex, Vertex>& map) const;

  /// Every facet of every simplex is present.
  bool is_downward_closed() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
  }

 private:
  std::size_t local(Vertex v) const;

  std::vector<Vertex> vertices_;
  std::unordered_map<Vertex, std::size_t> vertex_index_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> lookup_;
  std::vector<std::vector<SimplexRef>> star_;
  std::vector<std::vector<Vertex>> neighbors_;
};

/// A connected complex with a distinguished vertex.
class RootedComplex {
 public:
  /// Throws ValidationError unless root is a vertex and complex is connected.
  RootedComplex(SimplicialComplex complex, Vertex root);

  const SimplicialComplex& complex() const { return complex_; }
  Vertex root() const { return root_; }

 private:
  SimplicialComplex complex_;
  Vertex root_;
};

/// Rooted subcomplex of the vertices within graph distance r of the root;
/// contains exactly the simplices all of whose vertices are that close.
RootedComplex ball(const RootedComplex& rc, std::size_t radius);

/// Same, for a root inside a possibly disconnected complex.
RootedComplex ball(const SimplicialComplex& k, Vertex root, std::size_t radius);

/// The connected component of `root`, rooted there.
RootedComplex component_of(const SimplicialComplex& k, Vertex root);

/// Number of p-simplices containing the root.
std::size_t p_degree(const RootedComplex& rc, int p);

}  // namespace l2limits

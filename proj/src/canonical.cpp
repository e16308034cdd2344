#include "l2limits/canonical.hpp"

#include "l2limits/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace l2limits {

Simplex upsilon(std::uint64_t n) {
  if (n == ~std::uint64_t{0}) throw std::overflow_error("enumeration index out of range");
  std::uint64_t bits = n + 1;
  Simplex s;
  for (Vertex v = 0; bits != 0; ++v, bits >>= 1) {
    if (bits & 1u) s.push_back(v);
  }
  return s;
}

std::uint64_t upsilon_inverse(const Simplex& s) {
  if (s.empty()) throw ValidationError("the empty set has no enumeration index");
  std::uint64_t bits = 0;
  for (Vertex v : s) {
    if (v >= 63) throw std::overflow_error("enumeration index exceeds 64 bits");
    bits |= std::uint64_t{1} << v;
  }
  return bits - 1;
}

BigInt upsilon_index_big(const Simplex& s) {
  if (s.empty()) throw ValidationError("the empty set has no enumeration index");
  BigInt bits = 0;
  for (Vertex v : s) boost::multiprecision::bit_set(bits, v);
  return bits - 1;
}

namespace {

// Lexicographic comparison of two increasing lists of 1-bit positions.
// The list with the smaller element at the first difference has a 1 where
// the other has a 0, so it is smaller; a strict extension is smaller too.
std::strong_ordering compare_bit_lists(const std::vector<Simplex>& a, const std::vector<Simplex>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return colex_less(a[i], b[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.size() == b.size()) return std::strong_ordering::equal;
  return a.size() > b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace

CanonicalCode::CanonicalCode(std::vector<Simplex> simplices_in_code_order)
    : simplices_(std::move(simplices_in_code_order)) {}

std::size_t CanonicalCode::num_vertices() const {
  std::size_t n = 0;
  for (const Simplex& s : simplices_) n += s.size() == 1;
  return n;
}

std::vector<BigInt> CanonicalCode::bit_indices() const {
  std::vector<BigInt> out;
  out.reserve(simplices_.size());
  for (const Simplex& s : simplices_) out.push_back(upsilon_index_big(s));
  return out;
}

SimplicialComplex CanonicalCode::decode() const { return SimplicialComplex::from_closed(simplices_); }

RootedComplex CanonicalCode::decode_rooted() const { return RootedComplex(decode(), 0); }

std::string CanonicalCode::to_string() const {
  std::string out;
  for (const BigInt& i : bit_indices()) {
    if (!out.empty()) out += ' ';
    out += i.str();
  }
  return out;
}

std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
  return compare_bit_lists(a.simplices_, b.simplices_);
}

CanonicalCode code_of_labelled(const SimplicialComplex& labelled) {
  std::vector<Simplex> all;
  all.reserve(labelled.total_simplices());
  for (int p = 0; p <= labelled.dim(); ++p) {
    for (const Simplex& s : labelled.simplices(p)) all.push_back(s);
  }
  std::sort(all.begin(), all.end(), colex_less);
  return CanonicalCode(std::move(all));
}

namespace {

using Local = std::uint32_t;
using Block = std::vector<Simplex>;

// Branch and bound over labellings. The code splits into blocks: block k
// holds the simplices whose largest label is k, and blocks occupy disjoint
// consecutive index ranges. Minimising the code therefore means minimising
// block 1, then block 2 given the first choice, and so on; only candidates
// attaining the minimal block at each depth can lead to the minimum. A
// candidate not adjacent to any labelled vertex has block {{k}} alone and
// always loses to a frontier vertex, which forces breadth-first layers.
class Canonicalizer {
 public:
  explicit Canonicalizer(const RootedComplex& rc) {
    const SimplicialComplex& k = rc.complex();
    verts_ = k.vertices();
    for (Local i = 0; i < verts_.size(); ++i) local_.emplace(verts_[i], i);
    const std::size_t n = verts_.size();
    star_.resize(n);
    adj_.resize(n);
    for (Local u = 0; u < n; ++u) {
      for (const SimplexRef& ref : k.star(verts_[u])) {
        std::vector<Local> s;
        for (Vertex v : k.simplex(ref)) s.push_back(local_.at(v));
        star_[u].push_back(s);
      }
      for (Vertex w : k.neighbors(verts_[u])) adj_[u].push_back(local_.at(w));
    }
    for (int p = 0; p <= k.dim(); ++p) {
      for (const Simplex& s : k.simplices(p)) {
        Simplex t;
        for (Vertex v : s) t.push_back(local_.at(v));
        simplex_set_.insert(std::move(t));
      }
    }
    label_.assign(n, -1);
    labelled_neighbours_.assign(n, 0);
    root_ = local_.at(rc.root());
  }

  void run() {
    assign(root_, 0);
    blocks_.push_back({Simplex{0}});
    search(1, false);
  }

  CanonicalCode code() const {
    std::vector<Simplex> all;
    for (const Block& b : best_blocks_) all.insert(all.end(), b.begin(), b.end());
    return CanonicalCode(std::move(all));
  }

  std::vector<Vertex> labelling() const {
    std::vector<Vertex> out;
    for (Local u : best_order_) out.push_back(verts_[u]);
    return out;
  }

 private:
  void assign(Local u, std::size_t lab) {
    label_[u] = static_cast<int>(lab);
    order_.push_back(u);
    for (Local w : adj_[u]) ++labelled_neighbours_[w];
  }

  void unassign(Local u) {
    label_[u] = -1;
    order_.pop_back();
    for (Local w : adj_[u]) --labelled_neighbours_[w];
  }

  Block block_of(Local c, Vertex next_label) const {
    Block b;
    for (const auto& s : star_[c]) {
      Simplex t;
      t.reserve(s.size());
      bool complete = true;
      for (Local v : s) {
        if (v == c) continue;
        if (label_[v] < 0) {
          complete = false;
          break;
        }
        t.push_back(static_cast<Vertex>(label_[v]));
      }
      if (!complete) continue;
      std::sort(t.begin(), t.end());
      t.push_back(next_label);
      b.push_back(std::move(t));
    }
    std::sort(b.begin(), b.end(), colex_less);
    return b;
  }

  // Transposing u and v maps the complex onto itself.
  bool swappable(Local u, Local v) const {
    if (star_[u].size() != star_[v].size()) return false;
    for (const auto& s : star_[u]) {
      if (std::find(s.begin(), s.end(), v) != s.end()) continue;
      Simplex t;
      t.reserve(s.size());
      for (Local w : s) t.push_back(w == u ? v : w);
      std::sort(t.begin(), t.end());
      if (!simplex_set_.contains(t)) return false;
    }
    return true;
  }

  void search(std::size_t depth, bool tie) {
    const std::size_t n = verts_.size();
    if (depth == n) {
      if (!has_best_ || !tie) {
        // Not tied means strictly smaller than the incumbent.
        best_blocks_ = blocks_;
        best_order_ = order_;
        has_best_ = true;
        ++version_;
      }
      return;
    }

    std::vector<Local> candidates;
    for (Local u = 0; u < n; ++u) {
      if (label_[u] < 0 && labelled_neighbours_[u] > 0) candidates.push_back(u);
    }
    if (candidates.empty()) throw ValidationError("canonical code requires a connected complex");

    const Vertex next = static_cast<Vertex>(depth);
    std::vector<Block> blocks;
    blocks.reserve(candidates.size());
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      blocks.push_back(block_of(candidates[i], next));
      if (i > 0 && compare_bit_lists(blocks[i], blocks[best_i]) < 0) best_i = i;
    }
    const Block minimal = blocks[best_i];

    std::vector<Local> tied;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (blocks[i] != minimal) continue;
      bool redundant = false;
      for (Local rep : tied) {
        if (swappable(rep, candidates[i])) {
          redundant = true;
          break;
        }
      }
      if (!redundant) tied.push_back(candidates[i]);
    }

    const std::uint64_t entry_version = version_;
    for (Local c : tied) {
      if (version_ != entry_version) tie = true;
      bool child_tie = false;
      if (has_best_ && tie) {
        auto cmp = compare_bit_lists(minimal, best_blocks_[depth]);
        if (cmp > 0) return;
        child_tie = cmp == 0;
      }
      assign(c, depth);
      blocks_.push_back(minimal);
      search(depth + 1, child_tie);
      blocks_.pop_back();
      unassign(c);
    }
  }

  std::vector<Vertex> verts_;
  std::unordered_map<Vertex, Local> local_;
  std::vector<std::vector<std::vector<Local>>> star_;
  std::vector<std::vector<Local>> adj_;
  std::unordered_set<Simplex, SimplexHash> simplex_set_;
  Local root_ = 0;

  std::vector<int> label_;
  std::vector<std::size_t> labelled_neighbours_;
  std::vector<Local> order_;
  std::vector<Block> blocks_;

  bool has_best_ = false;
  std::uint64_t version_ = 0;
  std::vector<Block> best_blocks_;
  std::vector<Local> best_order_;
};

}  // namespace

CanonicalCode canonical_code(const RootedComplex& rc) {
  Canonicalizer c(rc);
  c.run();
  return c.code();
}

std::vector<Vertex> canonical_labelling(const RootedComplex& rc) {
  Canonicalizer c(rc);
  c.run();
  return c.labelling();
}

bool rooted_isomorphic(const RootedComplex& a, const RootedComplex& b) {
  const SimplicialComplex& ka = a.complex();
  const SimplicialComplex& kb = b.complex();
  if (ka.dim() != kb.dim()) return false;
  for (int p = 0; p <= ka.dim(); ++p) {
    if (ka.count(p) != kb.count(p)) return false;
  }
  return canonical_code(a) == canonical_code(b);
}

Rational bs_distance(const RootedComplex& a, const RootedComplex& b) {
  const std::size_t na = a.complex().num_vertices();
  const std::size_t nb = b.complex().num_vertices();
  for (std::size_t r = 1;; ++r) {
    RootedComplex ba = ball(a, r);
    RootedComplex bb = ball(b, r);
    if (canonical_code(ba) != canonical_code(bb)) {
      return Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(r - 1));
    }
    if (ba.complex().num_vertices() == na && bb.complex().num_vertices() == nb) return Rational(0);
  }
}

BoundedDistance bs_distance(const RootedComplex& a, const RootedComplex& b, std::size_t r_max) {
  const std::size_t na = a.complex().num_vertices();
  const std::size_t nb = b.complex().num_vertices();
  for (std::size_t r = 1; r <= r_max; ++r) {
    RootedComplex ba = ball(a, r);
    RootedComplex bb = ball(b, r);
    if (canonical_code(ba) != canonical_code(bb)) {
      return {Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(r - 1)), true};
    }
    if (ba.complex().num_vertices() == na && bb.complex().num_vertices() == nb) return {Rational(0), true};
  }
  return {Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(r_max)), false};
}

}  // namespace l2limits

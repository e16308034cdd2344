#include "l2limits/complex.hpp"
#include "l2limits/error.hpp"
#include "l2limits/generators.hpp"
#include "l2limits/scx_io.hpp"
#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace l2limits;

TEST_CASE("closure of a single triangle") {
  const auto k = SimplicialComplex::from_maximal({{0, 1, 2}});
  CHECK(k.simplices(0) == std::vector<Simplex>{{0}, {1}, {2}});
  CHECK(k.simplices(1) == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(k.simplices(2) == std::vector<Simplex>{{0, 1, 2}});
  CHECK(k.dim() == 2);
  CHECK(k.total_simplices() == 7);
}

TEST_CASE("closure of a single vertex and of a hollow triangle") {
  const auto v = SimplicialComplex::from_maximal({{0}});
  CHECK(v.num_vertices() == 1);
  CHECK(v.dim() == 0);
  const auto h = SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}});
  CHECK(h.count(0) == 3);
  CHECK(h.count(1) == 3);
  CHECK(h.count(2) == 0);
}

TEST_CASE("closure sorts vertices and keeps arbitrary ids") {
  const auto k = SimplicialComplex::from_maximal({{17, 4}, {4, 900}});
  CHECK(k.vertices() == std::vector<Vertex>{4, 17, 900});
  CHECK(k.contains({4, 17}));
  CHECK_FALSE(k.contains({17, 900}));
  CHECK(k.neighbors(4) == std::vector<Vertex>{17, 900});
}

TEST_CASE("repeated vertex inside a simplex is malformed") {
  CHECK_THROWS_AS(SimplicialComplex::from_maximal({{0, 1, 1}}), MalformedInput);
}

TEST_CASE("from_closed rejects a set that is not downward closed") {
  CHECK_THROWS_AS(SimplicialComplex::from_closed({{0}, {1}, {0, 1, 2}}), ValidationError);
  CHECK_NOTHROW(SimplicialComplex::from_closed({{0}, {1}, {0, 1}}));
}

TEST_CASE("closure matches the brute-force face enumeration on random inputs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto k = oracle::random_connected(rng, 2 + rng() % 8, rng() % 5, 4);
    const auto faces = oracle::all_faces(k.maximal_simplices());
    REQUIRE(static_cast<int>(faces.size()) == k.dim() + 1);
    for (int p = 0; p <= k.dim(); ++p) CHECK(faces[p] == k.simplices(p));
    CHECK(k.is_downward_closed());
  }
}

TEST_CASE("rooted complex requires a connected complex and a vertex root") {
  CHECK_THROWS_AS(RootedComplex(fixture("two_hollow_triangles"), 0), ValidationError);
  CHECK_THROWS_AS(RootedComplex(fixture("hollow_triangle"), 7), ValidationError);
  CHECK_NOTHROW(RootedComplex(fixture("hollow_triangle"), 2));
}

TEST_CASE("balls of the triangles") {
  const RootedComplex h(fixture("hollow_triangle"), 1);
  const RootedComplex b0 = ball(h, 0);
  CHECK(b0.complex().num_vertices() == 1);
  CHECK(b0.root() == 1);
  CHECK(ball(h, 1).complex() == h.complex());
  const RootedComplex f(fixture("filled_triangle"), 0);
  CHECK(ball(f, 1).complex() == f.complex());
  CHECK(ball(f, 1).complex().count(2) == 1);
}

TEST_CASE("balls agree with the brute-force distance oracle") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const auto k = oracle::random_connected(rng, 2 + rng() % 12, rng() % 6, 4);
    const Vertex root = k.vertices()[rng() % k.num_vertices()];
    for (std::size_t r = 0; r <= 4; ++r) {
      const auto expected = oracle::ball_simplices(k, root, r);
      const RootedComplex b = ball(k, root, r);
      std::set<Simplex> got;
      for (int p = 0; p <= b.complex().dim(); ++p) got.insert(b.complex().simplices(p).begin(), b.complex().simplices(p).end());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("nested balls: ball(ball(rc, r+1), r) = ball(rc, r)") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const RootedComplex rc(oracle::random_connected(rng, 3 + rng() % 10, rng() % 4, 3), 0);
    for (std::size_t r = 0; r < 4; ++r) CHECK(ball(ball(rc, r + 1), r).complex() == ball(rc, r).complex());
  }
}

TEST_CASE("p-degrees") {
  const RootedComplex f(fixture("filled_triangle"), 0);
  CHECK(p_degree(f, 1) == 2);
  CHECK(p_degree(f, 2) == 1);
  CHECK(p_degree(RootedComplex(fixture("single_vertex"), 0), 1) == 0);
  const auto& k = fixture("octahedron");
  for (Vertex v : k.vertices()) CHECK(k.degree(v, 1) == k.neighbors(v).size());
}

TEST_CASE("components and component_of") {
  const auto& k = fixture("two_hollow_triangles");
  CHECK(k.components() == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}});
  CHECK_FALSE(k.is_connected());
  const RootedComplex c = component_of(k, 4);
  CHECK(c.complex().vertices() == std::vector<Vertex>{3, 4, 5});
  CHECK(c.root() == 4);
}

TEST_CASE("scx reading handles comments, blank lines and the root directive") {
  std::istringstream in("# a comment\n\nroot 2\n0 1\n1   2\n# another\n2 0\n");
  const ScxDocument doc = read_scx(in);
  CHECK(doc.root == std::optional<Vertex>(2));
  CHECK(doc.complex == fixture("hollow_triangle"));
}

TEST_CASE("scx errors carry line numbers") {
  std::istringstream bad("0 1\n1 x\n");
  try {
    read_scx(bad);
    FAIL("expected MalformedInput");
  } catch (const MalformedInput& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream dup("root 0\nroot 1\n0 1\n");
  CHECK_THROWS_AS(read_scx(dup), MalformedInput);
  std::istringstream repeated("0 0 1\n");
  CHECK_THROWS_AS(read_scx(repeated), MalformedInput);
  std::istringstream missing_root("root 9\n0 1\n");
  CHECK_THROWS_AS(read_scx(missing_root), MalformedInput);
  CHECK_THROWS_AS(read_scx_file("/nonexistent/file.scx"), MalformedInput);
}

TEST_CASE("scx round trip is bit exact") {
  for (const auto& [name, k] : fixtures()) {
    const std::string once = to_scx(k, k.vertices().front());
    std::istringstream in(once);
    const ScxDocument doc = read_scx(in);
    CHECK(doc.complex == k);
    CHECK(to_scx(doc.complex, doc.root) == once);
  }
}

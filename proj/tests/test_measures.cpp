#include "l2limits/error.hpp"
#include "l2limits/generators.hpp"
#include "l2limits/measure_io.hpp"
#include "l2limits/measures.hpp"
#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace l2limits;

namespace {

RandomRootedComplex point_mass(const SimplicialComplex& k, Vertex root) {
  return RandomRootedComplex::from_weighted({{RootedComplex(k, root), Rational(1)}});
}

const TestFunction& battery_entry(const std::vector<TestFunction>& fs, const std::string& name) {
  for (const auto& f : fs) {
    if (f.name == name) return f;
  }
  throw std::logic_error("no test function " + name);
}

}  // namespace

TEST_CASE("uniform rooting examples") {
  CHECK(uniform_rooting(fixture("hollow_triangle")).support().size() == 1);
  CHECK(uniform_rooting(fixture("two_hollow_triangles")).support().size() == 1);
  CHECK(uniform_rooting(fixture("two_hollow_triangles")).support()[0].weight == 1);

  const auto path = uniform_rooting(fixture("path3"));
  REQUIRE(path.support().size() == 2);
  const CanonicalCode end = canonical_code(RootedComplex(fixture("path3"), 0));
  const CanonicalCode centre = canonical_code(RootedComplex(fixture("path3"), 1));
  for (const auto& sp : path.support()) {
    if (sp.code == end) CHECK(sp.weight == Rational(2, 3));
    else if (sp.code == centre) CHECK(sp.weight == Rational(1, 3));
    else FAIL("unexpected support point");
  }
  CHECK_THROWS_AS(uniform_rooting(SimplicialComplex()), ValidationError);
}

TEST_CASE("support points are sorted, distinct and weighted to one") {
  for (const auto& [name, k] : fixtures()) {
    const auto m = uniform_rooting(k);
    Rational total = 0;
    for (std::size_t i = 0; i < m.support().size(); ++i) {
      total += m.support()[i].weight;
      CHECK(m.support()[i].weight > 0);
      if (i > 0) CHECK(m.support()[i - 1].code < m.support()[i].code);
      CHECK(canonical_code(m.support()[i].representative) == m.support()[i].code);
    }
    CHECK(total == 1);
  }
}

TEST_CASE("weights must be positive and sum to one") {
  const RootedComplex e(fixture("single_edge"), 0);
  CHECK_THROWS_AS(RandomRootedComplex::from_weighted({{e, Rational(1, 2)}}), ValidationError);
  CHECK_THROWS_AS(RandomRootedComplex::from_weighted({{e, Rational(3, 2)}, {e, Rational(-1, 2)}}), ValidationError);
  const auto merged = RandomRootedComplex::from_weighted({{e, Rational(1, 2)}, {RootedComplex(fixture("single_edge"), 1), Rational(1, 2)}});
  CHECK(merged.support().size() == 1);
}

TEST_CASE("ball distributions") {
  const auto c6 = ball_distribution(uniform_rooting(fixture("cycle6")), 1);
  REQUIRE(c6.weights().size() == 1);
  CHECK(c6.weights().begin()->first == canonical_code(RootedComplex(fixture("path3"), 1)));
  CHECK(c6.weights().begin()->second == 1);

  const auto p = ball_distribution(uniform_rooting(fixture("path3")), 1);
  REQUIRE(p.weights().size() == 2);
  std::multiset<Rational> ws;
  for (const auto& [code, w] : p.weights()) ws.insert(w);
  CHECK(ws == std::multiset<Rational>{Rational(1, 3), Rational(2, 3)});

  for (const auto& [name, k] : fixtures()) {
    const auto zero = ball_distribution(uniform_rooting(k), 0);
    REQUIRE(zero.weights().size() == 1);
    CHECK(zero.weights().begin()->second == 1);
  }
}

TEST_CASE("ball distributions from the measure and from the complex agree, in multiples of 1/|V|") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto k = random_flag(6 + rng() % 6, 0.4, 2, rng());
    for (std::size_t r = 0; r <= 3; ++r) {
      const auto direct = ball_distribution(k, r);
      CHECK(direct == ball_distribution(uniform_rooting(k), r));
      Rational total = 0;
      for (const auto& [code, w] : direct.weights()) {
        total += w;
        CHECK(denominator(Rational(w * k.num_vertices())) == 1);
      }
      CHECK(total == 1);
    }
  }
}

TEST_CASE("measure distance examples") {
  const auto c5 = uniform_rooting(fixture("cycle5"));
  const auto c6 = uniform_rooting(fixture("cycle6"));
  CHECK(measure_distance_exact(c5, c5, 10) == 0);
  CHECK(measure_distance_exact(c5, c6, 2) == Rational(1, 4));
  CHECK(measure_distance(c5, c6, 2) == 0.25);
  CHECK(measure_distance_exact(fixture("cycle5"), fixture("cycle6"), 2) == Rational(1, 4));
}

TEST_CASE("measure distance is a pseudometric") {
  std::vector<RandomRootedComplex> ms;
  for (const char* name : {"cycle4", "cycle5", "cycle6", "path5", "star5", "bowtie", "octahedron"}) {
    ms.push_back(uniform_rooting(fixture(name)));
  }
  for (const auto& a : ms) {
    CHECK(measure_distance_exact(a, a, 4) == 0);
    for (const auto& b : ms) {
      const Rational dab = measure_distance_exact(a, b, 4);
      CHECK(dab == measure_distance_exact(b, a, 4));
      CHECK(dab >= 0);
      for (const auto& c : ms) CHECK(measure_distance_exact(a, c, 4) <= dab + measure_distance_exact(b, c, 4));
    }
  }
}

TEST_CASE("mass transport examples") {
  const auto fs = standard_battery();
  REQUIRE(fs.size() == 12);
  const auto path = uniform_rooting(fixture("path3"));
  const auto adjacency = mass_transport_check(path, battery_entry(fs, "adjacent"));
  CHECK(adjacency.lhs == expected_p_degree(path, 1));
  CHECK(adjacency.pass);
  const auto diag = mass_transport_check(path, battery_entry(fs, "degree_on_diagonal"));
  CHECK(diag.lhs == Rational(4, 3));
  CHECK(diag.rhs == Rational(4, 3));
  CHECK(diag.pass);
}

TEST_CASE("end-rooted path is not unimodular") {
  const auto end = point_mass(fixture("path3"), 0);
  const auto res = mass_transport_check(end, battery_entry(standard_battery(), "adjacent_to_degree_two"));
  CHECK(res.lhs == 1);
  CHECK(res.rhs == 0);
  CHECK_FALSE(res.pass);
}

TEST_CASE("uniform rootings pass the whole battery exactly") {
  std::vector<SimplicialComplex> ks;
  for (const auto& [name, k] : fixtures()) ks.push_back(k);
  for (std::uint64_t s = 0; s < 5; ++s) ks.push_back(random_flag(10, 0.35, 3, s));
  for (const auto& k : ks) {
    const auto m = uniform_rooting(k);
    for (const auto& f : standard_battery()) {
      const auto res = mass_transport_check(m, f);
      INFO(f.name);
      CHECK(res.pass);
      CHECK(res.lhs == res.rhs);
    }
  }
}

TEST_CASE("ball table test functions") {
  const RootedComplex centre(fixture("path3"), 1), end(fixture("path3"), 0);
  std::map<std::pair<CanonicalCode, CanonicalCode>, Rational> table;
  const CanonicalCode ce = canonical_code(ball(end, 1)), cc = canonical_code(ball(centre, 1));
  table[{ce, cc}] = 5;
  const TestFunction f = ball_table_function("end_to_centre", 1, 1, table);
  const auto& k = fixture("path3");
  CHECK(f.eval(DoublyRooted{k, 0, 1}) == 5);
  CHECK(f.eval(DoublyRooted{k, 1, 0}) == 0);
  CHECK(f.eval(DoublyRooted{k, 0, 2}) == 0);
  CHECK(mass_transport_check(uniform_rooting(k), f).pass);
  CHECK_FALSE(mass_transport_check(point_mass(k, 0), f).pass);
}

TEST_CASE("expected degrees") {
  const auto f = uniform_rooting(fixture("filled_triangle"));
  CHECK(expected_p_degree(f, 1) == 2);
  CHECK(expected_p_degree(f, 2) == 1);
  CHECK(expected_p_degree(f, 2) / 3 == Rational(1, 3));
  CHECK(expected_p_degree(uniform_rooting(fixture("path3")), 1) == Rational(4, 3));
  for (const auto& [name, k] : fixtures()) {
    for (int p = 0; p <= k.dim(); ++p) {
      CHECK(expected_p_degree(uniform_rooting(k), p) == Rational(BigInt((p + 1) * k.count(p)), BigInt(k.num_vertices())));
    }
  }
}

TEST_CASE("degree truncation examples") {
  const auto star = degree_truncate(fixture("star5"), 3);
  CHECK(star.max_degree() == 3);
  CHECK(star.num_vertices() == 6);
  CHECK(star.count(1) == 3);
  CHECK(star.degree(0) == 3);
  CHECK(star.components().size() == 3);

  CHECK(degree_truncate(fixture("octahedron"), 4) == fixture("octahedron"));

  // Two edges go, one survives with both ends at degree 1; the triangle dies.
  const auto tri = degree_truncate(fixture("filled_triangle"), 1);
  CHECK(tri.num_vertices() == 3);
  CHECK(tri.max_degree() == 1);
  CHECK(tri.count(2) == 0);
  CHECK(tri.simplices(1) == std::vector<Simplex>{{1, 2}});

  CHECK(degree_truncate(fixture("filled_triangle"), 0).count(1) == 0);
}

TEST_CASE("truncation preserves balls away from high-degree vertices") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const auto k = random_flag(14, 0.25, 2, rng());
    const std::size_t cap = 3;
    const auto cut = degree_truncate(k, cap);
    for (Vertex x : k.vertices()) {
      for (std::size_t r = 0; r <= 2; ++r) {
        const RootedComplex b = ball(k, x, r);
        if (b.complex().max_degree() > cap) continue;
        // B_{r+1} decides the degrees of the r-ball vertices.
        bool clean = true;
        for (Vertex v : b.complex().vertices()) clean = clean && k.degree(v) <= cap;
        if (!clean) continue;
        CHECK(canonical_code(ball(cut, x, r)) == canonical_code(b));
      }
    }
  }
}

TEST_CASE("measure files round trip") {
  const auto m = uniform_rooting(fixture("path5"));
  std::stringstream io;
  write_measure(io, m);
  const auto back = read_measure(io);
  REQUIRE(back.support().size() == m.support().size());
  for (std::size_t i = 0; i < m.support().size(); ++i) {
    CHECK(back.support()[i].code == m.support()[i].code);
    CHECK(back.support()[i].weight == m.support()[i].weight);
  }
}

TEST_CASE("measure files: parsing and validation errors") {
  std::istringstream ok(R"({"support":[{"weight":"2/3","maximal_simplices":[[0,1],[1,2]],"root":0},
                                       {"weight":"1/3","maximal_simplices":[[5,6],[6,7]],"root":6}]})");
  CHECK(read_measure(ok).support().size() == 2);
  std::istringstream broken(R"({"support":[{"weight":"1")");
  CHECK_THROWS_AS(read_measure(broken), MalformedInput);
  std::istringstream numeric(R"({"support":[{"weight":1,"maximal_simplices":[[0]],"root":0}]})");
  CHECK_THROWS_AS(read_measure(numeric), MalformedInput);
  std::istringstream short_mass(R"({"support":[{"weight":"1/2","maximal_simplices":[[0]],"root":0}]})");
  CHECK_THROWS_AS(read_measure(short_mass), ValidationError);
  std::istringstream disconnected(R"({"support":[{"weight":"1","maximal_simplices":[[0],[1]],"root":0}]})");
  CHECK_THROWS_AS(read_measure(disconnected), ValidationError);
}

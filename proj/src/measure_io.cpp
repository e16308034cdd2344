#include "l2limits/measure_io.hpp"

#include "l2limits/error.hpp"

#include <json.hpp>

#include <fstream>

namespace l2limits {

using nlohmann::json;

RandomRootedComplex read_measure(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("measure file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("support") || !doc["support"].is_array()) {
    throw MalformedInput("measure file: expected an object with a \"support\" array");
  }
  std::vector<std::pair<RootedComplex, Rational>> points;
  std::size_t index = 0;
  for (const json& entry : doc["support"]) {
    const std::string where = "measure file: support[" + std::to_string(index++) + "]";
    try {
      if (!entry.at("weight").is_string()) throw MalformedInput(where + ": weight must be a string");
      Rational w = parse_rational(entry.at("weight").get<std::string>());
      std::vector<Simplex> top;
      for (const json& s : entry.at("maximal_simplices")) {
        Simplex simplex;
        for (const json& v : s) simplex.push_back(v.get<Vertex>());
        top.push_back(std::move(simplex));
      }
      const auto root = entry.at("root").get<Vertex>();
      points.emplace_back(RootedComplex(SimplicialComplex::from_maximal(top), root), w);
    } catch (const json::exception& e) {
      throw MalformedInput(where + ": " + e.what());
    }
  }
  return RandomRootedComplex::from_weighted(points);
}

RandomRootedComplex read_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  return read_measure(in);
}

void write_measure(std::ostream& out, const RandomRootedComplex& m) {
  json support = json::array();
  for (const SupportPoint& sp : m.support()) {
    json top = json::array();
    for (const Simplex& s : sp.representative.complex().maximal_simplices()) top.push_back(s);
    support.push_back({{"weight", to_string(sp.weight)}, {"maximal_simplices", top}, {"root", 0}});
  }
  out << json{{"support", support}}.dump(2) << '\n';
}

}  // namespace l2limits

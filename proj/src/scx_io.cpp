#include "l2limits/scx_io.hpp"

#include "l2limits/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace l2limits {

namespace {

Vertex parse_vertex(std::string_view token, std::size_t line_no) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw MalformedInput("line " + std::to_string(line_no) + ": '" + std::string(token) +
                         "' is not a non-negative vertex id");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

ScxDocument read_scx(std::istream& in) {
  std::vector<Simplex> simplices;
  std::optional<Vertex> root;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (tokens.front() == "root") {
      if (tokens.size() != 2) throw MalformedInput("line " + std::to_string(line_no) + ": expected 'root <id>'");
      if (root) throw MalformedInput("line " + std::to_string(line_no) + ": duplicate root directive");
      root = parse_vertex(tokens[1], line_no);
      continue;
    }
    Simplex s;
    for (auto t : tokens) s.push_back(parse_vertex(t, line_no));
    simplices.push_back(std::move(s));
  }
  ScxDocument doc;
  try {
    doc.complex = SimplicialComplex::from_maximal(simplices);
  } catch (const MalformedInput& e) {
    throw MalformedInput(std::string("scx: ") + e.what());
  }
  if (root && !doc.complex.has_vertex(*root)) {
    throw MalformedInput("root " + std::to_string(*root) + " is not a vertex of the complex");
  }
  doc.root = root;
  return doc;
}

ScxDocument read_scx_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  return read_scx(in);
}

void write_scx(std::ostream& out, const SimplicialComplex& k, std::optional<Vertex> root) {
  if (root) out << "root " << *root << '\n';
  for (const Simplex& s : k.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ' ';
      out << s[i];
    }
    out << '\n';
  }
}

std::string to_scx(const SimplicialComplex& k, std::optional<Vertex> root) {
  std::ostringstream out;
  write_scx(out, k, root);
  return out.str();
}

}  // namespace l2limits

// l2limits command-line tool.

#include "l2limits/canonical.hpp"
#include "l2limits/error.hpp"
#include "l2limits/estimators.hpp"
#include "l2limits/experiment.hpp"
#include "l2limits/generators.hpp"
#include "l2limits/measure_io.hpp"
#include "l2limits/measures.hpp"
#include "l2limits/rng.hpp"
#include "l2limits/scx_io.hpp"
#include "l2limits/spectral.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace l2limits;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kValidation = 3, kHypothesis = 4, kNumerical = 5 };

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  return out;
}

// "file.scx:3" -> (file.scx, 3); "file.scx" -> (file.scx, root directive).
RootedComplex rooted_argument(const std::string& arg) {
  std::string path = arg;
  std::optional<Vertex> root;
  const auto colon = arg.rfind(':');
  if (colon != std::string::npos) {
    const std::string tail = arg.substr(colon + 1);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
      path = arg.substr(0, colon);
      root = static_cast<Vertex>(std::stoul(tail));
    }
  }
  ScxDocument doc = read_scx_file(path);
  if (!root) root = doc.root;
  if (!root) throw UsageError("'" + arg + "' names no root; use file.scx:ROOT or a root directive");
  return RootedComplex(std::move(doc.complex), *root);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int cmd_validate(const std::string& path) {
  const ScxDocument doc = read_scx_file(path);
  const SimplicialComplex& k = doc.complex;
  std::cout << "vertices: " << k.num_vertices() << "\n";
  std::cout << "dimension: " << k.dim() << "\n";
  for (int p = 0; p <= k.dim(); ++p) std::cout << "simplices[" << p << "]: " << k.count(p) << "\n";
  std::cout << "downward closed: " << (k.is_downward_closed() ? "yes" : "no") << "\n";
  const std::size_t comps = k.components().size();
  std::cout << "components: " << comps << "\n";
  std::cout << "max degree: " << k.max_degree() << "\n";
  if (doc.root) {
    std::cout << "root: " << *doc.root << "\n";
    if (comps != 1) throw ValidationError("a rooted complex must be connected");
  }
  if (!k.is_downward_closed()) throw ValidationError("complex is not downward closed");
  std::cout << "valid\n";
  return kOk;
}

int cmd_betti(const std::string& path, std::optional<int> only_p, bool exact, const std::string& out_path) {
  const SimplicialComplex k = read_scx_file(path).complex;
  if (k.empty()) throw ValidationError("empty complex");
  std::vector<int> dims;
  if (only_p) {
    dims.push_back(*only_p);
  } else {
    for (int p = 0; p <= k.dim(); ++p) dims.push_back(p);
  }
  std::ostringstream csv;
  csv << "p,b_p,normalized\n";
  for (int p : dims) {
    std::size_t b;
    if (exact || k.count(p) > kDenseEigenLimit || p > k.dim() || p < 0) {
      b = betti(k, p);
    } else {
      // Spectral route; spectral_measure cross-checks it against exact rank.
      const Rational zero = spectral_measure(k, p).mass_at_zero();
      b = static_cast<std::size_t>(numerator(Rational(zero * k.num_vertices())));
    }
    const Rational norm(BigInt(b), BigInt(k.num_vertices()));
    std::cout << "p=" << p << " b=" << b << " norm=" << to_string(norm) << "\n";
    csv << p << ',' << b << ',' << to_string(norm) << "\n";
  }
  if (!out_path.empty()) open_output(out_path) << csv.str();
  return kOk;
}

int cmd_spectrum(const std::string& path, int p, const std::string& out_path) {
  const SimplicialComplex k = read_scx_file(path).complex;
  const SpectralMeasure nu = spectral_measure(k, p);
  std::ostringstream csv;
  csv << "eigenvalue,weight\n";
  for (const Atom& a : nu.atoms()) csv << format_double(a.eigenvalue) << ',' << to_string(a.weight) << "\n";
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    open_output(out_path) << csv.str();
  }
  const std::size_t d = k.max_degree();
  std::cout << "nu({0}) = " << to_string(nu.mass_at_zero()) << "\n";
  std::cout << "nu(R) = " << to_string(nu.total_mass()) << "\n";
  std::cout << "spectral radius = " << format_double(nu.spectral_radius()) << "\n";
  std::cout << "max degree D = " << d << "\n";
  std::cout << "a priori bound 2 sqrt((p+2) D) = " << format_double(2 * std::sqrt((p + 2.0) * d)) << "\n";
  std::cout << "Schur bound = " << format_double(a_priori_radius(p, d)) << "\n";
  return kOk;
}

int cmd_canon(const std::string& path, std::optional<Vertex> root_opt) {
  ScxDocument doc = read_scx_file(path);
  std::optional<Vertex> root = root_opt ? root_opt : doc.root;
  if (!root) throw UsageError("no root given; use --root");
  const RootedComplex rc = component_of(doc.complex, *root);
  const CanonicalCode code = canonical_code(rc);
  std::cout << "code: " << code.to_string() << "\n";
  std::cout << "# minimal representative\n";
  write_scx(std::cout, code.decode(), Vertex{0});
  return kOk;
}

int cmd_bs_distance(const std::string& a, const std::string& b, std::optional<std::size_t> r_max) {
  const RootedComplex ra = rooted_argument(a);
  const RootedComplex rb = rooted_argument(b);
  if (r_max) {
    const BoundedDistance d = bs_distance(ra, rb, *r_max);
    std::cout << to_string(d.value) << (d.exact ? "" : " (upper bound; balls agree up to rmax)") << "\n";
  } else {
    std::cout << to_string(bs_distance(ra, rb)) << "\n";
  }
  return kOk;
}

int cmd_measure_distance(const std::string& a, const std::string& b, std::size_t r_max) {
  const RandomRootedComplex ma = read_measure_file(a);
  const RandomRootedComplex mb = read_measure_file(b);
  const Rational d = measure_distance_exact(ma, mb, r_max);
  std::cout << to_string(d) << " (" << format_double(to_double(d)) << ")\n";
  return kOk;
}

int cmd_mass_transport(const std::string& path, const std::string& battery) {
  if (battery != "standard") throw UsageError("unknown battery '" + battery + "'");
  const RandomRootedComplex m = read_measure_file(path);
  std::cout << "function,lhs,rhs,pass\n";
  std::size_t failures = 0;
  for (const TestFunction& f : standard_battery()) {
    const MassTransportResult res = mass_transport_check(m, f);
    failures += !res.pass;
    std::cout << f.name << ',' << to_string(res.lhs) << ',' << to_string(res.rhs) << ','
              << (res.pass ? "true" : "false") << "\n";
  }
  std::cout << "# " << failures << " of " << standard_battery().size() << " functions fail\n";
  return kOk;
}

int cmd_truncate(const std::string& path, std::size_t degree) {
  const SimplicialComplex k = read_scx_file(path).complex;
  write_scx(std::cout, degree_truncate(k, degree));
  return kOk;
}

struct GenerateArgs {
  std::size_t n = 0;
  double prob = 0;
  int dim = 2;
  int max_dim = 2;
  std::uint64_t seed = 0;
  std::string name;
  std::string out;
};

void emit(const SimplicialComplex& k, const std::string& out) {
  if (out.empty()) {
    write_scx(std::cout, k);
  } else {
    std::ofstream f = open_output(out);
    write_scx(f, k);
  }
}

struct ConvergeArgs {
  std::string family = "torus2d";
  std::string levels = "4,8,16,32";
  int p = 1;
  int moments = 4;
  std::string eps = "0.1,0.01";
  std::size_t r_max = 2;
  double scale = 1.0;
  int max_dim = 2;
  std::uint64_t seed = 0;
  std::optional<std::size_t> degree_bound;
  std::optional<std::size_t> truncate;
  std::string out = "experiment.csv";
};

SimplicialComplex family_member(const ConvergeArgs& args, std::size_t n, std::size_t index) {
  const std::uint64_t seed = stream_seed(args.seed, index);
  const double prob = std::min(1.0, args.scale / static_cast<double>(n));
  if (args.family == "torus2d") return torus_tower(2, n);
  if (args.family == "cycle") return torus_tower(1, n);
  if (args.family == "lm") return linial_meshulam(2, n, prob, seed);
  if (args.family == "flag") return random_flag(n, prob, args.max_dim, seed);
  throw UsageError("unknown family '" + args.family + "' (torus2d, cycle, lm, flag)");
}

int cmd_converge(const ConvergeArgs& args) {
  std::vector<std::size_t> labels;
  for (const std::string& s : split(args.levels, ',')) labels.push_back(std::stoul(s));
  if (labels.empty()) throw UsageError("--levels is empty");
  ExperimentConfig cfg;
  cfg.p = args.p;
  cfg.max_order = args.moments;
  cfg.r_max = args.r_max;
  cfg.eps.clear();
  for (const std::string& s : split(args.eps, ',')) cfg.eps.push_back(std::stod(s));
  cfg.degree_bound = args.truncate ? args.truncate : args.degree_bound;

  std::vector<SimplicialComplex> levels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    SimplicialComplex k = family_member(args, labels[i], i);
    if (args.truncate) k = degree_truncate(k, *args.truncate);
    levels.push_back(std::move(k));
  }
  const ExperimentReport report = convergence_experiment(levels, labels, cfg);
  std::ofstream out = open_output(args.out);
  write_experiment_csv(out, report);
  std::cout << experiment_summary(report) << "wrote " << args.out << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral and local statistics of simplicial complexes"};
  app.require_subcommand(1);
  int status = kOk;
  std::function<int()> action;

  std::string file, file_b, battery = "standard", out;
  std::optional<int> p_opt;
  int p = 1;
  bool exact = false;
  std::optional<Vertex> root;
  std::optional<std::size_t> r_max;
  std::size_t r_max_required = 2, degree = 0;

  auto* validate = app.add_subcommand("validate", "Check closure and connectivity of a .scx file");
  validate->add_option("file", file, "complex")->required();
  validate->callback([&] { action = [&] { return cmd_validate(file); }; });

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers and b_p/|V|");
  betti_cmd->add_option("file", file, "complex")->required();
  betti_cmd->add_option("--p", p_opt, "single dimension");
  betti_cmd->add_flag("--exact", exact, "exact rank only, no eigensolver");
  betti_cmd->add_option("--out", out, "also write betti.csv");
  betti_cmd->callback([&] { action = [&] { return cmd_betti(file, p_opt, exact, out); }; });

  auto* spectrum = app.add_subcommand("spectrum", "Atoms of the spectral measure of Delta_p");
  spectrum->add_option("file", file, "complex")->required();
  spectrum->add_option("--p", p, "dimension")->required();
  spectrum->add_option("--out", out, "write spectrum.csv instead of stdout");
  spectrum->callback([&] { action = [&] { return cmd_spectrum(file, p, out); }; });

  auto* canon = app.add_subcommand("canon", "Canonical code of a rooted complex");
  canon->add_option("file", file, "complex")->required();
  canon->add_option("--root", root, "root vertex (default: root directive)");
  canon->callback([&] { action = [&] { return cmd_canon(file, root); }; });

  auto* bs = app.add_subcommand("bs-distance", "Distance between rooted complexes FILE:ROOT");
  bs->add_option("a", file, "first rooted complex")->required();
  bs->add_option("b", file_b, "second rooted complex")->required();
  bs->add_option("--rmax", r_max, "largest radius compared");
  bs->callback([&] { action = [&] { return cmd_bs_distance(file, file_b, r_max); }; });

  auto* md = app.add_subcommand("measure-distance", "Weighted ball-distribution distance of two measures");
  md->add_option("m1", file, "measure JSON")->required();
  md->add_option("m2", file_b, "measure JSON")->required();
  md->add_option("--rmax", r_max_required, "largest radius")->required();
  md->callback([&] { action = [&] { return cmd_measure_distance(file, file_b, r_max_required); }; });

  auto* mt = app.add_subcommand("mass-transport", "Mass-transport check of a measure");
  mt->add_option("file", file, "measure JSON")->required();
  mt->add_option("--battery", battery, "test-function battery")->capture_default_str();
  mt->callback([&] { action = [&] { return cmd_mass_transport(file, battery); }; });

  auto* trunc = app.add_subcommand("truncate", "Cap the vertex degree by removing edges");
  trunc->add_option("file", file, "complex")->required();
  trunc->add_option("--degree", degree, "degree cap D")->required();
  trunc->callback([&] { action = [&] { return cmd_truncate(file, degree); }; });

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated complex as .scx");
  generate->require_subcommand(1);
  generate->add_option("--out", gen.out, "output file (default stdout)");
  auto* g_torus = generate->add_subcommand("torus2d", "n x n torus triangulation");
  g_torus->add_option("--n", gen.n, "side length")->required();
  g_torus->callback([&] { action = [&] { emit(torus_tower(2, gen.n), gen.out); return kOk; }; });
  auto* g_cycle = generate->add_subcommand("cycle", "cycle graph C_n");
  g_cycle->add_option("--n", gen.n, "length")->required();
  g_cycle->callback([&] { action = [&] { emit(torus_tower(1, gen.n), gen.out); return kOk; }; });
  auto* g_lm = generate->add_subcommand("lm", "Linial-Meshulam complex Y_d(n, p)");
  g_lm->add_option("--n", gen.n, "vertices")->required();
  g_lm->add_option("--prob", gen.prob, "face probability")->required();
  g_lm->add_option("--dim", gen.dim, "dimension d")->capture_default_str();
  g_lm->add_option("--seed", gen.seed, "seed")->capture_default_str();
  g_lm->callback([&] {
    action = [&] { emit(linial_meshulam(gen.dim, gen.n, gen.prob, gen.seed), gen.out); return kOk; };
  });
  auto* g_flag = generate->add_subcommand("flag", "random flag complex X(n, p)");
  g_flag->add_option("--n", gen.n, "vertices")->required();
  g_flag->add_option("--prob", gen.prob, "edge probability")->required();
  g_flag->add_option("--maxdim", gen.max_dim, "largest simplex dimension")->capture_default_str();
  g_flag->add_option("--seed", gen.seed, "seed")->capture_default_str();
  g_flag->callback([&] {
    action = [&] { emit(random_flag(gen.n, gen.prob, gen.max_dim, gen.seed), gen.out); return kOk; };
  });
  auto* g_fixture = generate->add_subcommand("fixture", "named small complex");
  g_fixture->add_option("name", gen.name, "fixture name")->required();
  g_fixture->callback([&] { action = [&] { emit(fixture(gen.name), gen.out); return kOk; }; });

  ConvergeArgs conv;
  auto* converge = app.add_subcommand("converge", "Convergence experiment along a family of complexes");
  converge->add_option("--family", conv.family, "torus2d, cycle, lm or flag")->capture_default_str();
  converge->add_option("--levels", conv.levels, "comma-separated sizes")->capture_default_str();
  converge->add_option("--p", conv.p, "dimension")->capture_default_str();
  converge->add_option("--moments", conv.moments, "largest moment order")->capture_default_str();
  converge->add_option("--eps", conv.eps, "comma-separated eps values")->capture_default_str();
  converge->add_option("--rmax", conv.r_max, "radius range of dist_to_last")->capture_default_str();
  converge->add_option("--scale", conv.scale, "random families use probability scale/n")->capture_default_str();
  converge->add_option("--maxdim", conv.max_dim, "flag family simplex dimension")->capture_default_str();
  converge->add_option("--seed", conv.seed, "master seed")->capture_default_str();
  converge->add_option("--degree-bound", conv.degree_bound, "uniform degree bound D");
  converge->add_option("--truncate", conv.truncate, "cap degrees at D before measuring");
  converge->add_option("--out", conv.out, "CSV output")->capture_default_str();
  converge->callback([&] { action = [&] { return cmd_converge(conv); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    status = action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedInput& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const NumericalMismatch& e) {
    std::cerr << "numerical cross-check failed: " << e.what() << "\n";
    return kNumerical;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kValidation;
  } catch (const std::length_error& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return kValidation;
  }
  return status;
}

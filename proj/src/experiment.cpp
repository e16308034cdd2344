#include "l2limits/experiment.hpp"

#include "l2limits/error.hpp"
#include "l2limits/measures.hpp"
#include "l2limits/parallel.hpp"
#include "l2limits/spectral.hpp"

#include <ostream>
#include <sstream>

namespace l2limits {

std::string to_string(Trend t) {
  switch (t) {
    case Trend::Constant: return "constant";
    case Trend::NonIncreasing: return "non-increasing";
    case Trend::NonDecreasing: return "non-decreasing";
    case Trend::Mixed: return "mixed";
  }
  return "mixed";
}

namespace {

Trend trend_of(const std::vector<Rational>& xs) {
  bool up = false, down = false;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    up = up || xs[i] > xs[i - 1];
    down = down || xs[i] < xs[i - 1];
  }
  if (up && down) return Trend::Mixed;
  if (up) return Trend::NonDecreasing;
  if (down) return Trend::NonIncreasing;
  return Trend::Constant;
}

}  // namespace

ExperimentReport convergence_experiment(const std::vector<SimplicialComplex>& levels,
                                        const std::vector<std::size_t>& labels, const ExperimentConfig& config) {
  if (levels.empty()) throw ValidationError("convergence experiment needs at least one level");
  if (labels.size() != levels.size()) throw ValidationError("one label per level is required");
  if (config.max_order < 0) throw ValidationError("moment order must be non-negative");
  for (double e : config.eps) {
    if (!(e > 0.0 && e < 1.0)) throw ValidationError("eps must lie strictly between 0 and 1");
  }

  ExperimentReport report;
  report.config = config;
  report.degree_bound = config.degree_bound.value_or(levels.front().max_degree());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].empty()) throw ValidationError("level " + std::to_string(labels[i]) + " is empty");
    const std::size_t deg = levels[i].max_degree();
    if (deg > report.degree_bound) {
      throw HypothesisViolation("level " + std::to_string(labels[i]) + " has vertex degree " + std::to_string(deg) +
                                " above the bound " + std::to_string(report.degree_bound) +
                                "; convergence of l2-Betti numbers needs uniformly bounded degree");
    }
  }

  const int p = config.p;
  report.rows.resize(levels.size());
  parallel_for(levels.size(), [&](std::size_t i) {
    const SimplicialComplex& k = levels[i];
    LevelRow& row = report.rows[i];
    row.n = labels[i];
    row.num_vertices = k.num_vertices();
    row.max_degree = k.max_degree();
    row.betti = betti(k, p);
    row.betti_normalized = betti_normalized(k, p);
    row.moments = moments_of_complex(k, p, config.max_order).exact;
    const bool dense = k.count(p) <= kDenseEigenLimit;
    std::optional<SpectralMeasure> nu;
    if (dense) nu = spectral_measure(k, p);
    for (double e : config.eps) {
      if (nu) {
        row.near_zero.emplace_back(nu->near_zero_mass(e));
        row.spectral_bounds.push_back(kernel_mass_bound(*nu, report.degree_bound, e));
      } else {
        row.near_zero.emplace_back(std::nullopt);
      }
    }
    if (nu) row.spectral_radius = nu->spectral_radius();
    row.distance_to_last = measure_distance_exact(k, levels.back(), config.r_max);
  });

  for (double e : config.eps) report.a_priori_bounds.push_back(kernel_mass_bound(report.degree_bound, p, e));
  std::vector<Rational> betti_seq, dist_seq;
  for (const LevelRow& row : report.rows) {
    betti_seq.push_back(row.betti_normalized);
    dist_seq.push_back(row.distance_to_last);
  }
  report.betti_trend = trend_of(betti_seq);
  report.distance_trend = trend_of(dist_seq);
  return report;
}

void write_experiment_csv(std::ostream& out, const ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  out << "n,|V|,p,b_p,b_p_normalized";
  for (int r = 0; r <= cfg.max_order; ++r) out << ",m" << r;
  for (double e : cfg.eps) out << ",nu_eps_" << format_double(e);
  out << ",dist_to_last\n";
  for (const LevelRow& row : report.rows) {
    out << row.n << ',' << row.num_vertices << ',' << cfg.p << ',' << row.betti << ','
        << format_double(to_double(row.betti_normalized));
    for (const Rational& m : row.moments) out << ',' << to_string(m);
    for (const auto& nz : row.near_zero) out << ',' << (nz ? to_string(*nz) : std::string("NA"));
    out << ',' << to_string(row.distance_to_last) << '\n';
  }
  for (const KernelBound& kb : report.a_priori_bounds) {
    out << "# kernel_mass_bound p=" << kb.p << " D=" << kb.max_degree << " eps=" << format_double(kb.eps)
        << " radius=" << format_double(kb.radius) << " (a priori) bound=" << format_double(kb.bound) << '\n';
  }
  for (const LevelRow& row : report.rows) {
    for (const KernelBound& kb : row.spectral_bounds) {
      out << "# kernel_mass_bound n=" << row.n << " p=" << kb.p << " D=" << kb.max_degree
          << " eps=" << format_double(kb.eps) << " radius=" << format_double(kb.radius)
          << " bound=" << format_double(kb.bound) << " observed=" << to_string(kb.observed)
          << " holds=" << (kb.holds ? "true" : "false") << '\n';
    }
  }
}

std::string experiment_summary(const ExperimentReport& report) {
  std::ostringstream out;
  out << "levels: " << report.rows.size() << ", p = " << report.config.p << ", degree bound D = "
      << report.degree_bound << '\n';
  for (const LevelRow& row : report.rows) {
    out << "  n=" << row.n << " |V|=" << row.num_vertices << " b_p=" << row.betti
        << " b_p/|V|=" << to_string(row.betti_normalized) << " dist_to_last=" << to_string(row.distance_to_last);
    if (row.spectral_radius) out << " spectral_radius=" << format_double(*row.spectral_radius);
    out << '\n';
  }
  out << "normalized Betti trend: " << to_string(report.betti_trend) << '\n';
  out << "distance-to-last trend: " << to_string(report.distance_trend) << '\n';
  bool all_hold = true;
  for (const LevelRow& row : report.rows) {
    for (const KernelBound& kb : row.spectral_bounds) all_hold = all_hold && kb.holds;
  }
  out << "kernel mass bounds: " << (all_hold ? "hold" : "VIOLATED") << " on every level with a spectrum\n";
  return out.str();
}

}  // namespace l2limits

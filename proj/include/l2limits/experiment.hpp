#pragma once

#include "l2limits/complex.hpp"
#include "l2limits/estimators.hpp"
#include "l2limits/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace l2limits {

struct ExperimentConfig {
  int p = 1;
  int max_order = 4;
  std::vector<double> eps{0.1, 0.01};
  std::size_t r_max = 2;  // radius range of the distance to the last level
  /// Uniform degree cap; defaults to the largest degree of the first level.
  std::optional<std::size_t> degree_bound;
};

struct LevelRow {
  std::size_t n = 0;  // level parameter as given by the caller
  std::size_t num_vertices = 0;
  std::size_t max_degree = 0;
  std::size_t betti = 0;
  Rational betti_normalized;
  std::vector<Rational> moments;  // exact m_0..m_R
  /// nu((-eps, eps)) per eps; empty when the complex is too large for the
  /// dense eigensolver.
  std::vector<std::optional<Rational>> near_zero;
  std::optional<double> spectral_radius;
  std::vector<KernelBound> spectral_bounds;  // per eps, when a spectrum exists
  Rational distance_to_last;
};

enum class Trend { Constant, NonIncreasing, NonDecreasing, Mixed };

std::string to_string(Trend t);

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t degree_bound = 0;
  std::vector<LevelRow> rows;
  std::vector<KernelBound> a_priori_bounds;  // per eps
  Trend betti_trend = Trend::Constant;
  Trend distance_trend = Trend::Constant;
};

/// Runs every level (in parallel) and collects normalized Betti numbers,
/// exact moments, near-zero spectral masses and the distance of each
/// level's ball statistics to those of the last level. Throws
/// HypothesisViolation when a level exceeds the degree bound.
ExperimentReport convergence_experiment(const std::vector<SimplicialComplex>& levels,
                                        const std::vector<std::size_t>& labels, const ExperimentConfig& config);

/// Columns n,|V|,p,b_p,b_p_normalized,m0..mR,nu_eps_<eps>...,dist_to_last,
/// then '#' footer lines with the kernel mass bounds.
void write_experiment_csv(std::ostream& out, const ExperimentReport& report);

/// Human-readable summary with trends and bound checks.
std::string experiment_summary(const ExperimentReport& report);

}  // namespace l2limits

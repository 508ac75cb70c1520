#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "acmv/types.hpp"

namespace acmv::afa {

struct AFAConfig {
  double alpha = 0.6;  // distance coefficient, (0, 1]
  double beta = 0.3;   // randomness coefficient, [0, 1]
  double gamma = 0.6;  // vortex coefficient, [0, 1]
  int s = 0;           // 0 small-region wandering, 1 large-region wandering
  int population = 50;
  Bounds bounds;
  int iterations = 50;
  std::uint64_t seed = 1;
  long max_evaluations = 0; // 0 = unlimited; used for equal-budget comparisons

  // Maximum boundary difference, scaling large-region random steps.
  double delta_b() const { return bounds.hi - bounds.lo; }
};

void validate(const AFAConfig& cfg);

struct Firefly {
  OperatingPoint position;
  double intensity = 0.0; // brightness I = -g, so the brightest minimizes g
};

using Swarm = std::vector<Firefly>;

// Uniform seeded positions with evaluated intensities.
Swarm init(const AFAConfig& cfg, const ObjectiveFn& objective);

// One movement round. The brightest position at the start of the step is the
// attractor; dimmer fireflies move by attraction plus scaled Gaussian noise,
// the brightest by noise alone. Positions are clamped to the box and all
// intensities re-evaluated. Per firefly, three per-coordinate noise draws are
// consumed from rng in swarm order.
Swarm step(const AFAConfig& cfg, const Swarm& swarm, const ObjectiveFn& objective,
           std::mt19937_64& rng);

struct HistoryEntry {
  int iteration = 0; // 0 = initial population
  int firefly_id = 0;
  OperatingPoint w;
  double g = 0.0;
  bool is_global_best = false; // this evaluation improved the running best
};

struct Result {
  OperatingPoint w_best;
  double g_best = 0.0;
  std::vector<HistoryEntry> history;
};

// init plus `iterations` steps; returns the best position ever evaluated.
// When max_evaluations > 0, iterations stop before a step would exceed it.
Result optimize(const ObjectiveFn& objective, const AFAConfig& cfg);

// Header: iteration,firefly_id,w1,w2,w3,g,is_global_best
void write_history_csv(std::ostream& out, const std::vector<HistoryEntry>& history);

} // namespace acmv::afa

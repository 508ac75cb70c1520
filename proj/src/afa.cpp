#include "acmv/afa.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "acmv/csv.hpp"
#include "acmv/errors.hpp"
#include "acmv/rng.hpp"

namespace acmv::afa {

void validate(const AFAConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0))
    throw InvalidArgumentError("afa: alpha must be in (0, 1]");
  if (cfg.beta < 0.0 || cfg.beta > 1.0)
    throw InvalidArgumentError("afa: beta must be in [0, 1]");
  if (cfg.gamma < 0.0 || cfg.gamma > 1.0)
    throw InvalidArgumentError("afa: gamma must be in [0, 1]");
  if (cfg.s != 0 && cfg.s != 1) throw InvalidArgumentError("afa: s must be 0 or 1");
  if (cfg.population < 2) throw InvalidArgumentError("afa: population must be >= 2");
  if (cfg.iterations < 0) throw InvalidArgumentError("afa: iterations must be >= 0");
  if (cfg.bounds.lo >= cfg.bounds.hi) throw InvalidArgumentError("afa: empty bounds");
  if (cfg.max_evaluations < 0)
    throw InvalidArgumentError("afa: max_evaluations must be >= 0");
}

namespace {

Swarm init_with(const AFAConfig& cfg, const ObjectiveFn& objective, std::mt19937_64& rng) {
  Swarm swarm(static_cast<std::size_t>(cfg.population));
  for (auto& fly : swarm) {
    fly.position = sample_point(cfg.bounds, rng);
    fly.intensity = -objective(fly.position);
  }
  return swarm;
}

} // namespace

Swarm init(const AFAConfig& cfg, const ObjectiveFn& objective) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  return init_with(cfg, objective, rng);
}

Swarm step(const AFAConfig& cfg, const Swarm& swarm, const ObjectiveFn& objective,
           std::mt19937_64& rng) {
  validate(cfg);
  if (swarm.empty()) throw InvalidArgumentError("afa: empty swarm");

  // Attractor fixed at the step's start.
  std::size_t brightest = 0;
  for (std::size_t i = 1; i < swarm.size(); ++i)
    if (swarm[i].intensity > swarm[brightest].intensity) brightest = i;
  const OperatingPoint w_max = swarm[brightest].position;
  const double i_max = swarm[brightest].intensity;

  const double noise_scale = cfg.beta * ((cfg.delta_b() - 1.0) * cfg.s + 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Swarm next(swarm.size());
  for (std::size_t i = 0; i < swarm.size(); ++i) {
    OperatingPoint w = swarm[i].position;
    double eps[3];
    for (double& e : eps) e = gauss(rng);
    if (swarm[i].intensity < i_max) {
      for (int c = 0; c < 3; ++c)
        w[c] += cfg.alpha * cfg.gamma * (w_max[c] - w[c]) + noise_scale * eps[c];
    } else {
      for (int c = 0; c < 3; ++c) w[c] += noise_scale * eps[c];
    }
    next[i].position = cfg.bounds.clamp(w);
    next[i].intensity = -objective(next[i].position);
  }
  return next;
}

Result optimize(const ObjectiveFn& objective, const AFAConfig& cfg) {
  validate(cfg);

  Result result;
  result.g_best = std::numeric_limits<double>::infinity();
  long evaluations = 0;

  auto record = [&](int iteration, const Swarm& swarm) {
    for (std::size_t i = 0; i < swarm.size(); ++i) {
      const double g = -swarm[i].intensity;
      const bool improved = g < result.g_best;
      if (improved) {
        result.g_best = g;
        result.w_best = swarm[i].position;
      }
      result.history.push_back({iteration, static_cast<int>(i), swarm[i].position, g, improved});
    }
    evaluations += static_cast<long>(swarm.size());
  };

  // Movement noise continues the same stream the initial placement used.
  std::mt19937_64 rng(cfg.seed);
  Swarm swarm = init_with(cfg, objective, rng);
  record(0, swarm);

  for (int it = 1; it <= cfg.iterations; ++it) {
    if (cfg.max_evaluations > 0 && evaluations + cfg.population > cfg.max_evaluations)
      break;
    swarm = step(cfg, swarm, objective, rng);
    record(it, swarm);
  }
  return result;
}

void write_history_csv(std::ostream& out, const std::vector<HistoryEntry>& history) {
  out << "iteration,firefly_id,w1,w2,w3,g,is_global_best\n";
  for (const auto& h : history) {
    out << h.iteration << ',' << h.firefly_id << ',' << csv_double(h.w.w1) << ','
        << csv_double(h.w.w2) << ',' << csv_double(h.w.w3) << ',' << csv_double(h.g)
        << ',' << (h.is_global_best ? 1 : 0) << '\n';
  }
}

} // namespace acmv::afa

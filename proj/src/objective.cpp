#include "acmv/objective.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include "acmv/csv.hpp"
#include "acmv/errors.hpp"
#include "acmv/rng.hpp"

namespace acmv::objective {

void validate(const ObjectiveConfig& cfg) {
  if (cfg.lambda < 0.0 || cfg.lambda > 1.0)
    throw InvalidArgumentError("objective: lambda must be in [0, 1]");
  if (!(cfg.sigma_e > 0.0)) throw InvalidArgumentError("objective: sigma_e must be > 0");
  if (!(cfg.sigma_pts > 0.0)) throw InvalidArgumentError("objective: sigma_pts must be > 0");
  if (!(cfg.z > 0.0)) throw InvalidArgumentError("objective: z must be > 0");
  if (!(cfg.e_bench > 0.0)) throw InvalidArgumentError("objective: e_bench must be > 0");
}

double normalize_energy(const ObjectiveConfig& cfg, double e_kwh) {
  validate(cfg);
  return (e_kwh - cfg.mu_e) / (cfg.z * cfg.sigma_e);
}

double normalize_pts(const ObjectiveConfig& cfg, int pts_abs) {
  validate(cfg);
  if (pts_abs != 0 && pts_abs != 1)
    throw InvalidArgumentError("normalize_pts: |PTS| must be 0 or 1");
  return (static_cast<double>(pts_abs) - cfg.mu_pts) / (cfg.z * cfg.sigma_pts);
}

double objective_g(const ObjectiveConfig& cfg, double e_kwh, int pts_abs) {
  return cfg.lambda * normalize_energy(cfg, e_kwh) +
         (1.0 - cfg.lambda) * normalize_pts(cfg, pts_abs);
}

double esr(const ObjectiveConfig& cfg, double e_kwh) {
  if (!(cfg.e_bench > 0.0)) throw InvalidArgumentError("esr: e_bench must be > 0");
  return 100.0 * (e_kwh - cfg.e_bench) / cfg.e_bench;
}

double annual_saving(double esr_pct, double daily_kwh, double tariff_per_kwh, int days) {
  if (!(daily_kwh > 0.0)) throw InvalidArgumentError("annual_saving: daily_kwh must be > 0");
  if (days < 1) throw InvalidArgumentError("annual_saving: days must be >= 1");
  return std::abs(esr_pct) / 100.0 * daily_kwh * static_cast<double>(days) * tariff_per_kwh;
}

int pts_abs_at(const EvalModels& models, const OperatingPoint& w) {
  const double t_air = plant::air_temperature(models.plant, w);
  comfort::PTSFeatures f;
  f.t_s = comfort::skin_temperature_response(t_air);
  f.t_s_grad = 0.0; // steady state
  const double area = comfort::effective_area(models.occupant);
  f.t_s_norm = f.t_s / area;
  f.t_s_grad_norm = 0.0;
  return std::abs(comfort::pts_predict(models.pts.net, models.pts.stats, f));
}

double pmv_at(const EvalModels& models, const OperatingPoint& w) {
  const double t_air = plant::air_temperature(models.plant, w);
  const double v = plant::air_velocity(models.plant, w);
  return comfort::pmv(t_air, t_air, v, models.plant.humidity, models.occupant);
}

CalibrationStats calibrate_stats(const std::function<double(const OperatingPoint&)>& energy_fn,
                                 const std::function<int(const OperatingPoint&)>& pts_abs_fn,
                                 const Bounds& bounds, int n, std::uint64_t seed) {
  if (n < 100) throw InvalidArgumentError("calibrate_stats: n must be >= 100");
  std::mt19937_64 rng(seed);
  std::vector<double> energies, pts;
  energies.reserve(static_cast<std::size_t>(n));
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const OperatingPoint w = sample_point(bounds, rng);
    energies.push_back(energy_fn(w));
    pts.push_back(static_cast<double>(pts_abs_fn(w)));
  }

  auto mean_std = [n](const std::vector<double>& v) {
    double mu = 0.0;
    for (double x : v) mu += x;
    mu /= n;
    double ss = 0.0;
    for (double x : v) ss += (x - mu) * (x - mu);
    return std::pair<double, double>{mu, std::sqrt(ss / (n - 1.0))};
  };
  CalibrationStats stats;
  std::tie(stats.mu_e, stats.sigma_e) = mean_std(energies);
  std::tie(stats.mu_pts, stats.sigma_pts) = mean_std(pts);
  if (!(stats.sigma_e > 0.0))
    throw NumericError("calibrate_stats: energy is constant over the box (sigma_E = 0)");
  if (!(stats.sigma_pts > 0.0))
    throw NumericError("calibrate_stats: |PTS| is constant over the box (sigma_PTS = 0); "
                       "widen the scenario");
  return stats;
}

CalibrationStats calibrate_stats(const EvalModels& models, int n, std::uint64_t seed) {
  return calibrate_stats(
      [&](const OperatingPoint& w) { return plant::energy(models.plant, w); },
      [&](const OperatingPoint& w) { return pts_abs_at(models, w); },
      models.plant.bounds, n, seed);
}

ObjectiveConfig make_objective_config(const CalibrationStats& stats, double lambda,
                                      double z, double e_bench, const Bounds& bounds) {
  ObjectiveConfig cfg;
  cfg.lambda = lambda;
  cfg.mu_e = stats.mu_e;
  cfg.sigma_e = stats.sigma_e;
  cfg.mu_pts = stats.mu_pts;
  cfg.sigma_pts = stats.sigma_pts;
  cfg.z = z;
  cfg.e_bench = e_bench;
  cfg.bounds = bounds;
  validate(cfg);
  return cfg;
}

ObjectiveFn make_objective(const EvalModels& models, const ObjectiveConfig& cfg) {
  validate(cfg);
  return [models, cfg](const OperatingPoint& w) {
    return objective_g(cfg, plant::energy(models.plant, w), pts_abs_at(models, w));
  };
}

EvaluationRecord evaluate(const EvalModels& models, const ObjectiveConfig& cfg,
                          const OperatingPoint& w) {
  EvaluationRecord rec;
  rec.w = w;
  rec.energy = plant::energy(models.plant, w);
  rec.pts_abs = pts_abs_at(models, w);
  rec.pmv = pmv_at(models, w);
  rec.g = objective_g(cfg, rec.energy, rec.pts_abs);
  rec.esr = esr(cfg, rec.energy);
  return rec;
}

void write_records_csv(std::ostream& out, const std::vector<EvaluationRecord>& records) {
  out << "w1,w2,w3,energy,pts_abs,pmv,g,esr\n";
  for (const auto& r : records) {
    out << csv_double(r.w.w1) << ',' << csv_double(r.w.w2) << ',' << csv_double(r.w.w3)
        << ',' << csv_double(r.energy) << ',' << r.pts_abs << ',' << csv_double(r.pmv)
        << ',' << csv_double(r.g) << ',' << csv_double(r.esr) << '\n';
  }
}

} // namespace acmv::objective

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "acmv/comfort.hpp"
#include "acmv/plant.hpp"
#include "acmv/types.hpp"

namespace acmv::objective {

// Normalization statistics and weight for g(lambda, w).
struct ObjectiveConfig {
  double lambda = 0.5;   // user preference, 1 = pure energy
  double mu_e = 0.0;     // energy mean, kWh/day
  double sigma_e = 1.0;  // energy std
  double mu_pts = 0.0;   // |PTS| mean
  double sigma_pts = 1.0;
  double z = 1.0;        // normalization scale factor
  double e_bench = 73.741;
  Bounds bounds;
};

void validate(const ObjectiveConfig& cfg);

// (e - mu_E) / (z sigma_E)
double normalize_energy(const ObjectiveConfig& cfg, double e_kwh);

// (|PTS| - mu_PTS) / (z sigma_PTS); pts_abs must be 0 or 1.
double normalize_pts(const ObjectiveConfig& cfg, int pts_abs);

// lambda * E_norm + (1 - lambda) * |PTS|_norm
double objective_g(const ObjectiveConfig& cfg, double e_kwh, int pts_abs);

// 100 (e - e_bench) / e_bench, percent; negative means saving.
double esr(const ObjectiveConfig& cfg, double e_kwh);

// |esr|/100 * daily energy * days * tariff.
double annual_saving(double esr_pct, double daily_kwh, double tariff_per_kwh, int days);

// Plant plus comfort models bound to one occupant: everything needed to
// evaluate a candidate operating point.
struct EvalModels {
  plant::PlantConfig plant;
  comfort::Occupant occupant;
  comfort::PtsModel pts;
};

// |PTS| at an operating point: plant air temperature -> steady-state skin
// features (zero gradient) -> classifier label magnitude.
int pts_abs_at(const EvalModels& models, const OperatingPoint& w);

// Fanger PMV at the plant's air conditions, mean radiant = air temperature.
double pmv_at(const EvalModels& models, const OperatingPoint& w);

struct CalibrationStats {
  double mu_e = 0.0;
  double sigma_e = 0.0;
  double mu_pts = 0.0;
  double sigma_pts = 0.0;
};

// Sample means/stds of energy and |PTS| over n uniform box draws (n >= 100);
// deterministic per seed. Throws NumericError when either std is zero.
CalibrationStats calibrate_stats(const std::function<double(const OperatingPoint&)>& energy_fn,
                                 const std::function<int(const OperatingPoint&)>& pts_abs_fn,
                                 const Bounds& bounds, int n, std::uint64_t seed);
CalibrationStats calibrate_stats(const EvalModels& models, int n, std::uint64_t seed);

ObjectiveConfig make_objective_config(const CalibrationStats& stats, double lambda,
                                      double z, double e_bench, const Bounds& bounds);

// Objective callback for the optimizers: g over the analytic plant and the
// PTS classifier.
ObjectiveFn make_objective(const EvalModels& models, const ObjectiveConfig& cfg);

// Full record of one evaluated operating point.
struct EvaluationRecord {
  OperatingPoint w;
  double energy = 0.0;
  int pts_abs = 0;
  double pmv = 0.0;
  double g = 0.0;
  double esr = 0.0;
};

EvaluationRecord evaluate(const EvalModels& models, const ObjectiveConfig& cfg,
                          const OperatingPoint& w);

// Header: w1,w2,w3,energy,pts_abs,pmv,g,esr
void write_records_csv(std::ostream& out, const std::vector<EvaluationRecord>& records);

} // namespace acmv::objective

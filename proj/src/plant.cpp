#include "acmv/plant.hpp"

#include <ostream>
#include <random>

#include "acmv/csv.hpp"
#include "acmv/errors.hpp"
#include "acmv/rng.hpp"

namespace acmv::plant {

void validate(const PlantConfig& cfg) {
  if (cfg.e_bench <= 0.0) throw InvalidArgumentError("plant: e_bench must be > 0");
  if (cfg.humidity < 0.0 || cfg.humidity > 100.0)
    throw InvalidArgumentError("plant: humidity must be in [0, 100]");
  if (cfg.noise_std < 0.0) throw InvalidArgumentError("plant: noise_std must be >= 0");
  if (cfg.bounds.lo >= cfg.bounds.hi) throw InvalidArgumentError("plant: empty bounds");
}

double energy(const PlantConfig& cfg, const OperatingPoint& w) {
  validate(cfg);
  require_in_box(w, cfg.bounds);
  const double sumsq = w.w1 * w.w1 + w.w2 * w.w2 + w.w3 * w.w3;
  return cfg.e_bench * (0.2 + 0.8 * (sumsq / 4800.0));
}

double air_temperature(const PlantConfig& cfg, const OperatingPoint& w) {
  validate(cfg);
  require_in_box(w, cfg.bounds);
  return 32.0 - 0.05 * w.w1 - 0.15 * w.w2 - 0.05 * w.w3;
}

double air_velocity(const PlantConfig& cfg, const OperatingPoint& w) {
  validate(cfg);
  require_in_box(w, cfg.bounds);
  return 0.05 + 0.004 * w.w1;
}

std::vector<DatasetRow> generate_dataset(const PlantConfig& cfg, int n) {
  validate(cfg);
  if (n < 1) throw InvalidArgumentError("generate_dataset: n must be >= 1");

  // Box-wide output ranges, scaling the per-output noise.
  const OperatingPoint lo{cfg.bounds.lo, cfg.bounds.lo, cfg.bounds.lo};
  const OperatingPoint hi{cfg.bounds.hi, cfg.bounds.hi, cfg.bounds.hi};
  const double e_range = energy(cfg, hi) - energy(cfg, lo);
  const double t_range = air_temperature(cfg, lo) - air_temperature(cfg, hi);
  const double v_range = air_velocity(cfg, hi) - air_velocity(cfg, lo);

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<DatasetRow> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    DatasetRow row;
    row.w = sample_point(cfg.bounds, rng);
    row.energy_kwh = energy(cfg, row.w);
    row.air_temp_c = air_temperature(cfg, row.w);
    row.air_vel_ms = air_velocity(cfg, row.w);
    if (cfg.noise_std > 0.0) {
      row.energy_kwh += cfg.noise_std * e_range * gauss(rng);
      row.air_temp_c += cfg.noise_std * t_range * gauss(rng);
      row.air_vel_ms += cfg.noise_std * v_range * gauss(rng);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_dataset_csv(std::ostream& out, const std::vector<DatasetRow>& rows) {
  out << "w1,w2,w3,energy_kwh,air_temp_c,air_vel_ms\n";
  for (const auto& r : rows) {
    out << csv_double(r.w.w1) << ',' << csv_double(r.w.w2) << ',' << csv_double(r.w.w3)
        << ',' << csv_double(r.energy_kwh) << ',' << csv_double(r.air_temp_c) << ','
        << csv_double(r.air_vel_ms) << '\n';
  }
}

} // namespace acmv::plant

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "acmv/types.hpp"

namespace acmv::plant {

// Synthetic ground-truth plant. Declared analytic forms replace the trained
// lab models so that every downstream figure has a closed-form reference.
struct PlantConfig {
  double e_bench = 73.741;  // daily energy at [40,40,40], kWh/day
  double humidity = 60.0;   // ambient relative humidity, %
  double noise_std = 0.0;   // dataset noise as a fraction of each output's box-wide range
  std::uint64_t seed = 1;
  Bounds bounds;
};

void validate(const PlantConfig& cfg);

// E(w) = e_bench * (0.2 + 0.8 * (w1^2+w2^2+w3^2)/4800), kWh/day.
// Equals e_bench exactly at [40,40,40]; strictly increasing per coordinate.
double energy(const PlantConfig& cfg, const OperatingPoint& w);

// T_air(w) = 32 - 0.05 w1 - 0.15 w2 - 0.05 w3, degC; spans 19.5..24.5 on the box.
double air_temperature(const PlantConfig& cfg, const OperatingPoint& w);

// v(w) = 0.05 + 0.004 w1, m/s; fan-only dependence.
double air_velocity(const PlantConfig& cfg, const OperatingPoint& w);

struct DatasetRow {
  OperatingPoint w;
  double energy_kwh;
  double air_temp_c;
  double air_vel_ms;
};

// n uniform draws from the box with Gaussian noise of std = noise_std times
// each output's box-wide range; deterministic per cfg.seed.
std::vector<DatasetRow> generate_dataset(const PlantConfig& cfg, int n);

// Header: w1,w2,w3,energy_kwh,air_temp_c,air_vel_ms
void write_dataset_csv(std::ostream& out, const std::vector<DatasetRow>& rows);

} // namespace acmv::plant

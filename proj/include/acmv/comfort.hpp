#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "acmv/nnmodel.hpp"

namespace acmv::comfort {

inline constexpr double kCloToSi = 0.155; // 1 clo = 0.155 K m^2/W
inline constexpr double kMetToSi = 58.2;  // 1 met = 58.2 W/m^2

enum class Gender { male, female };

struct Occupant {
  double height_m = 1.70;
  double weight_kg = 70.0;
  Gender gender = Gender::male;
  double clo = 0.5; // clothing insulation, converted internally to K m^2/W
  double met = 1.0; // metabolic rate, converted internally to W/m^2
};

void validate(const Occupant& occ);

// DuBois body surface area, 0.203 * height^0.725 * weight^0.425 (m^2).
double dubois_area(double height_m, double weight_kg);

// Clothing-corrected normalization area (1 - I_cl) * A_du with I_cl in SI
// units. Errors when 1 - I_cl <= 0.
double effective_area(const Occupant& occ);

// Wearable skin-temperature record.
struct SkinTrace {
  std::vector<double> samples_c;  // time-ordered, degC
  double sampling_period_min = 5.0;
};

void validate(const SkinTrace& trace);

struct PTSFeatures {
  double t_s = 0.0;          // degC
  double t_s_grad = 0.0;     // degC/min
  double t_s_norm = 0.0;     // degC per m^2 effective area
  double t_s_grad_norm = 0.0;

  std::vector<double> to_vector() const { return {t_s, t_s_grad, t_s_norm, t_s_grad_norm}; }
};

// Backward finite differences over one sampling period; the first sample uses
// the forward difference. Normalized fields divide by effective_area(occ).
std::vector<PTSFeatures> pts_features(const SkinTrace& trace, const Occupant& occ);

// Thermal-state labels: -1 cool, 0 neutral, +1 warm.
inline constexpr int kLabels[3] = {-1, 0, 1};

struct PtsDataset {
  std::vector<PTSFeatures> features;
  std::vector<int> labels; // in {-1, 0, +1}, aligned with features
};

struct PtsModel {
  nn::MLPParams net;    // 4 inputs, 3 one-hot sigmoid outputs
  nn::NormStats stats;  // feature standardization fitted on the training set
};

// Trains the 4-in/3-out classifier on standardized features. Requires all
// three labels present.
PtsModel pts_train(const PtsDataset& data, const nn::TrainConfig& cfg);

// Argmax over the output units in label order (-1, 0, +1); exact ties are
// resolved to 0 when neutral attains the maximum, otherwise to the first
// maximal label.
int pts_predict(const nn::MLPParams& net, const nn::NormStats& stats, const PTSFeatures& f);

// Fanger predicted mean vote. The clothing-surface temperature fixed point is
// solved to 1e-5 within 200 iterations; throws NumericError otherwise.
double pmv(double t_air_c, double t_mrt_c, double v_air_ms, double humidity_pct,
           const Occupant& occ);

// Declared synthetic skin response to ambient air temperature (degC -> degC).
// Spans 31.5..35.5 over the default plant's 19.5..24.5 air range, crossing
// both labeling thresholds.
double skin_temperature_response(double t_air_c);

inline constexpr double kSkinCoolThreshold = 32.5; // degC, label -1 below
inline constexpr double kSkinWarmThreshold = 34.5; // degC, label +1 above
inline constexpr double kSyntheticSamplingPeriodMin = 5.0;
inline constexpr double kSyntheticSkinNoiseStd = 0.3; // degC

int label_from_skin_temperature(double t_s);

// One seeded trace of n samples: air temperatures uniform in air_range_c,
// skin temperatures via skin_temperature_response plus Gaussian noise,
// features via pts_features, labels by the declared thresholds on the stored
// skin temperature. n >= 30.
PtsDataset synthetic_skin_dataset(std::pair<double, double> air_range_c,
                                  const Occupant& occ, int n, std::uint64_t seed,
                                  double noise_std = kSyntheticSkinNoiseStd);

// Header: t_s,t_s_grad,t_s_norm,t_s_grad_norm,label
void write_dataset_csv(std::ostream& out, const PtsDataset& data);

} // namespace acmv::comfort

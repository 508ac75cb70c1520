#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acmv/linalg.hpp"

namespace acmv::nn {

// Output head of the single-hidden-layer network: sigmoid for classifiers,
// identity for regression surrogates.
enum class Head { regression, classifier };

struct MLPParams {
  int input_dim = 0;
  int hidden_dim = 0;
  int output_dim = 0;
  Head head = Head::regression;
  Matrix theta1; // hidden_dim x (input_dim+1); last column is the bias
  Matrix theta2; // output_dim x (hidden_dim+1); last column is the bias
};

// Per-feature Gaussian standardization statistics (sample convention).
struct NormStats {
  std::vector<double> mean;
  std::vector<double> stddev;
};

struct TrainConfig {
  double learning_rate = 0.5;
  long epochs = 2000;
  std::uint64_t seed = 1;
  double init_scale = 0.5; // weights start uniform in [-init_scale, init_scale]
};

// (input, target) pairs; inputs are expected pre-standardized by the caller.
using Dataset = std::vector<std::pair<std::vector<double>, std::vector<double>>>;

// Requires >= 2 rows and nonzero variance in every feature.
NormStats fit_norm_stats(const std::vector<std::vector<double>>& rows);

std::vector<double> standardize(std::span<const double> x, const NormStats& stats);
// Inverse affine map of standardize.
std::vector<double> destandardize(std::span<const double> z, const NormStats& stats);

// 1/(1+exp(-x)), saturating instead of overflowing for large |x|.
double sigmoid(double x);

MLPParams init_mlp(int input_dim, int hidden_dim, int output_dim, Head head,
                   const TrainConfig& cfg);

std::vector<double> forward(const MLPParams& params, std::span<const double> x);

struct Gradients {
  Matrix theta1;
  Matrix theta2;
};

// Training loss: (1/2n) sum over the dataset of squared residual norms.
double loss(const MLPParams& params, const Dataset& data);

// Full-batch backpropagation gradient of `loss`.
Gradients loss_gradient(const MLPParams& params, const Dataset& data);

// Full-batch gradient descent. Throws NumericError if the loss leaves the
// finite range (divergence), naming the epoch.
MLPParams train(MLPParams params, const Dataset& data, const TrainConfig& cfg);

// Plain JSON document with dims, head kind, row-major weights and NormStats.
void save_model(const std::string& path, const MLPParams& params, const NormStats& stats);
std::pair<MLPParams, NormStats> load_model(const std::string& path);

} // namespace acmv::nn

#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <utility>
#include <vector>

#include "acmv/linalg.hpp"
#include "acmv/types.hpp"

namespace acmv::bgpo {

// Zero-mean Gaussian process over observed (w, g) pairs with the squared-
// exponential kernel. The kernel matrix is held as its jittered Cholesky
// factor; no explicit inverse is ever formed.
struct GPModel {
  double theta_h = 1.0;
  std::vector<OperatingPoint> obs_x;
  std::vector<double> obs_y;
  Matrix chol;               // lower factor of K + jitter I
  std::vector<double> alpha; // (K + jitter I)^-1 y, via two triangular solves
  double jitter = 0.0;       // diagonal regularizer actually used
};

struct BGPOConfig {
  int sample_budget = 50;   // total objective evaluations
  Bounds bounds;
  double theta_h = 1.0;
  int n_init = 0;           // 0 -> max(3, sample_budget / 5)
  int candidate_pool = 2048;
  double jitter = 1e-8;
  std::uint64_t seed = 1;
};

void validate(const BGPOConfig& cfg);
int effective_n_init(const BGPOConfig& cfg);

// k(wi, wj) = exp(-||wi - wj||^2 / (2 theta_h)); 1 at zero distance.
double kernel(double theta_h, const OperatingPoint& wi, const OperatingPoint& wj);

// Builds and factorizes K + jitter I. Observations closer than 1e-9 are
// merged (their values averaged). On factorization failure the jitter
// escalates tenfold up to 1e-2 before giving up.
GPModel gp_fit(const BGPOConfig& cfg, const std::vector<OperatingPoint>& obs_x,
               const std::vector<double>& obs_y);

// Posterior mean and variance at w_star; the variance is clamped to
// [0, k(w*,w*)]. An empty model returns the prior (0, 1).
std::pair<double, double> gp_posterior(const GPModel& model, const OperatingPoint& w_star);

// Expected improvement for a minimization posterior.
double expected_improvement(double mu, double sigma2, double best_y);

// Maximizes expected improvement over candidate_pool uniform candidates.
// Candidates within 1e-9 of an observation are discarded first; when every
// candidate's posterior std is below 1e-12 the minimal-mean candidate wins.
OperatingPoint acquire_next(const GPModel& model, const BGPOConfig& cfg, double best_y,
                            std::mt19937_64& rng);

struct HistoryEntry {
  int step = 0; // evaluation index, 0-based
  OperatingPoint w;
  double g = 0.0;
  bool is_best_so_far = false;
};

struct Result {
  OperatingPoint w_best;
  double g_best = 0.0;
  std::vector<HistoryEntry> history;
};

// Sequential loop: n_init seeded uniform observations, then acquisitions with
// a refit after each, spending exactly sample_budget evaluations. Observed
// values are standardized internally before each fit so the zero-mean prior
// is centered on the data; the reported optimum is the best observed pair.
Result optimize(const ObjectiveFn& objective, const BGPOConfig& cfg);

// Header: step,w1,w2,w3,g,is_best_so_far
void write_history_csv(std::ostream& out, const std::vector<HistoryEntry>& history);

} // namespace acmv::bgpo

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "acmv/objective.hpp"
#include "acmv/types.hpp"

namespace acmv::reg {

// Optimal solution at one lambda of the sweep grid.
struct SweepResult {
  double lambda = 0.0;
  OperatingPoint w_opt;
  double e_opt = 0.0;   // kWh/day
  double pmv_opt = 0.0;
  double esr_opt = 0.0; // percent
};

// Cubic y = theta[0] + theta[1] x + theta[2] x^2 + theta[3] x^3.
struct PolyModel {
  std::array<double, 4> theta{0.0, 0.0, 0.0, 0.0};
};

struct FitConfig {
  double eta = 0.1;      // learning rate on standardized features
  long epochs = 50000;
  double tol = 1e-10;    // stop when the max coefficient change drops below
};

using Points = std::vector<std::pair<double, double>>; // (lambda, y)

// One optimizer run per grid value with a per-lambda derived seed; E, PMV and
// ESR of each optimum come from the scenario's models. Grid must be nonempty
// within [0, 1].
using OptimizerRunFn =
    std::function<std::pair<OperatingPoint, double>(double lambda, std::uint64_t seed)>;

std::vector<SweepResult> lambda_sweep(const OptimizerRunFn& run_optimizer,
                                      const objective::EvalModels& models,
                                      std::span<const double> grid,
                                      std::uint64_t master_seed);

// The default 11-value grid 0.0, 0.1, ..., 1.0.
std::vector<double> default_lambda_grid();

double poly_predict(const PolyModel& model, double lam);

// Mean-squared-error cost with the 1/(2n) convention.
double poly_cost(const PolyModel& model, const Points& points);

// Analytic cost gradient; exposed for finite-difference verification.
std::array<double, 4> poly_cost_gradient(const PolyModel& model, const Points& points);

// Batch gradient descent on the cubic's coefficients. Features are
// standardized internally and the coefficients mapped back. Requires >= 4
// distinct lambda values; throws NumericError on divergence.
PolyModel poly_fit_gd(const Points& points, const FitConfig& cfg);

// Exact least squares via the 4x4 normal equations; the oracle for the
// gradient-descent route.
PolyModel poly_fit_closed_form(const Points& points);

// Header lambda,w1,w2,w3,energy,pmv,esr, then a coefficient section with one
// row per fitted quantity.
void write_sweep_csv(std::ostream& out, const std::vector<SweepResult>& results,
                     const PolyModel& energy_fit, const PolyModel& pmv_fit,
                     const PolyModel& esr_fit);

} // namespace acmv::reg

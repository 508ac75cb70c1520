#include "acmv/regression.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include "acmv/csv.hpp"
#include "acmv/errors.hpp"
#include "acmv/linalg.hpp"
#include "acmv/rng.hpp"

namespace acmv::reg {

std::vector<SweepResult> lambda_sweep(const OptimizerRunFn& run_optimizer,
                                      const objective::EvalModels& models,
                                      std::span<const double> grid,
                                      std::uint64_t master_seed) {
  if (grid.empty()) throw InvalidArgumentError("lambda_sweep: empty grid");
  for (double lam : grid)
    if (lam < 0.0 || lam > 1.0)
      throw InvalidArgumentError("lambda_sweep: lambda outside [0, 1]");

  objective::ObjectiveConfig esr_cfg; // only e_bench is read by esr()
  esr_cfg.e_bench = models.plant.e_bench;

  std::vector<SweepResult> results;
  results.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::uint64_t seed = mix_seed({master_seed, i});
    const auto [w_opt, g_opt] = run_optimizer(grid[i], seed);
    (void)g_opt;
    SweepResult r;
    r.lambda = grid[i];
    r.w_opt = w_opt;
    r.e_opt = plant::energy(models.plant, w_opt);
    r.pmv_opt = objective::pmv_at(models, w_opt);
    r.esr_opt = objective::esr(esr_cfg, r.e_opt);
    results.push_back(r);
  }
  return results;
}

std::vector<double> default_lambda_grid() {
  std::vector<double> grid(11);
  for (int i = 0; i <= 10; ++i) grid[static_cast<std::size_t>(i)] = i / 10.0;
  return grid;
}

double poly_predict(const PolyModel& model, double lam) {
  return model.theta[0] + lam * (model.theta[1] + lam * (model.theta[2] + lam * model.theta[3]));
}

double poly_cost(const PolyModel& model, const Points& points) {
  if (points.empty()) throw InvalidArgumentError("poly_cost: empty points");
  double acc = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - poly_predict(model, x);
    acc += r * r;
  }
  return acc / (2.0 * static_cast<double>(points.size()));
}

std::array<double, 4> poly_cost_gradient(const PolyModel& model, const Points& points) {
  if (points.empty()) throw InvalidArgumentError("poly_cost_gradient: empty points");
  std::array<double, 4> grad{0.0, 0.0, 0.0, 0.0};
  const double n = static_cast<double>(points.size());
  for (const auto& [x, y] : points) {
    const double r = y - poly_predict(model, x);
    double pow_x = 1.0;
    for (int k = 0; k < 4; ++k) {
      grad[static_cast<std::size_t>(k)] -= r * pow_x / n;
      pow_x *= x;
    }
  }
  return grad;
}

namespace {

void require_rank(const Points& points) {
  if (points.size() < 4)
    throw InvalidArgumentError("poly fit: need at least 4 points");
  std::set<double> distinct;
  for (const auto& [x, y] : points) distinct.insert(x);
  if (distinct.size() < 4)
    throw NumericError("poly fit: need at least 4 distinct lambda values");
}

} // namespace

PolyModel poly_fit_gd(const Points& points, const FitConfig& cfg) {
  require_rank(points);
  if (!(cfg.eta > 0.0)) throw InvalidArgumentError("poly_fit_gd: eta must be > 0");
  if (cfg.epochs < 1) throw InvalidArgumentError("poly_fit_gd: epochs must be >= 1");
  if (cfg.tol < 0.0) throw InvalidArgumentError("poly_fit_gd: tol must be >= 0");

  const std::size_t n = points.size();

  // Standardized design columns lambda, lambda^2, lambda^3 plus intercept.
  double mean[3] = {0, 0, 0}, stddev[3] = {0, 0, 0};
  for (const auto& [x, y] : points) {
    double pow_x = x;
    for (int k = 0; k < 3; ++k, pow_x *= x) mean[k] += pow_x;
  }
  for (double& m : mean) m /= static_cast<double>(n);
  for (const auto& [x, y] : points) {
    double pow_x = x;
    for (int k = 0; k < 3; ++k, pow_x *= x) stddev[k] += (pow_x - mean[k]) * (pow_x - mean[k]);
  }
  for (double& s : stddev) s = std::sqrt(s / static_cast<double>(n - 1));

  Matrix design(n, 4);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [x, y] = points[i];
    design.at(i, 0) = 1.0;
    double pow_x = x;
    for (int k = 0; k < 3; ++k, pow_x *= x)
      design.at(i, static_cast<std::size_t>(k) + 1) = (pow_x - mean[k]) / stddev[k];
    ys[i] = y;
  }

  std::array<double, 4> b{0.0, 0.0, 0.0, 0.0};
  for (long epoch = 0; epoch < cfg.epochs; ++epoch) {
    double grad[4] = {0, 0, 0, 0};
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double pred = 0.0;
      for (std::size_t k = 0; k < 4; ++k) pred += design.at(i, k) * b[k];
      const double r = ys[i] - pred;
      cost += r * r;
      for (std::size_t k = 0; k < 4; ++k) grad[k] -= r * design.at(i, k);
    }
    if (!std::isfinite(cost))
      throw NumericError("poly_fit_gd: cost diverged at epoch " + std::to_string(epoch));
    double max_step = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const double step = cfg.eta * grad[k] / static_cast<double>(n);
      b[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < cfg.tol) break;
  }

  PolyModel model;
  model.theta[0] = b[0];
  for (int k = 0; k < 3; ++k) {
    model.theta[static_cast<std::size_t>(k) + 1] = b[static_cast<std::size_t>(k) + 1] / stddev[k];
    model.theta[0] -= b[static_cast<std::size_t>(k) + 1] * mean[k] / stddev[k];
  }
  return model;
}

PolyModel poly_fit_closed_form(const Points& points) {
  require_rank(points);
  Matrix gram(4, 4);
  std::vector<double> rhs(4, 0.0);
  for (const auto& [x, y] : points) {
    double powers[4] = {1.0, x, x * x, x * x * x};
    for (std::size_t r = 0; r < 4; ++r) {
      rhs[r] += powers[r] * y;
      for (std::size_t c = 0; c < 4; ++c) gram.at(r, c) += powers[r] * powers[c];
    }
  }
  const std::vector<double> theta = solve_linear(gram, rhs);
  PolyModel model;
  std::copy(theta.begin(), theta.end(), model.theta.begin());
  return model;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepResult>& results,
                     const PolyModel& energy_fit, const PolyModel& pmv_fit,
                     const PolyModel& esr_fit) {
  out << "lambda,w1,w2,w3,energy,pmv,esr\n";
  for (const auto& r : results) {
    out << csv_double(r.lambda) << ',' << csv_double(r.w_opt.w1) << ','
        << csv_double(r.w_opt.w2) << ',' << csv_double(r.w_opt.w3) << ','
        << csv_double(r.e_opt) << ',' << csv_double(r.pmv_opt) << ','
        << csv_double(r.esr_opt) << '\n';
  }
  out << "quantity,theta1,theta2,theta3,theta4\n";
  const std::pair<const char*, const PolyModel*> fits[] = {
      {"energy", &energy_fit}, {"pmv", &pmv_fit}, {"esr", &esr_fit}};
  for (const auto& [name, fit] : fits) {
    out << name;
    for (double t : fit->theta) out << ',' << csv_double(t);
    out << '\n';
  }
}

} // namespace acmv::reg

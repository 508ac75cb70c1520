#include "acmv/bgpo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "acmv/csv.hpp"
#include "acmv/errors.hpp"
#include "acmv/rng.hpp"

namespace acmv::bgpo {

namespace {

constexpr double kDuplicateDistance = 1e-9; // merge/discard radius, Hz
constexpr double kMaxJitter = 1e-2;

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }
double norm_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

} // namespace

void validate(const BGPOConfig& cfg) {
  if (cfg.sample_budget < 2) throw InvalidArgumentError("bgpo: sample_budget must be >= 2");
  if (!(cfg.theta_h > 0.0)) throw InvalidArgumentError("bgpo: theta_h must be > 0");
  if (cfg.n_init != 0 && cfg.n_init < 2) throw InvalidArgumentError("bgpo: n_init must be >= 2");
  if (effective_n_init(cfg) > cfg.sample_budget)
    throw InvalidArgumentError("bgpo: n_init exceeds sample_budget");
  if (cfg.candidate_pool < 100)
    throw InvalidArgumentError("bgpo: candidate_pool must be >= 100");
  if (!(cfg.jitter > 0.0)) throw InvalidArgumentError("bgpo: jitter must be > 0");
  if (cfg.bounds.lo >= cfg.bounds.hi) throw InvalidArgumentError("bgpo: empty bounds");
}

int effective_n_init(const BGPOConfig& cfg) {
  if (cfg.n_init > 0) return cfg.n_init;
  return std::max(3, cfg.sample_budget / 5);
}

double kernel(double theta_h, const OperatingPoint& wi, const OperatingPoint& wj) {
  if (!(theta_h > 0.0)) throw InvalidArgumentError("kernel: theta_h must be > 0");
  return std::exp(-squared_distance(wi, wj) / (2.0 * theta_h));
}

GPModel gp_fit(const BGPOConfig& cfg, const std::vector<OperatingPoint>& obs_x,
               const std::vector<double>& obs_y) {
  validate(cfg);
  if (obs_x.empty()) throw InvalidArgumentError("gp_fit: need at least one observation");
  if (obs_x.size() != obs_y.size())
    throw InvalidArgumentError("gp_fit: observation lists differ in length");

  GPModel model;
  model.theta_h = cfg.theta_h;
  std::vector<int> counts; // merge duplicates by averaging their values
  for (std::size_t i = 0; i < obs_x.size(); ++i) {
    bool merged = false;
    for (std::size_t j = 0; j < model.obs_x.size(); ++j) {
      if (squared_distance(obs_x[i], model.obs_x[j]) <
          kDuplicateDistance * kDuplicateDistance) {
        model.obs_y[j] += (obs_y[i] - model.obs_y[j]) / (counts[j] + 1);
        ++counts[j];
        merged = true;
        break;
      }
    }
    if (!merged) {
      model.obs_x.push_back(obs_x[i]);
      model.obs_y.push_back(obs_y[i]);
      counts.push_back(1);
    }
  }

  const std::size_t n = model.obs_x.size();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = kernel(model.theta_h, model.obs_x[i], model.obs_x[j]);
      k.at(i, j) = v;
      k.at(j, i) = v;
    }

  for (double jitter = cfg.jitter; jitter <= kMaxJitter; jitter *= 10.0) {
    Matrix regularized = k;
    for (std::size_t i = 0; i < n; ++i) regularized.at(i, i) += jitter;
    if (cholesky_lower(regularized, model.chol)) {
      model.jitter = jitter;
      model.alpha = solve_lower_transpose(model.chol, solve_lower(model.chol, model.obs_y));
      return model;
    }
  }
  throw NumericError("gp_fit: kernel matrix factorization failed up to jitter 1e-2");
}

std::pair<double, double> gp_posterior(const GPModel& model, const OperatingPoint& w_star) {
  const double k_star = kernel(model.theta_h, w_star, w_star); // always 1
  if (model.obs_x.empty()) return {0.0, k_star};

  const std::size_t n = model.obs_x.size();
  std::vector<double> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = kernel(model.theta_h, model.obs_x[i], w_star);

  double mu = 0.0;
  for (std::size_t i = 0; i < n; ++i) mu += k[i] * model.alpha[i];

  const std::vector<double> t = solve_lower(model.chol, k);
  double explained = 0.0;
  for (double v : t) explained += v * v;
  const double var = std::clamp(k_star - explained, 0.0, k_star);
  return {mu, var};
}

double expected_improvement(double mu, double sigma2, double best_y) {
  const double sigma = std::sqrt(std::max(sigma2, 0.0));
  if (sigma < 1e-12) return std::max(best_y - mu, 0.0);
  const double u = (best_y - mu) / sigma;
  return (best_y - mu) * norm_cdf(u) + sigma * norm_pdf(u);
}

OperatingPoint acquire_next(const GPModel& model, const BGPOConfig& cfg, double best_y,
                            std::mt19937_64& rng) {
  validate(cfg);
  std::vector<OperatingPoint> candidates;
  candidates.reserve(static_cast<std::size_t>(cfg.candidate_pool));
  for (int i = 0; i < cfg.candidate_pool; ++i) {
    const OperatingPoint w = sample_point(cfg.bounds, rng);
    bool duplicate = false;
    for (const auto& x : model.obs_x)
      if (squared_distance(w, x) < kDuplicateDistance * kDuplicateDistance) {
        duplicate = true;
        break;
      }
    if (!duplicate) candidates.push_back(w);
  }
  if (candidates.empty()) // box collapsed onto the observations; keep moving
    return sample_point(cfg.bounds, rng);

  bool any_uncertain = false;
  double best_score = -1.0;
  double best_mu = std::numeric_limits<double>::infinity();
  std::size_t best_ei_idx = 0, best_mu_idx = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto [mu, var] = gp_posterior(model, candidates[i]);
    if (std::sqrt(var) >= 1e-12) any_uncertain = true;
    const double score = expected_improvement(mu, var, best_y);
    if (score > best_score) {
      best_score = score;
      best_ei_idx = i;
    }
    if (mu < best_mu) {
      best_mu = mu;
      best_mu_idx = i;
    }
  }
  // With no posterior uncertainty anywhere, fall back to pure exploitation.
  return any_uncertain ? candidates[best_ei_idx] : candidates[best_mu_idx];
}

Result optimize(const ObjectiveFn& objective, const BGPOConfig& cfg) {
  validate(cfg);
  const int n_init = effective_n_init(cfg);
  std::mt19937_64 rng(cfg.seed);

  Result result;
  result.g_best = std::numeric_limits<double>::infinity();
  std::vector<OperatingPoint> xs;
  std::vector<double> ys;

  auto observe = [&](const OperatingPoint& w) {
    const double g = objective(w);
    xs.push_back(w);
    ys.push_back(g);
    const bool improved = g < result.g_best;
    if (improved) {
      result.g_best = g;
      result.w_best = w;
    }
    result.history.push_back({static_cast<int>(xs.size()) - 1, w, g, improved});
  };

  for (int i = 0; i < n_init; ++i) observe(sample_point(cfg.bounds, rng));

  while (static_cast<int>(xs.size()) < cfg.sample_budget) {
    // Center and scale the observations so the zero-mean unit prior matches
    // their range; the surrogate is fit on the standardized values.
    const double n = static_cast<double>(ys.size());
    double mean = 0.0;
    for (double y : ys) mean += y;
    mean /= n;
    double ss = 0.0;
    for (double y : ys) ss += (y - mean) * (y - mean);
    double scale = n > 1 ? std::sqrt(ss / (n - 1.0)) : 1.0;
    if (scale < 1e-12) scale = 1.0;

    std::vector<double> ys_std(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) ys_std[i] = (ys[i] - mean) / scale;

    const GPModel model = gp_fit(cfg, xs, ys_std);
    const double best_std = (result.g_best - mean) / scale;
    observe(acquire_next(model, cfg, best_std, rng));
  }
  return result;
}

void write_history_csv(std::ostream& out, const std::vector<HistoryEntry>& history) {
  out << "step,w1,w2,w3,g,is_best_so_far\n";
  for (const auto& h : history) {
    out << h.step << ',' << csv_double(h.w.w1) << ',' << csv_double(h.w.w2) << ','
        << csv_double(h.w.w3) << ',' << csv_double(h.g) << ','
        << (h.is_best_so_far ? 1 : 0) << '\n';
  }
}

} // namespace acmv::bgpo

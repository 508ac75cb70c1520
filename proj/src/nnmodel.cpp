#include "acmv/nnmodel.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include <json.hpp>

#include "acmv/errors.hpp"

namespace acmv::nn {

namespace {

void check_dims(const MLPParams& p) {
  if (p.input_dim < 1 || p.hidden_dim < 1 || p.output_dim < 1)
    throw InvalidArgumentError("mlp: dimensions must be positive");
  if (p.theta1.rows != static_cast<std::size_t>(p.hidden_dim) ||
      p.theta1.cols != static_cast<std::size_t>(p.input_dim + 1) ||
      p.theta2.rows != static_cast<std::size_t>(p.output_dim) ||
      p.theta2.cols != static_cast<std::size_t>(p.hidden_dim + 1))
    throw InvalidArgumentError("mlp: weight shapes inconsistent with dims");
}

// hidden = sigmoid(theta1 [x;1]); pre-activation of the output layer.
void forward_layers(const MLPParams& p, std::span<const double> x,
                    std::vector<double>& hidden, std::vector<double>& out_pre) {
  hidden.assign(p.hidden_dim, 0.0);
  for (int i = 0; i < p.hidden_dim; ++i) {
    double s = p.theta1.at(i, p.input_dim); // bias
    for (int j = 0; j < p.input_dim; ++j) s += p.theta1.at(i, j) * x[j];
    hidden[i] = sigmoid(s);
  }
  out_pre.assign(p.output_dim, 0.0);
  for (int i = 0; i < p.output_dim; ++i) {
    double s = p.theta2.at(i, p.hidden_dim); // bias
    for (int j = 0; j < p.hidden_dim; ++j) s += p.theta2.at(i, j) * hidden[j];
    out_pre[i] = s;
  }
}

} // namespace

NormStats fit_norm_stats(const std::vector<std::vector<double>>& rows) {
  if (rows.size() < 2) throw InvalidArgumentError("fit_norm_stats: need at least 2 rows");
  const std::size_t dim = rows.front().size();
  if (dim == 0) throw InvalidArgumentError("fit_norm_stats: empty feature vectors");
  for (const auto& r : rows)
    if (r.size() != dim) throw InvalidArgumentError("fit_norm_stats: ragged rows");

  NormStats stats;
  stats.mean.assign(dim, 0.0);
  stats.stddev.assign(dim, 0.0);
  const double n = static_cast<double>(rows.size());
  for (const auto& r : rows)
    for (std::size_t j = 0; j < dim; ++j) stats.mean[j] += r[j];
  for (std::size_t j = 0; j < dim; ++j) stats.mean[j] /= n;
  for (const auto& r : rows)
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = r[j] - stats.mean[j];
      stats.stddev[j] += d * d;
    }
  for (std::size_t j = 0; j < dim; ++j) {
    stats.stddev[j] = std::sqrt(stats.stddev[j] / (n - 1.0));
    if (stats.stddev[j] <= 0.0)
      throw NumericError("fit_norm_stats: feature " + std::to_string(j) +
                         " is constant (zero variance)");
  }
  return stats;
}

std::vector<double> standardize(std::span<const double> x, const NormStats& stats) {
  if (x.size() != stats.mean.size())
    throw InvalidArgumentError("standardize: dimension mismatch");
  std::vector<double> z(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) z[j] = (x[j] - stats.mean[j]) / stats.stddev[j];
  return z;
}

std::vector<double> destandardize(std::span<const double> z, const NormStats& stats) {
  if (z.size() != stats.mean.size())
    throw InvalidArgumentError("destandardize: dimension mismatch");
  std::vector<double> x(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) x[j] = z[j] * stats.stddev[j] + stats.mean[j];
  return x;
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

MLPParams init_mlp(int input_dim, int hidden_dim, int output_dim, Head head,
                   const TrainConfig& cfg) {
  if (input_dim < 1 || hidden_dim < 1 || output_dim < 1)
    throw InvalidArgumentError("init_mlp: dimensions must be positive");
  if (cfg.init_scale <= 0.0) throw InvalidArgumentError("init_mlp: init_scale must be > 0");
  MLPParams p;
  p.input_dim = input_dim;
  p.hidden_dim = hidden_dim;
  p.output_dim = output_dim;
  p.head = head;
  p.theta1 = Matrix(hidden_dim, input_dim + 1);
  p.theta2 = Matrix(output_dim, hidden_dim + 1);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-cfg.init_scale, cfg.init_scale);
  for (double& w : p.theta1.data) w = u(rng);
  for (double& w : p.theta2.data) w = u(rng);
  return p;
}

std::vector<double> forward(const MLPParams& p, std::span<const double> x) {
  check_dims(p);
  if (x.size() != static_cast<std::size_t>(p.input_dim))
    throw InvalidArgumentError("forward: input dimension mismatch");
  std::vector<double> hidden, out;
  forward_layers(p, x, hidden, out);
  if (p.head == Head::classifier)
    for (double& v : out) v = sigmoid(v);
  return out;
}

double loss(const MLPParams& p, const Dataset& data) {
  if (data.empty()) throw InvalidArgumentError("loss: empty dataset");
  double acc = 0.0;
  for (const auto& [x, y] : data) {
    const auto out = forward(p, x);
    if (y.size() != out.size()) throw InvalidArgumentError("loss: target dimension mismatch");
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double r = out[i] - y[i];
      acc += r * r;
    }
  }
  return acc / (2.0 * static_cast<double>(data.size()));
}

Gradients loss_gradient(const MLPParams& p, const Dataset& data) {
  check_dims(p);
  if (data.empty()) throw InvalidArgumentError("loss_gradient: empty dataset");
  Gradients g;
  g.theta1 = Matrix(p.theta1.rows, p.theta1.cols);
  g.theta2 = Matrix(p.theta2.rows, p.theta2.cols);
  std::vector<double> hidden, out_pre, dz2(p.output_dim), dz1(p.hidden_dim);
  const double n = static_cast<double>(data.size());

  for (const auto& [x, y] : data) {
    if (x.size() != static_cast<std::size_t>(p.input_dim) ||
        y.size() != static_cast<std::size_t>(p.output_dim))
      throw InvalidArgumentError("loss_gradient: sample dimension mismatch");
    forward_layers(p, x, hidden, out_pre);
    for (int i = 0; i < p.output_dim; ++i) {
      if (p.head == Head::classifier) {
        const double o = sigmoid(out_pre[i]);
        dz2[i] = (o - y[i]) * o * (1.0 - o);
      } else {
        dz2[i] = out_pre[i] - y[i];
      }
    }
    for (int i = 0; i < p.output_dim; ++i) {
      for (int j = 0; j < p.hidden_dim; ++j) g.theta2.at(i, j) += dz2[i] * hidden[j];
      g.theta2.at(i, p.hidden_dim) += dz2[i];
    }
    for (int j = 0; j < p.hidden_dim; ++j) {
      double back = 0.0;
      for (int i = 0; i < p.output_dim; ++i) back += p.theta2.at(i, j) * dz2[i];
      dz1[j] = back * hidden[j] * (1.0 - hidden[j]);
    }
    for (int j = 0; j < p.hidden_dim; ++j) {
      for (int k = 0; k < p.input_dim; ++k) g.theta1.at(j, k) += dz1[j] * x[k];
      g.theta1.at(j, p.input_dim) += dz1[j];
    }
  }
  for (double& v : g.theta1.data) v /= n;
  for (double& v : g.theta2.data) v /= n;
  return g;
}

MLPParams train(MLPParams params, const Dataset& data, const TrainConfig& cfg) {
  check_dims(params);
  if (data.empty()) throw InvalidArgumentError("train: empty dataset");
  if (cfg.learning_rate <= 0.0) throw InvalidArgumentError("train: learning_rate must be > 0");
  if (cfg.epochs < 1) throw InvalidArgumentError("train: epochs must be >= 1");

  for (long epoch = 0; epoch < cfg.epochs; ++epoch) {
    const Gradients g = loss_gradient(params, data);
    for (std::size_t i = 0; i < params.theta1.data.size(); ++i)
      params.theta1.data[i] -= cfg.learning_rate * g.theta1.data[i];
    for (std::size_t i = 0; i < params.theta2.data.size(); ++i)
      params.theta2.data[i] -= cfg.learning_rate * g.theta2.data[i];
    const double l = loss(params, data);
    if (!std::isfinite(l))
      throw NumericError("train: loss diverged at epoch " + std::to_string(epoch));
  }
  return params;
}

void save_model(const std::string& path, const MLPParams& params, const NormStats& stats) {
  check_dims(params);
  nlohmann::json doc;
  doc["input_dim"] = params.input_dim;
  doc["hidden_dim"] = params.hidden_dim;
  doc["output_dim"] = params.output_dim;
  doc["head"] = params.head == Head::classifier ? "classifier" : "regression";
  doc["theta1"] = params.theta1.data;
  doc["theta2"] = params.theta2.data;
  doc["norm"]["mean"] = stats.mean;
  doc["norm"]["std"] = stats.stddev;
  std::ofstream out(path);
  if (!out) throw IoError("save_model: cannot open '" + path + "'");
  out << doc.dump(2) << "\n";
}

std::pair<MLPParams, NormStats> load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("load_model: cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("load_model: " + std::string(e.what()));
  }
  MLPParams p;
  NormStats stats;
  try {
    p.input_dim = doc.at("input_dim").get<int>();
    p.hidden_dim = doc.at("hidden_dim").get<int>();
    p.output_dim = doc.at("output_dim").get<int>();
    const std::string head = doc.at("head").get<std::string>();
    if (head == "classifier")
      p.head = Head::classifier;
    else if (head == "regression")
      p.head = Head::regression;
    else
      throw IoError("load_model: unknown head '" + head + "'");
    p.theta1 = Matrix(p.hidden_dim, p.input_dim + 1);
    p.theta2 = Matrix(p.output_dim, p.hidden_dim + 1);
    p.theta1.data = doc.at("theta1").get<std::vector<double>>();
    p.theta2.data = doc.at("theta2").get<std::vector<double>>();
    stats.mean = doc.at("norm").at("mean").get<std::vector<double>>();
    stats.stddev = doc.at("norm").at("std").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("load_model: " + std::string(e.what()));
  }
  if (p.theta1.data.size() != p.theta1.rows * p.theta1.cols ||
      p.theta2.data.size() != p.theta2.rows * p.theta2.cols)
    throw IoError("load_model: weight list lengths inconsistent with dims");
  check_dims(p);
  return {std::move(p), std::move(stats)};
}

} // namespace acmv::nn

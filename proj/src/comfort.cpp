#include "acmv/comfort.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "acmv/csv.hpp"
#include "acmv/errors.hpp"
#include "acmv/rng.hpp"

namespace acmv::comfort {

void validate(const Occupant& occ) {
  if (!(occ.height_m > 0.5 && occ.height_m < 2.5))
    throw InvalidArgumentError("occupant: height must be in (0.5, 2.5) m");
  if (!(occ.weight_kg > 20.0 && occ.weight_kg < 250.0))
    throw InvalidArgumentError("occupant: weight must be in (20, 250) kg");
  if (occ.clo < 0.0) throw InvalidArgumentError("occupant: clo must be >= 0");
  if (!(occ.met > 0.0)) throw InvalidArgumentError("occupant: met must be > 0");
}

double dubois_area(double height_m, double weight_kg) {
  if (!(height_m > 0.5 && height_m < 2.5))
    throw InvalidArgumentError("dubois_area: height must be in (0.5, 2.5) m");
  if (!(weight_kg > 20.0 && weight_kg < 250.0))
    throw InvalidArgumentError("dubois_area: weight must be in (20, 250) kg");
  return 0.203 * std::pow(height_m, 0.725) * std::pow(weight_kg, 0.425);
}

double effective_area(const Occupant& occ) {
  validate(occ);
  const double i_cl = occ.clo * kCloToSi;
  if (1.0 - i_cl <= 0.0)
    throw InvalidArgumentError("effective_area: clothing insulation >= 1 K m^2/W");
  return (1.0 - i_cl) * dubois_area(occ.height_m, occ.weight_kg);
}

void validate(const SkinTrace& trace) {
  if (trace.samples_c.size() < 2)
    throw InvalidArgumentError("skin trace: need at least 2 samples");
  if (!(trace.sampling_period_min > 0.0))
    throw InvalidArgumentError("skin trace: sampling period must be > 0");
  for (double t : trace.samples_c)
    if (!(t > 20.0 && t < 45.0))
      throw InvalidArgumentError("skin trace: temperature outside (20, 45) degC");
}

std::vector<PTSFeatures> pts_features(const SkinTrace& trace, const Occupant& occ) {
  validate(trace);
  const double area = effective_area(occ);
  const auto& s = trace.samples_c;
  std::vector<PTSFeatures> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double grad = k == 0 ? (s[1] - s[0]) / trace.sampling_period_min
                               : (s[k] - s[k - 1]) / trace.sampling_period_min;
    out[k].t_s = s[k];
    out[k].t_s_grad = grad;
    out[k].t_s_norm = s[k] / area;
    out[k].t_s_grad_norm = grad / area;
  }
  return out;
}

PtsModel pts_train(const PtsDataset& data, const nn::TrainConfig& cfg) {
  if (data.features.empty() || data.features.size() != data.labels.size())
    throw InvalidArgumentError("pts_train: empty or misaligned dataset");
  bool seen[3] = {false, false, false};
  for (int lab : data.labels) {
    if (lab < -1 || lab > 1) throw InvalidArgumentError("pts_train: label outside {-1,0,+1}");
    seen[lab + 1] = true;
  }
  if (!(seen[0] && seen[1] && seen[2]))
    throw InvalidArgumentError("pts_train: all three labels must be present");

  std::vector<std::vector<double>> rows;
  rows.reserve(data.features.size());
  for (const auto& f : data.features) rows.push_back(f.to_vector());
  PtsModel model;
  model.stats = nn::fit_norm_stats(rows);

  nn::Dataset train_set;
  train_set.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<double> one_hot(3, 0.0);
    one_hot[static_cast<std::size_t>(data.labels[i] + 1)] = 1.0;
    train_set.emplace_back(nn::standardize(rows[i], model.stats), std::move(one_hot));
  }
  model.net = nn::train(nn::init_mlp(4, 8, 3, nn::Head::classifier, cfg), train_set, cfg);
  return model;
}

int pts_predict(const nn::MLPParams& net, const nn::NormStats& stats, const PTSFeatures& f) {
  if (net.input_dim != 4 || net.output_dim != 3)
    throw InvalidArgumentError("pts_predict: classifier must be 4-in/3-out");
  const auto out = nn::forward(net, nn::standardize(f.to_vector(), stats));
  const double top = *std::max_element(out.begin(), out.end());
  if (out[1] == top) return 0; // neutral wins exact ties
  return out[0] == top ? -1 : 1;
}

double pmv(double t_air_c, double t_mrt_c, double v_air_ms, double humidity_pct,
           const Occupant& occ) {
  validate(occ);
  if (!(t_air_c > 10.0 && t_air_c < 40.0))
    throw InvalidArgumentError("pmv: air temperature must be in (10, 40) degC");
  if (v_air_ms < 0.0) throw InvalidArgumentError("pmv: air velocity must be >= 0");
  if (humidity_pct < 0.0 || humidity_pct > 100.0)
    throw InvalidArgumentError("pmv: humidity must be in [0, 100]");

  // Fanger heat balance in the ASHRAE 55 / ISO 7730 formulation.
  const double pa = humidity_pct * 10.0 * std::exp(16.6536 - 4030.183 / (t_air_c + 235.0));
  const double icl = occ.clo * kCloToSi;
  const double m = occ.met * kMetToSi;
  const double mw = m; // no external work
  const double fcl = icl <= 0.078 ? 1.0 + 1.29 * icl : 1.05 + 0.645 * icl;
  const double hcf = 12.1 * std::sqrt(v_air_ms);
  const double taa = t_air_c + 273.0;
  const double tra = t_mrt_c + 273.0;

  // Clothing-surface temperature fixed point on the T/100 scale.
  const double p1 = icl * fcl;
  const double p2 = p1 * 3.96;
  const double p3 = p1 * 100.0;
  const double p4 = p1 * taa;
  const double p5 = 308.7 - 0.028 * mw + p2 * std::pow(tra / 100.0, 4);
  double xn = (taa + (35.5 - t_air_c) / (3.5 * icl + 0.1)) / 100.0;
  double xf = xn * 2.0;
  double hc = hcf;
  const double tol = 1e-5;
  const int max_iter = 200;
  int iter = 0;
  while (std::abs(xn - xf) > tol) {
    if (++iter > max_iter)
      throw NumericError("pmv: clothing temperature fixed point did not converge in " +
                         std::to_string(max_iter) + " iterations");
    xf = (xf + xn) / 2.0;
    const double hcn = 2.38 * std::pow(std::abs(100.0 * xf - taa), 0.25);
    hc = std::max(hcf, hcn);
    xn = (p5 + p4 * hc - p2 * std::pow(xf, 4)) / (100.0 + p3 * hc);
  }
  const double tcl = 100.0 * xn - 273.0;

  const double hl1 = 3.05e-3 * (5733.0 - 6.99 * mw - pa); // skin diffusion
  const double hl2 = mw > 58.15 ? 0.42 * (mw - 58.15) : 0.0; // sweat evaporation
  const double hl3 = 1.7e-5 * m * (5867.0 - pa); // latent respiration
  const double hl4 = 0.0014 * m * (34.0 - t_air_c); // dry respiration
  const double hl5 = 3.96 * fcl * (std::pow(xn, 4) - std::pow(tra / 100.0, 4)); // radiation
  const double hl6 = fcl * hc * (tcl - t_air_c); // convection

  const double ts = 0.303 * std::exp(-0.036 * m) + 0.028;
  return ts * (mw - hl1 - hl2 - hl3 - hl4 - hl5 - hl6);
}

double skin_temperature_response(double t_air_c) { return 15.9 + 0.8 * t_air_c; }

int label_from_skin_temperature(double t_s) {
  if (t_s < kSkinCoolThreshold) return -1;
  if (t_s > kSkinWarmThreshold) return 1;
  return 0;
}

PtsDataset synthetic_skin_dataset(std::pair<double, double> air_range_c,
                                  const Occupant& occ, int n, std::uint64_t seed,
                                  double noise_std) {
  validate(occ);
  if (n < 30) throw InvalidArgumentError("synthetic_skin_dataset: n must be >= 30");
  if (air_range_c.first >= air_range_c.second)
    throw InvalidArgumentError("synthetic_skin_dataset: empty air temperature range");
  if (noise_std < 0.0)
    throw InvalidArgumentError("synthetic_skin_dataset: noise_std must be >= 0");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> air(air_range_c.first, air_range_c.second);
  std::normal_distribution<double> gauss(0.0, 1.0);

  SkinTrace trace;
  trace.sampling_period_min = kSyntheticSamplingPeriodMin;
  trace.samples_c.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double t_s = skin_temperature_response(air(rng));
    if (noise_std > 0.0) t_s += noise_std * gauss(rng);
    trace.samples_c.push_back(t_s);
  }

  PtsDataset data;
  data.features = pts_features(trace, occ);
  data.labels.reserve(trace.samples_c.size());
  for (double t_s : trace.samples_c) data.labels.push_back(label_from_skin_temperature(t_s));
  return data;
}

void write_dataset_csv(std::ostream& out, const PtsDataset& data) {
  out << "t_s,t_s_grad,t_s_norm,t_s_grad_norm,label\n";
  for (std::size_t i = 0; i < data.features.size(); ++i) {
    const auto& f = data.features[i];
    out << csv_double(f.t_s) << ',' << csv_double(f.t_s_grad) << ','
        << csv_double(f.t_s_norm) << ',' << csv_double(f.t_s_grad_norm) << ','
        << data.labels[i] << '\n';
  }
}

} // namespace acmv::comfort

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "acmv/afa.hpp"
#include "acmv/bgpo.hpp"
#include "acmv/objective.hpp"
#include "acmv/regression.hpp"

namespace acmv::harness {

// Case study: occupant and plant configuration plus objective defaults.
struct Scenario {
  std::string name;
  comfort::Occupant occupant;
  plant::PlantConfig plant;
  double z = 1.0;
  std::vector<double> lambda_grid;
  std::string notes;
};

// "case1" = general office (met 1.0, clo 0.5), "case2" = lecture theatre
// (met 1.4, clo 0.9); same body, same plant.
Scenario build_scenario(const std::string& name);

enum class Optimizer { bgpo, afa };

std::string optimizer_name(Optimizer o);
Optimizer parse_optimizer(const std::string& name);

struct RunSpec {
  std::string scenario = "case1";
  Optimizer optimizer = Optimizer::bgpo;
  std::vector<int> sample_sizes = {10, 20, 30, 40, 50};
  int repetitions = 30;
  std::uint64_t master_seed = 1;
  std::vector<double> lambda_grid; // empty = default 11-value grid
  bool fair_budget = false; // cap AFA evaluations at the BGPO sample budget
};

void validate(const RunSpec& spec);

// One result row per (sample size, lambda, repetition).
struct ResultRow {
  std::string scenario;
  std::string optimizer;
  int sample_size = 0;
  double lambda = 0.0;
  int repetition = 0;
  std::uint64_t seed = 0;
  OperatingPoint w;
  double energy = 0.0;
  double pmv = 0.0;
  int pts_abs = 0;
  double esr = 0.0;
  double g = 0.0;
};

// Scenario runtime shared by all runs: trained PTS classifier plus calibrated
// normalization statistics, both derived deterministically from master_seed.
struct ExperimentContext {
  Scenario scenario;
  objective::EvalModels models;
  objective::CalibrationStats stats;
};

ExperimentContext prepare_context(const Scenario& scenario, std::uint64_t master_seed);

// Builds the per-run optimizer configuration (sample size, derived seed,
// fair-budget mapping for AFA) and runs it on g(lambda, .).
std::pair<OperatingPoint, double> run_single(const ExperimentContext& ctx,
                                             Optimizer optimizer, double lambda,
                                             int sample_size, std::uint64_t seed,
                                             bool fair_budget);

// Full experiment; rows stream through on_row (when set) before being
// returned, so partial results survive an abort.
std::vector<ResultRow> run_experiment(const RunSpec& spec,
                                      const std::function<void(const ResultRow&)>& on_row = {});

// Results CSV:
// scenario,optimizer,sample_size,lambda,repetition,seed,w1,w2,w3,energy,pmv,pts_abs,esr,g
void write_results_header(std::ostream& out);
void write_result_row(std::ostream& out, const ResultRow& row);
void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results_csv(std::istream& in);

enum class Group { tcp, eep }; // thermal-comfort preferred / energy-efficiency preferred

struct GroupStats {
  Group group = Group::tcp;
  int count = 0;
  double mean_esr = 0.0;
  double std_esr = 0.0;
  double mean_pmv = 0.0;
  double std_pmv = 0.0;
};

// TCP aggregates lambda <= 0.3, EEP lambda >= 0.7. Throws on an empty group.
GroupStats group_stats(const std::vector<ResultRow>& rows, Group group);

// Per-lambda means of one (optimizer, sample size) slice.
struct LambdaAggregate {
  double lambda = 0.0;
  double energy = 0.0;
  double pmv = 0.0;
  double esr = 0.0;
};

struct ReportSection {
  std::string optimizer;
  int sample_size = 0;
  std::optional<GroupStats> tcp;
  std::optional<GroupStats> eep;
  std::vector<LambdaAggregate> curve;
  reg::PolyModel energy_fit;
  reg::PolyModel pmv_fit;
  reg::PolyModel esr_fit;
  std::optional<double> annual_saving; // at the EEP mean ESR; absent without EEP rows
};

struct Report {
  std::string scenario;
  double tariff = 0.2156; // currency per kWh
  int days = 365;
  double daily_kwh = 73.741;
  std::vector<ReportSection> sections;
};

Report build_report(const std::vector<ResultRow>& rows, const Scenario& scenario,
                    double tariff, int days);

std::string report_text(const Report& report);
std::string report_json(const Report& report);

} // namespace acmv::harness

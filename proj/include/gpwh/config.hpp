#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpwh/word_engine.hpp"

namespace gpwh {

struct VertexDataSpec {
  FiniteGroup::Table cayley;
  std::optional<std::vector<Element>> inverse;
  std::vector<std::vector<double>> r;
  std::vector<std::vector<double>> s;
};

struct ExperimentParams {
  int n = 1;
  double eps = 0.01;
  double delta = 0.5;
  std::size_t d_cap = 8;
  std::size_t ball_radius = 2;
  double tol = 1e-9;
  std::uint64_t seed = 42;
};

struct ReduceOptions {
  std::vector<std::vector<Letter>> words;
};

struct WallsAuditOptions {
  /// Pairs are drawn from the ball of this radius (default: ball_radius).
  std::optional<std::size_t> radius;
};

struct KernelReportOptions {
  std::optional<std::size_t> radius;
  /// Seeded sample size taken from the ball; the whole ball if smaller.
  std::size_t sample = 50;
};

struct InvarianceOptions {
  std::size_t pairs = 200;
  std::size_t max_length = 5;
};

struct B2Options {
  std::optional<std::size_t> radius;
  std::optional<int> n;
  std::vector<int> grid;
  double final_threshold = 1.05;
};

struct ConvergenceOptions {
  std::optional<std::size_t> radius;
  std::vector<int> n_values{1, 10, 100};
};

struct ExperimentConfig {
  std::size_t vertex_count = 0;
  std::vector<SimpleGraph::Edge> edges;
  std::vector<VertexDataSpec> vertex_data;
  ExperimentParams params;
  ReduceOptions reduce;
  WallsAuditOptions walls_audit;
  KernelReportOptions kernel_report;
  InvarianceOptions invariance;
  B2Options b2;
  ConvergenceOptions convergence;
};

inline constexpr const char* kSchemaVersion = "1";

/// Throws ConfigError (code "schema_violation") on missing or unknown
/// fields, wrong types or an unsupported schema_version.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_text(const std::string& text);

/// Builds groups, data and the product. Throws StructuralError.
std::vector<WeakHaagerupVertexData> build_vertex_data(const ExperimentConfig& config);
GraphProduct build_product(const ExperimentConfig& config);

}  // namespace gpwh

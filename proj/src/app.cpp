#include "gpwh/app.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "gpwh/analysis.hpp"
#include "gpwh/errors.hpp"
#include "gpwh/graph_kernel.hpp"
#include "gpwh/walls.hpp"

namespace gpwh {

using nlohmann::json;

namespace {

std::string word_string(const ReducedWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.vertex) + ":" + std::to_string(l.element);
  }
  return out;
}

json word_json(const ReducedWord& w) {
  json out = json::array();
  for (const Letter& l : w.letters()) out.push_back({l.vertex, l.element});
  return out;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string matrix_csv(const std::vector<ReducedWord>& points, const Eigen::MatrixXd& m) {
  std::ostringstream os;
  os << "word";
  for (const ReducedWord& p : points) os << ",\"" << word_string(p) << '"';
  os << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << '"' << word_string(points[static_cast<std::size_t>(i)]) << '"';
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << ',' << format_double(m(i, j));
    os << '\n';
  }
  return os.str();
}

json schur_json(const SchurNormResult& r) {
  return {{"lower", r.lower},
          {"upper", r.upper},
          {"exact", r.exact},
          {"iterations", r.iterations},
          {"converged", r.converged}};
}

json params_json(const ExperimentParams& p) {
  return {{"n", p.n},           {"eps", p.eps}, {"delta", p.delta},
          {"d_cap", p.d_cap},   {"ball_radius", p.ball_radius},
          {"tol", p.tol},       {"seed", p.seed}};
}

KernelParams kernel_params(const ExperimentParams& p) {
  KernelParams k;
  k.n = p.n;
  k.eps = p.eps;
  k.delta = p.delta;
  k.d_cap = p.d_cap;
  return k;
}

/// Named boolean checks; the command passes iff all hold.
class Checks {
 public:
  void add(const std::string& name, bool ok) {
    items_.push_back({{"name", name}, {"passed", ok}});
    all_ = all_ && ok;
  }
  bool all() const { return all_; }
  json to_json() const { return items_; }

 private:
  json items_ = json::array();
  bool all_ = true;
};

struct CommandOutput {
  json body = json::object();
  Checks checks;
  std::vector<std::string> summary;
  std::vector<Artifact> artifacts;
};

std::vector<ReducedWord> seeded_sample(std::vector<ReducedWord> points, std::size_t k,
                                       std::uint64_t seed) {
  if (points.size() <= k) return points;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, points.size() - 1);
    std::swap(points[i], points[pick(rng)]);
  }
  points.resize(k);
  std::sort(points.begin(), points.end());
  return points;
}

CommandOutput cmd_validate(const ExperimentConfig& config) {
  CommandOutput out;
  const SimpleGraph graph(config.vertex_count, config.edges);
  const auto data = build_vertex_data(config);
  out.body["graph"] = {{"vertex_count", graph.vertex_count()},
                       {"edges", graph.edges()},
                       {"max_clique", max_clique_size(graph)}};
  out.checks.add("vertex_data_count", data.size() == graph.vertex_count());
  double worst = 0.0;
  json entries = json::array();
  for (std::size_t v = 0; v < data.size(); ++v) {
    const ValidationReport rep = validate_vertex_data(data[v], config.params.tol);
    worst = std::max(worst, rep.max_residual);
    json violations = json::array();
    for (const Violation& x : rep.violations) {
      violations.push_back({{"kind", to_string(x.kind)},
                            {"x", x.x},
                            {"y", x.y},
                            {"residual", x.residual},
                            {"message", x.message}});
    }
    entries.push_back({{"vertex", v},
                       {"order", data[v].order()},
                       {"phi_identity", data[v].phi_identity()},
                       {"max_residual", rep.max_residual},
                       {"violations", violations}});
    out.checks.add("vertex_" + std::to_string(v) + "_weak_haagerup_data", rep.ok());
  }
  out.body["vertex_data"] = entries;
  out.body["residuals"] = {{"vertex_data_max", worst}};
  out.summary.push_back("max residual " + format_double(worst));
  return out;
}

CommandOutput cmd_reduce(const ExperimentConfig& config) {
  CommandOutput out;
  const GraphProduct ctx = build_product(config);
  json rows = json::array();
  for (const auto& letters : config.reduce.words) {
    for (const Letter& l : letters) {
      if (l.vertex >= ctx.vertex_count() || !ctx.group(l.vertex).contains(l.element)) {
        throw ConfigError("commands.reduce.words: letter " + std::to_string(l.vertex) + ":" +
                          std::to_string(l.element) + " outside the alphabet");
      }
    }
    const ReducedWord w = reduce(ctx, letters);
    const auto reps = reduced_representatives(ctx, w);
    bool reps_agree = true;
    for (const auto& r : reps) reps_agree = reps_agree && reduce(ctx, r) == w;
    const bool idempotent = reduce(ctx, w.letters()) == w;
    const bool inverse_ok = multiply(ctx, inverse(ctx, w), w).empty();
    json input = json::array();
    for (const Letter& l : letters) input.push_back({l.vertex, l.element});
    rows.push_back({{"input", input},
                    {"reduced", word_json(w)},
                    {"reduced_length", w.size()},
                    {"representatives", reps.size()},
                    {"idempotent", idempotent},
                    {"representatives_agree", reps_agree},
                    {"inverse_ok", inverse_ok}});
    out.checks.add("word_" + std::to_string(rows.size() - 1),
                   idempotent && reps_agree && inverse_ok);
    out.summary.push_back(word_string(w) + " (length " + std::to_string(w.size()) + ")");
  }
  out.body["words"] = rows;
  return out;
}

CommandOutput cmd_walls_audit(const ExperimentConfig& config) {
  CommandOutput out;
  const GraphProduct ctx = build_product(config);
  const std::size_t r = config.walls_audit.radius.value_or(config.params.ball_radius);
  const auto points = ball(ctx, r);
  const HalfSpaceCatalog base(ctx, r + 1, r + 3);
  const HalfSpaceCatalog wider(ctx, r + 2, r + 4);
  std::ostringstream csv;
  csv << "x,y,reduced_length,wall_count,radius,stable\n";
  std::size_t mismatches = 0, unstable = 0, pairs = 0;
  for (const ReducedWord& x : points) {
    for (const ReducedWord& y : points) {
      const std::size_t d = reduced_distance(ctx, x, y);
      const SeparationCount c = base.separating(x, y);
      const bool stable = wider.separating(x, y).half_spaces == c.half_spaces;
      mismatches += c.half_spaces != 2 * d;
      unstable += !stable;
      ++pairs;
      csv << '"' << word_string(x) << "\",\"" << word_string(y) << "\"," << d << ','
          << c.half_spaces << ',' << r << ',' << (stable ? "true" : "false") << '\n';
    }
  }
  out.body["radius"] = r;
  out.body["points"] = points.size();
  out.body["pairs"] = pairs;
  out.body["half_spaces_catalogued"] = base.half_spaces().size();
  out.body["mismatches"] = mismatches;
  out.body["unstable"] = unstable;
  out.checks.add("wall_count_equals_twice_length", mismatches == 0);
  out.checks.add("stable_under_radius_increase", unstable == 0);
  out.artifacts.push_back({"walls_audit.csv", csv.str()});
  out.summary.push_back(std::to_string(pairs) + " pairs, " + std::to_string(mismatches) +
                        " mismatches, " + std::to_string(unstable) + " unstable");
  return out;
}

json constants_json(const GraphProduct& ctx, const ExperimentParams& p) {
  const int n_pert = vertex_perturbation_n(ctx, p.eps);
  const TailConstants t = measure_tail_constants(ctx.vertex_data(), n_pert, p.eps);
  const std::size_t m = max_clique_size(ctx.graph());
  return {{"M", m},
          {"n_perturbation", n_pert},
          {"sup_C", t.sup_c},
          {"A_measured", t.a_measured},
          {"B_measured", t.b_measured},
          {"n_schedule", schedule_n(m, t.b_measured, p.eps)}};
}

CommandOutput cmd_kernel_report(const ExperimentConfig& config) {
  CommandOutput out;
  const GraphProduct ctx = build_product(config);
  const ExperimentParams& p = config.params;
  const std::size_t r = config.kernel_report.radius.value_or(p.ball_radius);
  const auto points = seeded_sample(ball(ctx, r), config.kernel_report.sample, p.seed);
  const GraphKernel kernel(ctx, kernel_params(p));

  const KernelMatrix sigma =
      gram(points, [&](const auto& g, const auto& h) { return kernel.sigma(g, h); });
  const KernelMatrix psi =
      gram(points, [&](const auto& g, const auto& h) { return kernel.psi_gamma(g, h); });
  const KernelMatrix phi = phi_gram(ctx, p.n, points);

  const PsdReport sigma_psd = is_psd(sigma, p.tol);
  const double diag_dev = (sigma.values().diagonal().array() - 1.0).abs().maxCoeff();
  const double psi_phi = (psi.values() - phi.values()).cwiseAbs().maxCoeff();

  out.body["radius"] = r;
  out.body["points"] = points.size();
  out.body["constants"] = constants_json(ctx, p);
  out.body["sigma"] = {{"min_eigenvalue", sigma_psd.min_eigenvalue},
                       {"diagonal_deviation", diag_dev}};
  out.body["residuals"] = {{"psi_minus_phi_closed", psi_phi}};
  out.checks.add("sigma_psd", sigma_psd.psd);
  out.checks.add("sigma_unit_diagonal", diag_dev <= 1e-12);
  out.checks.add("psi_matches_phi_closed", psi_phi <= p.tol);
  out.artifacts.push_back({"sigma.csv", matrix_csv(points, sigma.values())});
  out.artifacts.push_back({"psi.csv", matrix_csv(points, psi.values())});
  out.artifacts.push_back({"phi.csv", matrix_csv(points, phi.values())});
  out.summary.push_back("sigma min eigenvalue " + format_double(sigma_psd.min_eigenvalue));
  out.summary.push_back("max |psi - phi| " + format_double(psi_phi));
  return out;
}

ReducedWord random_word(const GraphProduct& ctx, const std::vector<Letter>& alphabet,
                        std::size_t max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  std::vector<Letter> w(length(rng));
  for (Letter& l : w) l = alphabet[letter(rng)];
  return reduce(ctx, w);
}

CommandOutput cmd_invariance(const ExperimentConfig& config) {
  CommandOutput out;
  const GraphProduct ctx = build_product(config);
  const ExperimentParams& p = config.params;
  const GraphKernel kernel(ctx, kernel_params(p));
  const auto alphabet = ctx.alphabet();
  std::mt19937_64 rng(p.seed);
  double worst = 0.0;
  json worst_pair = nullptr;
  for (std::size_t i = 0; i < config.invariance.pairs && !alphabet.empty(); ++i) {
    const ReducedWord g = random_word(ctx, alphabet, config.invariance.max_length, rng);
    const ReducedWord h = random_word(ctx, alphabet, config.invariance.max_length, rng);
    const double lhs = kernel.psi_gamma(g, h);
    const double rhs = phi_gamma_closed(ctx, p.n, multiply(ctx, inverse(ctx, h), g));
    const double res = std::abs(lhs - rhs);
    if (res > worst || worst_pair.is_null()) {
      worst = std::max(worst, res);
      worst_pair = {{"gamma", word_json(g)}, {"eta", word_json(h)}};
    }
  }
  out.body["pairs"] = config.invariance.pairs;
  out.body["max_length"] = config.invariance.max_length;
  out.body["residuals"] = {{"invariance_max", worst}};
  out.body["worst_pair"] = worst_pair;
  out.checks.add("psi_equals_phi_closed", worst <= p.tol);
  out.summary.push_back("max residual " + format_double(worst));
  return out;
}

CommandOutput cmd_b2_audit(const ExperimentConfig& config) {
  CommandOutput out;
  const GraphProduct ctx = build_product(config);
  const ExperimentParams& p = config.params;
  B2AuditOptions opts;
  opts.radius = config.b2.radius.value_or(p.ball_radius);
  opts.n_override = config.b2.n;
  opts.grid = config.b2.grid;
  opts.final_threshold = config.b2.final_threshold;
  opts.solver.seed = p.seed;
  const B2AuditReport rep = b2_audit_phi(ctx, kernel_params(p), opts);

  json grid = json::array();
  for (const NormAtN& g : rep.grid) grid.push_back({{"n", g.n}, {"norm", schur_json(g.norm)}});
  out.body["radius"] = rep.radius;
  out.body["points"] = rep.points;
  out.body["constants"] = {{"M", rep.max_clique},
                           {"n_perturbation", rep.n_perturbation},
                           {"sup_C", rep.constants.sup_c},
                           {"A_measured", rep.constants.a_measured},
                           {"B_measured", rep.constants.b_measured},
                           {"n_schedule", rep.n_schedule}};
  out.body["n_used"] = rep.n_used;
  out.body["at_n_used"] = schur_json(rep.at_n_used);
  out.body["grid"] = grid;
  out.checks.add("norm_within_one_plus_delta", rep.within_delta);
  out.checks.add("grid_non_increasing", rep.grid_non_increasing);
  out.checks.add("grid_final_within_threshold", rep.grid_final_within);
  out.checks.add("solver_converged", rep.at_n_used.converged);
  const auto points = ball(ctx, opts.radius);
  out.artifacts.push_back(
      {"phi_gram.csv", matrix_csv(points, phi_gram(ctx, rep.n_used, points).values())});
  out.summary.push_back("n = " + std::to_string(rep.n_used) + ", Schur norm " +
                        format_double(rep.at_n_used.exact));
  return out;
}

CommandOutput cmd_convergence(const ExperimentConfig& config) {
  CommandOutput out;
  const GraphProduct ctx = build_product(config);
  const std::size_t r = config.convergence.radius.value_or(config.params.ball_radius);
  const auto points = ball(ctx, r);
  json per_n = json::array();
  bool bound_ok = true;
  for (int n : config.convergence.n_values) {
    if (n < 1) throw ConfigError("commands.convergence.n_values: entries must be >= 1");
    double worst_excess = -INFINITY;
    for (const ReducedWord& g : points) {
      const double gap = std::abs(phi_gamma_closed(ctx, n, g) - 1.0);
      worst_excess = std::max(worst_excess, gap - proper_generator(ctx, g) / n);
    }
    bound_ok = bound_ok && worst_excess <= 1e-15;
    per_n.push_back({{"n", n}, {"max_excess_over_bound", worst_excess}});
  }
  std::vector<std::pair<double, double>> profile;
  for (const ReducedWord& g : points) {
    profile.emplace_back(proper_generator(ctx, g), phi_gamma_closed(ctx, 1, g));
  }
  std::sort(profile.begin(), profile.end());
  bool monotone = true;
  for (std::size_t i = 1; i < profile.size(); ++i) {
    monotone = monotone && profile[i].second <= profile[i - 1].second + 1e-15;
  }
  out.body["radius"] = r;
  out.body["points"] = points.size();
  out.body["per_n"] = per_n;
  out.checks.add("pointwise_bound", bound_ok);
  out.checks.add("non_increasing_in_proper_generator", monotone);
  out.summary.push_back(std::to_string(points.size()) + " points checked");
  return out;
}

const std::map<std::string, std::function<CommandOutput(const ExperimentConfig&)>>&
dispatch() {
  static const std::map<std::string, std::function<CommandOutput(const ExperimentConfig&)>> m{
      {"validate", cmd_validate},         {"reduce", cmd_reduce},
      {"walls-audit", cmd_walls_audit},   {"kernel-report", cmd_kernel_report},
      {"invariance-test", cmd_invariance}, {"b2-audit", cmd_b2_audit},
      {"convergence", cmd_convergence}};
  return m;
}

}  // namespace

RunResult error_result(const std::string& command, const std::string& code,
                       const std::string& message) {
  RunResult r;
  r.exit_code = kExitError;
  r.report = {{"command", command},
              {"status", "error"},
              {"exit_code", kExitError},
              {"error", {{"code", code}, {"message", message}}}};
  r.summary = command + ": error [" + code + "] " + message + "\n";
  return r;
}

RunResult run(const ExperimentConfig& config, const std::string& command) {
  const auto& table = dispatch();
  const auto it = table.find(command);
  if (it == table.end()) {
    return error_result(command, "unknown_command", "unknown command '" + command + "'");
  }
  try {
    CommandOutput out = it->second(config);
    RunResult r;
    const bool ok = out.checks.all();
    r.exit_code = ok ? kExitPass : kExitInvariantFailure;
    r.report = std::move(out.body);
    r.report["command"] = command;
    r.report["params"] = params_json(config.params);
    r.report["checks"] = out.checks.to_json();
    r.report["status"] = ok ? "pass" : "fail";
    r.report["exit_code"] = r.exit_code;
    json names = json::array();
    for (const Artifact& a : out.artifacts) names.push_back(a.name);
    r.report["artifacts"] = names;
    r.artifacts = std::move(out.artifacts);
    std::ostringstream s;
    s << command << ": " << (ok ? "pass" : "FAIL") << '\n';
    for (const std::string& line : out.summary) s << "  " << line << '\n';
    for (const json& c : r.report["checks"]) {
      if (!c["passed"].get<bool>()) s << "  failed check: " << c["name"].get<std::string>() << '\n';
    }
    r.summary = s.str();
    return r;
  } catch (const StructuralError& e) {
    RunResult r = error_result(command, "structural_error", e.what());
    r.report["error"]["axiom"] = e.axiom();
    return r;
  } catch (const ConfigError& e) {
    return error_result(command, "schema_violation", e.what());
  } catch (const EnumerationError& e) {
    return error_result(command, "enumeration_cap", e.what());
  } catch (const NumericalError& e) {
    return error_result(command, "numerical_error", e.what());
  } catch (const std::invalid_argument& e) {
    return error_result(command, "schema_violation", e.what());
  } catch (const std::out_of_range& e) {
    return error_result(command, "schema_violation", e.what());
  }
}

}  // namespace gpwh

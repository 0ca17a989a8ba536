#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gpwh/app.hpp"
#include "gpwh/errors.hpp"

namespace {

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int n = std::stoi(item, &used);
    if (used != item.size()) throw gpwh::ConfigError("--grid: bad entry '" + item + "'");
    out.push_back(n);
  }
  return out;
}

int emit(const gpwh::RunResult& r, bool as_json, const std::string& out_dir) {
  if (as_json) {
    std::cout << r.report.dump(2) << '\n';
  } else {
    std::cout << r.summary;
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    std::ofstream(dir / "report.json") << r.report.dump(2) << '\n';
    for (const gpwh::Artifact& a : r.artifacts) std::ofstream(dir / a.name) << a.content;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-product weak Haagerup audits"};
  std::string command;
  std::string config_path;
  bool as_json = false;
  std::string out_dir;
  std::optional<std::size_t> radius;
  std::optional<double> eps, delta;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::string grid;

  app.add_option("command", command, "validate | reduce | walls-audit | kernel-report | "
                                     "invariance-test | b2-audit | convergence")
      ->required();
  app.add_option("-c,--config", config_path, "JSON config file (default: stdin)");
  app.add_flag("--json", as_json, "Print the machine-readable report");
  app.add_option("--out-dir", out_dir, "Directory for report.json and CSV sidecars");
  app.add_option("--radius", radius, "Ball radius for the command");
  app.add_option("--eps", eps, "Perturbation eps");
  app.add_option("--delta", delta, "Target excess delta");
  app.add_option("--n", n, "Kernel n (b2-audit: overrides the schedule)");
  app.add_option("--grid", grid, "b2-audit: comma-separated n values");
  app.add_option("--seed", seed, "Seed for sampling and probes");
  CLI11_PARSE(app, argc, argv);

  gpwh::ExperimentConfig config;
  try {
    std::string text;
    if (config_path.empty() || config_path == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream in(config_path);
      if (!in) throw gpwh::ConfigError("cannot open config '" + config_path + "'");
      text = read_all(in);
    }
    config = gpwh::parse_config_text(text);
    auto& p = config.params;
    if (eps) p.eps = *eps;
    if (delta) p.delta = *delta;
    if (seed) p.seed = *seed;
    if (n) {
      if (command == "b2-audit") config.b2.n = *n;
      else p.n = *n;
    }
    if (!grid.empty()) config.b2.grid = parse_grid(grid);
    if (radius) {
      config.walls_audit.radius = radius;
      config.kernel_report.radius = radius;
      config.b2.radius = radius;
      config.convergence.radius = radius;
    }
  } catch (const gpwh::ConfigError& e) {
    return emit(gpwh::error_result(command, "schema_violation", e.what()), as_json, out_dir);
  } catch (const std::exception& e) {
    return emit(gpwh::error_result(command, "schema_violation", e.what()), as_json, out_dir);
  }
  return emit(gpwh::run(config, command), as_json, out_dir);
}

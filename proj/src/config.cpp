#include "gpwh/config.hpp"

#include <initializer_list>
#include <set>

#include "gpwh/errors.hpp"

namespace gpwh {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void require_object(const json& j, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!keys.contains(key)) fail(where, "unknown field '" + key + "'");
  }
}

template <class T>
T get_as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    fail(where, std::string("wrong type (") + e.what() + ")");
  }
}

template <class T>
void read_optional(const json& obj, const char* key, const std::string& where, T& out) {
  if (obj.contains(key)) out = get_as<T>(obj.at(key), where + "." + key);
}

template <class T>
void read_optional(const json& obj, const char* key, const std::string& where,
                   std::optional<T>& out) {
  if (obj.contains(key) && !obj.at(key).is_null()) {
    out = get_as<T>(obj.at(key), where + "." + key);
  }
}

std::size_t read_count(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

void parse_graph(const json& j, ExperimentConfig& c) {
  require_object(j, "graph", {"vertex_count", "edges"});
  if (!j.contains("vertex_count")) fail("graph", "missing 'vertex_count'");
  c.vertex_count = read_count(j.at("vertex_count"), "graph.vertex_count");
  if (j.contains("edges")) {
    const json& edges = j.at("edges");
    if (!edges.is_array()) fail("graph.edges", "expected an array");
    for (const json& e : edges) {
      if (!e.is_array() || e.size() != 2) fail("graph.edges", "each edge is [u, v]");
      c.edges.emplace_back(read_count(e[0], "graph.edges"), read_count(e[1], "graph.edges"));
    }
  }
}

VertexDataSpec parse_vertex_datum(const json& j, const std::string& where) {
  require_object(j, where, {"cayley", "inverse", "R", "S"});
  for (const char* key : {"cayley", "R", "S"}) {
    if (!j.contains(key)) fail(where, std::string("missing '") + key + "'");
  }
  VertexDataSpec d;
  d.cayley = get_as<FiniteGroup::Table>(j.at("cayley"), where + ".cayley");
  read_optional(j, "inverse", where, d.inverse);
  d.r = get_as<std::vector<std::vector<double>>>(j.at("R"), where + ".R");
  d.s = get_as<std::vector<std::vector<double>>>(j.at("S"), where + ".S");
  return d;
}

void parse_params(const json& j, ExperimentParams& p) {
  require_object(j, "params", {"n", "eps", "delta", "d_cap", "ball_radius", "tol", "seed"});
  read_optional(j, "n", "params", p.n);
  read_optional(j, "eps", "params", p.eps);
  read_optional(j, "delta", "params", p.delta);
  read_optional(j, "d_cap", "params", p.d_cap);
  read_optional(j, "ball_radius", "params", p.ball_radius);
  read_optional(j, "tol", "params", p.tol);
  read_optional(j, "seed", "params", p.seed);
  if (p.n < 1) fail("params.n", "must be >= 1");
  if (!(p.eps > 0.0)) fail("params.eps", "must be > 0");
  if (!(p.delta > 0.0)) fail("params.delta", "must be > 0");
  if (!(p.tol > 0.0)) fail("params.tol", "must be > 0");
}

void parse_commands(const json& j, ExperimentConfig& c) {
  require_object(j, "commands",
                 {"reduce", "walls-audit", "kernel-report", "invariance-test", "b2-audit",
                  "convergence"});
  if (j.contains("reduce")) {
    const json& r = j.at("reduce");
    require_object(r, "commands.reduce", {"words"});
    if (r.contains("words")) {
      const auto words = get_as<std::vector<std::vector<std::array<std::size_t, 2>>>>(
          r.at("words"), "commands.reduce.words");
      for (const auto& w : words) {
        std::vector<Letter> letters;
        for (const auto& [v, g] : w) letters.push_back({v, g});
        c.reduce.words.push_back(std::move(letters));
      }
    }
  }
  if (j.contains("walls-audit")) {
    const json& w = j.at("walls-audit");
    require_object(w, "commands.walls-audit", {"radius"});
    read_optional(w, "radius", "commands.walls-audit", c.walls_audit.radius);
  }
  if (j.contains("kernel-report")) {
    const json& k = j.at("kernel-report");
    require_object(k, "commands.kernel-report", {"radius", "sample"});
    read_optional(k, "radius", "commands.kernel-report", c.kernel_report.radius);
    read_optional(k, "sample", "commands.kernel-report", c.kernel_report.sample);
  }
  if (j.contains("invariance-test")) {
    const json& i = j.at("invariance-test");
    require_object(i, "commands.invariance-test", {"pairs", "max_length"});
    read_optional(i, "pairs", "commands.invariance-test", c.invariance.pairs);
    read_optional(i, "max_length", "commands.invariance-test", c.invariance.max_length);
  }
  if (j.contains("b2-audit")) {
    const json& b = j.at("b2-audit");
    require_object(b, "commands.b2-audit", {"radius", "n", "grid", "final_threshold"});
    read_optional(b, "radius", "commands.b2-audit", c.b2.radius);
    read_optional(b, "n", "commands.b2-audit", c.b2.n);
    read_optional(b, "grid", "commands.b2-audit", c.b2.grid);
    read_optional(b, "final_threshold", "commands.b2-audit", c.b2.final_threshold);
  }
  if (j.contains("convergence")) {
    const json& v = j.at("convergence");
    require_object(v, "commands.convergence", {"radius", "n_values"});
    read_optional(v, "radius", "commands.convergence", c.convergence.radius);
    read_optional(v, "n_values", "commands.convergence", c.convergence.n_values);
  }
}

Eigen::VectorXd to_vector(const std::vector<double>& xs) {
  return Eigen::Map<const Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  require_object(doc, "config", {"schema_version", "graph", "vertex_data", "params", "commands"});
  if (!doc.contains("schema_version")) fail("config", "missing 'schema_version'");
  if (doc.at("schema_version") != kSchemaVersion) {
    fail("config.schema_version", std::string("expected \"") + kSchemaVersion + "\"");
  }
  ExperimentConfig c;
  if (!doc.contains("graph")) fail("config", "missing 'graph'");
  parse_graph(doc.at("graph"), c);
  if (!doc.contains("vertex_data")) fail("config", "missing 'vertex_data'");
  const json& data = doc.at("vertex_data");
  if (!data.is_array()) fail("vertex_data", "expected an array");
  for (std::size_t i = 0; i < data.size(); ++i) {
    c.vertex_data.push_back(parse_vertex_datum(data[i], "vertex_data[" + std::to_string(i) + "]"));
  }
  if (doc.contains("params")) parse_params(doc.at("params"), c.params);
  if (doc.contains("commands")) parse_commands(doc.at("commands"), c);
  return c;
}

ExperimentConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("config", std::string("invalid JSON (") + e.what() + ")");
  }
  return parse_config(doc);
}

std::vector<WeakHaagerupVertexData> build_vertex_data(const ExperimentConfig& config) {
  std::vector<WeakHaagerupVertexData> out;
  for (const VertexDataSpec& d : config.vertex_data) {
    FiniteGroup group = d.inverse ? FiniteGroup(d.cayley, *d.inverse) : FiniteGroup(d.cayley);
    std::vector<Eigen::VectorXd> r, s;
    for (const auto& x : d.r) r.push_back(to_vector(x));
    for (const auto& x : d.s) s.push_back(to_vector(x));
    out.emplace_back(std::move(group), std::move(r), std::move(s));
  }
  return out;
}

GraphProduct build_product(const ExperimentConfig& config) {
  return GraphProduct(SimpleGraph(config.vertex_count, config.edges),
                      build_vertex_data(config), config.params.tol);
}

}  // namespace gpwh

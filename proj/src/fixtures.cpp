#include "gpwh/fixtures.hpp"

#include <cmath>
#include <numbers>

namespace gpwh::fixtures {

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

}  // namespace

WeakHaagerupVertexData d0() {
  return WeakHaagerupVertexData(FiniteGroup::cyclic(2), {vec({0.0}), vec({1.0})},
                                {Eigen::VectorXd(0), Eigen::VectorXd(0)});
}

WeakHaagerupVertexData d1() {
  return WeakHaagerupVertexData(FiniteGroup::cyclic(2), {vec({0.0, 0.0}), vec({1.0, 0.0})},
                                {vec({0.5, 0.0}), vec({0.0, 0.5})});
}

WeakHaagerupVertexData d2(double r, double s) {
  std::vector<Eigen::VectorXd> rs, ss;
  for (int k = 0; k < 3; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 3.0;
    // Exact zero at the identity keeps R(1) = 0 bit-for-bit.
    rs.push_back(k == 0 ? vec({0.0, 0.0}) : vec({r * (std::cos(t) - 1.0), r * std::sin(t)}));
    ss.push_back(vec({s * std::cos(t), s * std::sin(t)}));
  }
  return WeakHaagerupVertexData(FiniteGroup::cyclic(3), rs, ss);
}

SimpleGraph f1() { return SimpleGraph(2, {{0, 1}}); }
SimpleGraph f2() { return SimpleGraph(2, {}); }
SimpleGraph f3() { return SimpleGraph(3, {{0, 1}, {1, 2}}); }

GraphProduct uniform(const SimpleGraph& graph, const WeakHaagerupVertexData& datum) {
  return GraphProduct(graph, std::vector<WeakHaagerupVertexData>(graph.vertex_count(), datum));
}

std::vector<NamedProduct> standard_products() {
  std::vector<NamedProduct> out;
  const std::pair<const char*, SimpleGraph> graphs[] = {{"F1", f1()}, {"F2", f2()}, {"F3", f3()}};
  const std::pair<const char*, WeakHaagerupVertexData> data[] = {{"D0", d0()}, {"D1", d1()}};
  for (const auto& [gname, graph] : graphs) {
    for (const auto& [dname, datum] : data) {
      out.push_back({std::string(gname) + "/" + dname, uniform(graph, datum)});
    }
  }
  return out;
}

}  // namespace gpwh::fixtures

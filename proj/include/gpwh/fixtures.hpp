#pragma once

#include <string>
#include <vector>

#include "gpwh/word_engine.hpp"

namespace gpwh::fixtures {

/// Z/2 with R = (0), (1) and no S part.
WeakHaagerupVertexData d0();
/// Z/2 with R = (0,0), (1,0) and S = (1/2,0), (0,1/2).
WeakHaagerupVertexData d1();
/// Z/3 acting by rotation: R(g^k) = r (cos 2pi k/3 - 1, sin 2pi k/3),
/// S(g^k) = s (cos 2pi k/3, sin 2pi k/3).
WeakHaagerupVertexData d2(double r = 1.0, double s = 0.5);

/// Two vertices joined by an edge.
SimpleGraph f1();
/// Two vertices, no edge.
SimpleGraph f2();
/// The path 0 - 1 - 2.
SimpleGraph f3();

/// `graph` with `datum` at every vertex.
GraphProduct uniform(const SimpleGraph& graph, const WeakHaagerupVertexData& datum);

struct NamedProduct {
  std::string name;
  GraphProduct ctx;
};

/// F1, F2, F3 paired with D0 and D1.
std::vector<NamedProduct> standard_products();

}  // namespace gpwh::fixtures

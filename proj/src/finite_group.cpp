#include "gpwh/finite_group.hpp"

#include <string>

#include "gpwh/errors.hpp"

namespace gpwh {

namespace {

std::string at(Element a, Element b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(Table cayley) : cayley_(std::move(cayley)) {
  const std::size_t n = cayley_.size();
  if (n == 0) throw StructuralError("nonempty", "group table has no rows");
  for (std::size_t a = 0; a < n; ++a) {
    if (cayley_[a].size() != n) {
      throw StructuralError("square", "row " + std::to_string(a) + " has " +
                                          std::to_string(cayley_[a].size()) +
                                          " entries, expected " + std::to_string(n));
    }
    for (Element x : cayley_[a]) {
      if (x >= n) {
        throw StructuralError("closure", "entry " + std::to_string(x) +
                                             " in row " + std::to_string(a) +
                                             " is out of range");
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (cayley_[0][a] != a || cayley_[a][0] != a) {
      throw StructuralError("identity", "element 0 does not act as identity at " +
                                            std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row_seen[cayley_[a][b]]) {
        throw StructuralError("latin_square", "row " + std::to_string(a) + " repeats " +
                                                  std::to_string(cayley_[a][b]));
      }
      if (col_seen[cayley_[b][a]]) {
        throw StructuralError("latin_square", "column " + std::to_string(a) +
                                                  " repeats " + std::to_string(cayley_[b][a]));
      }
      row_seen[cayley_[a][b]] = true;
      col_seen[cayley_[b][a]] = true;
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]]) {
          throw StructuralError("associativity",
                                "(ab)c != a(bc) for (a,b,c)=(" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (cayley_[a][b] == identity) inverse_[a] = b;
    }
  }
}

FiniteGroup::FiniteGroup(Table cayley, const std::vector<Element>& inverse)
    : FiniteGroup(std::move(cayley)) {
  if (inverse.size() != order()) {
    throw StructuralError("inverse", "inverse table has " + std::to_string(inverse.size()) +
                                         " entries, expected " + std::to_string(order()));
  }
  for (Element a = 0; a < order(); ++a) {
    if (inverse[a] >= order() || cayley_[a][inverse[a]] != identity) {
      throw StructuralError("inverse", "x*inverse[x] != 0 at " + at(a, inverse[a]));
    }
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t order) {
  Table t(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) t[a][b] = (a + b) % order;
  }
  return FiniteGroup(std::move(t));
}

}  // namespace gpwh

#pragma once

#include <cstddef>
#include <vector>

namespace gpwh {

using Element = std::size_t;

/// Finite group given by an explicit Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<Element>>;

  static constexpr Element identity = 0;

  /// Validates the table (square, Latin, identity at 0, associative) and
  /// derives inverses. Throws StructuralError naming the failed axiom.
  explicit FiniteGroup(Table cayley);

  /// As above, and additionally checks a supplied inverse table.
  FiniteGroup(Table cayley, const std::vector<Element>& inverse);

  static FiniteGroup cyclic(std::size_t order);

  std::size_t order() const noexcept { return cayley_.size(); }
  Element multiply(Element a, Element b) const { return cayley_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  bool contains(Element a) const noexcept { return a < order(); }

  const Table& cayley() const noexcept { return cayley_; }
  const std::vector<Element>& inverses() const noexcept { return inverse_; }

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  Table cayley_;
  std::vector<Element> inverse_;
};

}  // namespace gpwh

#pragma once

#include <cstddef>
#include <vector>

#include "gpwh/word_engine.hpp"

namespace gpwh {

/// The half-space base·W_vertex, where W_v holds the elements whose reduced
/// form can start with a G_v letter. As a wall it denotes the unordered
/// partition {base·W_v, complement}.
struct Wall {
  ReducedWord base;
  Vertex vertex = 0;
};

/// True iff some shuffle of `w` starts with a letter of vertex v.
bool starts_with_vertex(const GraphProduct& ctx, const ReducedWord& w, Vertex v);

/// x ∈ base·W_v, i.e. base^-1·x can start with a G_v letter.
bool in_half_space(const GraphProduct& ctx, const ReducedWord& x, const Wall& wall);

/// Membership of every point in `points` (one bit per point).
std::vector<bool> half_space_signature(const GraphProduct& ctx, const Wall& wall,
                                       const std::vector<ReducedWord>& points);

/// The two half-spaces coincide as subsets on the ball of `radius`.
bool half_spaces_equal(const GraphProduct& ctx, const Wall& a, const Wall& b,
                       std::size_t radius);

/// The two unordered partitions agree on the ball of `radius`.
bool walls_equal(const GraphProduct& ctx, const Wall& a, const Wall& b, std::size_t radius);

/// All four of h∩k, h∩k^c, h^c∩k, h^c∩k^c meet the ball of `radius`.
bool crosses(const GraphProduct& ctx, const Wall& a, const Wall& b, std::size_t radius);

struct SeparationCount {
  /// Distinct half-spaces g·W_v (bases in the candidate ball) containing
  /// exactly one of x, y. This is the quantity compared with 2|y^-1 x|_r.
  std::size_t half_spaces = 0;
  /// Distinct unordered partitions among those half-spaces.
  std::size_t walls = 0;
  std::size_t candidate_radius = 0;
  std::size_t comparison_radius = 0;
};

/// Default candidate radius |y^-1 x|_r + max(|x|, |y|) + 1.
std::size_t default_candidate_radius(const GraphProduct& ctx, const ReducedWord& x,
                                     const ReducedWord& y);

/// Enumerates half-spaces with bases in the ball of `candidate_radius`,
/// deduplicates extensionally on the ball of `comparison_radius` (0 selects
/// candidate_radius + 2) and counts those separating x from y.
SeparationCount count_separating_walls(const GraphProduct& ctx, const ReducedWord& x,
                                       const ReducedWord& y, std::size_t candidate_radius,
                                       std::size_t comparison_radius = 0);

}  // namespace gpwh

namespace gpwh {

/// Distinct half-spaces g·W_v for g in a candidate ball, deduplicated on a
/// comparison ball. Reusable across many (x, y) queries.
class HalfSpaceCatalog {
 public:
  HalfSpaceCatalog(const GraphProduct& ctx, std::size_t candidate_radius,
                   std::size_t comparison_radius);

  const std::vector<Wall>& half_spaces() const noexcept { return half_spaces_; }
  std::size_t candidate_radius() const noexcept { return candidate_radius_; }
  std::size_t comparison_radius() const noexcept { return comparison_radius_; }

  SeparationCount separating(const ReducedWord& x, const ReducedWord& y) const;

 private:
  const GraphProduct* ctx_;
  std::size_t candidate_radius_;
  std::size_t comparison_radius_;
  std::vector<Wall> half_spaces_;
  std::vector<std::vector<bool>> signatures_;
};

}  // namespace gpwh

#include "gpwh/walls.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gpwh {

namespace {

std::vector<bool> unordered_key(std::vector<bool> sig) {
  // Normalize so the first point is outside; complements then share a key.
  if (!sig.empty() && sig.front()) sig.flip();
  return sig;
}

}  // namespace

bool starts_with_vertex(const GraphProduct& ctx, const ReducedWord& w, Vertex v) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].vertex == v) return true;
    if (!ctx.graph().adjacent(w[i].vertex, v)) return false;
  }
  return false;
}

bool in_half_space(const GraphProduct& ctx, const ReducedWord& x, const Wall& wall) {
  return starts_with_vertex(ctx, multiply(ctx, inverse(ctx, wall.base), x), wall.vertex);
}

std::vector<bool> half_space_signature(const GraphProduct& ctx, const Wall& wall,
                                       const std::vector<ReducedWord>& points) {
  const ReducedWord base_inv = inverse(ctx, wall.base);
  std::vector<bool> sig(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    sig[i] = starts_with_vertex(ctx, multiply(ctx, base_inv, points[i]), wall.vertex);
  }
  return sig;
}

bool half_spaces_equal(const GraphProduct& ctx, const Wall& a, const Wall& b,
                       std::size_t radius) {
  if (radius < 1) throw std::invalid_argument("half_spaces_equal: radius must be >= 1");
  const auto points = ball(ctx, radius);
  return half_space_signature(ctx, a, points) == half_space_signature(ctx, b, points);
}

bool walls_equal(const GraphProduct& ctx, const Wall& a, const Wall& b, std::size_t radius) {
  if (radius < 1) throw std::invalid_argument("walls_equal: radius must be >= 1");
  const auto points = ball(ctx, radius);
  return unordered_key(half_space_signature(ctx, a, points)) ==
         unordered_key(half_space_signature(ctx, b, points));
}

bool crosses(const GraphProduct& ctx, const Wall& a, const Wall& b, std::size_t radius) {
  if (radius < 1) throw std::invalid_argument("crosses: radius must be >= 1");
  const auto points = ball(ctx, radius);
  const auto sa = half_space_signature(ctx, a, points);
  const auto sb = half_space_signature(ctx, b, points);
  bool met[2][2] = {{false, false}, {false, false}};
  for (std::size_t i = 0; i < points.size(); ++i) met[sa[i]][sb[i]] = true;
  return met[0][0] && met[0][1] && met[1][0] && met[1][1];
}

std::size_t default_candidate_radius(const GraphProduct& ctx, const ReducedWord& x,
                                     const ReducedWord& y) {
  return reduced_distance(ctx, x, y) + std::max(x.size(), y.size()) + 1;
}

HalfSpaceCatalog::HalfSpaceCatalog(const GraphProduct& ctx, std::size_t candidate_radius,
                                   std::size_t comparison_radius)
    : ctx_(&ctx),
      candidate_radius_(candidate_radius),
      comparison_radius_(comparison_radius == 0 ? candidate_radius + 2 : comparison_radius) {
  const auto bases = ball(ctx, candidate_radius_);
  const auto points = ball(ctx, comparison_radius_);
  std::set<std::vector<bool>> seen;
  for (const ReducedWord& g : bases) {
    for (Vertex v = 0; v < ctx.vertex_count(); ++v) {
      Wall h{g, v};
      auto sig = half_space_signature(ctx, h, points);
      if (seen.insert(sig).second) {
        half_spaces_.push_back(std::move(h));
        signatures_.push_back(std::move(sig));
      }
    }
  }
}

SeparationCount HalfSpaceCatalog::separating(const ReducedWord& x, const ReducedWord& y) const {
  SeparationCount out;
  out.candidate_radius = candidate_radius_;
  out.comparison_radius = comparison_radius_;
  std::set<std::vector<bool>> walls;
  for (std::size_t i = 0; i < half_spaces_.size(); ++i) {
    if (in_half_space(*ctx_, x, half_spaces_[i]) != in_half_space(*ctx_, y, half_spaces_[i])) {
      ++out.half_spaces;
      walls.insert(unordered_key(signatures_[i]));
    }
  }
  out.walls = walls.size();
  return out;
}

SeparationCount count_separating_walls(const GraphProduct& ctx, const ReducedWord& x,
                                       const ReducedWord& y, std::size_t candidate_radius,
                                       std::size_t comparison_radius) {
  return HalfSpaceCatalog(ctx, candidate_radius, comparison_radius).separating(x, y);
}

}  // namespace gpwh

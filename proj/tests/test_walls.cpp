#include <gtest/gtest.h>

#include "gpwh/analysis.hpp"
#include "gpwh/fixtures.hpp"
#include "gpwh/walls.hpp"

using namespace gpwh;

namespace {

const Letter su{0, 1};
const Letter tv{1, 1};

GraphProduct f1() { return fixtures::uniform(fixtures::f1(), fixtures::d1()); }
GraphProduct f2() { return fixtures::uniform(fixtures::f2(), fixtures::d1()); }

/// Membership via the full shuffle class of base^-1 x.
bool in_half_space_by_representatives(const GraphProduct& ctx, const ReducedWord& x,
                                      const Wall& w) {
  const ReducedWord y = multiply(ctx, inverse(ctx, w.base), x);
  for (const auto& rep : reduced_representatives(ctx, y)) {
    if (!rep.empty() && rep.front().vertex == w.vertex) return true;
  }
  return false;
}

std::vector<GraphProduct> wall_contexts() {
  std::vector<GraphProduct> out;
  for (auto& p : fixtures::standard_products()) out.push_back(std::move(p.ctx));
  out.push_back(fixtures::uniform(fixtures::f2(), fixtures::d2()));
  out.push_back(fixtures::uniform(fixtures::f3(), fixtures::d2()));
  return out;
}

}  // namespace

TEST(HalfSpace, Examples) {
  const GraphProduct b = f2();
  const ReducedWord e;
  EXPECT_TRUE(in_half_space(b, b.word({su}), Wall{b.word({}), 0}));
  EXPECT_FALSE(in_half_space(b, b.word({}), Wall{b.word({}), 0}));
  EXPECT_FALSE(in_half_space(b, b.word({}), Wall{b.word({}), 1}));
  EXPECT_TRUE(in_half_space(b, b.word({}), Wall{b.word({su}), 0}));
}

TEST(HalfSpace, MatchesRepresentativeEnumeration) {
  for (const GraphProduct& ctx : wall_contexts()) {
    const auto pts = ball(ctx, 2);
    for (const ReducedWord& g : pts) {
      for (Vertex v = 0; v < ctx.vertex_count(); ++v) {
        for (const ReducedWord& x : pts) {
          EXPECT_EQ(in_half_space(ctx, x, Wall{g, v}),
                    in_half_space_by_representatives(ctx, x, Wall{g, v}));
        }
      }
    }
  }
}

TEST(HalfSpace, Equivariance) {
  for (const GraphProduct& ctx : wall_contexts()) {
    const auto pts = ball(ctx, 2);
    for (const ReducedWord& k : pts) {
      for (const ReducedWord& g : pts) {
        for (Vertex v = 0; v < ctx.vertex_count(); ++v) {
          const Wall w{g, v};
          const Wall kw{multiply(ctx, k, g), v};
          for (const ReducedWord& x : pts) {
            EXPECT_EQ(in_half_space(ctx, multiply(ctx, k, x), kw), in_half_space(ctx, x, w));
          }
        }
      }
    }
  }
}

TEST(Walls, TranslateByOwnLetterIsComplement) {
  const GraphProduct b = f2();
  const Wall w{b.word({}), 0};
  const Wall sw{b.word({su}), 0};
  EXPECT_FALSE(half_spaces_equal(b, w, sw, 3));
  EXPECT_TRUE(walls_equal(b, w, sw, 3));
  EXPECT_TRUE(walls_equal(b, w, w, 3));
  EXPECT_TRUE(half_spaces_equal(b, w, w, 3));
  for (const ReducedWord& x : ball(b, 3)) {
    EXPECT_NE(in_half_space(b, x, w), in_half_space(b, x, sw));
  }
  EXPECT_FALSE(walls_equal(b, w, Wall{b.word({}), 1}, 3));
}

TEST(Walls, Crossing) {
  const GraphProduct a = f1();
  EXPECT_TRUE(crosses(a, Wall{a.word({}), 0}, Wall{a.word({}), 1}, 2));
  const GraphProduct b = f2();
  EXPECT_FALSE(crosses(b, Wall{b.word({}), 0}, Wall{b.word({}), 1}, 2));
  EXPECT_FALSE(crosses(b, Wall{b.word({}), 0}, Wall{b.word({}), 0}, 2));
}

TEST(Walls, SeparationExamples) {
  const GraphProduct b = f2();
  EXPECT_EQ(count_separating_walls(b, b.word({}), b.word({}), 3).half_spaces, 0u);
  const SeparationCount c = count_separating_walls(b, b.word({}), b.word({su}), 3);
  EXPECT_EQ(c.half_spaces, 2u);
  EXPECT_EQ(c.walls, 1u);
  const GraphProduct a = f1();
  EXPECT_EQ(count_separating_walls(a, a.word({}), a.word({su, tv}), 4).half_spaces, 4u);
}

TEST(Walls, SeparationEqualsTwiceLengthWithZ3Vertices) {
  const GraphProduct ctx = fixtures::uniform(fixtures::f3(), fixtures::d2());
  const auto pts = ball(ctx, 2);
  const HalfSpaceCatalog cat(ctx, 3, 5);
  for (const ReducedWord& x : pts) {
    for (const ReducedWord& y : pts) {
      const SeparationCount c = cat.separating(x, y);
      EXPECT_EQ(c.half_spaces, 2 * reduced_distance(ctx, x, y));
      // With order-3 vertex groups no half-space is another's complement.
      EXPECT_EQ(c.walls, c.half_spaces);
    }
  }
}

TEST(Walls, DefaultCandidateRadius) {
  const GraphProduct b = f2();
  EXPECT_EQ(default_candidate_radius(b, b.word({su}), b.word({tv})), 2u + 1u + 1u);
}

TEST(Walls, ComplementClosure) {
  const GraphProduct b = f2();
  const HalfSpaceCatalog cat(b, 2, 4);
  for (const Wall& w : cat.half_spaces()) {
    const auto sig = half_space_signature(b, w, ball(b, 4));
    bool has_in = false, has_out = false;
    for (bool bit : sig) (bit ? has_in : has_out) = true;
    EXPECT_TRUE(has_in && has_out);
  }
}

TEST(Walls, ReducedLengthIsCnd) {
  for (const GraphProduct& ctx : wall_contexts()) {
    const auto pts = ball(ctx, 3);
    const KernelMatrix m = gram(pts, [&](const ReducedWord& x, const ReducedWord& y) {
      return static_cast<double>(reduced_distance(ctx, x, y));
    });
    const CndReport r = is_cnd(m);
    EXPECT_TRUE(r.zero_sum_ok) << r.zero_sum_max_eigenvalue;
    EXPECT_TRUE(r.schoenberg_ok);
  }
}

#include <gtest/gtest.h>

#include <cmath>

#include "gpwh/analysis.hpp"
#include "gpwh/errors.hpp"
#include "gpwh/fixtures.hpp"
#include "gpwh/vertex_data.hpp"

using namespace gpwh;

namespace {

std::string failed_axiom(const FiniteGroup::Table& t) {
  try {
    FiniteGroup g(t);
  } catch (const StructuralError& e) {
    return e.axiom();
  }
  return "";
}

Eigen::VectorXd v2(double a, double b) { return Eigen::Vector2d(a, b); }

}  // namespace

TEST(FiniteGroup, CyclicTablesAndInverses) {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  EXPECT_EQ(z3.order(), 3u);
  EXPECT_EQ(z3.multiply(1, 2), 0u);
  EXPECT_EQ(z3.inverse(1), 2u);
  EXPECT_EQ(z3.inverse(0), 0u);
}

TEST(FiniteGroup, NamesTheFailedAxiom) {
  EXPECT_EQ(failed_axiom({}), "nonempty");
  EXPECT_EQ(failed_axiom({{0, 1}, {1}}), "square");
  EXPECT_EQ(failed_axiom({{0, 2}, {1, 0}}), "closure");
  EXPECT_EQ(failed_axiom({{1, 0}, {0, 1}}), "identity");
  EXPECT_EQ(failed_axiom({{0, 1}, {1, 1}}), "latin_square");
  // A Latin square with identity 0 that is not associative.
  EXPECT_EQ(failed_axiom({{0, 1, 2, 3, 4},
                          {1, 0, 3, 4, 2},
                          {2, 4, 0, 1, 3},
                          {3, 2, 4, 0, 1},
                          {4, 3, 1, 2, 0}}),
            "associativity");
  try {
    FiniteGroup g({{0, 1}, {1, 0}}, {0, 0});
    FAIL() << "inverse table accepted";
  } catch (const StructuralError& e) {
    EXPECT_EQ(e.axiom(), "inverse");
  }
}

TEST(VertexData, FixturesValidate) {
  for (const auto& d : {fixtures::d0(), fixtures::d1(), fixtures::d2()}) {
    const ValidationReport r = validate_vertex_data(d);
    EXPECT_TRUE(r.ok());
    EXPECT_LT(r.max_residual, 1e-12);
  }
}

TEST(VertexData, PhiValues) {
  EXPECT_DOUBLE_EQ(fixtures::d0().phi(0), 0.0);
  EXPECT_DOUBLE_EQ(fixtures::d0().phi(1), 1.0);
  EXPECT_DOUBLE_EQ(fixtures::d1().phi(0), 1.0);
  EXPECT_DOUBLE_EQ(fixtures::d1().phi(1), 1.5);
  EXPECT_NEAR(fixtures::d2().phi(0), 1.0, 1e-15);
  EXPECT_NEAR(fixtures::d2().phi(1), 3.25, 1e-14);
  EXPECT_NEAR(fixtures::d2().phi(2), 3.25, 1e-14);
}

TEST(VertexData, SphereViolationIsReported) {
  const WeakHaagerupVertexData bad(FiniteGroup::cyclic(2), {v2(0, 0), v2(1, 0)},
                                   {v2(0.5, 0), v2(0, 1)});
  const ValidationReport r = validate_vertex_data(bad);
  ASSERT_FALSE(r.ok());
  bool sphere = false;
  for (const Violation& v : r.violations) {
    if (v.kind == ViolationKind::kSphereConstraint && v.x == 1) {
      sphere = true;
      EXPECT_NEAR(v.residual, 0.75, 1e-15);
    }
  }
  EXPECT_TRUE(sphere);
}

TEST(VertexData, NonzeroRAtIdentityIsReported) {
  const WeakHaagerupVertexData bad(FiniteGroup::cyclic(2), {v2(0.1, 0), v2(1, 0)},
                                   {v2(0.5, 0), v2(0, 0.5)});
  const ValidationReport r = validate_vertex_data(bad);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().kind, ViolationKind::kRNotZeroAtIdentity);
}

TEST(VertexData, KnudbyViolationNamesThePair) {
  // On Z/2 a Knudby failure is always a sphere failure, so use Z/3: S stays
  // on the sphere but is not rotation-equivariant.
  const auto rot = fixtures::d2();
  const WeakHaagerupVertexData bad(FiniteGroup::cyclic(3), rot.r_table(),
                                   {v2(0.5, 0), v2(0, 0.5), v2(0.5, 0)});
  const ValidationReport r = validate_vertex_data(bad);
  ASSERT_FALSE(r.ok());
  std::size_t knudby = 0;
  for (const Violation& v : r.violations) {
    knudby += v.kind == ViolationKind::kKnudbyIdentity;
    // phi(g) and phi(g^-1) now differ as well.
    EXPECT_TRUE(v.kind == ViolationKind::kKnudbyIdentity ||
                v.kind == ViolationKind::kPhiAsymmetric);
    EXPECT_LT(v.x, 3u);
    EXPECT_LT(v.y, 3u);
    EXPECT_GT(v.residual, 1e-9);
  }
  EXPECT_GT(knudby, 0u);
}

TEST(VertexData, RaggedVectorsAreStructural) {
  try {
    WeakHaagerupVertexData bad(FiniteGroup::cyclic(2), {v2(0, 0), Eigen::VectorXd(1)},
                               {v2(0.5, 0), v2(0, 0.5)});
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_EQ(e.axiom(), "vector_table");
  }
}

TEST(VertexData, PsiVertexExamples) {
  EXPECT_NEAR(psi_vertex(fixtures::d0(), 1, 1), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(psi_vertex(fixtures::d1(), 2, 1), std::exp(-0.25), 1e-15);
  EXPECT_DOUBLE_EQ(psi_vertex(fixtures::d2(), 7, 0), 1.0);
  EXPECT_DOUBLE_EQ(psi_vertex_b2_bound(fixtures::d0(), 1), 1.0);
  EXPECT_NEAR(psi_vertex_b2_bound(fixtures::d1(), 1), std::exp(1.0), 1e-15);
  EXPECT_NEAR(psi_vertex_b2_bound(fixtures::d1(), 10), std::exp(0.1), 1e-15);
  EXPECT_THROW(psi_vertex(fixtures::d1(), 0, 1), std::invalid_argument);
}

TEST(VertexData, PsiVertexSchurNormBelowBound) {
  for (const auto& d : {fixtures::d0(), fixtures::d1(), fixtures::d2()}) {
    const auto& g = d.group();
    for (int n : {1, 2, 5, 10}) {
      Eigen::MatrixXd m(g.order(), g.order());
      for (Element x = 0; x < g.order(); ++x) {
        for (Element y = 0; y < g.order(); ++y) m(x, y) = psi_vertex(d, n, g.multiply(g.inverse(y), x));
      }
      const SchurNormResult r = schur_norm_exact(m);
      EXPECT_LE(r.lower, psi_vertex_b2_bound(d, n) + 1e-9);
    }
  }
}

TEST(VertexData, VertexSchoenbergKernelIsPsd) {
  for (const auto& d : {fixtures::d0(), fixtures::d1(), fixtures::d2()}) {
    for (int n : {1, 3, 10}) {
      Eigen::MatrixXd m(d.order(), d.order());
      for (Element x = 0; x < d.order(); ++x) {
        for (Element y = 0; y < d.order(); ++y) m(x, y) = std::exp(-(d.r(x) - d.r(y)).squaredNorm() / n);
      }
      EXPECT_TRUE(is_psd(m).psd);
    }
  }
}

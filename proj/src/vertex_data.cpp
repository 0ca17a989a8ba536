#include "gpwh/vertex_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gpwh/errors.hpp"

namespace gpwh {

namespace {

std::string pair_label(Element x, Element y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

WeakHaagerupVertexData::WeakHaagerupVertexData(FiniteGroup group,
                                               std::vector<Eigen::VectorXd> r,
                                               std::vector<Eigen::VectorXd> s)
    : group_(std::move(group)), r_(std::move(r)), s_(std::move(s)) {
  const std::size_t n = group_.order();
  if (r_.size() != n || s_.size() != n) {
    throw StructuralError("vector_table", "R and S need one vector per element (" +
                                              std::to_string(n) + ")");
  }
  dim_r_ = r_[0].size();
  dim_s_ = s_[0].size();
  for (std::size_t x = 0; x < n; ++x) {
    if (r_[x].size() != dim_r_ || s_[x].size() != dim_s_) {
      throw StructuralError("vector_table",
                            "ragged R/S dimensions at element " + std::to_string(x));
    }
  }
  const Element e = FiniteGroup::identity;
  phi_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    phi_[x] = (r_[x] - r_[e]).squaredNorm() + (s_[x] + s_[e]).squaredNorm();
  }
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kRNotZeroAtIdentity:
      return "r_identity_nonzero";
    case ViolationKind::kSphereConstraint:
      return "sphere_constraint";
    case ViolationKind::kKnudbyIdentity:
      return "knudby_identity";
    case ViolationKind::kPhiAsymmetric:
      return "phi_asymmetric";
  }
  return "unknown";
}

ValidationReport validate_vertex_data(const WeakHaagerupVertexData& data, double tol) {
  ValidationReport report;
  const FiniteGroup& g = data.group();
  const Element e = FiniteGroup::identity;
  auto record = [&](ViolationKind kind, Element x, Element y, double residual,
                    std::string message) {
    report.max_residual = std::max(report.max_residual, residual);
    if (residual > tol) {
      report.violations.push_back({kind, x, y, residual, std::move(message)});
    }
  };

  const double r0 = data.r(e).norm();
  record(ViolationKind::kRNotZeroAtIdentity, e, e, r0,
         "|R(1)| = " + std::to_string(r0) + ", expected 0");

  const double radius2 = data.phi_identity() / 4.0;
  for (Element x = 0; x < g.order(); ++x) {
    const double s2 = data.s(x).squaredNorm();
    record(ViolationKind::kSphereConstraint, x, x, std::abs(s2 - radius2),
           "|S(" + std::to_string(x) + ")|^2 = " + std::to_string(s2) +
               " != phi(1)/4 = " + std::to_string(radius2));
  }

  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      const double lhs = data.phi(g.multiply(g.inverse(y), x));
      const double rhs =
          (data.r(x) - data.r(y)).squaredNorm() + (data.s(x) + data.s(y)).squaredNorm();
      record(ViolationKind::kKnudbyIdentity, x, y, std::abs(lhs - rhs),
             "phi(y^-1 x) = " + std::to_string(lhs) + " but |R(x)-R(y)|^2+|S(x)+S(y)|^2 = " +
                 std::to_string(rhs) + " at " + pair_label(x, y));
    }
  }

  for (Element x = 0; x < g.order(); ++x) {
    const double d = std::abs(data.phi(x) - data.phi(g.inverse(x)));
    record(ViolationKind::kPhiAsymmetric, x, g.inverse(x), d,
           "phi(x) != phi(x^-1) at " + pair_label(x, g.inverse(x)));
  }
  return report;
}

double psi_vertex(const WeakHaagerupVertexData& data, int n, Element g) {
  if (n < 1) throw std::invalid_argument("psi_vertex: n must be >= 1");
  return std::exp((data.phi_identity() - data.phi(g)) / n);
}

double psi_vertex_b2_bound(const WeakHaagerupVertexData& data, int n) {
  if (n < 1) throw std::invalid_argument("psi_vertex_b2_bound: n must be >= 1");
  return std::exp(data.phi_identity() / n);
}

}  // namespace gpwh

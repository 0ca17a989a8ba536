#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "gpwh/finite_group.hpp"

namespace gpwh {

/// A finite vertex group with weak-Haagerup data (R, S):
///
///   phi(y^-1 x) = |R(x) - R(y)|^2 + |S(x) + S(y)|^2.
///
/// phi is never supplied; it is derived from (R, S) at y = identity and then
/// cross-checked over all pairs by validate_vertex_data().
class WeakHaagerupVertexData {
 public:
  /// Throws StructuralError when the vector tables do not match the group
  /// order or have ragged dimensions. Numerical identities are not checked.
  WeakHaagerupVertexData(FiniteGroup group, std::vector<Eigen::VectorXd> r,
                         std::vector<Eigen::VectorXd> s);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_.order(); }
  Eigen::Index dim_r() const noexcept { return dim_r_; }
  Eigen::Index dim_s() const noexcept { return dim_s_; }

  const Eigen::VectorXd& r(Element x) const { return r_.at(x); }
  const Eigen::VectorXd& s(Element x) const { return s_.at(x); }
  double phi(Element x) const { return phi_.at(x); }
  double phi_identity() const { return phi_[FiniteGroup::identity]; }

  const std::vector<Eigen::VectorXd>& r_table() const noexcept { return r_; }
  const std::vector<Eigen::VectorXd>& s_table() const noexcept { return s_; }

 private:
  FiniteGroup group_;
  std::vector<Eigen::VectorXd> r_;
  std::vector<Eigen::VectorXd> s_;
  std::vector<double> phi_;
  Eigen::Index dim_r_ = 0;
  Eigen::Index dim_s_ = 0;
};

enum class ViolationKind {
  kRNotZeroAtIdentity,
  kSphereConstraint,
  kKnudbyIdentity,
  kPhiAsymmetric,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Element x = 0;
  Element y = 0;
  double residual = 0.0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Largest residual seen over every check, violated or not.
  double max_residual = 0.0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks R(1) = 0, |S(x)|^2 = phi(1)/4, the Knudby identity for all pairs,
/// and phi(x^-1) = phi(x). Each violation records the offending pair.
ValidationReport validate_vertex_data(const WeakHaagerupVertexData& data, double tol = 1e-9);

/// e^{(phi(1) - phi(g))/n}; equals 1 at the identity.
double psi_vertex(const WeakHaagerupVertexData& data, int n, Element g);

/// e^{phi(1)/n}, the factorization bound on the Schur norm of psi_vertex.
double psi_vertex_b2_bound(const WeakHaagerupVertexData& data, int n);

}  // namespace gpwh

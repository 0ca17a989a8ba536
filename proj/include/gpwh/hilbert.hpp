#pragma once

#include <Eigen/Core>
#include <array>
#include <span>
#include <vector>

#include "gpwh/vertex_data.hpp"

namespace gpwh {

/// Exp_o(base) = e^{-|base|^2} Exp(sqrt(2) base), kept symbolic.
struct ExpoVector {
  Eigen::VectorXd base;
};

/// <Exp_o(a), Exp_o(b)> = e^{-|a-b|^2}. Throws std::invalid_argument on a
/// dimension mismatch.
double expo_inner(const ExpoVector& a, const ExpoVector& b);

/// Same pairing with Exp truncated after tensor degree `order`:
/// e^{-|a|^2-|b|^2} sum_{k<=order} (2<a,b>)^k / k!.
double truncated_expo_inner(const ExpoVector& a, const ExpoVector& b, unsigned order);

/// coefficient · Exp_o(base)
struct ExpoTerm {
  double coefficient = 1.0;
  Eigen::VectorXd base;
};

/// Inner product of two finite linear combinations of Exp_o vectors.
double combination_inner(std::span<const ExpoTerm> a, std::span<const ExpoTerm> b);

/// alpha_S(x) = e^{phi(1)/2n} Exp_o(S(x)/sqrt n); beta_S uses -S(x).
ExpoTerm alpha_s(const WeakHaagerupVertexData& data, int n, Element x);
ExpoTerm beta_s(const WeakHaagerupVertexData& data, int n, Element x);

/// <alpha_S(x), beta_S(y)> = e^{phi(1)/n} e^{-|S(x)+S(y)|^2/n}.
double alpha_beta_S_inner(const WeakHaagerupVertexData& data, int n, Element x, Element y);

/// The eps-perturbed average (alpha_S(x) + beta_S(x)) / (2 + sqrt(2 eps)).
std::array<ExpoTerm, 2> average_s(const WeakHaagerupVertexData& data, int n, double eps,
                                  Element x);

/// D(x) = sqrt((1 - |avg(x)|^2)/2). Throws NumericalError if |avg(x)| > 1.
double d_value(const WeakHaagerupVertexData& data, int n, double eps, Element x);

/// C^alpha(x,y) = <alpha_S(x), beta_S(y) - avg(y)> / D(y) and
/// C^beta(x,y)  = <alpha_S(y) - avg(y), beta_S(x)> / D(y).
/// Both throw NumericalError when D(y) < 1e-14.
double c_alpha(const WeakHaagerupVertexData& data, int n, double eps, Element x, Element y);
double c_beta(const WeakHaagerupVertexData& data, int n, double eps, Element x, Element y);

enum class SlotKind { kTheta, kAlphaTail, kBetaTail };

/// A vector of Exp(H_v) ⊕ C^2 ⊕ C^2 attached to one letter (or the vacuum).
///
///   Theta(x≠1)   = (avg(x),     (D, D),               (0, 0))
///   Theta(1)     = (avg(1),     (0, 0),               (D(1), D(1)))
///   AlphaTail(x) = (alpha_S(x), (C^a(x,x), 0),        (C^a(x,1), 0))
///   BetaTail(x)  = (beta_S(x),  (0, C^b(x,x)),        (0, C^b(x,1)))
struct VertexSlotVector {
  SlotKind kind = SlotKind::kTheta;
  std::size_t vertex = 0;
  Element element = 0;
  int n = 1;
  double eps = 0.0;
  std::vector<ExpoTerm> expo;
  std::array<double, 4> blocks{};
};

VertexSlotVector make_theta(const WeakHaagerupVertexData& data, std::size_t vertex, int n,
                            double eps, Element x);
VertexSlotVector make_alpha_tail(const WeakHaagerupVertexData& data, std::size_t vertex, int n,
                                 double eps, Element x);
VertexSlotVector make_beta_tail(const WeakHaagerupVertexData& data, std::size_t vertex, int n,
                                double eps, Element x);

/// Analytic inner product. Throws std::invalid_argument if the vectors live
/// on different vertices or were built with different (n, eps).
double slot_inner(const VertexSlotVector& u, const VertexSlotVector& w);

/// Measured perturbation constants over a family of vertex data:
/// sup_c = max |C^alpha|, |C^beta| over all x, y; A = sup_c / eps^{1/4};
/// B = (eps + 2 A^2 sqrt(eps)) / sqrt(eps).
struct TailConstants {
  double sup_c = 0.0;
  double a_measured = 0.0;
  double b_measured = 0.0;
};

TailConstants measure_tail_constants(std::span<const WeakHaagerupVertexData> data, int n,
                                     double eps);

}  // namespace gpwh

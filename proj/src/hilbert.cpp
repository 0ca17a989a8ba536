#include "gpwh/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gpwh/errors.hpp"

namespace gpwh {

namespace {

constexpr double kSingularD = 1e-14;

void check_params(int n, double eps) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
}

/// beta_S(y) - avg(y) and alpha_S(y) - avg(y) as combinations.
std::vector<ExpoTerm> minus_average(const ExpoTerm& v, const std::array<ExpoTerm, 2>& avg) {
  std::vector<ExpoTerm> out{v};
  for (const ExpoTerm& t : avg) out.push_back({-t.coefficient, t.base});
  return out;
}

double checked_d(const WeakHaagerupVertexData& data, int n, double eps, Element y) {
  const double d = d_value(data, n, eps, y);
  if (d < kSingularD) {
    throw NumericalError("singular average: D(" + std::to_string(y) + ") = " +
                         std::to_string(d) + " < 1e-14");
  }
  return d;
}

}  // namespace

double expo_inner(const ExpoVector& a, const ExpoVector& b) {
  if (a.base.size() != b.base.size()) {
    throw std::invalid_argument("expo_inner: dimension mismatch");
  }
  return std::exp(-(a.base - b.base).squaredNorm());
}

double truncated_expo_inner(const ExpoVector& a, const ExpoVector& b, unsigned order) {
  if (a.base.size() != b.base.size()) {
    throw std::invalid_argument("truncated_expo_inner: dimension mismatch");
  }
  // Degree-k block pairs (sqrt2 a)^{⊗k}/sqrt(k!) with (sqrt2 b)^{⊗k}/sqrt(k!).
  const double x = 2.0 * a.base.dot(b.base);
  double term = 1.0;
  double sum = 1.0;
  for (unsigned k = 1; k <= order; ++k) {
    term *= x / k;
    sum += term;
  }
  return std::exp(-a.base.squaredNorm() - b.base.squaredNorm()) * sum;
}

double combination_inner(std::span<const ExpoTerm> a, std::span<const ExpoTerm> b) {
  double total = 0.0;
  for (const ExpoTerm& s : a) {
    for (const ExpoTerm& t : b) {
      total += s.coefficient * t.coefficient * std::exp(-(s.base - t.base).squaredNorm());
    }
  }
  return total;
}

ExpoTerm alpha_s(const WeakHaagerupVertexData& data, int n, Element x) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return {std::exp(data.phi_identity() / (2.0 * n)), data.s(x) / std::sqrt(double(n))};
}

ExpoTerm beta_s(const WeakHaagerupVertexData& data, int n, Element x) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return {std::exp(data.phi_identity() / (2.0 * n)), -data.s(x) / std::sqrt(double(n))};
}

double alpha_beta_S_inner(const WeakHaagerupVertexData& data, int n, Element x, Element y) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return std::exp((data.phi_identity() - (data.s(x) + data.s(y)).squaredNorm()) / n);
}

std::array<ExpoTerm, 2> average_s(const WeakHaagerupVertexData& data, int n, double eps,
                                  Element x) {
  check_params(n, eps);
  const double denom = 2.0 + std::sqrt(2.0 * eps);
  ExpoTerm a = alpha_s(data, n, x);
  ExpoTerm b = beta_s(data, n, x);
  a.coefficient /= denom;
  b.coefficient /= denom;
  return {a, b};
}

double d_value(const WeakHaagerupVertexData& data, int n, double eps, Element x) {
  const auto avg = average_s(data, n, eps, x);
  const double norm2 = combination_inner(avg, avg);
  if (norm2 > 1.0 + 1e-15) {
    throw NumericalError("|avg(" + std::to_string(x) + ")|^2 = " + std::to_string(norm2) +
                         " exceeds 1; n = " + std::to_string(n) +
                         " is too small for eps = " + std::to_string(eps));
  }
  return std::sqrt(std::max(0.0, (1.0 - norm2) / 2.0));
}

double c_alpha(const WeakHaagerupVertexData& data, int n, double eps, Element x, Element y) {
  const double d = checked_d(data, n, eps, y);
  const ExpoTerm ax = alpha_s(data, n, x);
  const auto diff = minus_average(beta_s(data, n, y), average_s(data, n, eps, y));
  return combination_inner(std::span(&ax, 1), diff) / d;
}

double c_beta(const WeakHaagerupVertexData& data, int n, double eps, Element x, Element y) {
  const double d = checked_d(data, n, eps, y);
  const ExpoTerm bx = beta_s(data, n, x);
  const auto diff = minus_average(alpha_s(data, n, y), average_s(data, n, eps, y));
  return combination_inner(diff, std::span(&bx, 1)) / d;
}

VertexSlotVector make_theta(const WeakHaagerupVertexData& data, std::size_t vertex, int n,
                            double eps, Element x) {
  VertexSlotVector v;
  v.kind = SlotKind::kTheta;
  v.vertex = vertex;
  v.element = x;
  v.n = n;
  v.eps = eps;
  const auto avg = average_s(data, n, eps, x);
  v.expo.assign(avg.begin(), avg.end());
  const double d = d_value(data, n, eps, x);
  if (x == FiniteGroup::identity) {
    v.blocks = {0.0, 0.0, d, d};
  } else {
    v.blocks = {d, d, 0.0, 0.0};
  }
  return v;
}

VertexSlotVector make_alpha_tail(const WeakHaagerupVertexData& data, std::size_t vertex, int n,
                                 double eps, Element x) {
  check_params(n, eps);
  VertexSlotVector v;
  v.kind = SlotKind::kAlphaTail;
  v.vertex = vertex;
  v.element = x;
  v.n = n;
  v.eps = eps;
  v.expo = {alpha_s(data, n, x)};
  v.blocks = {c_alpha(data, n, eps, x, x), 0.0,
              c_alpha(data, n, eps, x, FiniteGroup::identity), 0.0};
  return v;
}

VertexSlotVector make_beta_tail(const WeakHaagerupVertexData& data, std::size_t vertex, int n,
                                double eps, Element x) {
  check_params(n, eps);
  VertexSlotVector v;
  v.kind = SlotKind::kBetaTail;
  v.vertex = vertex;
  v.element = x;
  v.n = n;
  v.eps = eps;
  v.expo = {beta_s(data, n, x)};
  v.blocks = {0.0, c_beta(data, n, eps, x, x), 0.0,
              c_beta(data, n, eps, x, FiniteGroup::identity)};
  return v;
}

double slot_inner(const VertexSlotVector& u, const VertexSlotVector& w) {
  if (u.vertex != w.vertex) {
    throw std::invalid_argument("slot_inner: vertex mismatch (" + std::to_string(u.vertex) +
                                " vs " + std::to_string(w.vertex) + ")");
  }
  if (u.n != w.n || u.eps != w.eps) {
    throw std::invalid_argument("slot_inner: vectors built with different (n, eps)");
  }
  double blocks = 0.0;
  for (std::size_t i = 0; i < 4; ++i) blocks += u.blocks[i] * w.blocks[i];
  return combination_inner(u.expo, w.expo) + blocks;
}

TailConstants measure_tail_constants(std::span<const WeakHaagerupVertexData> data, int n,
                                     double eps) {
  check_params(n, eps);
  TailConstants out;
  for (const WeakHaagerupVertexData& d : data) {
    for (Element x = 0; x < d.order(); ++x) {
      for (Element y = 0; y < d.order(); ++y) {
        out.sup_c = std::max({out.sup_c, std::abs(c_alpha(d, n, eps, x, y)),
                              std::abs(c_beta(d, n, eps, x, y))});
      }
    }
  }
  out.a_measured = out.sup_c / std::pow(eps, 0.25);
  const double root = std::sqrt(eps);
  out.b_measured = (eps + 2.0 * out.a_measured * out.a_measured * root) / root;
  return out;
}

}  // namespace gpwh

#pragma once

#include <Eigen/Core>
#include <compare>
#include <map>
#include <span>
#include <vector>

#include "gpwh/hilbert.hpp"
#include "gpwh/word_engine.hpp"

namespace gpwh {

struct KernelParams {
  int n = 1;
  double eps = 0.01;
  double delta = 0.5;
  std::size_t d_cap = 8;

  /// Throws std::invalid_argument unless n >= 1, eps > 0, delta > 0.
  void validate() const;
};

/// A vertex of the cube complex: the coset rep·G(st(vertex)).
struct SlotKey {
  ReducedWord coset;
  Vertex vertex = 0;

  friend bool operator==(const SlotKey&, const SlotKey&) = default;
  friend auto operator<=>(const SlotKey&, const SlotKey&) = default;
};

template <class Payload>
using SlotMap = std::map<SlotKey, Payload>;

/// Slot of each letter of a reduced sequence (canonical or any shuffle):
/// (coset_representative(w_1...w_{i-1}, v_i), v_i).
std::vector<SlotKey> slot_keys(const GraphProduct& ctx, std::span<const Letter> reduced);

/// R_Gamma(gamma): R_{v_i}(gamma_i) summed into the slot of each letter.
SlotMap<Eigen::VectorXd> r_gamma(const GraphProduct& ctx, const ReducedWord& gamma);
SlotMap<Eigen::VectorXd> r_gamma(const GraphProduct& ctx, std::span<const Letter> reduced);

/// |R_Gamma(gamma) - R_Gamma(eta)|^2, absent slots read as zero.
double r_gamma_distance_sq(const GraphProduct& ctx, const ReducedWord& gamma,
                           const ReducedWord& eta);

/// e^{-|R_Gamma(gamma) - R_Gamma(eta)|^2 / n}.
double expo_r_gamma_inner(const GraphProduct& ctx, int n, const ReducedWord& gamma,
                          const ReducedWord& eta);

/// |gamma|_r + sum_i (phi(gamma_i) - phi(1)).
double proper_generator(const GraphProduct& ctx, const ReducedWord& gamma);

/// e^{-proper_generator(gamma)/n}.
double phi_gamma_closed(const GraphProduct& ctx, int n, const ReducedWord& gamma);

/// floor(1 / (M ln(1 + B sqrt(eps)))), clamped to [1, n_max].
int schedule_n(std::size_t max_clique, double b_measured, double eps, int n_max = 1'000'000);

/// Smallest n with e^{phi_v(1)/n} <= 1 + eps for every vertex.
int vertex_perturbation_n(const GraphProduct& ctx, double eps);

/// The slot-tensor kernels for fixed (n, eps). Per-vertex slot vectors are
/// built once; every kernel value is a finite product of slot pairings in
/// which a slot missing on one side pairs with the vacuum Theta(1_v).
class GraphKernel {
 public:
  GraphKernel(const GraphProduct& ctx, KernelParams params);

  const GraphProduct& context() const noexcept { return *ctx_; }
  const KernelParams& params() const noexcept { return params_; }

  const VertexSlotVector& theta(Vertex v, Element x) const { return theta_.at(v).at(x); }
  const VertexSlotVector& alpha_tail(Vertex v, Element x) const { return alpha_.at(v).at(x); }
  const VertexSlotVector& beta_tail(Vertex v, Element x) const { return beta_.at(v).at(x); }
  const VertexSlotVector& vacuum(Vertex v) const { return theta(v, FiniteGroup::identity); }

  /// Theta payloads outside the d-tail, tail payloads inside it.
  SlotMap<VertexSlotVector> alpha_gamma_d(const ReducedWord& gamma, std::size_t d) const;
  SlotMap<VertexSlotVector> beta_gamma_d(const ReducedWord& gamma, std::size_t d) const;

  /// Same maps computed from an arbitrary shuffle of gamma's reduced form.
  SlotMap<VertexSlotVector> alpha_gamma_d(std::span<const Letter> representative,
                                          std::size_t d) const;
  SlotMap<VertexSlotVector> beta_gamma_d(std::span<const Letter> representative,
                                         std::size_t d) const;

  /// Theta payloads on every letter.
  SlotMap<VertexSlotVector> zeta(const ReducedWord& gamma) const;

  /// Product over the union of slots of slot_inner, vacuum for absent slots.
  double pair(const SlotMap<VertexSlotVector>& a, const SlotMap<VertexSlotVector>& b) const;
  double norm_sq(const SlotMap<VertexSlotVector>& a) const;

  double psi_gamma_d(const ReducedWord& gamma, const ReducedWord& eta, std::size_t d) const;

  /// e^{-|R(g)-R(h)|^2/n} e^{-d/n} psi_gamma_d(g, h, d) with d = |h^-1 g|_r.
  /// Throws EnumerationError when d > d_cap.
  double psi_gamma(const ReducedWord& gamma, const ReducedWord& eta) const;

  double sigma(const ReducedWord& gamma, const ReducedWord& eta) const;

 private:
  enum class Side { kAlpha, kBeta };
  SlotMap<VertexSlotVector> tail_map(std::span<const Letter> sequence,
                                     const std::vector<bool>& in_tail, Side side) const;
  std::vector<bool> tail_flags(std::span<const Letter> representative, std::size_t d) const;

  const GraphProduct* ctx_;
  KernelParams params_;
  std::vector<std::vector<VertexSlotVector>> theta_;
  std::vector<std::vector<VertexSlotVector>> alpha_;
  std::vector<std::vector<VertexSlotVector>> beta_;
  // inner_[v] is a (3|G_v|)^2 table of slot pairings indexed by (kind, element).
  std::vector<std::vector<double>> inner_;

  double cached_inner(const VertexSlotVector& u, const VertexSlotVector& w) const;
};

}  // namespace gpwh

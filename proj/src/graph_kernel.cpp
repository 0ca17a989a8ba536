#include "gpwh/graph_kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gpwh/errors.hpp"

namespace gpwh {

namespace {

std::size_t kind_index(SlotKind k) { return static_cast<std::size_t>(k); }

}  // namespace

void KernelParams::validate() const {
  if (n < 1) throw std::invalid_argument("KernelParams: n must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("KernelParams: eps must be > 0");
  if (!(delta > 0.0)) throw std::invalid_argument("KernelParams: delta must be > 0");
}

std::vector<SlotKey> slot_keys(const GraphProduct& ctx, std::span<const Letter> reduced) {
  std::vector<SlotKey> keys;
  keys.reserve(reduced.size());
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const ReducedWord prefix = reduce(ctx, reduced.first(i));
    keys.push_back({coset_representative(ctx, prefix, reduced[i].vertex), reduced[i].vertex});
  }
  return keys;
}

SlotMap<Eigen::VectorXd> r_gamma(const GraphProduct& ctx, std::span<const Letter> reduced) {
  SlotMap<Eigen::VectorXd> out;
  const auto keys = slot_keys(ctx, reduced);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const Eigen::VectorXd& r = ctx.data(reduced[i].vertex).r(reduced[i].element);
    auto [it, inserted] = out.try_emplace(keys[i], r);
    if (!inserted) it->second += r;
  }
  return out;
}

SlotMap<Eigen::VectorXd> r_gamma(const GraphProduct& ctx, const ReducedWord& gamma) {
  return r_gamma(ctx, std::span<const Letter>(gamma.letters()));
}

double r_gamma_distance_sq(const GraphProduct& ctx, const ReducedWord& gamma,
                           const ReducedWord& eta) {
  const auto a = r_gamma(ctx, gamma);
  const auto b = r_gamma(ctx, eta);
  double total = 0.0;
  for (const auto& [key, va] : a) {
    auto it = b.find(key);
    total += it == b.end() ? va.squaredNorm() : (va - it->second).squaredNorm();
  }
  for (const auto& [key, vb] : b) {
    if (!a.contains(key)) total += vb.squaredNorm();
  }
  return total;
}

double expo_r_gamma_inner(const GraphProduct& ctx, int n, const ReducedWord& gamma,
                          const ReducedWord& eta) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return std::exp(-r_gamma_distance_sq(ctx, gamma, eta) / n);
}

double proper_generator(const GraphProduct& ctx, const ReducedWord& gamma) {
  double total = static_cast<double>(gamma.size());
  for (const Letter& l : gamma.letters()) {
    const auto& data = ctx.data(l.vertex);
    total += data.phi(l.element) - data.phi_identity();
  }
  return total;
}

double phi_gamma_closed(const GraphProduct& ctx, int n, const ReducedWord& gamma) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return std::exp(-proper_generator(ctx, gamma) / n);
}

int schedule_n(std::size_t max_clique, double b_measured, double eps, int n_max) {
  if (max_clique < 1) throw std::invalid_argument("schedule_n: M must be >= 1");
  if (!(b_measured > 0.0)) throw std::invalid_argument("schedule_n: B must be > 0");
  if (!(eps > 0.0)) throw std::invalid_argument("schedule_n: eps must be > 0");
  const double denom = static_cast<double>(max_clique) * std::log1p(b_measured * std::sqrt(eps));
  const double value = 1.0 / denom;
  if (!std::isfinite(value) || value >= static_cast<double>(n_max)) return n_max;
  return std::max(1, static_cast<int>(std::floor(value)));
}

int vertex_perturbation_n(const GraphProduct& ctx, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  double phi1 = 0.0;
  for (const auto& d : ctx.vertex_data()) phi1 = std::max(phi1, d.phi_identity());
  int n = std::max(1, static_cast<int>(std::ceil(phi1 / std::log1p(eps))));
  while (std::exp(phi1 / n) > 1.0 + eps) ++n;
  return n;
}

GraphKernel::GraphKernel(const GraphProduct& ctx, KernelParams params)
    : ctx_(&ctx), params_(params) {
  params_.validate();
  const std::size_t nv = ctx.vertex_count();
  theta_.resize(nv);
  alpha_.resize(nv);
  beta_.resize(nv);
  inner_.resize(nv);
  for (Vertex v = 0; v < nv; ++v) {
    const auto& data = ctx.data(v);
    for (Element x = 0; x < data.order(); ++x) {
      theta_[v].push_back(make_theta(data, v, params_.n, params_.eps, x));
      alpha_[v].push_back(make_alpha_tail(data, v, params_.n, params_.eps, x));
      beta_[v].push_back(make_beta_tail(data, v, params_.n, params_.eps, x));
    }
    const std::size_t g = data.order();
    const std::size_t dim = 3 * g;
    inner_[v].resize(dim * dim);
    const std::vector<VertexSlotVector>* tables[3] = {&theta_[v], &alpha_[v], &beta_[v]};
    for (std::size_t ka = 0; ka < 3; ++ka) {
      for (std::size_t x = 0; x < g; ++x) {
        for (std::size_t kb = 0; kb < 3; ++kb) {
          for (std::size_t y = 0; y < g; ++y) {
            inner_[v][(ka * g + x) * dim + kb * g + y] =
                slot_inner((*tables[ka])[x], (*tables[kb])[y]);
          }
        }
      }
    }
  }
}

double GraphKernel::cached_inner(const VertexSlotVector& u, const VertexSlotVector& w) const {
  if (u.vertex != w.vertex) throw std::invalid_argument("slot pairing across vertices");
  const std::size_t g = ctx_->data(u.vertex).order();
  const std::size_t dim = 3 * g;
  return inner_[u.vertex][(kind_index(u.kind) * g + u.element) * dim +
                          kind_index(w.kind) * g + w.element];
}

std::vector<bool> GraphKernel::tail_flags(std::span<const Letter> representative,
                                          std::size_t d) const {
  const ReducedWord w = reduce(*ctx_, representative);
  if (w.size() != representative.size()) {
    throw std::invalid_argument("representative is not a reduced word");
  }
  std::vector<bool> canonical_tail(w.size(), false);
  for (std::size_t p : d_tail_occurrences(*ctx_, w, d)) canonical_tail[p] = true;
  // Equal letters never shuffle past each other, so the k-th copy of a letter
  // in any representative is the k-th copy in the canonical word.
  std::vector<bool> flags(representative.size(), false);
  for (std::size_t i = 0; i < representative.size(); ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < i; ++j) k += representative[j] == representative[i];
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == representative[i] && k-- == 0) {
        flags[i] = canonical_tail[p];
        break;
      }
    }
  }
  return flags;
}

SlotMap<VertexSlotVector> GraphKernel::tail_map(std::span<const Letter> sequence,
                                                const std::vector<bool>& in_tail,
                                                Side side) const {
  SlotMap<VertexSlotVector> out;
  const auto keys = slot_keys(*ctx_, sequence);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Letter& l = sequence[i];
    const VertexSlotVector& payload = !in_tail[i]             ? theta(l.vertex, l.element)
                                      : side == Side::kAlpha ? alpha_tail(l.vertex, l.element)
                                                             : beta_tail(l.vertex, l.element);
    if (!out.emplace(keys[i], payload).second) {
      throw std::logic_error("two letters of a reduced word share a slot");
    }
  }
  return out;
}

SlotMap<VertexSlotVector> GraphKernel::alpha_gamma_d(const ReducedWord& gamma,
                                                     std::size_t d) const {
  return alpha_gamma_d(std::span<const Letter>(gamma.letters()), d);
}

SlotMap<VertexSlotVector> GraphKernel::beta_gamma_d(const ReducedWord& gamma,
                                                    std::size_t d) const {
  return beta_gamma_d(std::span<const Letter>(gamma.letters()), d);
}

SlotMap<VertexSlotVector> GraphKernel::alpha_gamma_d(std::span<const Letter> representative,
                                                     std::size_t d) const {
  return tail_map(representative, tail_flags(representative, d), Side::kAlpha);
}

SlotMap<VertexSlotVector> GraphKernel::beta_gamma_d(std::span<const Letter> representative,
                                                    std::size_t d) const {
  return tail_map(representative, tail_flags(representative, d), Side::kBeta);
}

SlotMap<VertexSlotVector> GraphKernel::zeta(const ReducedWord& gamma) const {
  return tail_map(gamma.letters(), std::vector<bool>(gamma.size(), false), Side::kAlpha);
}

double GraphKernel::pair(const SlotMap<VertexSlotVector>& a,
                         const SlotMap<VertexSlotVector>& b) const {
  double product = 1.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      product *= cached_inner(ia->second, vacuum(ia->first.vertex));
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      product *= cached_inner(vacuum(ib->first.vertex), ib->second);
      ++ib;
    } else {
      product *= cached_inner(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return product;
}

double GraphKernel::norm_sq(const SlotMap<VertexSlotVector>& a) const {
  double product = 1.0;
  for (const auto& [key, payload] : a) product *= cached_inner(payload, payload);
  return product;
}

double GraphKernel::psi_gamma_d(const ReducedWord& gamma, const ReducedWord& eta,
                                std::size_t d) const {
  return pair(alpha_gamma_d(gamma, d), beta_gamma_d(eta, d));
}

double GraphKernel::psi_gamma(const ReducedWord& gamma, const ReducedWord& eta) const {
  const std::size_t d = reduced_distance(*ctx_, gamma, eta);
  if (d > params_.d_cap) {
    throw EnumerationError("reduced distance " + std::to_string(d) + " exceeds d_cap " +
                           std::to_string(params_.d_cap));
  }
  return expo_r_gamma_inner(*ctx_, params_.n, gamma, eta) *
         std::exp(-static_cast<double>(d) / params_.n) * psi_gamma_d(gamma, eta, d);
}

double GraphKernel::sigma(const ReducedWord& gamma, const ReducedWord& eta) const {
  return pair(zeta(gamma), zeta(eta));
}

}  // namespace gpwh

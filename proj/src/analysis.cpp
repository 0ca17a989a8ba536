#include "gpwh/analysis.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gpwh {

namespace {

double symmetric_min_eigenvalue(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Eigen::MatrixXd psd_part(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

/// Upper bound from K = (U S^1/2)(V S^1/2)^T.
double svd_factorization_bound(const Eigen::MatrixXd& k) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(k, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd root = svd.singularValues().cwiseSqrt();
  const Eigen::MatrixXd a = svd.matrixU() * root.asDiagonal();
  const Eigen::MatrixXd b = svd.matrixV() * root.asDiagonal();
  return a.rowwise().norm().maxCoeff() * b.rowwise().norm().maxCoeff();
}

/// Ascent on |K∘W| over contractions W: alternate between the top singular
/// pair (u, v) of K∘W and the polar factor of diag(u) K diag(v).
double dual_ascent(const Eigen::MatrixXd& k, Eigen::MatrixXd w) {
  double best = 0.0;
  for (int it = 0; it < 200; ++it) {
    Eigen::JacobiSVD<Eigen::MatrixXd> top(k.cwiseProduct(w),
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double value = top.singularValues()(0);
    if (value <= best * (1.0 + 1e-13)) {
      best = std::max(best, value);
      break;
    }
    best = value;
    const Eigen::VectorXd u = top.matrixU().col(0);
    const Eigen::VectorXd v = top.matrixV().col(0);
    const Eigen::MatrixXd m = u.asDiagonal() * k * v.asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> polar(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    w = polar.matrixU() * polar.matrixV().transpose();
  }
  return best;
}

struct DualPair {
  double lower = 0.0;
  double upper = INFINITY;
};

/// Fixed point of the dual max ||diag(sqrt p) K diag(sqrt q)||_tr over
/// probability vectors p, q (a concave problem). Each value is a lower bound;
/// each iterate also yields the factorization K = A B^T with
/// A = diag(p)^-1/2 U S^1/2, B = diag(q)^-1/2 V S^1/2, an upper bound.
DualPair dual_fixed_point(const Eigen::MatrixXd& k, int iterations) {
  const Eigen::Index rows = k.rows();
  const Eigen::Index cols = k.cols();
  Eigen::VectorXd p = Eigen::VectorXd::Constant(rows, 1.0 / rows);
  Eigen::VectorXd q = Eigen::VectorXd::Constant(cols, 1.0 / cols);
  DualPair out;
  double prev = -1.0;
  auto max_ratio = [](const Eigen::VectorXd& num, const Eigen::VectorXd& den) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < num.size(); ++i) {
      if (num(i) > 0.0) m = std::max(m, num(i) / den(i));
    }
    return m;
  };
  for (int it = 0; it < iterations; ++it) {
    const Eigen::MatrixXd m = p.cwiseSqrt().asDiagonal() * k * q.cwiseSqrt().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double g = svd.singularValues().sum();
    out.lower = std::max(out.lower, g);
    if (g <= 0.0) break;
    // Rows of M V U^T and M^T U V^T vanish exactly where K does.
    const Eigen::VectorXd pu = (m * svd.matrixV() * svd.matrixU().transpose()).diagonal();
    const Eigen::VectorXd qv = (m.transpose() * svd.matrixU() * svd.matrixV().transpose()).diagonal();
    out.upper = std::min(out.upper, std::sqrt(max_ratio(pu, p) * max_ratio(qv, q)));
    if (std::abs(g - prev) <= 1e-15 * g) break;
    prev = g;
    // Stationarity gives p_i = (U S U^T)_ii / g and q_j = (V S V^T)_jj / g.
    p = 0.5 * (p + pu.cwiseMax(0.0) / g);
    q = 0.5 * (q + qv.cwiseMax(0.0) / g);
  }
  return out;
}

double dual_lower_bound(const Eigen::MatrixXd& k, const SchurNormOptions& options) {
  const Eigen::Index rows = k.rows();
  const Eigen::Index cols = k.cols();
  const double scale = std::sqrt(static_cast<double>(rows * cols));
  double best = k.cwiseAbs().maxCoeff();
  best = std::max(best, dual_ascent(k, Eigen::MatrixXd::Ones(rows, cols) / scale));
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  for (int p = 0; p < options.probes; ++p) {
    Eigen::VectorXd s(rows), t(cols);
    for (Eigen::Index i = 0; i < rows; ++i) s(i) = coin(rng) ? 1.0 : -1.0;
    for (Eigen::Index j = 0; j < cols; ++j) t(j) = coin(rng) ? 1.0 : -1.0;
    best = std::max(best, dual_ascent(k, s * t.transpose() / scale));
  }
  return best;
}

struct Projection {
  const Eigen::MatrixXd& k;
  Eigen::Index rows;
  Eigen::Index cols;

  void affine(Eigen::MatrixXd& z, double t) const {
    z.topRightCorner(rows, cols) = k;
    z.bottomLeftCorner(cols, rows) = k.transpose();
    for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, i) = std::min(z(i, i), t);
  }

  /// Certified bound from a PSD iterate: its off-block K' factors with row
  /// norms sqrt(diag), and |S_{K-K'}| <= |K - K'|_op.
  double certified_bound(const Eigen::MatrixXd& z) const {
    const double x = z.topLeftCorner(rows, rows).diagonal().maxCoeff();
    const double y = z.bottomRightCorner(cols, cols).diagonal().maxCoeff();
    const Eigen::MatrixXd err = k - z.topRightCorner(rows, cols);
    return std::sqrt(std::max(0.0, x) * std::max(0.0, y)) + spectral_norm(err);
  }
};

struct FeasibilityResult {
  bool feasible = false;
  int iterations = 0;
  Eigen::MatrixXd z;
};

FeasibilityResult project_feasible(const Projection& proj, double t, Eigen::MatrixXd z,
                                   const SchurNormOptions& options) {
  FeasibilityResult out;
  for (int it = 0; it < options.iter_cap; ++it) {
    proj.affine(z, t);
    z = psd_part(z);
    ++out.iterations;
    Eigen::MatrixXd a = z;
    proj.affine(a, t);
    if ((a - z).norm() < options.tol) {
      out.feasible = true;
      break;
    }
  }
  out.z = std::move(z);
  return out;
}

}  // namespace

KernelMatrix::KernelMatrix(std::vector<ReducedWord> points, Eigen::MatrixXd values)
    : points_(std::move(points)), values_(std::move(values)) {
  const auto n = static_cast<Eigen::Index>(points_.size());
  if (values_.rows() != n || values_.cols() != n) {
    throw std::invalid_argument("KernelMatrix: values must be |points| x |points|");
  }
  const double scale = std::max(1.0, n ? values_.cwiseAbs().maxCoeff() : 0.0);
  if (n && (values_ - values_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("KernelMatrix: values are not symmetric");
  }
}

PsdReport is_psd(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_psd: matrix not square");
  const double scale = std::max(1.0, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  if (m.size() && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("is_psd: matrix not symmetric");
  }
  PsdReport r;
  r.min_eigenvalue = symmetric_min_eigenvalue(m);
  r.psd = r.min_eigenvalue >= -tol;
  return r;
}

PsdReport is_psd(const KernelMatrix& m, double tol) { return is_psd(m.values(), tol); }

CndReport is_cnd(const KernelMatrix& m, double tol, const std::vector<double>& t_grid) {
  const Eigen::MatrixXd& k = m.values();
  const Eigen::Index n = k.rows();
  CndReport r;
  if (n > 1) {
    const Eigen::MatrixXd p =
        Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    const Eigen::MatrixXd form = p * k * p;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (form + form.transpose()),
                                                      Eigen::EigenvaluesOnly);
    r.zero_sum_max_eigenvalue = es.eigenvalues().maxCoeff();
  }
  r.zero_sum_ok = r.zero_sum_max_eigenvalue <= tol;
  r.schoenberg_ok = true;
  for (double t : t_grid) {
    const Eigen::MatrixXd e = (-t * k).array().exp().matrix();
    const double lo = symmetric_min_eigenvalue(e);
    r.schoenberg.emplace_back(t, lo);
    r.schoenberg_ok = r.schoenberg_ok && lo >= -tol;
  }
  return r;
}

double schur_norm_upper_from_factorization(std::span<const double> alpha_norms,
                                           std::span<const double> beta_norms) {
  if (alpha_norms.empty() || beta_norms.empty()) {
    throw std::invalid_argument("schur_norm_upper_from_factorization: no factorization given");
  }
  auto check = [](std::span<const double> v) {
    for (double x : v) {
      if (x < 0.0) throw std::invalid_argument("factorization norms must be nonnegative");
    }
    return *std::max_element(v.begin(), v.end());
  };
  return check(alpha_norms) * check(beta_norms);
}

SchurNormResult schur_norm_exact(const Eigen::MatrixXd& k, const SchurNormOptions& options) {
  SchurNormResult r;
  if (k.size() == 0 || k.cwiseAbs().maxCoeff() == 0.0) {
    r.converged = true;
    return r;
  }
  const Eigen::Index rows = k.rows();
  const Eigen::Index cols = k.cols();
  const Projection proj{k, rows, cols};

  const DualPair dual = dual_fixed_point(k, options.iter_cap);
  r.lower = std::max(dual.lower, dual_lower_bound(k, options));
  r.upper = std::min(dual.upper, svd_factorization_bound(k));

  Eigen::MatrixXd z(rows + cols, rows + cols);
  z.topLeftCorner(rows, rows) = psd_sqrt(k * k.transpose());
  z.bottomRightCorner(cols, cols) = psd_sqrt(k.transpose() * k);
  z.topRightCorner(rows, cols) = k;
  z.bottomLeftCorner(cols, rows) = k.transpose();

  double lo = r.lower;
  double hi = r.upper;
  Eigen::MatrixXd warm = z;
  auto width_ok = [&](double a, double b) { return b - a <= options.gap_tol * std::max(1.0, b); };
  for (int step = 0; step < 64 && !width_ok(lo, hi); ++step) {
    const double mid = 0.5 * (lo + hi);
    FeasibilityResult f = project_feasible(proj, mid, warm, options);
    r.iterations += f.iterations;
    if (f.feasible) {
      r.upper = std::min(r.upper, proj.certified_bound(f.z));
      hi = mid;
      warm = std::move(f.z);
    } else {
      lo = mid;
    }
    if (width_ok(r.lower, r.upper)) break;
  }
  r.exact = std::clamp(hi, r.lower, r.upper);
  r.converged = width_ok(r.lower, r.upper);
  return r;
}

SchurNormResult schur_norm_exact(const Eigen::MatrixXd& k, double tol, int iter_cap) {
  SchurNormOptions options;
  options.tol = tol;
  options.iter_cap = iter_cap;
  return schur_norm_exact(k, options);
}

KernelMatrix phi_gram(const GraphProduct& ctx, int n, const std::vector<ReducedWord>& points) {
  // Symmetrize: phi(h^-1 g) and phi(g^-1 h) agree exactly in theory.
  KernelMatrix raw = gram(points, [&](const ReducedWord& g, const ReducedWord& h) {
    return phi_gamma_closed(ctx, n, multiply(ctx, inverse(ctx, h), g));
  });
  return raw;
}

B2AuditReport b2_audit_phi(const GraphProduct& ctx, const KernelParams& params,
                           const B2AuditOptions& options) {
  params.validate();
  B2AuditReport r;
  r.radius = options.radius;
  r.eps = params.eps;
  r.delta = params.delta;
  r.max_clique = max_clique_size(ctx.graph());
  r.n_perturbation = vertex_perturbation_n(ctx, params.eps);
  r.constants = measure_tail_constants(ctx.vertex_data(), r.n_perturbation, params.eps);
  r.n_schedule = schedule_n(r.max_clique, r.constants.b_measured, params.eps);
  r.n_used = options.n_override.value_or(r.n_schedule);

  const auto points = ball(ctx, options.radius);
  r.points = points.size();
  r.at_n_used = schur_norm_exact(phi_gram(ctx, r.n_used, points).values(), options.solver);
  r.within_delta = r.at_n_used.exact <= 1.0 + params.delta;

  std::vector<int> grid = options.grid;
  if (grid.empty()) grid = {r.n_used, 2 * r.n_used, 4 * r.n_used, 8 * r.n_used};
  r.grid_non_increasing = true;
  for (int n : grid) {
    NormAtN entry{n, schur_norm_exact(phi_gram(ctx, n, points).values(), options.solver)};
    if (!r.grid.empty() && entry.norm.exact > r.grid.back().norm.exact + options.monotone_tol) {
      r.grid_non_increasing = false;
    }
    r.grid.push_back(entry);
  }
  r.grid_final_within = !r.grid.empty() && r.grid.back().norm.exact <= options.final_threshold;
  return r;
}

Eigen::MatrixXd chi_d_matrix(const GraphProduct& ctx, std::size_t d,
                             const std::vector<ReducedWord>& points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (reduced_distance(ctx, points[i], points[j]) == d) m(i, j) = 1.0;
    }
  }
  return m;
}

SchurNormResult chi_d_norm_probe(const GraphProduct& ctx, std::size_t d, std::size_t radius,
                                 const SchurNormOptions& options) {
  return schur_norm_exact(chi_d_matrix(ctx, d, ball(ctx, radius)), options);
}

LinearEnvelope fit_linear_envelope(std::span<const double> norms) {
  LinearEnvelope e;
  double num = 0.0, den = 0.0;
  for (std::size_t d = 0; d < norms.size(); ++d) {
    const double x = static_cast<double>(d + 1);
    num += x * norms[d];
    den += x * x;
    e.max_ratio = std::max(e.max_ratio, norms[d] / x);
  }
  e.slope = den > 0.0 ? num / den : 0.0;
  for (std::size_t d = 0; d < norms.size(); ++d) {
    e.under.push_back(norms[d] <= e.slope * static_cast<double>(d + 1) + 1e-9);
  }
  return e;
}

PsiFactorizationAudit psi_factorization_audit(const GraphKernel& kernel,
                                              const std::vector<ReducedWord>& points,
                                              std::size_t d, const SchurNormOptions& options) {
  PsiFactorizationAudit a;
  const auto n = static_cast<Eigen::Index>(points.size());
  std::vector<SlotMap<VertexSlotVector>> alphas, betas, zetas;
  std::vector<double> alpha_norms, beta_norms;
  for (const ReducedWord& g : points) {
    alphas.push_back(kernel.alpha_gamma_d(g, d));
    betas.push_back(kernel.beta_gamma_d(g, d));
    zetas.push_back(kernel.zeta(g));
    const double an = kernel.norm_sq(alphas.back());
    const double bn = kernel.norm_sq(betas.back());
    alpha_norms.push_back(std::sqrt(an));
    beta_norms.push_back(std::sqrt(bn));
    const double za = kernel.pair(alphas.back(), zetas.back());
    const double zb = kernel.pair(zetas.back(), betas.back());
    a.zeta_pairing_residual =
        std::max({a.zeta_pairing_residual, std::abs(za - 1.0), std::abs(zb - 1.0)});
    const double dist = an - 2.0 * za + kernel.norm_sq(zetas.back());
    a.distance_identity_residual =
        std::max(a.distance_identity_residual, std::abs(dist - (an - 1.0)));
  }
  a.max_alpha_norm = *std::max_element(alpha_norms.begin(), alpha_norms.end());
  a.max_beta_norm = *std::max_element(beta_norms.begin(), beta_norms.end());
  a.factorization_upper = schur_norm_upper_from_factorization(alpha_norms, beta_norms);

  Eigen::MatrixXd psi(n, n), diff(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      psi(i, j) = kernel.pair(alphas[i], betas[j]);
      diff(i, j) = psi(i, j) - kernel.pair(zetas[i], zetas[j]);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double an = alpha_norms[i] * alpha_norms[i];
      const double bn = beta_norms[j] * beta_norms[j];
      a.sigma_distance_bound =
          std::max(a.sigma_distance_bound, std::sqrt(std::max(0.0, an - 1.0)) * beta_norms[j] +
                                               std::sqrt(std::max(0.0, bn - 1.0)));
    }
  }
  a.psi_d_norm = schur_norm_exact(psi, options);
  a.psi_minus_sigma_norm = schur_norm_exact(diff, options);
  return a;
}

double sigma_distance_envelope(double b_measured, std::size_t d, std::size_t max_clique,
                               double eps) {
  const double dm = static_cast<double>(d * max_clique);
  return 2.0 * std::sqrt(b_measured * dm) * std::pow(1.0 + b_measured * std::sqrt(eps), dm) *
         std::pow(eps, 0.25);
}

}  // namespace gpwh

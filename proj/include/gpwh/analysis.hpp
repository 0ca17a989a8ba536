#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gpwh/graph_kernel.hpp"
#include "gpwh/word_engine.hpp"

namespace gpwh {

/// Kernel values over an ordered point set; symmetric within 1e-12.
class KernelMatrix {
 public:
  /// Throws std::invalid_argument on a size mismatch or asymmetry.
  KernelMatrix(std::vector<ReducedWord> points, Eigen::MatrixXd values);

  const std::vector<ReducedWord>& points() const noexcept { return points_; }
  const Eigen::MatrixXd& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.rows(); }

 private:
  std::vector<ReducedWord> points_;
  Eigen::MatrixXd values_;
};

/// values(i, j) = kernel(points[i], points[j]).
template <class Kernel>
KernelMatrix gram(const std::vector<ReducedWord>& points, Kernel&& kernel) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = kernel(points[i], points[j]);
  }
  return KernelMatrix(points, std::move(m));
}

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

PsdReport is_psd(const KernelMatrix& m, double tol = 1e-9);
PsdReport is_psd(const Eigen::MatrixXd& m, double tol = 1e-9);

struct CndReport {
  /// Max eigenvalue of the form restricted to zero-sum vectors.
  double zero_sum_max_eigenvalue = 0.0;
  bool zero_sum_ok = false;
  /// (t, min eigenvalue of e^{-t m}) for each t tested.
  std::vector<std::pair<double, double>> schoenberg;
  bool schoenberg_ok = false;

  bool cnd() const noexcept { return zero_sum_ok && schoenberg_ok; }
};

inline const std::vector<double> kSchoenbergGrid{0.1, 1.0, 10.0};

/// Both verdicts are reported separately; they can disagree on inputs that
/// are not (pseudo)metrics.
CndReport is_cnd(const KernelMatrix& m, double tol = 1e-9,
                 const std::vector<double>& t_grid = kSchoenbergGrid);

/// (max alpha_norms)·(max beta_norms). Throws std::invalid_argument when
/// either list is empty or holds a negative entry.
double schur_norm_upper_from_factorization(std::span<const double> alpha_norms,
                                           std::span<const double> beta_norms);

struct SchurNormResult {
  double lower = 0.0;
  double upper = 0.0;
  double exact = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct SchurNormOptions {
  /// Feasibility residual (Frobenius) accepted by the projection solver.
  double tol = 1e-9;
  /// Dual fixed-point steps, and projection steps per bisection probe.
  int iter_cap = 3000;
  /// Relative width at which bisection and the certified sandwich stop.
  double gap_tol = 1e-6;
  int probes = 64;
  std::uint64_t seed = 42;
};

/// Schur-multiplier (= cb = factorization) norm of a finite matrix:
/// min t such that [[X, K], [K^T, Y]] is PSD with diag(X), diag(Y) <= t.
/// A fixed-point iteration on the dual max ||D_sqrt(p) K D_sqrt(q)||_tr gives
/// `lower` and an explicit factorization gives `upper`; structured probes
/// also feed `lower`. While the gap is open, bisection on t with alternating
/// projections tightens `upper`. lower <= true norm <= upper always holds.
SchurNormResult schur_norm_exact(const Eigen::MatrixXd& k, const SchurNormOptions& options = {});
SchurNormResult schur_norm_exact(const Eigen::MatrixXd& k, double tol, int iter_cap);

struct NormAtN {
  int n = 1;
  SchurNormResult norm;
};

struct B2AuditOptions {
  std::size_t radius = 2;
  /// Replaces the scheduled n when set.
  std::optional<int> n_override;
  /// Explicit n values; empty selects {s, 2s, 4s, 8s} for scheduled s.
  std::vector<int> grid;
  double final_threshold = 1.05;
  /// Slack allowed when checking the grid is non-increasing.
  double monotone_tol = 1e-6;
  SchurNormOptions solver;
};

struct B2AuditReport {
  std::size_t radius = 0;
  std::size_t points = 0;
  double eps = 0.0;
  double delta = 0.0;
  std::size_t max_clique = 0;
  int n_perturbation = 0;
  TailConstants constants;
  int n_schedule = 0;
  int n_used = 0;
  SchurNormResult at_n_used;
  bool within_delta = false;
  std::vector<NormAtN> grid;
  bool grid_non_increasing = false;
  bool grid_final_within = false;

  bool passed() const noexcept {
    return within_delta && grid_non_increasing && grid_final_within;
  }
};

/// Gram matrix of phi_{n,Gamma}(h^-1 g) on a ball.
KernelMatrix phi_gram(const GraphProduct& ctx, int n, const std::vector<ReducedWord>& points);

/// Measures A, B at the vertex perturbation n, schedules n, and computes
/// exact Schur norms of the phi_{n,Gamma} Gram at n and across the grid.
B2AuditReport b2_audit_phi(const GraphProduct& ctx, const KernelParams& params,
                           const B2AuditOptions& options = {});

/// 0/1 matrix of E_d = {(g, h) : |h^-1 g|_r = d} on the ball.
Eigen::MatrixXd chi_d_matrix(const GraphProduct& ctx, std::size_t d,
                             const std::vector<ReducedWord>& points);

/// Exact Schur norm of chi_d on the ball of `radius`.
SchurNormResult chi_d_norm_probe(const GraphProduct& ctx, std::size_t d, std::size_t radius,
                                 const SchurNormOptions& options = {});

/// Least-squares slope D of norms[d] ≈ D (d + 1), with per-d comparison.
struct LinearEnvelope {
  double slope = 0.0;
  std::vector<bool> under;
  double max_ratio = 0.0;
};

LinearEnvelope fit_linear_envelope(std::span<const double> norms);

/// Factorization audit of psi_{n,Gamma,d} against sigma_{n,Gamma} on a
/// point set.
struct PsiFactorizationAudit {
  double max_alpha_norm = 0.0;
  double max_beta_norm = 0.0;
  /// (max |alpha|)(max |beta|), an upper bound on |psi_d|_{B2}.
  double factorization_upper = 0.0;
  SchurNormResult psi_d_norm;
  /// sup (sqrt(|alpha(g)|^2 - 1)|beta(h)| + sqrt(|beta(h)|^2 - 1)).
  double sigma_distance_bound = 0.0;
  SchurNormResult psi_minus_sigma_norm;
  /// max |<alpha_d(g), zeta(g)> - 1| and the beta analogue.
  double zeta_pairing_residual = 0.0;
  /// max | |alpha_d(g) - zeta(g)|^2 - (|alpha_d(g)|^2 - 1) | over g.
  double distance_identity_residual = 0.0;
};

PsiFactorizationAudit psi_factorization_audit(const GraphKernel& kernel,
                                              const std::vector<ReducedWord>& points,
                                              std::size_t d,
                                              const SchurNormOptions& options = {});

/// 2 sqrt(B d M) (1 + B sqrt(eps))^{dM} eps^{1/4}.
double sigma_distance_envelope(double b_measured, std::size_t d, std::size_t max_clique,
                               double eps);

}  // namespace gpwh

#include "exclugraph/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "exclugraph/error.hpp"

namespace exclugraph {
namespace {

using Mat = Matrix<double>;
using Vec = Vector<double>;

constexpr double kNormalizedGapFactor = 1e-2;
constexpr int kBacktrackLimit = 30;
constexpr double kCentrality = 1e-4;
constexpr double kNeighbourhood = 1e-6;

// Theta program on the support of the weights, with the weight vector
// normalized to unit 1-norm: the objective matrix is u u^T with |u|_2 = 1.
struct Program {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  Vec u;
};

Mat dual_slack(const Program& p, const Vec& y, bool with_objective) {
  Mat z = Mat::Zero(p.n, p.n);
  if (with_objective) z.noalias() -= p.u * p.u.transpose();
  z.diagonal().array() += y(0);
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    auto [i, j] = p.edges[k];
    z(i, j) += y(k + 1);
    z(j, i) += y(k + 1);
  }
  return z;
}

// Adjoint-side map A(R) = (tr R, 2 R_ij for each edge ij).
Vec apply_constraints(const Program& p, const Mat& r) {
  Vec out(p.edges.size() + 1);
  out(0) = r.trace();
  for (std::size_t k = 0; k < p.edges.size(); ++k) out(k + 1) = 2.0 * r(p.edges[k].first, p.edges[k].second);
  return out;
}

// Largest step t with base + t * dir still positive definite (infinity when
// dir is psd), computed from the spectrum of L^{-1} dir L^{-T}.
double max_step(const Mat& base, const Mat& dir) {
  Eigen::LLT<Mat> chol(base);
  if (chol.info() != Eigen::Success) throw NumericalError("interior iterate lost positive definiteness");
  Mat t = chol.matrixL().solve(dir);
  t = chol.matrixL().solve(t.transpose()).eval();
  t = 0.5 * (t + t.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Mat> es(t, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  return lmin < 0 ? -1.0 / lmin : std::numeric_limits<double>::infinity();
}

struct Scaling {
  Mat w;
  double min_xz = 0;  // smallest eigenvalue of X Z
};

// Nesterov-Todd scaling point W (the unique W with W Z W = X) as G G^T,
// where X = L L^T, Z = R R^T and R^T L = U S V^T gives G = L V S^{-1/2}.
Scaling nt_scaling(const Mat& x, const Mat& z) {
  Eigen::LLT<Mat> lx(x), lz(z);
  if (lx.info() != Eigen::Success || lz.info() != Eigen::Success) {
    throw NumericalError("interior iterate lost positive definiteness");
  }
  const Mat l = lx.matrixL();
  const Mat rt_l = lz.matrixU() * l;
  Eigen::JacobiSVD<Mat> svd(rt_l, Eigen::ComputeFullV);
  const Vec s = svd.singularValues().cwiseMax(std::numeric_limits<double>::min());
  const Mat g = l * svd.matrixV() * s.cwiseSqrt().cwiseInverse().asDiagonal();
  return {g * g.transpose(), s.minCoeff() * s.minCoeff()};
}

// Schur complement M_kl = tr(A_k W A_l W) for A_0 = I and A_e = E_ij + E_ji.
Mat schur_complement(const Program& p, const Mat& w) {
  const std::size_t m = p.edges.size() + 1;
  Mat out(m, m);
  const Mat w2 = w * w;
  out(0, 0) = w.squaredNorm();
  for (std::size_t a = 0; a < p.edges.size(); ++a) {
    auto [i, j] = p.edges[a];
    out(0, a + 1) = out(a + 1, 0) = 2.0 * w2(i, j);
    for (std::size_t b = a; b < p.edges.size(); ++b) {
      auto [k, l] = p.edges[b];
      out(a + 1, b + 1) = out(b + 1, a + 1) = 2.0 * (w(i, k) * w(j, l) + w(i, l) * w(j, k));
    }
  }
  return out;
}

struct Direction {
  Mat dx;
  Mat dz;
  Vec dy;
};

class ThetaIpm {
 public:
  ThetaIpm(Program program, double scale, const SdpOptions& options)
      : p_(std::move(program)), scale_(scale), options_(options) {}

  void solve() {
    const int n = p_.n;
    x_ = Mat::Identity(n, n) / n;
    y_ = Vec::Zero(static_cast<Eigen::Index>(p_.edges.size()) + 1);
    y_(0) = 1.5;  // lambda_max(u u^T) = 1, so y0 I - u u^T is strictly feasible
    z_ = dual_slack(p_, y_, true);

    // The normalized problem is driven to a target that does not depend on
    // the weight scale (unless the scale exceeds 100), so theta(c w) and
    // c theta(w) come from identical iterates. If the iteration stalls, the
    // absolute tolerance alone decides.
    const double target = std::min(options_.tolerance / scale_, kNormalizedGapFactor * options_.tolerance);
    for (iterations_ = 0;; ++iterations_) {
      if (gap() <= target) return;
      if (iterations_ >= options_.max_iterations) break;
      try {
        step();
      } catch (const NumericalError&) {
        break;
      }
    }
    if (scale_ * gap() <= options_.tolerance) return;
    throw NumericalError("theta SDP did not reach gap " + std::to_string(options_.tolerance) + " in " +
                             std::to_string(iterations_) + " iterations",
                         scale_ * primal_value(), scale_ * y_(0));
  }

  double primal_value() const { return p_.u.dot(x_ * p_.u); }
  double gap() const { return y_(0) - primal_value(); }
  const Mat& x() const { return x_; }
  int iterations() const { return iterations_; }

 private:
  void step() {
    const int n = p_.n;
    const double mu = x_.cwiseProduct(z_).sum() / n;
    const Scaling scaling = nt_scaling(x_, z_);
    const Mat& w = scaling.w;
    // Near degenerate optima the Schur complement is positive semidefinite
    // only to working precision; a Jacobi-scaled LDLT still yields a usable
    // direction there.
    const Mat m = schur_complement(p_, w);
    const Vec jacobi = m.diagonal().cwiseMax(std::numeric_limits<double>::min()).cwiseSqrt().cwiseInverse();
    Eigen::LDLT<Mat> schur(jacobi.asDiagonal() * m * jacobi.asDiagonal());
    Vec primal_residual = -apply_constraints(p_, x_);
    primal_residual(0) += 1.0;

    auto direction = [&](const Mat& r) {
      Direction d;
      d.dy = jacobi.asDiagonal() * schur.solve(jacobi.asDiagonal() * (apply_constraints(p_, r) - primal_residual));
      if (!d.dy.allFinite()) {
        throw NumericalError("Schur complement is singular", scale_ * primal_value(), scale_ * y_(0));
      }
      d.dz = dual_slack(p_, d.dy, false);
      d.dx = r - w * d.dz * w;
      d.dx = 0.5 * (d.dx + d.dx.transpose()).eval();
      return d;
    };

    // Predictor: pure affine scaling direction. Iterates that drifted far
    // from the central path get a pure centering step instead.
    double sigma = 1.0;
    if (scaling.min_xz >= kCentrality * mu) {
      const Direction pred = direction(-x_);
      const double ap = std::min(1.0, max_step(x_, pred.dx));
      const double ad = std::min(1.0, max_step(z_, pred.dz));
      const double mu_aff = (x_ + ap * pred.dx).cwiseProduct(z_ + ad * pred.dz).sum() / n;
      sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);
    }

    // Corrector: re-centre toward sigma * mu.
    const Mat zinv = z_.llt().solve(Mat::Identity(n, n));
    const Direction corr = direction(sigma * mu * zinv - x_);
    const double gamma = 0.95;
    double sp = std::min(1.0, gamma * max_step(x_, corr.dx));
    double sd = std::min(1.0, gamma * max_step(z_, corr.dz));

    // The step bounds lose accuracy on ill-conditioned iterates, and long
    // steps can leave the neighbourhood of the central path, so trial points
    // are checked directly and shortened if needed.
    for (int attempt = 0;; ++attempt) {
      Mat x = x_ + sp * corr.dx;
      x = 0.5 * (x + x.transpose()).eval();
      project(x);
      Vec y = y_ + sd * corr.dy;
      Mat z = dual_slack(p_, y, true);
      if (acceptable(x, z)) {
        x_ = std::move(x);
        y_ = std::move(y);
        z_ = std::move(z);
        return;
      }
      if (attempt == kBacktrackLimit) throw NumericalError("step left the central path neighbourhood");
      sp *= 0.7;
      sd *= 0.7;
    }
  }

  static bool acceptable(const Mat& x, const Mat& z) {
    const double mu = x.cwiseProduct(z).sum() / static_cast<double>(x.rows());
    try {
      return nt_scaling(x, z).min_xz >= kNeighbourhood * mu;
    } catch (const NumericalError&) {
      return false;  // not positive definite
    }
  }

  // Zero the edge coordinates exactly and restore unit trace.
  void project(Mat& x) const {
    for (auto [i, j] : p_.edges) x(i, j) = x(j, i) = 0.0;
    x /= x.trace();
  }

  Program p_;
  double scale_;
  SdpOptions options_;
  Mat x_, z_;
  Vec y_;
  int iterations_ = 0;
};

}  // namespace

ThetaSolution solve_theta_sdp(const Graph& g, std::span<const double> weights, const SdpOptions& options) {
  const int n = g.order();
  if (static_cast<int>(weights.size()) != n) {
    throw ParameterError("weight vector has " + std::to_string(weights.size()) + " entries for " +
                         std::to_string(n) + " vertices");
  }
  double total = 0;
  std::vector<int> support;
  for (int v = 0; v < n; ++v) {
    if (!(weights[v] >= 0) || !std::isfinite(weights[v])) {
      throw ParameterError("weight of vertex " + std::to_string(v) + " must be finite and non-negative");
    }
    if (weights[v] > 0) {
      support.push_back(v);
      total += weights[v];
    }
  }
  if (support.empty()) throw ParameterError("theta needs at least one positive weight");
  if (static_cast<int>(support.size()) > kMaxSdpVertices) {
    throw CapacityError("theta SDP limited to " + std::to_string(kMaxSdpVertices) + " weighted vertices, got " +
                        std::to_string(support.size()));
  }

  Program p;
  p.n = static_cast<int>(support.size());
  p.u.resize(p.n);
  for (int a = 0; a < p.n; ++a) {
    p.u(a) = std::sqrt(weights[support[a]] / total);
    for (int b = a + 1; b < p.n; ++b)
      if (g.adjacent(support[a], support[b])) p.edges.emplace_back(a, b);
  }

  ThetaSolution out;
  Mat reduced;
  if (p.n == 1) {
    reduced = Mat::Ones(1, 1);
    out.value = out.dual_value = total;
  } else {
    ThetaIpm ipm(p, total, options);
    ipm.solve();
    reduced = ipm.x();
    out.value = total * ipm.primal_value();
    out.dual_value = total * (ipm.primal_value() + ipm.gap());
    out.iterations = ipm.iterations();
  }
  out.gap = out.dual_value - out.value;

  out.primal_matrix = SymmetricMatrix<double>(n);
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b <= a; ++b) out.primal_matrix.set(support[a], support[b], reduced(a, b));
  out.min_eigenvalue = min_eigenvalue(out.primal_matrix);
  for (auto [i, j] : g.edges()) out.max_edge_entry = std::max(out.max_edge_entry, std::abs(out.primal_matrix(i, j)));
  return out;
}

void SolverHealth::record(const ThetaSolution& s) {
  min_eigenvalue = solves == 0 ? s.min_eigenvalue : std::min(min_eigenvalue, s.min_eigenvalue);
  ++solves;
  max_gap = std::max(max_gap, s.gap);
  max_edge_entry = std::max(max_edge_entry, s.max_edge_entry);
  max_iterations = std::max(max_iterations, s.iterations);
}

void SolverHealth::merge(const SolverHealth& other) {
  if (other.solves == 0) return;
  min_eigenvalue = solves == 0 ? other.min_eigenvalue : std::min(min_eigenvalue, other.min_eigenvalue);
  solves += other.solves;
  max_gap = std::max(max_gap, other.max_gap);
  max_edge_entry = std::max(max_edge_entry, other.max_edge_entry);
  max_iterations = std::max(max_iterations, other.max_iterations);
}

bool SolverHealth::healthy(double tolerance) const {
  return max_gap <= tolerance && min_eigenvalue >= -1e-9 && max_edge_entry <= 1e-9;
}

ThetaSolution solve_theta_sdp(const Graph& g, const SdpOptions& options) {
  const std::vector<double> ones(g.order(), 1.0);
  return solve_theta_sdp(g, ones, options);
}

}  // namespace exclugraph

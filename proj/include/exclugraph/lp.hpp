#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include "exclugraph/error.hpp"

namespace exclugraph {

// Zero threshold used by the simplex pivots. Exact scalar types (rationals)
// get a threshold of zero.
template <typename Scalar>
Scalar lp_epsilon() {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return Scalar(1e-11);
  } else {
    return Scalar(0);
  }
}

template <typename Scalar>
struct LinearConstraint {
  std::vector<Scalar> coefficients;  // row of a^T x <= bound
  Scalar bound;
};

// maximize objective^T x subject to every constraint; x >= 0 when
// `nonnegative`, otherwise x is free.
template <typename Scalar>
struct LpProblem {
  std::vector<Scalar> objective;
  std::vector<LinearConstraint<Scalar>> constraints;
  bool nonnegative = true;
};

enum class LpStatus { optimal, infeasible, unbounded };

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Scalar> point;
  Scalar value{};
  std::vector<Scalar> duals;  // one per constraint, >= 0 at optimality
  int iterations = 0;
};

namespace detail {

// Two-phase revised simplex with an explicit basis inverse and Bland's
// smallest-index rule for both the entering and the leaving variable.
template <typename Scalar>
class RevisedSimplex {
 public:
  explicit RevisedSimplex(const LpProblem<Scalar>& problem) : problem_(problem) {
    rows_ = problem.constraints.size();
    structural_ = problem.objective.size();
    columns_per_var_ = problem.nonnegative ? 1 : 2;
    const std::size_t decision = structural_ * columns_per_var_;
    for (const auto& c : problem.constraints) {
      if (c.coefficients.size() != structural_) throw ParameterError("constraint width does not match objective");
    }

    flipped_.assign(rows_, false);
    for (std::size_t i = 0; i < rows_; ++i) flipped_[i] = problem.constraints[i].bound < Scalar(0);

    // Column layout: [decision | slack | artificial].
    slack_begin_ = decision;
    artificial_begin_ = decision + rows_;
    std::size_t artificials = 0;
    for (bool f : flipped_) artificials += f ? 1 : 0;
    columns_ = artificial_begin_ + artificials;

    a_.assign(rows_, std::vector<Scalar>(columns_, Scalar(0)));
    rhs_.resize(rows_);
    basis_.resize(rows_);
    std::size_t next_artificial = artificial_begin_;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar sign = flipped_[i] ? Scalar(-1) : Scalar(1);
      const auto& c = problem.constraints[i];
      for (std::size_t j = 0; j < structural_; ++j) {
        a_[i][j * columns_per_var_] = sign * c.coefficients[j];
        if (columns_per_var_ == 2) a_[i][j * 2 + 1] = -sign * c.coefficients[j];
      }
      a_[i][slack_begin_ + i] = sign;
      rhs_[i] = sign * c.bound;
      if (flipped_[i]) {
        a_[i][next_artificial] = Scalar(1);
        basis_[i] = next_artificial++;
      } else {
        basis_[i] = slack_begin_ + i;
      }
    }
    binv_.assign(rows_, std::vector<Scalar>(rows_, Scalar(0)));
    for (std::size_t i = 0; i < rows_; ++i) binv_[i][i] = Scalar(1);
    xb_ = rhs_;
    iteration_cap_ = 10 * static_cast<int>(structural_ + rows_) + 10;
  }

  LpSolution<Scalar> solve() {
    LpSolution<Scalar> out;
    const Scalar eps = lp_epsilon<Scalar>();

    if (columns_ > artificial_begin_) {
      std::vector<Scalar> phase1(columns_, Scalar(0));
      for (std::size_t j = artificial_begin_; j < columns_; ++j) phase1[j] = Scalar(-1);
      run(phase1, true);
      Scalar infeasibility(0);
      for (std::size_t i = 0; i < rows_; ++i)
        if (basis_[i] >= artificial_begin_) infeasibility += xb_[i];
      if (infeasibility > eps * Scalar(rows_ + 1)) {
        out.status = LpStatus::infeasible;
        out.iterations = iterations_;
        return out;
      }
      drive_out_artificials();
    }

    std::vector<Scalar> phase2(columns_, Scalar(0));
    for (std::size_t j = 0; j < structural_; ++j) {
      phase2[j * columns_per_var_] = problem_.objective[j];
      if (columns_per_var_ == 2) phase2[j * 2 + 1] = -problem_.objective[j];
    }
    if (!run(phase2, false)) {
      out.status = LpStatus::unbounded;
      out.iterations = iterations_;
      return out;
    }

    out.status = LpStatus::optimal;
    out.iterations = iterations_;
    std::vector<Scalar> full(columns_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) full[basis_[i]] = xb_[i];
    out.point.assign(structural_, Scalar(0));
    out.value = Scalar(0);
    for (std::size_t j = 0; j < structural_; ++j) {
      out.point[j] = full[j * columns_per_var_];
      if (columns_per_var_ == 2) out.point[j] -= full[j * 2 + 1];
      out.value += problem_.objective[j] * out.point[j];
    }
    const auto y = prices(phase2);
    out.duals.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.duals[i] = flipped_[i] ? -y[i] : y[i];
    return out;
  }

 private:
  std::vector<Scalar> prices(const std::vector<Scalar>& cost) const {
    std::vector<Scalar> y(rows_, Scalar(0));
    for (std::size_t k = 0; k < rows_; ++k) {
      const Scalar cb = cost[basis_[k]];
      if (cb == Scalar(0)) continue;
      for (std::size_t i = 0; i < rows_; ++i) y[i] += cb * binv_[k][i];
    }
    return y;
  }

  // Returns false when the objective is unbounded along an entering column.
  bool run(const std::vector<Scalar>& cost, bool phase_one) {
    const Scalar eps = lp_epsilon<Scalar>();
    std::vector<bool> in_basis(columns_, false);
    for (;;) {
      std::fill(in_basis.begin(), in_basis.end(), false);
      for (std::size_t b : basis_) in_basis[b] = true;
      const auto y = prices(cost);

      std::size_t entering = columns_;
      const std::size_t limit = phase_one ? columns_ : artificial_begin_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (in_basis[j]) continue;
        Scalar reduced = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) reduced -= y[i] * a_[i][j];
        if (reduced > eps) {
          entering = j;
          break;
        }
      }
      if (entering == columns_) return true;

      if (++iterations_ > iteration_cap_) {
        throw NumericalError("simplex iteration cap of " + std::to_string(iteration_cap_) + " reached");
      }

      std::vector<Scalar> u(rows_, Scalar(0));
      for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < rows_; ++k) u[i] += binv_[i][k] * a_[k][entering];

      std::size_t leave = rows_;
      Scalar best_ratio{};
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!(u[i] > eps)) continue;
        const Scalar ratio = xb_[i] / u[i];
        if (leave == rows_ || ratio < best_ratio ||
            (!(best_ratio < ratio) && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, entering, u);
    }
  }

  void pivot(std::size_t leave, std::size_t entering, const std::vector<Scalar>& u) {
    const Scalar p = u[leave];
    for (std::size_t k = 0; k < rows_; ++k) binv_[leave][k] /= p;
    xb_[leave] /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == leave || u[i] == Scalar(0)) continue;
      const Scalar f = u[i];
      for (std::size_t k = 0; k < rows_; ++k) binv_[i][k] -= f * binv_[leave][k];
      xb_[i] -= f * xb_[leave];
      if constexpr (std::is_floating_point_v<Scalar>) {
        if (xb_[i] < Scalar(0) && xb_[i] > -lp_epsilon<Scalar>()) xb_[i] = Scalar(0);
      }
    }
    basis_[leave] = entering;
  }

  // Zero-level artificials left in the basis after phase one are swapped for
  // any structural or slack column with a non-zero entry in their row.
  void drive_out_artificials() {
    const Scalar eps = lp_epsilon<Scalar>();
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < artificial_begin_) continue;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (std::find(basis_.begin(), basis_.end(), j) != basis_.end()) continue;
        std::vector<Scalar> u(rows_, Scalar(0));
        for (std::size_t i = 0; i < rows_; ++i)
          for (std::size_t k = 0; k < rows_; ++k) u[i] += binv_[i][k] * a_[k][j];
        if (u[r] > eps || u[r] < -eps) {
          pivot(r, j, u);
          break;
        }
      }
    }
  }

  const LpProblem<Scalar>& problem_;
  std::size_t rows_ = 0, structural_ = 0, columns_per_var_ = 1;
  std::size_t slack_begin_ = 0, artificial_begin_ = 0, columns_ = 0;
  std::vector<bool> flipped_;
  std::vector<std::vector<Scalar>> a_;
  std::vector<Scalar> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<std::vector<Scalar>> binv_;
  std::vector<Scalar> xb_;
  int iterations_ = 0;
  int iteration_cap_ = 0;
};

}  // namespace detail

// Throws NumericalError when the iteration cap 10 * (variables + constraints)
// is exhausted.
template <typename Scalar>
LpSolution<Scalar> solve_lp(const LpProblem<Scalar>& problem) {
  return detail::RevisedSimplex<Scalar>(problem).solve();
}

// Sum of |dual_i * slack_i| over constraints plus |x_j * reduced_cost_j| over
// variables. Zero at an exact optimum.
template <typename Scalar>
Scalar complementary_slackness_residual(const LpProblem<Scalar>& problem, const LpSolution<Scalar>& sol) {
  auto abs = [](Scalar v) { return v < Scalar(0) ? -v : v; };
  Scalar residual(0);
  const std::size_t n = problem.objective.size();
  std::vector<Scalar> reduced = problem.objective;
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const auto& c = problem.constraints[i];
    Scalar lhs(0);
    for (std::size_t j = 0; j < n; ++j) {
      lhs += c.coefficients[j] * sol.point[j];
      reduced[j] -= sol.duals[i] * c.coefficients[j];
    }
    residual += abs(sol.duals[i] * (c.bound - lhs));
  }
  for (std::size_t j = 0; j < n; ++j) residual += abs(sol.point[j] * reduced[j]);
  return residual;
}

}  // namespace exclugraph

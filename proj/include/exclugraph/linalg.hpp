#pragma once

#include <Eigen/Dense>

#include "exclugraph/error.hpp"

namespace exclugraph {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Dense symmetric matrix. Every write goes to both (i, j) and (j, i), so the
// two entries are bitwise identical at all times.
template <typename Scalar>
class SymmetricMatrix {
 public:
  using Dense = Matrix<Scalar>;

  SymmetricMatrix() = default;
  explicit SymmetricMatrix(Eigen::Index n) : m_(Dense::Zero(n, n)) {}

  // Mirrors the lower triangle of `m`; the strict upper triangle is ignored.
  template <typename Derived>
  static SymmetricMatrix from_lower(const Eigen::MatrixBase<Derived>& m) {
    SymmetricMatrix out(m.rows());
    out.m_ = m.template selfadjointView<Eigen::Lower>();
    return out;
  }

  static SymmetricMatrix identity(Eigen::Index n) {
    SymmetricMatrix out;
    out.m_ = Dense::Identity(n, n);
    return out;
  }

  Eigen::Index dimension() const noexcept { return m_.rows(); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  void set(Eigen::Index i, Eigen::Index j, Scalar value) {
    m_(i, j) = value;
    m_(j, i) = value;
  }
  const Dense& dense() const noexcept { return m_; }
  Scalar trace() const { return m_.trace(); }

 private:
  Dense m_;
};

template <typename Scalar>
struct Spectrum {
  Vector<Scalar> values;   // ascending
  Matrix<Scalar> vectors;  // orthonormal columns, vectors.col(k) pairs with values(k)
};

// Symmetric eigendecomposition backed by Eigen's self-adjoint solver
// (tridiagonalization + implicit QL).
template <typename Scalar>
Spectrum<Scalar> symmetric_eigen(const SymmetricMatrix<Scalar>& m, bool with_vectors = true) {
  if (m.dimension() < 1) throw ParameterError("eigendecomposition of an empty matrix");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(
      m.dense(), with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver did not converge");
  Spectrum<Scalar> out;
  out.values = solver.eigenvalues();
  if (with_vectors) out.vectors = solver.eigenvectors();
  return out;
}

template <typename Scalar>
Scalar min_eigenvalue(const SymmetricMatrix<Scalar>& m) {
  return symmetric_eigen(m, false).values(0);
}

}  // namespace exclugraph

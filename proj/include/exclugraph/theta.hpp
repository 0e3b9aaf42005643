#pragma once

#include <span>

#include "exclugraph/graph.hpp"
#include "exclugraph/linalg.hpp"

namespace exclugraph {

inline constexpr int kMaxSdpVertices = 40;
inline constexpr double kDefaultGapTolerance = 1e-8;

struct SdpOptions {
  double tolerance = kDefaultGapTolerance;  // absolute duality gap
  int max_iterations = 200;
};

// Optimum of the weighted Lovász program
//   maximize sum_ij sqrt(w_i w_j) B_ij  s.t.  B psd, tr B = 1, B_ij = 0 on edges.
struct ThetaSolution {
  SymmetricMatrix<double> primal_matrix;
  double value = 0;       // primal objective of primal_matrix
  double dual_value = 0;  // y0 of a feasible dual slack y0 I + sum_e y_e A_e - C
  double gap = 0;         // dual_value - value, certified by feasibility of both
  int iterations = 0;
  double min_eigenvalue = 0;  // of primal_matrix
  double max_edge_entry = 0;  // max |B_ij| over edges ij
};

// Worst-case diagnostics over a batch of SDP solves.
struct SolverHealth {
  int solves = 0;
  double max_gap = 0;
  double min_eigenvalue = 0;
  double max_edge_entry = 0;
  int max_iterations = 0;

  void record(const ThetaSolution& s);
  void merge(const SolverHealth& other);
  // gap <= tolerance, min eigenvalue >= -1e-9, edge entries <= 1e-9.
  bool healthy(double tolerance = kDefaultGapTolerance) const;
};

// Feasible primal-dual path following with Nesterov-Todd scaling and a
// Mehrotra-type centering heuristic. Zero-weight vertices are removed before
// solving, their rows and columns of B are zero.
//
// Throws ParameterError on negative or all-zero weights, CapacityError above
// kMaxSdpVertices support vertices, NumericalError (carrying the bracket
// [value, dual_value]) if the gap does not close within max_iterations.
ThetaSolution solve_theta_sdp(const Graph& g, std::span<const double> weights, const SdpOptions& options = {});

// Unit-weight convenience overload.
ThetaSolution solve_theta_sdp(const Graph& g, const SdpOptions& options = {});

}  // namespace exclugraph

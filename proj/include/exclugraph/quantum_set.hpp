#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exclugraph/graph.hpp"
#include "exclugraph/theta.hpp"
#include "exclugraph/weights.hpp"

namespace exclugraph {

inline constexpr double kEProductSlack = 1e-9;
inline constexpr double kBoundaryBand = 1e-6;
inline constexpr double kWitnessSlack = 1e-5;
inline constexpr double kDualityTolerance = 1e-5;

struct EProduct {
  double value = 0;  // sum_i p_i q_i
  bool satisfies_e = true;
};

// Probability of the pairwise-exclusive joint events (e_i, f_i) for
// independent e_i and f_i. The exclusivity principle demands value <= 1.
EProduct e_product(const Distribution& p, const Distribution& q);

enum class Classification { inside, boundary, outside };
const char* to_string(Classification c);

struct Witness {
  Distribution distribution;  // a member of Q(complement(G))
  double product = 0;         // sum_i P_i * distribution_i
  double membership_check = 0;  // theta(G, distribution) <= 1 + kBoundaryBand
  SolverHealth health;
};

struct MembershipVerdict {
  double theta_complement = 0;  // theta(complement(G), P)
  Classification classification = Classification::inside;
  std::optional<Witness> witness;  // present iff outside
  ThetaSolution solution;          // the complement program at P
  SolverHealth health;
};

// Q(G) = {P >= 0 : theta(complement(G), P) <= 1}, classified against 1 with
// a band of kBoundaryBand. An all-zero P is inside with theta 0.
MembershipVerdict membership(const Graph& g, const Distribution& p, const SdpOptions& options = {});

// A self-verified P-bar in Q(complement(G)) with sum_i P_i P-bar_i > 1.
// Throws PreconditionError unless P is outside Q(G), NumericalError if no
// candidate passes verification.
Witness extract_witness(const Graph& g, const Distribution& p, const SdpOptions& options = {});

// Average of p over Aut(g): q_i = (1/|Aut|) sum_phi p(phi(i)).
Distribution symmetrize(const Graph& g, const Distribution& p);

struct QuantumMaxReport {
  int n = 0;
  double m_q = 0;  // theta(G)
  double complement_m_q = 0;  // theta(complement(G))
  std::optional<double> p_max;  // theta(G) / n, present iff vertex-transitive
  double product = 0;
  bool vertex_transitive = false;
  SolverHealth health;
};

QuantumMaxReport quantum_max(const Graph& g, const SdpOptions& options = {});

struct Result1Report {
  int trials = 0;
  int inside = 0;
  int boundary = 0;
  int outside = 0;
  int e_product_checks = 0;
  int e_product_violations = 0;
  double max_inside_product = 0;
  int witnesses_verified = 0;
  int witness_failures = 0;
  SolverHealth health;

  bool passed() const { return e_product_violations == 0 && witness_failures == 0; }
};

// Samples `trials` distributions around the boundary of Q(G). Points in Q(G)
// are paired with 10 boundary members of Q(complement(G)) and must satisfy
// the E-product inequality; points outside must yield verified witnesses.
Result1Report verify_result1(const Graph& g, int trials, std::uint64_t seed, const SdpOptions& options = {});

struct Result2Entry {
  double epsilon = 0;
  double product = 0;            // sum_i P_i P-bar_i
  double theta_complement = 0;   // theta(complement(G), P)
  double witness_check = 0;      // theta(G, P-bar)
  double permuted_check = 0;     // theta(complement(G), P-bar o sigma)
  bool passed = false;
};

struct Result2Report {
  VertexPermutation isomorphism = VertexPermutation::identity(1);  // G -> complement(G)
  double theta = 0;
  std::vector<Result2Entry> entries;  // sorted by epsilon
  bool increasing = true;
  SolverHealth health;

  bool passed() const;
};

// Throws StructuralError when g is not self-complementary.
Result2Report verify_result2(const Graph& g, std::vector<double> epsilon_grid, const SdpOptions& options = {});

struct Result3Report {
  int n = 0;
  double theta = 0;
  double theta_complement = 0;
  double product = 0;
  double e_value = 0;        // n * p_max * p-bar_max = product / n
  double upper_margin = 0;   // n + tol - product, >= 0 required
  double lower_margin = 0;   // product - (n - tol), >= 0 required
  SolverHealth health;

  bool passed() const { return upper_margin >= 0 && lower_margin >= 0; }
};

// Throws StructuralError when g is not vertex-transitive.
Result3Report verify_result3(const Graph& g, const SdpOptions& options = {});

}  // namespace exclugraph

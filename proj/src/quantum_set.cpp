#include "exclugraph/quantum_set.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "exclugraph/error.hpp"
#include "exclugraph/isomorphism.hpp"

namespace exclugraph {
namespace {

void check_size(const Graph& g, const Distribution& p) {
  if (p.size() != g.order()) {
    throw ParameterError("distribution has " + std::to_string(p.size()) + " entries for " +
                         std::to_string(g.order()) + " vertices");
  }
}

bool all_zero(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

Distribution clamp_to_unit(std::vector<double> values) {
  for (double& x : values) x = std::clamp(x, 0.0, 1.0);
  return Distribution(std::move(values));
}

Classification classify(double theta_complement) {
  if (theta_complement > 1.0 + kBoundaryBand) return Classification::outside;
  if (theta_complement < 1.0 - kBoundaryBand) return Classification::inside;
  return Classification::boundary;
}

// Scales `candidate` onto Q(complement(G)) if needed and checks both witness
// conditions. Returns nullopt when either fails.
// Every solve is recorded in `spent`.
std::optional<Witness> verify_candidate(const Graph& g, const Distribution& p, double theta_complement,
                                        std::vector<double> candidate, const SdpOptions& options,
                                        SolverHealth& spent) {
  if (all_zero(candidate)) return std::nullopt;
  Witness w{clamp_to_unit(std::move(candidate)), 0, 0, {}};
  auto check = solve_theta_sdp(g, w.distribution.values(), options);
  spent.record(check);
  if (check.value > 1.0) {
    std::vector<double> scaled(w.distribution.values().begin(), w.distribution.values().end());
    for (double& x : scaled) x /= check.value;
    w.distribution = clamp_to_unit(std::move(scaled));
    check = solve_theta_sdp(g, w.distribution.values(), options);
    spent.record(check);
  }
  w.membership_check = check.value;
  w.product = e_product(p, w.distribution).value;
  const bool in_complement_set = w.membership_check <= 1.0 + kBoundaryBand;
  const bool attains = w.product >= theta_complement - kWitnessSlack && w.product > 1.0;
  if (!in_complement_set || !attains) return std::nullopt;
  return w;
}

// Both SDP-based candidates are verified and the larger product wins: the
// recovery P-bar_i = theta B_ii / P_i from the
// optimal complement-program matrix B; the orthonormal-representation point
// P-bar_i = (B s)_i^2 / (B_ii s^T B s) with s_i = sqrt(P_i), which lies in
// the body for any feasible B and attains at least s^T B s. If neither
// verifies, vertex-transitive graphs fall back to the constant
// theta(complement(G)) / n.
Witness witness_from_solution(const Graph& g, const Distribution& p, const ThetaSolution& complement_solution,
                              const SdpOptions& options) {
  const int n = g.order();
  const double theta = complement_solution.value;
  SolverHealth spent;

  std::vector<double> recovered(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (p[i] > 0) recovered[i] = theta * complement_solution.primal_matrix(i, i) / p[i];
  }
  auto best = verify_candidate(g, p, theta, std::move(recovered), options, spent);

  const auto b = complement_solution.primal_matrix.dense();
  Vector<double> s(n);
  for (int i = 0; i < n; ++i) s(i) = std::sqrt(p[i]);
  const Vector<double> bs = b * s;
  const double value = s.dot(bs);
  std::vector<double> represented(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (b(i, i) > 0) represented[i] = bs(i) * bs(i) / (b(i, i) * value);
  }
  auto second = verify_candidate(g, p, theta, std::move(represented), options, spent);
  if (second && (!best || second->product > best->product)) best = std::move(second);
  if (best) {
    best->health = spent;
    return *best;
  }

  if (is_vertex_transitive(g)) {
    const auto complement_theta = solve_theta_sdp(complement(g), options);
    spent.record(complement_theta);
    if (auto w = verify_candidate(g, p, theta, std::vector<double>(n, complement_theta.value / n), options, spent)) {
      w->health = spent;
      return *w;
    }
  }
  throw NumericalError("no witness candidate passed verification", 1.0, theta);
}

}  // namespace

EProduct e_product(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw ParameterError("E-product of distributions of lengths " + std::to_string(p.size()) + " and " +
                         std::to_string(q.size()));
  }
  EProduct out;
  for (int i = 0; i < p.size(); ++i) out.value += p[i] * q[i];
  out.satisfies_e = out.value <= 1.0 + kEProductSlack;
  return out;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::inside: return "inside";
    case Classification::boundary: return "boundary";
    case Classification::outside: return "outside";
  }
  return "?";
}

MembershipVerdict membership(const Graph& g, const Distribution& p, const SdpOptions& options) {
  check_size(g, p);
  MembershipVerdict v;
  if (all_zero(p.values())) {
    v.solution.primal_matrix = SymmetricMatrix<double>(g.order());
    return v;
  }
  v.solution = solve_theta_sdp(complement(g), p.values(), options);
  v.health.record(v.solution);
  v.theta_complement = v.solution.value;
  v.classification = classify(v.theta_complement);
  if (v.classification == Classification::outside) {
    v.witness = witness_from_solution(g, p, v.solution, options);
    v.health.merge(v.witness->health);
  }
  return v;
}

Witness extract_witness(const Graph& g, const Distribution& p, const SdpOptions& options) {
  auto verdict = membership(g, p, options);
  if (!verdict.witness) {
    throw PreconditionError(std::string("witness requested for a point classified ") +
                            to_string(verdict.classification) + " (theta of the complement = " +
                            std::to_string(verdict.theta_complement) + ")");
  }
  verdict.witness->health = verdict.health;
  return *verdict.witness;
}

Distribution symmetrize(const Graph& g, const Distribution& p) {
  check_size(g, p);
  const auto group = automorphism_group(g);
  const int n = g.order();
  std::vector<double> q(n, 0.0);
  for (const auto& phi : group.elements)
    for (int i = 0; i < n; ++i) q[i] += p[phi(i)];
  for (double& x : q) x /= static_cast<double>(group.order());
  return clamp_to_unit(std::move(q));
}

QuantumMaxReport quantum_max(const Graph& g, const SdpOptions& options) {
  QuantumMaxReport r;
  r.n = g.order();
  const auto s = solve_theta_sdp(g, options);
  const auto sc = solve_theta_sdp(complement(g), options);
  r.health.record(s);
  r.health.record(sc);
  r.m_q = s.value;
  r.complement_m_q = sc.value;
  r.product = r.m_q * r.complement_m_q;
  r.vertex_transitive = is_vertex_transitive(g);
  if (r.vertex_transitive) r.p_max = r.m_q / r.n;
  return r;
}

Result1Report verify_result1(const Graph& g, int trials, std::uint64_t seed, const SdpOptions& options) {
  if (trials < 0) throw ParameterError("trial count must be non-negative");
  const int n = g.order();
  const Graph gc = complement(g);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> radial(0.5, 1.5);

  auto random_vector = [&] {
    std::vector<double> v(n);
    do {
      for (double& x : v) x = unit(rng);
    } while (all_zero(v));
    return v;
  };

  Result1Report r;
  r.trials = trials;
  for (int t = 0; t < trials; ++t) {
    // Random direction, scaled to a random multiple of the Q(G) boundary.
    auto v = random_vector();
    const auto along = solve_theta_sdp(gc, v, options);
    r.health.record(along);
    const double factor = radial(rng);
    for (double& x : v) x *= factor / along.value;
    const Distribution p = clamp_to_unit(std::move(v));

    MembershipVerdict verdict;
    try {
      verdict = membership(g, p, options);
    } catch (const NumericalError&) {
      ++r.outside;
      ++r.witness_failures;
      continue;
    }
    r.health.merge(verdict.health);
    switch (verdict.classification) {
      case Classification::inside: ++r.inside; break;
      case Classification::boundary: ++r.boundary; break;
      case Classification::outside: ++r.outside; break;
    }
    if (verdict.classification == Classification::outside) {
      ++r.witnesses_verified;
      continue;
    }
    for (int k = 0; k < 10; ++k) {
      auto q = random_vector();
      const auto scale = solve_theta_sdp(g, q, options);
      r.health.record(scale);
      for (double& x : q) x /= scale.value;
      const auto e = e_product(p, clamp_to_unit(std::move(q)));
      ++r.e_product_checks;
      r.max_inside_product = std::max(r.max_inside_product, e.value);
      if (e.value > 1.0 + kBoundaryBand) ++r.e_product_violations;
    }
  }
  return r;
}

bool Result2Report::passed() const {
  return increasing && !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const Result2Entry& e) { return e.passed; });
}

Result2Report verify_result2(const Graph& g, std::vector<double> epsilon_grid, const SdpOptions& options) {
  auto sigma = is_self_complementary(g);
  if (!sigma) {
    throw StructuralError(
        "graph is not self-complementary; excluding supra-quantum sets by the exclusivity principle alone "
        "requires G isomorphic to its complement");
  }
  const int n = g.order();
  const Graph gc = complement(g);
  Result2Report r;
  r.isomorphism = *sigma;
  const auto theta = solve_theta_sdp(g, options);
  r.health.record(theta);
  r.theta = theta.value;

  std::sort(epsilon_grid.begin(), epsilon_grid.end());
  for (double eps : epsilon_grid) {
    if (!(eps > 0)) throw ParameterError("epsilon values must be positive");
    const double level = r.theta / n * (1.0 + eps);
    if (level > 1.0) {
      throw ParameterError("epsilon " + std::to_string(eps) + " pushes the constant point above probability 1");
    }
    const Distribution p = Distribution::constant(n, level);
    const Witness w = extract_witness(g, p, options);
    r.health.merge(w.health);

    // sigma carries (G, P-bar) onto (complement(G), P-bar o sigma), so the
    // permuted witness is itself a quantum distribution for G.
    std::vector<double> permuted(n);
    for (int u = 0; u < n; ++u) permuted[u] = w.distribution[r.isomorphism(u)];
    const auto recheck = solve_theta_sdp(gc, permuted, options);
    r.health.record(recheck);

    Result2Entry e;
    e.epsilon = eps;
    e.product = w.product;
    e.theta_complement = membership(g, p, options).theta_complement;
    e.witness_check = w.membership_check;
    e.permuted_check = recheck.value;
    e.passed = e.product > 1.0 && e.witness_check <= 1.0 + kBoundaryBand && e.permuted_check <= 1.0 + kBoundaryBand;
    if (!r.entries.empty() && !(e.product > r.entries.back().product)) r.increasing = false;
    r.entries.push_back(e);
  }
  return r;
}

Result3Report verify_result3(const Graph& g, const SdpOptions& options) {
  if (!is_vertex_transitive(g)) {
    throw StructuralError(
        "graph is not vertex-transitive; the quantum-maximum duality theta(G) theta(complement G) = n requires "
        "a single automorphism orbit");
  }
  Result3Report r;
  r.n = g.order();
  const auto s = solve_theta_sdp(g, options);
  const auto sc = solve_theta_sdp(complement(g), options);
  r.health.record(s);
  r.health.record(sc);
  r.theta = s.value;
  r.theta_complement = sc.value;
  r.product = r.theta * r.theta_complement;
  const auto e = e_product(Distribution::constant(r.n, r.theta / r.n), Distribution::constant(r.n, r.theta_complement / r.n));
  r.e_value = e.value;
  r.upper_margin = r.n + kDualityTolerance - r.product;
  r.lower_margin = r.product - (r.n - kDualityTolerance);
  return r;
}

}  // namespace exclugraph

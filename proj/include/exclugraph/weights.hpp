#pragma once

#include <span>
#include <vector>

namespace exclugraph {

// Non-negative per-vertex weights w_i of a correlation sum S_w.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> values);
  static WeightVector unit(int n) { return WeightVector(std::vector<double>(n, 1.0)); }

  int size() const noexcept { return static_cast<int>(values_.size()); }
  double operator[](int i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  bool is_unit() const noexcept;

 private:
  std::vector<double> values_;
};

// Per-vertex event probabilities P_i in [0, 1]. Not normalized across
// vertices.
class Distribution {
 public:
  explicit Distribution(std::vector<double> values);
  static Distribution constant(int n, double p) { return Distribution(std::vector<double>(n, p)); }

  int size() const noexcept { return static_cast<int>(values_.size()); }
  double operator[](int i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  double sum() const noexcept;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace exclugraph

#include "exclugraph/weights.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "exclugraph/error.hpp"

namespace exclugraph {

WeightVector::WeightVector(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0) {
      throw ParameterError("weight " + std::to_string(i) + " must be finite and non-negative");
    }
  }
}

bool WeightVector::is_unit() const noexcept {
  for (double w : values_)
    if (w != 1.0) return false;
  return true;
}

Distribution::Distribution(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0 || values_[i] > 1) {
      throw ParameterError("probability " + std::to_string(i) + " must lie in [0, 1]");
    }
  }
}

double Distribution::sum() const noexcept { return std::accumulate(values_.begin(), values_.end(), 0.0); }

}  // namespace exclugraph

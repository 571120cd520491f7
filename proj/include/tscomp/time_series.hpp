#pragma once

#include <span>
#include <string>
#include <vector>

namespace tscomp {

/// A finite real-valued sample sequence with metadata.
/// Invariants: at least one sample, all samples finite.
struct TimeSeries {
  std::vector<double> samples;
  double sample_interval = 1.0;  // seconds, metadata only
  std::string label;

  [[nodiscard]] int length() const { return static_cast<int>(samples.size()); }
  [[nodiscard]] std::span<const double> view() const { return samples; }

  /// Throws std::invalid_argument if the invariants do not hold.
  void validate() const;
};

}  // namespace tscomp

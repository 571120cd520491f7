#pragma once

#include <cstdint>

namespace tscomp {

/// Tally of floating-point operations executed by a compressor run.
/// Counts are additive: merging two tallies sums field-wise.
struct OpCount {
  std::uint64_t add = 0;
  std::uint64_t sub = 0;
  std::uint64_t mul = 0;
  std::uint64_t div = 0;
  std::uint64_t cmp = 0;

  OpCount& operator+=(const OpCount& o) {
    add += o.add;
    sub += o.sub;
    mul += o.mul;
    div += o.div;
    cmp += o.cmp;
    return *this;
  }

  friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }

  [[nodiscard]] std::uint64_t total() const { return add + sub + mul + div + cmp; }

  bool operator==(const OpCount&) const = default;
};

}  // namespace tscomp

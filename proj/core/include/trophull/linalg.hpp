#pragma once

/**
 * Small exact dense linear algebra over the rationals, sized for the
 * orientation computations (dimensions bounded by n-1).
 */

#include <optional>
#include <vector>

#include "trophull/rational.hpp"

namespace trop {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

/// Incremental row-space builder: accepts a vector iff it is independent
/// of everything accepted so far.
class IndependentSet {
 public:
  explicit IndependentSet(int dim) : dim_(dim) {}

  bool try_add(const RatVec& v);  // true if rank grew
  int rank() const { return static_cast<int>(reduced_.size()); }

 private:
  int dim_;
  std::vector<RatVec> reduced_;  // echelon rows
  std::vector<int> pivot_cols_;
};

int rank_of(const RatMat& m);

/// Sign of det (square input): -1, 0, +1.
int det_sign(RatMat m);

/// Solve A x = b exactly for rectangular consistent systems (least
/// constraints form: returns any solution); nullopt when inconsistent.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

}  // namespace trop

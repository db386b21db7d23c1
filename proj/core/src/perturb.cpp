#include "trophull/perturb.hpp"

#include <algorithm>

#include "trophull/errors.hpp"
#include "trophull/tropical.hpp"

namespace trop {

namespace {

WeightMatrix cyclic_tiebreaker(int r, int n) {
  WeightMatrix t(r, n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) t.at(i, j) = Rat(i) * Rat(j);
  }
  return t;
}

// Entry (i,j) gets its own power of two, so distinct cell sets always
// have distinct tiebreaker sums: this matrix breaks every tie.
WeightMatrix power_tiebreaker(int r, int n) {
  WeightMatrix t(r, n);
  BigInt p = 1;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) {
      t.at(i, j) = Rat(p);
      p *= 2;
    }
  }
  return t;
}

// Every comparison in the pipeline is between integer combinations of the
// entries whose coefficient 1-norm stays below coef_bound, so choosing
// eps * coef_bound * max|t| below the smallest possible nonzero gap 1/D
// of the original entries makes eps act as a lexicographic tag.
Rat epsilon_for(const WeightMatrix& v, const WeightMatrix& t) {
  const BigInt den_lcm = lcm_denominators(v.entries);
  BigInt max_abs_t = 1;
  for (const Rat& e : t.entries) {
    const BigInt a = abs(numerator(e));
    if (a > max_abs_t) max_abs_t = a;
  }
  const BigInt coef_bound = 4 * BigInt(v.r + v.n + 2) * BigInt(v.r + v.n + 2);
  return Rat(1) / Rat(2 * den_lcm * coef_bound * (max_abs_t + 1));
}

WeightMatrix refine(const WeightMatrix& v, const WeightMatrix& t, const Rat& eps) {
  WeightMatrix refined = v;
  for (size_t k = 0; k < refined.entries.size(); ++k) {
    refined.entries[k] += eps * t.entries[k];
  }
  return refined;
}

}  // namespace

PerturbedWeights perturb_weights(const WeightMatrix& v) {
  {
    const WeightMatrix t = cyclic_tiebreaker(v.r, v.n);
    const Rat eps = epsilon_for(v, t);
    WeightMatrix refined = refine(v, t, eps);
    if (is_generic(refined).generic) {
      return PerturbedWeights{std::move(refined), t, eps, false};
    }
  }
  const WeightMatrix t = power_tiebreaker(v.r, v.n);
  const Rat eps = epsilon_for(v, t);
  WeightMatrix refined = refine(v, t, eps);
  if (!is_generic(refined).generic) {
    throw InternalError("power-of-two tiebreaker failed to refine the weights");
  }
  return PerturbedWeights{std::move(refined), t, eps, true};
}

}  // namespace trop

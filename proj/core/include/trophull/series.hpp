#pragma once

/**
 * Truncated trivariate power series over the rationals, enough machinery
 * to extract single coefficients from the maximal-face generating
 * functions: product, reciprocal of unit series, exp of nilpotent series,
 * and a z-derivative.
 */

#include <vector>

#include "trophull/rational.hpp"

namespace trop {

/// Dense series in x, y, z truncated to the coefficient box
/// 0..cap_x, 0..cap_y, 0..cap_z.
class Series3 {
 public:
  Series3(int cap_x, int cap_y, int cap_z);

  static Series3 constant(const Rat& c, int cx, int cy, int cz);
  static Series3 monomial(const Rat& c, int dx, int dy, int dz, int cx, int cy, int cz);

  const Rat& coeff(int dx, int dy, int dz) const;
  void set_coeff(int dx, int dy, int dz, const Rat& c);

  int cap_x() const { return cx_; }
  int cap_y() const { return cy_; }
  int cap_z() const { return cz_; }

  Series3 operator+(const Series3& o) const;
  Series3 operator-(const Series3& o) const;
  Series3 operator*(const Series3& o) const;
  Series3 scaled(const Rat& c) const;

  bool has_constant_term() const;

  /// exp of a series with zero constant term.
  Series3 exp() const;

  /// Reciprocal of a series with constant term 1.
  Series3 reciprocal() const;

  /// Partial derivative with respect to z.
  Series3 dz() const;

 private:
  int cx_, cy_, cz_;
  std::vector<Rat> c_;  // [(dx)(cy+1) + dy](cz+1) + dz

  size_t idx(int dx, int dy, int dz) const {
    return (static_cast<size_t>(dx) * (cy_ + 1) + dy) * (cz_ + 1) + dz;
  }
};

/// Geometric series 1/(1 - t) in a single variable (0 = x, 1 = y, 2 = z).
Series3 geometric_series(int variable, int cx, int cy, int cz);

}  // namespace trop

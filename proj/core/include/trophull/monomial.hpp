#pragma once

/**
 * Squarefree monomials on the variables x_ij and antichain-generated
 * monomial ideals.
 */

#include <string>
#include <vector>

#include "trophull/grid.hpp"

namespace trop {

/// A squarefree monomial identified with its support, a sorted set of
/// cells (i,j) of the r x n variable grid.
struct SqfMonomial {
  std::vector<Cell> support;  // sorted, unique

  SqfMonomial() = default;
  explicit SqfMonomial(std::vector<Cell> cells);

  int degree() const { return static_cast<int>(support.size()); }
  bool divides(const SqfMonomial& other) const;  // support subset

  /// "x_1_2*x_3_1" with 1-based indices; the unit monomial prints as "1".
  std::string to_string() const;

  bool operator==(const SqfMonomial&) const = default;
  bool operator<(const SqfMonomial& o) const { return support < o.support; }
};

/// Monomial with support = unshaded boxes of the grid.
SqfMonomial monomial_from_unshaded(const Grid& g);

/// Grid whose unshaded set is the support (everything else shaded).
Grid grid_from_unshaded(int rows, int cols, const SqfMonomial& m);

/// A squarefree monomial ideal held by its unique minimal generators
/// (an antichain under divisibility), canonically sorted.
struct MonomialIdeal {
  std::vector<SqfMonomial> generators;

  MonomialIdeal() = default;

  /// Discards non-minimal elements and duplicates, sorts.
  static MonomialIdeal minimalized(std::vector<SqfMonomial> gens);

  bool contains_monomial(const SqfMonomial& m) const;  // some generator divides m
  bool is_zero() const { return generators.empty(); }
  bool is_unit() const;

  bool operator==(const MonomialIdeal&) const = default;
};

}  // namespace trop

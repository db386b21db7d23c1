#include "trophull/monomial.hpp"

#include <algorithm>

#include "trophull/errors.hpp"

namespace trop {

SqfMonomial::SqfMonomial(std::vector<Cell> cells) : support(std::move(cells)) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
}

bool SqfMonomial::divides(const SqfMonomial& other) const {
  return std::includes(other.support.begin(), other.support.end(),
                       support.begin(), support.end());
}

std::string SqfMonomial::to_string() const {
  if (support.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < support.size(); ++k) {
    if (k > 0) s += '*';
    s += "x_" + std::to_string(support[k].first + 1) + "_" +
         std::to_string(support[k].second + 1);
  }
  return s;
}

SqfMonomial monomial_from_unshaded(const Grid& g) {
  return SqfMonomial(g.unshaded_cells());
}

Grid grid_from_unshaded(int rows, int cols, const SqfMonomial& m) {
  Grid g(rows, cols);
  g.shaded.assign(static_cast<size_t>(rows) * cols, true);
  for (const Cell& c : m.support) {
    if (c.first < 0 || c.first >= rows || c.second < 0 || c.second >= cols) {
      throw InputError("monomial variable outside the grid");
    }
    g.set(c.first, c.second, false);
  }
  return g;
}

MonomialIdeal MonomialIdeal::minimalized(std::vector<SqfMonomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const SqfMonomial& a, const SqfMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  MonomialIdeal ideal;
  for (const SqfMonomial& m : gens) {
    bool redundant = false;
    for (const SqfMonomial& kept : ideal.generators) {
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) ideal.generators.push_back(m);
  }
  std::sort(ideal.generators.begin(), ideal.generators.end());
  return ideal;
}

bool MonomialIdeal::contains_monomial(const SqfMonomial& m) const {
  for (const SqfMonomial& g : generators) {
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::is_unit() const {
  return generators.size() == 1 && generators[0].support.empty();
}

}  // namespace trop

#include "trophull/series.hpp"

#include "trophull/errors.hpp"

namespace trop {

Series3::Series3(int cap_x, int cap_y, int cap_z) : cx_(cap_x), cy_(cap_y), cz_(cap_z) {
  if (cap_x < 0 || cap_y < 0 || cap_z < 0) throw ConfigError("negative series truncation");
  c_.assign(static_cast<size_t>(cx_ + 1) * (cy_ + 1) * (cz_ + 1), Rat(0));
}

Series3 Series3::constant(const Rat& c, int cx, int cy, int cz) {
  Series3 s(cx, cy, cz);
  s.c_[0] = c;
  return s;
}

Series3 Series3::monomial(const Rat& c, int dx, int dy, int dz, int cx, int cy, int cz) {
  Series3 s(cx, cy, cz);
  if (dx <= cx && dy <= cy && dz <= cz) s.c_[s.idx(dx, dy, dz)] = c;
  return s;
}

const Rat& Series3::coeff(int dx, int dy, int dz) const {
  if (dx > cx_ || dy > cy_ || dz > cz_) {
    throw ConfigError("coefficient outside the series truncation");
  }
  return c_[idx(dx, dy, dz)];
}

void Series3::set_coeff(int dx, int dy, int dz, const Rat& c) {
  if (dx > cx_ || dy > cy_ || dz > cz_) {
    throw ConfigError("coefficient outside the series truncation");
  }
  c_[idx(dx, dy, dz)] = c;
}

namespace {

void check_same_caps(const Series3& a, const Series3& b) {
  if (a.cap_x() != b.cap_x() || a.cap_y() != b.cap_y() || a.cap_z() != b.cap_z()) {
    throw ConfigError("series truncations differ");
  }
}

}  // namespace

Series3 Series3::operator+(const Series3& o) const {
  check_same_caps(*this, o);
  Series3 s = *this;
  for (size_t k = 0; k < c_.size(); ++k) s.c_[k] += o.c_[k];
  return s;
}

Series3 Series3::operator-(const Series3& o) const {
  check_same_caps(*this, o);
  Series3 s = *this;
  for (size_t k = 0; k < c_.size(); ++k) s.c_[k] -= o.c_[k];
  return s;
}

Series3 Series3::operator*(const Series3& o) const {
  check_same_caps(*this, o);
  Series3 s(cx_, cy_, cz_);
  for (int ax = 0; ax <= cx_; ++ax) {
    for (int ay = 0; ay <= cy_; ++ay) {
      for (int az = 0; az <= cz_; ++az) {
        const Rat& ca = c_[idx(ax, ay, az)];
        if (ca == 0) continue;
        for (int bx = 0; ax + bx <= cx_; ++bx) {
          for (int by = 0; ay + by <= cy_; ++by) {
            for (int bz = 0; az + bz <= cz_; ++bz) {
              const Rat& cb = o.c_[o.idx(bx, by, bz)];
              if (cb == 0) continue;
              s.c_[s.idx(ax + bx, ay + by, az + bz)] += ca * cb;
            }
          }
        }
      }
    }
  }
  return s;
}

Series3 Series3::scaled(const Rat& c) const {
  Series3 s = *this;
  for (Rat& v : s.c_) v *= c;
  return s;
}

bool Series3::has_constant_term() const { return c_[0] != 0; }

namespace {

// Largest m for which g^m can still meet the truncation box: every term
// of g^m has degree at least m times the per-variable minimum degree of g.
int nilpotency_bound(const Series3& g) {
  int min_total = -1;
  for (int dx = 0; dx <= g.cap_x(); ++dx) {
    for (int dy = 0; dy <= g.cap_y(); ++dy) {
      for (int dz = 0; dz <= g.cap_z(); ++dz) {
        if (g.coeff(dx, dy, dz) == 0) continue;
        const int total = dx + dy + dz;
        if (min_total < 0 || total < min_total) min_total = total;
      }
    }
  }
  if (min_total < 0) return 0;   // g == 0
  if (min_total == 0) return -1; // constant term present; caller guards
  return (g.cap_x() + g.cap_y() + g.cap_z()) / min_total;
}

}  // namespace

Series3 Series3::exp() const {
  if (has_constant_term()) throw ConfigError("exp needs a zero constant term");
  Series3 sum = constant(Rat(1), cx_, cy_, cz_);
  Series3 power = constant(Rat(1), cx_, cy_, cz_);
  Rat fact = 1;
  const int max_power = nilpotency_bound(*this);
  for (int m = 1; m <= max_power; ++m) {
    power = power * *this;
    fact *= m;
    sum = sum + power.scaled(Rat(1) / fact);
  }
  return sum;
}

Series3 Series3::reciprocal() const {
  if (c_[0] != 1) throw ConfigError("reciprocal needs constant term 1");
  // 1/(1 - g) = sum g^m with g = 1 - this, which has no constant term.
  Series3 g = constant(Rat(1), cx_, cy_, cz_) - *this;
  Series3 sum = constant(Rat(1), cx_, cy_, cz_);
  Series3 power = constant(Rat(1), cx_, cy_, cz_);
  const int max_power = nilpotency_bound(g);
  for (int m = 1; m <= max_power; ++m) {
    power = power * g;
    sum = sum + power;
  }
  return sum;
}

Series3 Series3::dz() const {
  Series3 s(cx_, cy_, cz_);
  for (int dx = 0; dx <= cx_; ++dx) {
    for (int dy = 0; dy <= cy_; ++dy) {
      for (int dzp = 1; dzp <= cz_; ++dzp) {
        s.c_[s.idx(dx, dy, dzp - 1)] = c_[idx(dx, dy, dzp)] * dzp;
      }
    }
  }
  return s;
}

Series3 geometric_series(int variable, int cx, int cy, int cz) {
  Series3 s(cx, cy, cz);
  const int cap = variable == 0 ? cx : variable == 1 ? cy : cz;
  for (int d = 0; d <= cap; ++d) {
    const int dx = variable == 0 ? d : 0;
    const int dy = variable == 1 ? d : 0;
    const int dzp = variable == 2 ? d : 0;
    s.set_coeff(dx, dy, dzp, Rat(1));
  }
  return s;
}

}  // namespace trop

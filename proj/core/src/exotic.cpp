#include "uconf/exotic.hpp"

#include <algorithm>
#include <stdexcept>

namespace uconf {

ColorCountSet ColorCountSet::explicit_set(std::vector<MultiIndex> points) {
  if (points.empty()) throw std::invalid_argument("color set: explicit list may not be empty");
  const int vars = points.front().vars();
  bool has_zero = false;
  for (const MultiIndex& p : points) {
    check_same_vars(p, points.front());
    has_zero = has_zero || p.is_zero();
  }
  if (!has_zero) throw std::invalid_argument("color set: 0 must be a member");
  ColorCountSet set(Kind::Explicit, vars);
  set.points_ = std::move(points);
  return set;
}

ColorCountSet ColorCountSet::max_counts(std::vector<int> caps) {
  if (caps.empty()) throw std::invalid_argument("color set: caps may not be empty");
  for (int cap : caps) {
    if (cap < 1) throw std::invalid_argument("color set: caps must be >= 1 so that 0 is a member");
  }
  ColorCountSet set(Kind::MaxCounts, static_cast<int>(caps.size()));
  set.caps_ = std::move(caps);
  return set;
}

ColorCountSet ColorCountSet::axes_only(int vars) {
  if (vars < 1) throw std::invalid_argument("color set: needs at least one color");
  return ColorCountSet(Kind::AxesOnly, vars);
}

ColorCountSet ColorCountSet::nested(int vars) {
  if (vars < 1) throw std::invalid_argument("color set: needs at least one color");
  return ColorCountSet(Kind::Nested, vars);
}

ColorCountSet ColorCountSet::full(int vars) {
  if (vars < 1) throw std::invalid_argument("color set: needs at least one color");
  return ColorCountSet(Kind::Full, vars);
}

bool ColorCountSet::contains(const MultiIndex& c) const {
  if (c.vars() != vars_) throw std::invalid_argument("color set: arity mismatch");
  switch (kind_) {
    case Kind::Explicit:
      return std::find(points_.begin(), points_.end(), c) != points_.end();
    case Kind::MaxCounts:
      for (int i = 0; i < vars_; ++i) {
        if (c[i] >= caps_[static_cast<std::size_t>(i)]) return false;
      }
      return true;
    case Kind::AxesOnly: {
      int nonzero = 0;
      for (int i = 0; i < vars_; ++i) nonzero += (c[i] != 0);
      return nonzero <= 1;
    }
    case Kind::Nested:
      for (int i = 0; i + 1 < vars_; ++i) {
        if (c[i] > c[i + 1]) return false;
      }
      return true;
    case Kind::Full:
      return true;
  }
  return false;
}

ColorCountSet simple_set() {
  return ColorCountSet::explicit_set({MultiIndex{0}, MultiIndex{1}});
}

ColorCountSet symmetric_set() { return ColorCountSet::full(1); }

ColorCountSet no_m_equal_set(int m) {
  if (m < 2) throw std::invalid_argument("no_m_equal: m must be >= 2");
  return ColorCountSet::max_counts({m});
}

ColorCountSet apartheid_set(int vars) { return ColorCountSet::axes_only(vars); }

ColorCountSet nested_set(int vars) { return ColorCountSet::nested(vars); }

IntSeries color_count_series(const ColorCountSet& set, const DegreeBound& bound) {
  if (bound.vars() != set.vars()) throw std::invalid_argument("color set: arity mismatch with bound");
  IntSeries f(bound);
  for (const MultiIndex& c : bound.indices()) {
    if (set.contains(c)) f.set(c, 1);
  }
  return f;
}

}  // namespace uconf

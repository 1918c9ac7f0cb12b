#pragma once

#include <vector>

#include "uconf/multi_index.hpp"
#include "uconf/series.hpp"

namespace uconf {

/// A set I of permitted color counts: a subset of Z_{>=0}^r containing 0.
/// Infinite sets are represented by constraint kinds rather than enumeration;
/// only membership within a box is ever needed.
class ColorCountSet {
 public:
  enum class Kind {
    Explicit,   // a finite list of color counts
    MaxCounts,  // per-color caps: c_i < cap_i
    AxesOnly,   // at most one nonzero coordinate
    Nested,     // c_1 <= c_2 <= ... <= c_r
    Full,       // all of Z_{>=0}^r
  };

  static ColorCountSet explicit_set(std::vector<MultiIndex> points);
  static ColorCountSet max_counts(std::vector<int> caps);
  static ColorCountSet axes_only(int vars);
  static ColorCountSet nested(int vars);
  static ColorCountSet full(int vars);

  Kind kind() const { return kind_; }
  int vars() const { return vars_; }
  const std::vector<MultiIndex>& points() const { return points_; }  // Explicit only
  const std::vector<int>& caps() const { return caps_; }             // MaxCounts only

  bool contains(const MultiIndex& c) const;

 private:
  ColorCountSet(Kind kind, int vars) : kind_(kind), vars_(vars) {}

  Kind kind_;
  int vars_;
  std::vector<MultiIndex> points_;
  std::vector<int> caps_;
};

// The named sets.
ColorCountSet simple_set();               // {0, 1}: plain unordered configurations
ColorCountSet symmetric_set();            // all of Z_{>=0}: symmetric products
ColorCountSet no_m_equal_set(int m);      // {0, ..., m-1}: < m points may collide
ColorCountSet apartheid_set(int vars);    // different colors may not collide
ColorCountSet nested_set(int vars);       // chains c_1 <= ... <= c_r

/// C_I(t) = sum_{c in I} t^c within the box: coefficient 1 exactly on the
/// members of I.  Constant term is always 1, so the result is a valid base
/// for factorize and pow.
IntSeries color_count_series(const ColorCountSet& set, const DegreeBound& bound);

}  // namespace uconf

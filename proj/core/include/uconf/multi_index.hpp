#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace uconf {

/// A multidegree: an element of Z_{>=0}^r.  Used as a color count, a
/// monomial exponent of t_1..t_r, and a truncation limit.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
      if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
    }
    if (entries_.empty()) throw std::invalid_argument("MultiIndex: needs at least one entry");
  }
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  static MultiIndex zero(int vars) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(vars), 0)); }

  int vars() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  int total() const {
    int s = 0;
    for (int e : entries_) s += e;
    return s;
  }
  bool is_zero() const { return total() == 0; }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiIndex& k) {
  return os << k.to_string();
}

inline void check_same_vars(const MultiIndex& a, const MultiIndex& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("MultiIndex: arity mismatch");
}

/// Componentwise partial order: a <= b iff a_i <= b_i for all i.
inline bool dominated_by(const MultiIndex& a, const MultiIndex& b) {
  check_same_vars(a, b);
  for (int i = 0; i < a.vars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  check_same_vars(a, b);
  std::vector<int> e(static_cast<std::size_t>(a.vars()));
  for (int i = 0; i < a.vars(); ++i) e[static_cast<std::size_t>(i)] = a[i] + b[i];
  return MultiIndex(std::move(e));
}

/// Componentwise difference; requires b <= a.
inline MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (!dominated_by(b, a)) throw std::invalid_argument("MultiIndex: subtraction would go negative");
  std::vector<int> e(static_cast<std::size_t>(a.vars()));
  for (int i = 0; i < a.vars(); ++i) e[static_cast<std::size_t>(i)] = a[i] - b[i];
  return MultiIndex(std::move(e));
}

/// Graded-lexicographic order: compare total degree first, then entries
/// lexicographically.  This is the processing and output order everywhere.
inline bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
  check_same_vars(a, b);
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return a.entries() < b.entries();
}

struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grlex_less(a, b); }
};

/// The truncation box: every computation is exact for all k <= limit
/// componentwise.  Also owns the dense (row-major) layout of the box.
class DegreeBound {
 public:
  explicit DegreeBound(MultiIndex limit) : limit_(std::move(limit)) {}
  static DegreeBound uniform(int vars, int limit) {
    return DegreeBound(MultiIndex(std::vector<int>(static_cast<std::size_t>(vars), limit)));
  }

  int vars() const { return limit_.vars(); }
  const MultiIndex& limit() const { return limit_; }

  bool contains(const MultiIndex& k) const { return dominated_by(k, limit_); }

  std::size_t box_size() const {
    std::size_t n = 1;
    for (int i = 0; i < vars(); ++i) n *= static_cast<std::size_t>(limit_[i] + 1);
    return n;
  }

  /// Row-major flat offset (last variable fastest).
  std::size_t flat_index(const MultiIndex& k) const {
    if (!contains(k)) throw std::invalid_argument("DegreeBound: index outside the box");
    std::size_t off = 0;
    for (int i = 0; i < vars(); ++i) off = off * static_cast<std::size_t>(limit_[i] + 1) + static_cast<std::size_t>(k[i]);
    return off;
  }

  /// All indices of the box in row-major order (matches flat offsets 0..box_size-1).
  std::vector<MultiIndex> indices() const;
  /// All indices of the box in graded-lexicographic ascending order.
  std::vector<MultiIndex> indices_grlex() const;

  friend bool operator==(const DegreeBound& a, const DegreeBound& b) { return a.limit_ == b.limit_; }
  friend bool operator!=(const DegreeBound& a, const DegreeBound& b) { return !(a == b); }

 private:
  MultiIndex limit_;
};

inline void check_same_bound(const DegreeBound& a, const DegreeBound& b) {
  if (a != b) throw std::invalid_argument("DegreeBound: bound mismatch");
}

inline std::vector<MultiIndex> DegreeBound::indices() const {
  std::vector<MultiIndex> out;
  out.reserve(box_size());
  std::vector<int> k(static_cast<std::size_t>(vars()), 0);
  for (;;) {
    out.push_back(MultiIndex(k));
    // row-major odometer, last variable fastest
    int i = vars() - 1;
    while (i >= 0 && k[static_cast<std::size_t>(i)] == limit_[i]) {
      k[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++k[static_cast<std::size_t>(i)];
  }
  return out;
}

inline std::vector<MultiIndex> DegreeBound::indices_grlex() const {
  std::vector<MultiIndex> out = indices();
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace uconf

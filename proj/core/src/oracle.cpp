#include "uconf/oracle.hpp"

#include <stdexcept>

namespace uconf {

CollectionCensus enumerate_collections(std::int64_t points, const ColorCountSet& set,
                                       const DegreeBound& bound) {
  if (points < 0) throw std::invalid_argument("enumerate_collections: negative point count");
  if (bound.vars() != set.vars()) {
    throw std::invalid_argument("enumerate_collections: arity mismatch");
  }

  // The color counts a single point may carry.
  std::vector<MultiIndex> choices;
  for (const MultiIndex& c : bound.indices()) {
    if (set.contains(c)) choices.push_back(c);
  }

  CollectionCensus census{IntSeries(bound)};
  // Assign a choice to each point in turn; prune once the running total
  // leaves the box (it can only grow).
  auto assign = [&](auto&& self, std::int64_t point, const MultiIndex& total) -> void {
    if (point == points) {
      census.counts.set(total, census.counts.at(total) + 1);
      return;
    }
    for (const MultiIndex& c : choices) {
      MultiIndex next = total + c;
      if (bound.contains(next)) self(self, point + 1, next);
    }
  };
  assign(assign, 0, MultiIndex::zero(bound.vars()));
  return census;
}

std::vector<MultiIndex> census_mismatches(const CollectionCensus& census, const IntSeries& f) {
  check_same_bound(census.counts.bound(), f.bound());
  std::vector<MultiIndex> bad;
  for (const MultiIndex& k : f.bound().indices_grlex()) {
    if (census.counts.at(k) != f.at(k)) bad.push_back(k);
  }
  return bad;
}

bool census_matches_series(const CollectionCensus& census, const IntSeries& f) {
  return census_mismatches(census, f).empty();
}

}  // namespace uconf

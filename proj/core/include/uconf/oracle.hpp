#pragma once

#include <cstdint>
#include <vector>

#include "uconf/exotic.hpp"
#include "uconf/multi_index.hpp"
#include "uconf/series.hpp"

namespace uconf {

/// Brute-force census: for each multidegree k <= bound, the number of
/// I-collections of multidegree k on a discrete space of labeled points.
/// counts.at(0) is always 1 (the empty collection).
struct CollectionCensus {
  IntSeries counts;
};

/// Exhaustively enumerates the functions phi from `points` labeled points to
/// I intersected with the box (phi(x) = 0 meaning x is not in the collection)
/// and tallies them by total multidegree sum_x phi(x).
CollectionCensus enumerate_collections(std::int64_t points, const ColorCountSet& set,
                                       const DegreeBound& bound);

/// Multidegrees at which the census disagrees with the series coefficients,
/// in graded-lex order; empty means a perfect match.
std::vector<MultiIndex> census_mismatches(const CollectionCensus& census, const IntSeries& f);

bool census_matches_series(const CollectionCensus& census, const IntSeries& f);

}  // namespace uconf

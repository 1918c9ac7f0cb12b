#include "uconf/spaces.hpp"

#include <stdexcept>

namespace uconf {

SpaceDescriptor SpaceDescriptor::from_cells(std::vector<int> dims) {
  for (int d : dims) {
    if (d < 0) throw std::invalid_argument("space: negative cell dimension");
  }
  return SpaceDescriptor(CellComplex{std::move(dims)});
}

SpaceDescriptor SpaceDescriptor::from_points(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("space: negative point count");
  return SpaceDescriptor(FinitePoints{n});
}

bool SpaceDescriptor::has_hodge_deligne() const {
  return is<HodgeDeligne>() || is<FinitePoints>();
}

BivarPoly SpaceDescriptor::hodge_deligne() const {
  if (is<HodgeDeligne>()) return as<HodgeDeligne>().e;
  if (is<FinitePoints>()) return BivarPoly(BigInt(as<FinitePoints>().n));
  throw std::invalid_argument("space: no Hodge-Deligne polynomial is determined by this descriptor");
}

BigInt euler(const SpaceDescriptor& space) {
  if (space.is<SpaceDescriptor::EulerOnly>()) {
    return BigInt(space.as<SpaceDescriptor::EulerOnly>().chi);
  }
  if (space.is<SpaceDescriptor::HodgeDeligne>()) {
    return space.as<SpaceDescriptor::HodgeDeligne>().e.eval(1, 1);
  }
  if (space.is<SpaceDescriptor::FinitePoints>()) {
    return BigInt(space.as<SpaceDescriptor::FinitePoints>().n);
  }
  BigInt chi = 0;
  for (int d : space.as<SpaceDescriptor::CellComplex>().cell_dims) {
    chi += (d % 2 == 0) ? 1 : -1;
  }
  return chi;
}

IntSeries euler_series(const ColorCountSet& set, const SpaceDescriptor& space,
                       const DegreeBound& bound) {
  return pow(color_count_series(set, bound), euler(space));
}

PolySeries hodge_deligne_series(const ColorCountSet& set, const BivarPoly& e,
                                const DegreeBound& bound) {
  return pow(color_count_series(set, bound), e);
}

bool scissor_check(const ColorCountSet& set, const std::vector<SpaceDescriptor>& parts,
                   const SpaceDescriptor& whole, const DegreeBound& bound) {
  IntSeries product = IntSeries::one(bound);
  for (const SpaceDescriptor& part : parts) {
    product *= euler_series(set, part, bound);
  }
  return product == euler_series(set, whole, bound);
}

}  // namespace uconf

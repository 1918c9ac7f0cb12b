#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "uconf/bigint.hpp"
#include "uconf/exotic.hpp"
#include "uconf/poly.hpp"
#include "uconf/power.hpp"
#include "uconf/series.hpp"

namespace uconf {

/// A space known only through its additive invariants.  The configuration
/// series depend on nothing else, so nothing else is stored: no geometry, no
/// attaching maps.
class SpaceDescriptor {
 public:
  struct EulerOnly {
    std::int64_t chi;
  };
  struct HodgeDeligne {
    BivarPoly e;
  };
  struct CellComplex {
    std::vector<int> cell_dims;  // one entry per open cell
  };
  struct FinitePoints {
    std::int64_t n;
  };

  static SpaceDescriptor from_euler(std::int64_t chi) { return SpaceDescriptor(EulerOnly{chi}); }
  static SpaceDescriptor from_hodge_deligne(BivarPoly e) {
    return SpaceDescriptor(HodgeDeligne{std::move(e)});
  }
  static SpaceDescriptor from_cells(std::vector<int> dims);
  static SpaceDescriptor from_points(std::int64_t n);

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(value_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(value_);
  }

  /// True when a Hodge-Deligne polynomial is determined: the HodgeDeligne
  /// variant, or a finite point set (e = n).
  bool has_hodge_deligne() const;
  BivarPoly hodge_deligne() const;

 private:
  using Value = std::variant<EulerOnly, HodgeDeligne, CellComplex, FinitePoints>;
  explicit SpaceDescriptor(Value v) : value_(std::move(v)) {}
  Value value_;
};

/// The Euler characteristic of the descriptor: chi as given, e(1,1), the
/// signed cell count sum (-1)^dim, or the number of points.
BigInt euler(const SpaceDescriptor& space);

/// Generating series of the Euler characteristics of the configuration
/// spaces of I-collections on the space: C_I(t)^{chi}.  The coefficient of
/// t^k is the Euler characteristic of the space of I-collections of
/// multidegree k.
IntSeries euler_series(const ColorCountSet& set, const SpaceDescriptor& space,
                       const DegreeBound& bound);

/// Generating series of the Hodge-Deligne polynomials: C_I(t)^{e}.
PolySeries hodge_deligne_series(const ColorCountSet& set, const BivarPoly& e,
                                const DegreeBound& bound);

/// Checks the cut-and-paste consistency of the Euler series: the product of
/// the parts' series must equal the whole's series whenever the parts
/// partition the whole.
bool scissor_check(const ColorCountSet& set, const std::vector<SpaceDescriptor>& parts,
                   const SpaceDescriptor& whole, const DegreeBound& bound);

}  // namespace uconf

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nochka/arrangement.hpp"

namespace nochka {

/// Plane point with exact integer coordinates: x = alpha, y = codim.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

/// A deduplicated diagram point together with the flats witnessing it
/// (indices into the diagram's flats vector).
struct DiagramPoint {
  LatticePoint p;
  std::vector<std::size_t> witnesses;
};

/// Strict lower convex hull from (0,0) to the anchor, in increasing x.
/// Consecutive slopes strictly increase; points interior to a hull segment
/// are not vertices. Requires the anchor to have strictly larger x than any
/// other point and (0,0) to be present.
std::vector<LatticePoint> lower_hull(const std::vector<LatticePoint>& points,
                                     LatticePoint anchor);

/// Thrown when q <= 2n-k+1, so the weight construction does not apply.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when the arrangement is not in n-subgeneral position; carries the
/// violating flats.
class SubgeneralError : public std::runtime_error {
 public:
  SubgeneralError(std::string msg, std::vector<Flat> violations)
      : std::runtime_error(std::move(msg)), violations(std::move(violations)) {}
  std::vector<Flat> violations;
};

/// The diagram of an arrangement: all points (alpha(L), codim L) over
/// nonempty flats, the anchor X = (2n-k+1, k+1), the strict lower hull
/// P_0..P_s, X, the representative chain L_0 .. L_s, L_{s+1} = empty, and
/// the hull slopes. Invariants are asserted at construction.
struct NochkaDiagram {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t q = 0;
  std::vector<Flat> flats;          // closed_flats order
  std::vector<DiagramPoint> points; // deduplicated, sorted by (x, y)
  LatticePoint X;                   // (2n-k+1, k+1)
  std::vector<LatticePoint> hull;   // P_0 .. P_s, X
  std::vector<Flat> reps;           // L_0 .. L_s, L_{s+1} = empty flat
  std::vector<Rational> slopes;     // sigma_0 < ... < sigma_s

  std::size_t s() const { return hull.size() - 2; }
  Rational sigma() const { return slopes.back(); }

  std::pair<Rational, Rational> midpoint_W() const {
    return {Rational(X.x, 2), Rational(X.y, 2)};
  }
  /// y-value of the slope-1 line through (n, k) at a given x.
  Rational ell_y_at(const Rational& x) const {
    return x - Rational(static_cast<long>(n) - static_cast<long>(k));
  }
};

/// Builds the diagram. Throws HypothesisError when q <= 2n-k+1 and
/// SubgeneralError when some flat has alpha > codim + n - k; internal
/// invariant failures throw std::logic_error.
NochkaDiagram build_diagram(const Arrangement& arr);

/// Variant used by the representative-independence tests: at each hull
/// vertex j = 1..s, pick the witness flat listed at position choice[j-1]
/// instead of the default deterministic representative.
NochkaDiagram build_diagram_with_choices(const Arrangement& arr,
                                         const std::vector<std::size_t>& choices);

}  // namespace nochka

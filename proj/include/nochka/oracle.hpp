#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nochka/weights.hpp"

namespace nochka {
namespace oracle {

struct Failure {
  std::string witness;
  std::string expected;
  std::string actual;
};

struct OracleReport {
  std::string check;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

/// Strict lower hull straight from the definition: a point is a vertex iff
/// no other point below it at the same x and no straddling pair puts it on
/// or above their chord. O(m^3); must agree with lower_hull exactly.
std::vector<LatticePoint> naive_hull(const std::vector<LatticePoint>& points,
                                     LatticePoint anchor);

/// Samples random flat pairs (A, B) and checks, with alpha recomputed from
/// the covectors, that alpha(A+B) + alpha(A∩B) >= alpha(A) + alpha(B) and
/// that codim is exactly modular.
OracleReport submodularity_check(const Arrangement& arr, std::size_t trials,
                                 std::uint64_t seed);

/// Samples random nonempty subspaces L (not just flats) and checks the
/// weight-sum bound sum_{i: H_i >= L} omega_i <= codim L directly.
OracleReport closure_domination_check(const Arrangement& arr,
                                      const std::vector<Rational>& omegas,
                                      std::size_t trials, std::uint64_t seed);

/// Replays the intermediate inequalities behind the weight construction on
/// every flat: the disjoint case (codim L + codim L_s >= k+1 and
/// 1/sigma >= alpha(L)/codim L) and the chain case (P(L∩L_{j-1}) on or
/// above the segment line, with the telescoping weight identity).
OracleReport proof_chain_check(const Arrangement& arr, const NochkaDiagram& diagram,
                               const WeightCertificate& cert);

}  // namespace oracle
}  // namespace nochka

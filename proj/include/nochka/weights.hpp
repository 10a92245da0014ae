#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nochka/diagram.hpp"

namespace nochka {

/// One checked condition: pass iff slack >= 0 (for equalities, slack == 0).
struct Verdict {
  bool pass = false;
  Rational slack;
};

struct FlatSumVerdict {
  bool pass = false;
  Rational slack;                       // smallest codim L - sum of weights
  std::vector<std::size_t> worst_flat;  // index set attaining it (0-based)
};

struct CertificateVerdicts {
  Verdict nonneg;           // min omega_i >= 0
  Verdict bounded;          // max omega_i <= tau
  FlatSumVerdict flat_sums; // per-flat weight sums vs codim
  Verdict sigma_equals_tau;
  Verdict tau_consistent;   // declared tau matches the defining formula
  Verdict classic_bound;    // tau <= (k+1)/(n+1)
  Verdict toda_bound;       // tau <= k/n

  bool all_pass() const {
    return nonneg.pass && bounded.pass && flat_sums.pass && sigma_equals_tau.pass &&
           tau_consistent.pass && classic_bound.pass && toda_bound.pass;
  }
  std::vector<std::string> failed_names() const;
};

/// The full constructed object: weights, final slope sigma, tau, the hull
/// (P_0..P_s, X), the representative index sets L_0..L_s, and the verdicts.
struct WeightCertificate {
  std::vector<Rational> omegas;
  Rational sigma;
  Rational tau;
  std::vector<LatticePoint> hull;
  std::vector<std::vector<std::size_t>> representatives;  // 0-based index sets
  std::vector<Rational> slopes;
  std::vector<std::size_t> assignment;  // per hyperplane: smallest j with H_i >= L_j
  CertificateVerdicts verdicts;
};

/// Weights from the diagram: omega_i is the slope of P_{j-1}P_j for the
/// smallest j >= 1 with H_i containing L_j; the empty L_{s+1} catches every
/// hyperplane, giving omega_i = sigma as the fallback. All verdicts must
/// pass on a valid input; a failing verdict here is an internal bug.
WeightCertificate compute_weights(const Arrangement& arr);
WeightCertificate compute_weights(const Arrangement& arr, const NochkaDiagram& diagram);

/// Re-checks every condition from scratch, given only the arrangement and
/// the weights (plus the declared tau/sigma when verifying a stored
/// certificate). Independent of the constructor: works on external weights.
CertificateVerdicts verify_certificate(const Arrangement& arr,
                                       const std::vector<Rational>& omegas,
                                       const std::optional<Rational>& declared_tau = {},
                                       const std::optional<Rational>& declared_sigma = {});

/// tau recomputed by the defining formula (sum omega - k - 1)/(q - 2n + k - 1).
Rational tau_formula(const Arrangement& arr, const std::vector<Rational>& omegas);

struct TodaStep {
  std::string name;
  bool pass = false;
  Rational slack;
};

struct TodaReport {
  bool derivation_path = false;  // true when s >= 1 and the stepwise route ran
  std::vector<TodaStep> steps;
  bool pass = false;
};

/// Verifies tau <= k/n, re-deriving it through the intermediate
/// inequalities when the hull has an interior vertex; for s = 0 the ratio
/// is evaluated directly alongside the classic (k+1)/(n+1) bound.
TodaReport toda_check(const NochkaDiagram& diagram);

}  // namespace nochka

#include "nochka/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace nochka {

std::vector<std::string> CertificateVerdicts::failed_names() const {
  std::vector<std::string> names;
  if (!nonneg.pass) names.emplace_back("nonneg");
  if (!bounded.pass) names.emplace_back("bounded");
  if (!flat_sums.pass) names.emplace_back("flat_sums");
  if (!sigma_equals_tau.pass) names.emplace_back("sigma_equals_tau");
  if (!tau_consistent.pass) names.emplace_back("tau_consistent");
  if (!classic_bound.pass) names.emplace_back("classic_bound");
  if (!toda_bound.pass) names.emplace_back("toda_bound");
  return names;
}

Rational tau_formula(const Arrangement& arr, const std::vector<Rational>& omegas) {
  const long denom = static_cast<long>(arr.q()) - 2 * static_cast<long>(arr.n) +
                     static_cast<long>(arr.k) - 1;
  if (denom <= 0) throw HypothesisError("tau undefined: need q > 2n-k+1");
  Rational sum;
  for (const auto& w : omegas) sum += w;
  return (sum - Rational(static_cast<long>(arr.k) + 1)) / Rational(denom);
}

CertificateVerdicts verify_certificate(const Arrangement& arr,
                                       const std::vector<Rational>& omegas,
                                       const std::optional<Rational>& declared_tau,
                                       const std::optional<Rational>& declared_sigma) {
  if (omegas.size() != arr.q())
    throw std::invalid_argument("verify_certificate: weight count != q");

  CertificateVerdicts v;
  const Rational tau = tau_formula(arr, omegas);

  Rational min_w = omegas.front(), max_w = omegas.front();
  for (const auto& w : omegas) {
    min_w = std::min(min_w, w);
    max_w = std::max(max_w, w);
  }
  v.nonneg = {min_w >= Rational(0), min_w};

  // The bound is checked against the defining formula and, when a
  // certificate declares its own tau, against that declaration as well.
  Rational bound = tau;
  if (declared_tau) bound = std::min(bound, *declared_tau);
  v.bounded = {max_w <= bound, bound - max_w};

  v.tau_consistent = {!declared_tau || *declared_tau == tau,
                      declared_tau ? tau - *declared_tau : Rational(0)};
  v.sigma_equals_tau = {!declared_sigma || *declared_sigma == tau,
                        declared_sigma ? tau - *declared_sigma : Rational(0)};

  // Ties on slack prefer the deeper flat, so the trivial P^k witness never
  // shadows a genuinely tight one.
  bool first = true;
  std::size_t worst_codim = 0;
  for (const auto& flat : closed_flats(arr)) {
    Rational sum;
    for (std::size_t i : flat.index_set) sum += omegas[i];
    const Rational slack = Rational(static_cast<long>(flat.codim)) - sum;
    if (first || slack < v.flat_sums.slack ||
        (slack == v.flat_sums.slack && flat.codim > worst_codim)) {
      v.flat_sums.slack = slack;
      v.flat_sums.worst_flat = flat.index_set;
      worst_codim = flat.codim;
      first = false;
    }
  }
  v.flat_sums.pass = v.flat_sums.slack >= Rational(0);

  const Rational classic = Rational(static_cast<long>(arr.k) + 1, static_cast<long>(arr.n) + 1);
  const Rational toda = Rational(static_cast<long>(arr.k), static_cast<long>(arr.n));
  v.classic_bound = {tau <= classic, classic - tau};
  v.toda_bound = {tau <= toda, toda - tau};
  return v;
}

WeightCertificate compute_weights(const Arrangement& arr) {
  return compute_weights(arr, build_diagram(arr));
}

WeightCertificate compute_weights(const Arrangement& arr, const NochkaDiagram& d) {
  WeightCertificate cert;
  cert.hull = d.hull;
  cert.slopes = d.slopes;
  cert.sigma = d.sigma();

  for (std::size_t j = 0; j + 1 < d.reps.size(); ++j)
    cert.representatives.push_back(d.reps[j].index_set);

  for (std::size_t i = 0; i < arr.q(); ++i) {
    std::size_t j = 1;
    while (!contains(arr.hyperplanes[i].covector, d.reps[j].ann)) ++j;
    cert.assignment.push_back(j);
    cert.omegas.push_back(d.slopes[j - 1]);
  }

  cert.tau = tau_formula(arr, cert.omegas);
  cert.verdicts = verify_certificate(arr, cert.omegas, cert.tau, cert.sigma);
  if (!cert.verdicts.all_pass())
    throw std::logic_error("compute_weights: a constructed certificate failed verification");
  return cert;
}

TodaReport toda_check(const NochkaDiagram& d) {
  TodaReport report;
  const long k = static_cast<long>(d.k), n = static_cast<long>(d.n);
  const Rational classic(k + 1, n + 1);
  const Rational toda(k, n);
  const Rational sigma = d.sigma();

  report.steps.push_back({"classic_bound", sigma <= classic, classic - sigma});
  if (d.s() == 0) {
    report.derivation_path = false;
    report.steps.push_back({"toda_direct", sigma <= toda, toda - sigma});
  } else {
    report.derivation_path = true;
    const auto [x, y] = d.hull[d.s()];  // P_s
    // k*x - k*y <= k*(n-k), from x <= y + n - k.
    const Rational s1 = Rational(k * (n - k)) - Rational(k * x - k * y);
    report.steps.push_back({"position_times_k", s1 >= Rational(0), s1});
    // -(n-k)*y <= -(n-k), from y >= 1.
    const Rational s2 = Rational((n - k) * (y - 1));
    report.steps.push_back({"codim_at_least_one", s2 >= Rational(0), s2});
    // Sum: k*x - n*y <= (k-1)*(n-k).
    const Rational s3 = Rational((k - 1) * (n - k)) - Rational(k * x - n * y);
    report.steps.push_back({"combined", s3 >= Rational(0), s3});
    // Equivalent ratio form: (k+1-y)/(2n-k+1-x) <= k/n, and that ratio is sigma.
    const Rational ratio = Rational(k + 1 - y) / Rational(2 * n - k + 1 - x);
    if (ratio != sigma) throw std::logic_error("toda_check: final slope mismatch");
    report.steps.push_back({"toda_ratio", ratio <= toda, toda - ratio});
  }
  report.pass = std::all_of(report.steps.begin(), report.steps.end(),
                            [](const TodaStep& s) { return s.pass; });
  return report;
}

}  // namespace nochka

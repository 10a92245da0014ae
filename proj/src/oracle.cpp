#include "nochka/oracle.hpp"

#include <algorithm>

#include "nochka/rng.hpp"

namespace nochka {
namespace oracle {

namespace {

// Alpha straight from the definition: count covectors containing L.
std::size_t alpha_of(const Arrangement& arr, const Annihilator& ann) {
  std::size_t a = 0;
  for (const auto& h : arr.hyperplanes)
    if (contains(h.covector, ann)) ++a;
  return a;
}

Rational weight_sum_over(const Arrangement& arr, const Annihilator& ann,
                         const std::vector<Rational>& omegas) {
  Rational sum;
  for (std::size_t i = 0; i < arr.q(); ++i)
    if (contains(arr.hyperplanes[i].covector, ann)) sum += omegas[i];
  return sum;
}

std::string index_set_str(const std::vector<std::size_t>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i] + 1);
  return s + "}";
}

}  // namespace

std::vector<LatticePoint> naive_hull(const std::vector<LatticePoint>& points,
                                     LatticePoint anchor) {
  std::vector<LatticePoint> pts = points;
  pts.push_back(anchor);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<LatticePoint> hull;
  for (const auto& p : pts) {
    bool vertex = true;
    for (const auto& q : pts)
      if (q.x == p.x && q.y < p.y) vertex = false;
    for (const auto& a : pts) {
      if (!vertex) break;
      if (a.x >= p.x) continue;
      for (const auto& b : pts) {
        if (b.x <= p.x) continue;
        // p on or above the chord a-b disqualifies it.
        if ((p.y - a.y) * (b.x - a.x) >= (b.y - a.y) * (p.x - a.x)) {
          vertex = false;
          break;
        }
      }
    }
    if (vertex) hull.push_back(p);
  }
  return hull;
}

OracleReport submodularity_check(const Arrangement& arr, std::size_t trials,
                                 std::uint64_t seed) {
  OracleReport report{.check = "submodularity"};
  const auto flats = closed_flats(arr);
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng trial = rng.fork(t);
    const auto& a = flats[static_cast<std::size_t>(trial.uniform(0, flats.size() - 1))];
    const auto& b = flats[static_cast<std::size_t>(trial.uniform(0, flats.size() - 1))];
    const auto sum = ann_of_sum(a.ann, b.ann);
    const auto inter = ann_of_intersection(a.ann, b.ann);
    const std::size_t lhs_alpha = alpha_of(arr, sum) + alpha_of(arr, inter);
    const std::size_t rhs_alpha = alpha_of(arr, a.ann) + alpha_of(arr, b.ann);
    ++report.instances;
    if (lhs_alpha < rhs_alpha)
      report.failures.push_back({"alpha submodularity at " + index_set_str(a.index_set) +
                                     " vs " + index_set_str(b.index_set),
                                 ">= " + std::to_string(rhs_alpha), std::to_string(lhs_alpha)});
    const std::size_t lhs_codim = codim(sum) + codim(inter);
    const std::size_t rhs_codim = codim(a.ann) + codim(b.ann);
    if (lhs_codim != rhs_codim)
      report.failures.push_back({"codim modularity at " + index_set_str(a.index_set) +
                                     " vs " + index_set_str(b.index_set),
                                 std::to_string(rhs_codim), std::to_string(lhs_codim)});
  }
  return report;
}

OracleReport closure_domination_check(const Arrangement& arr,
                                      const std::vector<Rational>& omegas,
                                      std::size_t trials, std::uint64_t seed) {
  OracleReport report{.check = "closure_domination"};
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng trial = rng.fork(t);
    const auto rows = static_cast<std::size_t>(trial.uniform(0, arr.k));
    std::vector<std::vector<Rational>> basis(rows);
    for (auto& row : basis) {
      row.resize(arr.ambient_dim());
      for (auto& c : row) c = Rational(trial.uniform(-5, 5));
    }
    // Degenerate draws (zero rows, dependent rows) just sample another codim.
    const auto ann = Annihilator::from_rows(arr.ambient_dim(), basis);
    const Rational sum = weight_sum_over(arr, ann, omegas);
    const Rational bound(static_cast<long>(codim(ann)));
    ++report.instances;
    if (!(sum <= bound))
      report.failures.push_back({"weight sum over subspace with basis " + ann.key(),
                                 "<= " + bound.str(), sum.str()});
  }
  return report;
}

OracleReport proof_chain_check(const Arrangement& arr, const NochkaDiagram& d,
                               const WeightCertificate& cert) {
  OracleReport report{.check = "proof_chain"};
  const std::size_t s = d.s();
  const Flat& last = d.reps[s];
  const Rational sigma = cert.sigma;
  const Rational k_plus_1(static_cast<long>(arr.k) + 1);

  for (const auto& flat : d.flats) {
    if (ann_of_intersection(flat.ann, last.ann).is_empty()) {
      // Disjoint case: codim L + codim L_s >= k+1, then 1/sigma >= alpha/codim.
      ++report.instances;
      const Rational codim_sum(static_cast<long>(flat.codim + last.codim));
      if (!(codim_sum >= k_plus_1))
        report.failures.push_back({"codim sum at " + index_set_str(flat.index_set),
                                   ">= " + k_plus_1.str(), codim_sum.str()});
      const Rational lhs(static_cast<long>(flat.codim));
      const Rational rhs = sigma * Rational(static_cast<long>(alpha_of(arr, flat.ann)));
      if (!(lhs >= rhs))
        report.failures.push_back({"slope ratio at " + index_set_str(flat.index_set),
                                   "codim >= sigma*alpha = " + rhs.str(), lhs.str()});
    }

    for (std::size_t j = 1; j <= s; ++j) {
      if (!flat.ann.contains_subspace(d.reps[j].ann)) continue;
      ++report.instances;
      const Flat& prev = d.reps[j - 1];
      const auto meet = ann_of_intersection(flat.ann, prev.ann);
      const Rational slope = d.slopes[j - 1];
      const Rational meet_alpha(static_cast<long>(alpha_of(arr, meet)));
      const Rational meet_codim(static_cast<long>(codim(meet)));
      const Rational prev_alpha(static_cast<long>(alpha_of(arr, prev.ann)));
      const Rational prev_codim(static_cast<long>(codim(prev.ann)));

      // P(L ∩ L_{j-1}) on or above the line P_{j-1} P_j.
      if (!(meet_codim - prev_codim >= slope * (meet_alpha - prev_alpha)))
        report.failures.push_back(
            {"point below segment " + std::to_string(j - 1) + "-" + std::to_string(j) +
                 " at " + index_set_str(flat.index_set),
             ">= " + (slope * (meet_alpha - prev_alpha)).str(),
             (meet_codim - prev_codim).str()});

      // Telescoping weight identity, then the inequality the argument uses.
      const Rational sum_meet = weight_sum_over(arr, meet, cert.omegas);
      const Rational sum_prev = weight_sum_over(arr, prev.ann, cert.omegas);
      const Rational expected = slope * (meet_alpha - prev_alpha);
      if (sum_meet - sum_prev != expected)
        report.failures.push_back(
            {"weight identity at " + index_set_str(flat.index_set) + ", j = " + std::to_string(j),
             expected.str(), (sum_meet - sum_prev).str()});
      if (!(sum_meet - sum_prev <= meet_codim - prev_codim))
        report.failures.push_back(
            {"weight increment bound at " + index_set_str(flat.index_set) + ", j = " +
                 std::to_string(j),
             "<= " + (meet_codim - prev_codim).str(), (sum_meet - sum_prev).str()});
    }
  }
  return report;
}

}  // namespace oracle
}  // namespace nochka

#include "nochka/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nochka {

namespace {

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Annihilator hyperplane_ann(const Arrangement& arr, std::size_t i) {
  return Annihilator::from_rows(arr.ambient_dim(), {arr.hyperplanes[i].covector});
}

}  // namespace

Hyperplane Hyperplane::normalized(std::vector<Rational> covector) {
  std::size_t p = 0;
  while (p < covector.size() && covector[p].is_zero()) ++p;
  if (p == covector.size()) throw std::invalid_argument("Hyperplane: zero covector");
  const Rational lead = covector[p];
  for (auto& c : covector) c /= lead;
  return Hyperplane{std::move(covector)};
}

std::vector<ValidationIssue> validate(const Arrangement& arr) {
  std::vector<ValidationIssue> issues;
  if (arr.k < 1) issues.push_back({std::nullopt, "k must be at least 1"});
  if (arr.k > arr.n) issues.push_back({std::nullopt, "k exceeds n"});
  if (arr.q() == 0) issues.push_back({std::nullopt, "arrangement has no hyperplanes"});
  for (std::size_t i = 0; i < arr.q(); ++i) {
    const auto& cov = arr.hyperplanes[i].covector;
    if (cov.size() != arr.ambient_dim()) {
      issues.push_back({i + 1, "covector length must be k+1"});
      continue;
    }
    if (all_zero(cov)) issues.push_back({i + 1, "covector is zero"});
  }
  return issues;
}

Flat empty_flat(const Arrangement& arr) {
  Flat f;
  f.index_set.resize(arr.q());
  for (std::size_t i = 0; i < arr.q(); ++i) f.index_set[i] = i;
  f.ann = Annihilator::empty_space(arr.ambient_dim());
  f.alpha = arr.q();
  f.codim = arr.k + 1;
  return f;
}

std::vector<Flat> closed_flats(const Arrangement& arr) {
  if (!validate(arr).empty())
    throw std::invalid_argument("closed_flats: arrangement fails validation");

  std::map<std::string, Flat> seen;
  const auto close = [&](const Annihilator& ann) {
    Flat f;
    f.ann = ann;
    for (std::size_t i = 0; i < arr.q(); ++i)
      if (contains(arr.hyperplanes[i].covector, ann)) f.index_set.push_back(i);
    f.alpha = f.index_set.size();
    f.codim = codim(ann);
    return f;
  };

  std::vector<Flat> frontier{close(Annihilator::whole_space(arr.ambient_dim()))};
  seen.emplace(frontier.front().ann.key(), frontier.front());
  while (!frontier.empty()) {
    std::vector<Flat> next;
    for (const auto& flat : frontier) {
      for (std::size_t i = 0; i < arr.q(); ++i) {
        if (std::binary_search(flat.index_set.begin(), flat.index_set.end(), i)) continue;
        const auto extended = ann_of_intersection(flat.ann, hyperplane_ann(arr, i));
        if (extended.is_empty()) continue;
        auto key = extended.key();
        if (seen.contains(key)) continue;
        Flat f = close(extended);
        seen.emplace(std::move(key), f);
        next.push_back(std::move(f));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Flat> flats;
  flats.reserve(seen.size());
  for (auto& [_, f] : seen) flats.push_back(std::move(f));
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return a.index_set < b.index_set;
  });
  return flats;
}

SubgeneralReport check_subgeneral(const Arrangement& arr) {
  SubgeneralReport report;
  for (const auto& flat : closed_flats(arr))
    if (flat.alpha > flat.codim + arr.n - arr.k) report.violations.push_back(flat);
  report.ok = report.violations.empty();
  return report;
}

GeneralPositionResult check_general_position(const std::vector<Hyperplane>& hyps,
                                             std::size_t n) {
  GeneralPositionResult res;
  const std::size_t q = hyps.size();
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      if (hyps[i] == hyps[j]) {
        res.duplicate_pair = {i, j};
        return res;
      }

  // If every subset of size min(q, n+1) has full rank, all smaller subsets
  // are independent as well.
  const std::size_t m = std::min(q, n + 1);
  std::vector<std::size_t> subset(m);
  for (std::size_t i = 0; i < m; ++i) subset[i] = i;
  while (true) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(m);
    for (std::size_t idx : subset) rows.push_back(hyps[idx].covector);
    if (rank(QMatrix::from_rows(rows)) < m) {
      res.dependent_subset = subset;
      return res;
    }
    // next combination
    std::size_t i = m;
    while (i > 0 && subset[i - 1] == q - m + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < m; ++j) subset[j] = subset[j - 1] + 1;
  }
  res.ok = true;
  return res;
}

}  // namespace nochka

#include "nochka/diagram.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace nochka {

namespace {

std::int64_t cross(LatticePoint o, LatticePoint a, LatticePoint b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// On or above the (non-vertical) line through a and b.
bool on_or_above(LatticePoint p, LatticePoint a, LatticePoint b) {
  return (p.y - a.y) * (b.x - a.x) >= (b.y - a.y) * (p.x - a.x);
}

}  // namespace

std::vector<LatticePoint> lower_hull(const std::vector<LatticePoint>& points,
                                     LatticePoint anchor) {
  std::vector<LatticePoint> pts = points;
  pts.push_back(anchor);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<LatticePoint> hull;
  for (const auto& p : pts) {
    // Popping on cross <= 0 keeps strict vertices only.
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

namespace {

NochkaDiagram build_impl(const Arrangement& arr,
                         const std::vector<std::size_t>* choices) {
  if (!validate(arr).empty())
    throw std::invalid_argument("build_diagram: arrangement fails validation");
  if (arr.q() <= 2 * arr.n - arr.k + 1)
    throw HypothesisError("insufficient hyperplanes: need q > 2n-k+1, got q = " +
                          std::to_string(arr.q()) + " with 2n-k+1 = " +
                          std::to_string(2 * arr.n - arr.k + 1));

  NochkaDiagram d;
  d.k = arr.k;
  d.n = arr.n;
  d.q = arr.q();
  d.flats = closed_flats(arr);

  std::vector<Flat> violations;
  for (const auto& f : d.flats)
    if (f.alpha > f.codim + arr.n - arr.k) violations.push_back(f);
  if (!violations.empty())
    throw SubgeneralError("arrangement is not in n-subgeneral position", std::move(violations));

  std::map<LatticePoint, std::vector<std::size_t>> dedup;
  for (std::size_t i = 0; i < d.flats.size(); ++i) {
    const LatticePoint p{static_cast<std::int64_t>(d.flats[i].alpha),
                         static_cast<std::int64_t>(d.flats[i].codim)};
    dedup[p].push_back(i);
  }
  std::vector<LatticePoint> raw;
  for (const auto& [p, witnesses] : dedup) {
    d.points.push_back({p, witnesses});
    raw.push_back(p);
  }

  d.X = {static_cast<std::int64_t>(2 * arr.n - arr.k + 1),
         static_cast<std::int64_t>(arr.k + 1)};
  d.hull = lower_hull(raw, d.X);

  if (d.hull.front() != LatticePoint{0, 0} || d.hull.back() != d.X)
    throw std::logic_error("diagram: hull endpoints corrupt");
  for (std::size_t j = 0; j + 1 < d.hull.size(); ++j) {
    const auto a = d.hull[j], b = d.hull[j + 1];
    d.slopes.emplace_back(Rational(b.y - a.y) / Rational(b.x - a.x));
    for (const auto& p : d.points)
      if (!on_or_above(p.p, a, b))
        throw std::logic_error("diagram: point below a hull segment");
  }
  for (std::size_t j = 0; j + 1 < d.slopes.size(); ++j)
    if (!(d.slopes[j] < d.slopes[j + 1]))
      throw std::logic_error("diagram: hull slopes not strictly increasing");

  // Representatives: L_0 = P^k, then one witness flat per interior vertex
  // (default: lexicographically smallest index set), then the empty subspace.
  const std::size_t s = d.hull.size() - 2;
  for (std::size_t j = 0; j + 1 < d.hull.size(); ++j) {
    const auto it = dedup.find(d.hull[j]);
    if (it == dedup.end() || it->second.empty())
      throw std::logic_error("diagram: hull vertex has no witness flat");
    std::vector<std::size_t> witnesses = it->second;
    std::sort(witnesses.begin(), witnesses.end(), [&](std::size_t a, std::size_t b) {
      return d.flats[a].index_set < d.flats[b].index_set;
    });
    std::size_t pick = 0;
    if (choices && j >= 1) {
      if (choices->size() != s) throw std::invalid_argument("choices: need one entry per vertex 1..s");
      pick = (*choices)[j - 1];
      if (pick >= witnesses.size()) throw std::invalid_argument("choices: witness index out of range");
    }
    d.reps.push_back(d.flats[witnesses[pick]]);
  }
  d.reps.push_back(empty_flat(arr));

  // Interior vertices sit strictly below the line OX and on or left of the
  // slope-1 line through (n, k); codim <= (k+1)/2 follows.
  for (std::size_t j = 1; j <= s; ++j) {
    const auto [x, y] = d.hull[j];
    if (!(y * d.X.x < d.X.y * x))
      throw std::logic_error("diagram: interior vertex not strictly below OX");
    if (!(x <= y + static_cast<std::int64_t>(arr.n - arr.k)))
      throw std::logic_error("diagram: interior vertex right of the slope-1 line");
    if (!(2 * y <= static_cast<std::int64_t>(arr.k + 1)))
      throw std::logic_error("diagram: interior vertex above the midpoint height");
  }

  // Chain containment along the representatives.
  for (std::size_t j = 0; j + 1 < d.reps.size(); ++j)
    if (!d.reps[j].ann.contains_subspace(d.reps[j + 1].ann))
      throw std::logic_error("diagram: representative chain containment failed");

  return d;
}

}  // namespace

NochkaDiagram build_diagram(const Arrangement& arr) { return build_impl(arr, nullptr); }

NochkaDiagram build_diagram_with_choices(const Arrangement& arr,
                                         const std::vector<std::size_t>& choices) {
  return build_impl(arr, &choices);
}

}  // namespace nochka

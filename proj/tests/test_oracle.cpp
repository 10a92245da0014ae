#include <doctest.h>

#include "nochka/oracle.hpp"
#include "test_helpers.hpp"

using namespace nochka;
using namespace nochka::testing;

TEST_CASE("naive hull matches the unit cases") {
  CHECK(oracle::naive_hull({{0, 0}}, {3, 3}) == std::vector<LatticePoint>{{0, 0}, {3, 3}});
  CHECK(oracle::naive_hull({{0, 0}, {1, 1}, {2, 1}}, {4, 2}) ==
        std::vector<LatticePoint>{{0, 0}, {4, 2}});
  CHECK(oracle::naive_hull({{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}, {5, 3}) ==
        std::vector<LatticePoint>{{0, 0}, {2, 1}, {5, 3}});
}

TEST_CASE("naive hull agrees with lower_hull on random clouds") {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    Rng t = rng.fork(static_cast<std::uint64_t>(trial));
    const auto n = static_cast<std::size_t>(t.uniform(1, 5));
    const auto k = static_cast<std::size_t>(t.uniform(1, n));
    const LatticePoint anchor{static_cast<std::int64_t>(2 * n - k + 1),
                              static_cast<std::int64_t>(k + 1)};
    std::vector<LatticePoint> pts{{0, 0}};
    const auto count = t.uniform(0, 10);
    for (std::int64_t i = 0; i < count; ++i) {
      const std::int64_t y = t.uniform(1, static_cast<std::int64_t>(k + 1));
      const std::int64_t xmax =
          std::min(y + static_cast<std::int64_t>(n - k), anchor.x - 1);
      pts.push_back({t.uniform(1, xmax), y});
    }
    CHECK(oracle::naive_hull(pts, anchor) == lower_hull(pts, anchor));
  }
}

TEST_CASE("naive hull agrees with lower_hull on the fixtures") {
  for (const auto& arr : {config_a(), config_b(), general_position_plane()}) {
    const auto d = build_diagram(arr);
    std::vector<LatticePoint> pts;
    for (const auto& p : d.points) pts.push_back(p.p);
    CHECK(oracle::naive_hull(pts, d.X) == d.hull);
  }
}

TEST_CASE("submodularity and modularity on sampled flat pairs") {
  for (const auto& arr : {config_a(), config_b(), general_position_plane()}) {
    const auto report = oracle::submodularity_check(arr, 200, 9);
    CHECK(report.instances == 200);
    CHECK(report.passed());
  }
}

TEST_CASE("submodularity worked example on config B") {
  const auto arr = config_b();
  const auto flats = closed_flats(arr);
  const Flat* line = nullptr;
  const Flat* triple = nullptr;
  for (const auto& f : flats) {
    if (f.index_set == std::vector<std::size_t>{0, 1}) line = &f;
    if (f.index_set == std::vector<std::size_t>{2, 3, 4}) triple = &f;
  }
  REQUIRE(line);
  REQUIRE(triple);
  const auto span = ann_of_sum(line->ann, triple->ann);
  const auto meet = ann_of_intersection(line->ann, triple->ann);
  CHECK(span.is_whole_space());   // line + off-line point span P^2
  CHECK(meet.is_empty());         // and they are disjoint
  CHECK(codim(meet) == 3);
  // alpha by definition: nothing contains P^2, everything contains the empty set
  std::size_t alpha_span = 0, alpha_meet = 0;
  for (const auto& h : arr.hyperplanes) {
    if (contains(h.covector, span)) ++alpha_span;
    if (contains(h.covector, meet)) ++alpha_meet;
  }
  CHECK(alpha_span == 0);
  CHECK(alpha_meet == 6);
  CHECK(alpha_span + alpha_meet >= line->alpha + triple->alpha);  // 6 >= 5
  CHECK(codim(span) + codim(meet) == line->codim + triple->codim);  // 0 + 3 = 1 + 2
}

TEST_CASE("a flat paired with itself gives equality in both relations") {
  const auto arr = config_b();
  for (const auto& f : closed_flats(arr)) {
    CHECK(ann_of_sum(f.ann, f.ann) == f.ann);
    CHECK(ann_of_intersection(f.ann, f.ann) == f.ann);
  }
}

TEST_CASE("modularity of disjoint points on a line") {
  const auto a = Annihilator::from_rows(2, {{Rational(1), Rational(0)}});
  const auto b = Annihilator::from_rows(2, {{Rational(0), Rational(1)}});
  CHECK(codim(ann_of_sum(a, b)) == 0);
  CHECK(codim(ann_of_intersection(a, b)) == 2);
}

TEST_CASE("closure domination on random subspaces") {
  for (const auto& arr : {config_a(), config_b(), general_position_plane()}) {
    const auto cert = compute_weights(arr);
    const auto report = oracle::closure_domination_check(arr, cert.omegas, 300, 23);
    CHECK(report.instances == 300);
    CHECK(report.passed());
  }
}

TEST_CASE("closure domination named cases on config A") {
  const auto arr = config_a();
  const auto cert = compute_weights(arr);
  const auto sum_over = [&](const Annihilator& ann) {
    Rational s;
    for (std::size_t i = 0; i < arr.q(); ++i)
      if (contains(arr.hyperplanes[i].covector, ann)) s += cert.omegas[i];
    return s;
  };
  // L = P^1: empty sum
  CHECK(sum_over(Annihilator::whole_space(2)) == Rational(0));
  // L = a point on exactly one hyperplane
  const auto simple = Annihilator::from_rows(2, {{Rational(0), Rational(1)}});
  CHECK(sum_over(simple) == Rational(1, 2));
  // L = the double point
  const auto dbl = Annihilator::from_rows(2, {{Rational(1), Rational(0)}});
  CHECK(sum_over(dbl) == Rational(1));
  CHECK(codim(dbl) == 1);
}

TEST_CASE("proof chain replay is clean on the fixtures") {
  for (const auto& arr : {config_a(), config_b(), general_position_plane()}) {
    const auto d = build_diagram(arr);
    const auto cert = compute_weights(arr, d);
    const auto report = oracle::proof_chain_check(arr, d, cert);
    CHECK(report.passed());
    if (d.s() >= 1) CHECK(report.instances > 0);
  }
}

TEST_CASE("proof chain counts both branches on config B") {
  const auto arr = config_b();
  const auto d = build_diagram(arr);
  const auto cert = compute_weights(arr, d);
  // flats disjoint from the line x=0: the three pair points off it and the
  // triple point, so the disjoint branch fires at least four times
  std::size_t disjoint = 0;
  for (const auto& f : d.flats)
    if (ann_of_intersection(f.ann, d.reps[d.s()].ann).is_empty()) ++disjoint;
  CHECK(disjoint == 4);
  const auto report = oracle::proof_chain_check(arr, d, cert);
  CHECK(report.instances >= disjoint);
  CHECK(report.passed());
}

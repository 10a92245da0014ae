#include <doctest.h>

#include "nochka/weights.hpp"
#include "test_helpers.hpp"

using namespace nochka;
using namespace nochka::testing;

namespace {

Rational weight_sum(const std::vector<Rational>& omegas, const std::vector<std::size_t>& set) {
  Rational s;
  for (std::size_t i : set) s += omegas[i];
  return s;
}

}  // namespace

TEST_CASE("general position with k = n gives unit weights") {
  const auto cert = compute_weights(general_position_plane());
  for (const auto& w : cert.omegas) CHECK(w == Rational(1));
  CHECK(cert.tau == Rational(1));
  CHECK(cert.sigma == Rational(1));
  CHECK(cert.hull.size() == 2);
  CHECK(cert.verdicts.all_pass());
}

TEST_CASE("config A weights") {
  const auto cert = compute_weights(config_a());
  REQUIRE(cert.omegas.size() == 5);
  for (const auto& w : cert.omegas) CHECK(w == Rational(1, 2));
  CHECK(cert.tau == Rational(1, 2));
  CHECK(cert.sigma == Rational(1, 2));
  CHECK(cert.hull == std::vector<LatticePoint>{{0, 0}, {4, 2}});
  // everything falls through to the empty end of the chain
  for (std::size_t j : cert.assignment) CHECK(j == 1);
  CHECK(cert.verdicts.all_pass());
}

TEST_CASE("config B weights") {
  const auto arr = config_b();
  const auto cert = compute_weights(arr);
  const std::vector<Rational> expected{Rational(1, 2), Rational(1, 2), Rational(2, 3),
                                       Rational(2, 3), Rational(2, 3), Rational(2, 3)};
  CHECK(cert.omegas == expected);
  CHECK(cert.tau == Rational(2, 3));
  CHECK(cert.sigma == Rational(2, 3));
  CHECK(cert.hull == std::vector<LatticePoint>{{0, 0}, {2, 1}, {5, 3}});
  CHECK(cert.assignment == std::vector<std::size_t>{1, 1, 2, 2, 2, 2});
  CHECK(cert.verdicts.all_pass());

  // the bound is met with equality on the double line and on the triple point
  CHECK(weight_sum(cert.omegas, {0, 1}) == Rational(1));
  CHECK(weight_sum(cert.omegas, {2, 3, 4}) == Rational(2));
  CHECK(cert.verdicts.flat_sums.slack == Rational(0));
  CHECK(cert.verdicts.flat_sums.worst_flat == std::vector<std::size_t>{2, 3, 4});
  // exactly those two flats are tight among codim >= 1
  std::size_t tight = 0;
  for (const auto& f : closed_flats(arr))
    if (f.codim >= 1 &&
        weight_sum(cert.omegas, f.index_set) == Rational(static_cast<long>(f.codim)))
      ++tight;
  CHECK(tight == 2);
}

TEST_CASE("verifier rejects a tampered certificate") {
  const auto arr = config_a();
  auto cert = compute_weights(arr);
  auto omegas = cert.omegas;
  omegas[0] = Rational(3, 4);
  const auto v = verify_certificate(arr, omegas, cert.tau, cert.sigma);
  CHECK_FALSE(v.bounded.pass);      // 3/4 > declared tau = 1/2
  CHECK_FALSE(v.flat_sums.pass);    // 3/4 + 1/2 > 1 at the double point
  CHECK(v.flat_sums.worst_flat == std::vector<std::size_t>{0, 1});
  CHECK(v.flat_sums.slack == Rational(-1, 4));
  CHECK_FALSE(v.tau_consistent.pass);  // formula now gives 3/4, not 1/2
  CHECK(v.nonneg.pass);
  CHECK_FALSE(v.all_pass());
  const auto names = v.failed_names();
  CHECK(std::find(names.begin(), names.end(), "bounded") != names.end());
  CHECK(std::find(names.begin(), names.end(), "flat_sums") != names.end());
}

TEST_CASE("verifier recomputes tau from the formula") {
  // all-zero weights: nonnegativity and the flat sums hold, but
  // tau = (0 - k - 1)/(q - 2n + k - 1) = -2 < 0 sinks the upper bound
  const auto arr = config_a();
  const std::vector<Rational> zeros(arr.q(), Rational(0));
  const auto v = verify_certificate(arr, zeros);
  CHECK(v.nonneg.pass);
  CHECK(v.flat_sums.pass);
  CHECK_FALSE(v.bounded.pass);
  CHECK(v.bounded.slack == Rational(-2));
}

TEST_CASE("verifier requires matching weight count") {
  CHECK_THROWS_AS(verify_certificate(config_a(), {Rational(1)}), std::invalid_argument);
}

TEST_CASE("toda bound on config B is tight through the derivation") {
  const auto report = toda_check(build_diagram(config_b()));
  CHECK(report.pass);
  CHECK(report.derivation_path);
  REQUIRE(report.steps.size() == 5);
  for (const auto& step : report.steps) {
    CHECK(step.pass);
    if (step.name != "classic_bound") CHECK(step.slack == Rational(0));
  }
  CHECK(report.steps[0].slack == Rational(1, 12));  // 3/4 - 2/3
}

TEST_CASE("toda bound in the degenerate-hull cases") {
  const auto square = toda_check(build_diagram(general_position_plane()));
  CHECK(square.pass);
  CHECK_FALSE(square.derivation_path);
  REQUIRE(square.steps.size() == 2);
  CHECK(square.steps[1].name == "toda_direct");
  CHECK(square.steps[1].slack == Rational(0));  // tau = 1 = k/n

  const auto a = toda_check(build_diagram(config_a()));
  CHECK(a.pass);
  CHECK_FALSE(a.derivation_path);
  CHECK(a.steps[1].slack == Rational(0));  // tau = 1/2 = k/n
}

TEST_CASE("weight sum over the last representative equals its codim") {
  for (const auto& arr : {config_a(), config_b(), general_position_plane()}) {
    const auto d = build_diagram(arr);
    const auto cert = compute_weights(arr, d);
    const auto& last = d.reps[d.s()];
    CHECK(weight_sum(cert.omegas, last.index_set) ==
          Rational(static_cast<long>(last.codim)));
    // max weight is sigma, and sigma = tau
    Rational max_w = cert.omegas.front();
    for (const auto& w : cert.omegas) max_w = std::max(max_w, w);
    CHECK(max_w <= cert.sigma);
    CHECK(cert.sigma == cert.tau);
  }
}

TEST_CASE("certificates verify on rejection-sampled positions too") {
  // The construction only needs the flat inequality, so it must succeed on
  // any arrangement passing check_subgeneral, not just embedded ones.
  Rng rng(404);
  std::size_t accepted = 0;
  for (int attempt = 0; attempt < 400 && accepted < 25; ++attempt) {
    Rng t = rng.fork(static_cast<std::uint64_t>(attempt));
    const auto n = static_cast<std::size_t>(t.uniform(1, 3));
    const auto k = static_cast<std::size_t>(t.uniform(1, n));
    const auto q = static_cast<std::size_t>(t.uniform(2 * n - k + 2, 8));
    Arrangement arr;
    arr.k = k;
    arr.n = n;
    bool zero = false;
    for (std::size_t i = 0; i < q && !zero; ++i) {
      std::vector<Rational> cov(k + 1);
      bool nonzero = false;
      for (auto& c : cov) {
        c = Rational(t.uniform(-2, 2));
        nonzero = nonzero || !c.is_zero();
      }
      if (!nonzero) {
        zero = true;
        break;
      }
      arr.hyperplanes.push_back(Hyperplane::normalized(std::move(cov)));
    }
    if (zero || !check_subgeneral(arr).ok) continue;
    ++accepted;
    const auto cert = compute_weights(arr);
    CHECK(cert.verdicts.all_pass());
    CHECK(verify_certificate(arr, cert.omegas, cert.tau, cert.sigma).all_pass());
  }
  CHECK(accepted >= 10);
}

TEST_CASE("weights are independent of the representative choice") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GeneratorParams p;
    p.n = 1 + seed % 5;
    p.k = 1 + seed % p.n;
    p.q = 2 * p.n - p.k + 2 + seed % 4;
    p.seed = seed * 101;
    p.coincidence_budget = seed % 3;
    const auto arr = embed_restrict_generator(p);
    const auto base = build_diagram(arr);
    const auto reference = compute_weights(arr, base);

    // count the witnesses at every interior hull vertex
    std::vector<std::size_t> limits;
    for (std::size_t j = 1; j <= base.s(); ++j) {
      std::size_t count = 0;
      for (const auto& pt : base.points)
        if (pt.p == base.hull[j]) count = pt.witnesses.size();
      limits.push_back(count);
    }
    // swap in every alternative witness, one vertex at a time
    for (std::size_t j = 0; j < limits.size(); ++j) {
      for (std::size_t pick = 0; pick < limits[j]; ++pick) {
        std::vector<std::size_t> choices(limits.size(), 0);
        choices[j] = pick;
        const auto alt = compute_weights(arr, build_diagram_with_choices(arr, choices));
        CHECK(alt.omegas == reference.omegas);
        CHECK(alt.sigma == reference.sigma);
        CHECK(alt.tau == reference.tau);
      }
    }
  }
}

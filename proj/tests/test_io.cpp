#include <doctest.h>

#include "nochka/io.hpp"
#include "nochka/svg.hpp"
#include "test_helpers.hpp"

using namespace nochka;
using namespace nochka::testing;

TEST_CASE("arrangement files round-trip through their canonical form") {
  const std::string text = emit_arrangement(config_b());
  const auto parsed = parse_arrangement_json(text);
  CHECK(parsed.k == 2);
  CHECK(parsed.n == 3);
  CHECK(parsed.hyperplanes == config_b().hyperplanes);
  CHECK(emit_arrangement(parsed) == text);
}

TEST_CASE("arrangement parser accepts integers and normalizes covectors") {
  const auto arr = parse_arrangement_json(
      R"({"k": 1, "n": 2, "hyperplanes": [[2, 0], ["1","0"], ["0","1"], ["1","-1"], ["-2","-2"]]})");
  CHECK(arr.hyperplanes[0] == arr.hyperplanes[1]);            // 2x=0 is x=0
  CHECK(arr.hyperplanes[4].covector[0] == Rational(1));        // leading coefficient 1
  CHECK(arr.hyperplanes[4].covector[1] == Rational(1));
}

TEST_CASE("arrangement parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_arrangement_json("{"), doctest::Contains("invalid JSON"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_arrangement_json(R"({"n": 2, "hyperplanes": []})"),
                       doctest::Contains("missing field 'k'"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_arrangement_json(R"({"k": 1, "n": 2, "hyperplanes": [["1","0"], ["1"]]})"),
      doctest::Contains("hyperplanes[2]"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_arrangement_json(R"({"k": 1, "n": 2, "hyperplanes": [["1","1/-2"]]})"),
      doctest::Contains("hyperplanes[1][2]"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_arrangement_json(R"({"k": 1, "n": 2, "hyperplanes": [["1","0.5"]]})"),
      doctest::Contains("hyperplanes[1][2]"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_arrangement_json(R"({"k": 1, "n": 2, "hyperplanes": [["0","0"]]})"),
      doctest::Contains("covector is zero"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_arrangement_json(R"({"k": 3, "n": 2, "hyperplanes": [["1","0","0","0"]]})"),
      doctest::Contains("k exceeds n"), ParseError);
}

TEST_CASE("certificate files round-trip losslessly") {
  const auto cert = compute_weights(config_b());
  const std::string text = emit_certificate(cert);
  const auto parsed = parse_certificate_json(text);
  CHECK(parsed.omegas == cert.omegas);
  CHECK(parsed.tau == cert.tau);
  CHECK(parsed.sigma == cert.sigma);
  CHECK(parsed.hull == cert.hull);
  CHECK(parsed.representatives == cert.representatives);
  CHECK(parsed.verdicts.flat_sums.worst_flat == cert.verdicts.flat_sums.worst_flat);
  CHECK(emit_certificate(parsed) == text);  // parse then emit is the identity
}

TEST_CASE("certificate parse errors") {
  CHECK_THROWS_WITH_AS(parse_certificate_json(R"({"weights": "nope"})"),
                       doctest::Contains("'weights'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_certificate_json(R"({"weights": ["1/2"], "tau": "x"})"),
                       doctest::Contains("tau"), ParseError);
  const std::string no_verdicts =
      R"({"weights": ["1"], "tau": "1", "sigma": "1", "hull": [[0,0]], "representatives": [[]]})";
  CHECK_THROWS_WITH_AS(parse_certificate_json(no_verdicts),
                       doctest::Contains("verdicts"), ParseError);
  const std::string bad_hull =
      R"({"weights": ["1"], "tau": "1", "sigma": "1", "hull": [[0]], "representatives": []})";
  CHECK_THROWS_WITH_AS(parse_certificate_json(bad_hull), doctest::Contains("hull"),
                       ParseError);
  const std::string bad_rep =
      R"({"weights": ["1"], "tau": "1", "sigma": "1", "hull": [[0,0]], "representatives": [[0]]})";
  CHECK_THROWS_WITH_AS(parse_certificate_json(bad_rep), doctest::Contains("1-based"),
                       ParseError);
}

TEST_CASE("emitted rationals are exact strings, never decimals") {
  for (const auto& text :
       {emit_arrangement(config_b()), emit_certificate(compute_weights(config_b()))}) {
    CHECK(text.find('.') == std::string::npos);
    CHECK(text.find("e-") == std::string::npos);
  }
}

TEST_CASE("diagram rendering is deterministic and labels the hull slopes") {
  const auto d = build_diagram(config_b());
  const auto svg = render_diagram_svg(d);
  CHECK(svg == render_diagram_svg(build_diagram(config_b())));
  CHECK(svg.find(">1/2<") != std::string::npos);
  CHECK(svg.find(">2/3<") != std::string::npos);
  CHECK(svg.find(">W<") != std::string::npos);
  CHECK(svg.find(">X<") != std::string::npos);
  CHECK(svg.find("alpha") != std::string::npos);
  CHECK(svg.find("codim") != std::string::npos);

  // the k=n degenerate hull carries a single unit-slope segment
  const auto square = render_diagram_svg(build_diagram(general_position_plane()));
  CHECK(square.find(">1<") != std::string::npos);
  CHECK(square.find(">1/2<") == std::string::npos);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nochka/io.hpp"
#include "nochka/oracle.hpp"
#include "nochka/svg.hpp"

namespace py = pybind11;
using namespace nochka;

namespace {

Arrangement arrangement_from_lists(std::size_t k, std::size_t n,
                                   const std::vector<std::vector<std::string>>& hyperplanes) {
  Arrangement arr;
  arr.k = k;
  arr.n = n;
  for (const auto& row : hyperplanes) {
    std::vector<Rational> cov;
    cov.reserve(row.size());
    for (const auto& s : row) cov.push_back(Rational::parse(s));
    arr.hyperplanes.push_back(Hyperplane::normalized(std::move(cov)));
  }
  const auto issues = validate(arr);
  if (!issues.empty()) throw std::invalid_argument("invalid arrangement: " + issues[0].reason);
  return arr;
}

py::list covectors_of(const Arrangement& arr) {
  py::list rows;
  for (const auto& h : arr.hyperplanes) {
    py::list row;
    for (const auto& c : h.covector) row.append(c.str());
    rows.append(row);
  }
  return rows;
}

py::dict flat_to_dict(const Flat& f) {
  py::dict d;
  py::list idx;
  for (std::size_t i : f.index_set) idx.append(i + 1);
  d["index_set"] = idx;
  d["alpha"] = f.alpha;
  d["codim"] = f.codim;
  py::list basis;
  for (std::size_t r = 0; r < f.ann.basis().rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < f.ann.basis().cols(); ++c)
      row.append(f.ann.basis().at(r, c).str());
    basis.append(row);
  }
  d["annihilator"] = basis;
  return d;
}

py::dict verdict_to_dict(const Verdict& v) {
  py::dict d;
  d["pass"] = v.pass;
  d["slack"] = v.slack.str();
  return d;
}

py::dict verdicts_to_dict(const CertificateVerdicts& v) {
  py::dict d;
  d["nonneg"] = verdict_to_dict(v.nonneg);
  d["bounded"] = verdict_to_dict(v.bounded);
  py::dict fs = verdict_to_dict({v.flat_sums.pass, v.flat_sums.slack});
  py::list worst;
  for (std::size_t i : v.flat_sums.worst_flat) worst.append(i + 1);
  fs["worst_flat"] = worst;
  d["flat_sums"] = fs;
  d["sigma_equals_tau"] = verdict_to_dict(v.sigma_equals_tau);
  d["tau_consistent"] = verdict_to_dict(v.tau_consistent);
  d["classic_bound"] = verdict_to_dict(v.classic_bound);
  d["toda_bound"] = verdict_to_dict(v.toda_bound);
  return d;
}

py::dict certificate_to_dict(const WeightCertificate& cert) {
  py::dict d;
  py::list weights;
  for (const auto& w : cert.omegas) weights.append(w.str());
  d["weights"] = weights;
  d["tau"] = cert.tau.str();
  d["sigma"] = cert.sigma.str();
  py::list hull;
  for (const auto& p : cert.hull) hull.append(py::make_tuple(p.x, p.y));
  d["hull"] = hull;
  py::list reps;
  for (const auto& set : cert.representatives) {
    py::list s;
    for (std::size_t i : set) s.append(i + 1);
    reps.append(s);
  }
  d["representatives"] = reps;
  py::list slopes;
  for (const auto& s : cert.slopes) slopes.append(s.str());
  d["slopes"] = slopes;
  d["verdicts"] = verdicts_to_dict(cert.verdicts);
  return d;
}

}  // namespace

PYBIND11_MODULE(_nochka, m) {
  m.doc() = "Nochka weights for hyperplane arrangements in subgeneral position";

  py::class_<Arrangement>(m, "Arrangement")
      .def(py::init(&arrangement_from_lists), py::arg("k"), py::arg("n"),
           py::arg("hyperplanes"))
      .def_readonly("k", &Arrangement::k)
      .def_readonly("n", &Arrangement::n)
      .def_property_readonly("q", &Arrangement::q)
      .def_property_readonly("hyperplanes", &covectors_of);

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<SubgeneralError>(m, "SubgeneralError", PyExc_ValueError);

  m.def("parse_arrangement", &parse_arrangement_json, py::arg("text"),
        "Parse an arrangement from its JSON text form.");
  m.def("emit_arrangement", &emit_arrangement, py::arg("arrangement"));
  m.def(
      "check_subgeneral",
      [](const Arrangement& arr) {
        const auto report = check_subgeneral(arr);
        py::dict d;
        d["ok"] = report.ok;
        py::list v;
        for (const auto& f : report.violations) v.append(flat_to_dict(f));
        d["violations"] = v;
        return d;
      },
      py::arg("arrangement"));
  m.def(
      "flats",
      [](const Arrangement& arr) {
        py::list out;
        for (const auto& f : closed_flats(arr)) out.append(flat_to_dict(f));
        return out;
      },
      py::arg("arrangement"));
  m.def(
      "weights",
      [](const Arrangement& arr) { return certificate_to_dict(compute_weights(arr)); },
      py::arg("arrangement"),
      "Compute the full weight certificate: weights, sigma, tau, hull, verdicts.");
  m.def(
      "verify",
      [](const Arrangement& arr, const std::vector<std::string>& weights,
         const std::optional<std::string>& tau, const std::optional<std::string>& sigma) {
        std::vector<Rational> omegas;
        omegas.reserve(weights.size());
        for (const auto& w : weights) omegas.push_back(Rational::parse(w));
        std::optional<Rational> t, s;
        if (tau) t = Rational::parse(*tau);
        if (sigma) s = Rational::parse(*sigma);
        return verdicts_to_dict(verify_certificate(arr, omegas, t, s));
      },
      py::arg("arrangement"), py::arg("weights"), py::arg("tau") = py::none(),
      py::arg("sigma") = py::none(),
      "Re-check every condition for externally supplied weights.");
  m.def(
      "generate",
      [](std::size_t n, std::size_t k, std::size_t q, std::uint64_t seed,
         std::size_t coincidences) {
        GeneratorParams p;
        p.n = n;
        p.k = k;
        p.q = q;
        p.seed = seed;
        p.coincidence_budget = coincidences;
        return embed_restrict_generator(p);
      },
      py::arg("n"), py::arg("k"), py::arg("q"), py::arg("seed") = 0,
      py::arg("coincidences") = 0,
      "Generate an n-subgeneral arrangement in P^k by embedding and restriction.");
  m.def(
      "diagram_svg",
      [](const Arrangement& arr) { return render_diagram_svg(build_diagram(arr)); },
      py::arg("arrangement"));
  m.def(
      "toda",
      [](const Arrangement& arr) {
        const auto report = toda_check(build_diagram(arr));
        py::dict d;
        d["pass"] = report.pass;
        d["derivation_path"] = report.derivation_path;
        py::list steps;
        for (const auto& s : report.steps) {
          py::dict step;
          step["name"] = s.name;
          step["pass"] = s.pass;
          step["slack"] = s.slack.str();
          steps.append(step);
        }
        d["steps"] = steps;
        return d;
      },
      py::arg("arrangement"));
}

#include "nochka/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nochka {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational parse_rational_field(const nlohmann::json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string such as \"2\" or \"-1/3\"");
}

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const ordered_json& field(const ordered_json& obj, const char* name) {
  if (!obj.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return obj.at(name);
}

std::size_t nonneg_int_field(const ordered_json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_number_integer() || v.get<long>() < 0)
    throw ParseError(std::string("field '") + name + "' must be a nonnegative integer");
  return static_cast<std::size_t>(v.get<long>());
}

Verdict parse_verdict(const ordered_json& v, const std::string& where) {
  if (!v.is_object() || !v.contains("pass"))
    throw ParseError(where + ": expected {\"pass\": .., \"slack\": ..}");
  return {v.at("pass").get<bool>(), parse_rational_field(field(v, "slack"), where + ".slack")};
}

ordered_json emit_verdict(const Verdict& v) {
  return ordered_json{{"pass", v.pass}, {"slack", v.slack.str()}};
}

std::vector<std::size_t> parse_index_set(const ordered_json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of 1-based indices");
  std::vector<std::size_t> set;
  for (const auto& e : v) {
    if (!e.is_number_integer() || e.get<long>() < 1)
      throw ParseError(where + ": indices are 1-based positive integers");
    set.push_back(static_cast<std::size_t>(e.get<long>()) - 1);
  }
  return set;
}

ordered_json emit_index_set(const std::vector<std::size_t>& set) {
  auto arr = ordered_json::array();
  for (std::size_t i : set) arr.push_back(i + 1);
  return arr;
}

}  // namespace

Arrangement parse_arrangement_json(const std::string& text) {
  const auto doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("top level must be an object");
  Arrangement arr;
  arr.k = nonneg_int_field(doc, "k");
  arr.n = nonneg_int_field(doc, "n");
  const auto& hyps = field(doc, "hyperplanes");
  if (!hyps.is_array()) throw ParseError("field 'hyperplanes' must be an array");
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    const auto& row = hyps[i];
    const std::string where = "hyperplanes[" + std::to_string(i + 1) + "]";
    if (!row.is_array()) throw ParseError(where + ": expected an array of k+1 rationals");
    std::vector<Rational> cov;
    for (std::size_t j = 0; j < row.size(); ++j)
      cov.push_back(parse_rational_field(row[j], where + "[" + std::to_string(j + 1) + "]"));
    if (cov.size() != arr.k + 1)
      throw ParseError(where + ": expected " + std::to_string(arr.k + 1) + " coordinates, got " +
                       std::to_string(cov.size()));
    bool nonzero = false;
    for (const auto& c : cov) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw ParseError(where + ": covector is zero");
    arr.hyperplanes.push_back(Hyperplane::normalized(std::move(cov)));
  }
  const auto issues = validate(arr);
  if (!issues.empty()) {
    std::string msg = "invalid arrangement:";
    for (const auto& issue : issues) {
      msg += issue.index ? " [hyperplane " + std::to_string(*issue.index) + "] " : " ";
      msg += issue.reason + ";";
    }
    throw ParseError(msg);
  }
  return arr;
}

std::string emit_arrangement(const Arrangement& arr) {
  ordered_json doc;
  doc["k"] = arr.k;
  doc["n"] = arr.n;
  auto hyps = ordered_json::array();
  for (const auto& h : arr.hyperplanes) {
    auto row = ordered_json::array();
    for (const auto& c : h.covector) row.push_back(c.str());
    hyps.push_back(std::move(row));
  }
  doc["hyperplanes"] = std::move(hyps);
  return doc.dump(2) + "\n";
}

WeightCertificate parse_certificate_json(const std::string& text) {
  const auto doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("top level must be an object");
  WeightCertificate cert;
  const auto& weights = field(doc, "weights");
  if (!weights.is_array()) throw ParseError("field 'weights' must be an array");
  for (std::size_t i = 0; i < weights.size(); ++i)
    cert.omegas.push_back(
        parse_rational_field(weights[i], "weights[" + std::to_string(i + 1) + "]"));
  cert.tau = parse_rational_field(field(doc, "tau"), "tau");
  cert.sigma = parse_rational_field(field(doc, "sigma"), "sigma");
  const auto& hull = field(doc, "hull");
  if (!hull.is_array()) throw ParseError("field 'hull' must be an array of [x, y] pairs");
  for (const auto& v : hull) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
      throw ParseError("hull entries must be [x, y] integer pairs");
    cert.hull.push_back({v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
  }
  const auto& reps = field(doc, "representatives");
  if (!reps.is_array()) throw ParseError("field 'representatives' must be an array");
  for (std::size_t j = 0; j < reps.size(); ++j)
    cert.representatives.push_back(
        parse_index_set(reps[j], "representatives[" + std::to_string(j + 1) + "]"));

  const auto& verdicts = field(doc, "verdicts");
  auto& v = cert.verdicts;
  v.nonneg = parse_verdict(field(verdicts, "nonneg"), "verdicts.nonneg");
  v.bounded = parse_verdict(field(verdicts, "bounded"), "verdicts.bounded");
  const auto& fs = field(verdicts, "flat_sums");
  const Verdict base = parse_verdict(fs, "verdicts.flat_sums");
  v.flat_sums.pass = base.pass;
  v.flat_sums.slack = base.slack;
  v.flat_sums.worst_flat = parse_index_set(field(fs, "worst_flat"), "verdicts.flat_sums.worst_flat");
  v.sigma_equals_tau = parse_verdict(field(verdicts, "sigma_equals_tau"), "verdicts.sigma_equals_tau");
  v.tau_consistent = parse_verdict(field(verdicts, "tau_consistent"), "verdicts.tau_consistent");
  v.classic_bound = parse_verdict(field(verdicts, "classic_bound"), "verdicts.classic_bound");
  v.toda_bound = parse_verdict(field(verdicts, "toda_bound"), "verdicts.toda_bound");
  return cert;
}

std::string emit_certificate(const WeightCertificate& cert) {
  ordered_json doc;
  auto weights = ordered_json::array();
  for (const auto& w : cert.omegas) weights.push_back(w.str());
  doc["weights"] = std::move(weights);
  doc["tau"] = cert.tau.str();
  doc["sigma"] = cert.sigma.str();
  auto hull = ordered_json::array();
  for (const auto& p : cert.hull) hull.push_back(ordered_json::array({p.x, p.y}));
  doc["hull"] = std::move(hull);
  auto reps = ordered_json::array();
  for (const auto& set : cert.representatives) reps.push_back(emit_index_set(set));
  doc["representatives"] = std::move(reps);

  ordered_json verdicts;
  verdicts["nonneg"] = emit_verdict(cert.verdicts.nonneg);
  verdicts["bounded"] = emit_verdict(cert.verdicts.bounded);
  auto fs = emit_verdict({cert.verdicts.flat_sums.pass, cert.verdicts.flat_sums.slack});
  fs["worst_flat"] = emit_index_set(cert.verdicts.flat_sums.worst_flat);
  verdicts["flat_sums"] = std::move(fs);
  verdicts["sigma_equals_tau"] = emit_verdict(cert.verdicts.sigma_equals_tau);
  verdicts["tau_consistent"] = emit_verdict(cert.verdicts.tau_consistent);
  verdicts["classic_bound"] = emit_verdict(cert.verdicts.classic_bound);
  verdicts["toda_bound"] = emit_verdict(cert.verdicts.toda_bound);
  doc["verdicts"] = std::move(verdicts);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

Arrangement load_arrangement(const std::string& path) {
  return parse_arrangement_json(read_file(path));
}

WeightCertificate load_certificate(const std::string& path) {
  return parse_certificate_json(read_file(path));
}

}  // namespace nochka

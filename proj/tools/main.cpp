#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nochka/io.hpp"
#include "nochka/oracle.hpp"
#include "nochka/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConditionFailed = 1;  // a mathematical condition fails
constexpr int kExitInvalidInput = 2;     // malformed file or parameters

// NOCHKA_SEED overrides --seed whenever it is set.
std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("NOCHKA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw nochka::ParseError("NOCHKA_SEED is not an integer: " + std::string(env));
    }
  }
  return cli_seed;
}

std::string index_set_str(const std::vector<std::size_t>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i] + 1);
  return s + "}";
}

std::string flat_str(const nochka::Flat& f) {
  std::string s = "flat " + index_set_str(f.index_set) + "  codim " + std::to_string(f.codim) +
                  "  alpha " + std::to_string(f.alpha);
  return s;
}

void print_verdict_line(const std::string& name, const nochka::Verdict& v) {
  std::cout << "  " << name << ": " << (v.pass ? "pass" : "FAIL") << " (slack " << v.slack.str()
            << ")\n";
}

void print_verdicts(const nochka::CertificateVerdicts& v) {
  print_verdict_line("nonneg", v.nonneg);
  print_verdict_line("bounded", v.bounded);
  std::cout << "  flat_sums: " << (v.flat_sums.pass ? "pass" : "FAIL") << " (slack "
            << v.flat_sums.slack.str() << " at " << index_set_str(v.flat_sums.worst_flat)
            << ")\n";
  print_verdict_line("sigma_equals_tau", v.sigma_equals_tau);
  print_verdict_line("tau_consistent", v.tau_consistent);
  print_verdict_line("classic_bound", v.classic_bound);
  print_verdict_line("toda_bound", v.toda_bound);
}

int cmd_check(const std::string& path) {
  const auto arr = nochka::load_arrangement(path);
  const auto report = nochka::check_subgeneral(arr);
  if (report.ok) {
    std::cout << "in " << arr.n << "-subgeneral position (k = " << arr.k << ", q = " << arr.q()
              << ")\n";
    return kExitOk;
  }
  std::cout << "not in " << arr.n << "-subgeneral position; violating flats:\n";
  for (const auto& f : report.violations)
    std::cout << "  " << flat_str(f) << "  (alpha > codim + n - k = "
              << f.codim + arr.n - arr.k << ")\n";
  return kExitConditionFailed;
}

int cmd_weights(const std::string& path, const std::string& out, bool pretty) {
  const auto arr = nochka::load_arrangement(path);
  const auto cert = nochka::compute_weights(arr);
  if (!out.empty()) nochka::write_file(out, nochka::emit_certificate(cert));
  if (pretty) {
    for (std::size_t i = 0; i < cert.omegas.size(); ++i)
      std::cout << "omega_" << i + 1 << " = " << cert.omegas[i].str() << "\n";
    std::cout << "tau = " << cert.tau.str() << "\nsigma = " << cert.sigma.str() << "\nhull:";
    for (const auto& p : cert.hull) std::cout << " (" << p.x << "," << p.y << ")";
    std::cout << "\nverdicts:\n";
    print_verdicts(cert.verdicts);
  } else if (out.empty()) {
    std::cout << nochka::emit_certificate(cert);
  }
  return kExitOk;
}

int cmd_verify(const std::string& arr_path, const std::string& cert_path, std::size_t trials,
               std::uint64_t seed) {
  const auto arr = nochka::load_arrangement(arr_path);
  nochka::WeightCertificate cert;
  if (!cert_path.empty()) {
    cert = nochka::load_certificate(cert_path);
  } else {
    cert = nochka::compute_weights(arr);
  }
  if (cert.omegas.size() != arr.q()) {
    std::cerr << "error: certificate has " << cert.omegas.size() << " weights but q = "
              << arr.q() << "\n";
    return kExitInvalidInput;
  }
  const auto verdicts = nochka::verify_certificate(arr, cert.omegas, cert.tau, cert.sigma);
  std::cout << "conditions:\n";
  print_verdicts(verdicts);

  bool oracles_ok = true;
  if (trials > 0) {
    const auto sub = nochka::oracle::submodularity_check(arr, trials, seed);
    const auto dom = nochka::oracle::closure_domination_check(arr, cert.omegas, trials, seed + 1);
    std::cout << "oracles:\n";
    for (const auto* r : {&sub, &dom}) {
      std::cout << "  " << r->check << ": " << (r->passed() ? "pass" : "FAIL") << " ("
                << r->instances << " instances)\n";
      for (const auto& f : r->failures)
        std::cout << "    " << f.witness << ": expected " << f.expected << ", got " << f.actual
                  << "\n";
      oracles_ok = oracles_ok && r->passed();
    }
    if (verdicts.all_pass()) {
      const auto diagram = nochka::build_diagram(arr);
      const auto own = nochka::compute_weights(arr, diagram);
      const auto chain = nochka::oracle::proof_chain_check(arr, diagram, own);
      std::cout << "  " << chain.check << ": " << (chain.passed() ? "pass" : "FAIL") << " ("
                << chain.instances << " instances)\n";
      oracles_ok = oracles_ok && chain.passed();
    }
  }
  if (!verdicts.all_pass()) {
    std::cout << "FAILED:";
    for (const auto& name : verdicts.failed_names()) std::cout << " " << name;
    std::cout << "\n";
    return kExitConditionFailed;
  }
  if (!oracles_ok) return kExitConditionFailed;
  std::cout << "all conditions hold\n";
  return kExitOk;
}

int cmd_generate(std::size_t n, std::size_t k, std::size_t q, std::uint64_t seed,
                 std::size_t coincidences, const std::string& out) {
  if (k < 1 || k > n || q <= 2 * n - k + 1) {
    std::cerr << "error: need 1 <= k <= n and q > 2n-k+1\n";
    return kExitInvalidInput;
  }
  nochka::GeneratorParams params;
  params.n = n;
  params.k = k;
  params.q = q;
  params.seed = effective_seed(seed);
  params.coincidence_budget = coincidences;
  const auto arr = nochka::embed_restrict_generator(params);
  const auto text = nochka::emit_arrangement(arr);
  if (out.empty())
    std::cout << text;
  else
    nochka::write_file(out, text);
  return kExitOk;
}

int cmd_diagram(const std::string& path, const std::string& out) {
  const auto arr = nochka::load_arrangement(path);
  const auto svg = nochka::render_diagram_svg(nochka::build_diagram(arr));
  if (out.empty())
    std::cout << svg;
  else
    nochka::write_file(out, svg);
  return kExitOk;
}

int cmd_lattice(const std::string& path) {
  const auto arr = nochka::load_arrangement(path);
  for (const auto& f : nochka::closed_flats(arr)) {
    std::cout << flat_str(f) << "\n";
    const auto& b = f.ann.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::cout << "    [";
      for (std::size_t c = 0; c < b.cols(); ++c)
        std::cout << (c ? " " : "") << b.at(r, c).str();
      std::cout << "]\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nochka weights for hyperplane arrangements in subgeneral position"};
  app.require_subcommand(1);

  std::string path, out, cert_path;
  bool pretty = false;
  std::size_t trials = 100, n = 0, k = 0, q = 0, coincidences = 0;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "check n-subgeneral position");
  check->add_option("path", path)->required();

  auto* weights = app.add_subcommand("weights", "compute the weight certificate");
  weights->add_option("path", path)->required();
  weights->add_option("--out", out, "write the certificate to this file");
  weights->add_flag("--pretty", pretty, "print weights, tau, hull and verdicts");

  auto* verify = app.add_subcommand("verify", "verify a certificate against an arrangement");
  verify->add_option("path", path)->required();
  verify->add_option("--weights", cert_path, "certificate file (default: recompute)");
  verify->add_option("--oracle-trials", trials, "random trials per oracle (0 disables)");
  verify->add_option("--seed", seed);

  auto* generate = app.add_subcommand("generate", "generate a subgeneral arrangement");
  generate->add_option("--n", n)->required();
  generate->add_option("--k", k)->required();
  generate->add_option("--q", q)->required();
  generate->add_option("--seed", seed);
  generate->add_option("--coincidences", coincidences, "forced intersection flats");
  generate->add_option("--out", out);

  auto* diagram = app.add_subcommand("diagram", "render the diagram as SVG");
  diagram->add_option("path", path)->required();
  diagram->add_option("--out", out);

  auto* lattice = app.add_subcommand("lattice", "list all closed flats");
  lattice->add_option("path", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (check->parsed()) return cmd_check(path);
    if (weights->parsed()) return cmd_weights(path, out, pretty);
    if (verify->parsed()) return cmd_verify(path, cert_path, trials, effective_seed(seed));
    if (generate->parsed()) return cmd_generate(n, k, q, seed, coincidences, out);
    if (diagram->parsed()) return cmd_diagram(path, out);
    if (lattice->parsed()) return cmd_lattice(path);
  } catch (const nochka::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nochka::HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConditionFailed;
  } catch (const nochka::SubgeneralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& f : e.violations) std::cerr << "  " << flat_str(f) << "\n";
    return kExitConditionFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConditionFailed;
  }
  return kExitInvalidInput;
}

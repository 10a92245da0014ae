// Drives generate -> weights -> verify through the CLI binary for 500 seeds
// across 1 <= k <= n <= 5 and 2n-k+1 < q <= 12; every run must exit 0.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

int run(const std::string& cmd) {
  const int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: nochka_cli_roundtrip <path-to-cli> [count]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::size_t count = argc > 2 ? std::stoul(argv[2]) : 500;

  char scratch_template[] = "/tmp/nochka-roundtrip-XXXXXX";
  if (!mkdtemp(scratch_template)) return 2;
  const std::string scratch = scratch_template;
  const std::string arr = scratch + "/arr.json";
  const std::string cert = scratch + "/cert.json";

  std::vector<std::array<std::size_t, 3>> combos;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t q = 2 * n - k + 2; q <= 12; ++q) combos.push_back({n, k, q});

  for (std::size_t seed = 0; seed < count; ++seed) {
    const auto [n, k, q] = combos[seed % combos.size()];
    const std::string params = " --n " + std::to_string(n) + " --k " + std::to_string(k) +
                               " --q " + std::to_string(q) + " --seed " +
                               std::to_string(seed) + " --coincidences " +
                               std::to_string(seed % 3);
    if (run(cli + " generate" + params + " --out " + arr) != 0) {
      std::cerr << "generate failed at seed " << seed << params << "\n";
      return 1;
    }
    if (run(cli + " check " + arr) != 0) {
      std::cerr << "generated arrangement failed check at seed " << seed << params << "\n";
      return 1;
    }
    if (run(cli + " weights " + arr + " --out " + cert) != 0) {
      std::cerr << "weights failed at seed " << seed << params << "\n";
      return 1;
    }
    if (run(cli + " verify " + arr + " --weights " + cert + " --oracle-trials 20 --seed " +
            std::to_string(seed)) != 0) {
      std::cerr << "verify failed at seed " << seed << params << "\n";
      return 1;
    }
  }

  // NOCHKA_SEED takes precedence over --seed.
  const std::string by_flag = scratch + "/by_flag.json";
  const std::string by_env = scratch + "/by_env.json";
  run(cli + " generate --n 3 --k 2 --q 7 --seed 99 --out " + by_flag);
  setenv("NOCHKA_SEED", "99", 1);
  run(cli + " generate --n 3 --k 2 --q 7 --seed 1 --out " + by_env);
  unsetenv("NOCHKA_SEED");
  if (run("cmp -s " + by_flag + " " + by_env) != 0) {
    std::cerr << "NOCHKA_SEED did not override --seed\n";
    return 1;
  }

  std::cout << count << " generate/weights/verify round-trips, all exit 0\n";
  return 0;
}

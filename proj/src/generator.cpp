#include <algorithm>
#include <stdexcept>

#include "nochka/arrangement.hpp"
#include "nochka/rng.hpp"

namespace nochka {

namespace {

constexpr int kMaxAttempts = 512;

std::vector<Rational> random_covector(Rng& rng, std::size_t len, long bound) {
  while (true) {
    std::vector<Rational> v(len);
    bool nonzero = false;
    for (auto& c : v) {
      c = Rational(rng.uniform(-bound, bound));
      nonzero = nonzero || !c.is_zero();
    }
    if (nonzero) return v;
  }
}

// q distinct hyperplanes in general position in P^n.
std::vector<Hyperplane> random_general_position(Rng& rng, std::size_t n, std::size_t q,
                                                long bound) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Hyperplane> hyps;
    hyps.reserve(q);
    for (std::size_t i = 0; i < q; ++i)
      hyps.push_back(Hyperplane::normalized(random_covector(rng, n + 1, bound)));
    if (check_general_position(hyps, n).ok) return hyps;
  }
  throw std::runtime_error("generator: could not reach general position");
}

// A random point on the intersection of the hyperplanes indexed by subset,
// as integer combination of a null-space basis.
std::vector<Rational> random_point_on_flat(Rng& rng, const std::vector<Hyperplane>& hyps,
                                           const std::vector<std::size_t>& subset,
                                           std::size_t n, long bound) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(subset.size());
  for (std::size_t i : subset) rows.push_back(hyps[i].covector);
  const QMatrix basis = null_space(QMatrix::from_rows(rows));
  while (true) {
    std::vector<Rational> point(n + 1);
    bool nonzero = false;
    for (std::size_t b = 0; b < basis.rows(); ++b) {
      const Rational c(rng.uniform(-bound, bound));
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j <= n; ++j) point[j] += c * basis.at(b, j);
    }
    for (const auto& x : point) nonzero = nonzero || !x.is_zero();
    if (nonzero) return point;
  }
}

}  // namespace

Arrangement embed_restrict_generator(const GeneratorParams& p) {
  if (p.k < 1 || p.k > p.n) throw std::invalid_argument("generator: need 1 <= k <= n");
  if (p.q <= 2 * p.n - p.k + 1)
    throw std::invalid_argument("generator: need q > 2n-k+1");

  Rng rng(p.seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto hyps = random_general_position(rng, p.n, p.q, p.entry_bound);

    // Rows of M parametrize the embedded P^k: u in P^k maps to u*M in P^n,
    // and a hyperplane with covector c pulls back to M*c.
    const std::size_t coincidences =
        p.n == p.k ? 0 : std::min(p.coincidence_budget, p.k);
    QMatrix embedding(p.k + 1, p.n + 1);
    for (std::size_t c = 0; c < coincidences; ++c) {
      const std::size_t size = static_cast<std::size_t>(rng.uniform(2, p.n));
      std::vector<std::size_t> subset;
      while (subset.size() < size) {
        const auto i = static_cast<std::size_t>(rng.uniform(0, p.q - 1));
        if (std::find(subset.begin(), subset.end(), i) == subset.end()) subset.push_back(i);
      }
      const auto point = random_point_on_flat(rng, hyps, subset, p.n, p.entry_bound);
      for (std::size_t j = 0; j <= p.n; ++j) embedding.at(c, j) = point[j];
    }
    for (std::size_t r = coincidences; r <= p.k; ++r) {
      const auto row = random_covector(rng, p.n + 1, p.entry_bound);
      for (std::size_t j = 0; j <= p.n; ++j) embedding.at(r, j) = row[j];
    }
    if (rank(embedding) != p.k + 1) continue;

    Arrangement arr;
    arr.k = p.k;
    arr.n = p.n;
    bool degenerate = false;
    for (const auto& h : hyps) {
      std::vector<Rational> pulled(p.k + 1);
      bool nonzero = false;
      for (std::size_t r = 0; r <= p.k; ++r) {
        for (std::size_t j = 0; j <= p.n; ++j) pulled[r] += embedding.at(r, j) * h.covector[j];
        nonzero = nonzero || !pulled[r].is_zero();
      }
      if (!nonzero) {  // the embedded P^k lies inside this hyperplane
        degenerate = true;
        break;
      }
      arr.hyperplanes.push_back(Hyperplane::normalized(std::move(pulled)));
    }
    if (degenerate) continue;

    if (!check_subgeneral(arr).ok)
      throw std::logic_error("generator: restriction not subgeneral (internal bug)");
    return arr;
  }
  throw std::runtime_error("generator: retry budget exhausted");
}

}  // namespace nochka

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nochka/annihilator.hpp"

namespace nochka {

/// Hyperplane in P^k, stored as a covector normalized so that its first
/// nonzero coordinate is 1.
struct Hyperplane {
  std::vector<Rational> covector;

  static Hyperplane normalized(std::vector<Rational> covector);
  bool operator==(const Hyperplane& o) const = default;
};

/// A configuration of q hyperplanes in P^k, with the subgeneral parameter n.
/// Repeated covectors are legal and meaningful: alpha counts list positions.
struct Arrangement {
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<Hyperplane> hyperplanes;

  std::size_t q() const { return hyperplanes.size(); }
  std::size_t ambient_dim() const { return k + 1; }
};

struct ValidationIssue {
  std::optional<std::size_t> index;  // 1-based hyperplane index, when relevant
  std::string reason;
};

/// Structural checks: nonzero covectors of length k+1, 1 <= k <= n, q >= 1.
/// Reports every violation; empty result means the arrangement is well formed.
std::vector<ValidationIssue> validate(const Arrangement& arr);

/// A closed intersection subspace of the arrangement with its full index set
/// {i : H_i contains L} (0-based), alpha = |index_set| and codim.
struct Flat {
  std::vector<std::size_t> index_set;
  Annihilator ann;
  std::size_t alpha = 0;
  std::size_t codim = 0;
};

/// The empty subspace with its counting conventions: every hyperplane
/// contains it, so alpha = q and codim = k+1. Not part of closed_flats.
Flat empty_flat(const Arrangement& arr);

/// Every nonempty flat expressible as an intersection of a subset of the
/// hyperplanes (including P^k itself from the empty subset), each exactly
/// once with its closed index set, sorted by (codim, index_set).
std::vector<Flat> closed_flats(const Arrangement& arr);

struct SubgeneralReport {
  bool ok = false;
  std::vector<Flat> violations;  // flats with alpha > codim + n - k
};

/// Checks alpha(L) <= codim L + n - k over every nonempty flat.
SubgeneralReport check_subgeneral(const Arrangement& arr);

struct GeneralPositionResult {
  bool ok = false;
  // Witnesses when not ok; dependent_subset uses 0-based indices.
  std::optional<std::pair<std::size_t, std::size_t>> duplicate_pair;
  std::vector<std::size_t> dependent_subset;
};

/// General position in P^n: every subset of size m <= n+1 has covector rank
/// m. Duplicates after normalization fail with the witness pair.
GeneralPositionResult check_general_position(const std::vector<Hyperplane>& hyps,
                                             std::size_t n);

struct GeneratorParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t q = 0;
  std::uint64_t seed = 0;
  std::size_t coincidence_budget = 0;
  long entry_bound = 10;  // covector entries drawn uniformly from [-B, B]
};

/// Draws q random general-position hyperplanes in P^n, picks a random
/// (k+1)-dimensional parametrization of an embedded P^k (optionally forced
/// through up to coincidence_budget intersection flats of the originals),
/// and pulls every hyperplane back. The result is n-subgeneral by
/// construction and deterministic for a fixed seed.
Arrangement embed_restrict_generator(const GeneratorParams& params);

}  // namespace nochka

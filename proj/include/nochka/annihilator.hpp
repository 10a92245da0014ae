#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nochka/qmatrix.hpp"

namespace nochka {

/// A projective linear subspace L of P^k, represented by the space of linear
/// forms vanishing on it. The basis is kept in canonical reduced row-echelon
/// form with zero rows dropped, so two Annihilators describe the same
/// subspace iff they compare equal entry for entry.
///
/// rank == codim L, with rank k+1 encoding the empty subspace.
class Annihilator {
 public:
  Annihilator() : ambient_dim_(0), basis_(0, 0) {}

  static Annihilator whole_space(std::size_t ambient_dim);
  static Annihilator empty_space(std::size_t ambient_dim);
  static Annihilator from_rows(std::size_t ambient_dim,
                               const std::vector<std::vector<Rational>>& rows);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const QMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }

  bool is_empty() const { return rank() == ambient_dim_; }
  bool is_whole_space() const { return rank() == 0; }

  /// Subspace containment: *this superset-of other, i.e. every form vanishing
  /// on *this also vanishes on other.
  bool contains_subspace(const Annihilator& other) const;

  bool operator==(const Annihilator& o) const = default;

  /// Canonical text key, usable for deduplication maps.
  std::string key() const;

 private:
  Annihilator(std::size_t ambient_dim, QMatrix basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}
  std::size_t ambient_dim_;
  QMatrix basis_;
};

/// Annihilator of A intersect B: the span of both form spaces.
Annihilator ann_of_intersection(const Annihilator& a, const Annihilator& b);

/// Annihilator of the projective span A + B: the intersection of the two
/// form spaces, computed through the kernel of a stacked system. Together
/// with ann_of_intersection this is exactly modular:
/// codim(A+B) + codim(A∩B) = codim A + codim B.
Annihilator ann_of_sum(const Annihilator& a, const Annihilator& b);

/// True iff the hyperplane with covector h contains the subspace, i.e. h lies
/// in the row space of the basis. Every covector contains the empty subspace.
bool contains(const std::vector<Rational>& h, const Annihilator& a);

std::size_t codim(const Annihilator& a);

}  // namespace nochka

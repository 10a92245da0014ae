#include "nochka/annihilator.hpp"

#include <stdexcept>

namespace nochka {

namespace {

void require_same_ambient(const Annihilator& a, const Annihilator& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("Annihilator: ambient dimension mismatch");
}

// Reduce v against an RREF basis; v ends up zero iff it was in the row space.
std::vector<Rational> reduce_against(std::vector<Rational> v, const QMatrix& basis) {
  const std::size_t nc = basis.cols();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < nc && basis.at(i, p).is_zero()) ++p;
    if (p == nc || v[p].is_zero()) continue;
    const Rational f = v[p];
    for (std::size_t j = p; j < nc; ++j) v[j] -= f * basis.at(i, j);
  }
  return v;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

Annihilator Annihilator::whole_space(std::size_t ambient_dim) {
  return Annihilator(ambient_dim, QMatrix(0, ambient_dim));
}

Annihilator Annihilator::empty_space(std::size_t ambient_dim) {
  return Annihilator(ambient_dim, QMatrix::identity(ambient_dim));
}

Annihilator Annihilator::from_rows(std::size_t ambient_dim,
                                   const std::vector<std::vector<Rational>>& rows) {
  for (const auto& r : rows)
    if (r.size() != ambient_dim)
      throw std::invalid_argument("Annihilator: row length != ambient dimension");
  auto m = QMatrix::from_rows(rows);
  if (rows.empty()) m = QMatrix(0, ambient_dim);
  return Annihilator(ambient_dim, rref(m).m);
}

bool Annihilator::contains_subspace(const Annihilator& other) const {
  require_same_ambient(*this, other);
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    if (!all_zero(reduce_against(basis_.row(i), other.basis()))) return false;
  return true;
}

std::string Annihilator::key() const {
  std::string s;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    for (std::size_t j = 0; j < basis_.cols(); ++j) {
      s += basis_.at(i, j).str();
      s += ',';
    }
    s += ';';
  }
  return s;
}

Annihilator ann_of_intersection(const Annihilator& a, const Annihilator& b) {
  require_same_ambient(a, b);
  QMatrix stacked(0, a.ambient_dim());
  for (std::size_t i = 0; i < a.basis().rows(); ++i) stacked.append_row(a.basis().row(i));
  for (std::size_t i = 0; i < b.basis().rows(); ++i) stacked.append_row(b.basis().row(i));
  std::vector<std::vector<Rational>> rows;
  auto red = rref(stacked).m;
  for (std::size_t i = 0; i < red.rows(); ++i) rows.push_back(red.row(i));
  return Annihilator::from_rows(a.ambient_dim(), rows);
}

Annihilator ann_of_sum(const Annihilator& a, const Annihilator& b) {
  require_same_ambient(a, b);
  const std::size_t ra = a.rank(), rb = b.rank(), amb = a.ambient_dim();
  if (ra == 0 || rb == 0) return Annihilator::whole_space(amb);
  // Solve x^T A = y^T B by taking the kernel of the amb x (ra+rb) system
  // [A^T | -B^T]; each kernel vector yields one form in both row spaces.
  QMatrix sys(amb, ra + rb);
  for (std::size_t c = 0; c < amb; ++c) {
    for (std::size_t i = 0; i < ra; ++i) sys.at(c, i) = a.basis().at(i, c);
    for (std::size_t i = 0; i < rb; ++i) sys.at(c, ra + i) = -b.basis().at(i, c);
  }
  const QMatrix kernel = null_space(sys);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t v = 0; v < kernel.rows(); ++v) {
    std::vector<Rational> form(amb);
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t c = 0; c < amb; ++c) form[c] += kernel.at(v, i) * a.basis().at(i, c);
    rows.push_back(std::move(form));
  }
  return Annihilator::from_rows(amb, rows);
}

bool contains(const std::vector<Rational>& h, const Annihilator& a) {
  if (h.size() != a.ambient_dim())
    throw std::invalid_argument("contains: covector length != ambient dimension");
  if (all_zero(h)) throw std::invalid_argument("contains: zero covector");
  return all_zero(reduce_against(h, a.basis()));
}

std::size_t codim(const Annihilator& a) { return a.rank(); }

}  // namespace nochka

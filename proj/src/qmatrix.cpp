#include "nochka/qmatrix.hpp"

#include <stdexcept>

namespace nochka {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> grid) {
  rows_ = grid.size();
  cols_ = rows_ == 0 ? 0 : grid.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : grid) {
    if (r.size() != cols_) throw std::invalid_argument("QMatrix: ragged initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  QMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  m.entries_.reserve(m.rows_ * m.cols_);
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw std::invalid_argument("QMatrix: ragged rows");
    for (const auto& v : r) m.entries_.push_back(v);
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::vector<Rational> QMatrix::row(std::size_t r) const {
  return {entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_};
}

void QMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("QMatrix: row length mismatch");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

std::string QMatrix::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r == 0 ? "[" : " ";
    for (std::size_t c = 0; c < cols_; ++c) s += (c ? " " : "[") + at(r, c).str();
    s += "]";
    s += r + 1 == rows_ ? "]" : "\n";
  }
  return rows_ == 0 ? "[]" : s;
}

RrefResult rref(QMatrix m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m.at(p, c).is_zero()) ++p;
    if (p == nr) continue;
    if (p != r)
      for (std::size_t j = c; j < nc; ++j) std::swap(m.at(r, j), m.at(p, j));
    const Rational pivot = m.at(r, c);
    for (std::size_t j = c; j < nc; ++j) m.at(r, j) /= pivot;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Rational f = m.at(i, c);
      for (std::size_t j = c; j < nc; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  QMatrix out(r, nc);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = m.at(i, j);
  return {out, r};
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

QMatrix null_space(const QMatrix& m) {
  const auto [red, rk] = rref(m);
  const std::size_t nc = m.cols();
  // Pivot column of each reduced row, in order.
  std::vector<std::size_t> pivot_col(rk);
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t i = 0; i < rk; ++i) {
    std::size_t c = 0;
    while (c < nc && red.at(i, c).is_zero()) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  QMatrix basis(nc - rk, nc);
  std::size_t v = 0;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    basis.at(v, free) = Rational(1);
    for (std::size_t i = 0; i < rk; ++i) basis.at(v, pivot_col[i]) = -red.at(i, free);
    ++v;
  }
  return basis;
}

}  // namespace nochka

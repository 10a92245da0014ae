#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nochka/rational.hpp"

namespace nochka {

/// Dense matrix of exact rationals. Row-major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<long>> grid);

  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  void append_row(const std::vector<Rational>& row);

  bool operator==(const QMatrix& o) const = default;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// Canonical reduced row-echelon form with zero rows removed, plus rank.
/// Idempotent; the result is the unique canonical basis of the row space.
struct RrefResult {
  QMatrix m;
  std::size_t rank;
};
RrefResult rref(QMatrix m);

std::size_t rank(const QMatrix& m);

/// Basis of the null space {x : m x = 0}, one vector per row of the result.
QMatrix null_space(const QMatrix& m);

}  // namespace nochka

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "setalg/rational.hpp"
#include "setalg/subset.hpp"

namespace setalg {

using RationalVector = std::vector<Rational>;

// Dense matrix of exact rationals with optional subset labels on rows and
// columns (used for operators between homogeneous components).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  // Labels must match the corresponding dimension when supplied.
  void set_labels(std::vector<Subset> row_labels, std::vector<Subset> col_labels);
  const std::vector<Subset>& row_labels() const { return row_labels_; }
  const std::vector<Subset>& col_labels() const { return col_labels_; }

  RationalMatrix transposed() const;
  RationalVector apply(std::span<const Rational> x) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  // Compares dimensions and entries; labels are ignored.
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  std::vector<Subset> row_labels_;
  std::vector<Subset> col_labels_;
};

// Integer row echelon form produced by fraction-free (Bareiss) elimination.
struct EchelonForm {
  std::size_t cols = 0;
  std::vector<std::vector<Integer>> rows;  // only the nonzero rows
  std::vector<std::size_t> pivot_cols;     // pivot column of each row
};

EchelonForm fraction_free_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, one vector per free column in increasing column
// order, each scaled so its first nonzero coordinate is 1. Every vector is
// checked against m before being returned.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

}  // namespace setalg

#include "setalg/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "setalg/errors.hpp"

namespace setalg {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RationalMatrix::set_labels(std::vector<Subset> row_labels, std::vector<Subset> col_labels) {
  if ((!row_labels.empty() && row_labels.size() != rows_) ||
      (!col_labels.empty() && col_labels.size() != cols_)) {
    throw Error("label count does not match matrix shape");
  }
  row_labels_ = std::move(row_labels);
  col_labels_ = std::move(col_labels);
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

RationalVector RationalMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw Error("vector length does not match matrix columns");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0 && x[c] != 0) acc += a * x[c];
    }
    y[r] = acc;
  }
  return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shapes do not compose");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  out.row_labels_ = a.row_labels_;
  out.col_labels_ = b.col_labels_;
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

EchelonForm fraction_free_echelon(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Clear denominators row by row; row scaling preserves rank and kernel.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
    }
  }

  EchelonForm out;
  out.cols = cols;
  Integer previous = 1;
  std::size_t pivot_row = 0;
  Integer tmp;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[pivot_row]);
    const Integer& pivot = a[pivot_row][c];
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (pivot * a[i][j] - factor * a[pivot_row][j]) / previous, exactly.
        tmp = pivot * a[i][j];
        tmp -= factor * a[pivot_row][j];
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = pivot;
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  a.resize(pivot_row);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return fraction_free_echelon(m).pivot_cols.size(); }

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  const EchelonForm ech = fraction_free_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols);
    x[free] = 1;
    for (std::size_t i = ech.rows.size(); i-- > 0;) {
      const std::size_t pc = ech.pivot_cols[i];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (x[j] != 0 && ech.rows[i][j] != 0) acc += Rational(ech.rows[i][j]) * x[j];
      }
      x[pc] = -acc / Rational(ech.rows[i][pc]);
    }
    for (const Rational& v : x) {
      if (v != 0) {
        const Rational lead = v;
        for (Rational& y : x) y /= lead;
        break;
      }
    }
    for (const Rational& y : m.apply(x)) {
      if (y != 0) throw std::logic_error("nullspace vector failed exact verification");
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace setalg

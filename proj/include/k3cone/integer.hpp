// Arbitrary-precision integer vectors and matrices, plus the exact linear
// algebra the rest of the library is built on (fraction-free elimination,
// echelon forms, integer kernels, Hermite normal form).

#ifndef K3CONE_INTEGER_HPP_
#define K3CONE_INTEGER_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3cone {

using Int = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Int>;

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  // Every row must have the same length; an empty list gives a 0x0 matrix.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      v[r] = (*this)(r, c);
    return v;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      out.push_back(row(r));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;

// --- vectors ---------------------------------------------------------------

Int dot(const IntVec& a, const IntVec& b);
Int content(const IntVec& v);          // gcd of the entries, 0 for the zero vector
IntVec primitive(IntVec v);            // divided by its content
bool is_zero(const IntVec& v);
IntVec negated(IntVec v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec scaled(const IntVec& v, const Int& s);
// First nonzero entry is positive.
bool lex_positive(const IntVec& v);
std::string to_string(const IntVec& v);  // "(1,-1)"
IntVec parse_csv(const std::string& text);

// --- matrices --------------------------------------------------------------

IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVec multiply(const IntMatrix& m, const IntVec& v);
IntMatrix matrix_from_columns(const std::vector<IntVec>& cols, std::size_t rows);

// Bareiss fraction-free determinant.
Int determinant(const IntMatrix& m);
std::size_t rank(const std::vector<IntVec>& rows, std::size_t cols);
inline std::size_t rank(const IntMatrix& m) { return rank(m.to_rows(), m.cols()); }

// Integer matrix with adj(M) * M = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);

// Reduced row echelon form of the row space, each row scaled to a
// primitive integer vector with positive pivot. This is a canonical basis
// of the rational span of `rows`.
std::vector<IntVec> rref_basis(const std::vector<IntVec>& rows, std::size_t cols);

// Canonical representative of v modulo the span of an rref_basis: pivot
// columns are cleared and the result is made primitive.
IntVec reduce_modulo(IntVec v, const std::vector<IntVec>& rref);

// Rational nullspace {x : rows * x = 0} as primitive integer vectors.
std::vector<IntVec> nullspace(const std::vector<IntVec>& rows, std::size_t cols);

// Column-style unimodular reduction: finds unimodular U with A*U = H where
// H is in column echelon form. Columns of U beyond rank(A) span the
// saturated integer kernel of A.
struct ColumnReduction {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};
ColumnReduction column_reduce(const IntMatrix& a);

// Basis of Z^n ∩ ker(A), as rows in Hermite normal form.
std::vector<IntVec> integer_kernel(const IntMatrix& a);

// Row Hermite normal form of the lattice spanned by `rows` (zero rows dropped).
std::vector<IntVec> hermite_normal_form(const std::vector<IntVec>& rows, std::size_t cols);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  if (rows.empty())
    return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace k3cone

#endif

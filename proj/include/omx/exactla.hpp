#ifndef OMX_EXACTLA_HPP
#define OMX_EXACTLA_HPP

// Exact linear algebra over Q, F_p and Z.
//
// Everything here is a pure function of its arguments. Matrices are dense;
// the sizes we meet (boundary matrices of small cell complexes, arrangement
// matrices with a handful of rows) never justify anything cleverer.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace omx {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("Matrix: entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_)
        throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("Matrix product: inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(j, i) = m(i, j);
  return out;
}

/// Coefficient field: Q (characteristic 0) or F_p.
struct Field {
  std::uint32_t characteristic = 0;

  static constexpr Field rationals() { return Field{0}; }
  /// Throws if p is not prime.
  static Field prime(std::uint32_t p);

  bool is_rational() const { return characteristic == 0; }
  std::string name() const;
  bool operator==(const Field&) const = default;
};

/// The battery every Cohen-Macaulay verdict is checked against.
std::vector<Field> standard_fields();

/// Parses "Q", "QQ", "0" or a prime like "2", "F3".
Field parse_field(const std::string& text);

std::size_t rank(const IntMatrix& m, Field field);
std::size_t rank(const RatMatrix& m, Field field = Field::rationals());

/// Determinant over Z (fraction-free). Throws on non-square input.
Integer determinant(const IntMatrix& m);

/// Right kernel over Q. Each basis vector is primitive (content 1) with its
/// first nonzero entry positive; the list has cols - rank entries.
std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m);
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m);

struct SmithForm {
  /// d_1 | d_2 | ... | d_k with k = min(rows, cols); trailing entries may be 0.
  std::vector<Integer> diagonal;
  IntMatrix left;   // U, rows x rows, unimodular
  IntMatrix right;  // V, cols x cols, unimodular

  std::size_t rank() const;
  /// The diagonal entries larger than 1 among the nonzero ones.
  std::vector<Integer> torsion() const;
};

/// U * m * V = diag(d_1, ..., d_k) padded with zeros.
SmithForm smith_normal_form(const IntMatrix& m);

/// Diagonal only; skips the bookkeeping of U and V.
std::vector<Integer> smith_diagonal(const IntMatrix& m);

/// Z-basis of the integer kernel of m, read off the right Smith transform.
std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& m);

IntMatrix to_integer(const RatMatrix& m);  // throws if an entry is not integral
RatMatrix to_rational(const IntMatrix& m);

}  // namespace omx

#endif

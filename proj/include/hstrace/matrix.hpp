#pragma once

#include "hstrace/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hstrace {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Scalar& c);
/// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n, const FieldSpec& field = FieldSpec());
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Submatrix of rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix m);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Block-diagonal / horizontal / vertical concatenations.
Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix block_diagonal(const std::vector<Matrix>& parts);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form; unique for a given matrix.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// One solution X of m * X = rhs with free variables set to zero, or nullopt
/// when the system is inconsistent. Throws on a row-count mismatch.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

/// Null-space basis: one vector per free column f, with entry 1 at f and
/// zeros at the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace hstrace

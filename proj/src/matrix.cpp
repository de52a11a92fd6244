#include "hstrace/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hstrace {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Vector& v, const Scalar& c) {
  Vector r = v;
  for (auto& s : r) s *= c;
  return r;
}

void axpy(Vector& a, const Scalar& c, const Vector& b) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) p(i, j) += aik * bkj;
      }
    }
  return p;
}

Matrix operator*(const Scalar& c, Matrix m) {
  for (auto& s : m.data_)
    if (!s.is_zero()) s *= c;
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vector r(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const Scalar& aik = a(i, k);
      if (!aik.is_zero()) r[i] += aik * v[k];
    }
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ";" : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
  }
  os << ']';
  return os.str();
}

Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = parts.front().rows(), cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += p.cols();
  }
  Matrix m(rows, cols);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    m.set_block(0, c0, p);
    c0 += p.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return {};
  std::size_t cols = parts.front().cols(), rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += p.rows();
  }
  Matrix m(rows, cols);
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    m.set_block(r0, 0, p);
    r0 += p.rows();
  }
  return m;
}

Matrix block_diagonal(const std::vector<Matrix>& parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& p : parts) {
    m.set_block(r0, c0, p);
    r0 += p.rows();
    c0 += p.cols();
  }
  return m;
}

RrefResult rref(Matrix m) {
  RrefResult res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.reduced = std::move(m);
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: row count mismatch");
  auto [red, pivots] = rref(hstack({m, rhs}));
  if (m.rows() == 0) return Matrix(m.cols(), rhs.cols());
  Matrix x(m.cols(), rhs.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(pivots[i], j) = red(i, m.cols() + j);
  }
  return x;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return Matrix();
  auto x = solve(m, Matrix::identity(m.rows()));
  if (!x || rank(m) != m.rows()) return std::nullopt;
  return x;
}

}  // namespace hstrace

#include "hstrace/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace hstrace {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& generators) {
  Subspace s(ambient);
  for (const auto& g : generators) s.add(g);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v[pivots_[k]].is_zero()) continue;
    Scalar c = v[pivots_[k]];
    axpy(v, -c, rows_[k]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.rows_)
    if (!contains(b)) return false;
  return true;
}

bool Subspace::add(const Vector& v) {
  Vector w = reduce(v);
  std::size_t lead = 0;
  while (lead < w.size() && w[lead].is_zero()) ++lead;
  if (lead == w.size()) return false;
  Scalar inv = w[lead].inverse();
  for (auto& s : w)
    if (!s.is_zero()) s *= inv;
  for (auto& row : rows_) {
    if (row[lead].is_zero()) continue;
    Scalar c = row[lead];
    axpy(row, -c, w);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

std::vector<std::size_t> Subspace::complement() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
  Vector r = reduce(v);
  Vector c;
  c.reserve(ambient_ - rows_.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
      continue;
    }
    c.push_back(r[i]);
  }
  return c;
}

}  // namespace hstrace

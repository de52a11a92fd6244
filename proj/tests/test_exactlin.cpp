#include "hstrace/subspace.hpp"

#include <doctest.h>

using namespace hstrace;

namespace {

Matrix rows(std::size_t cols, std::initializer_list<std::initializer_list<long long>> data) {
  std::vector<Vector> r;
  for (const auto& row : data) {
    Vector v;
    for (auto x : row) v.push_back(Scalar(x));
    r.push_back(std::move(v));
  }
  return Matrix::from_rows(cols, r);
}

Scalar q(long n, long d) { return FieldSpec::rationals().make(mpz_class(n), mpz_class(d)); }

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(2, 4) == q(1, 2));
  CHECK((q(3, 7) * q(7, 3)).is_one());
  CHECK(q(-5, 9).inverse() == q(-9, 5));
  CHECK(q(1, 2).to_string() == "1/2");
  CHECK_THROWS(Scalar(0).inverse());
}

TEST_CASE("prime field arithmetic") {
  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(f7.make(3) * f7.make(5) == f7.one());
  CHECK(f7.make(-1) == f7.make(6));
  CHECK(f7.make(3).inverse() == f7.make(5));
  // 1/2 reduces to 4 mod 7
  CHECK(f7.make(mpz_class(1), mpz_class(2)) == f7.make(4));
  CHECK(f7.make(10).to_string() == "3");
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("rref, rank and kernel of a known matrix") {
  Matrix m = rows(4, {{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}});
  CHECK(rank(m) == 2);
  auto r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero(m * v));
  // Free columns 2 and 3 carry the unit entries.
  CHECK(ker[0][2] == Scalar(1));
  CHECK(ker[1][3] == Scalar(1));
}

TEST_CASE("inverse of the 4x4 Hilbert matrix has the classical integer entries") {
  Matrix h(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = q(1, static_cast<long>(i + j + 1));
  auto inv = inverse(h);
  REQUIRE(inv);
  Matrix expected = rows(4, {{16, -120, 240, -140}, {-120, 1200, -2700, 1680}, {240, -2700, 6480, -4200},
                             {-140, 1680, -4200, 2800}});
  CHECK(*inv == expected);
  CHECK(h * *inv == Matrix::identity(4));
}

TEST_CASE("solve and inconsistent systems") {
  Matrix m = rows(2, {{1, 1}, {1, -1}});
  auto x = solve(m, rows(1, {{3}, {1}}));
  REQUIRE(x);
  CHECK((*x)(0, 0) == Scalar(2));
  CHECK((*x)(1, 0) == Scalar(1));
  Matrix singular = rows(2, {{1, 1}, {2, 2}});
  CHECK_FALSE(solve(singular, rows(1, {{1}, {3}})));
  CHECK_FALSE(inverse(singular));
}

TEST_CASE("subspaces") {
  Subspace s = Subspace::span(3, {{Scalar(1), Scalar(1), Scalar(0)}, {Scalar(2), Scalar(2), Scalar(0)}});
  CHECK(s.dim() == 1);
  CHECK(s.contains(Vector{Scalar(-3), Scalar(-3), Scalar(0)}));
  CHECK_FALSE(s.contains(Vector{Scalar(1), Scalar(0), Scalar(0)}));
  CHECK(s.complement() == std::vector<std::size_t>{1, 2});
  // Quotient coordinates are read at the non-pivot positions 1 and 2.
  CHECK(s.quotient_coordinates(Vector{Scalar(1), Scalar(1), Scalar(0)}) == Vector{Scalar(0), Scalar(0)});
  CHECK(s.quotient_coordinates(Vector{Scalar(1), Scalar(0), Scalar(5)}) == Vector{Scalar(-1), Scalar(5)});
  CHECK(s.add(Vector{Scalar(0), Scalar(0), Scalar(1)}));
  CHECK_FALSE(s.add(Vector{Scalar(1), Scalar(1), Scalar(7)}));
  CHECK(Subspace::whole(3).contains(s));
  auto c = s.coordinates(Vector{Scalar(2), Scalar(2), Scalar(3)});
  CHECK(c == Vector{Scalar(2), Scalar(3)});
}

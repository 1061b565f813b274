#include "discop/rng.hpp"
#include "discop/smith.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace discop;

namespace {

Matrix<HPoly> hmat(size_t r, size_t c, std::initializer_list<HPoly> xs) {
  Matrix<HPoly> m(r, c);
  size_t k = 0;
  for (const auto& x : xs) m(k / c, k % c) = x, ++k;
  return m;
}

}  // namespace

TEST_CASE("smith normal form on the pinned examples") {
  HPoly h = HPoly::hbar();

  SECTION("diag(h, 1) reorders to (1, h)") {
    auto a = hmat(2, 2, {h, HPoly(0), HPoly(0), HPoly(1)});
    auto s = smith_normal_form(a);
    REQUIRE(s.rank == 2);
    CHECK(s.S(0, 0) == HPoly(1));
    CHECK(s.S(1, 1) == h);
    CHECK(s.verify(a));
  }

  SECTION("identity 3x3") {
    auto a = Matrix<HPoly>::identity(3);
    auto s = smith_normal_form(a);
    CHECK(s.rank == 3);
    CHECK(s.invariant_factors() ==
          std::vector<HPoly>{HPoly(1), HPoly(1), HPoly(1)});
    CHECK(s.verify(a));
  }

  SECTION("[[h,1],[0,h]] has factors (1, h^2)") {
    // hand row reduction: swap in the unit, clear, leaving h^2
    auto a = hmat(2, 2, {h, HPoly(1), HPoly(0), h});
    auto s = smith_normal_form(a);
    REQUIRE(s.rank == 2);
    CHECK(s.S(0, 0) == HPoly(1));
    CHECK(s.S(1, 1) == h * h);
    CHECK(s.verify(a));
  }

  SECTION("empty and zero matrices") {
    Matrix<HPoly> e(0, 3);
    auto s = smith_normal_form(e);
    CHECK(s.rank == 0);
    CHECK(s.invariant_factors().empty());
    Matrix<HPoly> z(2, 2);
    auto sz = smith_normal_form(z);
    CHECK(sz.rank == 0);
    CHECK(sz.verify(z));
  }
}

TEST_CASE("smith certificates on random matrices") {
  Rng rng(20240811);
  for (int trial = 0; trial < 30; ++trial) {
    size_t m = 1 + rng.below(4), n = 1 + rng.below(4);
    Matrix<HPoly> a(m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) {
        int deg = static_cast<int>(rng.below(3)) - 1;
        HPoly p;
        for (int d = 0; d <= deg; ++d)
          p += HPoly::hbar(d, rng.rational(4));
        a(i, j) = p;
      }
    auto s = smith_normal_form(a);
    CHECK(s.verify(a));
    for (size_t i = 0; i + 1 < s.rank; ++i)
      CHECK(HPoly::divides(s.S(i, i), s.S(i + 1, i + 1)));
    // transforms are invertible: unit determinants
    CHECK(determinant(s.U).is_unit());
    CHECK(determinant(s.V).is_unit());
    CHECK(s.rank == rank(a));
  }
}

TEST_CASE("rank on pinned examples") {
  CHECK(rank(Matrix<HPoly>::identity(4)) == 4);
  CHECK(rank(Matrix<Rational>(3, 2)) == 0);
  // the finite-difference column (-1, 1)^T of the two-site model
  Matrix<Rational> q(2, 1);
  q(0, 0) = -1;
  q(1, 0) = 1;
  CHECK(rank(q) == 1);
}

TEST_CASE("solve_modulo_image classifies image membership") {
  HPoly h = HPoly::hbar();

  SECTION("image element maps to the zero class") {
    auto a = hmat(2, 2, {HPoly(1), h, HPoly(2), HPoly(1)});
    Vec<HPoly> v = a.col(0);
    CHECK(solve_modulo_image(v, a).is_zero());
  }

  SECTION("zero map leaves e1 as a free coordinate") {
    Matrix<HPoly> a(2, 2);
    Vec<HPoly> e1 = {HPoly(1), HPoly(0)};
    auto cls = solve_modulo_image(e1, a);
    CHECK_FALSE(cls.is_zero());
    REQUIRE(cls.coords.size() == 2);
    REQUIRE(cls.moduli == std::vector<HPoly>{HPoly(0), HPoly(0)});
    CHECK(cls.coords[0] == HPoly(1));
    CHECK(cls.coords[1] == HPoly(0));
  }

  SECTION("torsion is detected: coker(h) is not free") {
    auto a = hmat(1, 1, {h});
    Vec<HPoly> one = {HPoly(1)};
    auto cls = solve_modulo_image(one, a);
    CHECK_FALSE(cls.is_zero());
    REQUIRE(cls.moduli.size() == 1);
    CHECK(cls.moduli[0] == h);
    auto snf = smith_normal_form(a);
    CHECK_FALSE(snf.all_factors_unit());
  }

  SECTION("dimension mismatch throws") {
    Matrix<HPoly> a(2, 2);
    Vec<HPoly> bad = {HPoly(1)};
    CHECK_THROWS_AS(solve_modulo_image(bad, a), std::invalid_argument);
  }
}

TEST_CASE("zero class iff an explicit preimage exists") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    size_t m = 1 + rng.below(3), n = 1 + rng.below(3);
    Matrix<HPoly> a(m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j)
        a(i, j) = HPoly::hbar(rng.below(2), rng.rational(3)) +
                  HPoly(rng.rational(2));
    Vec<HPoly> v(m);
    for (auto& x : v) x = HPoly::hbar(rng.below(2), rng.rational(3));
    auto snf = smith_normal_form(a);
    bool zero_class = solve_modulo_image(v, a, snf).is_zero();
    auto x = solve_linear(a, v, snf);
    CHECK(zero_class == x.has_value());
    if (x) CHECK(a.apply(*x) == v);
  }
}

TEST_CASE("kernel basis spans the kernel") {
  HPoly h = HPoly::hbar();
  auto a = hmat(1, 2, {h, -h});
  auto snf = smith_normal_form(a);
  auto basis = kernel_basis(a, snf);
  REQUIRE(basis.size() == 1);
  CHECK(a.apply(basis[0]) == Vec<HPoly>{HPoly(0)});
}

TEST_CASE("bareiss determinant") {
  Matrix<Rational> a(3, 3);
  int vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = vals[i][j];
  CHECK(determinant(a) == Rational(21));  // cofactor expansion by hand
  HPoly h = HPoly::hbar();
  auto b = hmat(2, 2, {HPoly(1), h, h, HPoly(1)});
  CHECK(determinant(b) == HPoly(1) - h * h);
}

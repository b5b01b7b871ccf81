#include "doctest.h"

#include <random>

#include "groupk/intlinalg.hpp"
#include "support/oracles.hpp"

using namespace groupk;
using groupk::testing::determinant;
using groupk::testing::maximal_minors;

namespace {
  IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long range) {
    std::uniform_int_distribution<long> x(-range, range);
    IntMatrix                           M(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        M(i, j) = x(rng);
      }
    }
    return M;
  }

  void check_smith(IntMatrix const& A) {
    auto const s = smith_normal_form(A);
    REQUIRE(s.U * A * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      for (std::size_t j = 0; j < A.cols(); ++j) {
        if (i != j || i >= s.rank) {
          CHECK(s.D(i, j) == 0);
        }
      }
    }
    auto const d = s.diagonal();
    for (std::size_t t = 0; t < d.size(); ++t) {
      CHECK(d[t] > 0);
      if (t + 1 < d.size()) {
        CHECK(d[t + 1] % d[t] == 0);
      }
    }
  }
}  // namespace

TEST_CASE("smith_normal_form: fixed cases") {
  auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.D == IntMatrix::identity(3));
  CHECK(id.rank == 3);

  auto zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.D.is_zero());
  CHECK(zero.rank == 0);

  // d_1 = gcd of entries = 2, d_1 d_2 = |det| = 8
  IntMatrix A{{2, 4}, {6, 8}};
  auto      s = smith_normal_form(A);
  CHECK(s.diagonal() == std::vector<Integer>{2, 4});
  check_smith(A);

  check_smith(IntMatrix{{0, 0, 3}, {0, 0, 0}, {5, 0, 0}});
  check_smith(IntMatrix{{-7}});
  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix(3, 0));
}

TEST_CASE("smith_normal_form: large entries stay exact") {
  IntMatrix A{{1000000007, 998244353}, {123456789, 987654321}};
  IntMatrix B = A * A * A * A;  // entries well beyond 64 bits
  check_smith(B);
  auto const s = smith_normal_form(B);
  Integer    prod = 1;
  for (auto const& d : s.diagonal()) {
    prod *= d;
  }
  CHECK(prod == abs(determinant(B)));
}

TEST_CASE("smith_normal_form: random matrices against the maximal-minor oracle") {
  std::mt19937_64                     rng(29);
  std::uniform_int_distribution<int>  dim(1, 5);
  for (int t = 0; t < 200; ++t) {
    IntMatrix A = random_matrix(rng, dim(rng), dim(rng), t % 2 == 0 ? 3 : 20);
    check_smith(A);
    auto const s      = smith_normal_form(A);
    auto const minors = maximal_minors(A);
    CHECK(s.rank == minors.rank);
    Integer prod = 1;
    for (auto const& d : s.diagonal()) {
      prod *= d;
    }
    CHECK(prod == minors.gcd);
  }
}

TEST_CASE("kernel_basis") {
  auto k1 = kernel_basis(IntMatrix{{1, 1}});
  REQUIRE(k1.cols() == 1);
  CHECK(abs(k1(0, 0)) == 1);
  CHECK(k1(0, 0) == -k1(1, 0));

  auto k2 = kernel_basis(IntMatrix{{0}, {0}});
  REQUIRE(k2.cols() == 1);
  CHECK(abs(k2(0, 0)) == 1);

  CHECK(kernel_basis(IntMatrix{{2, 4}, {6, 8}}).cols() == 0);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    IntMatrix A = random_matrix(rng, 1 + t % 3, 1 + t % 5, 4);
    IntMatrix K = kernel_basis(A);
    CHECK((A * K).is_zero());
    CHECK(K.cols() + smith_normal_form(A).rank == A.cols());
    // saturated: the kernel basis columns extend to a unimodular basis, so
    // the cokernel of K is free
    if (K.cols() > 0) {
      CHECK(cokernel(K).is_free());
    }
  }
}

TEST_CASE("cokernel") {
  CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}) == AbelianGroup{0, {6}});
  CHECK(cokernel(IntMatrix(2, 1)) == AbelianGroup::free(2));
  CHECK(cokernel(IntMatrix{{1}}).is_trivial());
  CHECK(cokernel(IntMatrix{{2, -3}}).is_trivial());
  CHECK(cokernel(IntMatrix{{2}, {-3}}) == AbelianGroup::free(1));
}

TEST_CASE("cokernel invariances") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    std::size_t const r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IntMatrix const   A = random_matrix(rng, r, c, 6);
    auto const        g = cokernel(A);

    IntMatrix swapped = A;
    swapped.swap_rows(0, r - 1);
    swapped.swap_cols(0, c - 1);
    CHECK(cokernel(swapped) == g);

    CHECK(cokernel(A.hconcat(IntMatrix(r, 2))) == g);

    IntMatrix negated = A;
    for (std::size_t i = 0; i < r; ++i) {
      negated(i, 0) = -negated(i, 0);
    }
    CHECK(cokernel(negated) == g);
  }
}

TEST_CASE("quotient_lattice") {
  IntMatrix g1(4, 1);
  g1(0, 0) = 1;
  g1(1, 0) = 1;
  g1(2, 0) = -1;
  g1(3, 0) = -1;
  CHECK(quotient_lattice(4, g1) == AbelianGroup::free(3));
  CHECK(quotient_lattice(2, IntMatrix(0, 0)) == AbelianGroup::free(2));
  CHECK(quotient_lattice(1, IntMatrix{{3}}) == AbelianGroup{0, {3}});
  CHECK_THROWS_AS(quotient_lattice(3, IntMatrix{{3}}), std::invalid_argument);
}

TEST_CASE("direct_sum") {
  CHECK(direct_sum(AbelianGroup::free(2), AbelianGroup::free(3)) == AbelianGroup::free(5));
  CHECK(direct_sum(AbelianGroup{0, {2}}, AbelianGroup{0, {3}}) == AbelianGroup{0, {6}});
  CHECK(direct_sum(AbelianGroup{0, {2}}, AbelianGroup{0, {2}}) == AbelianGroup{0, {2, 2}});
  CHECK(direct_sum(AbelianGroup{1, {2, 4}}, AbelianGroup{0, {6}})
        == AbelianGroup{1, {2, 2, 12}});
  CHECK(direct_sum(AbelianGroup{}, AbelianGroup{}).is_trivial());

  // agrees with the cokernel of the block-diagonal relation matrix
  std::mt19937_64                    rng(41);
  std::uniform_int_distribution<long> x(1, 40);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a{{x(rng), 0}, {0, x(rng)}};
    IntMatrix b{{x(rng)}};
    IntMatrix both(3, 3);
    both(0, 0) = a(0, 0);
    both(1, 1) = a(1, 1);
    both(2, 2) = b(0, 0);
    CHECK(direct_sum(cokernel(a), cokernel(b)) == cokernel(both));
  }
}

TEST_CASE("to_string") {
  CHECK(to_string(AbelianGroup{}) == "0");
  CHECK(to_string(AbelianGroup::free(1)) == "Z");
  CHECK(to_string(AbelianGroup{3, {2, 6}}) == "Z^3 + Z/2 + Z/6");
}

#include <doctest.h>

#include <random>

#include "logcy/linalg.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace logcy;

namespace {

IntMatrix random_symmetric(std::mt19937& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = d(rng);
      m(j, i) = m(i, j);
    }
  return m;
}

}  // namespace

TEST_CASE("inertia of small forms") {
  CHECK(inertia(IntMatrix{{-3, 2}, {2, -3}}) == Inertia{0, 0, 2});
  CHECK(inertia(IntMatrix{{-2, 2}, {2, -2}}) == Inertia{0, 1, 1});
  CHECK(inertia(oracle::cycle_matrix({0, 0, 0, 0})) == Inertia{1, 2, 1});
  CHECK(inertia(IntMatrix{{0, 1}, {1, 0}}) == Inertia{1, 0, 1});
  CHECK(inertia(IntMatrix{{0, 0}, {0, 0}}) == Inertia{0, 2, 0});
  CHECK_THROWS_AS(inertia(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("inertia agrees with Descartes counting on the characteristic polynomial") {
  std::mt19937 rng(3);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + t % 6;
    // Sparse zero-heavy matrices exercise the zero-pivot branches.
    const IntMatrix m = random_symmetric(rng, n, t % 2 ? -1 : -4, t % 2 ? 1 : 4);
    const Inertia in = inertia(m);
    CHECK(in == oracle::descartes_inertia(m));
    CHECK(in.dimension() == n);
  }
}

TEST_CASE("determinant matches Leibniz expansion") {
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    std::uniform_int_distribution<long> d(-5, 5);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (t % 3 == 0 && d(rng) > 1) ? 0 : d(rng);
    CHECK(determinant(m) == oracle::leibniz_det(m));
  }
  CHECK(determinant(oracle::cycle_matrix({-2, -2})) == 0);
  CHECK(determinant(oracle::cycle_matrix({-3, -3})) == 5);
}

TEST_CASE("rank, solve and nullspace") {
  std::mt19937 rng(9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + t % 5;
    const std::size_t c = 1 + (t / 5) % 5;
    std::uniform_int_distribution<long> d(-3, 3);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    const std::size_t rk = rank(m);
    CHECK(rk == oracle::integer_rank(m));
    const auto ns = nullspace(m);
    CHECK(ns.size() == c - rk);
    for (const auto& v : ns)
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j) s += Rational(m(i, j)) * v[j];
        CHECK(s == 0);
      }
    std::vector<Rational> a(r);
    for (auto& x : a) {
      x = Rational(d(rng), 1 + (t % 3));
      x.canonicalize();
    }
    const auto z = solve_rational(m, std::span<const Rational>(a));
    if (z) {
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j) s += Rational(m(i, j)) * (*z)[j];
        CHECK(s == a[i]);
      }
    } else {
      // Inconsistent exactly when appending the column raises the rank.
      IntMatrix aug(r, c + 1);
      Integer l = 1;
      for (const auto& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j) * l;
        aug(i, c) = a[i].get_num() * (l / a[i].get_den());
      }
      CHECK(oracle::integer_rank(aug) == rk + 1);
    }
  }
}

TEST_CASE("solve on the boundary examples") {
  const std::vector<Integer> ones{1, 1};
  CHECK_FALSE(solve_rational(oracle::cycle_matrix({-2, -2}), std::span<const Integer>(ones)));
  const auto z = solve_rational(oracle::cycle_matrix({-3, -3}), std::span<const Integer>(ones));
  REQUIRE(z);
  CHECK((*z)[0] == -1);
  CHECK((*z)[1] == -1);
}

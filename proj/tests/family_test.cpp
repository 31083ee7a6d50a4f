#include <doctest.h>

#include <cmath>
#include <random>

#include "maskent/error.hpp"
#include "maskent/family.hpp"
#include "maskent/tightness.hpp"
#include "maskent/verify.hpp"
#include "oracles.hpp"

using namespace maskent;

namespace {

FunctionTable swap_table(const FieldPtr& field) {
  return FunctionTable::tabulate(field, 2, [&](const FieldVector& x) { return FieldVector(field, {x[1], x[0]}); });
}

// cp(g_k(A)) for f linear: g_k(x) = M_k x, so cp = q^{-rank M_k}.
Rational swap_cp_by_rank(const FieldPtr& field) {
  const std::uint32_t q = field->q();
  Rational total;
  for (Element k1 = 0; k1 < q; ++k1)
    for (Element k2 = 0; k2 < q; ++k2) {
      const std::size_t r = oracle::rank(*field, {{k1, 1}, {1, k2}});
      total += Rational(1, ipow(Rational::Integer(q), static_cast<unsigned>(r)));
    }
  return total / Rational(q * q);
}

}  // namespace

TEST_CASE("g_k tables") {
  const auto f3 = build_field(3, 1);
  std::mt19937_64 rng(1);
  const FunctionTable f = random_table(f3, 2, rng);
  CHECK(gk_table(f, FieldVector::zeros(f3, 2)) == f);

  // f = 0 with all-nonzero k is the bijection x -> k ⊙ x
  const FieldVector k(f3, {1, 2});
  const FunctionTable g = gk_table(zero_function(f3, 2), k);
  CHECK(distribution_of(g).outcomes().size() == 9);
  for (std::uint64_t c = 0; c < 9; ++c) {
    const auto x = FieldVector::from_code(f3, 2, c);
    CHECK(g(x) == mask_product(k, x));
  }

  // x^2 + x vanishes on GF(2)
  const auto f2 = build_field(2, 1);
  const FunctionTable g1 = gk_table(square_family(f2, 1), FieldVector(f2, {1}));
  CHECK(g1.outputs()[0] == 0);
  CHECK(g1.outputs()[1] == 0);

  CHECK_THROWS_AS(gk_table(f, FieldVector::zeros(f3, 1)), ArgumentError);
  CHECK_THROWS_AS(gk_table(f, FieldVector::zeros(build_field(5, 1), 2)), ArgumentError);
}

TEST_CASE("function table validation") {
  const auto f3 = build_field(3, 1);
  CHECK_THROWS_AS(FunctionTable(f3, 1, {0, 1}), TableError);
  CHECK_THROWS_AS(FunctionTable(f3, 1, {0, 1, 3}), TableError);
  CHECK_THROWS_AS(FunctionTable(f3, 0, {}), TableError);
  CHECK_THROWS_AS(FunctionTable(nullptr, 1, {0}), TableError);
  CHECK_NOTHROW(FunctionTable(f3, 1, {0, 1, 1}));
}

TEST_CASE("bounds") {
  auto b = bounds(2, 1);
  CHECK(b.cp_bound == Rational(3, 4));
  CHECK(b.h2_bound == doctest::Approx(0.4150374992788438).epsilon(1e-13));
  b = bounds(2, 2);
  CHECK(b.cp_bound == Rational(9, 16));
  CHECK(b.h2_bound == doctest::Approx(0.8300749985576876).epsilon(1e-13));
  b = bounds(3, 1);
  CHECK(b.cp_bound == Rational(5, 9));
  CHECK(b.h2_bound == doctest::Approx(0.8479969065549501).epsilon(1e-13));
  CHECK(bounds(2, 4).cp_bound == Rational(81, 256));
  CHECK(bounds(8, 1).cp_bound == Rational(15, 64));
  CHECK_THROWS_AS(bounds(1, 1), ArgumentError);
}

TEST_CASE("family averages: worked examples") {
  const auto f2 = build_field(2, 1);
  auto r = family_averages(zero_function(f2, 1));
  CHECK(r.avg_cp == Rational(3, 4));
  CHECK(r.equality_holds);
  CHECK(r.coordinatewise);

  const auto f3 = build_field(3, 1);
  r = family_averages(square_family(f3, 1), true);
  CHECK(r.avg_cp == Rational(5, 9));
  CHECK(r.avg_h2 == doctest::Approx(0.8479969065549501).epsilon(1e-12));
  CHECK(r.avg_shannon == doctest::Approx(0.9182958340544896).epsilon(1e-12));
  REQUIRE(r.per_k);
  CHECK(r.per_k->size() == 3);
  for (const auto& e : *r.per_k) {
    CHECK(e.cp == Rational(5, 9));
    CHECK(e.image_size == 2);
  }

  const auto f22 = build_field(2, 1);
  const FunctionTable swap = swap_table(f22);
  r = family_averages(swap);
  CHECK(r.avg_cp == Rational(5, 16));
  CHECK(r.avg_cp == oracle::average_cp_by_pairs(swap));
  CHECK(r.avg_cp == swap_cp_by_rank(f22));
  CHECK(r.avg_cp < r.cp_bound);
  CHECK_FALSE(r.coordinatewise);
  CHECK_FALSE(r.equality_holds);
}

TEST_CASE("swap map on larger fields matches the rank oracle") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto field = build_field_of_order(q);
    const FunctionTable swap = swap_table(field);
    CHECK(family_averages(swap).avg_cp == swap_cp_by_rank(field));
  }
}

TEST_CASE("per-k cp matches pair counting") {
  std::mt19937_64 rng(3);
  const auto field = build_field(2, 2);
  const FunctionTable f = random_table(field, 2, rng);
  const auto r = family_averages(f, true);
  for (const auto& e : *r.per_k) {
    REQUIRE(e.cp == oracle::cp_by_pairs(f, e.k));
    REQUIRE(e.h2 == doctest::Approx(-e.cp.log2()).epsilon(1e-12));
    REQUIRE(e.image_size == distribution_of(gk_table(f, e.k)).outcomes().size());
  }
}

TEST_CASE("coordinate-wise detection") {
  const auto f3 = build_field(3, 1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) CHECK(is_coordinatewise(random_table(f3, 1, rng)));
  CHECK(is_coordinatewise(square_family(f3, 2)));
  CHECK(is_coordinatewise(identity_function(f3, 3)));
  CHECK(is_coordinatewise(zero_function(f3, 2)));
  CHECK_FALSE(is_coordinatewise(swap_table(build_field(2, 1))));
  // f(x1, x2) = (x1 + x2, x2) mixes coordinates
  const FunctionTable mix = FunctionTable::tabulate(f3, 2, [&](const FieldVector& x) { return FieldVector(f3, {f3->add(x[0], x[1]), x[1]}); });
  CHECK_FALSE(is_coordinatewise(mix));
}

TEST_CASE("property: bound, n = 1 exactness, Jensen step, pair oracle") {
  std::mt19937_64 rng(424242);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto field = build_field_of_order(q);
    for (std::size_t n : {1u, 2u}) {
      for (int trial = 0; trial < 8; ++trial) {
        const FunctionTable f = random_table(field, n, rng);
        const auto r = family_averages(f);
        REQUIRE(r.avg_cp <= r.cp_bound);
        REQUIRE(r.avg_h2 >= r.h2_bound - 1e-9);
        REQUIRE(r.avg_h2 >= -r.avg_cp.log2() - 1e-9);
        REQUIRE(r.avg_shannon >= r.avg_h2 - 1e-12);
        if (n == 1) REQUIRE(r.avg_cp == Rational(2 * q - 1, q * q));
        if (r.coordinatewise) REQUIRE(r.equality_holds);
        if (q <= 4) REQUIRE(r.avg_cp == oracle::average_cp_by_pairs(f));
        REQUIRE(family_collision_count(f) == r.avg_cp.numerator() * (ipow(Rational::Integer(f.domain_size()), 3) / r.avg_cp.denominator()));
      }
    }
  }
}

TEST_CASE("chain rule for coordinate-wise tables") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto field = build_field_of_order(q);
    for (int trial = 0; trial < 5; ++trial) {
      const FieldVector a(field, {1 + static_cast<Element>(rng() % (q - 1)), 1 + static_cast<Element>(rng() % (q - 1))});
      const FieldVector b(field, {static_cast<Element>(rng() % q), static_cast<Element>(rng() % q)});
      const FieldVector c(field, {static_cast<Element>(rng() % q), static_cast<Element>(rng() % q)});
      CHECK(chain_rule_gap(diagonal_quadratic(a, b, c)) < 1e-9);
    }
  }
  // Not asserted for mixed tables, but the swap on GF(2)^2 has a visible gap.
  CHECK(chain_rule_gap(swap_table(build_field(2, 1))) > 0.1);
}

TEST_CASE("budget guard") {
  const auto f3 = build_field(3, 1);
  const FunctionTable f = square_family(f3, 2);
  CHECK_THROWS_AS(family_averages(f, false, 80), BudgetError);
  CHECK_NOTHROW(family_averages(f, false, 81));
}

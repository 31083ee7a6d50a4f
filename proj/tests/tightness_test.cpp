#include <doctest.h>

#include <random>

#include "maskent/error.hpp"
#include "maskent/tightness.hpp"
#include "maskent/verify.hpp"
#include "oracles.hpp"

using namespace maskent;

TEST_CASE("square family") {
  CHECK(square_family(2, 1) == identity_function(build_field(2, 1), 1));
  const auto gf4 = square_family(4, 1);
  CHECK(distribution_of(gf4).outcomes().size() == 4);
  const auto gf3 = square_family(3, 1);
  CHECK(std::vector<std::uint64_t>(gf3.outputs().begin(), gf3.outputs().end()) == std::vector<std::uint64_t>{0, 1, 1});
}

TEST_CASE("tightness predictions") {
  auto t = tightness_predictions(2, 1);
  CHECK(t.avg_shannon == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t.avg_h2 == doctest::Approx(0.5).epsilon(1e-15));
  t = tightness_predictions(3, 1);
  CHECK(t.avg_shannon == doctest::Approx(0.9182958340544896).epsilon(1e-13));
  CHECK(t.avg_h2 == doctest::Approx(0.8479969065549501).epsilon(1e-13));
  t = tightness_predictions(4, 1);
  CHECK(t.avg_shannon == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(t.avg_h2 == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(family_averages(square_family(4, 1)).avg_cp == Rational(7, 16));
}

TEST_CASE("square family matches predictions") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (std::size_t n : {1u, 2u}) {
      CAPTURE(q);
      CAPTURE(n);
      const auto r = family_averages(square_family(q, n));
      const auto t = tightness_predictions(q, n);
      CHECK(std::abs(r.avg_shannon - t.avg_shannon) < 1e-9);
      CHECK(std::abs(r.avg_h2 - t.avg_h2) < 1e-9);
    }
  }
  const auto r = family_averages(square_family(5, 2));
  CHECK(std::abs(r.avg_h2 - (2 * std::log2(5.0) - 2 * std::log2(9.0 / 5.0))) < 1e-9);
}

TEST_CASE("even square map: cp(g_k) = 2^{weight(k)} / q^n") {
  for (std::uint32_t q : {2u, 4u, 8u}) {
    const auto r = family_averages(square_family(q, 2), true);
    for (const auto& e : *r.per_k) {
      REQUIRE(e.cp == Rational(ipow(Rational::Integer(2), static_cast<unsigned>(hamming_weight(e.k))), Rational::Integer(q * q)));
    }
  }
}

TEST_CASE("preimage profiles") {
  const auto gf4 = build_field(2, 2);
  CHECK(preimage_profile(gf4, 0).sizes == std::vector<std::uint64_t>{1, 1, 1, 1});
  for (Element k = 1; k < 4; ++k) {
    const auto sizes = preimage_profile(gf4, k).sizes;
    CHECK(std::count(sizes.begin(), sizes.end(), 2) == 2);
    CHECK(std::count(sizes.begin(), sizes.end(), 0) == 2);
  }

  // GF(5), k = 2: x^2 + 2x takes 0,3,3,0,4 on x = 0..4
  const auto gf5 = build_field(5, 1);
  const auto p = preimage_profile(gf5, 2);
  CHECK(p.sizes == std::vector<std::uint64_t>{2, 0, 0, 2, 1});
  CHECK(singleton_fiber_target(*gf5, 2) == 4);
  CHECK_THROWS_AS(singleton_fiber_target(*gf4, 1), DomainError);
}

TEST_CASE("preimage sizes by direct enumeration") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const auto field = build_field_of_order(q);
    for (Element k = 0; k < q; ++k) {
      const auto profile = preimage_profile(field, k);
      for (Element y = 0; y < q; ++y) {
        std::uint64_t count = 0;
        for (Element x = 0; x < q; ++x) count += field->add(field->mul(x, x), field->mul(k, x)) == y;
        REQUIRE(profile.sizes[y] == count);
      }
      REQUIRE(profile.sizes[singleton_fiber_target(*field, k)] == 1);
    }
  }
}

TEST_CASE("weight totals") {
  CHECK(total_weight(2, 2).recurrence == 4);
  CHECK(total_weight(2, 2).closed_form == 4);
  CHECK(total_weight(3, 1).recurrence == 2);
  CHECK(total_weight(3, 2).recurrence == 12);
  CHECK(total_weight(3, 2).closed_form == 12);
  CHECK(oracle::weight_sum(build_field(3, 1), 2) == 12);
}

TEST_CASE("diagonal quadratics") {
  const auto gf5 = build_field(5, 1);
  const auto one = FieldVector::ones(gf5, 2), zero = FieldVector::zeros(gf5, 2);
  CHECK(diagonal_quadratic(one, zero, zero) == square_family(gf5, 2));

  const FunctionTable f = diagonal_quadratic(FieldVector(gf5, {2}), FieldVector(gf5, {3}), FieldVector(gf5, {1}));
  CHECK(is_coordinatewise(f));
  const auto r = family_averages(f);
  const auto t = tightness_predictions(5, 1);
  CHECK(std::abs(r.avg_shannon - t.avg_shannon) < 1e-9);
  CHECK(std::abs(r.avg_h2 - t.avg_h2) < 1e-9);

  CHECK_THROWS_AS(diagonal_quadratic(FieldVector(gf5, {0, 1}), zero, zero), DomainError);
  CHECK_THROWS_AS(diagonal_quadratic(one, FieldVector::zeros(gf5, 1), zero), ArgumentError);
}

TEST_CASE("property: random diagonal quadratics hit the predictions") {
  std::mt19937_64 rng(8);
  for (std::uint32_t q : {3u, 4u, 7u, 8u, 9u}) {
    const auto field = build_field_of_order(q);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Element> a(2), b(2), c(2);
      for (int i = 0; i < 2; ++i) {
        a[i] = 1 + static_cast<Element>(uniform_below(rng, q - 1));
        b[i] = static_cast<Element>(uniform_below(rng, q));
        c[i] = static_cast<Element>(uniform_below(rng, q));
      }
      const auto f = diagonal_quadratic(FieldVector(field, a), FieldVector(field, b), FieldVector(field, c));
      REQUIRE(is_coordinatewise(f));
      const auto r = family_averages(f);
      const auto t = tightness_predictions(q, 2);
      REQUIRE(r.equality_holds);
      REQUIRE(std::abs(r.avg_shannon - t.avg_shannon) < 1e-9);
      REQUIRE(std::abs(r.avg_h2 - t.avg_h2) < 1e-9);
    }
  }
}

TEST_CASE("image statistics") {
  const auto gf2 = build_field(2, 1);
  auto s = image_stats(zero_function(gf2, 1));
  CHECK(s.image_sizes == std::vector<std::uint64_t>{1, 2});
  CHECK(s.max_image == 2);
  CHECK(s.max_exceeds_half);
  CHECK(s.average_meets_bound);

  s = image_stats(square_family(3, 1));
  CHECK(s.image_sizes == std::vector<std::uint64_t>{2, 2, 2});
  CHECK(s.average_image == Rational(2));
  CHECK(s.average_meets_bound);  // 2 >= 9/5

  s = image_stats(square_family(4, 1));
  CHECK(s.image_sizes == std::vector<std::uint64_t>{4, 2, 2, 2});
  CHECK(s.average_image == Rational(5, 2));  // >= 16/7
  CHECK(s.average_meets_bound);
  // Cross-check against the fiber counts.
  const auto gf4 = build_field(2, 2);
  for (Element k = 0; k < 4; ++k) {
    const auto sizes = preimage_profile(gf4, k).sizes;
    CHECK(s.image_sizes[k] == static_cast<std::uint64_t>(std::count_if(sizes.begin(), sizes.end(), [](auto v) { return v != 0; })));
  }
}

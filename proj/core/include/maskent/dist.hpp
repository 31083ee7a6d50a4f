#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "maskent/gf.hpp"
#include "maskent/rational.hpp"

namespace maskent {

/// Distribution on GF(q)^n with integer masses over a common denominator.
/// Outcomes are keyed by FieldVector::code(); zero-mass outcomes are absent.
class ExactDistribution {
 public:
  using Outcome = std::pair<std::uint64_t, std::uint64_t>;  // (code, count)

  /// Raises ArgumentError on duplicate or out-of-range codes, or an empty
  /// (all-zero) mass.
  ExactDistribution(FieldPtr field, std::size_t n, std::vector<Outcome> counts);

  /// From a dense histogram indexed by outcome code (length q^n).
  static ExactDistribution from_histogram(FieldPtr field, std::size_t n, std::span<const std::uint64_t> histogram);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return n_; }
  /// |S| = q^n.
  std::uint64_t support_size() const noexcept { return support_size_; }
  std::uint64_t total() const noexcept { return total_; }
  /// Nonzero outcomes sorted by code.
  std::span<const Outcome> outcomes() const noexcept { return counts_; }

  std::uint64_t count(const FieldVector& outcome) const;
  Rational probability(const FieldVector& outcome) const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::uint64_t support_size_;
  std::uint64_t total_ = 0;
  std::vector<Outcome> counts_;
};

/// Law of (X, Y) for independent X ~ a, Y ~ b; coordinates of a come first.
ExactDistribution product(const ExactDistribution& a, const ExactDistribution& b);

/// cp(B) = sum_s Pr(B = s)^2, exact.
Rational collision_probability(const ExactDistribution& d);

/// Shannon entropy in bits; zero-mass outcomes contribute nothing.
double shannon_entropy(const ExactDistribution& d);

/// H_2(B) = -log2 cp(B).
double renyi2_entropy(const ExactDistribution& d);

/// -log2 max_s Pr(B = s).
double min_entropy(const ExactDistribution& d);

// Count-level forms shared with the enumeration loops. Zero counts are
// skipped; `total` is the sum of `counts`.
double shannon_bits(std::span<const std::uint64_t> counts, std::uint64_t total);
Rational::Integer sum_of_squares(std::span<const std::uint64_t> counts);

}  // namespace maskent

#pragma once

// Extremal constructions for the masking family: the coordinate-wise square
// map, general diagonal quadratics, fiber structure of x -> x^2 + kx, and the
// Hamming weight sum used to average the even-characteristic case.

#include <cstdint>
#include <vector>

#include "maskent/family.hpp"
#include "maskent/gf.hpp"
#include "maskent/rational.hpp"

namespace maskent {

/// x -> (x_1^2, ..., x_n^2).
FunctionTable square_family(FieldPtr field, std::size_t n);
FunctionTable square_family(std::uint32_t q, std::size_t n);

struct TightnessPrediction {
  double avg_shannon;  // n log2 q - n (1 - 1/q)
  double avg_h2;       // same as avg_shannon for even q, else n log2 q - n log2(2 - 1/q)
};

/// Closed-form averaged entropies of the square-map family.
TightnessPrediction tightness_predictions(std::uint32_t q, std::size_t n);

struct PreimageProfile {
  Element k = 0;
  std::vector<std::uint64_t> sizes;  // sizes[y] = |{x : x^2 + kx = y}|
};

PreimageProfile preimage_profile(const FieldPtr& field, Element k);
PreimageProfile preimage_profile(std::uint32_t q, Element k);

/// -k^2/4, the unique value with a single preimage under x -> x^2 + kx in odd
/// characteristic. Raises DomainError for even q.
Element singleton_fiber_target(const Field& field, Element k);

struct WeightTotals {
  std::uint64_t recurrence;   // W(1) = q-1, W(n) = W(n-1) + (q-1)(W(n-1) + q^{n-1})
  std::uint64_t closed_form;  // n q^n - n q^{n-1}
};

/// Sum of Hamming weights over GF(q)^n by both routes.
WeightTotals total_weight(std::uint32_t q, std::size_t n);

/// x -> (a_i x_i^2 + b_i x_i + c_i)_i. Raises DomainError if some a_i == 0.
FunctionTable diagonal_quadratic(const FieldVector& a, const FieldVector& b, const FieldVector& c);

struct ImageStats {
  std::vector<std::uint64_t> image_sizes;  // |image(g_k)| indexed by k code
  std::uint64_t max_image = 0;
  Rational average_image;
  bool max_exceeds_half = false;      // max_k |image| > q^n / 2
  bool average_meets_bound = false;   // average >= q^{2n} / (2q-1)^n
};

/// Image sizes of every g_k. For n = 1 the two flags are the corollaries of
/// the collision bound (image size >= 1/cp by Cauchy-Schwarz).
ImageStats image_stats(const FunctionTable& f, std::uint64_t budget = default_budget());

}  // namespace maskent

#include "maskent/tightness.hpp"

#include <algorithm>
#include <cmath>

#include "maskent/error.hpp"
#include "table_digits.hpp"

namespace maskent {

FunctionTable square_family(FieldPtr field, std::size_t n) {
  return FunctionTable::tabulate(field, n, [](const FieldVector& x) { return mask_product(x, x); });
}

FunctionTable square_family(std::uint32_t q, std::size_t n) { return square_family(build_field_of_order(q), n); }

TightnessPrediction tightness_predictions(std::uint32_t q, std::size_t n) {
  if (q < 2 || n < 1) throw ArgumentError("predictions need q >= 2 and n >= 1");
  const double nd = static_cast<double>(n);
  const double log_q = std::log2(static_cast<double>(q));
  const double shannon = nd * log_q - nd * (1.0 - 1.0 / q);
  const double h2 = q % 2 == 0 ? shannon : nd * log_q - nd * std::log2(2.0 - 1.0 / q);
  return {shannon, h2};
}

PreimageProfile preimage_profile(const FieldPtr& field, Element k) {
  if (!field->contains(k)) throw ArgumentError("mask element out of range");
  PreimageProfile profile;
  profile.k = k;
  profile.sizes.assign(field->q(), 0);
  const auto k_row = field->mul_row(k);
  for (Element x = 0; x < field->q(); ++x) {
    ++profile.sizes[field->add_row(field->mul_row(x)[x])[k_row[x]]];
  }
  return profile;
}

PreimageProfile preimage_profile(std::uint32_t q, Element k) { return preimage_profile(build_field_of_order(q), k); }

Element singleton_fiber_target(const Field& field, Element k) {
  if (field.p() == 2) throw DomainError("x^2 + kx has no singleton fiber structure in characteristic 2");
  const Element four = field.from_integer(4);
  return field.mul(field.neg(field.mul(k, k)), field.inv(four));
}

WeightTotals total_weight(std::uint32_t q, std::size_t n) {
  if (q < 2 || n < 1) throw ArgumentError("weight totals need q >= 2 and n >= 1");
  std::uint64_t w = q - 1;
  std::uint64_t q_pow = 1;  // q^{j-1}
  for (std::size_t j = 2; j <= n; ++j) {
    q_pow *= q;
    w = w + (q - 1) * (w + q_pow);
  }
  const std::uint64_t qn1 = *checked_pow(q, n - 1);
  return {w, n * qn1 * q - n * qn1};
}

FunctionTable diagonal_quadratic(const FieldVector& a, const FieldVector& b, const FieldVector& c) {
  if (a.size() != b.size() || a.size() != c.size()) throw ArgumentError("coefficient vectors differ in length");
  if (!(a.field() == b.field()) || !(a.field() == c.field())) throw ArgumentError("coefficients over different fields");
  if (std::any_of(a.entries().begin(), a.entries().end(), [](Element e) { return e == 0; })) {
    throw DomainError("leading coefficient a_i must be nonzero");
  }
  return FunctionTable::tabulate(a.field_ptr(), a.size(), [&](const FieldVector& x) {
    return mask_product(a, mask_product(x, x)) + mask_product(b, x) + c;
  });
}

ImageStats image_stats(const FunctionTable& f, std::uint64_t budget) {
  require_budget(checked_pow(f.q(), 2 * f.n()), budget, "image statistics");
  const detail::TableDigits t(f);
  ImageStats stats;
  stats.image_sizes.resize(t.size);
  std::vector<std::uint64_t> g;
  std::vector<char> hit(t.size);
  Rational::Integer image_total = 0;
  for (std::uint64_t k = 0; k < t.size; ++k) {
    detail::masked_outputs(f.field(), t, t.digits_of(k), g);
    std::fill(hit.begin(), hit.end(), 0);
    std::uint64_t image = 0;
    for (std::uint64_t y : g) {
      if (!hit[y]) {
        hit[y] = 1;
        ++image;
      }
    }
    stats.image_sizes[k] = image;
    stats.max_image = std::max(stats.max_image, image);
    image_total += image;
  }
  const Rational::Integer size(t.size);
  stats.average_image = Rational(image_total, size);
  stats.max_exceeds_half = 2 * Rational::Integer(stats.max_image) > size;
  // average >= q^{2n} / (2q-1)^n
  const auto n = static_cast<unsigned>(f.n());
  stats.average_meets_bound = image_total * ipow(Rational::Integer(2 * f.q() - 1), n) >= size * size * size;
  return stats;
}

}  // namespace maskent

#include "maskent/dist.hpp"

#include <algorithm>
#include <cmath>

#include "maskent/budget.hpp"
#include "maskent/error.hpp"

namespace maskent {

ExactDistribution::ExactDistribution(FieldPtr field, std::size_t n, std::vector<Outcome> counts)
    : field_(std::move(field)), n_(n) {
  if (!field_ || n_ == 0) throw ArgumentError("distribution needs a field and n >= 1");
  const auto size = checked_pow(field_->q(), n_);
  if (!size) throw ArgumentError("support size overflows 64 bits");
  support_size_ = *size;

  std::erase_if(counts, [](const Outcome& o) { return o.second == 0; });
  std::sort(counts.begin(), counts.end());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i].first >= support_size_) throw ArgumentError("outcome code out of range");
    if (i > 0 && counts[i].first == counts[i - 1].first) throw ArgumentError("duplicate outcome");
    total_ += counts[i].second;
  }
  if (total_ == 0) throw ArgumentError("distribution with zero total mass");
  counts_ = std::move(counts);
}

ExactDistribution ExactDistribution::from_histogram(FieldPtr field, std::size_t n, std::span<const std::uint64_t> histogram) {
  std::vector<Outcome> counts;
  for (std::uint64_t code = 0; code < histogram.size(); ++code) {
    if (histogram[code] != 0) counts.emplace_back(code, histogram[code]);
  }
  return ExactDistribution(std::move(field), n, std::move(counts));
}

std::uint64_t ExactDistribution::count(const FieldVector& outcome) const {
  if (outcome.size() != n_ || !(outcome.field() == *field_)) throw ArgumentError("outcome outside the support");
  const std::uint64_t code = outcome.code();
  const auto it = std::lower_bound(counts_.begin(), counts_.end(), Outcome{code, 0});
  return it != counts_.end() && it->first == code ? it->second : 0;
}

Rational ExactDistribution::probability(const FieldVector& outcome) const {
  return Rational(count(outcome), Rational::Integer(total_));
}

ExactDistribution product(const ExactDistribution& a, const ExactDistribution& b) {
  if (!(a.field() == b.field())) throw ArgumentError("product of distributions over different fields");
  std::vector<ExactDistribution::Outcome> counts;
  counts.reserve(a.outcomes().size() * b.outcomes().size());
  for (const auto& [ca, na] : a.outcomes()) {
    for (const auto& [cb, nb] : b.outcomes()) counts.emplace_back(ca + cb * a.support_size(), na * nb);
  }
  return ExactDistribution(a.field_ptr(), a.dimension() + b.dimension(), std::move(counts));
}

Rational::Integer sum_of_squares(std::span<const std::uint64_t> counts) {
  Rational::Integer sum = 0;
  for (std::uint64_t c : counts) sum += Rational::Integer(c) * c;
  return sum;
}

double shannon_bits(std::span<const std::uint64_t> counts, std::uint64_t total) {
  const double t = static_cast<double>(total);
  const double log_t = std::log2(t);
  double sum = 0.0;
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    const double x = static_cast<double>(c);
    sum += x * (log_t - std::log2(x));
  }
  return sum / t;
}

namespace {

std::vector<std::uint64_t> masses(const ExactDistribution& d) {
  std::vector<std::uint64_t> out;
  out.reserve(d.outcomes().size());
  for (const auto& o : d.outcomes()) out.push_back(o.second);
  return out;
}

}  // namespace

Rational collision_probability(const ExactDistribution& d) {
  const Rational::Integer total(d.total());
  return Rational(sum_of_squares(masses(d)), total * total);
}

double shannon_entropy(const ExactDistribution& d) { return shannon_bits(masses(d), d.total()); }

double renyi2_entropy(const ExactDistribution& d) { return -collision_probability(d).log2(); }

double min_entropy(const ExactDistribution& d) {
  std::uint64_t peak = 0;
  for (const auto& o : d.outcomes()) peak = std::max(peak, o.second);
  return -Rational(peak, Rational::Integer(d.total())).log2();
}

}  // namespace maskent

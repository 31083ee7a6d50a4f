#include "maskent/family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "maskent/error.hpp"
#include "table_digits.hpp"

namespace maskent {

namespace {

using detail::TableDigits;
__extension__ typedef unsigned __int128 u128;

void require_square_budget(const FunctionTable& f, std::uint64_t budget, const char* what) {
  require_budget(checked_pow(f.q(), 2 * f.n()), budget, what);
}

}  // namespace

FunctionTable::FunctionTable(FieldPtr field, std::size_t n, std::vector<std::uint64_t> outputs)
    : field_(std::move(field)), n_(n), outputs_(std::move(outputs)) {
  if (!field_) throw TableError("function table without a field");
  if (n_ == 0) throw TableError("function table dimension must be >= 1");
  const auto size = checked_pow(field_->q(), n_);
  if (!size) throw TableError("domain size overflows 64 bits");
  if (outputs_.size() != *size) {
    throw TableError("table is not total: expected " + std::to_string(*size) + " outputs, got " +
                     std::to_string(outputs_.size()));
  }
  for (std::uint64_t y : outputs_) {
    if (y >= *size) throw TableError("output code " + std::to_string(y) + " out of range");
  }
}

FieldVector FunctionTable::operator()(const FieldVector& x) const {
  if (x.size() != n_ || !(x.field() == *field_)) throw ArgumentError("input outside the table domain");
  return FieldVector::from_code(field_, n_, outputs_[x.code()]);
}

FunctionTable zero_function(FieldPtr field, std::size_t n) {
  const auto size = checked_pow(field->q(), n);
  if (!size) throw TableError("domain size overflows 64 bits");
  return FunctionTable(std::move(field), n, std::vector<std::uint64_t>(*size, 0));
}

FunctionTable identity_function(FieldPtr field, std::size_t n) {
  const auto size = checked_pow(field->q(), n);
  if (!size) throw TableError("domain size overflows 64 bits");
  std::vector<std::uint64_t> outputs(*size);
  for (std::uint64_t x = 0; x < *size; ++x) outputs[x] = x;
  return FunctionTable(std::move(field), n, std::move(outputs));
}

ExactDistribution distribution_of(const FunctionTable& table) {
  std::vector<std::uint64_t> histogram(table.domain_size(), 0);
  for (std::uint64_t y : table.outputs()) ++histogram[y];
  return ExactDistribution::from_histogram(table.field_ptr(), table.n(), histogram);
}

FunctionTable gk_table(const FunctionTable& f, const FieldVector& k) {
  if (k.size() != f.n()) throw ArgumentError("mask length does not match the table dimension");
  if (!(k.field() == f.field())) throw ArgumentError("mask over a different field");
  const TableDigits digits(f);
  std::vector<std::uint64_t> out;
  detail::masked_outputs(f.field(), digits, std::vector<std::uint32_t>(k.entries().begin(), k.entries().end()), out);
  return FunctionTable(f.field_ptr(), f.n(), std::move(out));
}

Bounds bounds(std::uint32_t q, std::size_t n) {
  if (q < 2 || n < 1) throw ArgumentError("bounds need q >= 2 and n >= 1");
  const auto e = static_cast<unsigned>(n);
  Rational cp(ipow(Rational::Integer(2 * q - 1), e), ipow(Rational::Integer(q), 2 * e));
  const double nd = static_cast<double>(n);
  const double h2 = nd * std::log2(static_cast<double>(q)) - nd * std::log2(2.0 - 1.0 / q);
  return {std::move(cp), h2};
}

namespace {

// One pass over all k. Calls visit(k_code, histogram, sum_of_squares) for
// each k; histogram is indexed by output code.
template <typename Visit>
void for_each_mask(const FunctionTable& f, Visit&& visit) {
  const TableDigits digits(f);
  std::vector<std::uint64_t> outputs;
  std::vector<std::uint64_t> histogram(digits.size, 0);
  for (std::uint64_t k = 0; k < digits.size; ++k) {
    detail::masked_outputs(f.field(), digits, digits.digits_of(k), outputs);
    std::fill(histogram.begin(), histogram.end(), 0);
    u128 squares = 0;
    for (std::uint64_t y : outputs) squares += 2 * histogram[y]++ + 1;  // (c+1)^2 - c^2
    visit(k, std::span<const std::uint64_t>(histogram), squares);
  }
}

Rational::Integer to_integer(u128 v) {
  Rational::Integer hi(static_cast<std::uint64_t>(v >> 64));
  return (hi << 64) + Rational::Integer(static_cast<std::uint64_t>(v));
}

}  // namespace

TheoremReport family_averages(const FunctionTable& f, bool keep_per_k, std::uint64_t budget) {
  require_square_budget(f, budget, "family averages");
  TheoremReport report;
  report.q = f.q();
  report.n = f.n();
  const std::uint64_t size = f.domain_size();
  const Rational::Integer size_int(size);
  const Rational::Integer pairs = size_int * size_int;
  const double log_pairs = 2.0 * std::log2(static_cast<double>(size));

  Rational::Integer total_squares = 0;
  double h2_sum = 0.0;
  double shannon_sum = 0.0;
  if (keep_per_k) report.per_k.emplace();

  for_each_mask(f, [&](std::uint64_t k, std::span<const std::uint64_t> histogram, u128 squares) {
    const Rational::Integer sq = to_integer(squares);
    total_squares += sq;
    const double h2 = log_pairs - Rational(sq, 1).log2();
    const double shannon = shannon_bits(histogram, size);
    h2_sum += h2;
    shannon_sum += shannon;
    if (keep_per_k) {
      const auto image = static_cast<std::uint64_t>(std::count_if(histogram.begin(), histogram.end(), [](std::uint64_t c) { return c != 0; }));
      report.per_k->push_back(PerKEntry{FieldVector::from_code(f.field_ptr(), f.n(), k), Rational(sq, pairs), h2, shannon, image});
    }
  });

  report.avg_cp = Rational(total_squares, pairs * size_int);
  report.avg_h2 = h2_sum / static_cast<double>(size);
  report.avg_shannon = shannon_sum / static_cast<double>(size);
  Bounds b = bounds(f.q(), f.n());
  report.cp_bound = std::move(b.cp_bound);
  report.h2_bound = b.h2_bound;
  report.coordinatewise = is_coordinatewise(f);
  report.equality_holds = report.avg_cp == report.cp_bound;
  return report;
}

Rational::Integer family_collision_count(const FunctionTable& f, std::uint64_t budget) {
  require_square_budget(f, budget, "family collision count");
  u128 total = 0;
  for_each_mask(f, [&](std::uint64_t, std::span<const std::uint64_t>, u128 squares) { total += squares; });
  return to_integer(total);
}

bool is_coordinatewise(const FunctionTable& f) {
  const TableDigits t(f);
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  // seen[i * q + v] = f_i value observed at inputs with x_i == v
  std::vector<std::uint32_t> seen(t.n * t.q, kUnset);
  for (std::uint64_t x = 0; x < t.size; ++x) {
    for (std::size_t i = 0; i < t.n; ++i) {
      std::uint32_t& slot = seen[i * t.q + t.inputs[x * t.n + i]];
      const std::uint32_t value = t.outputs[x * t.n + i];
      if (slot == kUnset) {
        slot = value;
      } else if (slot != value) {
        return false;
      }
    }
  }
  return true;
}

double chain_rule_gap(const FunctionTable& f, std::uint64_t budget) {
  require_square_budget(f, budget, "chain rule check");
  const std::uint32_t q = f.q();
  const std::size_t n = f.n();
  const std::uint64_t size = f.domain_size();
  std::vector<std::uint64_t> marginal(q);
  double gap = 0.0;
  for_each_mask(f, [&](std::uint64_t, std::span<const std::uint64_t> histogram, u128) {
    double coordinate_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(marginal.begin(), marginal.end(), 0);
      std::uint64_t place = 1;
      for (std::size_t j = 0; j < i; ++j) place *= q;
      for (std::uint64_t y = 0; y < size; ++y) marginal[(y / place) % q] += histogram[y];
      coordinate_sum += shannon_bits(marginal, size);
    }
    gap = std::max(gap, std::abs(shannon_bits(histogram, size) - coordinate_sum));
  });
  return gap;
}

}  // namespace maskent

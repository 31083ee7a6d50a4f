#pragma once

// The diagonal masking family g_k(x) = f(x) + k ⊙ x over GF(q)^n and its
// k-averaged randomness measures.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maskent/budget.hpp"
#include "maskent/dist.hpp"
#include "maskent/error.hpp"
#include "maskent/gf.hpp"
#include "maskent/rational.hpp"

namespace maskent {

/// A total function GF(q)^n -> GF(q)^n stored as a value table.
///
/// Inputs and outputs are addressed by their canonical codes
/// (FieldVector::code(), coordinate 0 least significant), so outputs[c] is
/// the code of f(FieldVector::from_code(field, n, c)).
class FunctionTable {
 public:
  /// Raises TableError when the table is not total (wrong length) or holds
  /// an output code outside GF(q)^n.
  FunctionTable(FieldPtr field, std::size_t n, std::vector<std::uint64_t> outputs);

  /// Tabulates fn over the canonical input order. fn maps FieldVector to
  /// FieldVector.
  template <typename Fn>
  static FunctionTable tabulate(FieldPtr field, std::size_t n, Fn&& fn);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_->q(); }
  std::size_t n() const noexcept { return n_; }
  /// q^n.
  std::uint64_t domain_size() const noexcept { return outputs_.size(); }

  std::span<const std::uint64_t> outputs() const noexcept { return outputs_; }
  std::uint64_t output_code(std::uint64_t input_code) const { return outputs_.at(input_code); }
  FieldVector operator()(const FieldVector& x) const;

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) noexcept {
    return *a.field_ == *b.field_ && a.n_ == b.n_ && a.outputs_ == b.outputs_;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<std::uint64_t> outputs_;
};

template <typename Fn>
FunctionTable FunctionTable::tabulate(FieldPtr field, std::size_t n, Fn&& fn) {
  const auto size = checked_pow(field->q(), n);
  if (!size) throw TableError("domain size overflows 64 bits");
  std::vector<std::uint64_t> outputs(*size);
  for (std::uint64_t c = 0; c < *size; ++c) outputs[c] = fn(FieldVector::from_code(field, n, c)).code();
  return FunctionTable(std::move(field), n, std::move(outputs));
}

FunctionTable zero_function(FieldPtr field, std::size_t n);
FunctionTable identity_function(FieldPtr field, std::size_t n);

/// Law of f(A) for A uniform on GF(q)^n.
ExactDistribution distribution_of(const FunctionTable& table);

/// Table of x -> f(x) + k ⊙ x.
FunctionTable gk_table(const FunctionTable& f, const FieldVector& k);

struct Bounds {
  Rational cp_bound;  // (2q-1)^n / q^{2n}
  double h2_bound;    // n log2 q - n log2(2 - 1/q)
};

/// Right-hand sides of the average collision and Rényi bounds.
Bounds bounds(std::uint32_t q, std::size_t n);

struct PerKEntry {
  FieldVector k;
  Rational cp;
  double h2;
  double shannon;
  std::uint64_t image_size;
};

struct TheoremReport {
  std::uint32_t q = 0;
  std::size_t n = 0;
  Rational avg_cp;
  Rational cp_bound;
  double avg_h2 = 0.0;
  double h2_bound = 0.0;
  double avg_shannon = 0.0;
  bool coordinatewise = false;
  bool equality_holds = false;  // avg_cp == cp_bound exactly
  std::optional<std::vector<PerKEntry>> per_k;
};

/// Exact average of cp(g_k(A)) over all k, plus the averaged Rényi and
/// Shannon entropies, by histogramming each g_k. Cost O(n q^{2n}); raises
/// BudgetError when q^{2n} exceeds `budget`.
TheoremReport family_averages(const FunctionTable& f, bool keep_per_k = false, std::uint64_t budget = default_budget());

/// Sum over k of the integer collision counts |{(x, x') : g_k(x) = g_k(x')}|.
/// avg_cp equals this divided by q^{3n}. Used by search loops that compare
/// candidates exactly without building rationals.
Rational::Integer family_collision_count(const FunctionTable& f, std::uint64_t budget = default_budget());

/// True iff every output coordinate f_i depends only on x_i.
bool is_coordinatewise(const FunctionTable& f);

/// max over k of |H(g_k(A)) - sum_i H(g_k(A)_i)|. Zero (to rounding) when the
/// entries of g_k(A) are independent, which holds for coordinate-wise f.
double chain_rule_gap(const FunctionTable& f, std::uint64_t budget = default_budget());

}  // namespace maskent

#pragma once

// Small finite fields GF(p^m) backed by dense lookup tables, plus vectors
// over them.
//
// An element is an index in [0, q). Its base-p digits are the coefficients of
// the element as a polynomial in the field generator: digit i is the
// coefficient of generator^i. Index 0 is zero and index 1 is one. The
// modulus is the least monic irreducible of degree m, where polynomials are
// ordered by the integer whose base-p digits are the non-leading coefficients
// (constant term least significant). The construction is therefore canonical
// and two fields with the same (p, m) are interchangeable.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace maskent {

using Element = std::uint32_t;

class Field {
 public:
  static constexpr std::uint32_t kDefaultOrderLimit = 4096;
  static constexpr std::uint32_t kMaxOrderLimit = 1u << 14;
  static constexpr Element kNoInverse = 0xFFFFFFFFu;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Coefficients c_0..c_m of the modulus; c_m == 1.
  std::span<const std::uint32_t> irreducible() const noexcept { return irreducible_; }

  // Checked operations. Indices outside [0, q) raise ArgumentError.
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  /// Raises DomainError for a == 0.
  Element inv(Element a) const;
  /// Image of an integer under Z -> GF(p) -> GF(q), i.e. 1 + 1 + ... + 1.
  Element from_integer(std::int64_t value) const noexcept;

  bool contains(Element a) const noexcept { return a < q_; }

  /// Base-p digits of `a`, length m, digit i = coefficient of generator^i.
  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

  // Unchecked row views for enumeration loops: row(a)[b] == op(a, b).
  std::span<const std::uint16_t> add_row(Element a) const noexcept {
    return {add_.data() + std::size_t{a} * q_, q_};
  }
  std::span<const std::uint16_t> mul_row(Element a) const noexcept {
    return {mul_.data() + std::size_t{a} * q_, q_};
  }
  std::span<const std::uint16_t> add_table() const noexcept { return add_; }
  std::span<const std::uint16_t> mul_table() const noexcept { return mul_; }
  std::span<const Element> inv_table() const noexcept { return inv_; }
  std::span<const Element> neg_table() const noexcept { return neg_; }

  /// Same characteristic and degree; equivalent to identical tables.
  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_ && a.m_ == b.m_; }

 private:
  friend std::shared_ptr<const Field> build_field(std::uint32_t, std::uint32_t, std::uint32_t);
  Field() = default;

  void check(Element a) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> irreducible_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<Element> inv_;
  std::vector<Element> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(p^m). Raises FieldConstructionError if p is not prime, m < 1, or
/// p^m exceeds order_limit (itself capped at Field::kMaxOrderLimit).
FieldPtr build_field(std::uint32_t p, std::uint32_t m, std::uint32_t order_limit = Field::kDefaultOrderLimit);

/// Builds the field of order q, resolving q = p^m first.
FieldPtr build_field_of_order(std::uint32_t q, std::uint32_t order_limit = Field::kDefaultOrderLimit);

bool is_prime(std::uint64_t value) noexcept;

/// (p, m) with q = p^m and p prime, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> resolve_prime_power(std::uint64_t q) noexcept;

/// Least monic irreducible of degree m over GF(p) under the canonical order.
/// Returned as c_0..c_m.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t m);

/// Element of GF(q)^n. All entries belong to the same field.
class FieldVector {
 public:
  /// Raises ArgumentError when entries is empty or an entry is out of range.
  FieldVector(FieldPtr field, std::vector<Element> entries);

  static FieldVector zeros(FieldPtr field, std::size_t n);
  static FieldVector ones(FieldPtr field, std::size_t n);
  /// Inverse of code(): entry i is the i-th base-q digit of `code`.
  static FieldVector from_code(FieldPtr field, std::size_t n, std::uint64_t code);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Element operator[](std::size_t i) const noexcept { return entries_[i]; }
  std::span<const Element> entries() const noexcept { return entries_; }

  /// Canonical index sum_i entries[i] * q^i.
  std::uint64_t code() const noexcept;

  friend bool operator==(const FieldVector& a, const FieldVector& b) noexcept {
    return *a.field_ == *b.field_ && a.entries_ == b.entries_;
  }

 private:
  FieldPtr field_;
  std::vector<Element> entries_;
};

/// Coordinate-wise sum.
FieldVector operator+(const FieldVector& x, const FieldVector& y);

/// Coordinate-wise product x ⊙ y.
FieldVector mask_product(const FieldVector& x, const FieldVector& y);

/// Number of coordinates where x and y differ.
std::size_t hamming_distance(const FieldVector& x, const FieldVector& y);

/// Number of nonzero coordinates.
std::size_t hamming_weight(const FieldVector& x) noexcept;

}  // namespace maskent

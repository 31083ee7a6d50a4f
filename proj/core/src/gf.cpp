#include "maskent/gf.hpp"

#include <algorithm>
#include <string>

#include "maskent/budget.hpp"
#include "maskent/error.hpp"

namespace maskent {

namespace {

using Poly = std::vector<std::uint32_t>;  // c_0 first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly product(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      product[i + j] = static_cast<std::uint32_t>((product[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(product), modulus, p);
}

// Monic polynomial of the given degree whose non-leading coefficients are the
// base-p digits of `code`.
Poly monic_from_code(std::uint64_t code, std::uint32_t degree, std::uint32_t p) {
  Poly poly(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    poly[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  poly[degree] = 1;
  return poly;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= m / 2; ++d) {
    const std::uint64_t count = *checked_pow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

Poly to_poly(Element a, std::uint32_t p, std::uint32_t m) {
  Poly poly(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    poly[i] = a % p;
    a /= p;
  }
  trim(poly);
  return poly;
}

Element from_poly(const Poly& poly, std::uint32_t p) {
  Element value = 0;
  for (std::size_t i = poly.size(); i-- > 0;) value = value * p + poly[i];
  return value;
}

}  // namespace

bool is_prime(std::uint64_t value) noexcept {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> resolve_prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1 || p > UINT32_MAX) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), m};
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) {
    throw FieldConstructionError(FieldConstructionError::Reason::non_prime_characteristic,
                                 "characteristic " + std::to_string(p) + " is not prime");
  }
  if (m < 1) {
    throw FieldConstructionError(FieldConstructionError::Reason::invalid_degree, "extension degree must be >= 1");
  }
  const auto count = checked_pow(p, m);
  for (std::uint64_t code = 0; count && code < *count; ++code) {
    Poly candidate = monic_from_code(code, m, p);
    if (is_irreducible(candidate, p)) return candidate;
  }
  // Irreducibles exist in every degree.
  throw Error("no irreducible polynomial found");
}

FieldPtr build_field(std::uint32_t p, std::uint32_t m, std::uint32_t order_limit) {
  if (!is_prime(p)) {
    throw FieldConstructionError(FieldConstructionError::Reason::non_prime_characteristic,
                                 "characteristic " + std::to_string(p) + " is not prime");
  }
  if (m < 1) {
    throw FieldConstructionError(FieldConstructionError::Reason::invalid_degree, "extension degree must be >= 1");
  }
  const std::uint32_t limit = std::min(order_limit, Field::kMaxOrderLimit);
  const auto order = checked_pow(p, m);
  if (!order || *order > limit) {
    throw FieldConstructionError(FieldConstructionError::Reason::order_over_limit,
                                 "field order " + std::to_string(p) + "^" + std::to_string(m) +
                                     " exceeds the limit " + std::to_string(limit));
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->m_ = m;
  const std::uint32_t q = field->q_ = static_cast<std::uint32_t>(*order);
  field->irreducible_ = least_irreducible(p, m);
  const Poly& modulus = field->irreducible_;

  std::vector<Poly> polys(q);
  for (Element a = 0; a < q; ++a) polys[a] = to_poly(a, p, m);

  field->add_.resize(std::size_t{q} * q);
  field->neg_.resize(q);
  for (Element a = 0; a < q; ++a) {
    for (Element b = 0; b < q; ++b) {
      Element sum = 0;
      Element scale = 1;
      Element x = a, y = b;
      for (std::uint32_t i = 0; i < m; ++i) {
        sum += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale *= p;
      }
      field->add_[std::size_t{a} * q + b] = static_cast<std::uint16_t>(sum);
      if (sum == 0) field->neg_[a] = b;
    }
  }

  // Multiplication via discrete logarithms: find a generator of the
  // multiplicative group, then mul(a, b) = exp(log a + log b).
  std::vector<Element> exp_table;
  for (Element g = 1; g < q; ++g) {
    exp_table.assign(1, 1);
    Poly power{1};
    const Poly base = polys[g];
    while (true) {
      power = poly_mul_mod(power, base, modulus, p);
      const Element value = from_poly(power, p);
      if (value == 1) break;
      exp_table.push_back(value);
    }
    if (exp_table.size() == q - 1) break;
  }
  std::vector<std::uint32_t> log_table(q, 0);
  for (std::uint32_t i = 0; i < exp_table.size(); ++i) log_table[exp_table[i]] = i;

  field->mul_.assign(std::size_t{q} * q, 0);
  field->inv_.assign(q, Field::kNoInverse);
  const std::uint32_t group = q - 1;
  for (Element a = 1; a < q; ++a) {
    for (Element b = 1; b < q; ++b) {
      field->mul_[std::size_t{a} * q + b] = static_cast<std::uint16_t>(exp_table[(log_table[a] + log_table[b]) % group]);
    }
    field->inv_[a] = exp_table[(group - log_table[a]) % group];
  }
  return field;
}

FieldPtr build_field_of_order(std::uint32_t q, std::uint32_t order_limit) {
  const auto pm = resolve_prime_power(q);
  if (!pm) {
    throw FieldConstructionError(FieldConstructionError::Reason::non_prime_characteristic,
                                 std::to_string(q) + " is not a prime power");
  }
  return build_field(pm->first, pm->second, order_limit);
}

void Field::check(Element a) const {
  if (a >= q_) {
    throw ArgumentError("element index " + std::to_string(a) + " out of range for GF(" + std::to_string(q_) + ")");
  }
}

Element Field::add(Element a, Element b) const {
  check(a);
  check(b);
  return add_[std::size_t{a} * q_ + b];
}

Element Field::sub(Element a, Element b) const {
  check(a);
  check(b);
  return add_[std::size_t{a} * q_ + neg_[b]];
}

Element Field::neg(Element a) const {
  check(a);
  return neg_[a];
}

Element Field::mul(Element a, Element b) const {
  check(a);
  check(b);
  return mul_[std::size_t{a} * q_ + b];
}

Element Field::inv(Element a) const {
  check(a);
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  return inv_[a];
}

Element Field::from_integer(std::int64_t value) const noexcept {
  const std::int64_t residue = ((value % static_cast<std::int64_t>(p_)) + p_) % p_;
  return static_cast<Element>(residue);  // prime subfield occupies indices [0, p)
}

std::vector<std::uint32_t> Field::digits(Element a) const {
  check(a);
  std::vector<std::uint32_t> out(m_);
  for (auto& d : out) {
    d = a % p_;
    a /= p_;
  }
  return out;
}

Element Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != m_) throw ArgumentError("digit vector length must equal the extension degree");
  Element value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw ArgumentError("digit out of range");
    value = value * p_ + digits[i];
  }
  return value;
}

FieldVector::FieldVector(FieldPtr field, std::vector<Element> entries) : field_(std::move(field)), entries_(std::move(entries)) {
  if (!field_) throw ArgumentError("vector without a field");
  if (entries_.empty()) throw ArgumentError("vectors must have at least one coordinate");
  for (Element e : entries_) {
    if (!field_->contains(e)) {
      throw ArgumentError("entry " + std::to_string(e) + " out of range for GF(" + std::to_string(field_->q()) + ")");
    }
  }
}

FieldVector FieldVector::zeros(FieldPtr field, std::size_t n) { return FieldVector(std::move(field), std::vector<Element>(n, 0)); }

FieldVector FieldVector::ones(FieldPtr field, std::size_t n) { return FieldVector(std::move(field), std::vector<Element>(n, 1)); }

FieldVector FieldVector::from_code(FieldPtr field, std::size_t n, std::uint64_t code) {
  const std::uint32_t q = field->q();
  std::vector<Element> entries(n);
  for (auto& e : entries) {
    e = static_cast<Element>(code % q);
    code /= q;
  }
  if (code != 0) throw ArgumentError("vector code out of range");
  return FieldVector(std::move(field), std::move(entries));
}

std::uint64_t FieldVector::code() const noexcept {
  std::uint64_t value = 0;
  for (std::size_t i = entries_.size(); i-- > 0;) value = value * field_->q() + entries_[i];
  return value;
}

namespace {

void require_compatible(const FieldVector& x, const FieldVector& y) {
  if (x.size() != y.size()) throw ArgumentError("vector length mismatch");
  if (!(x.field() == y.field())) throw ArgumentError("vectors over different fields");
}

}  // namespace

FieldVector operator+(const FieldVector& x, const FieldVector& y) {
  require_compatible(x, y);
  std::vector<Element> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.field().add_row(x[i])[y[i]];
  return FieldVector(x.field_ptr(), std::move(out));
}

FieldVector mask_product(const FieldVector& x, const FieldVector& y) {
  require_compatible(x, y);
  std::vector<Element> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.field().mul_row(x[i])[y[i]];
  return FieldVector(x.field_ptr(), std::move(out));
}

std::size_t hamming_distance(const FieldVector& x, const FieldVector& y) {
  require_compatible(x, y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::size_t hamming_weight(const FieldVector& x) noexcept {
  return static_cast<std::size_t>(std::count_if(x.entries().begin(), x.entries().end(), [](Element e) { return e != 0; }));
}

}  // namespace maskent

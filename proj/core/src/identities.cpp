#include "maskent/identities.hpp"

#include "maskent/error.hpp"
#include "table_digits.hpp"

namespace maskent {

namespace {

using detail::TableDigits;

// good[d] = number of ordered pairs (a, a') at Hamming distance d whose
// per-pair collision probability over K is nonzero (hence q^{-d}).
std::vector<std::uint64_t> admissible_pairs_by_distance(const FunctionTable& f, std::uint64_t budget) {
  require_budget(checked_pow(f.q(), 2 * f.n()), budget, "pairwise collision sum");
  const TableDigits t(f);
  std::vector<std::uint64_t> good(t.n + 1, 0);
  for (std::uint64_t a = 0; a < t.size; ++a) {
    const std::uint32_t* ai = &t.inputs[a * t.n];
    const std::uint32_t* fa = &t.outputs[a * t.n];
    for (std::uint64_t b = 0; b < t.size; ++b) {
      const std::uint32_t* bi = &t.inputs[b * t.n];
      const std::uint32_t* fb = &t.outputs[b * t.n];
      std::size_t d = 0;
      bool admissible = true;
      for (std::size_t i = 0; i < t.n; ++i) {
        if (ai[i] != bi[i]) {
          ++d;  // k_i is pinned to (f_i(b) - f_i(a)) / (a_i - b_i)
        } else if (fa[i] != fb[i]) {
          admissible = false;
          break;
        }
      }
      if (admissible) ++good[d];
    }
  }
  return good;
}

}  // namespace

Rational joint_collision(const FunctionTable& f, std::uint64_t budget) {
  const auto triples = checked_pow(f.q(), 3 * f.n());
  if (triples && *triples <= kTripleEnumerationLimit && *triples <= budget) return joint_collision_enumerated(f, budget);
  return joint_collision_pairwise(f, budget);
}

Rational joint_collision_enumerated(const FunctionTable& f, std::uint64_t budget) {
  require_budget(checked_pow(f.q(), 3 * f.n()), budget, "triple enumeration");
  const TableDigits t(f);
  std::vector<std::uint64_t> g;
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < t.size; ++k) {
    detail::masked_outputs(f.field(), t, t.digits_of(k), g);
    for (std::uint64_t a = 0; a < t.size; ++a) {
      for (std::uint64_t b = 0; b < t.size; ++b) hits += g[a] == g[b];
    }
  }
  const Rational::Integer size(t.size);
  return Rational(hits, size * size * size);
}

Rational joint_collision_pairwise(const FunctionTable& f, std::uint64_t budget) {
  const auto good = admissible_pairs_by_distance(f, budget);
  const Rational::Integer q(f.q());
  const auto n = static_cast<unsigned>(f.n());
  // sum_d good[d] q^{-d} / q^{2n}, over the common denominator q^{3n}
  Rational::Integer numerator = 0;
  for (unsigned d = 0; d <= n; ++d) numerator += Rational::Integer(good[d]) * ipow(q, n - d);
  return Rational(numerator, ipow(q, 3 * n));
}

std::vector<ShellTerm> shell_decomposition(const FunctionTable& f, std::uint64_t budget) {
  const auto good = admissible_pairs_by_distance(f, budget);
  const Rational::Integer q(f.q());
  const auto n = static_cast<unsigned>(f.n());
  const Rational::Integer domain = ipow(q, n);
  std::vector<ShellTerm> shells;
  Rational::Integer binom = 1;  // C(n, d)
  for (unsigned d = 0; d <= n; ++d) {
    if (d > 0) binom = binom * (n - d + 1) / d;
    const Rational::Integer pairs_at_d = domain * binom * ipow(q - 1, d);
    ShellTerm term;
    term.distance = d;
    term.shell_mass = Rational(pairs_at_d, domain * domain);
    term.conditional_collision = Rational(good[d], pairs_at_d * ipow(q, d));
    shells.push_back(std::move(term));
  }
  return shells;
}

Rational shell_total(std::span<const ShellTerm> shells) {
  Rational total;
  for (const auto& s : shells) total += s.shell_mass * s.conditional_collision;
  return total;
}

}  // namespace maskent

#pragma once

// Second route to the average collision probability: Pr(g_K(A) = g_K(A'))
// with K, A, A' independent and uniform, and its split by the Hamming
// distance between A and A'.

#include <cstddef>
#include <span>
#include <vector>

#include "maskent/budget.hpp"
#include "maskent/family.hpp"
#include "maskent/rational.hpp"

namespace maskent {

/// Pr(g_K(A) = g_K(A')). Counts triples when q^{3n} <= kTripleEnumerationLimit,
/// otherwise sums the per-pair closed form.
Rational joint_collision(const FunctionTable& f, std::uint64_t budget = default_budget());

inline constexpr std::uint64_t kTripleEnumerationLimit = std::uint64_t{1} << 24;

/// Counts all (k, a, a') with g_k(a) = g_k(a'). Cost O(n q^{3n}).
Rational joint_collision_enumerated(const FunctionTable& f, std::uint64_t budget = default_budget());

/// Sums, over pairs (a, a'), the probability over K that
/// f(a) + K⊙a = f(a') + K⊙a'. That probability is 0 when f_i(a) != f_i(a')
/// for some i with a_i == a'_i, and q^{-d} otherwise, d = d_H(a, a').
/// Cost O(n q^{2n}).
Rational joint_collision_pairwise(const FunctionTable& f, std::uint64_t budget = default_budget());

struct ShellTerm {
  std::size_t distance = 0;
  Rational shell_mass;             // Pr(d_H(A, A') = d) = C(n,d)(q-1)^d / q^n
  Rational conditional_collision;  // Pr(g_K(A) = g_K(A') | d_H(A, A') = d)
};

/// Terms for d = 0..n. Their mass-weighted sum equals joint_collision(f).
std::vector<ShellTerm> shell_decomposition(const FunctionTable& f, std::uint64_t budget = default_budget());

/// sum_d shell_mass * conditional_collision.
Rational shell_total(std::span<const ShellTerm> shells);

}  // namespace maskent

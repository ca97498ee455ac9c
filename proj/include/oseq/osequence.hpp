#pragma once

// Pure O-sequences: degree-wise counts of the monomial divisors of a set of
// equal-degree generators.

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "oseq/core.hpp"
#include "oseq/monomial.hpp"

namespace oseq {

/// Coefficients of prod_k (1 + q + ... + q^{a_k}).
inline std::vector<BigInt> divisor_counts(std::span<const unsigned> exponents) {
  std::vector<BigInt> poly{1};
  for (unsigned a : exponents) {
    if (a == 0) continue;
    // multiplying by (1 + ... + q^a) is a sliding window sum of width a + 1
    std::vector<BigInt> next(poly.size() + a);
    BigInt window = 0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (i < poly.size()) window += poly[i];
      if (i >= a + 1 && i - a - 1 < poly.size()) window -= poly[i - a - 1];
      next[i] = window;
    }
    poly = std::move(next);
  }
  return poly;
}

inline std::vector<BigInt> divisor_counts(const Monomial& m) { return divisor_counts(m.exponents); }

/// Number of degree-i monomials dividing m.
inline BigInt divisor_count(const Monomial& m, std::int64_t i) {
  if (i < 0 || i > static_cast<std::int64_t>(m.degree()))
    throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(i) + " outside [0, " + std::to_string(m.degree()) + "]");
  return divisor_counts(m)[static_cast<std::size_t>(i)];
}

/// Lenient variant: zero outside [0, deg m].
inline BigInt divisor_count_or_zero(const Monomial& m, std::int64_t i) {
  if (i < 0 || i > static_cast<std::int64_t>(m.degree())) return 0;
  return divisor_counts(m)[static_cast<std::size_t>(i)];
}

inline constexpr std::size_t kMaxInclusionExclusionType = 24;

/// Per-degree union sizes by inclusion-exclusion over nonempty subsets T of
/// generators, each contributing (-1)^{|T|+1} times the divisor counts of gcd(T).
inline HilbertSequence pure_o_sequence(const GeneratorSet& gens) {
  const auto& ms = gens.monomials();
  const std::size_t t = ms.size();
  if (t > kMaxInclusionExclusionType)
    throw Error(ErrorCode::BudgetExceeded, "inclusion-exclusion over 2^" + std::to_string(t) + " subsets");
  std::vector<BigInt> h(gens.e() + 1);
  // depth-first over subsets so each gcd is one componentwise min away from its parent
  auto rec = [&](auto&& self, std::size_t next, const Monomial& g, std::size_t size) -> void {
    for (std::size_t j = next; j < t; ++j) {
      Monomial g2 = size == 0 ? ms[j] : gcd(g, ms[j]);
      auto counts = divisor_counts(g2);
      if ((size + 1) % 2 == 1)
        for (std::size_t i = 0; i < counts.size(); ++i) h[i] += counts[i];
      else
        for (std::size_t i = 0; i < counts.size(); ++i) h[i] -= counts[i];
      self(self, j + 1, g2, size + 1);
    }
  };
  rec(rec, 0, Monomial{}, 0);
  return HilbertSequence::algebra(std::move(h));
}

inline constexpr std::uint64_t kDefaultBruteforceBudget = 10'000'000;

namespace detail {

struct ExponentHash {
  std::size_t operator()(const std::vector<unsigned>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (unsigned x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

/// Oracle for pure_o_sequence: materializes every divisor of every generator
/// and deduplicates by exponent vector.
inline HilbertSequence pure_o_sequence_bruteforce(const GeneratorSet& gens,
                                                   std::uint64_t budget = kDefaultBruteforceBudget) {
  BigInt estimate = 0;
  for (const auto& m : gens.monomials()) {
    BigInt n = 1;
    for (unsigned a : m.exponents) n *= a + 1;
    estimate += n;
  }
  if (estimate > budget)
    throw Error(ErrorCode::BudgetExceeded, "brute force would enumerate " + estimate.str() + " divisors");

  std::unordered_set<std::vector<unsigned>, detail::ExponentHash> seen;
  std::vector<BigInt> h(gens.e() + 1);
  for (const auto& m : gens.monomials()) {
    std::vector<unsigned> d(m.num_vars(), 0);
    // odometer over the box [0, a_1] x ... x [0, a_r]
    while (true) {
      if (seen.insert(d).second) {
        unsigned deg = 0;
        for (unsigned x : d) deg += x;
        h[deg] += 1;
      }
      std::size_t k = 0;
      while (k < d.size() && d[k] == m.exponents[k]) d[k++] = 0;
      if (k == d.size()) break;
      ++d[k];
    }
  }
  return HilbertSequence::algebra(std::move(h));
}

/// Type-1 pure O-sequence of x_1^{a_1} ... x_r^{a_r}: the coefficient vector of
/// prod (1 + q + ... + q^{a_i}).
inline HilbertSequence type1_sequence(std::span<const unsigned> exponents) {
  if (exponents.empty()) throw Error(ErrorCode::Malformed, "type1_sequence needs at least one exponent");
  return HilbertSequence::algebra(divisor_counts(exponents));
}

inline HilbertSequence type1_sequence(std::initializer_list<unsigned> exponents) {
  std::vector<unsigned> v(exponents);
  return type1_sequence(std::span<const unsigned>(v));
}

/// Sequence generated by T * x_new when T generates seq: H_i = h_i + h_{i-1}.
inline HilbertSequence append_variable(const HilbertSequence& seq) {
  if (seq[0] != 1 || seq.back() != 1)
    throw Error(ErrorCode::NotType1, "append_variable needs h_0 = h_e = 1, got " + seq.to_string());
  const std::size_t e = seq.socle_degree();
  std::vector<BigInt> out(e + 2);
  out[0] = 1;
  for (std::size_t i = 1; i <= e; ++i) out[i] = seq[i] + seq[i - 1];
  out[e + 1] = 1;
  return HilbertSequence::algebra(std::move(out));
}

}  // namespace oseq

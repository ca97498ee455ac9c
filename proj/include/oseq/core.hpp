#pragma once

// Exact integer arithmetic shared by every module: binomial coefficients,
// graded dimension counts, Macaulay representations and Hilbert sequences.

#include <cstddef>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oseq/error.hpp"
#include "oseq/report.hpp"

namespace oseq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero when k > n.
inline BigInt binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// Binomial coefficient with an arbitrary-precision top entry.
inline BigInt binom(const BigInt& n, std::uint64_t k) {
  if (n < 0 || n < k) return 0;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// Number of degree-j monomials in r variables.
inline BigInt dim_ring(std::uint64_t r, std::uint64_t j) {
  if (r == 0) throw Error(ErrorCode::OutOfRange, "dim_ring requires r >= 1");
  return binom(r - 1 + j, j);
}

/// Finite h-vector (h_0, ..., h_e) with h_e > 0. Trailing zeros are trimmed
/// on construction. algebra() additionally enforces h_0 == 1.
class HilbertSequence {
 public:
  HilbertSequence() : entries_{1} {}

  static HilbertSequence raw(std::vector<BigInt> entries) {
    while (!entries.empty() && entries.back() == 0) entries.pop_back();
    if (entries.empty()) throw Error(ErrorCode::Malformed, "sequence has no positive entry");
    for (const auto& v : entries)
      if (v < 0) throw Error(ErrorCode::Malformed, "negative entry in sequence");
    HilbertSequence s;
    s.entries_ = std::move(entries);
    return s;
  }

  static HilbertSequence algebra(std::vector<BigInt> entries) {
    auto s = raw(std::move(entries));
    if (s.entries_.front() != 1) throw Error(ErrorCode::Malformed, "h_0 must equal 1");
    return s;
  }

  static HilbertSequence of(std::initializer_list<long long> values) {
    std::vector<BigInt> v;
    v.reserve(values.size());
    for (long long x : values) v.emplace_back(x);
    return raw(std::move(v));
  }

  std::size_t socle_degree() const { return entries_.size() - 1; }
  std::size_t size() const { return entries_.size(); }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  const BigInt& back() const { return entries_.back(); }
  std::span<const BigInt> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool has_interior_zero() const {
    for (std::size_t i = 1; i + 1 < entries_.size(); ++i)
      if (entries_[i] == 0) return true;
    return false;
  }

  bool is_palindromic() const {
    for (std::size_t i = 0, j = entries_.size() - 1; i < j; ++i, --j)
      if (entries_[i] != entries_[j]) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ", ";
      out += entries_[i].str();
    }
    return out + ")";
  }

  friend bool operator==(const HilbertSequence&, const HilbertSequence&) = default;
  friend auto operator<=>(const HilbertSequence& a, const HilbertSequence& b) {
    if (a.entries_.size() != b.entries_.size()) return a.entries_.size() <=> b.entries_.size();
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (a.entries_[i] < b.entries_[i]) return std::strong_ordering::less;
      if (b.entries_[i] < a.entries_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<BigInt> entries_;
};

/// One term C(top, bottom) of a Macaulay representation.
struct MacaulayTerm {
  BigInt top;
  std::uint64_t bottom;
  friend bool operator==(const MacaulayTerm&, const MacaulayTerm&) = default;
};

/// h = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j), a_i > ... > a_j >= j >= 1.
struct MacaulayRep {
  std::uint64_t index = 1;
  std::vector<MacaulayTerm> terms;

  BigInt value() const {
    BigInt sum = 0;
    for (const auto& t : terms) sum += binom(t.top, t.bottom);
    return sum;
  }

  /// h^{<i>}: each C(a, j) becomes C(a + 1, j + 1).
  BigInt growth() const {
    BigInt sum = 0;
    for (const auto& t : terms) sum += binom(t.top + 1, t.bottom + 1);
    return sum;
  }
};

namespace detail {

// Largest a >= k with C(a, k) <= h (assumes h >= 1, k >= 1).
inline BigInt largest_top(const BigInt& h, std::uint64_t k) {
  if (k == 1) return h;
  BigInt lo = k;  // C(k, k) = 1 <= h
  BigInt step = 1;
  BigInt hi = lo + step;
  while (binom(hi, k) <= h) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  // invariant: C(lo, k) <= h < C(hi, k)
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (binom(mid, k) <= h) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace detail

/// Greedy i-th Macaulay representation of h.
inline MacaulayRep macaulay_rep(const BigInt& h, std::uint64_t i) {
  if (h < 1) throw Error(ErrorCode::OutOfRange, "macaulay_rep requires h >= 1");
  if (i < 1) throw Error(ErrorCode::OutOfRange, "macaulay_rep requires i >= 1");
  MacaulayRep rep;
  rep.index = i;
  BigInt rest = h;
  for (std::uint64_t k = i; k >= 1 && rest > 0; --k) {
    BigInt top = detail::largest_top(rest, k);
    rest -= binom(top, k);
    rep.terms.push_back({std::move(top), k});
  }
  return rep;
}

inline BigInt macaulay_growth(const BigInt& h, std::uint64_t i) {
  if (h == 0) return 0;
  return macaulay_rep(h, i).growth();
}

/// Macaulay's criterion on an arbitrary integer sequence with seq[0] == 1.
/// Witnesses are the degrees i + 1 where seq[i+1] > seq[i]^{<i>}.
inline PropertyReport is_o_sequence(std::span<const BigInt> seq) {
  if (seq.empty() || seq[0] != 1) throw Error(ErrorCode::Malformed, "O-sequence check requires h_0 == 1");
  std::vector<std::size_t> witnesses;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] < 0) witnesses.push_back(i);
  if (!witnesses.empty())
    return PropertyReport::from_witnesses(Property::OSequence, std::move(witnesses), "negative entries");
  for (std::size_t i = 1; i + 1 < seq.size(); ++i)
    if (seq[i + 1] > macaulay_growth(seq[i], i)) witnesses.push_back(i + 1);
  return PropertyReport::from_witnesses(Property::OSequence, std::move(witnesses));
}

inline PropertyReport is_o_sequence(const HilbertSequence& seq) { return is_o_sequence(seq.entries()); }

}  // namespace oseq

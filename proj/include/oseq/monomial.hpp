#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oseq/error.hpp"

namespace oseq {

/// Monic monomial x_1^{a_1} ... x_r^{a_r}, stored as its exponent vector.
struct Monomial {
  std::vector<unsigned> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps) : exponents(std::move(exps)) {}

  std::size_t num_vars() const { return exponents.size(); }
  unsigned degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

  bool divides(const Monomial& other) const {
    for (std::size_t k = 0; k < exponents.size(); ++k)
      if (exponents[k] > other.exponents[k]) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      if (exponents[k] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'x' + std::to_string(k + 1);
      if (exponents[k] > 1) out += '^' + std::to_string(exponents[k]);
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Componentwise minimum.
inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial g = a;
  for (std::size_t k = 0; k < g.exponents.size(); ++k)
    g.exponents[k] = std::min(g.exponents[k], b.exponents[k]);
  return g;
}

/// All degree-d monomials in r variables, in descending lexicographic order
/// of exponent vectors (x_1^d first).
inline std::vector<Monomial> monomials_of_degree(std::size_t r, unsigned d) {
  std::vector<Monomial> out;
  if (r == 0) return out;
  std::vector<unsigned> exps(r, 0);
  auto rec = [&](auto&& self, std::size_t k, unsigned remaining) -> void {
    if (k + 1 == r) {
      exps[k] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (unsigned a = remaining + 1; a-- > 0;) {
      exps[k] = a;
      self(self, k + 1, remaining - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// t distinct monomials of common degree e in r variables.
class GeneratorSet {
 public:
  GeneratorSet(std::size_t r, std::vector<Monomial> monomials, bool strict = false)
      : r_(r), monomials_(std::move(monomials)) {
    if (r_ == 0) throw Error(ErrorCode::InvalidGenerators, "codimension must be at least 1");
    if (monomials_.empty()) throw Error(ErrorCode::InvalidGenerators, "no generators");
    for (const auto& m : monomials_)
      if (m.num_vars() != r_)
        throw Error(ErrorCode::InvalidGenerators, "monomial " + m.to_string() + " has wrong number of variables");
    e_ = monomials_.front().degree();
    for (const auto& m : monomials_)
      if (m.degree() != e_)
        throw Error(ErrorCode::InvalidGenerators, "generators have different degrees");
    std::set<Monomial> seen(monomials_.begin(), monomials_.end());
    if (seen.size() != monomials_.size()) throw Error(ErrorCode::InvalidGenerators, "duplicate generators");
    if (strict) {
      for (std::size_t k = 0; k < r_; ++k) {
        bool used = std::any_of(monomials_.begin(), monomials_.end(),
                                [k](const Monomial& m) { return m.exponents[k] > 0; });
        if (!used)
          throw Error(ErrorCode::InvalidGenerators,
                      "variable x" + std::to_string(k + 1) + " divides no generator (strict mode)");
      }
    }
  }

  std::size_t r() const { return r_; }
  unsigned e() const { return e_; }
  std::size_t t() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  std::size_t variables_used() const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < r_; ++k)
      n += std::any_of(monomials_.begin(), monomials_.end(),
                       [k](const Monomial& m) { return m.exponents[k] > 0; });
    return n;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      if (i) out += ", ";
      out += monomials_[i].to_string();
    }
    return out + "}";
  }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::size_t r_;
  unsigned e_ = 0;
  std::vector<Monomial> monomials_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline unsigned parse_uint(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::Parse, "expected a nonnegative integer in '" + std::string(context) + "'");
  return static_cast<unsigned>(std::stoul(std::string(s)));
}

// Parses "x1^4*x3" into (variable index, exponent) pairs, indices 0-based.
inline std::vector<std::pair<std::size_t, unsigned>> parse_factors(std::string_view text) {
  std::vector<std::pair<std::size_t, unsigned>> factors;
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty monomial");
  if (text == "1") return factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view factor = trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.size() < 2 || factor[0] != 'x')
      throw Error(ErrorCode::Parse, "bad factor '" + std::string(factor) + "' (expected x<k> or x<k>^<a>)");
    std::size_t caret = factor.find('^');
    unsigned index = parse_uint(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), factor);
    unsigned exponent = caret == std::string_view::npos ? 1 : parse_uint(factor.substr(caret + 1), factor);
    if (index == 0) throw Error(ErrorCode::Parse, "variables are numbered from x1");
    factors.emplace_back(index - 1, exponent);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return factors;
}

}  // namespace detail

/// Parses "x1^4*x2^4*x3^2" into a monomial in r variables.
inline Monomial parse_monomial(std::string_view text, std::size_t r) {
  Monomial m(std::vector<unsigned>(r, 0));
  for (auto [index, exponent] : detail::parse_factors(text)) {
    if (index >= r)
      throw Error(ErrorCode::InvalidGenerators, "variable x" + std::to_string(index + 1) + " exceeds r=" + std::to_string(r));
    m.exponents[index] += exponent;
  }
  return m;
}

/// Parses a comma-separated generator list. When r == 0 the codimension is
/// taken to be the largest variable index mentioned.
inline GeneratorSet parse_generators(std::string_view text, std::size_t r = 0, bool strict = false) {
  std::vector<std::string_view> pieces;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    pieces.push_back(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (pieces.size() == 1 && detail::trim(pieces[0]).empty())
    throw Error(ErrorCode::InvalidGenerators, "empty generator list");
  if (r == 0) {
    for (auto piece : pieces)
      for (auto [index, exponent] : detail::parse_factors(piece)) r = std::max(r, index + 1);
    r = std::max<std::size_t>(r, 1);
  }
  std::vector<Monomial> monomials;
  for (auto piece : pieces) monomials.push_back(parse_monomial(piece, r));
  return GeneratorSet(r, std::move(monomials), strict);
}

}  // namespace oseq

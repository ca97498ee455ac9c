#pragma once

// Hilbert functions of level algebras built from sums of powers of general
// linear forms, plus the explicit non-log-concave families.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oseq/core.hpp"
#include "oseq/monomial.hpp"
#include "oseq/osequence.hpp"

namespace oseq {

struct LevelParams {
  std::uint64_t r = 1;
  std::uint64_t t = 1;
  std::uint64_t e = 1;
};

/// h_j(m) = min{m, dim R_j, dim R_{e-j}} for 1 <= j <= e, h_0 = 1.
inline HilbertSequence compressed_gorenstein(std::uint64_t r, std::uint64_t e, const BigInt& m) {
  if (r < 1 || e < 1) throw Error(ErrorCode::OutOfRange, "compressed_gorenstein needs r >= 1 and e >= 1");
  if (m < 1) throw Error(ErrorCode::OutOfRange, "compressed_gorenstein needs m >= 1");
  std::vector<BigInt> h(e + 1);
  h[0] = 1;
  for (std::uint64_t j = 1; j <= e; ++j) h[j] = std::min<BigInt>({m, dim_ring(r, j), dim_ring(r, e - j)});
  return HilbertSequence::algebra(std::move(h));
}

/// Hilbert function of a general form of degree e: min{dim R_j, dim R_{e-j}}.
inline HilbertSequence compressed_gorenstein_general(std::uint64_t r, std::uint64_t e) {
  if (r < 1 || e < 1) throw Error(ErrorCode::OutOfRange, "compressed_gorenstein_general needs r >= 1 and e >= 1");
  std::vector<BigInt> h(e + 1);
  for (std::uint64_t j = 0; j <= e; ++j) h[j] = std::min(dim_ring(r, j), dim_ring(r, e - j));
  return HilbertSequence::algebra(std::move(h));
}

/// Largest admissible m when adding a sum of m general e-th powers to a
/// module with Hilbert function h: dim R_e - h_e.
inline BigInt max_general_powers(const HilbertSequence& h, std::uint64_t r) {
  return dim_ring(r, h.socle_degree()) - h.back();
}

/// H_j = min{h_j + h_j(m), dim R_j}: the Hilbert function after adjoining a
/// sum of m general e-th powers to the inverse system of h.
inline HilbertSequence add_general_powers(const HilbertSequence& h, std::uint64_t r, const BigInt& m) {
  const std::uint64_t e = h.socle_degree();
  if (h[0] != 1) throw Error(ErrorCode::Malformed, "h_0 must equal 1");
  if (e < 1) throw Error(ErrorCode::OutOfRange, "socle degree must be at least 1");
  for (std::uint64_t j = 0; j <= e; ++j)
    if (h[j] > dim_ring(r, j))
      throw Error(ErrorCode::Malformed, "h exceeds dim R_" + std::to_string(j) + " in codimension " + std::to_string(r));
  const BigInt bound = max_general_powers(h, r);
  if (m < 1 || m > bound)
    throw Error(ErrorCode::PreconditionM, "m=" + m.str() + " must lie in [1, " + bound.str() + "]");
  const auto added = compressed_gorenstein(r, e, m);
  std::vector<BigInt> out(e + 1);
  out[0] = 1;
  for (std::uint64_t j = 1; j <= e; ++j) out[j] = std::min<BigInt>(h[j] + added[j], dim_ring(r, j));
  return HilbertSequence::algebra(std::move(out));
}

/// First half (degrees 0..14) of Iarrobino's codimension-4 Gorenstein h-vector
/// of socle degree 28.
inline constexpr std::array<unsigned, 15> kGorensteinCodim4Half = {
    1, 4, 10, 20, 35, 56, 84, 120, 165, 175, 186, 198, 211, 225, 240};

/// The codimension-4 type-2 vector obtained from it by one general 28th power.
inline constexpr std::array<unsigned, 29> kCodim4Type2Literal = {
    1,   4,   10,  20,  35,  56,  84,  120, 165, 176, 187, 199, 212, 226, 241,
    226, 212, 199, 187, 176, 166, 121, 85,  57,  36,  21,  11,  5,   2};

/// Completes a first half (degrees 0..floor(e/2)) to a symmetric vector of socle degree e.
inline HilbertSequence symmetric_completion(std::span<const unsigned> half, std::size_t e) {
  if (half.size() != e / 2 + 1) throw Error(ErrorCode::Malformed, "half has wrong length for socle degree");
  std::vector<BigInt> h(e + 1);
  for (std::size_t i = 0; i <= e; ++i) h[i] = half[i <= e / 2 ? i : e - i];
  return HilbertSequence::algebra(std::move(h));
}

inline HilbertSequence iarrobino_gorenstein_codim4(std::span<const unsigned> half = kGorensteinCodim4Half) {
  return symmetric_completion(half, 28);
}

/// Smallest e with e >= (5 + sqrt(48t + 73)) / 2.
inline std::uint64_t codim3_level_min_e(std::uint64_t t) {
  std::uint64_t e = 3;
  while ((2 * e - 5) * (2 * e - 5) < 48 * t + 73) ++e;
  return e;
}

/// Codimension 3, type t: a general form of degree e plus t - 1 sums of six
/// general e-th powers, each step applied through add_general_powers.
inline HilbertSequence family_codim3_level(std::uint64_t t, std::uint64_t e) {
  if (t < 3) throw Error(ErrorCode::TOutOfRange, "type must be at least 3");
  if (e < codim3_level_min_e(t))
    throw Error(ErrorCode::ETooSmall, "e must be at least " + std::to_string(codim3_level_min_e(t)) + " for t=" + std::to_string(t));
  auto h = compressed_gorenstein_general(3, e);
  for (std::uint64_t k = 1; k < t; ++k) h = add_general_powers(h, 3, 6);
  return h;
}

inline HilbertSequence family_codim4_type2(std::span<const unsigned> half = kGorensteinCodim4Half) {
  return add_general_powers(iarrobino_gorenstein_codim4(half), 4, 1);
}

/// x^4 y^4 z^{e-8}, x^{e-2} y z, x y^{e-2} z, x y z^{e-2}.
inline GeneratorSet family_thm32_r3_t4(std::uint64_t e) {
  if (e < 12) throw Error(ErrorCode::ETooSmall, "e must be at least 12");
  const auto n = static_cast<unsigned>(e);
  return GeneratorSet(3, {Monomial({4, 4, n - 8}), Monomial({n - 2, 1, 1}), Monomial({1, n - 2, 1}),
                          Monomial({1, 1, n - 2})});
}

inline std::uint64_t thm32_general_min_e(std::uint64_t r) { return r == 4 ? 42 : 3 * r + 30; }

/// {F, G_1, ..., G_{t-1}} with F = x1^{r+10} x2^{r+10} x3^{e-2r-20},
/// G_1 = x1^{e-r-8} x2^4 x3^4 x4^4 x5 ... xr, and G_j = G_1 with x1 and xj swapped.
inline GeneratorSet family_thm32_general(std::uint64_t r, std::uint64_t t, std::uint64_t e) {
  if (r < 4) throw Error(ErrorCode::OutOfRange, "codimension must be at least 4");
  if (t < 2 || t > r + 1) throw Error(ErrorCode::TOutOfRange, "type must lie in [2, r+1]");
  if (e < thm32_general_min_e(r))
    throw Error(ErrorCode::ETooSmall, "e must be at least " + std::to_string(thm32_general_min_e(r)));
  const auto n = static_cast<unsigned>(e);
  const auto rr = static_cast<unsigned>(r);
  std::vector<unsigned> f(r, 0);
  f[0] = rr + 10;
  f[1] = rr + 10;
  f[2] = n - 2 * rr - 20;
  std::vector<unsigned> g(r, 1);
  g[0] = n - rr - 8;
  g[1] = g[2] = g[3] = 4;
  std::vector<Monomial> gens{Monomial(f)};
  for (std::uint64_t j = 1; j < t; ++j) {
    auto gj = g;
    std::swap(gj[0], gj[j - 1]);
    gens.emplace_back(std::move(gj));
  }
  return GeneratorSet(r, std::move(gens));
}

enum class FamilyName {
  Codim3TypeT,
  Codim4Type2,
  GorensteinCodim4,
  MonomialR3T4,
  MonomialGeneral,
};

inline std::string_view to_string(FamilyName name) {
  switch (name) {
    case FamilyName::Codim3TypeT: return "thm25-codim3";
    case FamilyName::Codim4Type2: return "thm25-codim4t2";
    case FamilyName::GorensteinCodim4: return "thm24-gorenstein";
    case FamilyName::MonomialR3T4: return "thm32-r3t4";
    case FamilyName::MonomialGeneral: return "thm32-general";
  }
  return "unknown";
}

inline std::optional<FamilyName> parse_family_name(std::string_view s) {
  for (auto n : {FamilyName::Codim3TypeT, FamilyName::Codim4Type2, FamilyName::GorensteinCodim4,
                 FamilyName::MonomialR3T4, FamilyName::MonomialGeneral})
    if (to_string(n) == s) return n;
  return std::nullopt;
}

struct FamilySpec {
  FamilyName name;
  LevelParams params;
};

struct FamilyResult {
  FamilySpec spec;
  std::optional<GeneratorSet> generators;
  HilbertSequence sequence;
};

/// Builds any family. Parameters a family fixes (r, t, e of the codimension-4
/// examples) are overwritten in the returned spec.
inline FamilyResult build_family(FamilySpec spec) {
  auto& p = spec.params;
  switch (spec.name) {
    case FamilyName::Codim3TypeT:
      p.r = 3;
      return {spec, std::nullopt, family_codim3_level(p.t, p.e)};
    case FamilyName::Codim4Type2:
      p = {4, 2, 28};
      return {spec, std::nullopt, family_codim4_type2()};
    case FamilyName::GorensteinCodim4:
      p = {4, 1, 28};
      return {spec, std::nullopt, iarrobino_gorenstein_codim4()};
    case FamilyName::MonomialR3T4: {
      p.r = 3;
      p.t = 4;
      auto gens = family_thm32_r3_t4(p.e);
      auto seq = pure_o_sequence(gens);
      return {spec, std::move(gens), std::move(seq)};
    }
    case FamilyName::MonomialGeneral: {
      auto gens = family_thm32_general(p.r, p.t, p.e);
      auto seq = pure_o_sequence(gens);
      return {spec, std::move(gens), std::move(seq)};
    }
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

}  // namespace oseq

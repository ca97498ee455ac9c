#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "oseq/core.hpp"
#include "oseq/report.hpp"

namespace oseq {

/// Witnesses: interior degrees 1 <= i <= e-1 with h_{i-1} h_{i+1} > h_i^2.
inline PropertyReport check_log_concavity(const HilbertSequence& seq) {
  std::vector<std::size_t> witnesses;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i)
    if (seq[i - 1] * seq[i + 1] > seq[i] * seq[i]) witnesses.push_back(i);
  return PropertyReport::from_witnesses(Property::LogConcave, std::move(witnesses));
}

/// Witnesses are valleys: degrees i with h_{i-1} > h_i and some later entry
/// above h_i. The sequence is unimodal exactly when there are none.
inline PropertyReport check_unimodality(const HilbertSequence& seq) {
  std::vector<std::size_t> witnesses;
  // suffix maxima: later_max[i] = max over j > i
  std::vector<BigInt> later_max(seq.size(), 0);
  for (std::size_t i = seq.size() - 1; i-- > 0;)
    later_max[i] = seq[i + 1] > later_max[i + 1] ? seq[i + 1] : later_max[i + 1];
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i - 1] > seq[i] && later_max[i] > seq[i]) witnesses.push_back(i);
  return PropertyReport::from_witnesses(Property::Unimodal, std::move(witnesses));
}

/// Witnesses: i <= e/2 with h_i > h_{e-i}.
inline PropertyReport check_flawless(const HilbertSequence& seq) {
  const std::size_t e = seq.socle_degree();
  std::vector<std::size_t> witnesses;
  for (std::size_t i = 0; 2 * i <= e; ++i)
    if (seq[i] > seq[e - i]) witnesses.push_back(i);
  return PropertyReport::from_witnesses(Property::Flawless, std::move(witnesses));
}

/// First differences (1, h_1 - 1, ..., h_{floor(e/2)} - h_{floor(e/2)-1}).
inline std::vector<BigInt> first_half_difference(const HilbertSequence& seq) {
  const std::size_t half = seq.socle_degree() / 2;
  std::vector<BigInt> delta{1};
  for (std::size_t i = 1; i <= half; ++i) delta.push_back(seq[i] - seq[i - 1]);
  return delta;
}

/// The first-half difference must be nonnegative and satisfy Macaulay's bound.
inline PropertyReport check_differentiable_first_half(const HilbertSequence& seq) {
  if (seq[0] != 1) throw Error(ErrorCode::Malformed, "differentiability check requires h_0 == 1");
  auto delta = first_half_difference(seq);
  std::vector<std::size_t> witnesses;
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (delta[i] < 0) witnesses.push_back(i);
  if (!witnesses.empty())
    return PropertyReport::from_witnesses(Property::DifferentiableFirstHalf, std::move(witnesses),
                                          "negative first difference");
  auto o = is_o_sequence(delta);
  return PropertyReport::from_witnesses(Property::DifferentiableFirstHalf, std::move(o.witnesses),
                                        o.holds ? "" : "first difference violates Macaulay's bound");
}

inline PropertyReport check_property(Property p, const HilbertSequence& seq) {
  switch (p) {
    case Property::LogConcave: return check_log_concavity(seq);
    case Property::Unimodal: return check_unimodality(seq);
    case Property::Flawless: return check_flawless(seq);
    case Property::DifferentiableFirstHalf: return check_differentiable_first_half(seq);
    case Property::OSequence: return is_o_sequence(seq);
  }
  throw Error(ErrorCode::Internal, "unknown property");
}

/// Closed-form answer for whether C(i+1,2)+a, C(i+2,2)+a, C(i+3,2)+a is
/// log-concave: exactly when a <= C(i+2,2). The triple is also checked
/// directly and a disagreement is an internal error.
inline bool lemma_triple_test(std::uint64_t i, const BigInt& a) {
  if (i < 1 || a < 1) throw Error(ErrorCode::OutOfRange, "lemma_triple_test needs i >= 1 and a >= 1");
  const bool closed_form = a <= binom(i + 2, 2);
  auto triple = HilbertSequence::raw({binom(i + 1, 2) + a, binom(i + 2, 2) + a, binom(i + 3, 2) + a});
  const bool direct = check_log_concavity(triple).holds;
  if (closed_form != direct)
    throw Error(ErrorCode::Internal, "triple criterion disagrees with direct check at i=" + std::to_string(i));
  return closed_form;
}

}  // namespace oseq

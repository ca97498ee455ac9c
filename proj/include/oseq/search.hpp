#pragma once

// Exhaustive enumeration of pure O-sequence generator sets up to variable
// permutation, with property screening and interval-gap reports.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "oseq/core.hpp"
#include "oseq/monomial.hpp"
#include "oseq/osequence.hpp"
#include "oseq/properties.hpp"

namespace oseq {

inline constexpr std::size_t kMaxExactCanonicalR = 8;

namespace detail {

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t r) {
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Monomial permute(const Monomial& m, const std::vector<std::size_t>& perm) {
  Monomial out(std::vector<unsigned>(m.num_vars()));
  for (std::size_t k = 0; k < perm.size(); ++k) out.exponents[k] = m.exponents[perm[k]];
  return out;
}

}  // namespace detail

/// Representative of the orbit under variable permutations: monomials listed
/// in descending lex order, and among all relabelings the list that is
/// lexicographically greatest (so x1 carries the largest exponents).
inline GeneratorSet canonicalize(const GeneratorSet& gens) {
  if (gens.r() > kMaxExactCanonicalR)
    throw Error(ErrorCode::RTooLarge, "exact canonicalization supports r <= " + std::to_string(kMaxExactCanonicalR));
  std::vector<Monomial> best;
  for (const auto& perm : detail::all_permutations(gens.r())) {
    std::vector<Monomial> image;
    for (const auto& m : gens.monomials()) image.push_back(detail::permute(m, perm));
    std::sort(image.begin(), image.end(), std::greater<>());
    if (best.empty() || image > best) best = std::move(image);
  }
  return GeneratorSet(gens.r(), std::move(best));
}

/// Enumerates t-subsets of the degree-e monomials (as ascending index
/// tuples into monomials_of_degree, i.e. descending monomials) and keeps the
/// canonical ones. A tuple is canonical when no relabeling maps it to a
/// lexicographically smaller sorted tuple.
class CanonicalEnumerator {
 public:
  CanonicalEnumerator(std::size_t r, std::size_t t, unsigned e) : r_(r), t_(t), e_(e) {
    if (r < 1 || t < 1) throw Error(ErrorCode::OutOfRange, "need r >= 1 and t >= 1");
    if (r > kMaxExactCanonicalR)
      throw Error(ErrorCode::RTooLarge, "exact canonicalization supports r <= " + std::to_string(kMaxExactCanonicalR));
    monomials_ = monomials_of_degree(r, e);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < monomials_.size(); ++i) index.emplace(monomials_[i], i);
    auto perms = detail::all_permutations(r);
    for (std::size_t p = 1; p < perms.size(); ++p) {  // skip identity
      std::vector<std::size_t> map(monomials_.size());
      for (std::size_t i = 0; i < monomials_.size(); ++i) map[i] = index.at(detail::permute(monomials_[i], perms[p]));
      index_maps_.push_back(std::move(map));
    }
  }

  std::size_t num_monomials() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Shards are indexed by the first (largest) monomial of the subset.
  std::size_t num_shards() const { return monomials_.size() >= t_ ? monomials_.size() - t_ + 1 : 0; }

  /// Number of raw subsets, divided by r! as a class-count estimate.
  BigInt estimate() const {
    BigInt raw = binom(monomials_.size(), t_);
    BigInt group = 1;
    for (std::size_t k = 2; k <= r_; ++k) group *= k;
    return (raw + group - 1) / group;
  }

  bool is_canonical(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> image(subset.size());
    for (const auto& map : index_maps_) {
      for (std::size_t i = 0; i < subset.size(); ++i) image[i] = map[subset[i]];
      std::sort(image.begin(), image.end());
      if (image < subset) return false;
    }
    return true;
  }

  GeneratorSet to_generators(const std::vector<std::size_t>& subset) const {
    std::vector<Monomial> ms;
    for (auto i : subset) ms.push_back(monomials_[i]);
    return GeneratorSet(r_, std::move(ms));
  }

  /// Calls visit(subset) for each canonical subset whose first index is shard.
  template <class Visit>
  void for_each_in_shard(std::size_t shard, Visit&& visit) const {
    std::vector<std::size_t> subset(t_);
    subset[0] = shard;
    const std::size_t n = monomials_.size();
    auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
      if (pos == t_) {
        if (is_canonical(subset)) visit(subset);
        return;
      }
      for (std::size_t i = start; i + (t_ - pos) <= n; ++i) {
        subset[pos] = i;
        self(self, pos + 1, i + 1);
      }
    };
    rec(rec, 1, shard + 1);
  }

 private:
  std::size_t r_, t_;
  unsigned e_;
  std::vector<Monomial> monomials_;
  std::vector<std::vector<std::size_t>> index_maps_;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Every canonical generator set for (r, t, e), each orbit exactly once, in
/// ascending index-tuple order.
inline std::vector<GeneratorSet> enumerate_generator_sets(std::size_t r, std::size_t t, unsigned e,
                                                          std::uint64_t budget = kDefaultSearchBudget) {
  CanonicalEnumerator en(r, t, e);
  if (en.estimate() > budget)
    throw Error(ErrorCode::BudgetExceeded, "about " + en.estimate().str() + " classes exceeds budget " + std::to_string(budget));
  std::vector<GeneratorSet> out;
  for (std::size_t s = 0; s < en.num_shards(); ++s)
    en.for_each_in_shard(s, [&](const auto& subset) { out.push_back(en.to_generators(subset)); });
  return out;
}

// ---- interval gaps --------------------------------------------------------

/// lower and lower + alpha (at `degree`) both occur; lower + beta does not.
struct IntervalGap {
  std::size_t degree = 0;
  HilbertSequence lower;
  BigInt alpha;
  BigInt beta;
  friend bool operator==(const IntervalGap&, const IntervalGap&) = default;
};

inline std::vector<IntervalGap> interval_report(const std::vector<HilbertSequence>& sequences) {
  std::vector<IntervalGap> gaps;
  if (sequences.empty()) return gaps;
  const std::size_t len = sequences.front().size();
  for (const auto& s : sequences)
    if (s.size() != len) throw Error(ErrorCode::MixedSocleDegrees, "all sequences must share a socle degree");
  for (std::size_t i = 0; i < len; ++i) {
    // sequences agreeing outside degree i -> values seen at degree i
    std::map<std::vector<BigInt>, std::set<BigInt>> groups;
    for (const auto& s : sequences) {
      std::vector<BigInt> key(s.begin(), s.end());
      key[i] = -1;
      groups[std::move(key)].insert(s[i]);
    }
    for (const auto& [key, values] : groups) {
      for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
        const BigInt alpha = *std::next(it) - *it;
        if (alpha < 2) continue;
        std::vector<BigInt> lower = key;
        lower[i] = *it;
        auto lower_seq = HilbertSequence::raw(std::move(lower));
        for (BigInt beta = 1; beta < alpha; ++beta) gaps.push_back({i, lower_seq, alpha, beta});
      }
    }
  }
  return gaps;
}

// ---- search ---------------------------------------------------------------

struct SearchJob {
  std::size_t r = 3;
  std::size_t t = 2;
  unsigned e_min = 1;
  unsigned e_max = 1;
  std::vector<Property> properties{Property::LogConcave};
  std::size_t workers = 1;
  std::uint64_t budget = kDefaultSearchBudget;
};

struct SearchFailure {
  GeneratorSet generators;
  HilbertSequence sequence;
  std::vector<PropertyReport> failed;
};

/// Output of one shard for one socle degree; also the unit of persistence.
struct ShardRecord {
  unsigned e = 0;
  std::size_t shard = 0;
  std::size_t canonical_sets = 0;
  std::vector<SearchFailure> failures;
  std::vector<HilbertSequence> sequences;  // distinct, sorted
};

struct DegreeSummary {
  std::size_t r = 0, t = 0;
  unsigned e = 0;
  std::size_t canonical_sets = 0;
  std::size_t distinct_sequences = 0;
  std::map<Property, std::size_t> failures_by_property;
  std::size_t interval_gaps = 0;
};

struct SearchReport {
  SearchJob job;
  std::size_t total_canonical_sets = 0;
  std::size_t sequences_distinct = 0;
  std::vector<SearchFailure> failures;
  std::vector<IntervalGap> interval_gaps;
  std::vector<DegreeSummary> summary;
  double runtime_seconds = 0;
};

/// Recomputes a failure by brute force and a fresh property check; throws if
/// anything disagrees, so an unverified failure never reaches a report.
inline void double_check(const SearchFailure& f) {
  if (pure_o_sequence_bruteforce(f.generators) != f.sequence)
    throw Error(ErrorCode::Internal, "brute force disagrees on " + f.generators.to_string());
  for (const auto& rep : f.failed) {
    auto again = check_property(rep.property, f.sequence);
    if (again != rep || again.holds)
      throw Error(ErrorCode::Internal, "property re-check disagrees on " + f.generators.to_string());
  }
}

inline ShardRecord search_shard(const CanonicalEnumerator& en, unsigned e, std::size_t shard,
                                const std::vector<Property>& properties) {
  ShardRecord rec;
  rec.e = e;
  rec.shard = shard;
  std::set<HilbertSequence> seen;
  en.for_each_in_shard(shard, [&](const auto& subset) {
    ++rec.canonical_sets;
    auto gens = en.to_generators(subset);
    auto seq = pure_o_sequence(gens);
    std::vector<PropertyReport> failed;
    for (Property p : properties) {
      auto rep = check_property(p, seq);
      if (!rep.holds) failed.push_back(std::move(rep));
    }
    if (!failed.empty()) {
      SearchFailure f{std::move(gens), seq, std::move(failed)};
      double_check(f);
      rec.failures.push_back(std::move(f));
    }
    seen.insert(std::move(seq));
  });
  rec.sequences.assign(seen.begin(), seen.end());
  return rec;
}

/// Completed shards (from an earlier run) are reused instead of recomputed.
using ShardKey = std::pair<unsigned, std::size_t>;
using ShardSink = std::function<void(const ShardRecord&)>;

/// Runs the job. Workers take shards from a shared counter; the sink sees
/// shards strictly in (e, shard) order and the report is assembled in that
/// order, so the output does not depend on the worker count.
inline SearchReport run_search(const SearchJob& job, const ShardSink& sink = {},
                               const std::map<ShardKey, ShardRecord>& completed = {}) {
  if (job.r < 1 || job.t < 1 || job.e_min > job.e_max || job.budget == 0)
    throw Error(ErrorCode::OutOfRange, "invalid search job");
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.job = job;

  for (unsigned e = job.e_min; e <= job.e_max; ++e) {
    CanonicalEnumerator en(job.r, job.t, e);
    if (en.estimate() > job.budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "e=" + std::to_string(e) + ": about " + en.estimate().str() + " classes exceeds budget " +
                      std::to_string(job.budget));
    const std::size_t shards = en.num_shards();
    std::vector<std::optional<ShardRecord>> results(shards);
    std::size_t next_to_emit = 0;
    std::mutex mu;
    std::atomic<std::size_t> next_shard{0};

    auto finish = [&](std::size_t s, ShardRecord rec) {
      std::lock_guard lock(mu);
      results[s] = std::move(rec);
      while (next_to_emit < shards && results[next_to_emit]) {
        if (sink) sink(*results[next_to_emit]);
        ++next_to_emit;
      }
    };
    auto work = [&] {
      for (std::size_t s; (s = next_shard.fetch_add(1)) < shards;) {
        auto it = completed.find({e, s});
        finish(s, it != completed.end() ? it->second : search_shard(en, e, s, job.properties));
      }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(job.workers, std::max<std::size_t>(shards, 1)));
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    DegreeSummary row;
    row.r = job.r;
    row.t = job.t;
    row.e = e;
    std::set<HilbertSequence> distinct;
    for (auto& rec : results) {
      row.canonical_sets += rec->canonical_sets;
      distinct.insert(rec->sequences.begin(), rec->sequences.end());
      for (auto& f : rec->failures) {
        for (const auto& rep : f.failed) ++row.failures_by_property[rep.property];
        report.failures.push_back(std::move(f));
      }
    }
    auto gaps = interval_report(std::vector<HilbertSequence>(distinct.begin(), distinct.end()));
    row.distinct_sequences = distinct.size();
    row.interval_gaps = gaps.size();
    report.total_canonical_sets += row.canonical_sets;
    report.sequences_distinct += row.distinct_sequences;
    report.interval_gaps.insert(report.interval_gaps.end(), gaps.begin(), gaps.end());
    report.summary.push_back(std::move(row));
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace oseq

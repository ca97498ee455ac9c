#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "oseq/json.hpp"
#include "oseq/level.hpp"
#include "oseq/osequence.hpp"
#include "oseq/search.hpp"
#include "test_util.hpp"

using namespace oseq;

namespace {

std::string report_text(const SearchReport& r) { return to_json(r, false).dump(); }

}  // namespace

TEST(Canonicalize, Examples) {
  auto a = canonicalize(parse_generators("x2^2, x1*x2"));
  EXPECT_EQ(a.monomials(), (std::vector<Monomial>{Monomial({2, 0}), Monomial({1, 1})}));
  EXPECT_EQ(canonicalize(a).monomials(), a.monomials());
  EXPECT_EQ(canonicalize(parse_generators("x1*x2*x3, x1*x3^2")).monomials(),
            canonicalize(parse_generators("x1*x2*x3, x1^2*x2")).monomials());
  EXPECT_NE(canonicalize(parse_generators("x1*x2*x3, x1*x3^2")).monomials(),
            canonicalize(parse_generators("x1*x2*x3, x1^3")).monomials());
  std::vector<unsigned> nine(9, 0);
  nine[0] = 1;
  try {
    canonicalize(GeneratorSet(9, {Monomial(nine)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RTooLarge);
  }
}

TEST(Canonicalize, InvariantUnderRelabeling) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = test::random_generator_set(rng, 4, 4, 7);
    auto c = canonicalize(g);
    EXPECT_EQ(pure_o_sequence(g), pure_o_sequence(c));
    EXPECT_EQ(canonicalize(c).monomials(), c.monomials());
    std::vector<std::size_t> perm(g.r());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Monomial> relabeled;
    for (const auto& m : g.monomials()) relabeled.push_back(detail::permute(m, perm));
    EXPECT_EQ(canonicalize(GeneratorSet(g.r(), relabeled)).monomials(), c.monomials());
  }
}

TEST(Enumerate, Examples) {
  auto two = enumerate_generator_sets(2, 1, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].monomials()[0], Monomial({2, 0}));
  EXPECT_EQ(two[1].monomials()[0], Monomial({1, 1}));
  for (unsigned e = 1; e <= 10; ++e) {
    auto one = enumerate_generator_sets(1, 1, e);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].monomials()[0], Monomial({e}));
  }
  EXPECT_EQ(enumerate_generator_sets(3, 2, 3).size(), oracle::burnside_orbit_count(3, 2, 3));
}

TEST(Enumerate, MatchesBurnside) {
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned t = 1; t <= 3; ++t)
      for (unsigned e = 1; e <= 5; ++e) {
        if (binom(r - 1 + e, e) > 40) continue;
        EXPECT_EQ(enumerate_generator_sets(r, t, e).size(), oracle::burnside_orbit_count(r, t, e)) << r << t << e;
      }
}

TEST(Enumerate, ExactlyOnce) {
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned e = 1; e <= 6; ++e) {
      const auto n = static_cast<std::uint64_t>(dim_ring(r, e));
      if (n > 20) continue;
      for (unsigned t = 1; t <= std::min<std::uint64_t>(3, n); ++t) {
        auto all = monomials_of_degree(r, e);
        // raw enumeration grouped by canonical form
        std::map<std::vector<Monomial>, HilbertSequence> raw;
        std::vector<std::size_t> idx(t);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
          if (pos == t) {
            std::vector<Monomial> ms;
            for (auto i : idx) ms.push_back(all[i]);
            GeneratorSet g(r, ms);
            raw.emplace(canonicalize(g).monomials(), pure_o_sequence(g));
            return;
          }
          for (std::size_t i = start; i < all.size(); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
          }
        };
        rec(rec, 0, 0);
        auto listed = enumerate_generator_sets(r, t, e);
        std::map<std::vector<Monomial>, HilbertSequence> seen;
        for (const auto& g : listed) {
          EXPECT_EQ(canonicalize(g).monomials(), g.monomials());
          EXPECT_TRUE(seen.emplace(g.monomials(), pure_o_sequence(g)).second) << g.to_string();
        }
        EXPECT_EQ(seen, raw) << r << " " << t << " " << e;
      }
    }
}

TEST(Enumerate, Budget) {
  try {
    enumerate_generator_sets(4, 3, 9, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    EXPECT_NE(std::string(e.what()).find("about"), std::string::npos);
  }
  SearchJob job;
  job.r = 4;
  job.t = 3;
  job.e_min = job.e_max = 9;
  job.budget = 1000;
  EXPECT_THROW(run_search(job), Error);
}

TEST(IntervalReport, Examples) {
  auto gaps = interval_report({HilbertSequence::of({1, 2, 2}), HilbertSequence::of({1, 2, 4})});
  ASSERT_EQ(gaps.size(), 1u);
  EXPECT_EQ(gaps[0].degree, 2u);
  EXPECT_EQ(gaps[0].beta, 1);
  EXPECT_EQ(gaps[0].alpha, 2);
  EXPECT_EQ(gaps[0].lower, HilbertSequence::of({1, 2, 2}));
  EXPECT_TRUE(interval_report({HilbertSequence::of({1, 2, 2}), HilbertSequence::of({1, 2, 3}),
                               HilbertSequence::of({1, 2, 4})})
                  .empty());
  EXPECT_TRUE(interval_report({HilbertSequence::of({1, 3, 4, 2})}).empty());
  EXPECT_TRUE(interval_report({}).empty());
  EXPECT_EQ(interval_report({HilbertSequence::of({1, 1, 1}), HilbertSequence::of({1, 1, 5})}).size(), 3u);
  try {
    interval_report({HilbertSequence::of({1, 2}), HilbertSequence::of({1, 2, 1})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedSocleDegrees);
  }
}

TEST(IntervalReport, SmallCodimThreeTypeTwoRecorded) {
  SearchJob job;
  job.r = 3;
  job.t = 2;
  job.e_min = job.e_max = 4;
  auto report = run_search(job);
  ASSERT_EQ(report.summary.size(), 1u);
  EXPECT_EQ(report.summary[0].interval_gaps, report.interval_gaps.size());
  for (const auto& g : report.interval_gaps) {
    EXPECT_LT(g.beta, g.alpha);
    EXPECT_EQ(g.lower.socle_degree(), 4u);
  }
  RecordProperty("interval_gaps_r3_t2_e4", static_cast<int>(report.interval_gaps.size()));
}

TEST(RunSearch, CodimTwoAndOneHaveNoFailures) {
  for (unsigned t = 1; t <= 3; ++t) {
    SearchJob job{2, t, 1, 8, {Property::LogConcave}, 1};
    auto r = run_search(job);
    EXPECT_TRUE(r.failures.empty()) << t;
    EXPECT_GT(r.total_canonical_sets, 0u);
  }
  SearchJob one{1, 1, 1, 20, {Property::LogConcave, Property::Unimodal}, 1};
  auto r = run_search(one);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.total_canonical_sets, 20u);
}

TEST(RunSearch, FindsMonomialFamily) {
  SearchJob job{3, 4, 12, 12, {Property::LogConcave}, 1};
  auto report = run_search(job);
  const auto target = canonicalize(family_thm32_r3_t4(12)).monomials();
  bool found = false;
  for (const auto& f : report.failures) {
    found = found || f.generators.monomials() == target;
    EXPECT_NO_THROW(double_check(f));
    EXPECT_EQ(pure_o_sequence_bruteforce(f.generators), f.sequence);
  }
  EXPECT_TRUE(found);
  RecordProperty("failures_r3_t4_e12", static_cast<int>(report.failures.size()));
}

TEST(RunSearch, WorkerCountDoesNotChangeReport) {
  SearchJob job{3, 2, 1, 7, {Property::LogConcave, Property::Unimodal, Property::Flawless}, 1};
  auto serial = run_search(job);
  job.workers = 8;
  auto parallel = run_search(job);
  EXPECT_EQ(report_text(serial), report_text(parallel));
  job.workers = 3;
  EXPECT_EQ(report_text(serial), report_text(run_search(job)));
}

TEST(RunSearch, SinkSeesShardsInOrderAndResumeReusesThem) {
  SearchJob job{3, 3, 5, 6, {Property::LogConcave}, 4};
  std::vector<ShardKey> order;
  std::map<ShardKey, ShardRecord> saved;
  auto full = run_search(job, [&](const ShardRecord& rec) {
    order.emplace_back(rec.e, rec.shard);
    saved.emplace(ShardKey{rec.e, rec.shard}, rec);
  });
  EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
  EXPECT_EQ(std::adjacent_find(order.begin(), order.end()), order.end());

  // keep only some shards, then resume
  std::map<ShardKey, ShardRecord> partial;
  for (const auto& [k, v] : saved)
    if (k.second % 2 == 0) partial.emplace(k, v);
  std::size_t recomputed = 0;
  auto resumed = run_search(job, [&](const ShardRecord& rec) { recomputed += !partial.count({rec.e, rec.shard}); },
                            partial);
  EXPECT_EQ(report_text(full), report_text(resumed));
  EXPECT_EQ(recomputed, saved.size() - partial.size());
}

TEST(RunSearch, FailureJsonRoundTrip) {
  SearchJob job{3, 4, 12, 12, {Property::LogConcave, Property::Unimodal}, 1};
  auto report = run_search(job);
  ASSERT_FALSE(report.failures.empty());
  for (const auto& f : report.failures) {
    auto j = to_json(f);
    EXPECT_TRUE(j.contains("witnesses"));
    EXPECT_EQ(j.at("sequence").at(0), "1");
    auto back = failure_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.generators.monomials(), f.generators.monomials());
    EXPECT_EQ(back.sequence, f.sequence);
    EXPECT_EQ(back.failed, f.failed);
  }
}

TEST(RunSearch, InvalidJob) {
  SearchJob job;
  job.e_min = 5;
  job.e_max = 4;
  EXPECT_THROW(run_search(job), Error);
}

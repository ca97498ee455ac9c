// Acceptance gate: one PASS/FAIL line per criterion, each with a fixed time
// limit. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oseq/apolarity.hpp"
#include "oseq/json.hpp"
#include "oseq/level.hpp"
#include "oseq/osequence.hpp"
#include "oseq/properties.hpp"
#include "oseq/search.hpp"
#include "test_util.hpp"

using namespace oseq;

namespace {

int failures = 0;

std::vector<std::size_t> degrees(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (auto i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<std::size_t> join(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool has(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void criterion(int id, const char* name, double limit_seconds, const std::function<bool(std::string&)>& body) {
  std::string note;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(note);
  } catch (const std::exception& ex) {
    note = std::string("exception: ") + ex.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed < limit_seconds;
  if (!in_time) note += (note.empty() ? "" : "; ") + std::string("over time limit");
  const bool pass = ok && in_time;
  failures += !pass;
  std::printf("%s %2d %-44s %10.4f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", id, name, elapsed, limit_seconds,
              note.empty() ? "" : "  ", note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const PrimeField field(kDefaultPrime);
  const FieldConfig cfg{kDefaultPrime, kDefaultSeed};

  criterion(1, "divisor example (1,3,4,2)", 0.001, [&](std::string&) {
    GeneratorSet g(3, {Monomial({1, 1, 1}), Monomial({1, 0, 2})});
    auto h = pure_o_sequence(g);
    auto dual = dual_hilbert(field, {monomial_form(field, g.monomials()[0]), monomial_form(field, g.monomials()[1])});
    return h == HilbertSequence::of({1, 3, 4, 2}) && dual == h;
  });

  criterion(2, "codim-4 Gorenstein vector", 0.001, [&](std::string& note) {
    auto h = iarrobino_gorenstein_codim4();
    auto w = check_log_concavity(h).witnesses;
    note = "witnesses " + std::to_string(w.size());
    return h.size() == 29 && h[8] == 165 && h[14] == 240 && h[28] == 1 && w == join(degrees(9, 13), degrees(15, 19));
  });

  criterion(3, "codim-4 type-2 vector", 0.001, [&](std::string&) {
    auto H = family_codim4_type2();
    std::vector<BigInt> lit(kCodim4Type2Literal.begin(), kCodim4Type2Literal.end());
    auto literal = HilbertSequence::algebra(std::move(lit));
    return H == literal && H == add_general_powers(iarrobino_gorenstein_codim4(), 4, 1) && H[9] == 176 &&
           H[13] == 226 && H[15] == 226 && H[28] == 2 &&
           check_log_concavity(H).witnesses == join(degrees(10, 13), degrees(15, 19));
  });

  criterion(4, "codim-3 type-t level family, t=3..8", 0.1, [&](std::string& note) {
    std::size_t cases = 0;
    for (long long t = 3; t <= 8; ++t)
      for (std::uint64_t e = codim3_level_min_e(t); e <= 30; ++e, ++cases) {
        auto h = family_codim3_level(t, e);
        const long long a = 6 * (t - 1);
        if (!test::tail_is(h, {15 + a, 10 + a, 6 + a, 3 + 3 * (t - 1), t})) return false;
        if (!has(check_log_concavity(h).witnesses, e - 3)) return false;
        if (lemma_triple_test(3, a) || !(a > 10)) return false;
      }
    note = std::to_string(cases) + " cases";
    return cases > 0;
  });

  criterion(5, "four monomials in 3 variables, e=12..20", 1.0, [&](std::string&) {
    for (std::uint64_t e = 12; e <= 20; ++e) {
      auto g = family_thm32_r3_t4(e);
      auto h = pure_o_sequence(g);
      if (!test::tail_is(h, {27, 22, 18, 12, 4}) || !has(check_log_concavity(h).witnesses, e - 3) ||
          pure_o_sequence_bruteforce(g) != h)
        return false;
    }
    return true;
  });

  criterion(6, "monomial families in r >= 4 variables", 5.0, [&](std::string&) {
    auto h4 = pure_o_sequence(family_thm32_general(4, 2, 42));
    if (!(h4[28] == 245 && h4[29] == 230 && h4[30] == 216 && has(check_log_concavity(h4).witnesses, 29))) return false;
    auto h5 = pure_o_sequence(family_thm32_general(5, 2, 45));
    if (!(h5[30] == 386 && h5[31] == 370 && h5[32] == 355 && has(check_log_concavity(h5).witnesses, 31))) return false;
    for (std::uint64_t r = 4; r <= 5; ++r)
      for (std::uint64_t t = 2; t <= r + 1; ++t) {
        const auto e = thm32_general_min_e(r);
        auto h = pure_o_sequence(family_thm32_general(r, t, e));
        const BigInt a = BigInt(125) << (r - 4);
        if (!has(check_log_concavity(h).witnesses, e - r - 9)) return false;
        if (!(a > binom(r + 11, 2)) || lemma_triple_test(r + 9, a)) return false;
      }
    return true;
  });

  criterion(7, "sums of general powers, 20 trials each", 30.0, [&](std::string& note) {
    struct Tuple {
      std::size_t r;
      unsigned e;
      std::uint64_t m;
    };
    for (auto [r, e, m] : {Tuple{2, 6, 4}, Tuple{3, 8, 5}, Tuple{3, 10, 6}, Tuple{4, 6, 10}}) {
      auto rep = verify_lemma21(r, e, m, 20, cfg);
      note += std::to_string(rep.agreements) + "/20 ";
      if (rep.trials.size() != 20 || rep.exceedances != 0 || rep.agreements < 1) return false;
    }
    return true;
  });

  criterion(8, "adjoining general powers", 30.0, [&](std::string&) {
    std::vector base{monomial_form(field, Monomial({1, 1, 1})), monomial_form(field, Monomial({1, 0, 2}))};
    auto a = verify_prop22(field, base, 1, 20, cfg);
    if (!a.passed || a.expected != HilbertSequence::of({1, 3, 5, 3})) return false;
    auto b = verify_prop22(field, {monomial_form(field, Monomial({4, 4, 4}))}, 6, 20, cfg, 2);
    if (!b.passed || !test::tail_is(b.expected, {27, 22, 18, 9, 3})) return false;
    for (const auto& trial : b.trials)
      if (trial.agrees && !test::tail_is(HilbertSequence::algebra(trial.observed), {27, 22, 18, 9, 3})) return false;
    return true;
  });

  criterion(9, "type-1 sequences", 5.0, [&](std::string&) {
    std::mt19937 rng(kDefaultSeed);
    for (int k = 0; k < 500; ++k) {
      auto exps = test::random_exponents(rng, 1 + rng() % 6, 30);
      auto h = type1_sequence(exps);
      if (!h.is_palindromic() || !check_unimodality(h).holds || !check_log_concavity(h).holds) return false;
    }
    for (int k = 0; k < 100; ++k) {
      auto exps = test::random_exponents(rng, 1 + rng() % 5, 29);
      auto longer = exps;
      longer.push_back(1);
      if (append_variable(type1_sequence(exps)) != type1_sequence(longer)) return false;
    }
    return true;
  });

  criterion(10, "inclusion-exclusion vs brute force, 1000 sets", 30.0, [&](std::string&) {
    std::mt19937 rng(kDefaultSeed + 1);
    for (int k = 0; k < 1000; ++k) {
      auto g = test::random_generator_set(rng, 4, 4, 10);
      auto h = pure_o_sequence(g);
      if (h != pure_o_sequence_bruteforce(g)) return false;
      if (!check_flawless(h).holds || !check_differentiable_first_half(h).holds) return false;
    }
    return true;
  });

  criterion(11, "exhaustive (r,t)=(3,2) search, e<=9", 300.0, [&](std::string& note) {
    SearchJob job{3, 2, 1, 9, {Property::LogConcave}, 1};
    auto serial = run_search(job);
    job.workers = 8;
    auto parallel = run_search(job);
    for (const auto& f : serial.failures) double_check(f);
    note = std::to_string(serial.total_canonical_sets) + " classes, " + std::to_string(serial.failures.size()) +
           " not log-concave";
    return to_json(serial, false) == to_json(parallel, false);
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

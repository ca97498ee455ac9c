#pragma once

// Command-line front end. run_app() is the whole program; main() only
// forwards to it so tests can drive the CLI in-process.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oseq/apolarity.hpp"
#include "oseq/json.hpp"
#include "oseq/level.hpp"
#include "oseq/osequence.hpp"
#include "oseq/properties.hpp"
#include "oseq/reference_checks.hpp"
#include "oseq/search.hpp"

namespace oseq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBudget = 3,
  kVerificationFailed = 4,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return kBudget;
    case ErrorCode::Internal: return kVerificationFailed;
    default: return kUsage;
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    auto t = std::string(detail::trim(item));
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

inline std::vector<Property> parse_properties(const std::string& s) {
  std::vector<Property> out;
  for (const auto& name : split_list(s)) {
    auto p = parse_property(name);
    if (!p) throw Error(ErrorCode::Parse, "unknown property '" + name + "'");
    out.push_back(*p);
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "no properties given");
  return out;
}

inline HilbertSequence parse_sequence(const std::string& s) {
  std::vector<BigInt> v;
  for (const auto& item : split_list(s)) {
    auto x = parse_bigint(item);
    if (x < 0) throw Error(ErrorCode::Malformed, "entries must be nonnegative");
    v.push_back(std::move(x));
  }
  if (v.empty()) throw Error(ErrorCode::Parse, "empty sequence");
  return HilbertSequence::raw(std::move(v));
}

inline std::vector<PropertyReport> check_all(const HilbertSequence& h, const std::vector<Property>& props) {
  std::vector<PropertyReport> out;
  for (Property p : props) out.push_back(check_property(p, h));
  return out;
}

inline std::vector<Property> default_properties(const HilbertSequence& h) {
  if (h[0] == 1) return {std::begin(kAllProperties), std::end(kAllProperties)};
  return {Property::LogConcave, Property::Unimodal, Property::Flawless};
}

inline std::string report_text(const PropertyReport& r) {
  std::string s = std::string(to_string(r.property)) + ": ";
  if (r.holds) return s + "holds";
  s += "fails at degrees ";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) s += (i ? ", " : "") + std::to_string(r.witnesses[i]);
  if (!r.detail.empty()) s += " (" + r.detail + ")";
  return s;
}

struct Output {
  bool json_format = true;
  std::ostream& out;

  void sequence_with_reports(json doc, const HilbertSequence& h, const std::vector<PropertyReport>& reports,
                             const std::string& heading = {}) {
    if (json_format) {
      doc["sequence"] = to_json(h);
      json reps = json::array();
      for (const auto& r : reports) reps.push_back(to_json(r));
      doc["reports"] = reps;
      out << doc.dump(2) << '\n';
      return;
    }
    if (!heading.empty()) out << heading << '\n';
    out << "h = " << h.to_string() << '\n';
    for (const auto& r : reports) out << "  " << report_text(r) << '\n';
  }
};

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("OSEQ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "OSEQ_SEED must be an unsigned integer");
    }
  }
  return kDefaultSeed;
}

inline int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pure O-sequences, level Hilbert functions and log-concavity"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.fallthrough();

  // compute
  auto* compute = app.add_subcommand("compute", "Pure O-sequence of a generator set, with all property checks");
  std::string gens_text, gens_json;
  bool strict = false, bruteforce = false;
  std::size_t declared_r = 0;
  auto* gens_opt = compute->add_option("--gens", gens_text, "Generators, e.g. \"x1*x2*x3, x1*x3^2\"");
  compute->add_option("--gens-json", gens_json, "Generators as a JSON array of exponent arrays")->excludes(gens_opt);
  compute->add_option("--r", declared_r, "Codimension (default: largest variable index used)");
  compute->add_flag("--strict", strict, "Reject variables that divide no generator");
  compute->add_flag("--bruteforce", bruteforce, "Use divisor enumeration instead of inclusion-exclusion");

  // check
  auto* check = app.add_subcommand("check", "Check properties of a raw sequence");
  std::string seq_text, props_text;
  check->add_option("--sequence", seq_text, "Comma-separated nonnegative integers")->required();
  check->add_option("--properties", props_text,
                    "Comma-separated: o-sequence, log-concave, unimodal, flawless, differentiable");

  // family
  auto* family = app.add_subcommand("family", "Build one of the explicit families");
  std::string family_name;
  std::uint64_t fr = 4, ft = 2, fe = 0;
  family->add_option("--name", family_name, "thm25-codim3 | thm25-codim4t2 | thm24-gorenstein | thm32-r3t4 | thm32-general")
      ->required();
  family->add_option("--r", fr, "Codimension");
  family->add_option("--t", ft, "Type");
  family->add_option("--e", fe, "Socle degree");

  // gf
  auto* gf = app.add_subcommand("gf", "Type-1 sequence from the product of (1 + q + ... + q^a)");
  std::string gf_exps, gf_mono;
  std::size_t appends = 0;
  auto* gf_e = gf->add_option("--exponents", gf_exps, "Comma-separated exponents, e.g. 4,4,4");
  gf->add_option("--monomial", gf_mono, "Monomial, e.g. x1^4*x2^4*x3^4")->excludes(gf_e);
  gf->add_option("--append-variable", appends, "Multiply by that many new variables");

  // apolarity
  auto* apol = app.add_subcommand("apolarity", "Contraction-rank Hilbert functions over a prime field");
  std::size_t ar = 3, trials = 20, additions = 1;
  unsigned ae = 4;
  std::optional<std::uint64_t> am;
  std::uint64_t prime = kDefaultPrime;
  std::optional<std::uint64_t> seed;
  std::string forms_file;
  bool exact = false;
  apol->add_option("--r", ar, "Number of variables");
  apol->add_option("--e", ae, "Degree");
  apol->add_option("--m", am, "Number of general powers per sum");
  apol->add_option("--trials", trials, "Independent seeded trials");
  apol->add_option("--prime", prime, "Field characteristic");
  apol->add_option("--seed", seed, "RNG seed (default: $OSEQ_SEED or built-in)");
  apol->add_option("--forms", forms_file, "JSON file with base forms");
  apol->add_option("--additions", additions, "Number of power sums adjoined to the base forms");
  apol->add_flag("--exact", exact, "Rank over the rationals instead of the prime field");

  // search
  auto* search = app.add_subcommand("search", "Exhaustive symmetry-reduced search");
  SearchJob job;
  std::string search_props = "log-concave", out_file;
  bool resume = false, include_failures = true;
  search->add_option("--r", job.r)->required();
  search->add_option("--t", job.t)->required();
  search->add_option("--e-min", job.e_min)->required();
  search->add_option("--e-max", job.e_max)->required();
  search->add_option("--properties", search_props, "Properties to screen");
  search->add_option("--jobs", job.workers, "Worker threads");
  search->add_option("--budget", job.budget, "Maximum (estimated) canonical generator sets per degree");
  search->add_option("--out", out_file, "JSON-lines output, one failure per line plus shard markers");
  search->add_flag("--resume", resume, "Reuse completed shards found in --out");
  search->add_flag("!--no-failures", include_failures, "Omit the failure list from the summary on stdout");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Re-derive every published value this library reproduces");
  bool skip_random = false, skip_large = false;
  verify->add_flag("--skip-random", skip_random, "Deterministic checks only");
  verify->add_flag("--skip-large-search", skip_large, "Skip the exhaustive (3,4,12) search");
  verify->add_option("--prime", prime, "Field characteristic for the Monte Carlo checks");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--trials", trials, "Trials per Monte Carlo check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Output o{format == "json", out};
  try {
    if (*compute) {
      auto gens = !gens_json.empty() ? generators_from_json(json::parse(gens_json), strict)
                                     : parse_generators(gens_text, declared_r, strict);
      auto h = bruteforce ? pure_o_sequence_bruteforce(gens) : pure_o_sequence(gens);
      json doc = {{"r", gens.r()}, {"t", gens.t()}, {"e", gens.e()}, {"generators", to_json(gens)}};
      o.sequence_with_reports(doc, h, check_all(h, default_properties(h)), "generators " + gens.to_string());
      return kOk;
    }
    if (*check) {
      auto h = parse_sequence(seq_text);
      auto props = props_text.empty() ? default_properties(h) : parse_properties(props_text);
      json doc = json::object();
      if (h.has_interior_zero()) doc["note"] = "interior zero: not the h-vector of a pure O-sequence";
      o.sequence_with_reports(doc, h, check_all(h, props));
      return kOk;
    }
    if (*family) {
      auto name = parse_family_name(family_name);
      if (!name) throw Error(ErrorCode::Parse, "unknown family '" + family_name + "'");
      auto result = build_family({*name, {fr, ft, fe}});
      o.sequence_with_reports(to_json(result), result.sequence,
                              check_all(result.sequence, default_properties(result.sequence)),
                              std::string(to_string(*name)) +
                                  (result.generators ? " generators " + result.generators->to_string() : ""));
      return kOk;
    }
    if (*gf) {
      std::vector<unsigned> exps;
      if (!gf_mono.empty()) {
        exps = parse_generators(gf_mono).monomials().front().exponents;
      } else {
        for (const auto& item : split_list(gf_exps)) exps.push_back(detail::parse_uint(item, gf_exps));
      }
      if (std::none_of(exps.begin(), exps.end(), [](unsigned a) { return a > 0; }))
        throw Error(ErrorCode::Malformed, "at least one positive exponent is required");
      auto h = type1_sequence(exps);
      for (std::size_t k = 0; k < appends; ++k) h = append_variable(h);
      o.sequence_with_reports({{"exponents", exps}, {"appended_variables", appends}}, h,
                              check_all(h, default_properties(h)));
      return kOk;
    }
    if (*apol) {
      FieldConfig cfg{prime, seed.value_or(default_seed())};
      auto emit = [&](const VerificationReport& rep) {
        if (o.json_format) out << to_json(rep).dump(2) << '\n';
        else
          out << rep.label << ": expected h = " << rep.expected.to_string() << ", " << rep.agreements << "/"
              << rep.trials.size() << " trials agree, " << rep.exceedances << " exceed -> "
              << (rep.passed ? "PASS" : "FAIL") << '\n';
        return rep.passed ? kOk : kVerificationFailed;
      };
      auto run = [&](const auto& field) -> int {
        if (forms_file.empty()) {
          if (!am) throw Error(ErrorCode::Parse, "--m is required without --forms");
          return emit(verify_lemma21(field, ar, ae, *am, trials, cfg));
        }
        std::ifstream in(forms_file);
        if (!in) throw Error(ErrorCode::Parse, "cannot open " + forms_file);
        json doc;
        try {
          doc = json::parse(in);
        } catch (const json::exception& ex) {
          throw Error(ErrorCode::Parse, ex.what());
        }
        auto forms = forms_from_json(field, doc);
        if (am) return emit(verify_prop22(field, forms, *am, trials, cfg, additions));
        auto h = dual_hilbert(field, forms);
        o.sequence_with_reports({{"forms", forms.size()}}, h, check_all(h, default_properties(h)));
        return kOk;
      };
      if (!exact) return run(PrimeField(prime));
      if (!is_prime(prime) || prime >= (std::uint64_t{1} << 32))
        throw Error(ErrorCode::InvalidPrime, "coefficients are drawn below --prime, which must be a prime < 2^32");
      return run(RationalField{});
    }
    if (*search) {
      job.properties = parse_properties(search_props);
      std::map<ShardKey, ShardRecord> completed;
      if (resume && !out_file.empty()) {
        std::ifstream in(out_file);
        std::map<ShardKey, std::vector<SearchFailure>> pending;
        for (std::string line; std::getline(in, line);) {
          if (line.empty()) continue;
          auto j = json::parse(line);
          ShardKey key{j.at("e").get<unsigned>(), j.at("shard").get<std::size_t>()};
          if (j.contains("shard_complete")) {
            ShardRecord rec{key.first, key.second, j.at("canonical_sets").get<std::size_t>(), std::move(pending[key]), {}};
            for (const auto& s : j.at("sequences")) rec.sequences.push_back(sequence_from_json(s));
            completed.emplace(key, std::move(rec));
          } else {
            pending[key].push_back(failure_from_json(j));
          }
        }
      }
      std::ofstream sink_file;
      if (!out_file.empty()) {
        sink_file.open(out_file, std::ios::trunc);
        if (!sink_file) throw Error(ErrorCode::Parse, "cannot write " + out_file);
      }
      ShardSink sink;
      if (sink_file.is_open())
        sink = [&](const ShardRecord& rec) {
          for (const auto& f : rec.failures) {
            auto j = to_json(f);
            j["e"] = rec.e;
            j["shard"] = rec.shard;
            sink_file << j.dump() << '\n';
          }
          sink_file << shard_marker_to_json(rec).dump() << '\n';
          sink_file.flush();
        };
      auto report = run_search(job, sink, completed);
      if (o.json_format) {
        auto doc = to_json(report);
        if (!include_failures) doc.erase("failures");
        out << doc.dump(2) << '\n';
      } else {
        out << "r=" << job.r << " t=" << job.t << " e=" << job.e_min << ".." << job.e_max << ": "
            << report.total_canonical_sets << " canonical sets, " << report.sequences_distinct
            << " distinct sequences, " << report.failures.size() << " failures\n";
        for (const auto& row : report.summary) {
          out << "  e=" << row.e << " sets=" << row.canonical_sets << " distinct=" << row.distinct_sequences
              << " gaps=" << row.interval_gaps;
          for (const auto& [p, n] : row.failures_by_property) out << ' ' << to_string(p) << '=' << n;
          out << '\n';
        }
        if (include_failures)
          for (const auto& f : report.failures) out << "  " << f.generators.to_string() << " h = " << f.sequence.to_string() << '\n';
      }
      return kOk;
    }
    if (*verify) {
      // the ledger reads best as text unless JSON was asked for explicitly
      if (app.get_option("--format")->count() == 0) o.json_format = false;
      ReferenceOptions opt;
      opt.skip_random = skip_random;
      opt.include_large_search = !skip_large;
      opt.trials = trials;
      opt.field = {prime, seed.value_or(default_seed())};
      PrimeField validate(prime);
      (void)validate;
      auto lines = run_reference_checks(opt);
      bool all = true;
      json doc = json::array();
      for (const auto& l : lines) {
        all = all && l.passed;
        if (o.json_format)
          doc.push_back({{"location", l.location}, {"check", l.description}, {"randomized", l.randomized},
                         {"passed", l.passed}, {"detail", l.detail}});
        else
          out << (l.passed ? "PASS " : "FAIL ") << '[' << l.location << "] " << l.description
              << (l.detail.empty() ? "" : "  -- " + l.detail) << '\n';
      }
      if (o.json_format) out << doc.dump(2) << '\n';
      return all ? kOk : kVerificationFailed;
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_code_for(ex.code());
  } catch (const json::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace oseq::cli

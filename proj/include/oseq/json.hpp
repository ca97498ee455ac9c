#pragma once

// JSON encodings. Integers that belong to sequences or coefficients are
// written as decimal strings so that arbitrary precision survives.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oseq/apolarity.hpp"
#include "oseq/core.hpp"
#include "oseq/level.hpp"
#include "oseq/monomial.hpp"
#include "oseq/report.hpp"
#include "oseq/search.hpp"

namespace oseq {

using nlohmann::json;

inline BigInt parse_bigint(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() || s.size() > 100000 ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::Parse, "'" + s + "' is not a decimal integer");
  return BigInt(s);
}

inline BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  throw Error(ErrorCode::Parse, "expected an integer or decimal string");
}

inline json to_json(const HilbertSequence& s) {
  json out = json::array();
  for (const auto& v : s) out.push_back(v.str());
  return out;
}

inline HilbertSequence sequence_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "sequence must be a JSON array");
  std::vector<BigInt> v;
  for (const auto& x : j) v.push_back(bigint_from_json(x));
  return HilbertSequence::raw(std::move(v));
}

inline json to_json(const PropertyReport& r) {
  return {{"property", std::string(to_string(r.property))},
          {"holds", r.holds},
          {"witnesses", r.witnesses},
          {"detail", r.detail}};
}

inline PropertyReport report_from_json(const json& j) {
  auto p = parse_property(j.at("property").get<std::string>());
  if (!p) throw Error(ErrorCode::Parse, "unknown property in report");
  return PropertyReport::from_witnesses(*p, j.at("witnesses").get<std::vector<std::size_t>>(),
                                        j.value("detail", std::string{}));
}

inline json to_json(const Monomial& m) { return m.exponents; }

inline json to_json(const GeneratorSet& g) {
  json out = json::array();
  for (const auto& m : g.monomials()) out.push_back(to_json(m));
  return out;
}

/// Accepts a JSON array of exponent arrays: [[4,4,2],[1,1,8]].
inline GeneratorSet generators_from_json(const json& j, bool strict = false) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidGenerators, "expected a nonempty array of exponent arrays");
  std::vector<Monomial> ms;
  for (const auto& m : j) {
    if (!m.is_array()) throw Error(ErrorCode::Parse, "each generator must be an array of exponents");
    std::vector<unsigned> exps;
    for (const auto& a : m) {
      if (!a.is_number_unsigned()) throw Error(ErrorCode::Parse, "exponents must be nonnegative integers");
      exps.push_back(a.get<unsigned>());
    }
    ms.emplace_back(std::move(exps));
  }
  const std::size_t r = ms.front().num_vars();
  return GeneratorSet(r, std::move(ms), strict);
}

inline json to_json(const FamilyResult& f) {
  json out = {{"name", std::string(to_string(f.spec.name))},
              {"r", f.spec.params.r},
              {"t", f.spec.params.t},
              {"e", f.spec.params.e},
              {"sequence", to_json(f.sequence)}};
  if (f.generators) out["generators"] = to_json(*f.generators);
  return out;
}

template <class Field>
json to_json(const Field& field, const Form<Field>& f) {
  json terms = json::array();
  for (const auto& [mono, c] : f.terms) terms.push_back({{"exps", mono.exponents}, {"coeff", field.to_string(c)}});
  return {{"r", f.r}, {"degree", f.degree}, {"terms", terms}};
}

/// {"r": 3, "degree": 4, "terms": [{"exps": [1,1,2], "coeff": "1"}, ...]}
template <class Field>
Form<Field> form_from_json(const Field& field, const json& j) {
  const auto r = j.at("r").get<std::size_t>();
  const auto degree = j.at("degree").get<unsigned>();
  std::vector<std::pair<Monomial, BigInt>> terms;
  for (const auto& t : j.at("terms")) {
    Monomial m(t.at("exps").get<std::vector<unsigned>>());
    terms.emplace_back(std::move(m), bigint_from_json(t.at("coeff")));
  }
  return make_form(field, r, degree, terms);
}

/// A single form object, an array of them, or {"forms": [...]}.
template <class Field>
std::vector<Form<Field>> forms_from_json(const Field& field, const json& j) {
  std::vector<Form<Field>> out;
  const json& list = j.is_object() && j.contains("forms") ? j.at("forms") : j;
  if (list.is_array())
    for (const auto& f : list) out.push_back(form_from_json(field, f));
  else
    out.push_back(form_from_json(field, list));
  return out;
}

inline json to_json(const VerificationReport& v) {
  json trials = json::array();
  for (const auto& t : v.trials) {
    json observed = json::array();
    for (const auto& x : t.observed) observed.push_back(x.str());
    trials.push_back({{"seed", std::to_string(t.seed)}, {"observed", observed}, {"agrees", t.agrees}, {"exceeds", t.exceeds}});
  }
  return {{"label", v.label},
          {"expected", to_json(v.expected)},
          {"agreements", v.agreements},
          {"exceedances", v.exceedances},
          {"passed", v.passed},
          {"trials", trials}};
}

inline json to_json(const IntervalGap& g) {
  return {{"degree", g.degree}, {"lower", to_json(g.lower)}, {"alpha", g.alpha.str()}, {"beta", g.beta.str()}};
}

/// One JSON-lines record per failure.
inline json to_json(const SearchFailure& f) {
  json failed = json::array();
  std::vector<std::size_t> witnesses;
  json by_property = json::object();
  for (const auto& rep : f.failed) {
    failed.push_back(std::string(to_string(rep.property)));
    witnesses.insert(witnesses.end(), rep.witnesses.begin(), rep.witnesses.end());
    by_property[std::string(to_string(rep.property))] = rep.witnesses;
  }
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  return {{"generators", to_json(f.generators)},
          {"sequence", to_json(f.sequence)},
          {"failed", failed},
          {"witnesses", witnesses},
          {"witnesses_by_property", by_property}};
}

inline SearchFailure failure_from_json(const json& j) {
  auto gens = generators_from_json(j.at("generators"));
  auto seq = sequence_from_json(j.at("sequence"));
  std::vector<PropertyReport> failed;
  for (const auto& [name, w] : j.at("witnesses_by_property").items()) {
    auto p = parse_property(name);
    if (!p) throw Error(ErrorCode::Parse, "unknown property " + name);
    failed.push_back(PropertyReport::from_witnesses(*p, w.get<std::vector<std::size_t>>()));
  }
  // keep the order of "failed"
  std::vector<PropertyReport> ordered;
  for (const auto& name : j.at("failed"))
    for (const auto& rep : failed)
      if (to_string(rep.property) == name.get<std::string>()) ordered.push_back(rep);
  return {std::move(gens), std::move(seq), std::move(ordered)};
}

inline json to_json(const SearchReport& r, bool include_runtime = true) {
  json props = json::array();
  for (auto p : r.job.properties) props.push_back(std::string(to_string(p)));
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  json gaps = json::array();
  for (const auto& g : r.interval_gaps) gaps.push_back(to_json(g));
  json summary = json::array();
  for (const auto& row : r.summary) {
    json by = json::object();
    for (const auto& [p, n] : row.failures_by_property) by[std::string(to_string(p))] = n;
    summary.push_back({{"r", row.r},
                       {"t", row.t},
                       {"e", row.e},
                       {"canonical_sets", row.canonical_sets},
                       {"distinct_sequences", row.distinct_sequences},
                       {"failures", by},
                       {"interval_gaps", row.interval_gaps}});
  }
  json out = {{"job",
               {{"r", r.job.r},
                {"t", r.job.t},
                {"e_min", r.job.e_min},
                {"e_max", r.job.e_max},
                {"properties", props},
                {"budget", r.job.budget}}},
              {"total_canonical_sets", r.total_canonical_sets},
              {"sequences_distinct", r.sequences_distinct},
              {"failures", failures},
              {"interval_gaps", gaps},
              {"summary", summary}};
  if (include_runtime) {
    out["runtime_seconds"] = r.runtime_seconds;
    out["workers"] = r.job.workers;
  }
  return out;
}

/// Shard completion record; failures precede it as their own lines.
inline json shard_marker_to_json(const ShardRecord& rec) {
  json seqs = json::array();
  for (const auto& s : rec.sequences) seqs.push_back(to_json(s));
  return {{"shard_complete", true},
          {"e", rec.e},
          {"shard", rec.shard},
          {"canonical_sets", rec.canonical_sets},
          {"sequences", seqs}};
}

}  // namespace oseq

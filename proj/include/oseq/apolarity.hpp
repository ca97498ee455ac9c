#pragma once

// Inverse systems by explicit linear algebra. Forms in the divided-power
// ring k[y_1..y_r] are acted on by monomials x^b through contraction,
// x^b o y^[a] = y^[a-b] (zero unless b <= a), and Hilbert functions are read
// off as ranks of contraction spaces.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oseq/core.hpp"
#include "oseq/level.hpp"
#include "oseq/monomial.hpp"

namespace oseq {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Integers modulo a prime p < 2^32 (so products fit in 64 bits).
struct PrimeField {
  using Element = std::uint64_t;
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (prime >= (std::uint64_t{1} << 32) || !is_prime(prime))
      throw Error(ErrorCode::InvalidPrime, std::to_string(prime) + " is not a prime below 2^32");
  }

  std::uint64_t characteristic() const { return p; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const { return (a + b) % p; }
  Element sub(Element a, Element b) const { return (a + p - b) % p; }
  Element mul(Element a, Element b) const { return a * b % p; }
  Element inv(Element a) const {
    Element result = 1, base = a, exp = p - 2;
    while (exp) {
      if (exp & 1) result = mul(result, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return result;
  }
  Element from_int(const BigInt& v) const {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<Element>(r);
  }
  std::string to_string(Element a) const { return std::to_string(a); }
};

/// The rationals, for bit-certain ranks at small sizes.
struct RationalField {
  using Element = boost::multiprecision::cpp_rational;

  std::uint64_t characteristic() const { return 0; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return a == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return 1 / a; }
  Element from_int(const BigInt& v) const { return Element(v); }
  std::string to_string(const Element& a) const { return a.str(); }
};

inline constexpr std::uint64_t kDefaultPrime = 1000003;
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct FieldConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;
};

/// Homogeneous form of a fixed degree in the divided-power ring. Zero
/// coefficients are never stored.
template <class Field>
struct Form {
  std::size_t r = 1;
  unsigned degree = 0;
  std::map<Monomial, typename Field::Element> terms;

  bool is_zero() const { return terms.empty(); }
};

using PolyOverPrimeField = Form<PrimeField>;

template <class Field>
Form<Field> make_form(const Field& field, std::size_t r, unsigned degree,
                      const std::vector<std::pair<Monomial, BigInt>>& terms) {
  Form<Field> f{r, degree, {}};
  for (const auto& [mono, coeff] : terms) {
    if (mono.num_vars() != r || mono.degree() != degree)
      throw Error(ErrorCode::Malformed, "term " + mono.to_string() + " does not have degree " + std::to_string(degree) +
                                            " in " + std::to_string(r) + " variables");
    auto& slot = f.terms.try_emplace(mono, field.zero()).first->second;
    slot = field.add(slot, field.from_int(coeff));
  }
  std::erase_if(f.terms, [&](const auto& kv) { return field.is_zero(kv.second); });
  return f;
}

template <class Field>
Form<Field> monomial_form(const Field& field, const Monomial& m) {
  return make_form(field, m.num_vars(), m.degree(), {{m, BigInt(1)}});
}

template <class Field>
Form<Field> add_forms(const Field& field, const Form<Field>& a, const Form<Field>& b) {
  if (a.r != b.r || a.degree != b.degree) throw Error(ErrorCode::Malformed, "adding forms of different shape");
  Form<Field> out = a;
  for (const auto& [mono, c] : b.terms) {
    auto& slot = out.terms.try_emplace(mono, field.zero()).first->second;
    slot = field.add(slot, c);
  }
  std::erase_if(out.terms, [&](const auto& kv) { return field.is_zero(kv.second); });
  return out;
}

/// x^b o f. The result has degree deg f - deg b; an operator of larger degree
/// annihilates f.
template <class Field>
Form<Field> contract(const Monomial& op, const Form<Field>& f) {
  if (op.num_vars() != f.r) throw Error(ErrorCode::Malformed, "operator has wrong number of variables");
  const unsigned d = op.degree();
  if (d > f.degree) return Form<Field>{f.r, 0, {}};
  Form<Field> out{f.r, f.degree - d, {}};
  for (const auto& [mono, c] : f.terms) {
    if (!op.divides(mono)) continue;
    Monomial rest = mono;
    for (std::size_t k = 0; k < rest.exponents.size(); ++k) rest.exponents[k] -= op.exponents[k];
    out.terms.emplace(std::move(rest), c);
  }
  return out;
}

/// Rank by Gaussian elimination, pivoting on the first nonzero entry.
template <class Field>
std::size_t matrix_rank(const Field& field, std::vector<std::vector<typename Field::Element>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && field.is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto inv = field.inv(rows[rank][c]);
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] = field.mul(rows[rank][k], inv);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (field.is_zero(rows[i][c])) continue;
      const auto factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = field.sub(rows[i][k], field.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

/// Ranks of the contraction spaces, degree by degree. Entry i is the
/// dimension of the span of all x^b o f with deg b = e - i.
template <class Field>
std::vector<BigInt> dual_ranks(const Field& field, const std::vector<Form<Field>>& forms) {
  if (forms.empty()) throw Error(ErrorCode::Malformed, "no forms given");
  const std::size_t r = forms.front().r;
  const unsigned e = forms.front().degree;
  for (const auto& f : forms)
    if (f.r != r || f.degree != e) throw Error(ErrorCode::Malformed, "forms must share variables and degree");
  if (field.characteristic() != 0 && field.characteristic() <= e)
    throw Error(ErrorCode::PrimeTooSmall, "prime " + std::to_string(field.characteristic()) +
                                              " must exceed the socle degree " + std::to_string(e));
  std::vector<BigInt> h(e + 1);
  for (unsigned i = 0; i <= e; ++i) {
    const auto columns = monomials_of_degree(r, i);
    std::map<Monomial, std::size_t> column_of;
    for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);
    std::vector<std::vector<typename Field::Element>> rows;
    for (const auto& op : monomials_of_degree(r, e - i)) {
      for (const auto& f : forms) {
        auto g = contract(op, f);
        if (g.is_zero()) continue;
        std::vector<typename Field::Element> row(columns.size(), field.zero());
        for (const auto& [mono, c] : g.terms) row[column_of.at(mono)] = c;
        rows.push_back(std::move(row));
      }
    }
    h[i] = matrix_rank(field, std::move(rows));
  }
  return h;
}

/// Hilbert function of the level algebra dual to the module generated by forms.
template <class Field>
HilbertSequence dual_hilbert(const Field& field, const std::vector<Form<Field>>& forms) {
  return HilbertSequence::algebra(dual_ranks(field, forms));
}

inline HilbertSequence dual_hilbert(const std::vector<PolyOverPrimeField>& forms, const FieldConfig& cfg) {
  return dual_hilbert(PrimeField(cfg.prime), forms);
}

// ---- randomness -----------------------------------------------------------

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seed for trial k, independent of how trials are scheduled.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t k) { return splitmix64(seed ^ splitmix64(k + 1)); }

/// Uniform in [0, n) by rejection; unlike std::uniform_int_distribution this
/// is identical on every standard library.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % n + 1) % n;
  std::uint64_t x;
  do x = rng();
  while (x > limit);
  return x % n;
}

/// L^[e] = sum over |a| = e of c^a y^[a] for L = sum c_k y_k; contracting it by
/// x^b gives c^b L^[e-|b|], the divided-power analogue of differentiating L^e.
template <class Field>
Form<Field> linear_form_power(const Field& field, const std::vector<typename Field::Element>& coeffs, unsigned e) {
  Form<Field> f{coeffs.size(), e, {}};
  for (auto& mono : monomials_of_degree(coeffs.size(), e)) {
    auto c = field.one();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      for (unsigned j = 0; j < mono.exponents[k]; ++j) c = field.mul(c, coeffs[k]);
    if (!field.is_zero(c)) f.terms.emplace(std::move(mono), c);
  }
  return f;
}

/// Sum of the e-th (divided) powers of m random linear forms. Coefficients
/// are drawn uniformly from [0, coefficient_range) with the all-zero vector
/// rejected, then mapped into the field.
template <class Field>
Form<Field> random_power_sum(const Field& field, std::size_t r, unsigned e, std::uint64_t m, Rng& rng,
                             std::uint64_t coefficient_range) {
  if (r < 1) throw Error(ErrorCode::OutOfRange, "need at least one variable");
  if (m < 1) throw Error(ErrorCode::OutOfRange, "need at least one summand");
  Form<Field> sum{r, e, {}};
  for (std::uint64_t s = 0; s < m; ++s) {
    std::vector<std::uint64_t> raw(r, 0);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : raw) {
        c = uniform_below(rng, coefficient_range);
        nonzero = nonzero || c != 0;
      }
    }
    std::vector<typename Field::Element> coeffs;
    for (auto c : raw) coeffs.push_back(field.from_int(BigInt(c)));
    sum = add_forms(field, sum, linear_form_power(field, coeffs, e));
  }
  return sum;
}

inline PolyOverPrimeField random_power_sum(std::size_t r, unsigned e, std::uint64_t m, const FieldConfig& cfg) {
  PrimeField field(cfg.prime);
  Rng rng(cfg.seed);
  return random_power_sum(field, r, e, m, rng, cfg.prime);
}

// ---- Monte Carlo verification ---------------------------------------------

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::vector<BigInt> observed;
  bool agrees = false;
  bool exceeds = false;
};

/// PASS when at least one trial reproduces the formula and no trial exceeds
/// it anywhere. An exceeding trial contradicts a proven upper bound and is an
/// implementation bug, not a genericity failure.
struct VerificationReport {
  std::string label;
  HilbertSequence expected;
  std::vector<TrialOutcome> trials;
  std::size_t agreements = 0;
  std::size_t exceedances = 0;
  bool passed = false;

  void add(TrialOutcome outcome) {
    agreements += outcome.agrees;
    exceedances += outcome.exceeds;
    trials.push_back(std::move(outcome));
    passed = agreements > 0 && exceedances == 0;
  }
};

namespace detail {

inline TrialOutcome compare_to_formula(std::uint64_t seed, std::vector<BigInt> observed, const HilbertSequence& expected) {
  TrialOutcome out;
  out.seed = seed;
  out.agrees = observed.size() == expected.size();
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const BigInt bound = i < expected.size() ? expected[i] : BigInt(0);
    if (observed[i] > bound) out.exceeds = true;
    if (observed[i] != bound) out.agrees = false;
  }
  out.observed = std::move(observed);
  return out;
}

}  // namespace detail

/// Monte Carlo check of h(m) = min{m, dim R_j, dim R_{e-j}} for a sum of m
/// general e-th powers, over `trials` independently seeded draws.
template <class Field>
VerificationReport verify_lemma21(const Field& field, std::size_t r, unsigned e, std::uint64_t m, std::size_t trials,
                                  const FieldConfig& cfg) {
  if (field.characteristic() != 0 && field.characteristic() <= e)
    throw Error(ErrorCode::PrimeTooSmall, "prime must exceed the socle degree");
  VerificationReport report;
  report.label = "power sum r=" + std::to_string(r) + " e=" + std::to_string(e) + " m=" + std::to_string(m);
  report.expected = compressed_gorenstein(r, e, m);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto seed = trial_seed(cfg.seed, k);
    Rng rng(seed);
    auto f = random_power_sum(field, r, e, m, rng, cfg.prime);
    report.add(detail::compare_to_formula(seed, dual_ranks(field, std::vector{f}), report.expected));
  }
  return report;
}

inline VerificationReport verify_lemma21(std::size_t r, unsigned e, std::uint64_t m, std::size_t trials,
                                         const FieldConfig& cfg) {
  return verify_lemma21(PrimeField(cfg.prime), r, e, m, trials, cfg);
}

/// Adjoins `additions` independent sums of m general e-th powers to the base
/// module and compares against add_general_powers applied as many times to
/// the base module's own Hilbert function.
template <class Field>
VerificationReport verify_prop22(const Field& field, const std::vector<Form<Field>>& base_forms, std::uint64_t m,
                                 std::size_t trials, const FieldConfig& cfg, std::size_t additions = 1) {
  auto base = dual_hilbert(field, base_forms);
  const std::size_t r = base_forms.front().r;
  const unsigned e = base_forms.front().degree;
  HilbertSequence expected = base;
  for (std::size_t k = 0; k < additions; ++k) expected = add_general_powers(expected, r, m);
  VerificationReport report;
  report.label = "base h=" + base.to_string() + " plus " + std::to_string(additions) + "x" + std::to_string(m) +
                 " powers";
  report.expected = expected;
  for (std::size_t k = 0; k < trials; ++k) {
    const auto seed = trial_seed(cfg.seed, k);
    Rng rng(seed);
    auto forms = base_forms;
    for (std::size_t a = 0; a < additions; ++a) forms.push_back(random_power_sum(field, r, e, m, rng, cfg.prime));
    report.add(detail::compare_to_formula(seed, dual_ranks(field, forms), expected));
  }
  return report;
}

inline VerificationReport verify_prop22(const std::vector<PolyOverPrimeField>& base_forms, std::uint64_t m,
                                        std::size_t trials, const FieldConfig& cfg, std::size_t additions = 1) {
  return verify_prop22(PrimeField(cfg.prime), base_forms, m, trials, cfg, additions);
}

}  // namespace oseq

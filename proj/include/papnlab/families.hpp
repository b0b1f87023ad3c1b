#pragma once

// Monomial 0-APN tests and the "never 0-APN" family criteria.
//
// Every verdict pairs a prediction taken from a family criterion with an
// observation from a direct Rodier scan at x0 = 0. For the binomial criteria
// the verdict also records whether the nondegeneracy step of the argument
// holds: some alpha outside {0,1} with h_a(alpha) h_b(alpha) != 0, where
// h_m(x) = 1 + x^m + (1 + x)^m.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "papnlab/differential.hpp"
#include "papnlab/gf2n.hpp"
#include "papnlab/vbf.hpp"

namespace papnlab {

struct FamilyVerdict {
  std::string family;
  unsigned n = 0;
  std::vector<std::pair<std::string, std::uint64_t>> params;  // in declaration order
  /// Predicted 0-APN status; nullopt when the criterion's hypotheses fail.
  std::optional<bool> predicted;
  bool observed = false;  // 0-APN by direct scan
  /// First off-curve pair through 0 found by the scan.
  std::optional<RodierWitness> witness;
  /// Pair produced by the explicit construction, re-verified against F.
  std::optional<RodierWitness> constructed;
  /// Binomial families only: the nondegeneracy step holds.
  std::optional<bool> nondegenerate;

  bool agrees() const { return !predicted || *predicted == observed; }
};

/// First off-curve (u, v) with F(0) + F(u) + F(v) + F(u + v) = 0.
inline std::optional<RodierWitness> not0apn_witness_search(const VBF& f) {
  return find_rodier_violation(f.table(), 0);
}

/// True iff (u, v) is off the curve through 0 and the quadruple sum vanishes.
inline bool is_zero_rodier_witness(const VBF& f, RodierWitness w) {
  const auto t = f.table();
  if (w.u == 0 || w.v == 0 || w.u == w.v) return false;
  return (t[0] ^ t[w.u] ^ t[w.v] ^ t[w.u ^ w.v]) == 0;
}

namespace detail {

inline std::uint64_t gcd_pow2m1(std::uint64_t e, unsigned n) { return std::gcd(e, (std::uint64_t{1} << n) - 1); }

inline FamilyVerdict observe(std::string family, const VBF& f,
                             std::vector<std::pair<std::string, std::uint64_t>> params) {
  FamilyVerdict v;
  v.family = std::move(family);
  v.n = f.n();
  v.params = std::move(params);
  v.witness = not0apn_witness_search(f);
  v.observed = !v.witness.has_value();
  return v;
}

/// Keeps a constructed pair only if it really is a witness.
inline void attach_construction(FamilyVerdict& v, const VBF& f, std::optional<RodierWitness> w) {
  if (w && is_zero_rodier_witness(f, *w)) v.constructed = w;
}

/// (1, alpha) for alpha generating GF(2^m), m = gcd > 1.
inline std::optional<RodierWitness> subfield_pair(const Field& fld, unsigned m) {
  if (m < 2) return std::nullopt;
  return RodierWitness{1, fld.subfield_generator(m)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Monomials

/// h_m(alpha) = 1 + alpha^m + (1 + alpha)^m.
inline elem monomial_defect(const Field& f, elem alpha, std::uint64_t m) {
  const auto e = static_cast<std::int64_t>(m);
  return 1 ^ f.pow(alpha, e) ^ f.pow(alpha ^ 1, e);
}

struct MonomialTest {
  bool zero_apn = false;
  std::optional<elem> alpha;  // first root of h_m outside {0, 1}
};

/// x^m is 0-APN iff h_m has no root outside {0, 1}.
inline MonomialTest monomial_0apn_direct(const Field& f, std::uint64_t m) {
  if (m < 1 || m > f.order()) throw std::invalid_argument("monomial exponent must lie in [1, 2^n - 1]");
  for (elem a = 2; a < f.size(); ++a)
    if (monomial_defect(f, a, m) == 0) return {false, a};
  return {true, std::nullopt};
}

/// binom(a, b) mod 2 (Lucas: the bits of b are a subset of those of a).
inline bool binom_odd(std::uint64_t a, std::uint64_t b) { return b <= a && (a & b) == b; }

/// h_m(x) = sum_{k=1}^{m-1} binom(m, k)_2 x^k in GF(2)[x].
inline BinaryPolynomial monomial_defect_poly(std::uint64_t m) {
  BinaryPolynomial p;
  for (std::uint64_t k = 1; k < m; ++k)
    if (binom_odd(m, k)) p.set(k, true);
  return p;
}

/// Minimal-polynomial criterion: x^m is 0-APN iff no P_{g^i} (i a nonzero
/// coset leader) divides h_m(x).
inline bool monomial_0apn_minpoly(const Field& f, std::uint64_t m) {
  if (m < 1 || m > f.order()) throw std::invalid_argument("monomial exponent must lie in [1, 2^n - 1]");
  const BinaryPolynomial h = monomial_defect_poly(m);
  if (h.is_zero()) return f.n() < 2;  // linear map: every alpha is a root
  for (const auto& c : cyclotomic_cosets(f.n()))
    if (poly_divides(minimal_polynomial(f, c.representative), h)) return false;
  return true;
}

/// The two alternative written forms of the divisibility test, evaluated at
/// the roots of P_{g^i} over nonzero coset leaders i:
///   indexed:  P_{g^i} | sum_k binom(mi, k)_2 x^(mi-k-1)   i.e. h_{mi}(x) / x
///   composed: P_{g^i} | sum_k binom(m, k)_2 x^(i(m-k)-1)  i.e. h_m(x^i) / x
/// Each returns the 0-APN verdict the form would give.
struct MinpolyForms {
  bool derived = false;
  bool indexed = false;
  bool composed = false;
};

inline MinpolyForms monomial_minpoly_forms(const Field& f, std::uint64_t m) {
  MinpolyForms r;
  r.derived = monomial_0apn_minpoly(f, m);
  bool indexed_divides = false;
  bool composed_divides = false;
  for (const auto& c : cyclotomic_cosets(f.n())) {
    const std::uint64_t i = c.representative;
    const elem root = f.exp_g(i);
    // x * Q(x) = 1 + x^e + (1 + x)^e, so Q(root) = 0 iff the right side vanishes.
    if (monomial_defect(f, root, reduce_exponent(m * i, f.n())) == 0) indexed_divides = true;
    const elem root_i = f.pow(root, static_cast<std::int64_t>(i));
    if ((1 ^ f.pow(root_i, static_cast<std::int64_t>(m)) ^ f.pow(root_i ^ 1, static_cast<std::int64_t>(m))) == 0)
      composed_divides = true;
  }
  r.indexed = !indexed_divides;
  r.composed = !composed_divides;
  return r;
}

/// x^(2^d + 1): 0-APN iff gcd(d, n) = 1.
inline FamilyVerdict gold_power_check(const FieldPtr& field, unsigned d) {
  const unsigned n = field->n();
  const std::uint64_t m = (std::uint64_t{1} << d) + 1;
  FamilyVerdict v = detail::observe("gold-power", from_any_power(field, m), {{"d", d}});
  v.predicted = std::gcd(d, n) == 1;
  return v;
}

/// x^(2^d - 1), d >= 1: 0-APN iff gcd(d - 1, n) = 1.
inline FamilyVerdict mersenne_power_check(const FieldPtr& field, unsigned d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  const unsigned n = field->n();
  const std::uint64_t m = (std::uint64_t{1} << d) - 1;
  FamilyVerdict v = detail::observe("mersenne-power", from_any_power(field, m), {{"d", d}});
  v.predicted = std::gcd(d - 1, n) == 1;
  return v;
}

/// Direct monomial verdict with the minimal-polynomial criterion as the prediction.
inline FamilyVerdict monomial_check(const FieldPtr& field, std::uint64_t m) {
  const std::uint64_t r = reduce_exponent(m, field->n());
  FamilyVerdict v = detail::observe("monomial", from_power(field, r), {{"m", m}});
  v.predicted = monomial_0apn_minpoly(*field, r);
  const MonomialTest t = monomial_0apn_direct(*field, r);
  if (t.alpha) detail::attach_construction(v, from_power(field, r), RodierWitness{1, *t.alpha});
  return v;
}

// ---------------------------------------------------------------------------
// Trace and linearized classes

enum class TraceVariant { F, G };

/// F = L(x^(2^d+1)) + Tr(x^3) or G = L(x^(2^(d+1)+2^d+1)) + Tr(x^3);
/// predicted not 0-APN when gcd(d, n) > 1.
inline VBF trace_class_function(const FieldPtr& field, unsigned d, TraceVariant variant, const LinearizedPoly& l) {
  const std::uint64_t m = variant == TraceVariant::F ? (std::uint64_t{1} << d) + 1
                                                      : (std::uint64_t{1} << (d + 1)) + (std::uint64_t{1} << d) + 1;
  return compose_linear(l, from_any_power(field, m)) + trace_of(from_any_power(field, 3));
}

inline FamilyVerdict trace_class_check(const FieldPtr& field, unsigned d, TraceVariant variant,
                                       const LinearizedPoly& l) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  const unsigned n = field->n();
  const VBF f = trace_class_function(field, d, variant, l);
  FamilyVerdict v = detail::observe(variant == TraceVariant::F ? "trace-f" : "trace-g", f, {{"d", d}});
  const unsigned g = std::gcd(d, n);
  if (g > 1) {
    v.predicted = false;
    detail::attach_construction(v, f, detail::subfield_pair(*field, g));
  }
  return v;
}

/// L(x^m) + Tr(x^3) for an arbitrary exponent m.
///
/// Two sufficient conditions for "not 0-APN" are reported side by side:
///   stated: some P_{g^i}, i a nonzero coset leader, divides
///           sum_{k=1}^{m-1} binom(m, k)_2 x^(i(m-k)-1), i.e. h_m(g^(i*i)) = 0;
///   root:   h_m has a root alpha outside {0, 1}, so (1, alpha) is a witness
///           because Tr(alpha + alpha^2) = 0.
/// The prediction follows the stated condition; the root condition is what
/// the witness construction actually needs.
struct TraceGeneralVerdict {
  FamilyVerdict verdict;
  bool stated_condition = false;
  bool root_condition = false;
  /// Coset leader i meeting the stated condition, if any.
  std::optional<std::uint64_t> stated_index;
};

inline bool trace_general_stated_condition(const Field& f, std::uint64_t m, std::uint64_t* index = nullptr) {
  for (const auto& c : cyclotomic_cosets(f.n())) {
    const std::uint64_t i = c.representative;
    const elem y = f.pow(f.exp_g(i), static_cast<std::int64_t>(i));
    if (monomial_defect(f, y, m) == 0) {
      if (index) *index = i;
      return true;
    }
  }
  return false;
}

inline TraceGeneralVerdict trace_general_check(const FieldPtr& field, std::uint64_t m, const LinearizedPoly& l) {
  const std::uint64_t r = reduce_exponent(m, field->n());
  if (r < 1) throw std::invalid_argument("monomial exponent must be positive");
  const VBF f = compose_linear(l, from_power(field, r)) + trace_of(from_any_power(field, 3));
  TraceGeneralVerdict out;
  out.verdict = detail::observe("trace-general", f, {{"m", m}});
  std::uint64_t i = 0;
  out.stated_condition = trace_general_stated_condition(*field, r, &i);
  if (out.stated_condition) {
    out.stated_index = i;
    out.verdict.predicted = false;
  }
  const MonomialTest t = monomial_0apn_direct(*field, r);
  out.root_condition = !t.zero_apn;
  if (t.alpha) detail::attach_construction(out.verdict, f, RodierWitness{1, *t.alpha});
  return out;
}

/// L1(x^(2^d+1)) + L2(x^(2^r+1)); predicted not 0-APN when gcd(d, r, n) > 1.
inline FamilyVerdict l1l2_class_check(const FieldPtr& field, unsigned d, unsigned r, const LinearizedPoly& l1,
                                      const LinearizedPoly& l2) {
  const unsigned n = field->n();
  const VBF f = compose_linear(l1, from_any_power(field, (std::uint64_t{1} << d) + 1)) +
                compose_linear(l2, from_any_power(field, (std::uint64_t{1} << r) + 1));
  FamilyVerdict v = detail::observe("l1l2", f, {{"d", d}, {"r", r}});
  const unsigned g = static_cast<unsigned>(gcd3(d, r, n));
  if (g > 1) {
    v.predicted = false;
    detail::attach_construction(v, f, detail::subfield_pair(*field, g));
  }
  return v;
}

/// x^(2^d+1) + Tr(x^(2^r+1)); predicted not 0-APN when gcd(d, n) > 1 and
/// gcd(2^r + 1, 2^n - 1) = 1, or when gcd(d, r, n) > 1.
inline FamilyVerdict gold_trace_check(const FieldPtr& field, unsigned d, unsigned r) {
  const unsigned n = field->n();
  const Field& fld = *field;
  const std::uint64_t gold_r = (std::uint64_t{1} << r) + 1;
  const VBF f = from_any_power(field, (std::uint64_t{1} << d) + 1) + trace_of(from_any_power(field, gold_r));
  FamilyVerdict v = detail::observe("gold-trace", f, {{"d", d}, {"r", r}});
  const unsigned gdn = std::gcd(d, n);
  const bool root_branch = gdn > 1 && detail::gcd_pow2m1(gold_r, n) == 1;
  const unsigned gdrn = static_cast<unsigned>(gcd3(d, r, n));
  if (!root_branch && gdrn <= 1) return v;
  v.predicted = false;
  if (gdrn > 1) {
    detail::attach_construction(v, f, detail::subfield_pair(fld, gdrn));
    return v;
  }
  // alpha in GF(2^gcd(d,n)) kills the Gold part; pick x != 0 whose trace term vanishes.
  const elem alpha = fld.subfield_generator(gdn);
  const elem c = alpha ^ fld.pow(alpha, static_cast<std::int64_t>(reduce_exponent(std::uint64_t{1} << r, n)));
  for (elem x = 1; x < fld.size(); ++x) {
    if (fld.trace(fld.mul(fld.pow(x, static_cast<std::int64_t>(reduce_exponent(gold_r, n))), c)) == 0) {
      detail::attach_construction(v, f, RodierWitness{x, fld.mul(alpha, x)});
      break;
    }
  }
  return v;
}

/// L1(x^(2^(d+1)+2^d+1)) + L2(x^(2^(s+1)+2^s+1)); predicted not 0-APN when gcd(d, s, n) > 1.
inline FamilyVerdict triple_class_check(const FieldPtr& field, unsigned d, unsigned s, const LinearizedPoly& l1,
                                        const LinearizedPoly& l2) {
  const unsigned n = field->n();
  auto triple = [](unsigned k) { return (std::uint64_t{1} << (k + 1)) + (std::uint64_t{1} << k) + 1; };
  const VBF f =
      compose_linear(l1, from_any_power(field, triple(d))) + compose_linear(l2, from_any_power(field, triple(s)));
  FamilyVerdict v = detail::observe("triple", f, {{"d", d}, {"s", s}});
  const unsigned g = static_cast<unsigned>(gcd3(d, s, n));
  if (g > 1) {
    v.predicted = false;
    detail::attach_construction(v, f, detail::subfield_pair(*field, g));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Binomials

/// Some alpha outside {0,1} has h_a(alpha) != 0 and h_b(alpha) != 0.
inline std::optional<elem> binomial_nondegenerate_alpha(const Field& f, std::uint64_t a, std::uint64_t b) {
  for (elem alpha = 2; alpha < f.size(); ++alpha)
    if (monomial_defect(f, alpha, a) != 0 && monomial_defect(f, alpha, b) != 0) return alpha;
  return std::nullopt;
}

inline VBF binomial_function(const FieldPtr& field, std::uint64_t a, std::uint64_t b, elem beta) {
  const Field& fld = *field;
  const VBF xa = from_any_power(field, a);
  const VBF xb = from_any_power(field, b);
  std::vector<elem> t(fld.size());
  for (elem x = 0; x < fld.size(); ++x) t[x] = xa.table()[x] ^ fld.mul(beta, xb.table()[x]);
  return VBF(field, std::move(t));
}

/// x^a + beta x^b, a > b >= 1, beta != 0: predicted not 0-APN when x^a or x^b
/// is 0-APN and gcd(a - b, 2^n - 1) = 1.
inline FamilyVerdict binomial_check(const FieldPtr& field, std::uint64_t a, std::uint64_t b, elem beta,
                                    std::string family = "binomial") {
  if (!(a > b && b >= 1)) throw std::invalid_argument("binomial requires a > b >= 1");
  const Field& fld = *field;
  if (beta == 0 || beta >= fld.size()) throw std::invalid_argument("beta must be a nonzero field element");
  const unsigned n = fld.n();
  const VBF f = binomial_function(field, a, b, beta);
  FamilyVerdict v = detail::observe(std::move(family), f, {{"a", a}, {"b", b}, {"beta", beta}});
  const std::uint64_t ra = reduce_exponent(a, n);
  const std::uint64_t rb = reduce_exponent(b, n);
  const bool one_zero_apn = monomial_0apn_direct(fld, ra).zero_apn || monomial_0apn_direct(fld, rb).zero_apn;
  const std::optional<elem> alpha = binomial_nondegenerate_alpha(fld, ra, rb);
  v.nondegenerate = alpha.has_value();
  if (!one_zero_apn || detail::gcd_pow2m1(a - b, n) != 1) return v;
  v.predicted = false;
  if (alpha) {
    // z^(a-b) = beta h_b(alpha) / h_a(alpha); the witness is (z, alpha z).
    const elem rhs = fld.div(fld.mul(beta, monomial_defect(fld, *alpha, rb)), monomial_defect(fld, *alpha, ra));
    const std::uint64_t ord = fld.order();
    const std::uint64_t k = (a - b) % ord;
    std::uint64_t kinv = 1;
    for (std::uint64_t t = 1; t < std::max<std::uint64_t>(ord, 2); ++t)
      if ((k * t) % ord == 1 % ord) {
        kinv = t;
        break;
      }
    const elem z = fld.pow(rhs, static_cast<std::int64_t>(kinv));
    detail::attach_construction(v, f, RodierWitness{z, fld.mul(*alpha, z)});
  }
  return v;
}

/// The four parameterized binomial shapes, c > d >= 1.
enum class BinomialCase { MersenneMersenne, GoldGold, GoldMersenne, MersenneGold };

struct BinomialCaseParams {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool condition = false;  // the shape's stated gcd condition
};

/// Exponents of the shape and its stated condition; nullopt when a <= b.
inline std::optional<BinomialCaseParams> binomial_case_params(BinomialCase kind, unsigned c, unsigned d, unsigned n) {
  if (!(c > d && d >= 1)) throw std::invalid_argument("binomial shapes require c > d >= 1");
  const std::uint64_t pc = std::uint64_t{1} << c;
  const std::uint64_t pd = std::uint64_t{1} << d;
  auto one = [&](unsigned x) { return std::gcd(x, n) == 1; };
  auto one_big = [&](std::uint64_t x) { return detail::gcd_pow2m1(x, n) == 1; };
  BinomialCaseParams p;
  switch (kind) {
    case BinomialCase::MersenneMersenne:
      p = {pc - 1, pd - 1, (one(c - 1) && one(c - d)) || (one(d - 1) && one(c - d))};
      break;
    case BinomialCase::GoldGold:
      p = {pc + 1, pd + 1, (one(c) && one(c - d)) || (one(d) && one(c - d))};
      break;
    case BinomialCase::GoldMersenne: {
      const std::uint64_t g = (pc >> 1) - (pd >> 1) + 1;
      p = {pc + 1, pd - 1, (one(c) && one_big(g)) || (one(d - 1) && one_big(g))};
      break;
    }
    case BinomialCase::MersenneGold: {
      const std::uint64_t g = (pc >> 1) - (pd >> 1) - 1;
      p = {pc - 1, pd + 1, (one(c - 1) && one_big(g)) || (one(d) && one_big(g))};
      break;
    }
  }
  if (p.a <= p.b) return std::nullopt;
  return p;
}

inline const char* binomial_case_name(BinomialCase kind) {
  switch (kind) {
    case BinomialCase::MersenneMersenne:
      return "binomial-mersenne-mersenne";
    case BinomialCase::GoldGold:
      return "binomial-gold-gold";
    case BinomialCase::GoldMersenne:
      return "binomial-gold-mersenne";
    case BinomialCase::MersenneGold:
      return "binomial-mersenne-gold";
  }
  return "binomial";
}

/// Shape verdict: predicted not 0-APN when the shape's condition holds.
inline std::optional<FamilyVerdict> binomial_case_check(const FieldPtr& field, BinomialCase kind, unsigned c,
                                                        unsigned d, elem beta) {
  const auto p = binomial_case_params(kind, c, d, field->n());
  if (!p) return std::nullopt;
  FamilyVerdict v = binomial_check(field, p->a, p->b, beta, binomial_case_name(kind));
  v.params.insert(v.params.begin(), {{"c", c}, {"d", d}});
  v.predicted = p->condition ? std::optional<bool>(false) : std::nullopt;
  return v;
}

/// x^(2^n-2) + beta x^d for odd n; predicted not 0-APN when gcd(d + 1, 2^n - 1) = 1.
inline FamilyVerdict leander_rodier_check(const FieldPtr& field, std::uint64_t d, elem beta) {
  const Field& fld = *field;
  const unsigned n = fld.n();
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (beta == 0 || beta >= fld.size()) throw std::invalid_argument("beta must be a nonzero field element");
  const std::uint64_t inv_exp = fld.order() - 1;
  FamilyVerdict v;
  if (inv_exp <= d || inv_exp == 0) {
    // Outside the a > b shape: observe only.
    std::vector<elem> t(fld.size());
    const VBF xa = from_any_power(field, std::max<std::uint64_t>(inv_exp, 1));
    const VBF xb = from_any_power(field, d);
    for (elem x = 0; x < fld.size(); ++x) t[x] = xa.table()[x] ^ fld.mul(beta, xb.table()[x]);
    v = detail::observe("leander-rodier", VBF(field, std::move(t)), {{"d", d}, {"beta", beta}});
    return v;
  }
  v = binomial_check(field, inv_exp, d, beta, "leander-rodier");
  v.params = {{"d", d}, {"beta", beta}};
  if (n % 2 == 0) {
    v.predicted.reset();
    return v;
  }
  v.predicted = detail::gcd_pow2m1(d + 1, n) == 1 ? std::optional<bool>(false) : std::nullopt;
  return v;
}

// ---------------------------------------------------------------------------
// Parameter grids

struct GridOptions {
  unsigned n_min = 2;
  unsigned n_max = 8;
  /// beta runs over the whole field for n up to this bound, else {1, g}.
  unsigned full_beta_max_n = 5;
};

inline std::vector<elem> beta_values(const Field& f, bool full) {
  std::vector<elem> out;
  if (full) {
    for (elem b = 1; b < f.size(); ++b) out.push_back(b);
  } else {
    out.push_back(1);
    if (f.generator() != 1) out.push_back(f.generator());
  }
  return out;
}

/// Runs every family criterion over its grid, calling sink once per verdict.
template <typename Sink>
void family_grid(const GridOptions& opt, Sink&& sink) {
  for (unsigned n = opt.n_min; n <= opt.n_max; ++n) {
    const FieldPtr field = make_field(n);
    const std::vector<LinearizedPoly> lins = {LinearizedPoly::identity(n), LinearizedPoly::trace(n)};
    const auto betas = beta_values(*field, n <= opt.full_beta_max_n);
    for (unsigned d = 1; d <= n; ++d) {
      for (const auto& l : lins) {
        sink(trace_class_check(field, d, TraceVariant::F, l));
        sink(trace_class_check(field, d, TraceVariant::G, l));
      }
      for (unsigned r = 1; r <= n; ++r) {
        for (const auto& l1 : lins)
          for (const auto& l2 : lins) {
            sink(l1l2_class_check(field, d, r, l1, l2));
            sink(triple_class_check(field, d, r, l1, l2));
          }
        sink(gold_trace_check(field, d, r));
      }
    }
    for (unsigned c = 2; c <= n; ++c)
      for (unsigned d = 1; d < c; ++d)
        for (auto kind : {BinomialCase::MersenneMersenne, BinomialCase::GoldGold, BinomialCase::GoldMersenne,
                          BinomialCase::MersenneGold})
          for (elem beta : betas)
            if (auto v = binomial_case_check(field, kind, c, d, beta)) sink(*v);
    if (n % 2 == 1)
      for (unsigned d = 1; d <= n; ++d)
        for (elem beta : betas) sink(leander_rodier_check(field, d, beta));
  }
}

}  // namespace papnlab

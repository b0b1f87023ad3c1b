#pragma once

// Executable moment identities for single-point modifications.
//
// Notation: F' is the (x0, eps)-modification of F, y0 = F(x0), y1 = y0 + eps,
// D(b) = 1 - (-1)^Tr(b eps) and E(a,b) = (-1)^Tr(a x0 + b y0) D(b).
// Every check evaluates its two sides on separate code paths: the left side
// from the Walsh table of F' (or a direct predicate), the right side from the
// Walsh table of F together with T/S counts from the differential module.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "papnlab/differential.hpp"
#include "papnlab/exact.hpp"
#include "papnlab/random.hpp"
#include "papnlab/spectral.hpp"

namespace papnlab {

struct IdentityCheckResult {
  std::string id;
  std::string function;  // descriptor of F
  unsigned n = 0;
  std::optional<elem> x0;
  std::optional<elem> eps;
  std::optional<std::uint64_t> seed;
  exact_int lhs = 0;
  exact_int rhs = 0;
  bool pass = false;
  /// Implication checks only: the antecedent did not fire.
  std::optional<bool> vacuous;
};

namespace detail {

inline IdentityCheckResult make_result(std::string id, const VBF& f, std::optional<elem> x0, std::optional<elem> eps,
                                       exact_int lhs, exact_int rhs) {
  IdentityCheckResult r;
  r.id = std::move(id);
  r.n = f.n();
  r.x0 = x0;
  r.eps = eps;
  r.lhs = lhs;
  r.rhs = rhs;
  r.pass = lhs == rhs;
  return r;
}

inline exact_int delta0(elem z) { return z == 0 ? 1 : 0; }

inline exact_int moment_difference(const WalshTable& wf, const WalshTable& wm, unsigned k) {
  return moment(wf, k).value - moment(wm, k).value;
}

inline void require_nonzero_eps(elem eps) {
  if (eps == 0) throw std::invalid_argument("identity checks require eps != 0");
}

}  // namespace detail

/// Walsh coefficients of F' against W_F - E, entrywise; lhs counts mismatches.
inline IdentityCheckResult check_walsh_modification(const VBF& f, elem x0, elem eps) {
  detail::require_nonzero_eps(eps);
  const WalshTable wf = walsh_full(f);
  const WalshTable wm = walsh_full(modify_at(f, x0, eps));
  const elem y0 = f.table()[x0];
  exact_int mismatches = 0;
  for (elem b = 0; b < f.size(); ++b)
    for (elem a = 0; a < f.size(); ++a)
      if (wm(a, b) != wf(a, b) - e_factor(f.field(), a, b, x0, y0, eps)) ++mismatches;
  return detail::make_result("walsh-modification-diff", f, x0, eps, mismatches, 0);
}

/// E^(2m) = 2^(2m-1) D and E^(2m+1) = 2^(2m) E for 1 <= m <= 3 at every (a,b).
inline IdentityCheckResult check_e_factor_powers(const VBF& f, elem x0, elem eps) {
  detail::require_nonzero_eps(eps);
  const Field& fld = f.field();
  const elem y0 = f.table()[x0];
  exact_int mismatches = 0;
  for (elem a = 0; a < f.size(); ++a) {
    for (elem b = 0; b < f.size(); ++b) {
      const exact_int e = e_factor(fld, a, b, x0, y0, eps);
      const exact_int d = d_factor(fld, b, eps);
      for (unsigned m = 1; m <= 3; ++m) {
        if (ipow(e, 2 * m) != pow2(2 * m - 1) * d) ++mismatches;
        if (ipow(e, 2 * m + 1) != pow2(2 * m) * e) ++mismatches;
      }
    }
  }
  return detail::make_result("e-factor-powers", f, x0, eps, mismatches, 0);
}

/// (1/4) sum (W_F^4 - W_F'^4) = sum W_F^3 E - (3 2^(3n) - 2^(2n+1)).
inline IdentityCheckResult check_fourth_moment_shift(const VBF& f, elem x0, elem eps) {
  detail::require_nonzero_eps(eps);
  const unsigned n = f.n();
  const WalshTable wf = walsh_full(f);
  const WalshTable wm = walsh_full(modify_at(f, x0, eps));
  const exact_int diff = detail::moment_difference(wf, wm, 4);
  if (diff % 4 != 0) throw std::logic_error("fourth-moment difference not divisible by 4");
  const exact_int rhs = e_weighted_moment(wf, 3, x0, f.table()[x0], eps) - (3 * pow2(3 * n) - pow2(2 * n + 1));
  return detail::make_result("fourth-moment-shift", f, x0, eps, diff / 4, rhs);
}

/// sum (W_F^3 - W_F'^3) = 3 sum W_F^2 E - 3 2^(2n+1) (d0(F(0)) - d0(y1 - y0 + F(0)))
///                        + 2^(2n+2) d0(x0) (d0(y0) - d0(y1)).
inline IdentityCheckResult check_third_moment_shift(const VBF& f, elem x0, elem eps) {
  detail::require_nonzero_eps(eps);
  const unsigned n = f.n();
  const WalshTable wf = walsh_full(f);
  const WalshTable wm = walsh_full(modify_at(f, x0, eps));
  const elem f0 = f.table()[0];
  const elem y0 = f.table()[x0];
  const elem y1 = y0 ^ eps;
  using detail::delta0;
  const exact_int rhs = 3 * e_weighted_moment(wf, 2, x0, y0, eps) -
                        3 * pow2(2 * n + 1) * (delta0(f0) - delta0(y1 ^ y0 ^ f0)) +
                        pow2(2 * n + 2) * delta0(x0) * (delta0(y0) - delta0(y1));
  return detail::make_result("third-moment-shift", f, x0, eps, detail::moment_difference(wf, wm, 3), rhs);
}

/// sum W_F^3 E = 2^(2n) (3 2^n - 2 + |T_{x0,y0}| - |T_{x0,y1}|).
inline IdentityCheckResult check_cube_e_moment(const VBF& f, elem x0, elem eps) {
  detail::require_nonzero_eps(eps);
  const unsigned n = f.n();
  const elem y0 = f.table()[x0];
  const exact_int lhs = e_weighted_moment(walsh_full(f), 3, x0, y0, eps);
  const exact_int t0 = t_size(f, x0, y0);
  const exact_int t1 = t_size(f, x0, y0 ^ eps);
  const exact_int rhs = pow2(2 * n) * (3 * pow2(n) - 2 + t0 - t1);
  return detail::make_result("cube-e-moment-t-count", f, x0, eps, lhs, rhs);
}

/// sum W_F^2 E = 2^(2n) (|S_{x0,y0}| - |S_{x0,y1}|).
inline IdentityCheckResult check_square_e_moment(const VBF& f, elem x0, elem eps) {
  detail::require_nonzero_eps(eps);
  const unsigned n = f.n();
  const elem y0 = f.table()[x0];
  const exact_int lhs = e_weighted_moment(walsh_full(f), 2, x0, y0, eps);
  const exact_int s0 = s_size(f, x0, y0);
  const exact_int s1 = s_size(f, x0, y0 ^ eps);
  return detail::make_result("square-e-moment-s-count", f, x0, eps, lhs, pow2(2 * n) * (s0 - s1));
}

/// [sum (W_F^4 - W_F'^4) = 0]  <=>  [|T_{x0,y0}| = |T_{x0,y1}|]; lhs/rhs are the
/// two truth values.
inline IdentityCheckResult check_fourth_moment_balance(const VBF& f, elem x0, elem eps) {
  detail::require_nonzero_eps(eps);
  const WalshTable wf = walsh_full(f);
  const WalshTable wm = walsh_full(modify_at(f, x0, eps));
  const elem y0 = f.table()[x0];
  const bool balanced = detail::moment_difference(wf, wm, 4) == 0;
  const bool same_t = t_size(f, x0, y0) == t_size(f, x0, y0 ^ eps);
  return detail::make_result("fourth-moment-t-balance", f, x0, eps, balanced, same_t);
}

/// F is x0-APN  <=>  sum W^3 (-1)^Tr(a x0 + b F(x0)) = 2^(2n+1) (3 2^(n-1) - 1);
/// lhs is the moment test, rhs the Rodier scan.
inline IdentityCheckResult check_twisted_cube_characterization(const VBF& f, elem x0) {
  const unsigned n = f.n();
  const exact_int target = pow2(2 * n) * (3 * pow2(n) - 2);
  const exact_int tw = twisted_moment(walsh_full(f), 3, x0, f.table()[x0]).value;
  return detail::make_result("twisted-cube-papn", f, x0, std::nullopt, tw == target, is_x0_apn_rodier(f, x0));
}

/// sum W^3 (-1)^Tr(a x0 + b F(x0)) = 2^(2n) (3 2^n - 2 + |T_{x0,F(x0)}|).
inline IdentityCheckResult check_twisted_cube_count(const VBF& f, elem x0) {
  const unsigned n = f.n();
  const elem y0 = f.table()[x0];
  const exact_int tw = twisted_moment(walsh_full(f), 3, x0, y0).value;
  const exact_int rhs = pow2(2 * n) * (3 * pow2(n) - 2 + static_cast<exact_int>(t_size(f, x0, y0)));
  return detail::make_result("twisted-cube-t-count", f, x0, std::nullopt, tw, rhs);
}

/// sum (W_F^3 - W_F'^3) = 3 2^(2n) (|S_{x0,y0}| - |S_{x0,y1}|)
///                        - 3 2^(2n+1) (d0(F(0)) - d0(y1 - y0 + F(0)))
///                        + 2^(2n+2) d0(x0) (d0(y0) - d0(y1)).
inline IdentityCheckResult check_cube_shift_s_count(const VBF& f, elem x0, elem eps) {
  detail::require_nonzero_eps(eps);
  const unsigned n = f.n();
  const WalshTable wm = walsh_full(modify_at(f, x0, eps));
  const WalshTable wf = walsh_full(f);
  const elem f0 = f.table()[0];
  const elem y0 = f.table()[x0];
  const elem y1 = y0 ^ eps;
  using detail::delta0;
  const exact_int s0 = s_size(f, x0, y0);
  const exact_int s1 = s_size(f, x0, y1);
  const exact_int rhs = 3 * pow2(2 * n) * (s0 - s1) - 3 * pow2(2 * n + 1) * (delta0(f0) - delta0(y1 ^ y0 ^ f0)) +
                        pow2(2 * n + 2) * delta0(x0) * (delta0(y0) - delta0(y1));
  return detail::make_result("cube-shift-s-count", f, x0, eps, detail::moment_difference(wf, wm, 3), rhs);
}

inline void require_zero_at_origin(const VBF& f) {
  if (f.table()[0] != 0) throw std::invalid_argument("check requires F(0) = 0");
}

inline void require_apn(const VBF& f) {
  if (!is_apn(f)) throw std::invalid_argument("check requires an APN function");
}

/// F(0) = 0 != x0: sum (W_F^3 - W_F'^3) = 3 2^(2n) (|S_{x0,y0}| - |S_{x0,y1}|) - 3 2^(2n+1).
inline IdentityCheckResult check_cube_shift_nonzero_point(const VBF& f, elem x0, elem eps) {
  require_zero_at_origin(f);
  if (x0 == 0) throw std::invalid_argument("check requires x0 != 0");
  detail::require_nonzero_eps(eps);
  const unsigned n = f.n();
  const elem y0 = f.table()[x0];
  const exact_int lhs = detail::moment_difference(walsh_full(f), walsh_full(modify_at(f, x0, eps)), 3);
  const exact_int rhs =
      3 * pow2(2 * n) * (static_cast<exact_int>(s_size(f, x0, y0)) - static_cast<exact_int>(s_size(f, x0, y0 ^ eps))) -
      3 * pow2(2 * n + 1);
  return detail::make_result("cube-shift-nonzero-point", f, x0, eps, lhs, rhs);
}

/// F(0) = 0 = x0: sum (W_F^3 - W_F'^3) = 2^(2n+1) (3 2^(n-1) - 1).
inline IdentityCheckResult check_cube_shift_origin(const VBF& f, elem eps) {
  require_zero_at_origin(f);
  detail::require_nonzero_eps(eps);
  const unsigned n = f.n();
  const exact_int lhs = detail::moment_difference(walsh_full(f), walsh_full(modify_at(f, 0, eps)), 3);
  return detail::make_result("cube-shift-origin", f, elem{0}, eps, lhs, pow2(2 * n) * (3 * pow2(n) - 2));
}

/// APN F, F(0) = 0 != x0: sum W_F'^3 = 2^(2n+1) (3 2^(n-1) - 1) + 3 2^(2n) |S_{x0,y1}|.
inline IdentityCheckResult check_apn_cube_nonzero_point(const VBF& f, elem x0, elem eps) {
  require_zero_at_origin(f);
  require_apn(f);
  if (x0 == 0) throw std::invalid_argument("check requires x0 != 0");
  detail::require_nonzero_eps(eps);
  const unsigned n = f.n();
  const exact_int lhs = moment(walsh_full(modify_at(f, x0, eps)), 3).value;
  const exact_int rhs =
      pow2(2 * n) * (3 * pow2(n) - 2) + 3 * pow2(2 * n) * static_cast<exact_int>(s_size(f, x0, f.table()[x0] ^ eps));
  return detail::make_result("apn-cube-nonzero-point", f, x0, eps, lhs, rhs);
}

/// APN F, F(0) = 0 = x0: sum W_F'^3 = 0.
inline IdentityCheckResult check_apn_cube_origin(const VBF& f, elem eps) {
  require_zero_at_origin(f);
  require_apn(f);
  detail::require_nonzero_eps(eps);
  return detail::make_result("apn-cube-origin", f, elem{0}, eps, moment(walsh_full(modify_at(f, 0, eps)), 3).value,
                             0);
}

/// APN F with F(0) = 0: F' = F + eps at 0 is APN  <=>  sum W_F^3 (-1)^Tr(b eps) = 0.
/// lhs is the direct APN test on F', rhs the moment criterion.
inline IdentityCheckResult check_apn_modification_criterion(const VBF& f, elem eps) {
  require_zero_at_origin(f);
  require_apn(f);
  detail::require_nonzero_eps(eps);
  const Field& fld = f.field();
  const WalshTable wf = walsh_full(f);
  const exact_int m = weighted_moment(wf, 3, [&](elem, elem b) { return fld.trace(fld.mul(b, eps)) ? -1 : 1; });
  return detail::make_result("apn-modification-cube-criterion", f, elem{0}, eps, is_apn(modify_at(f, 0, eps)), m == 0);
}

/// F(0) = 0: sum W_F^2 (-1)^Tr(b eps) = 0 for every eps != 0.
inline IdentityCheckResult check_square_eps_moment(const VBF& f, elem eps) {
  require_zero_at_origin(f);
  detail::require_nonzero_eps(eps);
  const Field& fld = f.field();
  const exact_int m =
      weighted_moment(walsh_full(f), 2, [&](elem, elem b) { return fld.trace(fld.mul(b, eps)) ? -1 : 1; });
  return detail::make_result("square-eps-moment-vanishes", f, elem{0}, eps, m, 0);
}

/// For APN F and any x0 (n > 1): pick distinct y, z outside {x0} and
/// eps = F(y) + F(z) + F(x0+y+z) + F(x0); the modification is then not APN.
/// lhs = 1 when eps != 0 and F' is not APN.
inline IdentityCheckResult check_apn_modification_breakable(const VBF& f, elem x0) {
  require_apn(f);
  if (f.n() < 2) throw std::invalid_argument("check requires n > 1");
  const auto t = f.table();
  const elem y = x0 == 0 ? 1 : 0;
  elem z = 1;
  while (z == x0 || z == y || (x0 ^ y ^ z) == x0 || (x0 ^ y ^ z) == y || (x0 ^ y ^ z) == z) ++z;
  const elem eps = t[y] ^ t[z] ^ t[x0 ^ y ^ z] ^ t[x0];
  const bool broken = eps != 0 && !is_apn(modify_at(f, x0, eps));
  return detail::make_result("apn-modification-breakable", f, x0, eps, broken, 1);
}

// ---------------------------------------------------------------------------

struct LocalGlobalOutcome {
  bool antecedent = false;  // F' is x0-APN
  bool consequent = false;  // F' is APN
  bool holds() const { return !antecedent || consequent; }
};

/// For APN F: F' x0-APN implies F' APN. Both predicates computed directly.
inline LocalGlobalOutcome check_local_global(const VBF& f, elem x0, elem eps) {
  require_apn(f);
  detail::require_nonzero_eps(eps);
  const VBF m = modify_at(f, x0, eps);
  LocalGlobalOutcome out;
  out.antecedent = is_x0_apn_rodier(m, x0);
  out.consequent = is_apn(m);
  return out;
}

struct ConjectureProbe {
  bool full_image = false;
  std::vector<elem> missing;  // each missing eps gives an x0-APN modification
};

/// Image of (u,v) -> F(x0) + F(u) + F(v) + F(x0+u+v) over all pairs.
inline std::vector<std::uint8_t> quadruple_image(const VBF& f, elem x0) {
  const auto t = f.table();
  std::vector<std::uint8_t> hit(f.size(), 0);
  for (elem u = 0; u < f.size(); ++u)
    for (elem v = 0; v < f.size(); ++v) hit[t[x0] ^ t[u] ^ t[v] ^ t[x0 ^ u ^ v]] = 1;
  return hit;
}

/// The same set written as {D_aF(x0) + D_aF(y) : a, y}.
inline std::vector<std::uint8_t> derivative_pair_image(const VBF& f, elem x0) {
  const auto t = f.table();
  std::vector<std::uint8_t> hit(f.size(), 0);
  for (elem a = 0; a < f.size(); ++a)
    for (elem y = 0; y < f.size(); ++y) hit[(t[x0 ^ a] ^ t[x0]) ^ (t[y ^ a] ^ t[y])] = 1;
  return hit;
}

inline ConjectureProbe conjecture_probe(const VBF& f, elem x0) {
  require_apn(f);
  const auto hit = quadruple_image(f, x0);
  ConjectureProbe p;
  for (elem e = 0; e < f.size(); ++e)
    if (!hit[e]) p.missing.push_back(e);
  p.full_image = p.missing.empty();
  return p;
}

// ---------------------------------------------------------------------------

struct PowerOneApnReport {
  unsigned n_max = 0;
  std::uint64_t exponents_checked = 0;
  std::uint64_t one_apn = 0;                         // exponents that are 1-APN
  std::vector<std::pair<unsigned, std::uint32_t>> violations;  // (n, k): 1-APN but not APN
};

/// Sweeps every exponent 1 <= k <= 2^n - 2 for n <= n_max: 1-APN must imply APN.
inline PowerOneApnReport check_power_one_apn(unsigned n_max, unsigned jobs = 1) {
  PowerOneApnReport rep;
  rep.n_max = n_max;
  for (unsigned n = 2; n <= n_max; ++n) {
    const FieldPtr field = make_field(n);
    const std::size_t count = field->order() - 1;
    std::vector<std::int8_t> state(count, 0);  // 0 not 1-APN, 1 1-APN and APN, 2 violation
    parallel_for(count, jobs, [&](std::size_t i) {
      const VBF f = from_power(field, i + 1);
      if (!is_x0_apn_rodier(f, 1)) return;
      state[i] = is_apn(f) ? 1 : 2;
    });
    for (std::size_t i = 0; i < count; ++i) {
      ++rep.exponents_checked;
      if (state[i] != 0) ++rep.one_apn;
      if (state[i] == 2) rep.violations.emplace_back(n, static_cast<std::uint32_t>(i + 1));
    }
  }
  return rep;
}

struct QuadraticPropReport {
  bool quadratic = false;
  bool apn = false;
  std::uint32_t papn_points = 0;  // number of x0 at which F is x0-APN
  /// all-or-nothing: every point agrees with APN-ness.
  bool consistent = false;
};

inline QuadraticPropReport check_quadratic_prop(const VBF& f, unsigned jobs = 1) {
  QuadraticPropReport r;
  r.quadratic = is_quadratic(f);
  if (!r.quadratic) throw std::invalid_argument("check requires a quadratic function");
  r.apn = is_apn(f, jobs);
  const PapnReport rep = papn_set(f, jobs);
  for (auto v : rep.verdict) r.papn_points += v;
  r.consistent = r.apn ? rep.all() : rep.none();
  return r;
}

// ---------------------------------------------------------------------------
// Seeded suite

struct SuiteOptions {
  unsigned n = 3;
  unsigned trials = 100;
  std::uint64_t seed = 0;
  /// Additionally run every (x0, eps) for this many random functions.
  unsigned exhaustive_functions = 0;
};

/// Runs every identity on seeded random functions; sink receives each result.
inline void run_identity_suite(const SuiteOptions& opt, const std::function<void(const IdentityCheckResult&)>& sink) {
  const FieldPtr field = make_field(opt.n);
  const Field& fld = *field;
  auto zero_origin = [&](const VBF& f) {
    std::vector<elem> t(f.table().begin(), f.table().end());
    const elem f0 = t[0];
    for (auto& v : t) v ^= f0;
    return VBF(field, std::move(t));
  };
  // Every identity at one (x0, eps): f is arbitrary, g = f - f(0), h is APN with h(0) = 0.
  auto all_at = [&](const VBF& f, const VBF& g, const VBF& h, std::uint64_t seed, elem x0, elem eps, bool per_x0) {
    auto emit = [&](IdentityCheckResult r, const char* fn) {
      r.function = fn;
      r.seed = seed;
      sink(r);
    };
    emit(check_walsh_modification(f, x0, eps), "random");
    emit(check_e_factor_powers(f, x0, eps), "random");
    emit(check_fourth_moment_shift(f, x0, eps), "random");
    emit(check_third_moment_shift(f, x0, eps), "random");
    emit(check_cube_e_moment(f, x0, eps), "random");
    emit(check_square_e_moment(f, x0, eps), "random");
    emit(check_fourth_moment_balance(f, x0, eps), "random");
    emit(check_cube_shift_s_count(f, x0, eps), "random");
    if (per_x0) {
      emit(check_twisted_cube_characterization(f, x0), "random");
      emit(check_twisted_cube_count(f, x0), "random");
    }
    emit(check_third_moment_shift(g, x0, eps), "random-zero-origin");
    emit(check_square_eps_moment(g, eps), "random-zero-origin");
    emit(x0 == 0 ? check_cube_shift_origin(g, eps) : check_cube_shift_nonzero_point(g, x0, eps), "random-zero-origin");
    emit(check_apn_modification_criterion(h, eps), "random-apn");
    emit(x0 == 0 ? check_apn_cube_origin(h, eps) : check_apn_cube_nonzero_point(h, x0, eps), "random-apn");
    if (per_x0 && opt.n > 1) emit(check_apn_modification_breakable(h, x0), "random-apn");
    const LocalGlobalOutcome lg = check_local_global(h, x0, eps);
    IdentityCheckResult r = detail::make_result("papn-modification-implies-apn", h, x0, eps, lg.holds(), 1);
    r.vacuous = !lg.antecedent;
    emit(r, "random-apn");
  };

  for (unsigned trial = 0; trial < opt.trials; ++trial) {
    const std::uint64_t seed = mix_seed(opt.seed, (std::uint64_t{opt.n} << 32) | trial);
    Rng rng(seed);
    const VBF f = random_function(field, rng);
    const VBF h = random_apn_function(field, rng);
    const elem x0 = random_element(fld, rng);
    const elem eps = random_nonzero(fld, rng);
    all_at(f, zero_origin(f), h, seed, x0, eps, true);
  }

  for (unsigned k = 0; k < opt.exhaustive_functions; ++k) {
    const std::uint64_t seed = mix_seed(opt.seed ^ 0x5eedull, (std::uint64_t{opt.n} << 32) | k);
    Rng rng(seed);
    const VBF f = random_function(field, rng);
    const VBF g = zero_origin(f);
    const VBF h = random_apn_function(field, rng);
    for (elem x0 = 0; x0 < fld.size(); ++x0)
      for (elem eps = 1; eps < fld.size(); ++eps) all_at(f, g, h, seed, x0, eps, eps == 1);
  }
}

}  // namespace papnlab

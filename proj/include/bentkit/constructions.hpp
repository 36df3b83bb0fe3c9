#pragma once

// Bent functions in dimension 2t from near-bent components on
// GF(2^(2t-1)), their duals and pseudo-duals, and checkers for the
// structural identities relating them.
//
// Conventions: F has components (f0, f1) with F(u, 0) = f0(u) and
// F(u, 1) = f1(u). Condition (T): f0 + f1 = tr + xi. Condition (C):
// D_1 f0 = 0. Spectra and duals on the field use <a, x> = tr(a x).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bentkit/boolfn.hpp"
#include "bentkit/error.hpp"
#include "bentkit/gf2m.hpp"
#include "bentkit/spectrum.hpp"
#include "bentkit/tvr.hpp"

namespace bentkit {

// ---- structured reports ---------------------------------------------------

struct Check {
  std::string name;
  bool passed = false;
  std::optional<std::uint64_t> witness;  // offending point on failure
  std::string detail;
};

struct TheoremReport {
  explicit TheoremReport(std::string name = {}) : theorem(std::move(name)) {}

  std::string theorem;
  bool applicable = true;
  std::string skipped_reason;
  std::string note;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  Check& add(std::string name, bool ok, std::optional<std::uint64_t> witness = std::nullopt, std::string detail = {}) {
    checks.push_back({std::move(name), ok, ok ? std::nullopt : witness, std::move(detail)});
    return checks.back();
  }
};

namespace detail {

inline std::optional<std::uint64_t> first_difference(const BooleanFunction& a, const BooleanFunction& b) {
  for (std::uint64_t x = 0; x < a.size(); ++x)
    if (a(x) != b(x)) return x;
  return std::nullopt;
}

inline void require_field_dim(const BooleanFunction& f, const FieldContext& ctx) {
  if (f.dim() != ctx.m())
    throw Error(Errc::DimensionMismatch, "function of dimension " + std::to_string(f.dim()) + " over " +
                                             ctx.describe());
}

inline void require_product_dim(const BooleanFunction& F, const FieldContext& ctx) {
  if (F.dim() % 2 != 0) throw Error(Errc::OddDimension, "dimension " + std::to_string(F.dim()));
  if (F.dim() != ctx.m() + 1)
    throw Error(Errc::DimensionMismatch, "function of dimension " + std::to_string(F.dim()) + " over " +
                                             ctx.describe() + " x F_2");
}

inline WalshSpectrum require_near_bent(const BooleanFunction& f, std::string_view what) {
  auto s = walsh(f);
  if (s.cls != SpectrumClass::NearBent)
    throw Error(Errc::NotNearBent, std::string(what) + " spectrum " + histogram_text(s));
  return s;
}

inline WalshSpectrum require_bent(const BooleanFunction& F, std::string_view what) {
  auto s = walsh(F);
  bentkit::require_bent(s, what);
  return s;
}

}  // namespace detail

/// D_1 f when it is a constant function.
inline std::optional<bool> d1_constant(const BooleanFunction& f) { return is_constant(derivative(f, 1)); }

// ---- condition flags ------------------------------------------------------

struct ConditionFlags {
  std::optional<bool> xi;       // present iff f0 + f1 = tr + xi
  bool has_C = false;           // D_1 f0 = 0
  std::optional<bool> d1_f0;    // constant value of D_1 f0, if constant
  std::uint64_t distance_to_tr = 0;   // Hamming distance of f0 + f1 to tr
  std::uint64_t distance_to_tr1 = 0;  // ... and to tr + 1

  bool has_T() const { return xi.has_value(); }
};

inline ConditionFlags condition_flags(const BooleanFunction& F, const FieldContext& ctx) {
  detail::require_product_dim(F, ctx);
  const auto [f0, f1] = split(F);
  const auto tr = trace_function(ctx);
  const auto sum = f0 ^ f1;
  ConditionFlags c;
  c.distance_to_tr = weight(sum ^ tr);
  c.distance_to_tr1 = f0.size() - c.distance_to_tr;
  if (c.distance_to_tr == 0)
    c.xi = false;
  else if (c.distance_to_tr1 == 0)
    c.xi = true;
  c.d1_f0 = d1_constant(f0);
  c.has_C = c.d1_f0 == false;
  return c;
}

// ---- constructions --------------------------------------------------------

/// F = (f0, f0 + tr) for near-bent f0 with D_1 f0 constant; always bent.
inline BooleanFunction bent_from_near_bent(const BooleanFunction& f0, const FieldContext& ctx) {
  detail::require_field_dim(f0, ctx);
  detail::require_near_bent(f0, "f0");
  if (!d1_constant(f0)) throw Error(Errc::DerivativeNotConstant, "D_1 f0 is not constant");
  auto F = join(f0, f0 ^ trace_function(ctx));
  if (walsh(F).cls != SpectrumClass::Bent)
    throw Error(Errc::BentVerificationFailed, "(f0, f0 + tr) is not bent");
  return F;
}

/// The member h of {f, f+1, f+tr, f+tr+1} with D_1 h = 0 and h(0) = 0.
inline BooleanFunction normalize_near_bent(const BooleanFunction& f, const FieldContext& ctx) {
  detail::require_field_dim(f, ctx);
  detail::require_near_bent(f, "f");
  if (!d1_constant(f)) throw Error(Errc::DerivativeNotConstant, "D_1 f is not constant");
  const auto tr = trace_function(ctx);
  std::optional<BooleanFunction> found;
  for (const auto& h : {f, f.complemented(), f ^ tr, (f ^ tr).complemented()}) {
    if (d1_constant(h) == false && !h(0)) {
      if (found) throw Error(Errc::BentVerificationFailed, "normalization is not unique");
      found = h;
    }
  }
  if (!found) throw Error(Errc::BentVerificationFailed, "no normalized candidate");
  return *found;
}

/// Pseudo-duals: with dual components (g0~, g1~), returns
/// ((g0~, g0~ + tr), (g1~, g1~ + tr)).
inline std::pair<BooleanFunction, BooleanFunction> pseudo_duals(const BooleanFunction& F, const FieldContext& ctx) {
  detail::require_product_dim(F, ctx);
  const auto S = detail::require_bent(F, "F");
  const auto [g0, g1] = split(dual(S, ctx));
  const auto tr = trace_function(ctx);
  return {join(g0, g0 ^ tr), join(g1, g1 ^ tr)};
}

struct SixPack {
  BooleanFunction F, dual_F, pd0, pd1, dual_pd0, dual_pd1;

  static constexpr const char* kNames[6] = {"F", "dual_F", "pd0", "pd1", "dual_pd0", "dual_pd1"};

  std::array<const BooleanFunction*, 6> members() const { return {&F, &dual_F, &pd0, &pd1, &dual_pd0, &dual_pd1}; }

  /// For each member, the index of the first member with the same table.
  std::array<std::size_t, 6> representatives() const {
    const auto ms = members();
    std::array<std::size_t, 6> rep{};
    for (std::size_t i = 0; i < 6; ++i) {
      rep[i] = i;
      for (std::size_t j = 0; j < i; ++j)
        if (*ms[j] == *ms[i]) {
          rep[i] = j;
          break;
        }
    }
    return rep;
  }

  std::size_t distinct_count() const {
    const auto rep = representatives();
    std::size_t n = 0;
    for (std::size_t i = 0; i < 6; ++i) n += rep[i] == i;
    return n;
  }
};

inline SixPack six_pack(const BooleanFunction& f0, const FieldContext& ctx) {
  SixPack p;
  p.F = bent_from_near_bent(f0, ctx);
  p.dual_F = dual(p.F, ctx);
  std::tie(p.pd0, p.pd1) = pseudo_duals(p.F, ctx);
  p.dual_pd0 = dual(p.pd0, ctx);
  p.dual_pd1 = dual(p.pd1, ctx);
  const auto ms = p.members();
  for (std::size_t i = 0; i < 6; ++i)
    if (walsh(*ms[i]).cls != SpectrumClass::Bent)
      throw Error(Errc::BentVerificationFailed, std::string(SixPack::kNames[i]) + " is not bent");
  return p;
}

// ---- families -------------------------------------------------------------

struct KasamiWelchParams {
  unsigned t = 0, s = 0;
  std::uint64_t d = 0;  // 4^s - 2^s + 1
  int branch = 0;       // +1 if 3s = 1 mod 2t-1, -1 if 3s = -1
};

/// Arithmetic conditions for tr(x^d), d = 4^s - 2^s + 1, on GF(2^(2t-1)):
/// 3 does not divide 2t-1, 3s = +-1 mod 2t-1, 1 <= s < t.
inline KasamiWelchParams kasami_welch_params(unsigned t, unsigned s) {
  if (t < 2) throw Error(Errc::ConditionViolation, "t must be at least 2");
  const unsigned m = 2 * t - 1;
  if (m % 3 == 0) throw Error(Errc::ConditionViolation, "2t-1 = " + std::to_string(m) + " divisible by 3");
  if (s < 1 || s >= t) throw Error(Errc::ConditionViolation, "need 1 <= s < t");
  const unsigned r = (3 * s) % m;
  KasamiWelchParams p{t, s, (std::uint64_t{1} << (2 * s)) - (std::uint64_t{1} << s) + 1, 0};
  if (r == 1)
    p.branch = 1;
  else if (r == m - 1)
    p.branch = -1;
  else
    throw Error(Errc::ConditionViolation, "3s = " + std::to_string(r) + " mod " + std::to_string(m) + ", not +-1");
  return p;
}

struct FamilyMember {
  BooleanFunction f0;
  BooleanFunction F;
  std::vector<std::uint64_t> exponents;  // f0 = tr(sum x^e)
};

inline BooleanFunction trace_monomials(const FieldContext& ctx, const std::vector<std::uint64_t>& exponents) {
  return BooleanFunction::from_fn(ctx.m(), [&](std::uint64_t xi) {
    const auto x = static_cast<Element>(xi);
    Element sum = 0;
    for (auto e : exponents) sum ^= ctx.pow(x, e);
    return ctx.trace(sum);
  });
}

/// F = (tr(x^d), tr(x^d) + tr) for the Kasami-Welch exponent d.
inline FamilyMember kasami_welch(const FieldContext& ctx, unsigned s) {
  if (ctx.m() % 2 == 0) throw Error(Errc::ConditionViolation, "field dimension must be odd");
  const auto p = kasami_welch_params((ctx.m() + 1) / 2, s);
  FamilyMember r;
  r.exponents = {p.d};
  r.f0 = trace_monomials(ctx, r.exponents);
  r.F = join(r.f0, r.f0 ^ trace_function(ctx));
  if (walsh(r.F).cls != SpectrumClass::Bent)
    throw Error(Errc::BentVerificationFailed, "Kasami-Welch function with d=" + std::to_string(p.d) + " not bent");
  return r;
}

/// f0 = sum_{j in J} tr(x^(2^j + 1)), F = (f0, f0 + tr). The sum is checked
/// to be near-bent; not every quadratic binary trace form is.
inline FamilyMember quadratic_family(const FieldContext& ctx, const std::vector<unsigned>& J) {
  const unsigned m = ctx.m();
  if (m % 2 == 0) throw Error(Errc::InvalidExponentSet, "field dimension must be odd");
  if (J.empty()) throw Error(Errc::InvalidExponentSet, "J is empty");
  if (J.size() == 1 && J[0] == 0) throw Error(Errc::InvalidExponentSet, "J = {0} gives a linear function");
  FamilyMember r;
  std::set<std::uint64_t> leaders;
  for (auto j : J) {
    if (j >= m) throw Error(Errc::InvalidExponentSet, "j = " + std::to_string(j) + " not below m");
    const std::uint64_t e = (std::uint64_t{1} << j) + 1;
    if (!leaders.insert(coset_leader(e, m)).second)
      throw Error(Errc::InvalidExponentSet, "2^" + std::to_string(j) + "+1 repeats a cyclotomic coset");
    r.exponents.push_back(e);
  }
  r.f0 = trace_monomials(ctx, r.exponents);
  detail::require_near_bent(r.f0, "quadratic f0");
  r.F = join(r.f0, r.f0 ^ trace_function(ctx));
  if (walsh(r.F).cls != SpectrumClass::Bent)
    throw Error(Errc::BentVerificationFailed, "quadratic F not bent");
  return r;
}

/// Near-bent binary trace forms tr(sum x^k) with D_1 constant, over subsets
/// of the given coset leaders of size at most max_terms. Exhaustive; meant
/// for small fields.
inline std::vector<std::vector<std::uint64_t>> search_constant_derivative_nearbent(
    const FieldContext& ctx, const std::vector<std::uint64_t>& leaders, unsigned max_terms) {
  std::vector<std::vector<std::uint64_t>> out;
  const std::size_t n = leaders.size();
  if (n >= 32) throw Error(Errc::DimensionOutOfRange, "too many candidate leaders");
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) > max_terms) continue;
    std::vector<std::uint64_t> exps;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) exps.push_back(leaders[i]);
    const auto f = trace_monomials(ctx, exps);
    if (d1_constant(f) && walsh(f).cls == SpectrumClass::NearBent) out.push_back(std::move(exps));
  }
  return out;
}

// ---- dual support analysis ------------------------------------------------

struct DualSupportReport {
  std::vector<Element> S;       // f0^(v) = -2^t
  std::vector<Element> S1;      // S + 1
  std::vector<Element> G_set;   // f0^(v) = 0
  BooleanFunction g;            // indicator of G_set
  BooleanFunction S_indicator;  // indicator of S
  std::vector<Element> predicted_support;  // S u S1, sorted
  std::vector<Element> observed_support;   // support of dual f0~, sorted
  bool support_matches = false;
  bool f1_is_f0_plus_g = false;
  bool disjoint = false;  // S and S1 do not meet
  bool counts_consistent = false;
  std::optional<Element> witness;

  bool passed() const { return support_matches && f1_is_f0_plus_g && disjoint && counts_consistent; }
};

inline DualSupportReport dual_support_analysis(const BooleanFunction& F, const FieldContext& ctx) {
  detail::require_product_dim(F, ctx);
  const auto SF = detail::require_bent(F, "F");
  const auto flags = condition_flags(F, ctx);
  if (flags.xi != false) throw Error(Errc::ConditionTNotMet, "f0 + f1 != tr");
  const auto [f0, f1] = split(F);
  const auto s0 = walsh(f0);
  const std::int32_t mag = std::int32_t{1} << ((ctx.m() + 1) / 2);

  DualSupportReport r;
  r.g = BooleanFunction(ctx.m());
  r.S_indicator = BooleanFunction(ctx.m());
  for (Element v = 0; v < ctx.size(); ++v) {
    const auto c = walsh_at_field_point(s0, ctx, v);
    if (c == -mag) {
      r.S.push_back(v);
      r.S_indicator.set(v, true);
    } else if (c == 0) {
      r.G_set.push_back(v);
      r.g.set(v, true);
    }
  }
  for (auto u : r.S) r.S1.push_back(u ^ 1);
  std::sort(r.S1.begin(), r.S1.end());

  std::vector<Element> both;
  std::set_intersection(r.S.begin(), r.S.end(), r.S1.begin(), r.S1.end(), std::back_inserter(both));
  r.disjoint = both.empty();
  std::set_union(r.S.begin(), r.S.end(), r.S1.begin(), r.S1.end(), std::back_inserter(r.predicted_support));

  const auto [d0, d1] = split(dual(SF, ctx));
  for (Element v = 0; v < ctx.size(); ++v)
    if (d0(v)) r.observed_support.push_back(v);
  r.support_matches = r.observed_support == r.predicted_support;
  if (!r.support_matches) {
    const auto pred = BooleanFunction::from_fn(ctx.m(), [&](std::uint64_t v) {
      return std::binary_search(r.predicted_support.begin(), r.predicted_support.end(), static_cast<Element>(v));
    });
    r.witness = static_cast<Element>(*detail::first_difference(pred, d0));
  }
  r.f1_is_f0_plus_g = d1 == (d0 ^ r.g);
  if (!r.f1_is_f0_plus_g && !r.witness) r.witness = static_cast<Element>(*detail::first_difference(d1, d0 ^ r.g));
  r.counts_consistent = r.S.size() == s0.count(-mag) && r.G_set.size() == s0.count(0) &&
                        r.G_set.size() == (std::uint64_t{1} << (ctx.m() - 1));
  return r;
}

// ---- theorem checkers -----------------------------------------------------

namespace detail {

inline ConditionFlags require_condition_T(const BooleanFunction& F, const FieldContext& ctx, bool need_xi_zero) {
  auto flags = condition_flags(F, ctx);
  if (!flags.has_T())
    throw Error(Errc::ConditionTNotMet, "f0 + f1 differs from tr in " + std::to_string(flags.distance_to_tr) +
                                            " points and from tr+1 in " + std::to_string(flags.distance_to_tr1));
  if (need_xi_zero && *flags.xi) throw Error(Errc::ConditionTNotMet, "f0 + f1 = tr + 1, need xi = 0");
  return flags;
}

inline void add_constant_check(TheoremReport& r, std::string name, const BooleanFunction& f, bool value) {
  const BooleanFunction want(f.dim(), value);
  r.add(std::move(name), f == want, first_difference(f, want));
}

}  // namespace detail

/// With f0 + f1 = tr: D_1 f0~ = 0 and D_1 f1~ = 1; a self-dual F also has
/// D_1 f0 = 0.
inline TheoremReport verify_theorem2(const BooleanFunction& F, const FieldContext& ctx) {
  detail::require_product_dim(F, ctx);
  const auto S = detail::require_bent(F, "F");
  detail::require_condition_T(F, ctx, true);
  TheoremReport r{"theorem2"};
  const auto D = dual(S, ctx);
  const auto [d0, d1] = split(D);
  detail::add_constant_check(r, "D_1 dual_f0 = 0", derivative(d0, 1), false);
  detail::add_constant_check(r, "D_1 dual_f1 = 1", derivative(d1, 1), true);
  if (D == F) detail::add_constant_check(r, "self-dual => D_1 f0 = 0", derivative(split(F).f0, 1), false);
  return r;
}

/// With h0 + h1 = tr and D_1 h0 = omega: h0~ + h1~ = tr + omega.
inline TheoremReport verify_theorem5(const BooleanFunction& F, const FieldContext& ctx) {
  detail::require_product_dim(F, ctx);
  const auto S = detail::require_bent(F, "F");
  const auto flags = detail::require_condition_T(F, ctx, true);
  if (!flags.d1_f0) throw Error(Errc::DerivativeNotConstant, "D_1 f0 is not constant");
  TheoremReport r{"theorem5"};
  const auto [d0, d1] = split(dual(S, ctx));
  const auto want = trace_function(ctx).complemented(*flags.d1_f0);
  r.add(*flags.d1_f0 ? "dual_f0 + dual_f1 = tr + 1" : "dual_f0 + dual_f1 = tr", (d0 ^ d1) == want,
        detail::first_difference(d0 ^ d1, want));
  return r;
}

/// Pseudo-duals are bent; dual(pd0) meets (C) and (T) with xi = 0; dual(pd1)
/// meets (C) and (T) with xi = 1. When F itself has xi = 1 the dual
/// components trade places, so the expected xi values are swapped.
inline TheoremReport verify_theorem7(const BooleanFunction& F, const FieldContext& ctx) {
  detail::require_product_dim(F, ctx);
  detail::require_bent(F, "F");
  const auto flags = detail::require_condition_T(F, ctx, false);
  TheoremReport r{"theorem7"};
  const auto [pd0, pd1] = pseudo_duals(F, ctx);
  const auto s0 = walsh(pd0), s1 = walsh(pd1);
  r.add("A) pd0 bent", s0.cls == SpectrumClass::Bent);
  r.add("A) pd1 bent", s1.cls == SpectrumClass::Bent);
  if (!r.passed()) return r;
  const bool swapped = *flags.xi;
  if (swapped) r.note = "F has xi = 1: expected xi of B) and C) swapped";
  auto meets = [&](const char* label, const WalshSpectrum& s, bool want_xi) {
    const auto fl = condition_flags(dual(s, ctx), ctx);
    r.add(std::string(label) + " (C)", fl.has_C);
    r.add(std::string(label) + " (T) xi=" + (want_xi ? "1" : "0"), fl.xi == want_xi, std::nullopt,
          fl.xi ? "xi=" + std::to_string(*fl.xi) : "no (T)");
  };
  meets("B) dual(pd0)", s0, swapped);
  meets("C) dual(pd1)", s1, !swapped);
  return r;
}

/// For near-bent f with D_1 f = omega: f^(u) = 0 exactly when tr(u) = 1 + omega.
inline TheoremReport verify_lemma15(const BooleanFunction& f, const FieldContext& ctx) {
  detail::require_field_dim(f, ctx);
  const auto s = detail::require_near_bent(f, "f");
  const auto omega = d1_constant(f);
  if (!omega) throw Error(Errc::DerivativeNotConstant, "D_1 f is not constant");
  TheoremReport r{"lemma15"};
  std::optional<std::uint64_t> bad;
  std::uint64_t zeros = 0;
  for (Element u = 0; u < ctx.size(); ++u) {
    const bool zero = walsh_at_field_point(s, ctx, u) == 0;
    zeros += zero;
    if (zero != (ctx.trace(u) != *omega) && !bad) bad = u;
  }
  r.add(*omega ? "f^(u) = 0 <=> tr(u) = 0" : "f^(u) = 0 <=> tr(u) = 1", !bad, bad);
  r.add("zero count = 2^(2t-2)", zeros == ctx.size() / 2, std::nullopt, std::to_string(zeros));
  return r;
}

/// For bent F: D_1 f0 = omega <=> D_1 f1 = omega + 1, w(D_(0,1) F) = 2^(2t-1)
/// and D_(0,1) F has components (f0 + f1, f0 + f1).
inline TheoremReport verify_prop16(const BooleanFunction& F, const FieldContext& ctx) {
  detail::require_product_dim(F, ctx);
  detail::require_bent(F, "F");
  TheoremReport r{"prop16"};
  const auto [f0, f1] = split(F);
  const auto c0 = d1_constant(f0), c1 = d1_constant(f1);
  const bool linked = (!c0 && !c1) || (c0 && c1 && *c0 != *c1);
  r.add("D_1 f0 = omega <=> D_1 f1 = omega + 1", linked);
  const auto D = derivative_01(F);
  r.add("w(D_(0,1) F) = 2^(2t-1)", weight(D) == F.size() / 2, std::nullopt, std::to_string(weight(D)));
  r.add("D_(0,1) F = (f0+f1, f0+f1)", D == join(f0 ^ f1, f0 ^ f1), detail::first_difference(D, join(f0 ^ f1, f0 ^ f1)));
  return r;
}

// ---- non-injectivity of the pseudo-dual map --------------------------------

struct CollisionDemo {
  BooleanFunction F_a, F_b;
  bool F_a_bent = false, F_b_bent = false;
  bool duals_differ = false;
  bool pd0_equal = false;

  bool passed() const { return F_a_bent && F_b_bent && duals_differ && pd0_equal; }
};

/// F_a from tr(x^7+x^13+x^19+x^21), F_b from tr(x^3+x^11), both completed
/// by f1 = f0 + tr over GF(2^7).
inline CollisionDemo pseudo_dual_collision_demo(const FieldContext& ctx) {
  if (ctx.m() != 7) throw Error(Errc::DimensionMismatch, "collision demo lives on GF(2^7)");
  const auto tr = trace_function(ctx);
  CollisionDemo d;
  const auto a0 = trace_monomials(ctx, {7, 13, 19, 21});
  const auto b0 = trace_monomials(ctx, {3, 11});
  d.F_a = join(a0, a0 ^ tr);
  d.F_b = join(b0, b0 ^ tr);
  d.F_a_bent = walsh(d.F_a).cls == SpectrumClass::Bent;
  d.F_b_bent = walsh(d.F_b).cls == SpectrumClass::Bent;
  if (!d.F_a_bent || !d.F_b_bent) return d;
  d.duals_differ = dual(d.F_a, ctx) != dual(d.F_b, ctx);
  d.pd0_equal = pseudo_duals(d.F_a, ctx).first == pseudo_duals(d.F_b, ctx).first;
  return d;
}

}  // namespace bentkit

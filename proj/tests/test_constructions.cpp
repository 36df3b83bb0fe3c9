#include <gtest/gtest.h>

#include <random>

#include "bentkit/bentkit.hpp"
#include "oracles.hpp"

using namespace bentkit;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::FormatError;  // sentinel: nothing thrown
}

// Every binary trace form c + tr(sum x^k) over GF(2^5) that is near-bent with
// D_1 constant. Leaders of GF(2^5): 1, 3, 5, 7, 11, 15.
std::vector<BooleanFunction> qualifying_m5(const FieldContext& K) {
  const std::vector<std::uint64_t> leaders = {1, 3, 5, 7, 11, 15};
  std::vector<BooleanFunction> out;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<std::uint64_t> exps;
    for (unsigned i = 0; i < 6; ++i)
      if (mask >> i & 1) exps.push_back(leaders[i]);
    const auto f = trace_monomials(K, exps);
    for (bool c : {false, true}) {
      const auto g = f.complemented(c);
      if (walsh(g).cls == SpectrumClass::NearBent && d1_constant(g)) out.push_back(g);
    }
  }
  return out;
}

}  // namespace

TEST(Theorem1, BuildsBentFunctions) {
  const FieldContext K(7);
  EXPECT_EQ(walsh(bent_from_near_bent(parse("tr(x^3+x^9)", K), K)).cls, SpectrumClass::Bent);
  const auto gold = parse("tr(x^3)", K);
  EXPECT_EQ(d1_constant(gold), true);
  EXPECT_EQ(walsh(bent_from_near_bent(gold, K)).cls, SpectrumClass::Bent);
  EXPECT_EQ(code_of([&] { bent_from_near_bent(parse("tr(x^13)", K), K); }), Errc::DerivativeNotConstant);
  EXPECT_EQ(code_of([&] { bent_from_near_bent(BooleanFunction(7), K); }), Errc::NotNearBent);
}

TEST(Normalize, PicksTheUniqueRepresentative) {
  const FieldContext K(7);
  const auto f = parse("tr(x^3+x^9)", K);
  EXPECT_EQ(normalize_near_bent(f, K), f);
  EXPECT_EQ(normalize_near_bent(parse("tr(x^3)+1", K), K), parse("tr(x^3)+tr(x)", K));
  EXPECT_EQ(code_of([&] { normalize_near_bent(trace_function(K), K); }), Errc::NotNearBent);
  EXPECT_EQ(code_of([&] { normalize_near_bent(parse("tr(x^13)", K), K); }), Errc::DerivativeNotConstant);
}

TEST(ConditionFlags, PaperAnnotations) {
  const FieldContext K(7);
  const auto tr = trace_function(K);
  const auto e1 = parse("tr(x^7+x^13)", K);
  const auto fl1 = condition_flags(join(e1, e1 ^ tr), K);
  EXPECT_EQ(fl1.xi, false);
  EXPECT_FALSE(fl1.has_C);

  const auto e3 = parse("tr(x+x^3+x^7+x^11+x^19+x^21)", K);
  const auto fl3 = condition_flags(join(e3, e3 ^ tr), K);
  EXPECT_EQ(fl3.xi, false);
  EXPECT_TRUE(fl3.has_C);
  EXPECT_EQ(fl3.d1_f0, false);

  const auto nu = BooleanFunction::from_fn(8, [](std::uint64_t x) { return x >> 7; });
  const auto fl = condition_flags(nu, K);
  EXPECT_FALSE(fl.has_T());
  EXPECT_EQ(fl.distance_to_tr, 64u);

  EXPECT_EQ(condition_flags(join(e1, e1 ^ tr.complemented()), K).xi, true);
}

TEST(PseudoDuals, PaperRelations) {
  const FieldContext K(7);
  const auto q = quadratic_family(K, {1, 3});
  const auto [q0, q1] = pseudo_duals(q.F, K);
  EXPECT_EQ(q0, dual(q.F, K));
  (void)q1;

  const auto e4 = bent_from_near_bent(parse("tr(x^3+x^5+x^7+x^11+x^19+x^21)", K), K);
  const auto [p0, p1] = pseudo_duals(e4, K);
  EXPECT_EQ(p0, e4);
  // pd1 differs from F by the linear form tr(u); see the fixture notes.
  EXPECT_EQ(p1, e4 ^ linear_form_2t(K, 1, false));

  const auto kw = kasami_welch(K, 2);
  const auto [k0, k1] = pseudo_duals(kw.F, K);
  EXPECT_EQ(walsh(k0).cls, SpectrumClass::Bent);
  EXPECT_EQ(walsh(k1).cls, SpectrumClass::Bent);
  EXPECT_EQ(code_of([&] { pseudo_duals(BooleanFunction(8), K); }), Errc::NotBent);
}

TEST(DualSupport, KasamiWelchAndQuadratic) {
  const FieldContext K(7);
  const auto kw = dual_support_analysis(kasami_welch(K, 2).F, K);
  EXPECT_TRUE(kw.passed());
  EXPECT_EQ(kw.g, parse("1+tr(x^5)", K));
  EXPECT_EQ(kw.predicted_support.size(), 2 * kw.S.size());

  const auto q = dual_support_analysis(quadratic_family(K, {1, 3}).F, K);
  EXPECT_TRUE(q.passed());
  EXPECT_EQ(q.g, trace_function(K));

  const auto f0 = parse("tr(x^13)", K);
  const auto xi1 = join(f0, (f0 ^ trace_function(K)).complemented());
  EXPECT_EQ(code_of([&] { dual_support_analysis(xi1, K); }), Errc::ConditionTNotMet);
}

TEST(Theorem2, PaperCases) {
  const FieldContext K(7);
  const auto tr = trace_function(K);
  EXPECT_TRUE(verify_theorem2(kasami_welch(K, 2).F, K).passed());
  const auto e2 = parse("tr(x^15+x^27+x^29+x^43)", K);
  EXPECT_TRUE(verify_theorem2(join(e2, e2 ^ tr), K).passed());

  const auto e4 = parse("tr(x^3+x^5+x^7+x^11+x^19+x^21)", K);
  const auto r = verify_theorem2(join(e4, e4 ^ tr), K);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.checks.size(), 3u);  // includes the self-dual corollary
}

TEST(Theorem5, Dichotomy) {
  const FieldContext K(7);
  const auto q = quadratic_family(K, {1, 3}).F;
  EXPECT_TRUE(verify_theorem5(q, K).passed());
  const auto [p0, p1] = pseudo_duals(q, K);
  EXPECT_EQ(d1_constant(split(p1).f0), true);
  const auto r = verify_theorem5(p1, K);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.front().name, "dual_f0 + dual_f1 = tr + 1");
  const auto e4 = bent_from_near_bent(parse("tr(x^3+x^5+x^7+x^11+x^19+x^21)", K), K);
  EXPECT_TRUE(verify_theorem5(e4, K).passed());
  EXPECT_EQ(code_of([&] { verify_theorem5(kasami_welch(K, 2).F, K); }), Errc::DerivativeNotConstant);
}

TEST(Theorem7, KasamiWelchDualOfPd1) {
  const FieldContext K(7);
  const auto F = kasami_welch(K, 2).F;
  EXPECT_TRUE(verify_theorem7(F, K).passed());
  const auto [p0, p1] = pseudo_duals(F, K);
  const auto dp1 = dual(p1, K);
  EXPECT_EQ(split(dp1).f0, parse("tr(1+x^5+x^7+x^9+x^11+x^19+x^21)", K));
  EXPECT_EQ(condition_flags(dp1, K).xi, true);
}

TEST(Theorem7, XiOneSwapsTheExpectedXi) {
  const FieldContext K(7);
  const auto f0 = parse("tr(x^3+x^9)", K);
  const auto F = join(f0, (f0 ^ trace_function(K)).complemented());
  ASSERT_EQ(walsh(F).cls, SpectrumClass::Bent);
  ASSERT_EQ(condition_flags(F, K).xi, true);
  const auto r = verify_theorem7(F, K);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.note.empty());
  const auto [p0, p1] = pseudo_duals(F, K);
  EXPECT_EQ(condition_flags(dual(p0, K), K).xi, true);
  EXPECT_EQ(condition_flags(dual(p1, K), K).xi, false);
}

TEST(Theorem7, RequiresConditionT) {
  const FieldContext K(7);
  const auto a = parse("tr(x^3+x^9)", K);
  const auto F = join(a, a ^ trace_function(K) ^ parse("tr(x^5)", K));
  if (walsh(F).cls == SpectrumClass::Bent) {
    EXPECT_EQ(code_of([&] { verify_theorem7(F, K); }), Errc::ConditionTNotMet);
  }
  EXPECT_EQ(code_of([&] { verify_theorem7(BooleanFunction(8), K); }), Errc::NotBent);
}

TEST(Lemma15, ZeroSets) {
  const FieldContext K(7);
  const auto gold = verify_lemma15(parse("tr(x^3)", K), K);
  EXPECT_TRUE(gold.passed());
  EXPECT_EQ(gold.checks.front().name, "f^(u) = 0 <=> tr(u) = 0");
  const auto q = verify_lemma15(parse("tr(x^3+x^9)", K), K);
  EXPECT_TRUE(q.passed());
  EXPECT_EQ(q.checks.front().name, "f^(u) = 0 <=> tr(u) = 1");
  EXPECT_EQ(code_of([&] { verify_lemma15(parse("tr(x^13)", K), K); }), Errc::DerivativeNotConstant);
}

TEST(KasamiWelch, Conditions) {
  const auto p = kasami_welch_params(4, 2);
  EXPECT_EQ(p.d, 13u);
  EXPECT_EQ(p.branch, -1);
  EXPECT_EQ(code_of([] { kasami_welch_params(4, 1); }), Errc::ConditionViolation);
  EXPECT_EQ(code_of([] { kasami_welch_params(5, 2); }), Errc::ConditionViolation);
  EXPECT_EQ(code_of([] { kasami_welch_params(4, 4); }), Errc::ConditionViolation);
  try {
    kasami_welch_params(5, 2);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("divisible by 3"), std::string::npos);
  }
  const FieldContext K(7);
  const auto fam = kasami_welch(K, 2);
  EXPECT_EQ(walsh(fam.F).cls, SpectrumClass::Bent);
  EXPECT_EQ(fam.exponents, (std::vector<std::uint64_t>{13}));
}

TEST(KasamiWelch, EveryValidParameterInSmallFields) {
  for (unsigned t : {2u, 3u, 4u, 6u, 7u}) {
    const FieldContext K(2 * t - 1);
    for (unsigned s = 1; s < t; ++s) {
      std::optional<KasamiWelchParams> p;
      try {
        p = kasami_welch_params(t, s);
      } catch (const Error&) {
        continue;
      }
      const auto fam = kasami_welch(K, s);
      EXPECT_EQ(walsh(fam.f0).cls, SpectrumClass::NearBent);
      EXPECT_TRUE(check_nearbent_distribution(walsh(fam.f0), fam.f0(0)));
      EXPECT_TRUE(verify_theorem7(fam.F, K).passed()) << t << "," << s;
    }
  }
}

TEST(Quadratic, Cases) {
  const FieldContext K(7);
  const auto q = quadratic_family(K, {1, 3});
  EXPECT_EQ(q.f0, parse("tr(x^3+x^9)", K));
  EXPECT_EQ(degree(q.F), 2u);
  EXPECT_EQ(d1_constant(q.f0), false);
  EXPECT_EQ(d1_constant(quadratic_family(K, {1}).f0), true);
  EXPECT_EQ(walsh(quadratic_family(K, {1}).F).cls, SpectrumClass::Bent);

  EXPECT_EQ(code_of([&] { quadratic_family(K, {}); }), Errc::InvalidExponentSet);
  EXPECT_EQ(code_of([&] { quadratic_family(K, {0}); }), Errc::InvalidExponentSet);
  EXPECT_EQ(code_of([&] { quadratic_family(K, {1, 6}); }), Errc::InvalidExponentSet);  // 65 ~ 3
  EXPECT_EQ(code_of([&] { quadratic_family(K, {9}); }), Errc::InvalidExponentSet);
}

TEST(Quadratic, EverySubsetEitherBentOrRejectedWithEvidence) {
  const FieldContext K(7);
  unsigned rejected = 0;
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::vector<unsigned> J;
    for (unsigned j = 1; j <= 3; ++j)
      if (mask >> (j - 1) & 1) J.push_back(j);
    std::vector<std::uint64_t> exps;
    for (auto j : J) exps.push_back((1u << j) + 1);
    const bool nb = walsh(trace_monomials(K, exps)).cls == SpectrumClass::NearBent;
    if (nb) {
      const auto q = quadratic_family(K, J);
      EXPECT_EQ(is_constant(derivative(q.f0, 1)), J.size() % 2 == 1);
      EXPECT_EQ(degree(dual(q.F, K)), 2u);
    } else {
      ++rejected;
      EXPECT_EQ(code_of([&] { quadratic_family(K, J); }), Errc::NotNearBent);
    }
  }
  (void)rejected;
}

TEST(SixPack, QuadraticAndExamples) {
  const FieldContext K(7);
  const auto q = six_pack(parse("tr(x^3+x^9)", K), K);
  EXPECT_EQ(q.pd0, q.dual_F);
  EXPECT_EQ(q.dual_pd0, q.F);
  for (const auto* f : q.members()) EXPECT_EQ(walsh(*f).cls, SpectrumClass::Bent);

  // The printed claims of full equality do not hold; these are the actual counts.
  EXPECT_EQ(six_pack(parse("tr(x^3+x^5+x^7+x^11+x^19+x^21)", K), K).distinct_count(), 3u);
  EXPECT_EQ(six_pack(parse("tr(x+x^3+x^7+x^11+x^19+x^21)", K), K).distinct_count(), 4u);
}

TEST(Collision, PseudoDualMapNotInjective) {
  const FieldContext K(7);
  const auto d = pseudo_dual_collision_demo(K);
  EXPECT_TRUE(d.F_a_bent);
  EXPECT_TRUE(d.F_b_bent);
  EXPECT_TRUE(d.duals_differ);
  EXPECT_TRUE(d.pd0_equal);
  EXPECT_EQ(code_of([] { pseudo_dual_collision_demo(FieldContext(5)); }), Errc::DimensionMismatch);
}

// Exhaustive over GF(2^5): every qualifying binary trace form and all its
// normalizations through every construction and checker.
TEST(Exhaustive, AllQualifyingFunctionsAtT3) {
  const FieldContext K(5);
  const auto tr = trace_function(K);
  const auto fs = qualifying_m5(K);
  ASSERT_FALSE(fs.empty());
  for (const auto& f : fs) {
    EXPECT_TRUE(verify_lemma15(f, K).passed());
    EXPECT_TRUE(check_nearbent_distribution(walsh(f), f(0)));
    const auto h = normalize_near_bent(f, K);
    EXPECT_EQ(d1_constant(h), false);
    EXPECT_FALSE(h(0));

    const auto p = six_pack(f, K);
    for (const auto* G : p.members()) {
      const auto fl = condition_flags(*G, K);
      EXPECT_TRUE(verify_prop16(*G, K).passed());
      if (fl.xi == false) {
        EXPECT_TRUE(verify_theorem2(*G, K).passed());
        EXPECT_TRUE(dual_support_analysis(*G, K).passed());
        if (fl.d1_f0) {
          EXPECT_TRUE(verify_theorem5(*G, K).passed());
        }
      }
      if (fl.has_T()) {
        EXPECT_TRUE(verify_theorem7(*G, K).passed());
      }
    }
    EXPECT_EQ(join(f, f ^ tr), p.F);
  }
}

TEST(Exhaustive, QuadraticSubsetsAtT3) {
  const FieldContext K(5);
  for (const auto& J : std::vector<std::vector<unsigned>>{{1}, {2}, {1, 2}}) {
    std::vector<std::uint64_t> exps;
    for (auto j : J) exps.push_back((1u << j) + 1);
    if (walsh(trace_monomials(K, exps)).cls != SpectrumClass::NearBent) continue;
    const auto q = quadratic_family(K, J);
    const auto p = six_pack(q.f0, K);
    EXPECT_TRUE(verify_theorem2(p.F, K).passed());
    EXPECT_TRUE(verify_theorem5(p.F, K).passed());
    EXPECT_TRUE(verify_theorem7(p.F, K).passed());
    EXPECT_TRUE(dual_support_analysis(p.F, K).passed());
  }
}

TEST(Search, FindsConstantDerivativeNearBent) {
  const FieldContext K(7);
  const auto hits = search_constant_derivative_nearbent(K, {1, 3, 5, 7, 9, 11}, 2);
  bool has_3_9 = false;
  for (const auto& h : hits) {
    EXPECT_TRUE(d1_constant(trace_monomials(K, h)).has_value());
    has_3_9 = has_3_9 || h == std::vector<std::uint64_t>{3, 9};
  }
  EXPECT_TRUE(has_3_9);
}

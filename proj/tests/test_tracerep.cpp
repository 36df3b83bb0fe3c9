#include <gtest/gtest.h>

#include <random>

#include "bentkit/bentkit.hpp"
#include "oracles.hpp"

using namespace bentkit;

namespace {

std::mt19937_64 rng(31337);

Errc code_of(const std::string& expr, const FieldContext& K) {
  try {
    parse(expr, K);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::FormatError;  // sentinel: no error
}

}  // namespace

TEST(Parse, Constants) {
  const FieldContext K(7);
  EXPECT_EQ(parse("0", K), BooleanFunction(7));
  EXPECT_EQ(parse("1", K), BooleanFunction(7, true));
  EXPECT_EQ(parse("tr(x)", K), trace_function(K));
}

TEST(Parse, KasamiWelchIsNearBent) {
  const FieldContext K(7);
  EXPECT_EQ(walsh(parse("tr(x^13)", K)).cls, SpectrumClass::NearBent);
}

TEST(Parse, TraceOfOneIsOneInOddDimension) {
  const FieldContext K(7);
  const auto a = parse("tr(x^5+1)", K);
  EXPECT_EQ(a, parse("tr(x^5)+tr(1)", K));
  EXPECT_EQ(a, parse("tr(x^5)+1", K));
  EXPECT_EQ(parse("tr(x^{13})", K), parse("tr(x^13)", K));
  EXPECT_EQ(parse(" tr( x^3 + x^9 ) ", K), parse("tr(x^3+x^9)", K));
}

TEST(Parse, ConjugateExponentsAgree) {
  const FieldContext K(7);
  EXPECT_EQ(parse("tr(x^13)", K), parse("tr(x^104)", K));
  EXPECT_EQ(parse("tr(x^13+x^26)", K), BooleanFunction(7));
}

TEST(Parse, PointwiseEvaluation) {
  const FieldContext K(7);
  const auto f = parse("tr(x^7+x^13)+1", K);
  for (Element x = 0; x < 128; ++x) ASSERT_EQ(f(x), !(K.trace(K.pow(x, 7)) != K.trace(K.pow(x, 13))));
}

TEST(Parse, Errors) {
  const FieldContext K(7);
  EXPECT_EQ(code_of("tr(x^", K), Errc::ParseError);
  EXPECT_EQ(code_of("tr(x^3", K), Errc::ParseError);
  EXPECT_EQ(code_of("tr(y)", K), Errc::ParseError);
  EXPECT_EQ(code_of("", K), Errc::ParseError);
  EXPECT_EQ(code_of("tr(x^3)+", K), Errc::ParseError);
  EXPECT_EQ(code_of("2", K), Errc::ParseError);
  EXPECT_EQ(code_of("x^3", K), Errc::ParseError);  // not Boolean-valued
  EXPECT_EQ(code_of("tr(x^-3)", K), Errc::ExponentOutOfRange);
  try {
    parse("tr(x^3)+tr(x^", K);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
}

TEST(MattsonSolomon, ConstantZeroAndTrace) {
  const FieldContext K(5);
  for (auto c : mattson_solomon(BooleanFunction(5), K)) EXPECT_EQ(c, 0u);
  const auto c = mattson_solomon(trace_function(K), K);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool power_of_two = i != 0 && (i & (i - 1)) == 0 && i < 32;
    EXPECT_EQ(c[i], power_of_two ? 1u : 0u) << i;
  }
}

TEST(MattsonSolomon, PolynomialReproducesFunction) {
  for (unsigned m : {3u, 5u, 6u}) {
    const FieldContext K(m);
    for (int r = 0; r < 20; ++r) {
      const auto f = oracle::random_function(m, rng);
      const auto c = mattson_solomon(f, K);
      for (Element x = 0; x < K.size(); ++x) {
        Element v = 0;
        for (std::size_t i = 0; i < c.size(); ++i) v ^= K.mul(c[i], K.pow(x, i));
        ASSERT_EQ(v, f(x) ? 1u : 0u) << "m=" << m << " x=" << x;
      }
      for (std::size_t i = 1; i < K.order(); ++i) ASSERT_EQ(c[(2 * i) % K.order()], K.square(c[i]));
    }
  }
}

TEST(TraceForm, PaperForms) {
  const FieldContext K(7);
  const auto tf = to_trace_form(parse("tr(x^7+x^11+x^19+x^21)", K), K);
  EXPECT_FALSE(tf.constant);
  EXPECT_TRUE(tf.is_binary());
  EXPECT_EQ(tf.leaders(), (std::vector<std::uint64_t>{7, 11, 19, 21}));
  EXPECT_EQ(format(tf, K), "tr(x^7+x^11+x^19+x^21)");

  const auto t9 = to_trace_form(parse("tr(x^9)+1", K), K);
  EXPECT_TRUE(t9.constant);
  EXPECT_EQ(t9.leaders(), (std::vector<std::uint64_t>{9}));
  EXPECT_EQ(format(t9, K), "1+tr(x^9)");

  EXPECT_EQ(format(to_trace_form(BooleanFunction(7, true), K), K), "1");
  EXPECT_EQ(format(to_trace_form(BooleanFunction(7), K), K), "0");
}

TEST(TraceForm, QuadraticDualPrintsAsPaper) {
  const FieldContext K(7);
  const auto F = bent_from_near_bent(parse("tr(x^3+x^9)", K), K);
  const auto d0 = split(dual(F, K)).f0;
  EXPECT_EQ(to_trace_form(d0, K), TraceForm::from_exponents(7, false, {9, 1}));
  EXPECT_EQ(format(to_trace_form(d0, K), K), "tr(x+x^9)");
}

TEST(TraceForm, FromExponentsMatchesCosetMembership) {
  EXPECT_EQ(TraceForm::from_exponents(7, false, {21}), TraceForm::from_exponents(7, false, {coset_leader(21, 7)}));
  EXPECT_EQ(TraceForm::from_exponents(7, false, {5, 0}), TraceForm::from_exponents(7, true, {5}));
  EXPECT_EQ(TraceForm::from_exponents(7, false, {13, 26}).terms.size(), 0u);
}

TEST(TraceForm, RoundTripRandomFunctions) {
  for (unsigned m : {4u, 5u, 6u, 7u, 8u}) {
    const FieldContext K(m);
    for (int r = 0; r < 25; ++r) {
      const auto f = oracle::random_function(m, rng);
      const auto tf = to_trace_form(f, K);
      ASSERT_EQ(evaluate(tf, K), f) << "m=" << m;
      ASSERT_EQ(to_trace_form(evaluate(tf, K), K), tf);
    }
  }
}

TEST(TraceForm, NonBinaryCoefficientsFormatAndStillRoundTrip) {
  const FieldContext K(5);
  const auto f = BooleanFunction::from_fn(5, [&](std::uint64_t x) { return K.trace(K.mul(K.alpha_pow(3), K.pow(x, 3))); });
  const auto tf = to_trace_form(f, K);
  EXPECT_FALSE(tf.is_binary());
  EXPECT_NE(format(tf, K).find("α^"), std::string::npos);
  EXPECT_EQ(evaluate(tf, K), f);
}

TEST(TraceForm, FormatParsesBackForBinaryForms) {
  const FieldContext K(7);
  for (const char* e : {"tr(x^13)", "1+tr(x^5+x^7+x^9+x^11+x^19+x^21)", "tr(x+x^3+x^7+x^11+x^19+x^21)", "1"}) {
    const auto f = parse(e, K);
    const auto text = format(to_trace_form(f, K), K);
    EXPECT_EQ(parse(text, K), f) << text;
  }
}

TEST(TraceForm, OddWeightUsesTopTerm) {
  const FieldContext K(5);
  BooleanFunction f(5);
  f.set(0, true);  // indicator of zero: 1 + x^31
  const auto tf = to_trace_form(f, K);
  EXPECT_TRUE(tf.top);
  EXPECT_TRUE(tf.constant);
  EXPECT_EQ(evaluate(tf, K), f);
  EXPECT_EQ(parse(format(tf, K), K), f);
}

TEST(TraceForm, DegreeIsMaxLeaderWeight) {
  const FieldContext K(7);
  for (int r = 0; r < 30; ++r) {
    std::vector<std::uint64_t> exps;
    for (auto k : coset_leaders(7))
      if (k != 0 && (rng() & 3) == 0) exps.push_back(k);
    const auto f = trace_monomials(K, exps);
    unsigned want = 0;
    for (auto k : exps) want = std::max<unsigned>(want, std::popcount(k));
    EXPECT_EQ(degree(f), want);
  }
}

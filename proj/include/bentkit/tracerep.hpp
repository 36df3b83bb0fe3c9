#pragma once

// Trace notation for Boolean functions on GF(2^m).
//
// A Boolean function f on the field has the unique representation
//
//   f(x) = c + sum_k Tr_1^{s_k}(A_k x^k) + e x^(2^m - 1)
//
// with k running over nonzero cyclotomic coset leaders, s_k the coset size
// and A_k in GF(2^{s_k}). TraceForm stores (c, {k: A_k}, e); the
// coefficients come from the Mattson-Solomon polynomial of f.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bentkit/boolfn.hpp"
#include "bentkit/error.hpp"
#include "bentkit/gf2m.hpp"

namespace bentkit {

struct TraceForm {
  unsigned m = 0;
  bool constant = false;
  /// coset leader -> nonzero coefficient in GF(2^{coset size})
  std::map<std::uint64_t, Element> terms;
  /// coefficient of x^(2^m - 1), the indicator of x != 0
  bool top = false;

  /// All coefficients are 1 and every coset is full length, i.e. the form
  /// reads as c + tr(x^a + x^b + ...).
  bool is_binary() const {
    for (const auto& [k, c] : terms)
      if (c != 1 || coset_of(k, m).size() != m) return false;
    return true;
  }

  std::vector<std::uint64_t> leaders() const {
    std::vector<std::uint64_t> out;
    for (const auto& kv : terms) out.push_back(kv.first);
    return out;
  }

  /// Canonical form of c + tr(x^e1 + x^e2 + ...) with exponents taken as
  /// written; exponents in the same coset cancel pairwise.
  static TraceForm from_exponents(unsigned m, bool constant, const std::vector<std::uint64_t>& exponents) {
    TraceForm tf;
    tf.m = m;
    tf.constant = constant;
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    for (auto e : exponents) {
      if (e == 0) {
        tf.constant ^= (m & 1) != 0;  // tr(1) = m mod 2
        continue;
      }
      if (e % n == 0) {
        tf.top ^= (m & 1) != 0;
        continue;
      }
      const auto k = coset_leader(e, m);
      // tr(x^k) = Tr_1^s((m/s) x^k) for a coset of size s
      if ((m / coset_of(k, m).size()) % 2 == 0) continue;
      auto it = tf.terms.find(k);
      if (it == tf.terms.end())
        tf.terms.emplace(k, 1);
      else
        tf.terms.erase(it);
    }
    return tf;
  }

  friend bool operator==(const TraceForm&, const TraceForm&) = default;
};

namespace detail {

// Tr_1^s(y) for y in GF(2^s) embedded in the field of ctx.
inline bool subfield_trace(const FieldContext& ctx, Element y, std::size_t s) {
  if (s == ctx.m()) return ctx.trace(y);
  Element acc = 0;
  for (std::size_t j = 0; j < s; ++j) {
    acc ^= y;
    y = ctx.square(y);
  }
  if (acc > 1) throw Error(Errc::NotBooleanConsistent, "subfield trace left F_2");
  return acc != 0;
}

}  // namespace detail

inline BooleanFunction evaluate(const TraceForm& tf, const FieldContext& ctx) {
  if (tf.m != ctx.m()) throw Error(Errc::DimensionMismatch, "trace form vs field");
  struct Term {
    std::uint64_t k;
    Element coeff;
    std::size_t s;
  };
  std::vector<Term> terms;
  for (const auto& [k, c] : tf.terms) terms.push_back({k, c, coset_of(k, tf.m).size()});
  return BooleanFunction::from_fn(ctx.m(), [&](std::uint64_t xi) {
    const auto x = static_cast<Element>(xi);
    bool v = tf.constant;
    if (x == 0) return v;
    v ^= tf.top;
    for (const auto& t : terms) v ^= detail::subfield_trace(ctx, ctx.mul(t.coeff, ctx.pow(x, t.k)), t.s);
    return v;
  });
}

/// Coefficients c_0..c_{2^m - 1} of the unique polynomial of degree below
/// 2^m agreeing with f on the whole field. Direct O(4^m) summation.
inline std::vector<Element> mattson_solomon(const BooleanFunction& f, const FieldContext& ctx) {
  if (f.dim() != ctx.m()) throw Error(Errc::DimensionMismatch, "function vs field");
  const std::uint64_t n = ctx.order();
  std::vector<std::uint64_t> support_logs;
  for (std::uint64_t i = 0; i < n; ++i)
    if (f(ctx.alpha_pow(i))) support_logs.push_back(i);
  std::vector<Element> c(n + 1, 0);
  for (std::uint64_t k = 0; k < n; ++k) {
    Element d = 0;
    for (auto i : support_logs) d ^= ctx.alpha_pow((n - (i * k) % n) % n);
    c[k] = d;
  }
  // For x != 0 the sum over k < n reproduces f; x^n patches the value at 0.
  const Element d0 = c[0];
  c[0] = f(0) ? 1 : 0;
  c[n] = d0 ^ c[0];
  return c;
}

inline TraceForm to_trace_form(const BooleanFunction& f, const FieldContext& ctx) {
  if (f.dim() != ctx.m()) throw Error(Errc::DimensionMismatch, "function vs field");
  const unsigned m = ctx.m();
  const std::uint64_t n = ctx.order();
  std::vector<std::uint64_t> support_logs;
  for (std::uint64_t i = 0; i < n; ++i)
    if (f(ctx.alpha_pow(i))) support_logs.push_back(i);

  TraceForm tf;
  tf.m = m;
  tf.constant = f(0);
  tf.top = ((support_logs.size() & 1) != 0) != tf.constant;
  for (auto k : coset_leaders(m)) {
    if (k == 0) continue;
    Element d = 0;
    for (auto i : support_logs) d ^= ctx.alpha_pow((n - (i * k) % n) % n);
    if (d == 0) continue;
    const std::size_t s = coset_of(k, m).size();
    Element frob = d;
    for (std::size_t j = 0; j < s; ++j) frob = ctx.square(frob);
    if (frob != d)
      throw Error(Errc::NotBooleanConsistent, "coefficient of coset " + std::to_string(k) + " not in GF(2^" +
                                                  std::to_string(s) + ")");
    tf.terms.emplace(k, d);
  }
  return tf;
}

/// Canonical text: "1+tr(x+x^3+α^5·x^7)+x^127"-style, terms by ascending
/// leader; non-unit coefficients print as α^k·x^e and short cosets use
/// tr_s(...).
inline std::string format(const TraceForm& tf, const FieldContext& ctx) {
  auto mono = [](std::uint64_t k) { return k == 1 ? std::string("x") : "x^" + std::to_string(k); };
  std::vector<std::string> parts;
  if (tf.constant) parts.emplace_back("1");
  std::string full;
  std::vector<std::string> short_blocks;
  for (const auto& [k, c] : tf.terms) {
    std::string term = c == 1 ? mono(k) : "α^" + std::to_string(ctx.log(c)) + "·" + mono(k);
    const std::size_t s = coset_of(k, tf.m).size();
    if (s == tf.m) {
      if (!full.empty()) full += "+";
      full += term;
    } else {
      short_blocks.push_back("tr_" + std::to_string(s) + "(" + term + ")");
    }
  }
  if (!full.empty()) parts.push_back("tr(" + full + ")");
  for (auto& b : short_blocks) parts.push_back(std::move(b));
  if (tf.top) parts.push_back("x^" + std::to_string(ctx.order()));
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "+";
    out += p;
  }
  return out;
}

// ---- expression parser ----------------------------------------------------
//
//   expr  := term ('+' term)*
//   term  := '0' | '1' | 'tr' '(' inner ')' | mono
//   inner := item ('+' item)*
//   item  := '0' | '1' | mono
//   mono  := 'x' ['^' (int | '{' int '}')]
//
// Outside tr(...) a monomial must be Boolean valued: x^0 or x^(k(2^m-1)).

namespace detail {

struct ParsedExpr {
  bool constant = false;
  std::map<std::uint64_t, bool> traced;  // exponent -> odd multiplicity
  std::map<std::uint64_t, bool> bare;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, unsigned m) : s_(text), m_(m) {}

  ParsedExpr parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    term();
    skip_ws();
    while (pos_ < s_.size()) {
      expect('+');
      term();
      skip_ws();
    }
    return out_;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t integer() {
    skip_ws();
    if (peek('-')) throw Error(Errc::ExponentOutOfRange, "negative exponent at position " + std::to_string(pos_));
    std::uint64_t v = 0;
    const char* first = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
    if (ec == std::errc::result_out_of_range)
      throw Error(Errc::ExponentOutOfRange, "exponent too large at position " + std::to_string(pos_));
    if (ec != std::errc()) fail("expected exponent");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::uint64_t monomial() {
    expect('x');
    if (!peek('^')) return 1;
    ++pos_;
    if (peek('{')) {
      ++pos_;
      const auto e = integer();
      expect('}');
      return e;
    }
    return integer();
  }

  void term() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      out_.constant ^= c == '1';
      return;
    }
    if (s_.substr(pos_, 2) == "tr") {
      pos_ += 2;
      expect('(');
      item();
      while (peek('+')) {
        ++pos_;
        item();
      }
      expect(')');
      return;
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      const auto e = monomial();
      const std::uint64_t n = (std::uint64_t{1} << m_) - 1;
      if (e != 0 && e % n != 0) {
        pos_ = at;
        fail("x^" + std::to_string(e) + " is not Boolean valued outside tr()");
      }
      if (e == 0)
        out_.constant ^= true;
      else
        out_.bare[e] ^= true;
      return;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  void item() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end inside tr()");
    const char c = s_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      if (c == '1') out_.traced[0] ^= true;
      return;
    }
    if (c == 'x') {
      out_.traced[monomial()] ^= true;
      return;
    }
    fail(std::string("unexpected '") + c + "' inside tr()");
  }

  std::string_view s_;
  unsigned m_;
  std::size_t pos_ = 0;
  ParsedExpr out_;
};

}  // namespace detail

inline BooleanFunction parse(std::string_view expr, const FieldContext& ctx) {
  const auto p = detail::ExprParser(expr, ctx.m()).parse();
  std::vector<std::uint64_t> traced, bare;
  for (const auto& [e, odd] : p.traced)
    if (odd) traced.push_back(e);
  for (const auto& [e, odd] : p.bare)
    if (odd) bare.push_back(e);
  return BooleanFunction::from_fn(ctx.m(), [&](std::uint64_t xi) {
    const auto x = static_cast<Element>(xi);
    Element sum = 0;
    for (auto e : traced) sum ^= ctx.pow(x, e);
    bool v = p.constant != ctx.trace(sum);
    for (auto e : bare) v ^= ctx.pow(x, e) != 0;
    return v;
  });
}

}  // namespace bentkit

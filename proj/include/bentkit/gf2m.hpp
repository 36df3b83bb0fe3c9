#pragma once

// Finite fields GF(2^m), 2 <= m <= 24, in polynomial basis: bit i of an
// element is the coefficient of alpha^i, alpha a root of the primitive
// polynomial.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bentkit/error.hpp"

namespace bentkit {

using Element = std::uint32_t;

inline constexpr unsigned kMinFieldDim = 2;
inline constexpr unsigned kMaxFieldDim = 24;

/// Pinned primitive polynomials, indexed by m (entries below 2 unused).
/// Bit i is the coefficient of x^i.
inline constexpr std::array<std::uint32_t, 25> kDefaultPrimitivePolys = {
    0x0,       0x0,       0x7,        0xB,       0x13,      0x25,     0x43,
    0x83,      0x11D,     0x211,      0x409,     0x805,     0x1053,   0x201B,
    0x4443,    0x8003,    0x1100B,    0x20009,   0x40081,   0x80027,  0x100009,
    0x200005,  0x400003,  0x800021,   0x1000087,
};

inline std::uint32_t default_primitive_poly(unsigned m) {
  if (m < kMinFieldDim || m > kMaxFieldDim)
    throw Error(Errc::DimensionOutOfRange, "field dimension " + std::to_string(m) + " not in [2, 24]");
  return kDefaultPrimitivePolys[m];
}

/// Smallest element of the 2-cyclotomic coset of e modulo 2^m - 1.
/// Doubling mod 2^m - 1 rotates the m-bit pattern, so the leader is the
/// minimal rotation.
inline std::uint64_t coset_leader(std::uint64_t e, unsigned m) {
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  e %= n;
  std::uint64_t best = e, cur = e;
  for (unsigned k = 1; k < m; ++k) {
    cur = ((cur << 1) | (cur >> (m - 1))) & n;
    if (cur < best) best = cur;
  }
  return best;
}

struct CyclotomicCoset {
  std::uint64_t leader = 0;
  std::vector<std::uint64_t> members;  // sorted

  std::size_t size() const noexcept { return members.size(); }
};

inline CyclotomicCoset coset_of(std::uint64_t e, unsigned m) {
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  CyclotomicCoset c;
  std::uint64_t cur = e % n;
  do {
    c.members.push_back(cur);
    cur = (cur * 2) % n;
  } while (cur != e % n);
  std::sort(c.members.begin(), c.members.end());
  c.leader = c.members.front();
  return c;
}

/// Partition of {0, ..., 2^m - 2} into cyclotomic cosets, sorted by leader.
inline std::vector<CyclotomicCoset> cyclotomic_cosets(unsigned m) {
  if (m < kMinFieldDim || m > kMaxFieldDim)
    throw Error(Errc::DimensionOutOfRange, "coset dimension " + std::to_string(m));
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  std::vector<bool> seen(n, false);
  std::vector<CyclotomicCoset> out;
  for (std::uint64_t e = 0; e < n; ++e) {
    if (seen[e]) continue;
    out.push_back(coset_of(e, m));
    for (auto x : out.back().members) seen[x] = true;
  }
  return out;
}

/// Coset leaders only; cheaper than materializing every member.
inline std::vector<std::uint64_t> coset_leaders(unsigned m) {
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = 0; e < n; ++e)
    if (coset_leader(e, m) == e) out.push_back(e);
  return out;
}

class FieldContext {
 public:
  explicit FieldContext(unsigned m, std::optional<std::uint32_t> primitive_poly = std::nullopt)
      : m_(m) {
    if (m < kMinFieldDim || m > kMaxFieldDim)
      throw Error(Errc::DimensionOutOfRange, "field dimension " + std::to_string(m) + " not in [2, 24]");
    poly_ = primitive_poly ? *primitive_poly : kDefaultPrimitivePolys[m];
    if (std::bit_width(poly_) != m + 1)
      throw Error(Errc::DimensionMismatch,
                  "polynomial degree " + std::to_string(std::bit_width(poly_) - 1) + " != " + std::to_string(m));
    build_tables();
    build_trace();
  }

  unsigned m() const noexcept { return m_; }
  std::uint32_t primitive_poly() const noexcept { return poly_; }
  /// Number of field elements, 2^m.
  std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }
  /// Multiplicative group order, 2^m - 1.
  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(size() - 1); }

  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= order()) e -= order();
    return antilog_[e];
  }

  Element square(Element a) const noexcept { return mul(a, a); }

  /// a^e; pow(0, 0) is 1 by the empty-product convention.
  Element pow(Element a, std::uint64_t e) const noexcept {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t k = (std::uint64_t{log_[a]} * (e % order())) % order();
    return antilog_[k];
  }

  Element inverse(Element a) const {
    if (a == 0) throw Error(Errc::DimensionMismatch, "zero has no inverse");
    return antilog_[(order() - log_[a]) % order()];
  }

  /// alpha^k for any k >= 0.
  Element alpha_pow(std::uint64_t k) const noexcept { return antilog_[k % order()]; }
  /// Discrete log of a nonzero element.
  std::uint32_t log(Element a) const noexcept { return log_[a]; }

  bool trace(Element a) const noexcept { return trace_table_[a]; }

  /// Bit j is tr(alpha^j); tr(a) is the parity of a & trace_mask().
  std::uint32_t trace_mask() const noexcept { return trace_mask_; }

  /// Row i of the Gram matrix of the trace form: bit j = tr(alpha^i alpha^j).
  std::uint32_t gram_row(unsigned i) const noexcept { return gram_[i]; }
  bool gram(unsigned i, unsigned j) const noexcept { return (gram_[i] >> j) & 1u; }

  /// The point u with <u, x> = tr(a x) for every x, <,> the coordinate dot
  /// product.
  Element dual_index(Element a) const noexcept {
    Element u = 0;
    while (a != 0) {
      u ^= gram_[std::countr_zero(a)];
      a &= a - 1;
    }
    return u;
  }

  /// tr(a) = a + a^2 + ... + a^(2^(m-1)), evaluated by repeated squaring.
  /// Used to seed the trace table and as a test oracle.
  Element trace_by_definition(Element a) const noexcept {
    Element s = 0, y = a;
    for (unsigned i = 0; i < m_; ++i) {
      s ^= y;
      y = square(y);
    }
    return s;
  }

  std::string describe() const {
    return "GF(2^" + std::to_string(m_) + ") poly=0x" + hex(poly_);
  }

 private:
  static std::string hex(std::uint32_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    do {
      s.insert(s.begin(), digits[v & 0xF]);
      v >>= 4;
    } while (v != 0);
    return s;
  }

  void build_tables() {
    const std::uint32_t n = order();
    log_.assign(size(), 0);
    antilog_.assign(n, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      // Returning to 1 before 2^m - 1 steps means alpha has smaller order.
      if (i > 0 && x == 1)
        throw Error(Errc::NonPrimitivePolynomial, "0x" + hex(poly_) + " has root of order " + std::to_string(i));
      antilog_[i] = x;
      log_[x] = i;
      x <<= 1;
      if (x >> m_) x ^= poly_;
      if (x == 0)
        throw Error(Errc::NonPrimitivePolynomial, "0x" + hex(poly_) + " is divisible by x");
    }
    if (x != 1)
      throw Error(Errc::NonPrimitivePolynomial, "0x" + hex(poly_) + " does not generate the group");
  }

  void build_trace() {
    trace_mask_ = 0;
    for (unsigned j = 0; j < m_; ++j) {
      const Element t = trace_by_definition(Element{1} << j);
      if (t > 1) throw Error(Errc::NonPrimitivePolynomial, "trace left F_2");
      trace_mask_ |= t << j;
    }
    trace_table_.assign(size(), false);
    for (std::uint64_t a = 0; a < size(); ++a)
      trace_table_[a] = std::popcount(static_cast<std::uint32_t>(a) & trace_mask_) & 1;
    gram_.assign(m_, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j)
        if (trace(alpha_pow(i + j))) gram_[i] |= std::uint32_t{1} << j;
  }

  unsigned m_;
  std::uint32_t poly_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
  std::vector<bool> trace_table_;
  std::uint32_t trace_mask_ = 0;
  std::vector<std::uint32_t> gram_;
};

}  // namespace bentkit

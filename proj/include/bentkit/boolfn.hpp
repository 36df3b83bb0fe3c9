#pragma once

// Boolean functions as packed truth tables. Bit x of the table is F(x);
// within 64-bit words, index x sits at bit (x % 64) of word x / 64.

#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "bentkit/error.hpp"
#include "bentkit/gf2m.hpp"

namespace bentkit {

inline constexpr unsigned kMaxBoolDim = 25;

class BooleanFunction {
 public:
  BooleanFunction() = default;

  explicit BooleanFunction(unsigned m, bool value = false) : m_(m) {
    if (m > kMaxBoolDim)
      throw Error(Errc::DimensionOutOfRange, "boolean function dimension " + std::to_string(m));
    words_.assign(word_count(m), value ? ~std::uint64_t{0} : 0);
    trim();
  }

  /// Tabulates fn(x) for x in [0, 2^m).
  template <class Fn>
  static BooleanFunction from_fn(unsigned m, Fn&& fn) {
    BooleanFunction f(m);
    for (std::uint64_t x = 0; x < f.size(); ++x)
      if (fn(x)) f.words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    return f;
  }

  /// Little-endian bytes: index 0 is the lowest bit of byte 0.
  static BooleanFunction from_bytes(unsigned m, std::span<const std::uint8_t> bytes) {
    BooleanFunction f(m);
    if (bytes.size() != f.byte_count())
      throw Error(Errc::FormatError, "expected " + std::to_string(f.byte_count()) + " bytes for m=" +
                                         std::to_string(m) + ", got " + std::to_string(bytes.size()));
    for (std::size_t i = 0; i < bytes.size(); ++i)
      f.words_[i / 8] |= std::uint64_t{bytes[i]} << (8 * (i % 8));
    const auto before = f.words_;
    f.trim();
    if (before != f.words_) throw Error(Errc::FormatError, "bits set beyond 2^m");
    return f;
  }

  unsigned dim() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }
  std::size_t byte_count() const noexcept { return m_ >= 3 ? std::size_t{1} << (m_ - 3) : 1; }

  bool operator()(std::uint64_t x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  bool get(std::uint64_t x) const noexcept { return (*this)(x); }

  void set(std::uint64_t x, bool v) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (v)
      words_[x >> 6] |= bit;
    else
      words_[x >> 6] &= ~bit;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::vector<std::uint8_t> to_bytes() const {
    std::vector<std::uint8_t> out(byte_count());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (8 * (i % 8)));
    return out;
  }

  BooleanFunction& operator^=(const BooleanFunction& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend BooleanFunction operator^(BooleanFunction a, const BooleanFunction& b) { return a ^= b; }

  /// f + c for a constant bit c.
  BooleanFunction complemented(bool c = true) const {
    BooleanFunction r = *this;
    if (c) {
      for (auto& w : r.words_) w = ~w;
      r.trim();
    }
    return r;
  }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

  void require_same_dim(const BooleanFunction& o) const {
    if (o.m_ != m_)
      throw Error(Errc::DimensionMismatch, "dimensions " + std::to_string(m_) + " and " + std::to_string(o.m_));
  }

 private:
  static std::size_t word_count(unsigned m) { return m >= 6 ? std::size_t{1} << (m - 6) : 1; }

  void trim() noexcept {
    if (m_ < 6) words_[0] &= (std::uint64_t{1} << size()) - 1;
  }

  unsigned m_ = 0;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

inline std::uint64_t weight(const BooleanFunction& f) {
  std::uint64_t w = 0;
  for (auto word : f.words()) w += std::popcount(word);
  return w;
}

inline BooleanFunction add(const BooleanFunction& f, const BooleanFunction& g) { return f ^ g; }

/// D_e f(x) = f(x) + f(x + e), addition in F_2^m being XOR of coordinates.
inline BooleanFunction derivative(const BooleanFunction& f, std::uint64_t e) {
  if (e >= f.size()) throw Error(Errc::DimensionMismatch, "direction outside F_2^m");
  return BooleanFunction::from_fn(f.dim(), [&](std::uint64_t x) { return f(x) != f(x ^ e); });
}

inline std::optional<bool> is_constant(const BooleanFunction& f) {
  const auto w = weight(f);
  if (w == 0) return false;
  if (w == f.size()) return true;
  return std::nullopt;
}

/// Algebraic normal form: coefficient of the monomial prod_{i in mask} x_i.
struct Anf {
  unsigned m = 0;
  BooleanFunction coefficients;

  unsigned degree() const {
    unsigned d = 0;
    for (std::uint64_t mask = 0; mask < coefficients.size(); ++mask)
      if (coefficients(mask)) d = std::max<unsigned>(d, std::popcount(mask));
    return d;
  }
};

namespace detail {

// In-place binary Moebius transform over packed words. It is its own inverse.
inline void moebius_words(std::vector<std::uint64_t>& w, unsigned m) {
  static constexpr std::uint64_t kMask[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
  };
  const unsigned inner = m < 6 ? m : 6;
  for (auto& word : w)
    for (unsigned i = 0; i < inner; ++i) word ^= (word & kMask[i]) << (1u << i);
  for (std::size_t step = 1; step < w.size(); step <<= 1)
    for (std::size_t j = 0; j < w.size(); ++j)
      if ((j & step) == 0) w[j + step] ^= w[j];
}

}  // namespace detail

inline BooleanFunction moebius(const BooleanFunction& f) {
  std::vector<std::uint64_t> w(f.words().begin(), f.words().end());
  detail::moebius_words(w, f.dim());
  std::vector<std::uint8_t> bytes(f.byte_count());
  for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] = static_cast<std::uint8_t>(w[i / 8] >> (8 * (i % 8)));
  return BooleanFunction::from_bytes(f.dim(), bytes);
}

inline Anf anf(const BooleanFunction& f) { return Anf{f.dim(), moebius(f)}; }

/// Algebraic degree; the zero function has degree 0.
inline unsigned degree(const BooleanFunction& f) { return anf(f).degree(); }

/// x -> tr(a x) + c on the field of ctx.
inline BooleanFunction linear_form(const FieldContext& ctx, Element a, bool c = false) {
  const std::uint32_t u = ctx.dual_index(a);
  return BooleanFunction::from_fn(ctx.m(), [&](std::uint64_t x) {
    return ((std::popcount(static_cast<std::uint32_t>(x) & u) & 1) != 0) != c;
  });
}

inline BooleanFunction trace_function(const FieldContext& ctx) { return linear_form(ctx, 1); }

/// f(x) + tr(a x) + c.
inline BooleanFunction add_linear_form(const BooleanFunction& f, const FieldContext& ctx, Element a, bool c) {
  if (f.dim() != ctx.m())
    throw Error(Errc::DimensionMismatch, "function dim " + std::to_string(f.dim()) + " vs field " +
                                             std::to_string(ctx.m()));
  return f ^ linear_form(ctx, a, c);
}

// ---- truth-table text format ---------------------------------------------
//
//   BF m=<dim>
//   <hex of little-endian table bytes, 32 bytes per line>

inline std::string to_hex(const BooleanFunction& f) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  for (auto b : f.to_bytes()) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xF]);
  }
  return s;
}

inline BooleanFunction from_hex(unsigned m, std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::vector<std::uint8_t> bytes;
  int hi = -1;
  for (char c : hex) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    const int v = nibble(c);
    if (v < 0) throw Error(Errc::FormatError, std::string("bad hex digit '") + c + "'");
    if (hi < 0) {
      hi = v;
    } else {
      bytes.push_back(static_cast<std::uint8_t>(hi << 4 | v));
      hi = -1;
    }
  }
  if (hi >= 0) throw Error(Errc::FormatError, "odd number of hex digits");
  return BooleanFunction::from_bytes(m, bytes);
}

inline void write_table(std::ostream& os, const BooleanFunction& f) {
  os << "BF m=" << f.dim() << '\n';
  const std::string hex = to_hex(f);
  for (std::size_t i = 0; i < hex.size(); i += 64) os << hex.substr(i, 64) << '\n';
}

inline BooleanFunction read_table(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("BF m=", 0) != 0)
    throw Error(Errc::FormatError, "missing 'BF m=<dim>' header");
  unsigned m = 0;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(header.substr(5), &used);
    if (used != header.size() - 5 && header.find_first_not_of(" \r", 5 + used) != std::string::npos)
      throw Error(Errc::FormatError, "trailing text in header");
    m = static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw Error(Errc::FormatError, "bad dimension in header '" + header + "'");
  }
  if (m > kMaxBoolDim) throw Error(Errc::DimensionOutOfRange, "dimension " + std::to_string(m));
  std::ostringstream rest;
  rest << is.rdbuf();
  return from_hex(m, rest.str());
}

}  // namespace bentkit

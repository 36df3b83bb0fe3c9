#pragma once

// Walsh-Hadamard spectra, bent / near-bent classification and duals.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bentkit/boolfn.hpp"
#include "bentkit/error.hpp"
#include "bentkit/gf2m.hpp"

namespace bentkit {

enum class SpectrumClass { Bent, NearBent, Neither };

constexpr std::string_view class_name(SpectrumClass c) noexcept {
  switch (c) {
    case SpectrumClass::Bent: return "Bent";
    case SpectrumClass::NearBent: return "NearBent";
    case SpectrumClass::Neither: return "Neither";
  }
  return "?";
}

struct WalshSpectrum {
  unsigned m = 0;
  /// coeffs[v] = sum_x (-1)^(f(x) + v.x), v.x the coordinate dot product.
  std::vector<std::int32_t> coeffs;
  SpectrumClass cls = SpectrumClass::Neither;
  std::map<std::int32_t, std::uint64_t> histogram;

  std::int32_t operator[](std::uint64_t v) const { return coeffs[v]; }
  std::uint64_t count(std::int32_t value) const {
    auto it = histogram.find(value);
    return it == histogram.end() ? 0 : it->second;
  }
};

/// Unnormalized fast Walsh-Hadamard transform, in place.
inline void fwht(std::span<std::int32_t> a) {
  const std::size_t n = a.size();
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t i = 0; i < n; i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t x = a[j], y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
}

inline SpectrumClass classify(std::span<const std::int32_t> coeffs, unsigned m) {
  if (m % 2 == 0) {
    const std::int32_t mag = std::int32_t{1} << (m / 2);
    for (auto c : coeffs)
      if (std::abs(c) != mag) return SpectrumClass::Neither;
    return SpectrumClass::Bent;
  }
  const std::int32_t mag = std::int32_t{1} << ((m + 1) / 2);
  for (auto c : coeffs)
    if (c != 0 && std::abs(c) != mag) return SpectrumClass::Neither;
  return SpectrumClass::NearBent;
}

inline SpectrumClass classify(const WalshSpectrum& s) { return classify(s.coeffs, s.m); }

inline WalshSpectrum walsh(const BooleanFunction& f) {
  if (f.dim() > kMaxFieldDim) throw Error(Errc::DimensionOutOfRange, "walsh dimension " + std::to_string(f.dim()));
  WalshSpectrum s;
  s.m = f.dim();
  s.coeffs.resize(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) s.coeffs[x] = f(x) ? -1 : 1;
  fwht(s.coeffs);
  s.cls = classify(s.coeffs, s.m);
  for (auto c : s.coeffs) ++s.histogram[c];
  return s;
}

inline std::string histogram_text(const WalshSpectrum& s) {
  std::string out;
  for (auto it = s.histogram.rbegin(); it != s.histogram.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += std::to_string(it->first) + ":" + std::to_string(it->second);
  }
  return "{" + out + "}";
}

/// f^(a) under the trace inner product <a, x> = tr(a x).
inline std::int32_t walsh_at_field_point(const WalshSpectrum& s, const FieldContext& ctx, Element a) {
  if (s.m != ctx.m()) throw Error(Errc::DimensionMismatch, "spectrum dim vs field dim");
  return s.coeffs[ctx.dual_index(a)];
}

inline std::int32_t walsh_at_field_point(const BooleanFunction& f, const FieldContext& ctx, Element a) {
  return walsh_at_field_point(walsh(f), ctx, a);
}

inline bool is_balanced(const BooleanFunction& f) { return weight(f) == f.size() / 2; }

/// Expected counts of (+2^t, 0, -2^t) in a near-bent spectrum on m = 2t - 1.
struct NearBentCounts {
  std::uint64_t plus = 0, zero = 0, minus = 0;
  friend bool operator==(const NearBentCounts&, const NearBentCounts&) = default;
};

inline NearBentCounts expected_nearbent_counts(unsigned m, bool f_at_zero) {
  const unsigned t = (m + 1) / 2;
  const std::int64_t base = std::int64_t{1} << (2 * t - 3);
  const std::int64_t delta = t >= 2 ? (std::int64_t{1} << (t - 2)) : 0;
  const std::int64_t sign = f_at_zero ? -1 : 1;
  return {static_cast<std::uint64_t>(base + sign * delta), std::uint64_t{1} << (2 * t - 2),
          static_cast<std::uint64_t>(base - sign * delta)};
}

inline NearBentCounts nearbent_counts(const WalshSpectrum& s) {
  const std::int32_t mag = std::int32_t{1} << ((s.m + 1) / 2);
  return {s.count(mag), s.count(0), s.count(-mag)};
}

/// Value distribution of a near-bent spectrum against the closed form.
inline bool check_nearbent_distribution(const WalshSpectrum& s, bool f_at_zero) {
  if (s.m % 2 == 0 || s.m < 3 || classify(s) != SpectrumClass::NearBent)
    throw Error(Errc::NotNearBent, "spectrum of dimension " + std::to_string(s.m) + " " + histogram_text(s));
  return nearbent_counts(s) == expected_nearbent_counts(s.m, f_at_zero);
}

inline void require_bent(const WalshSpectrum& s, std::string_view what = "function") {
  if (s.cls != SpectrumClass::Bent)
    throw Error(Errc::NotBent, std::string(what) + " has spectrum " + histogram_text(s));
}

/// Dual under the coordinate dot product: dual(v) = 1 iff coeffs[v] < 0.
inline BooleanFunction dual(const WalshSpectrum& s) {
  require_bent(s);
  return BooleanFunction::from_fn(s.m, [&](std::uint64_t v) { return s.coeffs[v] < 0; });
}

inline BooleanFunction dual(const BooleanFunction& f) { return dual(walsh(f)); }

/// Dual with respect to the field structure of ctx.
///
/// f.dim() == ctx.m(): points are field elements and <a, x> = tr(a x).
/// f.dim() == ctx.m() + 1: points are (u, nu) with index (nu << m) | u and
///   <(a, eta), (x, nu)> = tr(a x) + eta nu.
inline BooleanFunction dual(const WalshSpectrum& s, const FieldContext& ctx) {
  require_bent(s);
  const unsigned m = ctx.m();
  if (s.m == m)
    return BooleanFunction::from_fn(m, [&](std::uint64_t a) {
      return s.coeffs[ctx.dual_index(static_cast<Element>(a))] < 0;
    });
  if (s.m == m + 1) {
    const std::uint64_t half = std::uint64_t{1} << m;
    return BooleanFunction::from_fn(s.m, [&](std::uint64_t p) {
      const std::uint64_t a = p & (half - 1), eta = p >> m;
      return s.coeffs[(eta << m) | ctx.dual_index(static_cast<Element>(a))] < 0;
    });
  }
  throw Error(Errc::DimensionMismatch, "dual of dimension " + std::to_string(s.m) + " over " + ctx.describe());
}

inline BooleanFunction dual(const BooleanFunction& f, const FieldContext& ctx) { return dual(walsh(f), ctx); }

}  // namespace bentkit

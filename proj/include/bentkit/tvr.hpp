#pragma once

// Two-variable representation of functions on GF(2^(2t-1)) x F_2:
// F(u, nu) = (nu + 1) f0(u) + nu f1(u), point index (nu << (2t-1)) | u.

#include <cstdint>
#include <optional>
#include <string>

#include "bentkit/boolfn.hpp"
#include "bentkit/error.hpp"
#include "bentkit/gf2m.hpp"
#include "bentkit/spectrum.hpp"

namespace bentkit {

struct TvrPair {
  BooleanFunction f0;
  BooleanFunction f1;

  unsigned t() const noexcept { return (f0.dim() + 1) / 2; }
  friend bool operator==(const TvrPair&, const TvrPair&) = default;
};

inline TvrPair split(const BooleanFunction& F) {
  if (F.dim() % 2 != 0 || F.dim() < 2)
    throw Error(Errc::OddDimension, "split needs even dimension, got " + std::to_string(F.dim()));
  const unsigned m = F.dim() - 1;
  const std::uint64_t half = std::uint64_t{1} << m;
  return {BooleanFunction::from_fn(m, [&](std::uint64_t u) { return F(u); }),
          BooleanFunction::from_fn(m, [&](std::uint64_t u) { return F(u | half); })};
}

inline BooleanFunction join(const BooleanFunction& f0, const BooleanFunction& f1) {
  f0.require_same_dim(f1);
  if (f0.dim() % 2 == 0)
    throw Error(Errc::DimensionMismatch, "components must have odd dimension, got " + std::to_string(f0.dim()));
  const unsigned m = f0.dim();
  const std::uint64_t half = std::uint64_t{1} << m;
  return BooleanFunction::from_fn(m + 1, [&](std::uint64_t p) { return p & half ? f1(p - half) : f0(p); });
}

inline BooleanFunction join(const TvrPair& p) { return join(p.f0, p.f1); }

/// <(a, eta), (x, nu)> = tr(a x) + eta nu.
inline bool inner_product_2t(const FieldContext& ctx, Element a, bool eta, Element x, bool nu) {
  return ctx.trace(ctx.mul(a, x)) != (eta && nu);
}

/// Linear form T_(a,eta) as a function of dimension m + 1.
inline BooleanFunction linear_form_2t(const FieldContext& ctx, Element a, bool eta) {
  const BooleanFunction ta = linear_form(ctx, a);
  return join(ta, ta.complemented(eta));
}

/// F^(a, eta) under the product inner product, read off a coordinate spectrum.
inline std::int32_t walsh_2t(const WalshSpectrum& S, const FieldContext& ctx, Element a, bool eta) {
  if (S.m != ctx.m() + 1) throw Error(Errc::DimensionMismatch, "spectrum dim vs 2t");
  return S.coeffs[(std::uint64_t{eta} << ctx.m()) | ctx.dual_index(a)];
}

/// D_(0,1) F, which in components is f0 + f1 on both halves.
inline BooleanFunction derivative_01(const BooleanFunction& F) {
  return derivative(F, std::uint64_t{1} << (F.dim() - 1));
}

/// Component/whole spectrum identities; witness is the first failing u.
struct ComponentIdentities {
  bool sum_ok = true;         // F^(u,0) = f0^(u) + f1^(u)
  bool difference_ok = true;  // F^(u,1) = f0^(u) - f1^(u)
  bool shift_applicable = false;
  bool shift_ok = true;       // f1^(u) = f0^(u+1), when f0 + f1 = tr
  std::optional<Element> witness;

  bool passed() const { return sum_ok && difference_ok && (!shift_applicable || shift_ok); }
};

inline ComponentIdentities component_walsh_identities(const TvrPair& pair, const FieldContext& ctx) {
  if (pair.f0.dim() != ctx.m()) throw Error(Errc::DimensionMismatch, "pair vs field");
  const auto S = walsh(join(pair));
  const auto s0 = walsh(pair.f0);
  const auto s1 = walsh(pair.f1);
  ComponentIdentities r;
  r.shift_applicable = (pair.f0 ^ pair.f1) == trace_function(ctx);
  auto note = [&](bool& flag, Element u) {
    flag = false;
    if (!r.witness) r.witness = u;
  };
  for (Element u = 0; u < ctx.size(); ++u) {
    const auto a0 = walsh_at_field_point(s0, ctx, u), a1 = walsh_at_field_point(s1, ctx, u);
    if (walsh_2t(S, ctx, u, false) != a0 + a1) note(r.sum_ok, u);
    if (walsh_2t(S, ctx, u, true) != a0 - a1) note(r.difference_ok, u);
    if (r.shift_applicable && a1 != walsh_at_field_point(s0, ctx, u ^ 1)) note(r.shift_ok, u);
  }
  return r;
}

/// Bentness certificate from the components alone: both near-bent and, at
/// every a, exactly one of |f0^(a)|, |f1^(a)| equal to 2^t, the other 0.
inline bool bent_via_components(const TvrPair& pair) {
  const auto s0 = walsh(pair.f0);
  const auto s1 = walsh(pair.f1);
  if (s0.cls != SpectrumClass::NearBent || s1.cls != SpectrumClass::NearBent) return false;
  const std::int32_t mag = std::int32_t{1} << pair.t();
  for (std::size_t a = 0; a < s0.coeffs.size(); ++a)
    if (std::abs(s0.coeffs[a]) + std::abs(s1.coeffs[a]) != mag) return false;
  return true;
}

}  // namespace bentkit

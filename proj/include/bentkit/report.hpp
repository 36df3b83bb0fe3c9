#pragma once

// JSON views of library objects. Field names are stable; nlohmann::json
// keeps object keys sorted, so equal inputs serialize byte-identically.

#include <cstdint>
#include <string>

#include "bentkit/boolfn.hpp"
#include "bentkit/constructions.hpp"
#include "bentkit/gf2m.hpp"
#include "bentkit/spectrum.hpp"
#include "bentkit/tracerep.hpp"
#include "json.hpp"

namespace bentkit {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

using json = nlohmann::json;

inline std::string hex_u32(std::uint32_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  do {
    s.insert(s.begin(), digits[v & 0xF]);
    v >>= 4;
  } while (v != 0);
  return "0x" + s;
}

inline json context_json(const FieldContext& ctx) {
  return {{"m", ctx.m()}, {"primitive_poly", hex_u32(ctx.primitive_poly())}};
}

inline json trace_form_json(const TraceForm& tf, const FieldContext& ctx) {
  json terms = json::array();
  for (const auto& [k, c] : tf.terms) {
    json t = {{"leader", k}};
    if (c == 1)
      t["coeff"] = "1";
    else
      t["coeff_log"] = ctx.log(c);
    terms.push_back(std::move(t));
  }
  json j = {{"constant", tf.constant ? 1 : 0}, {"terms", terms}, {"is_binary", tf.is_binary()},
            {"text", format(tf, ctx)}};
  if (tf.top) j["top"] = 1;
  return j;
}

inline json spectrum_json(const WalshSpectrum& s, bool full) {
  json hist = json::array();
  for (const auto& [v, n] : s.histogram) hist.push_back({{"value", v}, {"count", n}});
  json j = {{"class", std::string(class_name(s.cls))}, {"histogram", hist}};
  if (full) j["coeffs"] = s.coeffs;
  return j;
}

inline json flags_json(const ConditionFlags& f) {
  json j = {{"has_T", f.has_T()}, {"has_C", f.has_C}};
  j["xi"] = f.xi ? json(*f.xi ? 1 : 0) : json(nullptr);
  j["d1_f0"] = f.d1_f0 ? json(*f.d1_f0 ? 1 : 0) : json(nullptr);
  if (!f.has_T()) j["distance"] = {{"tr", f.distance_to_tr}, {"tr_plus_1", f.distance_to_tr1}};
  return j;
}

inline json theorem_json(const TheoremReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj = {{"name", c.name}, {"passed", c.passed}};
    if (c.witness) cj["witness"] = *c.witness;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  json j = {{"theorem", r.theorem}, {"applicable", r.applicable}, {"checks", checks}};
  if (r.applicable) j["passed"] = r.passed();
  if (!r.skipped_reason.empty()) j["skipped"] = r.skipped_reason;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json dual_support_json(const DualSupportReport& r, const FieldContext& ctx) {
  json j = {{"S_size", r.S.size()},
            {"G_size", r.G_set.size()},
            {"support_matches", r.support_matches},
            {"f1_is_f0_plus_g", r.f1_is_f0_plus_g},
            {"disjoint", r.disjoint},
            {"counts_consistent", r.counts_consistent},
            {"passed", r.passed()},
            {"g", trace_form_json(to_trace_form(r.g, ctx), ctx)},
            {"S_indicator", trace_form_json(to_trace_form(r.S_indicator, ctx), ctx)}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

}  // namespace bentkit

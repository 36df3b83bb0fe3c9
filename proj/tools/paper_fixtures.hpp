#pragma once

// Worked examples over GF(2^7) and GF(2^11) with their published trace
// forms, recomputed from scratch and compared coset-wise.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bentkit/bentkit.hpp"

namespace bentkit::fixtures {

struct Line {
  std::string what;
  std::string expected;
  std::string actual;
  bool passed = false;
  std::string note;
};

struct Result {
  std::string id;
  std::string title;
  std::vector<Line> lines;
  double seconds = 0;

  bool passed() const {
    for (const auto& l : lines)
      if (!l.passed) return false;
    return true;
  }
};

inline const std::vector<std::string>& ids() {
  static const std::vector<std::string> all = {"kasami-welch", "quadratic", "example1", "example2",
                                               "example3",     "example4",  "collision", "dim12"};
  return all;
}

namespace detail {

class Runner {
 public:
  Runner(Result& r, const FieldContext& ctx, bool corrupt) : r_(r), ctx_(ctx), corrupt_(corrupt) {}

  /// Compare a computed function against c + tr(sum x^e).
  void form(std::string what, const BooleanFunction& f, bool constant, std::vector<std::uint64_t> exps,
            std::string note = {}) {
    auto want = TraceForm::from_exponents(ctx_.m(), constant, exps);
    if (corrupt_) {
      want.constant = !want.constant;
      corrupt_ = false;
    }
    const auto got = to_trace_form(f, ctx_);
    r_.lines.push_back({std::move(what), format(want, ctx_), format(got, ctx_), want == got, std::move(note)});
  }

  void fact(std::string what, bool ok, std::string note = {}) {
    if (corrupt_) {
      ok = !ok;
      corrupt_ = false;
    }
    r_.lines.push_back({std::move(what), "true", ok ? "true" : "false", ok, std::move(note)});
  }

  void flags(const BooleanFunction& F, bool want_C) {
    const auto fl = condition_flags(F, ctx_);
    fact(std::string(want_C ? "(C)" : "not (C)") + ", (T) xi=0", fl.has_C == want_C && fl.xi == false);
  }

 private:
  Result& r_;
  const FieldContext& ctx_;
  bool corrupt_;
};

struct Pack {
  BooleanFunction F, D, pd0, pd1, dpd0, dpd1;
  TvrPair d, q0, q1;
};

inline Pack pack_from_f0(const BooleanFunction& f0, const FieldContext& ctx) {
  Pack p;
  p.F = join(f0, f0 ^ trace_function(ctx));
  p.D = dual(p.F, ctx);
  std::tie(p.pd0, p.pd1) = pseudo_duals(p.F, ctx);
  p.dpd0 = dual(p.pd0, ctx);
  p.dpd1 = dual(p.pd1, ctx);
  p.d = split(p.D);
  p.q0 = split(p.dpd0);
  p.q1 = split(p.dpd1);
  return p;
}

inline bool all_bent(const Pack& p) {
  for (const auto* f : {&p.F, &p.D, &p.pd0, &p.pd1, &p.dpd0, &p.dpd1})
    if (walsh(*f).cls != SpectrumClass::Bent) return false;
  return true;
}

}  // namespace detail

inline Result run(const std::string& id, std::optional<std::uint32_t> poly7 = std::nullopt, bool corrupt = false) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  r.id = id;
  const FieldContext K(id == "dim12" ? 11 : 7, id == "dim12" ? std::nullopt : poly7);
  detail::Runner run(r, K, corrupt);
  const auto tr = trace_function(K);
  const auto L10 = linear_form_2t(K, 1, false);  // (u, nu) -> tr(u)
  const auto L01 = linear_form_2t(K, 0, true);   // (u, nu) -> nu

  auto f0_of = [&](std::vector<std::uint64_t> e) { return trace_monomials(K, e); };

  if (id == "kasami-welch") {
    r.title = "Kasami-Welch, t=4, s=2";
    const auto fam = kasami_welch(K, 2);
    const auto p = detail::pack_from_f0(fam.f0, K);
    run.fact("d = 13", fam.exponents == std::vector<std::uint64_t>{13});
    run.fact("F bent", walsh(p.F).cls == SpectrumClass::Bent);
    run.fact("D_1 f0 not constant", !d1_constant(fam.f0).has_value());
    run.form("dual f0", p.d.f0, false, {7, 11, 19, 21});
    run.form("dual f1 + dual f0", p.d.f1 ^ p.d.f0, false, {5, 0});
    const auto ds = dual_support_analysis(p.F, K);
    run.form("g", ds.g, true, {5});
    run.fact("support(dual f0) = S u S1", ds.passed());
    run.form("dual(pd0) f0", p.q0.f0, false, {1, 3, 7, 11, 19, 21});
    run.form("dual(pd0) f1 + f0", p.q0.f1 ^ p.q0.f0, false, {1});
    run.form("dual(pd1) f0", p.q1.f0, false, {0, 5, 7, 9, 11, 19, 21});
    run.form("dual(pd1) f1 + f0", p.q1.f1 ^ p.q1.f0, false, {1, 0});
    run.fact("six functions bent", detail::all_bent(p));
  } else if (id == "quadratic") {
    r.title = "Quadratic, t=4, f0 = tr(x^3+x^9)";
    const auto fam = quadratic_family(K, {1, 3});
    const auto p = detail::pack_from_f0(fam.f0, K);
    run.fact("F bent", walsh(p.F).cls == SpectrumClass::Bent);
    run.form("dual f0", p.d.f0, false, {9, 1});
    run.form("dual f1", p.d.f1, false, {9});
    run.fact("pd0 = dual(F)", p.pd0 == p.D);
    run.fact("dual(pd0) = F", p.dpd0 == p.F);
    run.form("pd1 f0", split(p.pd1).f0, false, {9});
    run.form("pd1 f1", split(p.pd1).f1, false, {9, 1});
    run.form("dual(pd1) f0", p.q1.f0, false, {3, 9},
             "erratum: printed as tr(x+x^3+x^9), whose D_1 is 1; (C) for dual(pd1) forces tr(x^3+x^9)");
    run.form("dual(pd1) f1 + f0", p.q1.f1 ^ p.q1.f0, false, {1, 0});
    bool deg2 = true;
    for (const auto* f : {&p.F, &p.D, &p.pd0, &p.pd1, &p.dpd0, &p.dpd1}) deg2 = deg2 && degree(*f) == 2;
    run.fact("all six have degree 2", deg2);
  } else if (id == "example1") {
    r.title = "Example 1, f0 = tr(x^7+x^13)";
    const auto p = detail::pack_from_f0(f0_of({7, 13}), K);
    run.flags(p.F, false);
    run.form("dual f0", p.d.f0, false, {5, 7, 9, 13, 19, 21});
    run.form("dual f1 + dual f0", p.d.f1 ^ p.d.f0, false, {1, 5, 9});
    run.form("dual(pd0) f0", p.q0.f0, false, {1, 7, 9, 13, 19, 21});
    run.form("dual(pd0) f1 + f0", p.q0.f1 ^ p.q0.f0, false, {1});
    run.form("dual(pd1) f0", p.q1.f0, false, {1, 3, 7, 13, 19, 21});
    run.form("dual(pd1) f1 + f0", p.q1.f1 ^ p.q1.f0, false, {1, 0});
    run.fact("six functions bent", detail::all_bent(p));
  } else if (id == "example2") {
    r.title = "Example 2, f0 = tr(x^15+x^27+x^29+x^43)";
    const auto p = detail::pack_from_f0(f0_of({15, 27, 29, 43}), K);
    run.flags(p.F, false);
    run.form("dual f0", p.d.f0, false, {1, 3, 5, 9});
    run.form("dual f1 + dual f0", p.d.f1 ^ p.d.f0, false, {5, 7, 11, 19, 21});
    run.fact("dual(pd0) = pd0", p.dpd0 == p.pd0);
    run.form("dual(pd1) f0", p.q1.f0, false, {1, 3, 5, 7, 9, 11, 19, 21});
    run.form("dual(pd1) f1 + f0", p.q1.f1 ^ p.q1.f0, false, {1, 0});
    run.fact("six functions bent", detail::all_bent(p));
  } else if (id == "example3") {
    r.title = "Example 3, f0 = tr(x+x^3+x^7+x^11+x^19+x^21)";
    const auto p = detail::pack_from_f0(f0_of({1, 3, 7, 11, 19, 21}), K);
    run.flags(p.F, true);
    run.form("dual f0", p.d.f0, false, {7, 11, 19, 21});
    run.form("dual f1 + dual f0", p.d.f1 ^ p.d.f0, false, {1});
    run.fact("pd0 = dual(F)", p.pd0 == p.D);
    run.fact("dual(pd0) = F", p.dpd0 == p.F);
    run.fact("pd1 = dual(F) + tr(u)", p.pd1 == (p.D ^ L10),
             "erratum: printed as pd1 = dual(F); equality holds only up to the linear form tr(u)");
    run.fact("dual(pd1) = F + nu", p.dpd1 == (p.F ^ L01),
             "erratum: printed as dual(pd1) = F; dual(pd1) has xi=1 so it cannot equal F");
    run.fact("six functions bent", detail::all_bent(p));
  } else if (id == "example4") {
    r.title = "Example 4, f0 = tr(x^3+x^5+x^7+x^11+x^19+x^21)";
    const auto p = detail::pack_from_f0(f0_of({3, 5, 7, 11, 19, 21}), K);
    run.flags(p.F, true);
    run.fact("dual(F) = F", p.D == p.F);
    run.fact("pd0 = F", p.pd0 == p.F);
    run.fact("dual(pd0) = F", p.dpd0 == p.F);
    run.fact("pd1 = F + tr(u)", p.pd1 == (p.F ^ L10),
             "erratum: printed as pd1 = F; equality holds only up to the linear form tr(u)");
    run.fact("dual(pd1) = F + nu", p.dpd1 == (p.F ^ L01),
             "erratum: printed as dual(pd1) = F; dual(pd1) has xi=1 so it cannot equal F");
    run.fact("six functions bent", detail::all_bent(p));
  } else if (id == "collision") {
    r.title = "Pseudo-dual map is not injective";
    const auto d = pseudo_dual_collision_demo(K);
    run.fact("F_a, F_b bent", d.F_a_bent && d.F_b_bent);
    run.fact("dual(F_a) != dual(F_b)", d.duals_differ);
    run.fact("pd0(F_a) = pd0(F_b)", d.pd0_equal);
  } else if (id == "dim12") {
    r.title = "Dimension 12, f0 = tr(x^241+x), f1 = tr(x^241)";
    const auto F = join(f0_of({241, 1}), f0_of({241}));
    run.fact("F bent", walsh(F).cls == SpectrumClass::Bent);
    run.fact("(T) xi=0", condition_flags(F, K).xi == false);
    run.fact("theorem 7 holds", verify_theorem7(F, K).passed());
    const auto D = dual(F, K);
    const auto [pd0, pd1] = pseudo_duals(F, K);
    run.fact("dual, pd0, pd1 bent", walsh(D).cls == SpectrumClass::Bent && walsh(pd0).cls == SpectrumClass::Bent &&
                                        walsh(pd1).cls == SpectrumClass::Bent);
    run.fact("dual(pd0), dual(pd1) bent", walsh(dual(pd0, K)).cls == SpectrumClass::Bent &&
                                              walsh(dual(pd1, K)).cls == SpectrumClass::Bent);
  } else {
    throw Error(Errc::ParseError, "unknown fixture '" + id + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace bentkit::fixtures

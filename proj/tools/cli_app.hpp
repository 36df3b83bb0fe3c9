#pragma once

// bentkit command-line front end. Exit codes: 0 success, 2 input error,
// 3 generation precondition failure, 4 verification failure, 5 fixture
// mismatch.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bentkit/bentkit.hpp"
#include "bentkit/report.hpp"
#include "paper_fixtures.hpp"

namespace bentkit::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kPrecondition = 3, kVerifyFailed = 4, kFixtureMismatch = 5 };

/// Accepts "0x83", "131" or "x^7+x+1".
inline std::uint32_t parse_poly(const std::string& text) {
  if (text.find('x') != std::string::npos && text.rfind("0x", 0) != 0) {
    std::uint32_t poly = 0;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '+')) {
      term.erase(std::remove_if(term.begin(), term.end(), ::isspace), term.end());
      unsigned e = 0;
      if (term == "1")
        e = 0;
      else if (term == "x")
        e = 1;
      else if (term.rfind("x^", 0) == 0)
        e = static_cast<unsigned>(std::stoul(term.substr(2)));
      else
        throw Error(Errc::ParseError, "bad polynomial term '" + term + "'");
      if (e > 31) throw Error(Errc::DimensionOutOfRange, "polynomial degree " + std::to_string(e));
      poly ^= std::uint32_t{1} << e;
    }
    return poly;
  }
  try {
    return static_cast<std::uint32_t>(std::stoul(text, nullptr, 0));
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad polynomial '" + text + "'");
  }
}

struct InputOptions {
  unsigned dim = 0;
  std::string poly;
  std::string expr;
  std::vector<std::string> expr_pair;
  std::string table;
  bool json = false;
};

struct LoadedInput {
  std::optional<FieldContext> ctx;  // field of the function or of its components
  BooleanFunction f;
  std::string descriptor;
  bool product = false;  // f lives on GF(2^(dim-1)) x F_2
};

inline BooleanFunction read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FormatError, "cannot open '" + path + "'");
  return read_table(in);
}

inline void write_table_file(const std::filesystem::path& path, const BooleanFunction& f) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(Errc::FormatError, "cannot write '" + path.string() + "'");
  write_table(out, f);
}

/// Second element of --expr-pair: "+<expr>" means f1 = f0 + expr.
inline BooleanFunction pair_second(const BooleanFunction& f0, const std::string& text, const FieldContext& ctx) {
  auto s = text;
  s.erase(0, s.find_first_not_of(' '));
  if (!s.empty() && s[0] == '+') return f0 ^ parse(s.substr(1), ctx);
  return parse(s, ctx);
}

inline LoadedInput load_input(const InputOptions& o) {
  const int sources = !o.expr.empty() + !o.expr_pair.empty() + !o.table.empty();
  if (sources != 1) throw Error(Errc::ParseError, "give exactly one of --expr, --expr-pair, --table");
  const std::optional<std::uint32_t> poly = o.poly.empty() ? std::nullopt : std::optional(parse_poly(o.poly));
  LoadedInput in;
  if (!o.table.empty()) {
    in.f = read_table_file(o.table);
    if (o.dim != 0 && o.dim != in.f.dim())
      throw Error(Errc::DimensionMismatch, "--dim " + std::to_string(o.dim) + " but table has m=" +
                                               std::to_string(in.f.dim()));
    in.descriptor = "table:" + o.table;
    in.product = in.f.dim() % 2 == 0;
    in.ctx.emplace(in.product ? in.f.dim() - 1 : in.f.dim(), poly);
    return in;
  }
  if (o.dim == 0) throw Error(Errc::ParseError, "--dim is required with expressions");
  if (!o.expr_pair.empty()) {
    if (o.dim % 2 != 0) throw Error(Errc::OddDimension, "--expr-pair needs an even --dim");
    in.ctx.emplace(o.dim - 1, poly);
    const auto f0 = parse(o.expr_pair[0], *in.ctx);
    const auto f1 = pair_second(f0, o.expr_pair[1], *in.ctx);
    in.f = join(f0, f1);
    in.product = true;
    in.descriptor = "pair:" + o.expr_pair[0] + " | " + o.expr_pair[1];
    return in;
  }
  in.ctx.emplace(o.dim, poly);
  in.f = parse(o.expr, *in.ctx);
  in.descriptor = "expr:" + o.expr;
  return in;
}

inline void add_input_options(CLI::App* cmd, InputOptions& o, bool pair_allowed = true) {
  cmd->add_option("--dim", o.dim, "Dimension of the function");
  cmd->add_option("--poly", o.poly, "Primitive polynomial (0x83, 131 or x^7+x+1)");
  cmd->add_option("--expr", o.expr, "Trace expression, e.g. \"tr(x^13)\"");
  if (pair_allowed)
    cmd->add_option("--expr-pair", o.expr_pair, "Components f0 f1; f1 may be \"+<expr>\" for f0 + expr")
        ->expected(2);
  cmd->add_option("--table", o.table, "Truth-table file (BF m=<dim> + hex)");
  cmd->add_flag("--json", o.json, "Emit JSON");
}

inline json base_report(const std::string& command, bool timestamps) {
  json j = {{"schema", kSchemaVersion}, {"tool_version", kToolVersion}, {"command", command}};
  if (timestamps) j["timestamp"] = static_cast<long long>(std::time(nullptr));
  return j;
}

inline std::string form_text(const BooleanFunction& f, const FieldContext& ctx) {
  return format(to_trace_form(f, ctx), ctx);
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeOptions {
  InputOptions in;
  bool full_spectrum = false;
  bool verify = false;
  bool timestamps = false;
};

inline json analyze_report(const LoadedInput& in, const AnalyzeOptions& o) {
  const auto& ctx = *in.ctx;
  const auto s = walsh(in.f);
  json j = base_report("analyze", o.timestamps);
  j["input"] = in.descriptor;
  j["dimension"] = in.f.dim();
  j["context"] = context_json(ctx);
  j["weight"] = weight(in.f);
  j["degree"] = degree(in.f);
  j["spectrum"] = spectrum_json(s, o.full_spectrum);
  if (!in.product) {
    j["trace_form"] = trace_form_json(to_trace_form(in.f, ctx), ctx);
    const auto d1 = d1_constant(in.f);
    j["d1_constant"] = d1 ? json(*d1 ? 1 : 0) : json(nullptr);
    if (s.cls == SpectrumClass::NearBent && s.m >= 3) {
      j["nearbent_distribution_ok"] = check_nearbent_distribution(s, in.f(0));
      if (d1) j["lemma15"] = theorem_json(verify_lemma15(in.f, ctx));
    }
    return j;
  }
  const auto [f0, f1] = split(in.f);
  j["components"] = {{"f0", trace_form_json(to_trace_form(f0, ctx), ctx)},
                     {"f1", trace_form_json(to_trace_form(f1, ctx), ctx)}};
  j["flags"] = flags_json(condition_flags(in.f, ctx));
  j["bent_via_components"] = bent_via_components({f0, f1});
  if (o.verify && s.cls == SpectrumClass::Bent) {
    json checks = json::array();
    checks.push_back(theorem_json(verify_prop16(in.f, ctx)));
    const auto fl = condition_flags(in.f, ctx);
    if (fl.xi == false) {
      checks.push_back(theorem_json(verify_theorem2(in.f, ctx)));
      if (fl.d1_f0) checks.push_back(theorem_json(verify_theorem5(in.f, ctx)));
    }
    if (fl.has_T()) checks.push_back(theorem_json(verify_theorem7(in.f, ctx)));
    j["theorems"] = checks;
  }
  return j;
}

inline void print_analyze_text(std::ostream& out, const json& j) {
  out << "input:     " << j["input"].get<std::string>() << "\n";
  out << "field:     GF(2^" << j["context"]["m"] << ") poly=" << j["context"]["primitive_poly"].get<std::string>()
      << "\n";
  out << "dimension: " << j["dimension"] << "\n";
  out << "weight:    " << j["weight"] << "\n";
  out << "degree:    " << j["degree"] << "\n";
  out << "class:     " << j["spectrum"]["class"].get<std::string>() << "\n";
  out << "spectrum: ";
  for (const auto& h : j["spectrum"]["histogram"]) out << " " << h["value"] << ":" << h["count"];
  out << "\n";
  if (j.contains("trace_form")) out << "form:      " << j["trace_form"]["text"].get<std::string>() << "\n";
  if (j.contains("d1_constant"))
    out << "D_1 f:     " << (j["d1_constant"].is_null() ? "not constant" : j["d1_constant"].dump()) << "\n";
  if (j.contains("components")) {
    out << "f0:        " << j["components"]["f0"]["text"].get<std::string>() << "\n";
    out << "f1:        " << j["components"]["f1"]["text"].get<std::string>() << "\n";
    const auto& fl = j["flags"];
    out << "flags:     " << (fl["has_C"].get<bool>() ? "(C)" : "not (C)") << ", "
        << (fl["has_T"].get<bool>() ? "(T) xi=" + fl["xi"].dump() : std::string("not (T)")) << "\n";
  }
  if (j.contains("theorems"))
    for (const auto& t : j["theorems"])
      out << "check:     " << t["theorem"].get<std::string>() << " " << (t["passed"].get<bool>() ? "pass" : "FAIL")
          << "\n";
}

// ---- generate -------------------------------------------------------------

struct GenerateOptions {
  unsigned t = 0;
  unsigned s = 0;
  std::string J;
  std::string poly;
  std::string out;
  bool json = false;
  bool timestamps = false;
};

inline std::vector<unsigned> parse_index_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad index '" + item + "' in --J");
    }
  }
  return out;
}

inline int cmd_generate(const std::string& family, const GenerateOptions& o, std::ostream& out) {
  const std::optional<std::uint32_t> poly = o.poly.empty() ? std::nullopt : std::optional(parse_poly(o.poly));
  json j = base_report("generate", o.timestamps);
  j["family"] = family;
  j["t"] = o.t;
  if (o.t < 2) throw Error(Errc::ConditionViolation, "t must be at least 2");
  std::optional<KasamiWelchParams> kw;
  if (family == "kasami-welch") kw = kasami_welch_params(o.t, o.s);
  const FieldContext ctx(2 * o.t - 1, poly);
  FamilyMember fam;
  if (kw) {
    fam = kasami_welch(ctx, o.s);
    j["s"] = o.s;
    j["d"] = kw->d;
    j["branch"] = kw->branch > 0 ? "3s=+1" : "3s=-1";
  } else {
    const auto J = parse_index_list(o.J);
    fam = quadratic_family(ctx, J);
    j["J"] = J;
  }
  const auto s = walsh(fam.F);
  j["context"] = context_json(ctx);
  j["f0"] = trace_form_json(to_trace_form(fam.f0, ctx), ctx);
  j["spectrum"] = spectrum_json(s, false);
  j["degree"] = degree(fam.F);
  j["bent"] = s.cls == SpectrumClass::Bent;
  const std::string path =
      !o.out.empty() ? o.out
                     : (kw ? "kasami_welch_t" + std::to_string(o.t) + "_s" + std::to_string(o.s) + ".bf"
                           : "quadratic_t" + std::to_string(o.t) + ".bf");
  write_table_file(path, fam.F);
  j["table"] = path;
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "family:  " << family << "\n";
    if (kw) out << "d:       " << kw->d << " (" << j["branch"].get<std::string>() << ")\n";
    out << "f0:      " << j["f0"]["text"].get<std::string>() << "\n";
    out << "f1:      f0 + tr(x)\n";
    out << "class:   " << class_name(s.cls) << "\n";
    out << "degree:  " << j["degree"] << "\n";
    out << "table:   " << path << "\n";
  }
  return s.cls == SpectrumClass::Bent ? kOk : kVerifyFailed;
}

// ---- sixpack --------------------------------------------------------------

struct SixpackOptions {
  InputOptions in;
  bool normalize = false;
  std::string out_dir;
  bool timestamps = false;
};

inline std::string dedup_summary(const SixPack& p) {
  const auto n = p.distinct_count();
  if (n == 1) return "all six identical";
  static const char* words[] = {"", "one", "two", "three", "four", "five", "six"};
  return std::string(words[n]) + " distinct functions";
}

inline int cmd_sixpack(const SixpackOptions& o, std::ostream& out) {
  auto in = load_input(o.in);
  const auto& ctx = *in.ctx;
  if (in.product) throw Error(Errc::DimensionMismatch, "sixpack takes the near-bent f0 of odd dimension");
  auto f0 = o.normalize ? normalize_near_bent(in.f, ctx) : in.f;
  const auto p = six_pack(f0, ctx);
  json j = base_report("sixpack", o.timestamps);
  j["input"] = in.descriptor;
  j["context"] = context_json(ctx);
  j["normalized"] = o.normalize;
  j["f0"] = trace_form_json(to_trace_form(f0, ctx), ctx);
  const auto rep = p.representatives();
  json members = json::array();
  const auto ms = p.members();
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [c0, c1] = split(*ms[i]);
    json m = {{"name", SixPack::kNames[i]},
              {"f0", trace_form_json(to_trace_form(c0, ctx), ctx)},
              {"f1", trace_form_json(to_trace_form(c1, ctx), ctx)},
              {"same_as", SixPack::kNames[rep[i]]},
              {"table", to_hex(*ms[i])}};
    if (!o.out_dir.empty()) {
      const auto path = std::filesystem::path(o.out_dir) / (std::string(SixPack::kNames[i]) + ".bf");
      write_table_file(path, *ms[i]);
      m["file"] = path.string();
    }
    members.push_back(std::move(m));
  }
  j["members"] = members;
  j["distinct"] = p.distinct_count();
  j["summary"] = dedup_summary(p);
  if (o.in.json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "f0: " << j["f0"]["text"].get<std::string>() << "\n";
  for (const auto& m : j["members"]) {
    out << m["name"].get<std::string>() << ": f0 = " << m["f0"]["text"].get<std::string>()
        << ", f1 = " << m["f1"]["text"].get<std::string>();
    if (m["same_as"] != m["name"]) out << "  (= " << m["same_as"].get<std::string>() << ")";
    out << "\n";
  }
  out << "summary: " << j["summary"].get<std::string>() << "\n";
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  InputOptions in;
  std::string out_dir;
  bool timestamps = false;
};

inline int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  auto in = load_input(o.in);
  const auto& ctx = *in.ctx;
  if (!in.product) throw Error(Errc::OddDimension, "verify takes a function of even dimension");
  const auto& F = in.f;
  json j = base_report("verify", o.timestamps);
  j["input"] = in.descriptor;
  j["context"] = context_json(ctx);
  const auto s = walsh(F);
  j["spectrum"] = spectrum_json(s, false);
  std::vector<std::string> failures;
  if (s.cls != SpectrumClass::Bent) {
    failures.push_back("F is not bent");
  } else {
    const auto fl = condition_flags(F, ctx);
    const auto [f0, f1] = split(F);
    j["flags"] = flags_json(fl);
    json checks = json::array();
    auto record = [&](const TheoremReport& r) {
      checks.push_back(theorem_json(r));
      for (const auto& c : r.checks)
        if (!c.passed)
          failures.push_back(r.theorem + ": " + c.name +
                             (c.witness ? " (witness " + std::to_string(*c.witness) + ")" : std::string()));
    };
    auto skipped = [&](const std::string& name, const std::string& why) {
      TheoremReport r(name);
      r.applicable = false;
      r.skipped_reason = why;
      checks.push_back(theorem_json(r));
    };
    record(verify_prop16(F, ctx));
    if (fl.xi == false) {
      record(verify_theorem2(F, ctx));
      const auto ds = dual_support_analysis(F, ctx);
      j["theorem4"] = dual_support_json(ds, ctx);
      if (!ds.passed()) failures.push_back("theorem4: dual support / f1 relation");
    } else {
      skipped("theorem2", "needs f0 + f1 = tr");
      skipped("theorem4", "needs f0 + f1 = tr");
    }
    if (fl.xi == false && fl.d1_f0)
      record(verify_theorem5(F, ctx));
    else
      skipped("theorem5", "needs f0 + f1 = tr and D_1 f0 constant");
    if (fl.has_T())
      record(verify_theorem7(F, ctx));
    else
      skipped("theorem7", "needs (T)");
    if (fl.d1_f0)
      record(verify_lemma15(f0, ctx));
    else
      skipped("lemma15", "D_1 f0 not constant");
    j["checks"] = checks;

    const auto D = dual(s, ctx);
    const auto [pd0, pd1] = pseudo_duals(F, ctx);
    json derived = json::object();
    auto emit = [&](const char* name, const BooleanFunction& G) {
      const auto [g0, g1] = split(G);
      const bool bent = walsh(G).cls == SpectrumClass::Bent;
      if (!bent) failures.push_back(std::string(name) + " is not bent");
      derived[name] = {{"bent", bent},
                       {"f0", trace_form_json(to_trace_form(g0, ctx), ctx)},
                       {"f1_plus_f0", trace_form_json(to_trace_form(g0 ^ g1, ctx), ctx)}};
      if (!o.out_dir.empty()) {
        const auto path = std::filesystem::path(o.out_dir) / (std::string(name) + ".bf");
        write_table_file(path, G);
        derived[name]["file"] = path.string();
      }
    };
    emit("dual", D);
    emit("pd0", pd0);
    emit("pd1", pd1);
    j["derived"] = derived;
    j["relations"] = {{"self_dual", D == F},
                      {"pd0_is_dual", pd0 == D},
                      {"dual_pd0_is_pd0", dual(pd0, ctx) == pd0},
                      {"dual_pd1_is_pd1", dual(pd1, ctx) == pd1}};
  }
  j["failures"] = failures;
  j["passed"] = failures.empty();
  if (o.in.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "class: " << class_name(s.cls) << "\n";
    if (j.contains("flags")) {
      const auto& fl = j["flags"];
      out << "flags: " << (fl["has_C"].get<bool>() ? "(C)" : "not (C)") << ", "
          << (fl["has_T"].get<bool>() ? "(T) xi=" + fl["xi"].dump() : std::string("not (T)")) << "\n";
    }
    if (j.contains("checks"))
      for (const auto& c : j["checks"]) {
        out << c["theorem"].get<std::string>() << ": ";
        if (!c["applicable"].get<bool>())
          out << "skipped (" << c["skipped"].get<std::string>() << ")\n";
        else
          out << (c["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
      }
    if (j.contains("theorem4"))
      out << "theorem4: " << (j["theorem4"]["passed"].get<bool>() ? "pass" : "FAIL")
          << " (g = " << j["theorem4"]["g"]["text"].get<std::string>() << ")\n";
    if (j.contains("derived"))
      for (const auto& [name, d] : j["derived"].items())
        out << name << ": f0 = " << d["f0"]["text"].get<std::string>()
            << ", f1 = f0 + " << d["f1_plus_f0"]["text"].get<std::string>() << "\n";
    if (j.contains("relations"))
      for (const auto& [name, v] : j["relations"].items())
        if (v.get<bool>()) out << "relation: " << name << "\n";
    for (const auto& f : failures) out << "FAILED " << f << "\n";
  }
  return failures.empty() ? kOk : kVerifyFailed;
}

// ---- paper-examples -------------------------------------------------------

struct ExamplesOptions {
  std::string poly;
  std::string corrupt;
  bool json = false;
  bool timestamps = false;
};

inline int cmd_paper_examples(const ExamplesOptions& o, std::ostream& out) {
  const std::optional<std::uint32_t> poly = o.poly.empty() ? std::nullopt : std::optional(parse_poly(o.poly));
  if (!o.corrupt.empty() && std::find(fixtures::ids().begin(), fixtures::ids().end(), o.corrupt) == fixtures::ids().end())
    throw Error(Errc::ParseError, "unknown fixture '" + o.corrupt + "'");
  // Fixtures are independent; they run in order so output is deterministic.
  std::vector<fixtures::Result> results;
  for (const auto& id : fixtures::ids()) results.push_back(fixtures::run(id, poly, id == o.corrupt));
  bool all = true;
  json j = base_report("paper-examples", o.timestamps);
  json arr = json::array();
  for (const auto& r : results) {
    all = all && r.passed();
    json lines = json::array();
    for (const auto& l : r.lines) {
      json lj = {{"what", l.what}, {"expected", l.expected}, {"actual", l.actual}, {"passed", l.passed}};
      if (!l.note.empty()) lj["note"] = l.note;
      lines.push_back(std::move(lj));
    }
    arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"lines", lines}});
  }
  j["fixtures"] = arr;
  j["passed"] = all;
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << r.title << "\n";
      for (const auto& l : r.lines) {
        if (!l.passed) {
          out << "    - " << l.what << "\n      expected: " << l.expected << "\n      actual:   " << l.actual
              << "\n";
        } else if (!l.note.empty()) {
          out << "    note: " << l.what << ": " << l.note << "\n";
        }
      }
    }
    out << (all ? "all fixtures pass" : "fixture mismatch") << "\n";
  }
  return all ? kOk : kFixtureMismatch;
}

// ---- entry point ----------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"bentkit: bent functions from near-bent components"};
  app.require_subcommand(1);
  bool timestamps = false;
  app.add_flag("--timestamps", timestamps, "Add a timestamp to JSON reports");

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "Spectrum, degree, flags and trace form of a function");
  add_input_options(analyze, ao.in);
  analyze->add_flag("--full-spectrum", ao.full_spectrum, "Include all Walsh coefficients in JSON");
  analyze->add_flag("--verify", ao.verify, "Run theorem checks on bent inputs");

  GenerateOptions go;
  auto* generate = app.add_subcommand("generate", "Build a bent function from a known family");
  generate->require_subcommand(1);
  for (const char* fam : {"kasami-welch", "quadratic"}) {
    auto* sub = generate->add_subcommand(fam, fam == std::string("kasami-welch") ? "f0 = tr(x^(4^s-2^s+1))"
                                                                                  : "f0 = sum_J tr(x^(2^j+1))");
    sub->add_option("--t", go.t, "Half dimension; components live on GF(2^(2t-1))")->required();
    if (fam == std::string("kasami-welch"))
      sub->add_option("--s", go.s, "Exponent parameter")->required();
    else
      sub->add_option("--J", go.J, "Comma-separated j values")->required();
    sub->add_option("--poly", go.poly, "Primitive polynomial");
    sub->add_option("--out", go.out, "Truth-table output path");
    sub->add_flag("--json", go.json, "Emit JSON");
  }

  SixpackOptions so;
  auto* sixpack = app.add_subcommand("sixpack", "F, its dual, pseudo-duals and their duals from a near-bent f0");
  add_input_options(sixpack, so.in, false);
  sixpack->add_flag("--normalize", so.normalize, "Replace f0 by the member of {f, f+1, f+tr, f+tr+1} with D_1 = 0, f(0) = 0");
  sixpack->add_option("--out-dir", so.out_dir, "Directory for the six truth tables");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run every applicable checker on a bent function");
  add_input_options(verify, vo.in);
  verify->add_option("--out-dir", vo.out_dir, "Directory for dual and pseudo-dual truth tables");

  ExamplesOptions eo;
  auto* examples = app.add_subcommand("paper-examples", "Recompute the worked examples and compare trace forms");
  examples->add_option("--poly", eo.poly, "Primitive polynomial for GF(2^7)");
  examples->add_option("--corrupt", eo.corrupt, "Test mode: falsify the first expectation of a fixture");
  examples->add_flag("--json", eo.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (analyze->parsed()) {
      ao.timestamps = timestamps;
      const auto in = load_input(ao.in);
      const auto j = analyze_report(in, ao);
      if (ao.in.json)
        out << j.dump(2) << "\n";
      else
        print_analyze_text(out, j);
      return kOk;
    }
    if (generate->parsed()) {
      go.timestamps = timestamps;
      const std::string fam = generate->get_subcommands().front()->get_name();
      try {
        return cmd_generate(fam, go, out);
      } catch (const Error& e) {
        switch (e.code()) {
          case Errc::ConditionViolation:
          case Errc::NotNearBent:
          case Errc::InvalidExponentSet:
          case Errc::BentVerificationFailed:
            err << "generate: " << e.what() << "\n";
            return kPrecondition;
          default:
            throw;
        }
      }
    }
    if (sixpack->parsed()) {
      so.timestamps = timestamps;
      try {
        return cmd_sixpack(so, out);
      } catch (const Error& e) {
        switch (e.code()) {
          case Errc::NotNearBent:
          case Errc::DerivativeNotConstant:
          case Errc::BentVerificationFailed:
            err << "sixpack: " << e.what() << "\n";
            return kPrecondition;
          default:
            throw;
        }
      }
    }
    if (verify->parsed()) {
      vo.timestamps = timestamps;
      return cmd_verify(vo, out);
    }
    if (examples->parsed()) {
      eo.timestamps = timestamps;
      return cmd_paper_examples(eo, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace bentkit::cli

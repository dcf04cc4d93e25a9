#include "clasp_cli/cli.hpp"

#include "clasp/aarhus.hpp"
#include "clasp/clasper.hpp"
#include "clasp/diagrams.hpp"
#include "clasp/errors.hpp"
#include "clasp/json_io.hpp"
#include "clasp/magnus.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace clasp::cli {

namespace {

struct Options {
  std::string file;
  std::string out_path;
  std::string word;
  int n = 0;
  int cap = 0;
  int degree = 0;
  int colors = 0;
  int max_degree = 0;
  int max_legs = 0;
  bool json = false;
  bool oracle = false;
  bool sign = false;
};

// FNV-1a, used only as a short input digest in reports.
std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Limits limits_from(const Options& o) {
  Limits l = default_limits();
  if (o.max_degree > 0) l.max_degree = o.max_degree;
  if (o.max_legs > 0) {
    l.max_glue_legs = o.max_legs;
    l.max_brute_legs = std::min(l.max_brute_legs, o.max_legs);
  }
  return l;
}

Json run_report(const std::string& command, const std::string& input) {
  Json r = {{"command", command}};
  if (!input.empty()) r["input_digest"] = "fnv1a64:" + digest(input);
  return r;
}

// Writes `doc` to --out if given, else to out.
void emit(const Options& o, const Json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw InputError("cannot write " + o.out_path);
  f << text;
}

bool is_series(const Json& j) { return j.is_object() && j.contains("R") && j.contains("labels"); }
bool is_spec(const Json& j) { return j.is_object() && j.contains("shape") && j.contains("leaves"); }
bool is_presentation(const Json& j) { return j.is_object() && j.contains("curves") && j.contains("linking"); }

int effective_n(const Options& o, const Json& j) {
  if (o.n > 0) return o.n;
  if (j.is_object() && j.contains("n") && j.at("n").is_number_integer()) return j.at("n").get<int>();
  return 0;
}

Json with_n(const Json& j, int n) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  Json copy = j;
  copy["n"] = n;
  return copy;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.file);
  const Json j = parse_json(text);
  const int n = effective_n(o, j);
  Json doc = {{"schema", kSchema}, {"report", run_report("validate", text)}};
  try {
    if (n == 0) {
      const Pattern p = pattern_from_json(j);
      doc["valid"] = true;
      doc["pattern"] = to_json(p);
      if (!o.json) out << "valid pattern; chosen vertex " << p.vertex << " (degree " << degree(p.tree) << ")\n";
    } else {
      const NPattern q = npattern_from_json(with_n(j, n));
      doc["valid"] = true;
      doc["npattern"] = to_json(q);
      if (!o.json) {
        out << "valid " << n << "-pattern; c^(" << n << ") embedded at vertices";
        for (int v : q.embedding) out << ' ' << v;
        out << '\n';
      }
    }
  } catch (const ValidationError& e) {
    doc["valid"] = false;
    doc["reason"] = e.what();
    if (o.json)
      out << doc.dump(2) << '\n';
    else
      out << "invalid: " << e.what() << '\n';
    return kDomainFailure;
  }
  if (o.json) out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.file);
  const Json j = parse_json(text);
  const Limits limits = limits_from(o);
  Json doc = {{"schema", kSchema}, {"kind", "build"}, {"report", run_report("build", text)}};
  ClasperSpec degree_one;
  int level = 1;
  if (is_spec(j)) {
    const ClasperSpec c = clasper_from_json(j);
    doc["clasper"] = to_json(c);
    degree_one = c.degree() == 1 ? c : reduce_to_degree_one(c, limits);
    if (c.degree() > 1) doc["reduced"] = to_json(degree_one);
    level = c.derived_level.value_or(std::max(1, o.n));
  } else {
    const int n = effective_n(o, j);
    if (n == 0) {
      const Pattern p = pattern_from_json(j);
      doc["pattern"] = to_json(p);
      degree_one = build_clasper(p);
      doc["clasper"] = to_json(degree_one);
    } else {
      const NPattern q = npattern_from_json(with_n(j, n));
      doc["npattern"] = to_json(q);
      const ClasperSpec c = build_n_clasper(q);
      doc["clasper"] = to_json(c);
      doc["expanded"] = to_json(expand_edges(c));
      degree_one = reduce_to_degree_one(c, limits);
      doc["reduced"] = to_json(degree_one);
      level = n;
    }
  }
  SurgeryPresentation s = compile_surgery(degree_one);
  if (level >= 2) s.certificate = certify_null(s, level, limits);
  doc["presentation"] = to_json(s);
  doc["sphere_condition"] = to_json(check_sphere_condition(degree_one));
  emit(o, doc, out);
  if (!o.json && !o.out_path.empty())
    out << "wrote " << s.curves.size() << "-curve presentation to " << o.out_path << "; null certificate level "
        << s.certificate->level << " granted\n";
  return kOk;
}

std::string sign_text(int sign) { return sign > 0 ? "+1" : sign < 0 ? "-1" : "none"; }

int cmd_zmin(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.file);
  const Json j = parse_json(text);
  const Limits limits = limits_from(o);

  if (is_series(j)) {
    const LeggedSeries s = series_from_json(j);
    const GluingResult g = glue(s, limits);
    if (o.json) {
      Json doc = to_json(g);
      doc["report"] = run_report("zmin", text);
      out << doc.dump(2) << '\n';
    } else {
      out << "min_degree: " << (g.min_degree ? std::to_string(*g.min_degree) : "none") << '\n';
      out << "value: " << g.value.to_string() << '\n';
    }
    return kOk;
  }

  const int n = effective_n(o, j);
  auto [tree, vertex] = pattern_input_from_json(j);
  ZminOptions zo;
  zo.oracle = o.oracle;
  zo.limits = limits;
  if (o.cap > 0) zo.cap = o.cap;
  const ZminReport r = zmin(tree, n, n == 0 ? vertex : std::nullopt, zo);

  if (o.json) {
    Json doc = to_json(r);
    doc["report"] = run_report("zmin", text);
    out << doc.dump(2) << '\n';
  } else {
    out << "stages:";
    for (const auto& s : r.stages) out << ' ' << s;
    out << '\n';
    out << "expected degree: " << r.expected_degree << (r.beta_vanishes ? " (beta vanishes in A^tr)" : "") << '\n';
    out << "min_degree: " << (r.result.min_degree ? std::to_string(*r.result.min_degree) : "none") << '\n';
    out << "Z^min: " << r.result.value.component(r.expected_degree).to_string() << '\n';
    out << "lower degrees: " << (r.lower_degrees_vanish ? "vanish" : "DO NOT vanish") << '\n';
    out << (r.pass ? "PASS" : "FAIL") << ": degree-" << r.expected_degree << " part "
        << (r.matched_sign != 0 ? "equals " + std::string(r.matched_sign > 0 ? "+" : "-") + "beta" : "differs from beta")
        << " in A^tr\n";
    if (o.sign || r.matched_sign < 0)
      out << "sign convention: " << r.result.sign_convention << "; matched sign " << sign_text(r.matched_sign)
          << '\n';
    if (r.oracle_agrees) out << (*r.oracle_agrees ? "oracle agrees" : "ORACLE DISAGREES") << '\n';
  }
  if (r.oracle_agrees && !*r.oracle_agrees) return kDomainFailure;
  return r.pass ? kOk : kDomainFailure;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.file);
  const Json j = parse_json(text);
  const Limits limits = limits_from(o);
  SurgeryPresentation s;
  int level = std::max(1, o.n);
  if (is_presentation(j)) {
    s = presentation_from_json(j);
  } else if (is_spec(j)) {
    const ClasperSpec c = clasper_from_json(j);
    s = compile_surgery(c.degree() == 1 ? c : reduce_to_degree_one(c, limits), true);
    if (o.n == 0 && c.derived_level) level = *c.derived_level;
  } else {
    const int n = effective_n(o, j);
    if (n == 0) {
      s = compile_surgery(build_clasper(pattern_from_json(j)), true);
    } else {
      s = compile_surgery(reduce_to_degree_one(build_n_clasper(npattern_from_json(with_n(j, n))), limits), true);
      level = n;
    }
  }
  const NullCertificate cert = certify_null(s, level, limits);
  if (o.json) {
    Json doc = to_json(cert);
    doc["report"] = run_report("certify", text);
    emit(o, doc, out);
  } else {
    out << "null certificate level " << cert.level << " granted\n";
    for (const auto& f : cert.facts)
      out << "  " << f.curve << " = " << f.word << ": " << f.check << (f.holds ? "" : " FAILS") << '\n';
    if (!o.out_path.empty()) emit(o, to_json(cert), out);
  }
  return kOk;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const std::size_t d = dim(o.degree, o.colors, limits_from(o));
  if (o.json)
    out << Json{{"schema", kSchema}, {"degree", o.degree}, {"colors", o.colors}, {"dim", d}}.dump(2) << '\n';
  else
    out << d << '\n';
  return kOk;
}

int cmd_magnus(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word);
  const MagnusSeries m = magnus(w, o.cap);
  if (!o.json) {
    out << m.to_string() << '\n';
    return kOk;
  }
  const LcsDegree l = lcs_degree(w, o.cap);
  Json terms = Json::array();
  for (const auto& [body, c] : tree_expansion(w, o.cap, 0).terms)
    terms.push_back({{"tree", body.to_string()}, {"coeff", to_string(c)}});
  out << Json{{"schema", kSchema},
              {"word", w.to_string()},
              {"cap", o.cap},
              {"magnus", m.to_string()},
              {"lcs_degree", l.degree},
              {"lcs_degree_is_lower_bound", l.at_least},
              {"tree_expansion", terms}}
             .dump(2)
      << '\n';
  return kOk;
}

int cmd_glue(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.file);
  const LeggedSeries s = series_from_json(parse_json(text));
  const Limits limits = limits_from(o);
  const GluingResult g = glue(s, limits);
  std::optional<bool> agrees;
  if (o.oracle) agrees = brute_glue(s, limits).value == g.value;
  if (o.json || !o.out_path.empty()) {
    Json doc = to_json(g);
    doc["report"] = run_report("glue", text);
    if (agrees) doc["oracle_agrees"] = *agrees;
    emit(o, doc, out);
  }
  if (!o.json) {
    out << "min_degree: " << (g.min_degree ? std::to_string(*g.min_degree) : "none") << '\n';
    out << "value: " << g.value.to_string() << '\n';
    if (agrees) out << (*agrees ? "oracle agrees" : "ORACLE DISAGREES") << '\n';
  }
  return agrees && !*agrees ? kDomainFailure : kOk;
}

int classify(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const StageError& e) {
    err << "error: " << e.what() << '\n';
    return e.input_error() ? kInputError : kDomainFailure;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << " [failing: " << e.failing_item() << "]\n";
    return kDomainFailure;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Patterns, clasper surgery presentations and tree-level Aarhus gluing", "clasp"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "machine-readable JSON output");
    c->add_option("--max-degree", o.max_degree, "resource guard for tree enumeration degree");
    c->add_option("--max-legs", o.max_legs, "resource guard for X legs per monomial");
  };
  auto with_file = [&](CLI::App* c) { c->add_option("file", o.file, "input JSON file")->required(); };

  CLI::App* validate = app.add_subcommand("validate", "check a pattern (or an n-pattern with --n)");
  with_file(validate);
  validate->add_option("--n", o.n, "derived-series level of an n-pattern");
  common(validate);

  CLI::App* build = app.add_subcommand("build", "compile a pattern to a surgery presentation");
  with_file(build);
  build->add_option("--n", o.n, "derived-series level of an n-pattern");
  build->add_option("--out", o.out_path, "write the JSON document here");
  common(build);

  CLI::App* zmin_cmd = app.add_subcommand("zmin", "lowest-degree tree part of the glued series");
  with_file(zmin_cmd);
  zmin_cmd->add_option("--n", o.n, "derived-series level of an n-pattern");
  zmin_cmd->add_option("--cap", o.cap, "degree cap (defaults to deg(beta))");
  zmin_cmd->add_flag("--oracle", o.oracle, "cross-check with brute-force gluing");
  zmin_cmd->add_flag("--sign", o.sign, "report the global sign convention");
  common(zmin_cmd);

  CLI::App* certify = app.add_subcommand("certify", "null-homology / derived-series certificate");
  with_file(certify);
  certify->add_option("--n", o.n, "derived-series level to certify");
  certify->add_option("--out", o.out_path, "write the certificate here");
  common(certify);

  CLI::App* dim_cmd = app.add_subcommand("dim", "dimension of A^tr in one degree");
  dim_cmd->add_option("--degree", o.degree, "degree m")->required();
  dim_cmd->add_option("--colors", o.colors, "number of colors r")->required();
  common(dim_cmd);

  CLI::App* magnus_cmd = app.add_subcommand("magnus", "Magnus expansion of a free-group word");
  magnus_cmd->add_option("--word", o.word, "word such as \"[x1,x2]\"")->required();
  magnus_cmd->add_option("--cap", o.cap, "truncation degree")->required();
  common(magnus_cmd);

  CLI::App* glue_cmd = app.add_subcommand("glue", "glue the X legs of a legged series");
  with_file(glue_cmd);
  glue_cmd->add_option("--out", o.out_path, "write the result here");
  glue_cmd->add_flag("--oracle", o.oracle, "cross-check with brute-force gluing");
  common(glue_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  if (*validate) code = classify([&] { return cmd_validate(o, out); }, err);
  if (*build) code = classify([&] { return cmd_build(o, out); }, err);
  if (*zmin_cmd) code = classify([&] { return cmd_zmin(o, out); }, err);
  if (*certify) code = classify([&] { return cmd_certify(o, out); }, err);
  if (*dim_cmd) code = classify([&] { return cmd_dim(o, out); }, err);
  if (*magnus_cmd) code = classify([&] { return cmd_magnus(o, out); }, err);
  if (*glue_cmd) code = classify([&] { return cmd_glue(o, out); }, err);
  if (!o.json) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed " << std::fixed << std::setprecision(1) << ms << " ms\n";
  }
  return code;
}

}  // namespace clasp::cli

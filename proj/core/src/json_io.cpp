#include "clasp/json_io.hpp"

#include "clasp/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace clasp {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

[[noreturn]] void schema_error(const std::string& what) { throw InputError("schema: " + what); }

void check_schema(const Json& j) {
  if (!j.is_object()) schema_error("expected an object");
  if (j.contains("schema") && j.at("schema") != kSchema)
    schema_error("unsupported schema version " + j.at("schema").dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema_error(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field \"") + key + "\"");
  return *it;
}

long as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  return j.get<long>();
}

int as_small(const Json& j, const char* what) { return static_cast<int>(as_int(j, what)); }

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) schema_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  return j;
}

Rational as_rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(as_string(j, what));
}

Json with_schema(Json body) {
  Json out = {{"schema", kSchema}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Json int_matrix(const std::vector<std::vector<long>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

std::vector<std::vector<long>> int_matrix_from(const Json& j, const char* what) {
  std::vector<std::vector<long>> out;
  for (const auto& row : as_array(j, what)) {
    std::vector<long> r;
    for (const auto& x : as_array(row, what)) r.push_back(as_int(x, what));
    out.push_back(std::move(r));
  }
  return out;
}

Json tree_body(const ColoredTree& t, const std::vector<std::string>* labels) {
  Json trivalent = Json::array();
  Json univalent = Json::array();
  Json edges = Json::array();
  Json cyclic = Json::object();
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& nb = t.adj[idx(v)];
    if (nb.size() == 3) {
      trivalent.push_back(v);
      cyclic[std::to_string(v)] = nb;
    } else {
      const int c = t.color[idx(v)];
      Json leg = {{"v", v}};
      if (c > 0)
        leg["color"] = c;
      else if (labels && x_index(c) < static_cast<int>(labels->size()))
        leg["label"] = (*labels)[idx(x_index(c))];
      else
        leg["label"] = x_index(c);
      univalent.push_back(std::move(leg));
    }
    for (int w : nb)
      if (v < w) edges.push_back({v, w});
  }
  return {{"colors", t.colors},
          {"trivalent", trivalent},
          {"univalent", univalent},
          {"edges", edges},
          {"cyclic_order", cyclic}};
}

Json vector_body(const TreeVector& v) {
  Json terms = Json::array();
  for (const auto& [t, c] : v.terms()) terms.push_back({{"coeff", to_string(c)}, {"tree", tree_body(t.to_tree(v.colors()), nullptr)}});
  return {{"colors", v.colors()}, {"terms", terms}};
}

Json facts_body(const NullCertificate& c) {
  Json facts = Json::array();
  for (const auto& f : c.facts)
    facts.push_back({{"curve", f.curve}, {"word", f.word}, {"check", f.check}, {"holds", f.holds}});
  return {{"kind", "null_certificate"}, {"level", c.level}, {"granted", true}, {"facts", facts}};
}

Json spec_body(const ClasperSpec& c) {
  Json leaves = Json::array();
  for (const auto& l : c.leaves) leaves.push_back({{"word", l.word.to_string()}, {"framing", l.framing}});
  Json out = {{"shape", tree_body(c.shape, nullptr)},
              {"leaves", leaves},
              {"leaf_linking", int_matrix(c.leaf_linking)},
              {"rank", c.rank},
              {"degree", c.degree()}};
  if (c.derived_level) out["derived_level"] = *c.derived_level;
  if (!c.designated.empty()) out["designated"] = c.designated;
  return out;
}

Json presentation_body(const SurgeryPresentation& s) {
  Json curves = Json::array();
  for (const auto& c : s.curves)
    curves.push_back({{"label", c.label},
                      {"kind", c.kind == CurveKind::Edge ? "edge" : "leaf"},
                      {"word", c.word.to_string()},
                      {"framing", c.framing},
                      {"arm", c.arm}});
  Json arms = Json::array();
  for (const auto& [e, l] : s.arms) arms.push_back({e, l});
  Json out = {{"rank", s.rank},
              {"curves", curves},
              {"linking", int_matrix(s.linking)},
              {"arms", arms},
              {"borromean", s.borromean}};
  if (s.certificate) out["certificate"] = facts_body(*s.certificate);
  return out;
}

Json result_body(const GluingResult& g) {
  Json per = Json::object();
  for (const auto& [d, v] : g.per_degree) per[std::to_string(d)] = vector_body(v);
  return {{"min_degree", g.min_degree ? Json(*g.min_degree) : Json(nullptr)},
          {"value", vector_body(g.value)},
          {"per_degree", per},
          {"sign_convention", g.sign_convention}};
}

// Index the tree reader assigns to the file's vertex id v (ids are sorted).
int file_vertex(const Json& j, int v) {
  std::vector<int> ids;
  for (const auto& x : j.at("trivalent")) ids.push_back(x.get<int>());
  for (const auto& u : j.at("univalent")) ids.push_back(u.at("v").get<int>());
  std::sort(ids.begin(), ids.end());
  auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) schema_error("vertex " + std::to_string(v) + " is not in the tree");
  return static_cast<int>(it - ids.begin());
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

Json to_json(const ColoredTree& t, const std::vector<std::string>* labels) {
  return with_schema(tree_body(t, labels));
}

ColoredTree tree_from_json(const Json& j, const std::vector<std::string>* labels) {
  check_schema(j);
  std::vector<int> ids;
  std::map<int, int> color;
  for (const auto& v : as_array(field(j, "trivalent"), "trivalent")) {
    ids.push_back(as_small(v, "trivalent vertex"));
    color[ids.back()] = 0;
  }
  for (const auto& u : as_array(field(j, "univalent"), "univalent")) {
    const int v = as_small(field(u, "v"), "univalent vertex");
    ids.push_back(v);
    int c = 0;
    if (u.contains("color")) {
      c = as_small(u.at("color"), "color");
      if (c < 1) schema_error("colors must be positive");
    } else if (u.contains("label")) {
      const Json& l = u.at("label");
      int k = -1;
      if (l.is_string()) {
        if (!labels) schema_error("string label " + l.dump() + " without a label table");
        auto it = std::find(labels->begin(), labels->end(), l.get<std::string>());
        if (it == labels->end()) schema_error("unknown label " + l.dump());
        k = static_cast<int>(it - labels->begin());
      } else {
        k = as_small(l, "label");
        if (k < 0) schema_error("label index must be nonnegative");
      }
      c = x_color(k);
    } else {
      schema_error("univalent vertex " + std::to_string(v) + " needs a color or label");
    }
    color[v] = c;
  }
  if (color.size() != ids.size()) schema_error("vertex ids are not distinct");
  std::map<int, int> index;
  for (const auto& [v, c] : color) index.emplace(v, static_cast<int>(index.size()));

  ColoredTree t;
  t.colors = j.contains("colors") ? as_small(j.at("colors"), "colors") : 0;
  t.adj.resize(color.size());
  for (const auto& [v, c] : color) t.color.push_back(c);

  std::vector<std::multiset<int>> from_edges(color.size());
  for (const auto& e : as_array(field(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) schema_error("each edge is a pair of vertex ids");
    const int a = as_small(e[0], "edge endpoint");
    const int b = as_small(e[1], "edge endpoint");
    if (!index.count(a) || !index.count(b)) schema_error("edge endpoint is not a vertex");
    from_edges[idx(index[a])].insert(index[b]);
    from_edges[idx(index[b])].insert(index[a]);
  }
  const Json& cyclic = field(j, "cyclic_order");
  if (!cyclic.is_object()) schema_error("cyclic_order must be an object");
  for (const auto& [v, c] : color) {
    const int i = index[v];
    if (c == 0) {
      auto it = cyclic.find(std::to_string(v));
      if (it == cyclic.end()) schema_error("no cyclic order at trivalent vertex " + std::to_string(v));
      for (const auto& w : as_array(*it, "cyclic order")) {
        const int wi = as_small(w, "cyclic order entry");
        if (!index.count(wi)) schema_error("cyclic order names unknown vertex " + std::to_string(wi));
        t.adj[idx(i)].push_back(index[wi]);
      }
      if (std::multiset<int>(t.adj[idx(i)].begin(), t.adj[idx(i)].end()) != from_edges[idx(i)])
        schema_error("cyclic order at " + std::to_string(v) + " does not match its edges");
    } else {
      if (cyclic.contains(std::to_string(v))) schema_error("cyclic order given at univalent vertex " + std::to_string(v));
      t.adj[idx(i)].assign(from_edges[idx(i)].begin(), from_edges[idx(i)].end());
    }
  }
  check_tree(t);
  return t;
}

Json to_json(const TreeVector& v) { return with_schema(vector_body(v)); }

TreeVector tree_vector_from_json(const Json& j) {
  const Json* terms = &j;
  int colors = 0;
  if (j.is_object()) {
    check_schema(j);
    terms = &field(j, "terms");
    if (j.contains("colors")) colors = as_small(j.at("colors"), "colors");
  }
  TreeVector out(colors);
  for (const auto& term : as_array(*terms, "terms")) {
    const ColoredTree t = tree_from_json(field(term, "tree"));
    out.add(t, as_rational(field(term, "coeff"), "coeff"));
  }
  return out;
}

Json to_json(const Pattern& p) {
  Json out = with_schema(tree_body(p.tree, nullptr));
  out["vertex"] = p.vertex;
  return out;
}

std::pair<ColoredTree, std::optional<int>> pattern_input_from_json(const Json& j) {
  ColoredTree t = tree_from_json(j);
  std::optional<int> vertex;
  if (j.contains("vertex") && !j.at("vertex").is_null())
    vertex = file_vertex(j, as_small(j.at("vertex"), "vertex"));
  return {std::move(t), vertex};
}

Pattern pattern_from_json(const Json& j) {
  auto [t, v] = pattern_input_from_json(j);
  return validate_pattern(t, v);
}

Json to_json(const NPattern& q) {
  Json out = with_schema(tree_body(q.tree, nullptr));
  out["n"] = q.n;
  out["embedding"] = q.embedding;
  return out;
}

NPattern npattern_from_json(const Json& j) {
  const ColoredTree t = tree_from_json(j);
  const int n = as_small(field(j, "n"), "n");
  if (!j.contains("embedding")) return validate_n_pattern(t, n);
  std::vector<int> emb;
  for (const auto& x : as_array(j.at("embedding"), "embedding")) emb.push_back(file_vertex(j, as_small(x, "embedding entry")));
  return make_n_pattern(t, n, emb);
}

Json to_json(const ClasperSpec& c) { return with_schema(spec_body(c)); }

ClasperSpec clasper_from_json(const Json& j) {
  check_schema(j);
  ClasperSpec c;
  c.shape = tree_from_json(field(j, "shape"));
  for (const auto& l : as_array(field(j, "leaves"), "leaves")) {
    ClasperLeaf leaf;
    leaf.word = parse_word(as_string(field(l, "word"), "word"));
    leaf.framing = l.contains("framing") ? as_small(l.at("framing"), "framing") : 0;
    c.leaves.push_back(std::move(leaf));
  }
  if (j.contains("leaf_linking"))
    c.leaf_linking = int_matrix_from(j.at("leaf_linking"), "leaf_linking");
  else
    c.leaf_linking.assign(c.leaves.size(), std::vector<long>(c.leaves.size(), 0));
  if (j.contains("rank")) {
    c.rank = as_small(j.at("rank"), "rank");
  } else {
    for (const auto& l : c.leaves) c.rank = std::max(c.rank, l.word.max_generator());
  }
  if (j.contains("derived_level")) c.derived_level = as_small(j.at("derived_level"), "derived_level");
  if (j.contains("designated"))
    for (const auto& d : as_array(j.at("designated"), "designated")) c.designated.push_back(as_small(d, "designated"));
  try {
    check_spec(c);
  } catch (const ValidationError& e) {
    schema_error(e.what());
  }
  if (j.contains("degree") && as_small(j.at("degree"), "degree") != c.degree())
    schema_error("declared degree does not match the shape");
  return c;
}

Json to_json(const ClasperSystem& s) {
  Json claspers = Json::array();
  for (const auto& c : s.claspers) claspers.push_back(spec_body(c));
  Json hopf = Json::array();
  for (const auto& h : s.hopf) hopf.push_back({h.clasper_a, h.leaf_a, h.clasper_b, h.leaf_b});
  return with_schema({{"rank", s.rank}, {"claspers", claspers}, {"hopf", hopf}, {"linking", int_matrix(s.linking)}});
}

ClasperSystem clasper_system_from_json(const Json& j) {
  check_schema(j);
  ClasperSystem s;
  s.rank = as_small(field(j, "rank"), "rank");
  for (const auto& c : as_array(field(j, "claspers"), "claspers")) s.claspers.push_back(clasper_from_json(c));
  for (const auto& h : as_array(field(j, "hopf"), "hopf")) {
    if (!h.is_array() || h.size() != 4) schema_error("hopf entries are [clasper, leaf, clasper, leaf]");
    s.hopf.push_back({as_small(h[0], "hopf"), as_small(h[1], "hopf"), as_small(h[2], "hopf"), as_small(h[3], "hopf")});
  }
  s.linking = int_matrix_from(field(j, "linking"), "linking");
  if (s.linking.size() != s.leaf_count()) schema_error("system linking has the wrong size");
  return s;
}

Json to_json(const NullCertificate& c) { return with_schema(facts_body(c)); }

NullCertificate certificate_from_json(const Json& j) {
  check_schema(j);
  NullCertificate c;
  c.level = as_small(field(j, "level"), "level");
  for (const auto& f : as_array(field(j, "facts"), "facts")) {
    if (!field(f, "holds").is_boolean()) schema_error("holds must be a boolean");
    c.facts.push_back({as_string(field(f, "curve"), "curve"), as_string(field(f, "word"), "word"),
                       as_string(field(f, "check"), "check"), f.at("holds").get<bool>()});
  }
  return c;
}

Json to_json(const SurgeryPresentation& s) { return with_schema(presentation_body(s)); }

SurgeryPresentation presentation_from_json(const Json& j) {
  check_schema(j);
  SurgeryPresentation s;
  s.rank = as_small(field(j, "rank"), "rank");
  for (const auto& c : as_array(field(j, "curves"), "curves")) {
    SurgeryCurve curve;
    curve.label = as_string(field(c, "label"), "label");
    const std::string kind = as_string(field(c, "kind"), "kind");
    if (kind != "edge" && kind != "leaf") schema_error("curve kind must be \"edge\" or \"leaf\"");
    curve.kind = kind == "edge" ? CurveKind::Edge : CurveKind::Leaf;
    curve.word = parse_word(as_string(field(c, "word"), "word"), s.rank);
    curve.framing = as_small(field(c, "framing"), "framing");
    curve.arm = as_small(field(c, "arm"), "arm");
    s.curves.push_back(std::move(curve));
  }
  s.linking = int_matrix_from(field(j, "linking"), "linking");
  const std::size_t n = s.curves.size();
  if (s.linking.size() != n) schema_error("linking matrix does not match the curves");
  for (std::size_t a = 0; a < n; ++a) {
    if (s.linking[a].size() != n) schema_error("linking matrix is not square");
    for (std::size_t b = 0; b < a; ++b)
      if (s.linking[a][b] != s.linking[b][a]) schema_error("linking matrix is not symmetric");
  }
  for (const auto& a : as_array(field(j, "arms"), "arms")) {
    if (!a.is_array() || a.size() != 2) schema_error("arms are [edge curve, leaf curve] pairs");
    const int e = as_small(a[0], "arm");
    const int l = as_small(a[1], "arm");
    if (e < 0 || l < 0 || idx(e) >= n || idx(l) >= n) schema_error("arm curve index out of range");
    s.arms.emplace_back(e, l);
  }
  for (const auto& b : as_array(field(j, "borromean"), "borromean")) {
    std::vector<int> triple;
    for (const auto& x : as_array(b, "borromean")) {
      triple.push_back(as_small(x, "borromean"));
      if (triple.back() < 0 || idx(triple.back()) >= n) schema_error("borromean curve index out of range");
    }
    if (triple.size() != 3) schema_error("borromean entries are triples");
    s.borromean.push_back(std::move(triple));
  }
  if (j.contains("certificate") && !j.at("certificate").is_null())
    s.certificate = certificate_from_json(j.at("certificate"));
  return s;
}

Json to_json(const LeggedSeries& s) {
  Json q = Json::array();
  for (std::size_t i = 0; i < s.q.q.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < s.q.q.cols(); ++k) row.push_back(to_string(s.q.q(i, k)));
    q.push_back(std::move(row));
  }
  Json r = Json::array();
  for (const auto& m : s.r) {
    Json trees = Json::array();
    for (const auto& t : m.trees) trees.push_back(tree_body(t, &s.q.labels));
    r.push_back({{"coeff", to_string(m.coeff)}, {"trees", trees}});
  }
  return with_schema({{"labels", s.q.labels}, {"Q", q}, {"R", r}, {"cap", s.cap}, {"colors", s.colors}});
}

LeggedSeries series_from_json(const Json& j) {
  check_schema(j);
  LeggedSeries s;
  for (const auto& l : as_array(field(j, "labels"), "labels")) s.q.labels.push_back(as_string(l, "label"));
  const std::size_t n = s.q.labels.size();
  if (std::set<std::string>(s.q.labels.begin(), s.q.labels.end()).size() != n) schema_error("labels are not distinct");
  const Json& q = as_array(field(j, "Q"), "Q");
  if (q.size() != n) schema_error("Q does not match the labels");
  s.q.q = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (as_array(q[i], "Q").size() != n) schema_error("Q is not square");
    for (std::size_t k = 0; k < n; ++k) s.q.q(i, k) = as_rational(q[i][k], "Q entry");
  }
  for (const auto& m : as_array(field(j, "R"), "R")) {
    LeggedMonomial mono;
    mono.coeff = as_rational(field(m, "coeff"), "coeff");
    for (const auto& t : as_array(field(m, "trees"), "trees")) mono.trees.push_back(tree_from_json(t, &s.q.labels));
    s.r.push_back(std::move(mono));
  }
  s.cap = as_small(field(j, "cap"), "cap");
  s.colors = j.contains("colors") ? as_small(j.at("colors"), "colors") : 0;
  check_series(s);
  return s;
}

Json to_json(const GluingResult& g) { return with_schema(result_body(g)); }

GluingResult gluing_result_from_json(const Json& j) {
  check_schema(j);
  GluingResult g;
  const Json& md = field(j, "min_degree");
  if (!md.is_null()) g.min_degree = as_small(md, "min_degree");
  g.value = tree_vector_from_json(field(j, "value"));
  const Json& per = field(j, "per_degree");
  if (!per.is_object()) schema_error("per_degree must be an object");
  for (const auto& [k, v] : per.items()) {
    int d = 0;
    try {
      d = std::stoi(k);
    } catch (const std::exception&) {
      schema_error("per_degree keys are degrees");
    }
    g.per_degree[d] = tree_vector_from_json(v);
  }
  g.sign_convention = as_string(field(j, "sign_convention"), "sign_convention");
  return g;
}

Json to_json(const SphereVerdict& v) {
  return with_schema({{"kind", "sphere_condition"},
                      {"verdict", v.pass ? "PASS" : "FAIL"},
                      {"designated", v.designated},
                      {"reason", v.reason},
                      {"assumption", v.assumption}});
}

Json to_json(const ZminReport& r) {
  Json out = {{"kind", "zmin_report"},
              {"n", r.n},
              {"vertex", r.vertex >= 0 ? Json(r.vertex) : Json(nullptr)},
              {"stages", r.stages},
              {"expected_degree", r.expected_degree},
              {"beta", vector_body(r.beta)},
              {"beta_vanishes", r.beta_vanishes},
              {"clasper", spec_body(r.clasper)},
              {"presentation", presentation_body(r.presentation)},
              {"result", result_body(r.result)},
              {"lower_degrees_vanish", r.lower_degrees_vanish},
              {"matched_sign", r.matched_sign},
              {"verdict", r.pass ? "PASS" : "FAIL"}};
  if (r.oracle_agrees) out["oracle_agrees"] = *r.oracle_agrees;
  return with_schema(out);
}

}  // namespace clasp

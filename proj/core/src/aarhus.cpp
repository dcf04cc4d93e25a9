#include "clasp/aarhus.hpp"

#include "clasp/errors.hpp"
#include "clasp/magnus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace clasp {

const char* const kSignConvention =
    "vortex legs read in reverse cyclic order of the clasper vertex; with this choice zmin(beta) = +beta";

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

struct Leg {
  int tree;
  int vertex;  // global vertex id
  int label;
};

struct Flat {
  std::vector<std::vector<int>> adj;
  std::vector<int> color;
  std::vector<int> tree_of;
  std::vector<Leg> legs;
};

Flat flatten(const LeggedMonomial& m) {
  Flat f;
  for (std::size_t t = 0; t < m.trees.size(); ++t) {
    const int offset = static_cast<int>(f.adj.size());
    const auto& tree = m.trees[t];
    for (int v = 0; v < tree.vertex_count(); ++v) {
      std::vector<int> nb = tree.adj[idx(v)];
      for (int& w : nb) w += offset;
      f.adj.push_back(std::move(nb));
      f.color.push_back(tree.color[idx(v)]);
      f.tree_of.push_back(static_cast<int>(t));
      if (tree.color[idx(v)] < 0) f.legs.push_back({static_cast<int>(t), offset + v, x_index(tree.color[idx(v)])});
    }
  }
  return f;
}

ColoredTree compact(const std::vector<std::vector<int>>& adj, const std::vector<int>& color, int colors) {
  std::vector<int> index(adj.size(), -1);
  int n = 0;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (color[v] >= 0) index[v] = n++;
  ColoredTree t;
  t.colors = colors;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (index[v] < 0) continue;
    std::vector<int> nb;
    for (int w : adj[v]) nb.push_back(index[idx(w)]);
    t.adj.push_back(std::move(nb));
    t.color.push_back(color[v]);
  }
  return t;
}

// Splices each glued pair of legs out of the union; the caller guarantees
// the pairing yields a single tree.
ColoredTree splice(const Flat& f, const std::vector<int>& partner, int colors) {
  auto adj = f.adj;
  for (std::size_t a = 0; a < f.legs.size(); ++a) {
    const auto b = idx(partner[a]);
    if (b < a) continue;
    const int va = f.legs[a].vertex;
    const int vb = f.legs[b].vertex;
    const int na = adj[idx(va)][0];
    const int nb = adj[idx(vb)][0];
    std::replace(adj[idx(na)].begin(), adj[idx(na)].end(), va, nb);
    std::replace(adj[idx(nb)].begin(), adj[idx(nb)].end(), vb, na);
  }
  return compact(adj, f.color, colors);
}

void glue_monomial(const LeggedMonomial& m, const Matrix& w, int colors, const Limits& limits, TreeVector& out) {
  const Flat f = flatten(m);
  const std::size_t legs = f.legs.size();
  if (legs % 2 == 1) return;
  if (legs > idx(limits.max_glue_legs))
    throw LimitError("monomial has " + std::to_string(legs) + " X legs; glue is limited to " +
                     std::to_string(limits.max_glue_legs));
  if (legs / 2 + 1 != m.trees.size()) return;  // cannot be a single tree

  std::vector<int> partner(legs, -1);
  std::vector<int> component(m.trees.size());
  std::iota(component.begin(), component.end(), 0);

  auto recurse = [&](auto&& self, const Rational& weight) -> void {
    const auto first = std::find(partner.begin(), partner.end(), -1);
    if (first == partner.end()) {
      out.add(splice(f, partner, colors), weight * m.coeff);
      return;
    }
    const auto a = static_cast<std::size_t>(first - partner.begin());
    for (std::size_t b = a + 1; b < legs; ++b) {
      if (partner[b] != -1) continue;
      const Rational& wt = w(idx(f.legs[a].label), idx(f.legs[b].label));
      if (wt == 0) continue;
      const int ca = component[idx(f.legs[a].tree)];
      const int cb = component[idx(f.legs[b].tree)];
      if (ca == cb) continue;  // would close a loop
      const auto saved = component;
      for (int& c : component)
        if (c == cb) c = ca;
      partner[a] = static_cast<int>(b);
      partner[b] = static_cast<int>(a);
      self(self, weight * wt);
      partner[a] = partner[b] = -1;
      component = saved;
    }
  };
  recurse(recurse, Rational(1));
}

// Naive version: joins every pair by an edge, smooths the two leg vertices
// away, and keeps the result only if it is a tree.
std::optional<ColoredTree> smooth(const Flat& f, const std::vector<int>& partner, int colors) {
  auto adj = f.adj;
  for (std::size_t a = 0; a < f.legs.size(); ++a) adj[idx(f.legs[a].vertex)].push_back(f.legs[idx(partner[a])].vertex);
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (f.color[v] < 0) continue;
    for (int u : adj[v]) {
      int prev = static_cast<int>(v);
      int cur = u;
      std::size_t steps = 0;
      while (f.color[idx(cur)] < 0 && steps++ <= n) {
        const auto& nb = adj[idx(cur)];
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      out[v].push_back(cur);
    }
  }
  std::size_t vertices = 0;
  std::size_t degree_sum = 0;
  int start = -1;
  for (std::size_t v = 0; v < n; ++v)
    if (f.color[v] >= 0) {
      ++vertices;
      degree_sum += out[v].size();
      if (start < 0) start = static_cast<int>(v);
    }
  if (vertices == 0 || degree_sum != 2 * (vertices - 1)) return std::nullopt;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[idx(start)] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : out[idx(v)])
      if (!seen[idx(w)]) {
        seen[idx(w)] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != vertices) return std::nullopt;
  for (std::size_t v = 0; v < n; ++v)
    for (int w : out[v])
      if (idx(w) == v) return std::nullopt;
  return compact(out, f.color, colors);
}

void brute_monomial(const LeggedMonomial& m, const Matrix& w, int colors, const Limits& limits, TreeVector& out) {
  const Flat f = flatten(m);
  const std::size_t legs = f.legs.size();
  if (legs > idx(limits.max_brute_legs))
    throw LimitError("monomial has " + std::to_string(legs) + " X legs; brute_glue is limited to " +
                     std::to_string(limits.max_brute_legs));
  if (legs % 2 == 1) return;
  std::vector<int> partner(legs, -1);
  auto recurse = [&](auto&& self) -> void {
    const auto first = std::find(partner.begin(), partner.end(), -1);
    if (first == partner.end()) {
      Rational weight = m.coeff;
      for (std::size_t a = 0; a < legs; ++a)
        if (idx(partner[a]) > a) weight *= w(idx(f.legs[a].label), idx(f.legs[idx(partner[a])].label));
      if (auto t = smooth(f, partner, colors)) out.add(*t, weight);
      return;
    }
    const auto a = static_cast<std::size_t>(first - partner.begin());
    for (std::size_t b = a + 1; b < legs; ++b) {
      if (partner[b] != -1) continue;
      partner[a] = static_cast<int>(b);
      partner[b] = static_cast<int>(a);
      self(self);
      partner[a] = partner[b] = -1;
    }
  };
  recurse(recurse);
}

GluingResult finish(TreeVector value) {
  GluingResult out;
  for (int d : value.degrees()) {
    out.per_degree[d] = value.component(d);
    if (!out.min_degree && !is_zero(out.per_degree[d])) out.min_degree = d;
  }
  out.value = std::move(value);
  out.sign_convention = kSignConvention;
  return out;
}

bool is_null(const Word& w, int rank) {
  const auto sums = exponent_sums(w, rank);
  return std::all_of(sums.begin(), sums.end(), [](long x) { return x == 0; });
}

}  // namespace

StrutMatrix strut_matrix(const SurgeryPresentation& s) {
  StrutMatrix out;
  const std::size_t n = s.curves.size();
  if (s.linking.size() != n) throw InputError("linking matrix does not match the curve count");
  out.q = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.labels.push_back(s.curves[i].label);
    if (s.linking[i].size() != n) throw InputError("linking matrix is not square");
    for (std::size_t j = 0; j < n; ++j) out.q(i, j) = s.linking[i][j];
  }
  if (!out.q.is_symmetric()) throw InputError("linking matrix is not symmetric");
  return out;
}

Matrix negative_inverse(const Matrix& q) { return -inverse(q); }
Matrix negative_inverse(const StrutMatrix& q) { return negative_inverse(q.q); }

int x_leg_count(const LeggedMonomial& m) {
  int n = 0;
  for (const auto& t : m.trees)
    for (int v : t.leaves())
      if (t.color[idx(v)] < 0) ++n;
  return n;
}

int unlink_leg_count(const LeggedMonomial& m) {
  int n = 0;
  for (const auto& t : m.trees)
    for (int v : t.leaves())
      if (t.color[idx(v)] > 0) ++n;
  return n;
}

void check_series(const LeggedSeries& s) {
  const std::size_t n = s.q.labels.size();
  if (s.q.q.rows() != n || s.q.q.cols() != n) throw InputError("Q does not match the label count");
  if (!s.q.q.is_symmetric()) throw InputError("Q is not symmetric");
  if (s.cap < 0) throw InputError("cap must be nonnegative");
  for (const auto& m : s.r)
    for (const auto& t : m.trees) {
      check_tree(t);
      for (int v : t.leaves()) {
        const int c = t.color[idx(v)];
        if (c < 0 && x_index(c) >= static_cast<int>(n))
          throw InputError("leg label index " + std::to_string(x_index(c)) + " out of range");
        if (c > 0 && s.colors > 0 && c > s.colors)
          throw InputError("leg color " + std::to_string(c) + " exceeds the color count");
      }
      if (t.vertex_count() == 2 && t.color[0] < 0 && t.color[1] < 0)
        throw InputError("R contains a strut with two X legs; those belong to Q");
    }
}

GluingResult glue(const LeggedSeries& s, const Limits& limits) {
  check_series(s);
  const Matrix w = negative_inverse(s.q);
  TreeVector value(s.colors);
  for (const auto& m : s.r) glue_monomial(m, w, s.colors, limits, value);
  return finish(std::move(value));
}

GluingResult brute_glue(const LeggedSeries& s, const Limits& limits) {
  check_series(s);
  const Matrix w = negative_inverse(s.q);
  TreeVector value(s.colors);
  for (const auto& m : s.r) brute_monomial(m, w, s.colors, limits, value);
  return finish(std::move(value));
}

LeggedSeries leading_series(const SurgeryPresentation& s, int cap, const Limits& limits) {
  if (!s.certificate)
    throw CertificateError("presentation has no null certificate; leaf-unlink struts would enter R", "certificate");
  if (cap < 1) throw InputError("cap must be at least 1");
  LeggedSeries out;
  out.q = strut_matrix(s);
  out.cap = cap;
  out.colors = s.rank;

  struct Term {
    ColoredTree tree;
    Rational coeff;
    int legs;
  };
  std::vector<std::vector<Term>> factors;
  for (const auto& triple : s.borromean)
    factors.push_back(
        {{make_vortex(x_color(triple[0]), x_color(triple[2]), x_color(triple[1]), s.rank), Rational(1), 0}});

  const int budget = cap + 1;
  std::vector<int> leaf_curves;
  std::map<int, int> lowest;
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    const auto& c = s.curves[i];
    if (c.kind != CurveKind::Leaf || c.word.is_identity()) continue;
    if (!is_null(c.word, s.rank)) throw CertificateError("leaf " + c.label + " is not null-homologous", c.label);
    const LcsDegree d = lcs_degree(c.word, budget);
    lowest[static_cast<int>(i)] = d.at_least ? budget + 1 : d.degree;
    leaf_curves.push_back(static_cast<int>(i));
  }
  for (int i : leaf_curves) {
    int own = budget;
    for (int j : leaf_curves)
      if (j != i) own -= lowest[j];
    if (own < lowest[i]) continue;
    const RootedSeries series = tree_expansion(s.curves[idx(i)].word, own, x_color(i));
    std::vector<Term> terms;
    for (const auto& [body, c] : series.terms)
      terms.push_back({tree_from_body(x_color(i), body, s.rank), c, static_cast<int>(body.leaf_count())});
    if (!terms.empty()) factors.push_back(std::move(terms));
  }

  LeggedMonomial current;
  auto recurse = [&](auto&& self, std::size_t f, int legs) -> void {
    if (f == factors.size()) {
      if (!current.trees.empty()) out.r.push_back(current);
      if (out.r.size() > static_cast<std::size_t>(limits.max_enumeration))
        throw LimitError("leading series exceeds the enumeration limit");
      return;
    }
    self(self, f + 1, legs);
    for (const auto& term : factors[f]) {
      if (legs + term.legs > budget) continue;
      current.trees.push_back(term.tree);
      const Rational saved = current.coeff;
      current.coeff *= term.coeff;
      self(self, f + 1, legs + term.legs);
      current.coeff = saved;
      current.trees.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

LeggedSeries restrict_to_arms(const SurgeryPresentation& s, const LeggedSeries& series,
                              const std::vector<bool>& keep) {
  if (keep.size() != s.arms.size()) throw InputError("arm mask has the wrong size");
  if (series.q.labels.size() != s.curves.size()) throw InputError("series labels do not match the presentation");
  for (std::size_t i = 0; i < s.curves.size(); ++i)
    if (series.q.labels[i] != s.curves[i].label) throw InputError("series labels do not match the presentation");

  std::vector<int> remap(s.curves.size(), -1);
  std::vector<int> kept;
  for (std::size_t a = 0; a < s.arms.size(); ++a)
    if (keep[a]) {
      kept.push_back(s.arms[a].first);
      kept.push_back(s.arms[a].second);
    }
  std::sort(kept.begin(), kept.end());
  for (std::size_t i = 0; i < kept.size(); ++i) remap[idx(kept[i])] = static_cast<int>(i);

  LeggedSeries out;
  out.cap = series.cap;
  out.colors = series.colors;
  out.q.q = Matrix(kept.size(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    out.q.labels.push_back(series.q.labels[idx(kept[i])]);
    for (std::size_t j = 0; j < kept.size(); ++j) out.q.q(i, j) = series.q.q(idx(kept[i]), idx(kept[j]));
  }
  for (const auto& m : series.r) {
    LeggedMonomial mm = m;
    bool inside = true;
    for (auto& t : mm.trees)
      for (int& c : t.color)
        if (c < 0) {
          const int r = remap[idx(x_index(c))];
          if (r < 0) inside = false;
          c = x_color(r < 0 ? 0 : r);
        }
    if (inside) out.r.push_back(std::move(mm));
  }
  return out;
}

GluingResult arm_alternation(const SurgeryPresentation& s, const LeggedSeries& series, const Limits& limits) {
  const std::size_t arms = s.arms.size();
  if (arms > 12) throw LimitError("arm alternation over " + std::to_string(arms) + " arms exceeds 2^12 subsets");
  TreeVector total(series.colors);
  for (unsigned mask = 0; mask < (1u << arms); ++mask) {
    std::vector<bool> keep(arms);
    for (std::size_t a = 0; a < arms; ++a) keep[a] = (mask >> a) & 1u;
    const GluingResult part = glue(restrict_to_arms(s, series, keep), limits);
    if ((arms - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0)
      total += part.value;
    else
      total -= part.value;
  }
  return finish(std::move(total));
}

LeggedSeries arm_filter(const SurgeryPresentation& s, const LeggedSeries& series) {
  std::vector<int> arm_of(s.curves.size(), -1);
  for (std::size_t a = 0; a < s.arms.size(); ++a)
    arm_of[idx(s.arms[a].first)] = arm_of[idx(s.arms[a].second)] = static_cast<int>(a);
  LeggedSeries filtered = series;
  filtered.r.clear();
  for (const auto& m : series.r) {
    std::vector<bool> touched(s.arms.size(), false);
    for (const auto& t : m.trees)
      for (int c : t.color)
        if (c < 0 && x_index(c) < static_cast<int>(arm_of.size()) && arm_of[idx(x_index(c))] >= 0)
          touched[idx(arm_of[idx(x_index(c))])] = true;
    if (std::all_of(touched.begin(), touched.end(), [](bool b) { return b; })) filtered.r.push_back(m);
  }
  return filtered;
}

GluingResult arm_filtered_glue(const SurgeryPresentation& s, const LeggedSeries& series, const Limits& limits) {
  return glue(arm_filter(s, series), limits);
}

namespace {

template <class F>
auto run_stage(ZminReport& report, const std::string& name, F&& f) {
  report.stages.push_back(name);
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const InputError& e) {
    throw StageError(name, e.what(), true);
  } catch (const Error& e) {
    throw StageError(name, e.what(), false);
  }
}

void run_degree_one(ZminReport& report, const ClasperSpec& spec, int level, const ZminOptions& options) {
  report.clasper = spec;
  report.presentation = run_stage(report, "compile", [&] { return compile_surgery(spec); });
  if (level >= 2)
    report.presentation.certificate =
        run_stage(report, "certify", [&] { return certify_null(report.presentation, level, options.limits); });
  const int m = report.expected_degree;
  const int cap = options.cap.value_or(m);
  const LeggedSeries series = run_stage(
      report, "leading_series", [&] { return leading_series(report.presentation, cap, options.limits); });
  report.result =
      run_stage(report, "glue", [&] { return arm_alternation(report.presentation, series, options.limits); });
  if (options.oracle) {
    report.oracle_agrees = run_stage(report, "oracle", [&] {
      const LeggedSeries filtered = arm_filter(report.presentation, series);
      const GluingResult fast = glue(filtered, options.limits);
      const GluingResult brute = brute_glue(filtered, options.limits);
      return brute.value == fast.value && fast.value == report.result.value;
    });
  }

  report.lower_degrees_vanish = true;
  for (const auto& [d, part] : report.result.per_degree)
    if (d < m && !is_zero(part)) report.lower_degrees_vanish = false;
  const TreeVector top = report.result.value.component(m);
  if (is_zero(top - report.beta))
    report.matched_sign = 1;
  else if (is_zero(top + report.beta))
    report.matched_sign = -1;
  report.pass = cap >= m && report.lower_degrees_vanish && report.matched_sign != 0;
}

}  // namespace

ZminReport zmin(const Pattern& p, const ZminOptions& options) {
  ZminReport report;
  report.vertex = p.vertex;
  report.expected_degree = degree(p.tree);
  report.beta = TreeVector(p.tree.colors);
  report.beta.add(p.tree, Rational(1));
  report.beta_vanishes = is_zero(report.beta);
  const ClasperSpec spec = run_stage(report, "build", [&] { return build_clasper(p); });
  run_degree_one(report, spec, 1, options);
  return report;
}

ZminReport zmin(const NPattern& q, const ZminOptions& options) {
  ZminReport report;
  report.n = q.n;
  report.expected_degree = degree(q.tree);
  report.beta = TreeVector(q.tree.colors);
  report.beta.add(q.tree, Rational(1));
  report.beta_vanishes = is_zero(report.beta);
  const ClasperSpec built = run_stage(report, "build", [&] { return build_n_clasper(q); });
  const ClasperSpec spec = run_stage(report, "reduce", [&] { return reduce_to_degree_one(built, options.limits); });
  run_degree_one(report, spec, q.n, options);
  return report;
}

ZminReport zmin(const ColoredTree& t, int n, std::optional<int> vertex, const ZminOptions& options) {
  ZminReport probe;
  if (n == 0) {
    const Pattern p = run_stage(probe, "validate", [&] { return validate_pattern(t, vertex); });
    ZminReport r = zmin(p, options);
    r.stages.insert(r.stages.begin(), "validate");
    return r;
  }
  const NPattern q = run_stage(probe, "validate", [&] { return validate_n_pattern(t, n, options.limits); });
  ZminReport r = zmin(q, options);
  r.stages.insert(r.stages.begin(), "validate");
  return r;
}

}  // namespace clasp

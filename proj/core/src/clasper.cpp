#include "clasp/clasper.hpp"

#include "clasp/errors.hpp"
#include "clasp/solvable.hpp"

#include <algorithm>
#include <map>

namespace clasp {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::vector<int> rotated_from(const ColoredTree& t, int v, int first) {
  const auto& nb = t.adj[idx(v)];
  auto it = std::find(nb.begin(), nb.end(), first);
  std::vector<int> out(it, nb.end());
  out.insert(out.end(), nb.begin(), it);
  return out;
}

int branch_leaves(const ColoredTree& t, int from, int toward) {
  if (t.is_leaf(toward)) return 1;
  int total = 0;
  for (int w : t.adj[idx(toward)])
    if (w != from) total += branch_leaves(t, toward, w);
  return total;
}

bool admissible(const ColoredTree& t, int v) {
  if (t.adj[idx(v)].size() != 3) return false;
  for (int w : t.adj[idx(v)])
    if (branch_leaves(t, v, w) < 2) return false;
  return true;
}

int tree_rank(const ColoredTree& t) {
  if (t.colors > 0) return t.colors;
  int r = 0;
  for (int c : t.color) r = std::max(r, c);
  return r;
}

std::vector<std::vector<long>> zeros(std::size_t n) {
  return std::vector<std::vector<long>>(n, std::vector<long>(n, 0));
}

// c_tree vertex parents, recomputed from the shape (vertex 0 is the root side).
std::vector<int> c_parents(const ColoredTree& c) {
  std::vector<int> parent(c.adj.size(), -1);
  std::vector<int> stack{0};
  parent[0] = 1;
  if (c.adj.size() > 1) parent[1] = 0;
  stack.push_back(1);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : c.adj[idx(v)])
      if (w != parent[idx(v)] && parent[idx(w)] == -1) {
        parent[idx(w)] = v;
        stack.push_back(w);
      }
  }
  return parent;
}

// Checks an embedding of c (vertex i -> emb[i]); returns an empty string or
// the reason it fails.
std::string embedding_problem(const ColoredTree& t, const ColoredTree& c, const std::vector<int>& emb) {
  if (emb.size() != c.adj.size()) return "embedding has the wrong number of vertices";
  std::vector<int> sorted = emb;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "embedding is not injective";
  for (std::size_t i = 0; i < emb.size(); ++i) {
    const int v = emb[i];
    if (v < 0 || v >= t.vertex_count()) return "embedding vertex out of range";
    if (t.adj[idx(v)].size() != 3) return "vertex " + std::to_string(v) + " of the copy is not trivalent";
    for (int w : c.adj[i]) {
      const auto& nb = t.adj[idx(v)];
      if (std::find(nb.begin(), nb.end(), emb[idx(w)]) == nb.end())
        return "edge of c^(n) not mapped to an edge";
    }
  }
  for (std::size_t i = 0; i < emb.size(); ++i) {
    if (!c.is_leaf(static_cast<int>(i))) continue;
    const int v = emb[i];
    for (int w : t.adj[idx(v)]) {
      if (std::find(emb.begin(), emb.end(), w) != emb.end()) continue;
      if (branch_leaves(t, v, w) < 2) return "strut component at vertex " + std::to_string(v);
    }
  }
  return {};
}

// Maps c's vertices into t with the central edge sent to (u, w), children
// following t's cyclic order. Empty if some image vertex is univalent.
std::vector<int> grow_embedding(const ColoredTree& t, const ColoredTree& c, const std::vector<int>& parent, int u,
                                int w) {
  std::vector<int> emb(c.adj.size(), -1);
  emb[0] = u;
  emb[1] = w;
  std::vector<int> stack{0, 1};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    const int img = emb[idx(x)];
    if (t.adj[idx(img)].size() != 3) return {};
    if (c.is_leaf(x)) continue;
    const auto rot = rotated_from(t, img, emb[idx(parent[idx(x)])]);
    const auto crot = rotated_from(c, x, parent[idx(x)]);
    emb[idx(crot[1])] = rot[1];
    emb[idx(crot[2])] = rot[2];
    stack.push_back(crot[1]);
    stack.push_back(crot[2]);
  }
  return emb;
}

// Leaf indices of a degree-1 clasper in cyclic order at its vertex.
std::vector<int> arm_leaves(const ClasperSpec& c) {
  std::vector<int> out;
  for (int w : c.shape.adj[idx(c.shape.trivalent().front())]) out.push_back(c.shape.color[idx(w)] - 1);
  return out;
}

Word collapse(const ClasperSpec& c, int from, int x) {
  if (c.shape.is_leaf(x)) return c.leaves[idx(c.shape.color[idx(x)] - 1)].word;
  const auto rot = rotated_from(c.shape, x, from);
  return commutator(collapse(c, x, rot[1]), collapse(c, x, rot[2]));
}

}  // namespace

int ClasperSpec::degree() const { return static_cast<int>(shape.trivalent().size()); }

int ClasperSpec::slot_vertex(int k) const {
  for (int v = 0; v < shape.vertex_count(); ++v)
    if (shape.is_leaf(v) && shape.color[idx(v)] == k + 1) return v;
  throw ValidationError("no slot for leaf " + std::to_string(k + 1));
}

void check_spec(const ClasperSpec& c) {
  try {
    check_tree(c.shape);
  } catch (const Error& e) {
    throw ValidationError(std::string("clasper shape: ") + e.what());
  }
  if (c.degree() < 1) throw ValidationError("clasper has no trivalent vertex (struts are excluded)");
  const auto slots = c.shape.leaves();
  if (slots.size() != c.leaves.size())
    throw ValidationError("shape has " + std::to_string(slots.size()) + " slots but " +
                          std::to_string(c.leaves.size()) + " leaves are given");
  std::vector<bool> used(c.leaves.size(), false);
  for (int s : slots) {
    const int k = c.shape.color[idx(s)];
    if (k < 1 || k > static_cast<int>(c.leaves.size()) || used[idx(k - 1)])
      throw ValidationError("slot labels must be a permutation of 1.." + std::to_string(c.leaves.size()));
    used[idx(k - 1)] = true;
  }
  if (c.rank < 1) throw ValidationError("clasper rank must be positive");
  for (std::size_t i = 0; i < c.leaves.size(); ++i)
    if (c.leaves[i].word.max_generator() > c.rank)
      throw ValidationError("leaf " + std::to_string(i + 1) + " uses a generator beyond rank " +
                            std::to_string(c.rank));
  const std::size_t n = c.leaves.size();
  if (c.leaf_linking.size() != n) throw ValidationError("leaf_linking has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (c.leaf_linking[i].size() != n) throw ValidationError("leaf_linking has the wrong size");
    for (std::size_t j = 0; j < i; ++j)
      if (c.leaf_linking[i][j] != c.leaf_linking[j][i]) throw ValidationError("leaf_linking is not symmetric");
  }
  for (int d : c.designated)
    if (d < 0 || d >= static_cast<int>(n)) throw ValidationError("designated leaf out of range");
}

bool has_admissible_vertex(const ColoredTree& t) {
  for (int v : t.trivalent())
    if (admissible(t, v)) return true;
  return false;
}

Pattern validate_pattern(const ColoredTree& t, std::optional<int> vertex) {
  check_tree(t);
  if (t.trivalent().empty()) throw ValidationError("no trivalent vertex (strut input)");
  if (vertex) {
    if (*vertex < 0 || *vertex >= t.vertex_count() || t.adj[idx(*vertex)].size() != 3)
      throw ValidationError("vertex " + std::to_string(*vertex) + " is not trivalent");
    if (!admissible(t, *vertex))
      throw ValidationError("vertex " + std::to_string(*vertex) + " leaves strut components");
    return {t, *vertex};
  }
  for (int v : canonical_vertex_order(t))
    if (admissible(t, v)) return {t, v};
  throw ValidationError("every trivalent vertex leaves strut components");
}

std::vector<RootedTree> split(const Pattern& p) {
  std::vector<RootedTree> out;
  for (int w : p.tree.adj[idx(p.vertex)]) out.push_back({branch_body(p.tree, p.vertex, w)});
  return out;
}

ColoredTree c_tree(int n, const Limits& limits) {
  if (n < 1) throw InputError("c_tree needs n >= 1");
  if (n > limits.max_c_tree)
    throw LimitError("c_tree(" + std::to_string(n) + ") exceeds the configured bound " +
                     std::to_string(limits.max_c_tree));
  ColoredTree c;
  c.adj = {{1}, {0}};
  std::vector<int> slots{0, 1};
  for (int k = 1; k < n; ++k) {
    std::vector<int> next;
    for (int s : slots) {
      const int a = static_cast<int>(c.adj.size());
      const int b = a + 1;
      c.adj[idx(s)].push_back(a);
      c.adj[idx(s)].push_back(b);
      c.adj.push_back({s});
      c.adj.push_back({s});
      next.push_back(a);
      next.push_back(b);
    }
    slots = std::move(next);
  }
  c.color.assign(c.adj.size(), 0);
  for (std::size_t i = 0; i < slots.size(); ++i) c.color[idx(slots[i])] = static_cast<int>(i + 1);
  c.colors = static_cast<int>(slots.size());
  return c;
}

NPattern validate_n_pattern(const ColoredTree& t, int n, const Limits& limits) {
  check_tree(t);
  const ColoredTree c = c_tree(n, limits);
  const auto parent = c_parents(c);
  const auto order = t.trivalent().empty() ? std::vector<int>{} : canonical_vertex_order(t);
  for (int u : order)
    for (int w : t.adj[idx(u)]) {
      if (t.adj[idx(w)].size() != 3) continue;
      auto emb = grow_embedding(t, c, parent, u, w);
      if (!emb.empty() && embedding_problem(t, c, emb).empty()) return {t, n, std::move(emb)};
    }
  throw ValidationError("no embedding of c^(" + std::to_string(n) + ") without strut components");
}

NPattern make_n_pattern(const ColoredTree& t, int n, const std::vector<int>& embedding, const Limits& limits) {
  check_tree(t);
  const ColoredTree c = c_tree(n, limits);
  const auto problem = embedding_problem(t, c, embedding);
  if (!problem.empty()) throw ValidationError(problem);
  return {t, n, embedding};
}

ClasperSpec build_clasper(const Pattern& p) {
  ClasperSpec out;
  out.shape = make_vortex(1, 2, 3);
  for (const auto& branch : split(p)) out.leaves.push_back({phi(branch), 0});
  out.leaf_linking = zeros(3);
  out.rank = tree_rank(p.tree);
  return out;
}

ClasperSpec build_n_clasper(const NPattern& q) {
  const ColoredTree& t = q.tree;
  std::map<int, int> image;  // tree vertex -> shape vertex
  for (std::size_t i = 0; i < q.embedding.size(); ++i) image[q.embedding[i]] = static_cast<int>(i);

  ClasperSpec out;
  const int core = static_cast<int>(q.embedding.size());
  out.shape.adj.assign(idx(core), {});
  out.shape.color.assign(idx(core), 0);
  for (int i = 0; i < core; ++i) {
    const int v = q.embedding[idx(i)];
    for (int w : t.adj[idx(v)]) {
      auto it = image.find(w);
      if (it != image.end()) {
        out.shape.adj[idx(i)].push_back(it->second);
        continue;
      }
      const int slot = out.shape.vertex_count();
      out.leaves.push_back({phi(branch_body(t, v, w)), 0});
      out.shape.adj[idx(i)].push_back(slot);
      out.shape.adj.push_back({i});
      out.shape.color.push_back(static_cast<int>(out.leaves.size()));
    }
  }
  out.leaf_linking = zeros(out.leaves.size());
  out.rank = tree_rank(t);
  out.derived_level = q.n;
  return out;
}

ClasperSpec reduce_to_degree_one(const ClasperSpec& c, const Limits& limits) {
  check_spec(c);
  if (c.degree() == 1) return c;
  const auto tri = c.shape.trivalent();
  // center: least eccentricity among trivalent vertices, lowest index on ties
  int center = -1;
  int best = 0;
  for (int v : tri) {
    std::map<int, int> dist{{v, 0}};
    std::vector<int> queue{v};
    int far = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (int y : c.shape.adj[idx(x)])
        if (!c.shape.is_leaf(y) && !dist.count(y)) {
          dist[y] = dist[x] + 1;
          far = std::max(far, dist[y]);
          queue.push_back(y);
        }
    }
    if (center < 0 || far < best) {
      center = v;
      best = far;
    }
  }

  ClasperSpec out;
  out.shape = make_vortex(1, 2, 3);
  out.rank = c.rank;
  out.derived_level = c.derived_level;
  out.leaf_linking = zeros(3);
  std::vector<int> origin;  // original leaf index, or -1 for composite leaves
  for (int w : c.shape.adj[idx(center)]) {
    if (c.shape.is_leaf(w)) {
      const int k = c.shape.color[idx(w)] - 1;
      out.leaves.push_back(c.leaves[idx(k)]);
      origin.push_back(k);
    } else {
      out.leaves.push_back({collapse(c, center, w), 0});
      origin.push_back(-1);
    }
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && origin[i] >= 0 && origin[j] >= 0)
        out.leaf_linking[i][j] = c.leaf_linking[idx(origin[i])][idx(origin[j])];

  if (c.derived_level) {
    for (std::size_t i = 0; i < 3; ++i)
      if (!in_derived(out.leaves[i].word, *c.derived_level, c.rank, limits))
        throw CertificateError("reduced leaf " + std::to_string(i + 1) + " is not in F^(" +
                                   std::to_string(*c.derived_level) + ")",
                               out.leaves[i].word.to_string());
  }
  return out;
}

std::size_t ClasperSystem::leaf_count() const {
  std::size_t n = 0;
  for (const auto& c : claspers) n += c.leaves.size();
  return n;
}

int ClasperSystem::global_leaf(int clasper, int leaf) const {
  int offset = 0;
  for (int i = 0; i < clasper; ++i) offset += static_cast<int>(claspers[idx(i)].leaves.size());
  return offset + leaf;
}

ClasperSystem expand_edges(const ClasperSpec& c) {
  check_spec(c);
  ClasperSystem out;
  out.rank = c.rank;
  const auto tri = c.shape.trivalent();
  std::map<int, int> clasper_of;
  for (std::size_t i = 0; i < tri.size(); ++i) clasper_of[tri[i]] = static_cast<int>(i);

  std::vector<int> origin;  // global leaf -> original leaf or -1
  for (int u : tri) {
    ClasperSpec y;
    y.shape = make_vortex(1, 2, 3);
    y.rank = c.rank;
    for (int w : c.shape.adj[idx(u)]) {
      if (c.shape.is_leaf(w)) {
        const int k = c.shape.color[idx(w)] - 1;
        y.leaves.push_back(c.leaves[idx(k)]);
        origin.push_back(k);
      } else {
        y.leaves.push_back({Word{}, 0});
        origin.push_back(-1);
      }
    }
    y.leaf_linking = zeros(3);
    out.claspers.push_back(std::move(y));
  }
  for (int u : tri)
    for (int w : c.shape.adj[idx(u)]) {
      if (c.shape.is_leaf(w) || w < u) continue;
      const int a = clasper_of[u];
      const int b = clasper_of[w];
      const auto& nu = c.shape.adj[idx(u)];
      const auto& nw = c.shape.adj[idx(w)];
      const int la = static_cast<int>(std::find(nu.begin(), nu.end(), w) - nu.begin());
      const int lb = static_cast<int>(std::find(nw.begin(), nw.end(), u) - nw.begin());
      out.hopf.push_back({a, la, b, lb});
    }

  const std::size_t total = out.leaf_count();
  out.linking = zeros(total);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (i != j && origin[i] >= 0 && origin[j] >= 0)
        out.linking[i][j] = c.leaf_linking[idx(origin[i])][idx(origin[j])];
  for (const auto& h : out.hopf) {
    const auto i = idx(out.global_leaf(h.clasper_a, h.leaf_a));
    const auto j = idx(out.global_leaf(h.clasper_b, h.leaf_b));
    out.linking[i][j] = out.linking[j][i] = 1;
  }
  for (std::size_t k = 0; k < out.claspers.size(); ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        out.claspers[k].leaf_linking[idx(i)][idx(j)] =
            i == j ? 0
                   : out.linking[idx(out.global_leaf(static_cast<int>(k), i))]
                                [idx(out.global_leaf(static_cast<int>(k), j))];
  return out;
}

SurgeryPresentation compile_surgery(const ClasperSystem& s, bool allow_non_null) {
  for (const auto& c : s.claspers) {
    check_spec(c);
    if (c.degree() != 1) throw ValidationError("compile_surgery needs degree-1 claspers");
  }
  const int k = static_cast<int>(s.claspers.size());
  const int arms = 3 * k;
  if (static_cast<int>(s.linking.size()) != arms) throw ValidationError("system linking has the wrong size");

  SurgeryPresentation out;
  out.rank = s.rank;
  // arm i of clasper c is its i-th leaf in cyclic order at the vertex
  std::vector<const ClasperLeaf*> leaves;
  std::vector<int> global;
  for (int c = 0; c < k; ++c)
    for (int leaf : arm_leaves(s.claspers[idx(c)])) {
      leaves.push_back(&s.claspers[idx(c)].leaves[idx(leaf)]);
      global.push_back(s.global_leaf(c, leaf));
    }
  for (int i = 0; i < arms; ++i) out.curves.push_back({"e" + std::to_string(i + 1), CurveKind::Edge, Word{}, 0, i});
  for (int i = 0; i < arms; ++i)
    out.curves.push_back({"l" + std::to_string(i + 1), CurveKind::Leaf, leaves[idx(i)]->word,
                          leaves[idx(i)]->framing, i});

  out.linking = zeros(idx(2 * arms));
  for (int i = 0; i < arms; ++i) {
    out.linking[idx(i)][idx(arms + i)] = out.linking[idx(arms + i)][idx(i)] = 1;
    for (int j = 0; j < arms; ++j)
      out.linking[idx(arms + i)][idx(arms + j)] =
          i == j ? leaves[idx(i)]->framing : s.linking[idx(global[idx(i)])][idx(global[idx(j)])];
    out.arms.emplace_back(i, arms + i);
  }
  for (int c = 0; c < k; ++c) out.borromean.push_back({3 * c, 3 * c + 1, 3 * c + 2});

  bool null = true;
  for (const auto& curve : out.curves) {
    if (curve.kind != CurveKind::Leaf) continue;
    const auto sums = exponent_sums(curve.word, s.rank);
    if (std::all_of(sums.begin(), sums.end(), [](long x) { return x == 0; })) continue;
    null = false;
    if (!allow_non_null)
      throw CertificateError("leaf " + curve.label + " = " + curve.word.to_string() +
                                 " has nonzero exponent sums; the presentation would not preserve homology",
                             curve.label);
  }
  if (null) out.certificate = certify_null(out, 1);
  return out;
}

SurgeryPresentation compile_surgery(const ClasperSpec& c, bool allow_non_null) {
  check_spec(c);
  if (c.degree() != 1)
    throw ValidationError("compile_surgery needs a degree-1 clasper (degree " + std::to_string(c.degree()) +
                          "); reduce or expand it first");
  return compile_surgery(expand_edges(c), allow_non_null);
}

NullCertificate certify_null(const SurgeryPresentation& s, int level, const Limits& limits) {
  if (level < 1) throw InputError("certificate level must be at least 1");
  NullCertificate cert;
  cert.level = level;
  for (const auto& curve : s.curves) {
    if (curve.kind != CurveKind::Leaf) continue;
    const auto sums = exponent_sums(curve.word, s.rank);
    const bool null = std::all_of(sums.begin(), sums.end(), [](long x) { return x == 0; });
    cert.facts.push_back({curve.label, curve.word.to_string(), "exponent_sums = 0", null});
    if (!null)
      throw CertificateError("leaf " + curve.label + " = " + curve.word.to_string() + " has nonzero exponent sums",
                             curve.label);
    if (level < 2) continue;
    const std::string check = "in F^(" + std::to_string(level) + ")";
    const bool member = in_derived(curve.word, level, s.rank, limits);
    cert.facts.push_back({curve.label, curve.word.to_string(), check, member});
    if (!member)
      throw CertificateError("leaf " + curve.label + " = " + curve.word.to_string() + " is not " + check,
                             curve.label);
  }
  return cert;
}

namespace {

const char* kUnlinkAssumption =
    "designated leaves are assumed to form an unlink in the complement of the other curves "
    "(declared, not verified)";

}  // namespace

SphereVerdict check_sphere_condition(const ClasperSystem& s) {
  SphereVerdict out;
  out.assumption = kUnlinkAssumption;
  for (std::size_t k = 0; k < s.claspers.size(); ++k) {
    const auto& c = s.claspers[k];
    const int ck = static_cast<int>(k);
    if (!c.designated.empty()) {
      for (int d : c.designated) {
        if (c.leaves[idx(d)].framing != 0) {
          out.reason = "designated leaf " + std::to_string(d + 1) + " of clasper " + std::to_string(k + 1) +
                       " is not 0-framed";
          return out;
        }
        out.designated.push_back(s.global_leaf(ck, d));
      }
      continue;
    }
    bool found = false;
    for (int i = 0; i < static_cast<int>(c.leaves.size()) && !found; ++i) {
      if (c.leaves[idx(i)].framing != 0) continue;
      const int g = s.global_leaf(ck, i);
      bool unlinked = true;
      for (int d : out.designated) unlinked = unlinked && s.linking[idx(g)][idx(d)] == 0;
      if (!unlinked) continue;
      out.designated.push_back(g);
      found = true;
    }
    if (!found) {
      out.reason = "clasper " + std::to_string(k + 1) + " has no usable 0-framed leaf";
      return out;
    }
  }
  for (std::size_t i = 0; i < out.designated.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (s.linking[idx(out.designated[i])][idx(out.designated[j])] != 0) {
        out.reason = "designated leaves " + std::to_string(out.designated[j] + 1) + " and " +
                     std::to_string(out.designated[i] + 1) + " are linked";
        return out;
      }
  out.pass = true;
  out.reason = "every component has a 0-framed designated leaf and designated leaves are mutually unlinked";
  return out;
}

SphereVerdict check_sphere_condition(const ClasperSpec& c) {
  check_spec(c);
  ClasperSystem s;
  s.claspers.push_back(c);
  s.linking = c.leaf_linking;
  s.rank = c.rank;
  return check_sphere_condition(s);
}

}  // namespace clasp

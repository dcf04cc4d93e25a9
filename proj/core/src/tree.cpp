#include "clasp/tree.hpp"

#include "clasp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace clasp {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Neighbours of v rotated so that `first` comes first.
std::vector<int> rotated_from(const ColoredTree& t, int v, int first) {
  const auto& nb = t.adj[idx(v)];
  auto it = std::find(nb.begin(), nb.end(), first);
  std::vector<int> out(it, nb.end());
  out.insert(out.end(), nb.begin(), it);
  return out;
}

void replace_neighbor(ColoredTree& t, int v, int from, int to) {
  auto& nb = t.adj[idx(v)];
  auto it = std::find(nb.begin(), nb.end(), from);
  *it = to;
}

}  // namespace

std::vector<int> ColoredTree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_leaf(v)) out.push_back(v);
  return out;
}

std::vector<int> ColoredTree::trivalent() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (adj[idx(v)].size() == 3) out.push_back(v);
  return out;
}

void check_tree(const ColoredTree& t) {
  const int n = t.vertex_count();
  if (n < 2) throw InputError("a tree needs at least two vertices");
  if (t.color.size() != t.adj.size()) throw InputError("color table size does not match vertex count");
  std::size_t degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const auto& nb = t.adj[idx(v)];
    if (nb.size() != 1 && nb.size() != 3)
      throw InputError("vertex " + std::to_string(v) + " has valence " + std::to_string(nb.size()));
    const int c = t.color[idx(v)];
    if (nb.size() == 1 && c == 0) throw InputError("univalent vertex " + std::to_string(v) + " has no color");
    if (nb.size() == 3 && c != 0) throw InputError("trivalent vertex " + std::to_string(v) + " carries a color");
    if (t.colors > 0 && c > t.colors)
      throw InputError("color " + std::to_string(c) + " exceeds declared color count " + std::to_string(t.colors));
    for (int w : nb) {
      if (w < 0 || w >= n) throw InputError("edge endpoint " + std::to_string(w) + " out of range");
      if (w == v) throw OutOfScopeError("self-loop at vertex " + std::to_string(v) + ": only trees are in scope");
      const auto& back = t.adj[idx(w)];
      if (std::count(back.begin(), back.end(), v) != std::count(nb.begin(), nb.end(), w))
        throw InputError("adjacency is not symmetric between " + std::to_string(v) + " and " + std::to_string(w));
    }
    degree_sum += nb.size();
  }
  const std::size_t edges = degree_sum / 2;
  std::vector<bool> seen(idx(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : t.adj[idx(v)])
      if (!seen[idx(w)]) {
        seen[idx(w)] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) {
    if (edges >= static_cast<std::size_t>(reached)) throw OutOfScopeError("diagram contains a cycle: only trees are in scope");
    throw InputError("diagram is disconnected");
  }
  if (edges != static_cast<std::size_t>(n - 1)) throw OutOfScopeError("diagram contains a cycle: only trees are in scope");
}

int degree(const ColoredTree& t) { return t.vertex_count() / 2; }

ColoredTree make_strut(int a, int b, int colors) {
  ColoredTree t;
  t.adj = {{1}, {0}};
  t.color = {a, b};
  t.colors = colors;
  return t;
}

ColoredTree make_vortex(int a, int b, int c, int colors) {
  ColoredTree t;
  t.adj = {{1, 2, 3}, {0}, {0}, {0}};
  t.color = {0, a, b, c};
  t.colors = colors;
  return t;
}

namespace {

// Appends the body below `parent`; returns the id of the new vertex.
int append_body(ColoredTree& t, const Bracket& body, int parent) {
  const int v = t.vertex_count();
  if (body.is_leaf()) {
    t.adj.push_back({parent});
    t.color.push_back(body.label());
    return v;
  }
  t.adj.push_back({parent});
  t.color.push_back(0);
  const int l = append_body(t, body.left(), v);
  const int r = append_body(t, body.right(), v);
  t.adj[idx(v)].push_back(l);
  t.adj[idx(v)].push_back(r);
  return v;
}

}  // namespace

ColoredTree tree_from_body(int root_color, const Bracket& body, int colors) {
  ColoredTree t;
  t.colors = colors;
  t.adj.push_back({});
  t.color.push_back(root_color);
  const int child = append_body(t, body, 0);
  t.adj[0].push_back(child);
  return t;
}

ColoredTree tree_from_branches(const Bracket& a, const Bracket& b, const Bracket& c, int colors) {
  ColoredTree t;
  t.colors = colors;
  t.adj.push_back({});
  t.color.push_back(0);
  for (const Bracket* body : {&a, &b, &c}) {
    const int child = append_body(t, *body, 0);
    t.adj[0].push_back(child);
  }
  return t;
}

Bracket branch_body(const ColoredTree& t, int from, int toward) {
  if (t.is_leaf(toward)) return Bracket::leaf(t.color[idx(toward)]);
  const auto nb = rotated_from(t, toward, from);
  return Bracket::join(branch_body(t, toward, nb[1]), branch_body(t, toward, nb[2]));
}

Bracket rooted_body(const ColoredTree& t, int root) {
  if (!t.is_leaf(root)) throw InputError("root must be a univalent vertex");
  return branch_body(t, root, t.adj[idx(root)][0]);
}

std::pair<int, Bracket> canonical_branch(const ColoredTree& t, int from, int toward) {
  if (t.is_leaf(toward)) return {1, Bracket::leaf(t.color[idx(toward)])};
  const auto nb = rotated_from(t, toward, from);
  auto [s1, b1] = canonical_branch(t, toward, nb[1]);
  auto [s2, b2] = canonical_branch(t, toward, nb[2]);
  if (b1 == b2) return {0, Bracket::join(b1, b2)};
  if (b1 < b2) return {s1 * s2, Bracket::join(b1, b2)};
  return {-s1 * s2, Bracket::join(b2, b1)};
}

CanonicalTree::CanonicalTree(int root_color, const Bracket& body)
    : key_(Bracket::join(Bracket::leaf(root_color), body)) {}

ColoredTree CanonicalTree::to_tree(int colors) const { return tree_from_body(root_color(), body(), colors); }

std::string CanonicalTree::to_string() const { return std::to_string(root_color()) + "-" + body().to_string(); }

namespace {

struct Rooting {
  int leaf = -1;
  int sign = 0;
  Bracket key;
};

// All rootings attaining the least key.
std::vector<Rooting> least_rootings(const ColoredTree& t) {
  std::vector<Rooting> best;
  for (int leaf : t.leaves()) {
    auto [sign, body] = canonical_branch(t, leaf, t.adj[idx(leaf)][0]);
    Bracket key = Bracket::join(Bracket::leaf(t.color[idx(leaf)]), body);
    if (best.empty() || key < best.front().key) {
      best.clear();
      best.push_back({leaf, sign, std::move(key)});
    } else if (key == best.front().key) {
      best.push_back({leaf, sign, std::move(key)});
    }
  }
  return best;
}

}  // namespace

Canonical canonicalize(const ColoredTree& t) {
  const auto best = least_rootings(t);
  Canonical out;
  out.rep = CanonicalTree(best.front().key.left().label(), best.front().key.right());
  out.sign = best.front().sign;
  for (const auto& r : best)
    if (r.sign != out.sign) out.sign = 0;
  return out;
}

namespace {

void vertex_preorder(const ColoredTree& t, int from, int v, std::vector<int>& out) {
  if (t.is_leaf(v)) return;
  out.push_back(v);
  const auto nb = rotated_from(t, v, from);
  int a = nb[1];
  int b = nb[2];
  if (canonical_branch(t, v, b).second < canonical_branch(t, v, a).second) std::swap(a, b);
  vertex_preorder(t, v, a, out);
  vertex_preorder(t, v, b, out);
}

}  // namespace

std::vector<int> canonical_vertex_order(const ColoredTree& t) {
  const int root = least_rootings(t).front().leaf;
  std::vector<int> out;
  vertex_preorder(t, root, t.adj[idx(root)][0], out);
  return out;
}

std::vector<std::pair<int, int>> internal_edges(const ColoredTree& t) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < t.vertex_count(); ++u) {
    if (t.adj[idx(u)].size() != 3) continue;
    for (int w : t.adj[idx(u)])
      if (u < w && t.adj[idx(w)].size() == 3) out.emplace_back(u, w);
  }
  return out;
}

ColoredTree transpose_at(const ColoredTree& t, int v) {
  if (t.adj[idx(v)].size() != 3) throw InputError("AS transposition needs a trivalent vertex");
  ColoredTree out = t;
  std::swap(out.adj[idx(v)][1], out.adj[idx(v)][2]);
  return out;
}

std::pair<ColoredTree, ColoredTree> ihx_terms(const ColoredTree& t, int u, int w) {
  const auto& nu = t.adj[idx(u)];
  if (nu.size() != 3 || t.adj[idx(w)].size() != 3 || std::find(nu.begin(), nu.end(), w) == nu.end())
    throw ValidationError("IHX needs an internal edge joining two trivalent vertices");
  // u: (a, b, w) and w: (u, c, d)
  const auto ru = rotated_from(t, u, w);
  const int a = ru[1];
  const int b = ru[2];
  const auto rw = rotated_from(t, w, u);
  const int c = rw[1];
  const int d = rw[2];

  ColoredTree h = t;
  h.adj[idx(u)] = {a, w, d};
  h.adj[idx(w)] = {u, b, c};
  replace_neighbor(h, b, u, w);
  replace_neighbor(h, d, w, u);

  ColoredTree x = t;
  x.adj[idx(u)] = {a, c, w};
  x.adj[idx(w)] = {u, b, d};
  replace_neighbor(x, b, u, w);
  replace_neighbor(x, c, w, u);
  return {std::move(h), std::move(x)};
}

std::string to_dot(const ColoredTree& t) {
  std::ostringstream os;
  os << "graph tree {\n";
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v))
      os << "  v" << v << " [shape=plaintext,label=\"" << t.color[idx(v)] << "\"];\n";
    else
      os << "  v" << v << " [shape=point,xlabel=\"" << t.adj[idx(v)][0] << "," << t.adj[idx(v)][1] << ","
         << t.adj[idx(v)][2] << "\"];\n";
  }
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int w : t.adj[idx(v)])
      if (v < w) os << "  v" << v << " -- v" << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace clasp

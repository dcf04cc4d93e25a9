#pragma once

#include "clasp/bracket.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace clasp {

/// A vertex-oriented unitrivalent tree with colored univalent vertices.
///
/// adj[v] lists the neighbours of v; for a trivalent vertex the order is its
/// cyclic orientation (rotations are equivalent). color[v] is nonzero exactly
/// on univalent vertices. Positive colors are link components 1..r; negative
/// colors are reserved for surgery-curve labels when trees carry legs on a
/// surgery link.
struct ColoredTree {
  std::vector<std::vector<int>> adj;
  std::vector<int> color;
  int colors = 0;  // declared r, 0 if not declared

  int vertex_count() const { return static_cast<int>(adj.size()); }
  bool is_leaf(int v) const { return adj[static_cast<std::size_t>(v)].size() == 1; }
  std::vector<int> leaves() const;
  std::vector<int> trivalent() const;

  friend bool operator==(const ColoredTree&, const ColoredTree&) = default;
};

/// Throws InputError for malformed data and OutOfScopeError if the graph
/// contains a cycle.
void check_tree(const ColoredTree& t);

/// Half the vertex count; one less than the number of legs.
int degree(const ColoredTree& t);

ColoredTree make_strut(int a, int b, int colors = 0);
ColoredTree make_vortex(int a, int b, int c, int colors = 0);
/// Tree with a root leg of color root_color attached to the rooted body.
ColoredTree tree_from_body(int root_color, const Bracket& body, int colors = 0);
/// Trivalent vertex 0 with the three rooted bodies attached in cyclic order.
ColoredTree tree_from_branches(const Bracket& a, const Bracket& b, const Bracket& c, int colors = 0);

/// Body of the branch entered through the edge from -> toward, read in
/// cyclic order after the parent. A single leaf gives Bracket::leaf(color).
Bracket branch_body(const ColoredTree& t, int from, int toward);
/// Body of t rooted at the univalent vertex `root`.
Bracket rooted_body(const ColoredTree& t, int root);

/// Deterministic representative of an AS orbit: the root color and the
/// sorted body of the lexicographically least rooting.
class CanonicalTree {
 public:
  CanonicalTree() = default;
  CanonicalTree(int root_color, const Bracket& body);

  int root_color() const { return key_.left().label(); }
  Bracket body() const { return key_.right(); }
  const Bracket& key() const { return key_; }

  int leg_count() const { return static_cast<int>(key_.leaf_count()); }
  int degree() const { return leg_count() - 1; }
  std::vector<int> leg_colors() const { return key_.leaves(); }

  ColoredTree to_tree(int colors = 0) const;
  std::string to_string() const;

  friend auto operator<=>(const CanonicalTree&, const CanonicalTree&) = default;
  friend bool operator==(const CanonicalTree&, const CanonicalTree&) = default;

 private:
  Bracket key_;
};

/// sign is +1 or -1 relating t to rep, or 0 when t has an
/// orientation-reversing automorphism (t = -t by AS alone).
struct Canonical {
  int sign = 1;
  CanonicalTree rep;
};

Canonical canonicalize(const ColoredTree& t);

/// Sorted body of the branch from -> toward, with the AS sign of the sort.
std::pair<int, Bracket> canonical_branch(const ColoredTree& t, int from, int toward);

/// Trivalent vertices in preorder of the canonical rooting (children visited
/// in canonical order). Deterministic across isomorphic inputs.
std::vector<int> canonical_vertex_order(const ColoredTree& t);

/// Edges joining two trivalent vertices, each listed once as (u, w), u < w.
std::vector<std::pair<int, int>> internal_edges(const ColoredTree& t);

/// Reverses the cyclic order at trivalent vertex v.
ColoredTree transpose_at(const ColoredTree& t, int v);

/// The two re-pairings of the four branches around internal edge (u, w).
/// With u: (a, b, w) and w: (u, c, d) read from branch a, the relation is
/// t = first + second (Jacobi: [B,[C,D]] = [[B,C],D] + [C,[B,D]]).
std::pair<ColoredTree, ColoredTree> ihx_terms(const ColoredTree& t, int u, int w);

std::string to_dot(const ColoredTree& t);

}  // namespace clasp

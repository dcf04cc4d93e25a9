#pragma once

#include "clasp/bracket.hpp"
#include "clasp/magnus.hpp"
#include "clasp/solvable.hpp"
#include "clasp/word.hpp"

namespace clasp {

/// A tree with a distinguished uncolored root leg, stored as its body read
/// in cyclic order away from the root.
struct RootedTree {
  Bracket body;

  int leaf_count() const { return static_cast<int>(body.leaf_count()); }
  /// Root plus exactly one colored leaf.
  bool is_strut() const { return body.is_leaf(); }

  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;
  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

/// Leaf of color c -> x_c; a vertex with branches (a, b) -> [phi(a), phi(b)].
Word phi(const RootedTree& t);
Word phi(const Bracket& body);

}  // namespace clasp

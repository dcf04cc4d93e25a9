#pragma once

#include "clasp/config.hpp"
#include "clasp/lie.hpp"
#include "clasp/linalg.hpp"
#include "clasp/rational.hpp"
#include "clasp/tree.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clasp {

/// Formal rational combination of canonical trees. Terms are stored with
/// their AS sign absorbed; zero coefficients and AS-null trees are dropped.
/// Equality is formal: use is_zero() to decide equality modulo IHX.
class TreeVector {
 public:
  TreeVector() = default;
  explicit TreeVector(int colors) : colors_(colors) {}

  void add(const CanonicalTree& t, const Rational& c);
  void add(const ColoredTree& t, const Rational& c);

  const std::map<CanonicalTree, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int colors() const { return colors_; }
  void set_colors(int r) { colors_ = r; }

  std::vector<int> degrees() const;
  TreeVector component(int degree) const;

  TreeVector& operator+=(const TreeVector& o);
  TreeVector& operator-=(const TreeVector& o);
  TreeVector& operator*=(const Rational& c);
  friend TreeVector operator+(TreeVector a, const TreeVector& b) { return a += b; }
  friend TreeVector operator-(TreeVector a, const TreeVector& b) { return a -= b; }
  friend TreeVector operator*(const Rational& c, TreeVector a) { return a *= c; }
  TreeVector operator-() const;

  friend bool operator==(const TreeVector& a, const TreeVector& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<CanonicalTree, Rational> terms_;
  int colors_ = 0;
};

int degree(const CanonicalTree& t);

/// The two-term combination equal to t in A^tr, obtained by the IHX relation
/// on internal edge (u, w). Throws ValidationError if the edge is not internal.
TreeVector ihx_resolve(const ColoredTree& t, int u, int w);

/// Sum over legs of color(leg) (x) (bracket of t rooted at that leg), the
/// bracket read in cyclic order after the parent at every trivalent vertex.
LieVector eta(const ColoredTree& t);
LieVector eta(const TreeVector& v);

/// True iff v vanishes in A^tr(r), decided by lyndon_reduce(eta(v)) = 0.
bool is_zero(const TreeVector& v);
/// is_zero(a - b) and is_zero(a + b) respectively.
bool equal_in_atr(const TreeVector& a, const TreeVector& b);

/// Canonical trees of degree m on colors 1..r, sorted, excluding AS-null
/// ones unless include_as_null. Guarded by Limits::max_degree / max_colors /
/// max_enumeration.
std::vector<CanonicalTree> enumerate_trees(int m, int r, const Limits& limits = default_limits(),
                                           bool include_as_null = false);

/// The IHX relation span over the enumerated degree-m basis: the
/// exact-linear-algebra presentation of A^tr_m(r) used by dim().
struct RelationSpan {
  int degree = 0;
  int colors = 0;
  std::vector<CanonicalTree> basis;
  std::map<CanonicalTree, std::size_t> index;
  RowSpace relations;

  /// Coordinates of v over the basis; throws InputError for foreign terms.
  SparseRow coordinates(const TreeVector& v) const;
  /// True iff v lies in the IHX span (i.e. v = 0 in A^tr).
  bool contains(const TreeVector& v) const { return relations.contains(coordinates(v)); }
  std::size_t dimension() const { return basis.size() - relations.rank(); }
};

RelationSpan relation_span(int m, int r, const Limits& limits = default_limits());

/// Dimension of A^tr_m(r): enumerated trees minus the rank of the IHX span.
std::size_t dim(int m, int r, const Limits& limits = default_limits());

}  // namespace clasp

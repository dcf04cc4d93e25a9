#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clasp {

/// A planar full binary tree with nonzero integer leaf labels, stored as a
/// preorder code: 0 marks an internal node, any other value is a leaf.
///
/// The same type serves as a bracket monomial [a,[b,c]] over generators, as
/// the body of a rooted vertex-oriented tree (children listed in cyclic order
/// after the parent), and as the key of a canonical unrooted tree. The total
/// order is lexicographic on the code.
class Bracket {
 public:
  Bracket() = default;

  static Bracket leaf(int label);
  static Bracket join(const Bracket& left, const Bracket& right);
  /// Validates a raw preorder code.
  static Bracket from_code(std::vector<int> code);

  bool empty() const { return code_.empty(); }
  bool is_leaf() const { return code_.size() == 1; }
  int label() const;
  Bracket left() const;
  Bracket right() const;

  std::size_t leaf_count() const;
  std::vector<int> leaves() const;

  const std::vector<int>& code() const { return code_; }

  /// "[1,[2,3]]" style; leaves print as their label.
  std::string to_string() const;

  friend auto operator<=>(const Bracket&, const Bracket&) = default;
  friend bool operator==(const Bracket&, const Bracket&) = default;

 private:
  explicit Bracket(std::vector<int> code) : code_(std::move(code)) {}
  std::size_t subtree_end(std::size_t begin) const;

  std::vector<int> code_;
};

/// Inverse of Bracket::to_string; negative labels allowed. Throws ParseError.
Bracket parse_bracket(std::string_view text);

}  // namespace clasp

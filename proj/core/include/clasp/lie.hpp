#pragma once

#include "clasp/bracket.hpp"
#include "clasp/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace clasp {

/// Word in the free associative algebra on generators 1..r.
using Monomial = std::vector<int>;

/// Noncommutative polynomial; zero coefficients are never stored.
using NCPolynomial = std::map<Monomial, Rational>;

void accumulate(NCPolynomial& into, const Monomial& w, const Rational& c);

/// Expansion of a bracket monomial, [a,b] = ab - ba.
NCPolynomial expand_bracket(const Bracket& b);

/// Lyndon words over 1..r, strictly less than all their proper rotations.
bool is_lyndon(const Monomial& w);
std::vector<Monomial> lyndon_words(int length, int generators);
/// Standard bracketing: w = uv with v the longest proper Lyndon suffix.
Bracket standard_bracket(const Monomial& lyndon);

/// Coordinates of a Lie polynomial in the Lyndon basis, keyed by Lyndon word.
/// Throws ValidationError if the input is not a Lie element.
std::map<Monomial, Rational> lyndon_coordinates(NCPolynomial p);

/// Sum of (color, Lie monomial) pairs: an element of V (x) L(V).
class LieVector {
 public:
  using Key = std::pair<int, Bracket>;

  void add(int color, const Bracket& word, const Rational& c);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::string to_string() const;

  LieVector& operator+=(const LieVector& o);

 private:
  std::map<Key, Rational> terms_;
};

/// Normal form of a LieVector: per color, coordinates in the Lyndon basis.
using LyndonCoordinates = std::map<std::pair<int, Monomial>, Rational>;

LyndonCoordinates lyndon_reduce(const LieVector& v);
/// Rebuilds a LieVector from Lyndon coordinates (standard bracketings).
LieVector from_lyndon(const LyndonCoordinates& c);

std::string monomial_string(const Monomial& w, const std::string& prefix = "X");

}  // namespace clasp

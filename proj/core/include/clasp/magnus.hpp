#pragma once

#include "clasp/bracket.hpp"
#include "clasp/lie.hpp"
#include "clasp/word.hpp"

#include <map>
#include <optional>
#include <string>

namespace clasp {

/// Truncated noncommutative power series in X_1..X_r; terms of length
/// greater than cap are discarded on every product.
class MagnusSeries {
 public:
  explicit MagnusSeries(int cap);
  static MagnusSeries one(int cap);

  int cap() const { return cap_; }
  const NCPolynomial& coefficients() const { return coeffs_; }
  Rational coefficient(const Monomial& w) const;
  void add(const Monomial& w, const Rational& c);

  MagnusSeries operator*(const MagnusSeries& o) const;
  MagnusSeries operator-(const MagnusSeries& o) const;
  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

  /// Lowest degree >= 1 carrying a nonzero coefficient.
  std::optional<int> lowest_positive_degree() const;

  /// "1 + X1X2 - X2X1": graded, lexicographic within a degree.
  std::string to_string() const;

 private:
  int cap_;
  NCPolynomial coeffs_;
};

/// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ..., truncated at cap.
MagnusSeries magnus(const Word& w, int cap);

/// Group-like variant x_i^(+-1) -> exp(+-X_i). Its logarithm is a Lie series;
/// it agrees with magnus() in the lowest nonvanishing degree.
MagnusSeries exponential_magnus(const Word& w, int cap);

struct LcsDegree {
  int degree = 0;
  bool at_least = false;  // true: w lies in the cap-th term, nothing finer is known

  friend bool operator==(const LcsDegree&, const LcsDegree&) = default;
};

/// Lower-central-series degree: the lowest nonvanishing degree of magnus(w) - 1.
LcsDegree lcs_degree(const Word& w, int cap);

/// log of a series with constant term 1, truncated at its cap.
NCPolynomial log_series(const MagnusSeries& m);

/// Rooted trees over colors 1..r keyed by body, with a shared root label.
struct RootedSeries {
  int root_label = 0;
  std::map<Bracket, Rational> terms;

  bool empty() const { return terms.empty(); }
  std::optional<int> min_degree() const;  // leaf count of the body
  RootedSeries component(int leaves) const;
};

/// log(exponential_magnus(w)) up to cap, expanded in the Lyndon basis, each Lyndon
/// bracket read as a rooted tree whose root carries root_label.
RootedSeries tree_expansion(const Word& w, int cap, int root_label);

}  // namespace clasp

#pragma once

#include "clasp/clasper.hpp"
#include "clasp/config.hpp"
#include "clasp/diagrams.hpp"
#include "clasp/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clasp {

struct StrutMatrix {
  std::vector<std::string> labels;
  Matrix q;

  friend bool operator==(const StrutMatrix&, const StrutMatrix&) = default;
};

StrutMatrix strut_matrix(const SurgeryPresentation& s);

/// Exact -Q^-1. Throws SingularMatrixError naming a kernel vector.
Matrix negative_inverse(const Matrix& q);
Matrix negative_inverse(const StrutMatrix& q);

/// X-colored legs are encoded as color -(i+1) for labels[i]; positive
/// colors are unlink components 1..colors.
constexpr int x_color(int label_index) { return -(label_index + 1); }
constexpr int x_index(int color) { return -color - 1; }

/// One disjoint union of trees with a coefficient.
struct LeggedMonomial {
  Rational coeff{1};
  std::vector<ColoredTree> trees;

  friend bool operator==(const LeggedMonomial&, const LeggedMonomial&) = default;
};

struct LeggedSeries {
  StrutMatrix q;
  std::vector<LeggedMonomial> r;
  int cap = 0;
  int colors = 0;

  friend bool operator==(const LeggedSeries&, const LeggedSeries&) = default;
};

/// Throws InputError for malformed data (bad labels, asymmetric Q, a strut
/// with two X legs) and OutOfScopeError for graphs with cycles.
void check_series(const LeggedSeries& s);

struct GluingResult {
  TreeVector value;
  /// Lowest degree whose part is nonzero in A^tr; empty if value = 0.
  std::optional<int> min_degree;
  std::map<int, TreeVector> per_degree;
  std::string sign_convention;

  friend bool operator==(const GluingResult&, const GluingResult&) = default;
};

extern const char* const kSignConvention;

/// Number of X legs and unlink legs of a monomial.
int x_leg_count(const LeggedMonomial& m);
int unlink_leg_count(const LeggedMonomial& m);

/// Sums over perfect pairings of the X legs of every monomial, weighting a
/// glued pair (x, y) by (-Q^-1)_xy. Only pairings whose result is a single
/// tree contribute; pairings that close a loop or leave several pieces
/// belong to the non-tree or product parts and are dropped.
GluingResult glue(const LeggedSeries& s, const Limits& limits = default_limits());

/// Independent naive enumeration of every pairing; guarded by
/// Limits::max_brute_legs.
GluingResult brute_glue(const LeggedSeries& s, const Limits& limits = default_limits());

/// Leading-order series of the unlink plus the clasper curves: for each
/// clasper a vortex on its edge curves, and for each leaf curve the tree
/// expansion of its word rooted at that curve; R holds the products of at
/// most one term per factor with at most cap + 1 unlink legs. Requires the
/// null certificate.
LeggedSeries leading_series(const SurgeryPresentation& s, int cap, const Limits& limits = default_limits());

/// Series of the sub-presentation keeping the curves of the given arms:
/// monomials touching other curves are removed and Q is restricted.
LeggedSeries restrict_to_arms(const SurgeryPresentation& s, const LeggedSeries& series,
                              const std::vector<bool>& keep);

/// Inclusion-exclusion of glue over all arm subsets.
GluingResult arm_alternation(const SurgeryPresentation& s, const LeggedSeries& series,
                             const Limits& limits = default_limits());

/// The monomials with a leg on every arm.
LeggedSeries arm_filter(const SurgeryPresentation& s, const LeggedSeries& series);

/// glue restricted to monomials with a leg on every arm.
GluingResult arm_filtered_glue(const SurgeryPresentation& s, const LeggedSeries& series,
                               const Limits& limits = default_limits());

struct ZminOptions {
  std::optional<int> cap;  // defaults to deg(beta)
  bool oracle = false;     // also run brute_glue on the arm-filtered series
  Limits limits = default_limits();
};

struct ZminReport {
  int n = 0;  // 0 for a plain pattern
  int vertex = -1;
  int expected_degree = 0;
  TreeVector beta;
  bool beta_vanishes = false;
  ClasperSpec clasper;  // the degree-1 clasper that was compiled
  SurgeryPresentation presentation;
  GluingResult result;
  bool lower_degrees_vanish = false;
  /// +1 if the degree-m part equals beta, -1 if it equals -beta, 0 otherwise.
  int matched_sign = 0;
  bool pass = false;
  std::optional<bool> oracle_agrees;
  std::vector<std::string> stages;
};

/// Full pipeline. Errors are rethrown as StageError naming the stage.
ZminReport zmin(const Pattern& p, const ZminOptions& options = {});
ZminReport zmin(const NPattern& q, const ZminOptions& options = {});
/// Validates first (stage "validate"); n = 0 means a plain pattern.
ZminReport zmin(const ColoredTree& t, int n, std::optional<int> vertex = std::nullopt,
                const ZminOptions& options = {});

}  // namespace clasp

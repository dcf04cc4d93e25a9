#pragma once

#include "clasp/config.hpp"
#include "clasp/freegroup.hpp"
#include "clasp/tree.hpp"
#include "clasp/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clasp {

/// A tree together with a trivalent vertex whose three branches each carry
/// at least two colored leaves.
struct Pattern {
  ColoredTree tree;
  int vertex = -1;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// A tree with an embedded copy of c^(n). embedding[i] is the tree vertex
/// hit by vertex i of c_tree(n); every vertex of the copy, slots included,
/// is trivalent in the tree, and each of the 2^(n+1) branches leaving the
/// copy carries at least two colored leaves.
struct NPattern {
  ColoredTree tree;
  int n = 1;
  std::vector<int> embedding;

  friend bool operator==(const NPattern&, const NPattern&) = default;
};

struct ClasperLeaf {
  Word word;
  int framing = 0;

  friend bool operator==(const ClasperLeaf&, const ClasperLeaf&) = default;
};

/// Abstract tree clasper. shape is a unitrivalent tree whose univalent
/// vertices are leaf slots: slot vertex s carries color k meaning it holds
/// leaves[k-1]. leaf_linking is symmetric; its diagonal is ignored in favour
/// of the framings. rank is the number of unlink components (generators).
struct ClasperSpec {
  ColoredTree shape;
  std::vector<ClasperLeaf> leaves;
  std::vector<std::vector<long>> leaf_linking;
  int rank = 0;
  /// n when built from an n-pattern; reduce_to_degree_one then checks that
  /// its output leaves lie in F^(n).
  std::optional<int> derived_level;
  /// Leaves chosen to bound disks in the sphere condition (0-based).
  /// Empty: choose automatically.
  std::vector<int> designated;

  int degree() const;
  /// Slot vertex of leaf k (0-based).
  int slot_vertex(int k) const;

  friend bool operator==(const ClasperSpec&, const ClasperSpec&) = default;
};

/// Throws ValidationError if fields are inconsistent.
void check_spec(const ClasperSpec& c);

/// Throws ValidationError: no trivalent vertex, or every trivalent vertex
/// leaves a strut component. The first admissible vertex in canonical
/// vertex order is chosen unless `vertex` is given.
Pattern validate_pattern(const ColoredTree& t, std::optional<int> vertex = std::nullopt);

/// Brute-force check used by tests: some trivalent vertex has three
/// branches with two or more leaves each.
bool has_admissible_vertex(const ColoredTree& t);

/// The three branches at the chosen vertex, in its cyclic order.
std::vector<RootedTree> split(const Pattern& p);

/// c^(1) is a single edge; c^(k+1) attaches two new slots to every slot of
/// c^(k). Slots are colored 1..2^n in preorder; vertex 0 and 1 are the ends
/// of the central edge.
ColoredTree c_tree(int n, const Limits& limits = default_limits());

/// Searches all embeddings of c^(n) (first found in a deterministic order
/// wins). Throws ValidationError if none exists.
NPattern validate_n_pattern(const ColoredTree& t, int n, const Limits& limits = default_limits());

/// Checks a user-supplied embedding.
NPattern make_n_pattern(const ColoredTree& t, int n, const std::vector<int>& embedding,
                        const Limits& limits = default_limits());

ClasperSpec build_clasper(const Pattern& p);
ClasperSpec build_n_clasper(const NPattern& q);

/// Collapses every branch at a central trivalent vertex into an iterated
/// commutator of its leaf words. Throws CertificateError if derived_level
/// is set and an output leaf is not in F^(derived_level).
ClasperSpec reduce_to_degree_one(const ClasperSpec& c, const Limits& limits = default_limits());

struct HopfPair {
  int clasper_a = 0;
  int leaf_a = 0;
  int clasper_b = 0;
  int leaf_b = 0;

  friend bool operator==(const HopfPair&, const HopfPair&) = default;
};

/// Degree-1 claspers obtained by cutting every internal edge; each cut
/// leaves a pair of Hopf-linked leaves with trivial words.
struct ClasperSystem {
  std::vector<ClasperSpec> claspers;
  std::vector<HopfPair> hopf;
  /// Symmetric linking over all leaves, indexed by global_leaf(): the
  /// original leaf linking plus 1 for each Hopf pair. Diagonal unused.
  std::vector<std::vector<long>> linking;
  int rank = 0;

  std::size_t leaf_count() const;
  /// Leaf index across the whole system, clasper by clasper.
  int global_leaf(int clasper, int leaf) const;

  friend bool operator==(const ClasperSystem&, const ClasperSystem&) = default;
};

ClasperSystem expand_edges(const ClasperSpec& c);

enum class CurveKind { Edge, Leaf };

struct SurgeryCurve {
  std::string label;  // "e3", "l3"
  CurveKind kind = CurveKind::Edge;
  Word word;
  int framing = 0;
  int arm = 0;

  friend bool operator==(const SurgeryCurve&, const SurgeryCurve&) = default;
};

struct CertifiedFact {
  std::string curve;
  std::string word;
  std::string check;  // "exponent_sums = 0" or "in F^(n)"
  bool holds = false;

  friend bool operator==(const CertifiedFact&, const CertifiedFact&) = default;
};

struct NullCertificate {
  int level = 1;
  std::vector<CertifiedFact> facts;

  friend bool operator==(const NullCertificate&, const NullCertificate&) = default;
};

/// Curves are ordered e1..e(3k), then l1..l(3k); arm i is {e_i, l_i}.
/// linking is ((0, I), (I, lk)) in that basis, lk carrying the leaf
/// framings on its diagonal.
struct SurgeryPresentation {
  int rank = 0;
  std::vector<SurgeryCurve> curves;
  std::vector<std::vector<long>> linking;
  std::vector<std::pair<int, int>> arms;    // (edge curve, leaf curve)
  std::vector<std::vector<int>> borromean;  // edge-curve triples, one per clasper
  std::optional<NullCertificate> certificate;

  std::size_t arm_count() const { return arms.size(); }

  friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

/// Refuses (CertificateError naming the leaf) any leaf with nonzero
/// exponent sums unless allow_non_null; otherwise attaches the level-1
/// null certificate.
SurgeryPresentation compile_surgery(const ClasperSpec& c, bool allow_non_null = false);
SurgeryPresentation compile_surgery(const ClasperSystem& s, bool allow_non_null = false);

/// Level 1: every leaf-class word has zero exponent sums. Level n >= 2:
/// additionally every leaf-class word lies in F^(n). Throws
/// CertificateError naming the first failing leaf.
NullCertificate certify_null(const SurgeryPresentation& s, int level,
                             const Limits& limits = default_limits());

struct SphereVerdict {
  bool pass = false;
  std::vector<int> designated;  // one or more leaves per component
  std::string reason;
  std::string assumption;

  friend bool operator==(const SphereVerdict&, const SphereVerdict&) = default;
};

SphereVerdict check_sphere_condition(const ClasperSpec& c);
SphereVerdict check_sphere_condition(const ClasperSystem& s);

}  // namespace clasp

#pragma once

#include "clasp/config.hpp"
#include "clasp/word.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace clasp {

class GroupRing;

/// Image of a word in the free solvable quotient F/F^(level).
///
/// Normal form of the iterated Magnus embedding: level 1 keeps the exponent
/// sums; level k >= 2 keeps the level k-1 image together with the r Fox
/// derivatives reduced into Z[F/F^(k-1)]. Two words agree in F/F^(k) iff
/// their normal forms are equal. Level 0 is the trivial group.
class SolvableElement {
 public:
  SolvableElement() = default;
  static SolvableElement identity(int rank, int level);
  static SolvableElement letter(const Letter& l, int rank, int level);
  static SolvableElement of(const Word& w, int rank, int level);

  int rank() const { return rank_; }
  int level() const { return level_; }
  bool is_identity() const;

  /// Image in F/F^(level), level <= this->level().
  SolvableElement truncate(int level) const;

  const std::vector<long>& abelian() const { return abelian_; }
  /// Fox derivatives over Z[F/F^(over)], 1 <= over < level().
  const std::vector<GroupRing>& fox(int over) const;

  SolvableElement operator*(const SolvableElement& o) const;

  std::string to_string() const;

  friend bool operator==(const SolvableElement& a, const SolvableElement& b);
  friend std::strong_ordering operator<=>(const SolvableElement& a, const SolvableElement& b);

 private:
  int rank_ = 0;
  int level_ = 0;
  std::vector<long> abelian_;
  std::vector<std::vector<GroupRing>> fox_;  // fox_[j]: derivatives over level j + 1
};

/// Integral group ring Z[F/F^(level)]; zero coefficients are not stored.
class GroupRing {
 public:
  GroupRing() = default;
  GroupRing(int rank, int level) : rank_(rank), level_(level) {}
  static GroupRing unit(const SolvableElement& g, long long c = 1);

  int rank() const { return rank_; }
  int level() const { return level_; }
  const std::map<SolvableElement, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const SolvableElement& g, long long c);
  GroupRing& operator+=(const GroupRing& o);
  GroupRing& operator-=(const GroupRing& o);
  friend GroupRing operator+(GroupRing a, const GroupRing& b) { return a += b; }
  friend GroupRing operator-(GroupRing a, const GroupRing& b) { return a -= b; }
  /// g * this, with g truncated to this ring's level.
  GroupRing left_multiply(const SolvableElement& g) const;

  std::string to_string() const;

  friend bool operator==(const GroupRing& a, const GroupRing& b);
  friend std::strong_ordering operator<=>(const GroupRing& a, const GroupRing& b);

 private:
  int rank_ = 0;
  int level_ = 0;
  std::map<SolvableElement, long long> terms_;
};

/// d w / d x_i with coefficients reduced in Z[F/F^(level)]. Level 0 gives
/// the integer exponent sum (the ring over the trivial group).
GroupRing fox_derivative(const Word& w, int i, int level, int rank, const Limits& limits = default_limits());

/// Membership in the n-th derived subgroup F^(n): the image in F/F^(n) is
/// trivial, equivalently exponent sums vanish and every Fox derivative
/// vanishes in Z[F/F^(n-1)].
bool in_derived(const Word& w, int n, int rank, const Limits& limits = default_limits());

}  // namespace clasp

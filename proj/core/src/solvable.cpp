#include "clasp/solvable.hpp"

#include "clasp/errors.hpp"

#include <sstream>

namespace clasp {

namespace {

std::strong_ordering compare_rings(const GroupRing& a, const GroupRing& b);

template <class T>
std::strong_ordering compare_vectors(const std::vector<T>& a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return a.size() <=> b.size();
}

}  // namespace

SolvableElement SolvableElement::identity(int rank, int level) {
  if (rank < 1 || level < 0) throw InputError("solvable quotient needs rank >= 1 and level >= 0");
  SolvableElement e;
  e.rank_ = rank;
  e.level_ = level;
  if (level >= 1) e.abelian_.assign(static_cast<std::size_t>(rank), 0);
  for (int j = 1; j < level; ++j)
    e.fox_.emplace_back(static_cast<std::size_t>(rank), GroupRing(rank, j));
  return e;
}

SolvableElement SolvableElement::letter(const Letter& l, int rank, int level) {
  if (l.generator > rank) throw InputError("generator x" + std::to_string(l.generator) + " exceeds rank");
  SolvableElement e = identity(rank, level);
  const auto g = static_cast<std::size_t>(l.generator - 1);
  if (level >= 1) e.abelian_[g] = l.exponent;
  for (int j = 1; j < level; ++j) {
    // d x/dx = 1, d x^-1/dx = -x^-1
    GroupRing& d = e.fox_[static_cast<std::size_t>(j - 1)][g];
    if (l.exponent > 0)
      d.add(identity(rank, j), 1);
    else
      d.add(letter(l, rank, j), -1);
  }
  return e;
}

SolvableElement SolvableElement::of(const Word& w, int rank, int level) {
  SolvableElement e = identity(rank, level);
  for (const auto& l : w.letters()) e = e * letter(l, rank, level);
  return e;
}

bool SolvableElement::is_identity() const {
  for (long a : abelian_)
    if (a != 0) return false;
  for (const auto& layer : fox_)
    for (const auto& d : layer)
      if (!d.is_zero()) return false;
  return true;
}

SolvableElement SolvableElement::truncate(int level) const {
  if (level > level_ || level < 0) throw InputError("cannot truncate to a finer level");
  SolvableElement e;
  e.rank_ = rank_;
  e.level_ = level;
  if (level >= 1) e.abelian_ = abelian_;
  e.fox_.assign(fox_.begin(), fox_.begin() + (level >= 1 ? level - 1 : 0));
  return e;
}

const std::vector<GroupRing>& SolvableElement::fox(int over) const {
  if (over < 1 || over >= level_) throw InputError("Fox layer out of range");
  return fox_[static_cast<std::size_t>(over - 1)];
}

SolvableElement SolvableElement::operator*(const SolvableElement& o) const {
  if (rank_ != o.rank_ || level_ != o.level_) throw InputError("mismatched solvable quotients");
  SolvableElement e = *this;
  for (std::size_t i = 0; i < abelian_.size(); ++i) e.abelian_[i] += o.abelian_[i];
  // d(ab) = da + a db
  for (int j = 1; j < level_; ++j) {
    const SolvableElement a = truncate(j);
    auto& layer = e.fox_[static_cast<std::size_t>(j - 1)];
    const auto& other = o.fox_[static_cast<std::size_t>(j - 1)];
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (!other[i].is_zero()) layer[i] += other[i].left_multiply(a);
  }
  return e;
}

std::string SolvableElement::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < abelian_.size(); ++i) os << (i ? "," : "") << abelian_[i];
  os << ">";
  for (std::size_t j = 0; j < fox_.size(); ++j) {
    os << " d" << (j + 1) << "(";
    for (std::size_t i = 0; i < fox_[j].size(); ++i) os << (i ? "; " : "") << fox_[j][i].to_string();
    os << ")";
  }
  return os.str();
}

bool operator==(const SolvableElement& a, const SolvableElement& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const SolvableElement& a, const SolvableElement& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.level_ <=> b.level_; c != 0) return c;
  if (auto c = compare_vectors(a.abelian_, b.abelian_); c != 0) return c;
  for (std::size_t j = 0; j < a.fox_.size() && j < b.fox_.size(); ++j)
    if (auto c = compare_vectors(a.fox_[j], b.fox_[j]); c != 0) return c;
  return a.fox_.size() <=> b.fox_.size();
}

GroupRing GroupRing::unit(const SolvableElement& g, long long c) {
  GroupRing r(g.rank(), g.level());
  r.add(g, c);
  return r;
}

void GroupRing::add(const SolvableElement& g, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRing& GroupRing::operator+=(const GroupRing& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

GroupRing& GroupRing::operator-=(const GroupRing& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

GroupRing GroupRing::left_multiply(const SolvableElement& g) const {
  const SolvableElement h = g.level() == level_ ? g : g.truncate(level_);
  GroupRing out(rank_, level_);
  for (const auto& [k, c] : terms_) out.add(level_ == 0 ? k : h * k, c);
  return out;
}

std::string GroupRing::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (level_ > 0) os << "*" << g.to_string();
  }
  return os.str();
}

bool operator==(const GroupRing& a, const GroupRing& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const GroupRing& a, const GroupRing& b) { return compare_rings(a, b); }

namespace {

std::strong_ordering compare_rings(const GroupRing& a, const GroupRing& b) {
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.level() <=> b.level(); c != 0) return c;
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  for (; i != a.terms().end() && j != b.terms().end(); ++i, ++j) {
    if (auto c = i->first <=> j->first; c != 0) return c;
    if (auto c = i->second <=> j->second; c != 0) return c;
  }
  if (i == a.terms().end()) return j == b.terms().end() ? std::strong_ordering::equal : std::strong_ordering::less;
  return std::strong_ordering::greater;
}

void check_depth(int level, const Limits& limits) {
  if (level < 0) throw InputError("derived-series level must be non-negative");
  if (level > limits.max_derived_depth)
    throw LimitError("derived-series depth " + std::to_string(level) + " exceeds max_derived_depth " +
                     std::to_string(limits.max_derived_depth));
}

}  // namespace

GroupRing fox_derivative(const Word& w, int i, int level, int rank, const Limits& limits) {
  check_depth(level, limits);
  if (i < 1 || i > rank) throw InputError("Fox derivative generator out of range");
  if (w.max_generator() > rank) throw InputError("word uses a generator beyond rank " + std::to_string(rank));
  if (level == 0) {
    long long sum = 0;
    for (const auto& l : w.letters())
      if (l.generator == i) sum += l.exponent;
    return GroupRing::unit(SolvableElement::identity(rank, 0), sum);
  }
  return SolvableElement::of(w, rank, level + 1).fox(level)[static_cast<std::size_t>(i - 1)];
}

bool in_derived(const Word& w, int n, int rank, const Limits& limits) {
  check_depth(n, limits);
  if (w.max_generator() > rank) throw InputError("word uses a generator beyond rank " + std::to_string(rank));
  if (n == 0) return true;
  return SolvableElement::of(w, rank, n).is_identity();
}

}  // namespace clasp

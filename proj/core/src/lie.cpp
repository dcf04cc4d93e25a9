#include "clasp/lie.hpp"

#include "clasp/errors.hpp"

#include <functional>
#include <sstream>

namespace clasp {

void accumulate(NCPolynomial& into, const Monomial& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

namespace {

using IntPoly = std::map<Monomial, long long>;

IntPoly expand_int(const Bracket& b) {
  if (b.is_leaf()) return {{Monomial{b.label()}, 1}};
  const IntPoly l = expand_int(b.left());
  const IntPoly r = expand_int(b.right());
  IntPoly out;
  auto put = [&out](Monomial w, long long c) {
    auto [it, inserted] = out.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [u, cu] : l)
    for (const auto& [v, cv] : r) {
      Monomial uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      put(std::move(uv), cu * cv);
      Monomial vu = v;
      vu.insert(vu.end(), u.begin(), u.end());
      put(std::move(vu), -cu * cv);
    }
  return out;
}

}  // namespace

NCPolynomial expand_bracket(const Bracket& b) {
  NCPolynomial out;
  for (const auto& [w, c] : expand_int(b)) out.emplace(w, Rational(c));
  return out;
}

bool is_lyndon(const Monomial& w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (std::size_t k = 1; k < n; ++k) {
    // compare w with its rotation starting at k
    for (std::size_t i = 0; i < n; ++i) {
      const int a = w[i];
      const int b = w[(i + k) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // periodic
    }
  }
  return true;
}

std::vector<Monomial> lyndon_words(int length, int generators) {
  // Duval's algorithm generates Lyndon words of length <= n in lex order.
  std::vector<Monomial> out;
  if (length < 1 || generators < 1) return out;
  Monomial w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == length) out.push_back(w);
    const Monomial base = w;
    while (static_cast<int>(w.size()) < length) w.push_back(base[w.size() % base.size()]);
    while (!w.empty() && w.back() == generators) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

Bracket standard_bracket(const Monomial& lyndon) {
  if (lyndon.size() == 1) return Bracket::leaf(lyndon.front());
  for (std::size_t split = 1; split < lyndon.size(); ++split) {
    Monomial v(lyndon.begin() + static_cast<long>(split), lyndon.end());
    if (is_lyndon(v)) {
      Monomial u(lyndon.begin(), lyndon.begin() + static_cast<long>(split));
      return Bracket::join(standard_bracket(u), standard_bracket(v));
    }
  }
  throw ValidationError("standard_bracket: not a Lyndon word");
}

std::map<Monomial, Rational> lyndon_coordinates(NCPolynomial p) {
  // The standard bracketing of a Lyndon word w expands to w plus words
  // lexicographically greater than w, so the least surviving word is always
  // the next Lyndon coordinate.
  std::map<Monomial, Rational> coords;
  while (!p.empty()) {
    const Monomial w = p.begin()->first;
    const Rational c = p.begin()->second;
    if (!is_lyndon(w)) throw ValidationError("polynomial is not a Lie element (least word " + monomial_string(w) + ")");
    coords.emplace(w, c);
    for (const auto& [u, cu] : expand_bracket(standard_bracket(w))) accumulate(p, u, -c * cu);
  }
  return coords;
}

void LieVector::add(int color, const Bracket& word, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{color, word}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieVector& LieVector::operator+=(const LieVector& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

std::string LieVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << clasp::to_string(c) << "*e" << k.first << "(x)" << k.second.to_string();
  }
  return first ? "0" : os.str();
}

LyndonCoordinates lyndon_reduce(const LieVector& v) {
  std::map<int, NCPolynomial> per_color;
  for (const auto& [k, c] : v.terms()) {
    auto& poly = per_color[k.first];
    for (const auto& [w, cw] : expand_bracket(k.second)) accumulate(poly, w, c * cw);
  }
  LyndonCoordinates out;
  for (auto& [color, poly] : per_color)
    for (auto& [w, c] : lyndon_coordinates(std::move(poly))) out.emplace(std::pair{color, w}, c);
  return out;
}

LieVector from_lyndon(const LyndonCoordinates& c) {
  LieVector out;
  for (const auto& [k, q] : c) out.add(k.first, standard_bracket(k.second), q);
  return out;
}

std::string monomial_string(const Monomial& w, const std::string& prefix) {
  std::string s;
  for (int g : w) s += prefix + std::to_string(g);
  return s.empty() ? "1" : s;
}

}  // namespace clasp

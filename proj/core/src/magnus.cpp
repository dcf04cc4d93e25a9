#include "clasp/magnus.hpp"

#include "clasp/errors.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace clasp {

MagnusSeries::MagnusSeries(int cap) : cap_(cap) {
  if (cap < 1) throw InputError("Magnus truncation cap must be at least 1");
}

MagnusSeries MagnusSeries::one(int cap) {
  MagnusSeries m(cap);
  m.coeffs_.emplace(Monomial{}, 1);
  return m;
}

Rational MagnusSeries::coefficient(const Monomial& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void MagnusSeries::add(const Monomial& w, const Rational& c) {
  if (static_cast<int>(w.size()) <= cap_) accumulate(coeffs_, w, c);
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& o) const {
  MagnusSeries out(std::min(cap_, o.cap_));
  for (const auto& [u, cu] : coeffs_)
    for (const auto& [v, cv] : o.coeffs_) {
      if (static_cast<int>(u.size() + v.size()) > out.cap_) continue;
      Monomial uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      accumulate(out.coeffs_, uv, cu * cv);
    }
  return out;
}

MagnusSeries MagnusSeries::operator-(const MagnusSeries& o) const {
  MagnusSeries out = *this;
  out.cap_ = std::min(cap_, o.cap_);
  for (const auto& [v, c] : o.coeffs_) out.add(v, -c);
  return out;
}

std::optional<int> MagnusSeries::lowest_positive_degree() const {
  std::optional<int> best;
  for (const auto& [w, c] : coeffs_)
    if (!w.empty() && (!best || static_cast<int>(w.size()) < *best)) best = static_cast<int>(w.size());
  return best;
}

std::string MagnusSeries::to_string() const {
  std::vector<std::pair<Monomial, Rational>> terms(coeffs_.begin(), coeffs_.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (w.empty())
      os << clasp::to_string(mag);
    else if (mag == 1)
      os << monomial_string(w);
    else
      os << clasp::to_string(mag) << monomial_string(w);
  }
  return first ? "0" : os.str();
}

namespace {

// series * (1 + X_g) or series * (1 - X_g + X_g^2 - ...), truncated
void multiply_letter(NCPolynomial& series, const Letter& l, int cap) {
  NCPolynomial out;
  for (const auto& [u, c] : series) {
    accumulate(out, u, c);
    Monomial w = u;
    Rational coeff = c;
    while (static_cast<int>(w.size()) < cap) {
      w.push_back(l.generator);
      if (l.exponent < 0) coeff = -coeff;
      accumulate(out, w, coeff);
      if (l.exponent > 0) break;
    }
  }
  series = std::move(out);
}

// series * exp(+-X_g), truncated
void multiply_exponential(NCPolynomial& series, const Letter& l, int cap) {
  NCPolynomial out;
  for (const auto& [u, c] : series) {
    accumulate(out, u, c);
    Monomial w = u;
    Rational coeff = c;
    for (int k = 1; static_cast<int>(w.size()) < cap; ++k) {
      w.push_back(l.generator);
      coeff /= k;
      if (l.exponent < 0) coeff = -coeff;
      accumulate(out, w, coeff);
    }
  }
  series = std::move(out);
}

}  // namespace

MagnusSeries exponential_magnus(const Word& w, int cap) {
  NCPolynomial series = MagnusSeries::one(cap).coefficients();
  for (const auto& l : w.letters()) multiply_exponential(series, l, cap);
  MagnusSeries out(cap);
  for (const auto& [u, c] : series) out.add(u, c);
  return out;
}

MagnusSeries magnus(const Word& w, int cap) {
  MagnusSeries m = MagnusSeries::one(cap);
  NCPolynomial series = m.coefficients();
  for (const auto& l : w.letters()) multiply_letter(series, l, cap);
  MagnusSeries out(cap);
  for (const auto& [u, c] : series) out.add(u, c);
  return out;
}

LcsDegree lcs_degree(const Word& w, int cap) {
  const auto low = magnus(w, cap).lowest_positive_degree();
  if (!low) return {cap, true};
  return {*low, false};
}

NCPolynomial log_series(const MagnusSeries& m) {
  if (m.coefficient(Monomial{}) != 1) throw ValidationError("log needs constant term 1");
  MagnusSeries x = m - MagnusSeries::one(m.cap());
  const auto low = x.lowest_positive_degree();
  NCPolynomial out;
  if (!low) return out;
  MagnusSeries power = x;
  for (int k = 1; k * *low <= m.cap(); ++k) {
    const Rational weight = Rational(k % 2 == 1 ? 1 : -1) / k;
    for (const auto& [w, c] : power.coefficients()) accumulate(out, w, weight * c);
    power = power * x;
  }
  return out;
}

std::optional<int> RootedSeries::min_degree() const {
  std::optional<int> best;
  for (const auto& [b, c] : terms) {
    const int d = static_cast<int>(b.leaf_count());
    if (!best || d < *best) best = d;
  }
  return best;
}

RootedSeries RootedSeries::component(int leaves) const {
  RootedSeries out;
  out.root_label = root_label;
  for (const auto& [b, c] : terms)
    if (static_cast<int>(b.leaf_count()) == leaves) out.terms.emplace(b, c);
  return out;
}

RootedSeries tree_expansion(const Word& w, int cap, int root_label) {
  RootedSeries out;
  out.root_label = root_label;
  if (w.is_identity()) return out;
  for (const auto& [lyndon, c] : lyndon_coordinates(log_series(exponential_magnus(w, cap))))
    out.terms.emplace(standard_bracket(lyndon), c);
  return out;
}

}  // namespace clasp

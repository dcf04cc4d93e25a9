#include "clasp/word.hpp"

#include "clasp/errors.hpp"

#include <algorithm>
#include <cctype>

namespace clasp {

Word Word::generator(int i) {
  if (i < 1) throw InputError("generator index must be at least 1");
  Word w;
  w.letters_.push_back({i, 1});
  return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  Word w;
  for (const Letter& l : letters) {
    if (l.generator < 1 || (l.exponent != 1 && l.exponent != -1)) throw InputError("malformed letter");
    if (!w.letters_.empty() && w.letters_.back().generator == l.generator &&
        w.letters_.back().exponent == -l.exponent)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

Word& Word::operator*=(const Word& o) {
  std::size_t k = 0;
  while (k < o.letters_.size() && !letters_.empty() && letters_.back().generator == o.letters_[k].generator &&
         letters_.back().exponent == -o.letters_[k].exponent) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), o.letters_.begin() + static_cast<long>(k), o.letters_.end());
  return *this;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += "x" + std::to_string(l.generator);
    if (l.exponent < 0) s += "^-1";
  }
  return s;
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

Word power(const Word& w, int k) {
  Word base = k < 0 ? w.inverse() : w;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  Word parse() {
    Word w = word();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    if (pos_ >= text_.size()) throw ParseError(msg + " (end of input)", pos_);
    throw ParseError(msg, pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_primary() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'x' || c == '1' || c == '[' || c == '(';
  }

  Word word() {
    if (!at_primary()) fail("expected a generator, '1', '[' or '('");
    Word w;
    while (at_primary()) w *= factor();
    return w;
  }

  Word factor() {
    Word w = primary();
    for (skip(); pos_ < text_.size() && text_[pos_] == '^'; skip()) {
      ++pos_;
      skip();
      const bool negative = pos_ < text_.size() && text_[pos_] == '-';
      if (negative) ++pos_;
      const long k = digits("exponent");
      w = power(w, static_cast<int>(negative ? -k : k));
    }
    return w;
  }

  long digits(const char* what) {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail(std::string(what) + " too large");
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return v;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word primary() {
    skip();
    const char c = text_[pos_];
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      const long i = digits("generator index");
      if (i < 1) {
        pos_ = at;
        fail("generator index must be at least 1");
      }
      if (rank_ > 0 && i > rank_) {
        pos_ = at;
        fail("generator x" + std::to_string(i) + " exceeds rank " + std::to_string(rank_));
      }
      return Word::generator(static_cast<int>(i));
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    ++pos_;  // '['
    Word u = word();
    expect(',');
    Word v = word();
    expect(']');
    return commutator(u, v);
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int rank) { return WordParser(text, rank).parse(); }

std::vector<long> exponent_sums(const Word& w, int rank) {
  if (w.max_generator() > rank) throw InputError("word uses a generator beyond rank " + std::to_string(rank));
  std::vector<long> out(static_cast<std::size_t>(rank), 0);
  for (const auto& l : w.letters()) out[static_cast<std::size_t>(l.generator - 1)] += l.exponent;
  return out;
}

}  // namespace clasp

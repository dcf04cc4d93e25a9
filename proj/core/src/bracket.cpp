#include "clasp/bracket.hpp"

#include "clasp/errors.hpp"

#include <algorithm>
#include <cctype>

namespace clasp {

Bracket Bracket::leaf(int label) {
  if (label == 0) throw InputError("bracket leaf label must be nonzero");
  return Bracket(std::vector<int>{label});
}

Bracket Bracket::join(const Bracket& left, const Bracket& right) {
  std::vector<int> code;
  code.reserve(1 + left.code_.size() + right.code_.size());
  code.push_back(0);
  code.insert(code.end(), left.code_.begin(), left.code_.end());
  code.insert(code.end(), right.code_.begin(), right.code_.end());
  return Bracket(std::move(code));
}

Bracket Bracket::from_code(std::vector<int> code) {
  long need = 1;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (need == 0) throw InputError("bracket code has trailing entries");
    need += code[i] == 0 ? 1 : -1;
  }
  if (need != 0) throw InputError("bracket code is incomplete");
  return Bracket(std::move(code));
}

std::size_t Bracket::subtree_end(std::size_t begin) const {
  long need = 1;
  std::size_t i = begin;
  while (need > 0) {
    need += code_[i] == 0 ? 1 : -1;
    ++i;
  }
  return i;
}

int Bracket::label() const {
  if (!is_leaf()) throw InputError("label() on an internal bracket node");
  return code_.front();
}

Bracket Bracket::left() const {
  if (code_.size() < 3) throw InputError("left() on a bracket leaf");
  const std::size_t end = subtree_end(1);
  return Bracket(std::vector<int>(code_.begin() + 1, code_.begin() + static_cast<long>(end)));
}

Bracket Bracket::right() const {
  if (code_.size() < 3) throw InputError("right() on a bracket leaf");
  const std::size_t mid = subtree_end(1);
  return Bracket(std::vector<int>(code_.begin() + static_cast<long>(mid), code_.end()));
}

std::size_t Bracket::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(code_.begin(), code_.end(), [](int c) { return c != 0; }));
}

std::vector<int> Bracket::leaves() const {
  std::vector<int> out;
  for (int c : code_)
    if (c != 0) out.push_back(c);
  return out;
}

std::string Bracket::to_string() const {
  if (code_.empty()) return "";
  if (is_leaf()) return std::to_string(code_.front());
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

namespace {

struct BracketParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + (pos < text.size() ? "" : " (end of input)"), pos);
  }

  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  Bracket parse() {
    skip();
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      Bracket l = parse();
      expect(',');
      Bracket r = parse();
      expect(']');
      return Bracket::join(l, r);
    }
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-')) fail("expected a label or '['");
    const int label = std::stoi(std::string(text.substr(start, pos - start)));
    if (label == 0) {
      pos = start;
      fail("label 0 is reserved");
    }
    return Bracket::leaf(label);
  }
};

}  // namespace

Bracket parse_bracket(std::string_view text) {
  BracketParser p{text};
  Bracket out = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace clasp

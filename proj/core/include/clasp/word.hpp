#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clasp {

struct Letter {
  int generator = 1;  // 1..r
  int exponent = 1;   // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on x_1..x_r. The empty word is
/// the identity.
class Word {
 public:
  Word() = default;
  static Word generator(int i);
  /// Freely reduces the sequence.
  static Word from_letters(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  int max_generator() const;

  Word inverse() const;
  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  /// "x1 x2 x1^-1 x2^-1"; the identity prints as "1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// [u,v] = u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);
Word power(const Word& w, int k);

/// Grammar (whitespace ignored):
///   word    ::= factor { factor }
///   factor  ::= primary { "^" integer }
///   primary ::= "x" digits | "1" | "[" word "," word "]" | "(" word ")"
/// Throws ParseError with the offending position. rank > 0 bounds the
/// generator index.
Word parse_word(std::string_view text, int rank = 0);

/// Exponent sum of each generator, length rank.
std::vector<long> exponent_sums(const Word& w, int rank);

}  // namespace clasp

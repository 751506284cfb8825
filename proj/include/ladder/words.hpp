#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ladder/moebius.hpp"

namespace ladder {

// One syllable of a normal-form word in <R | R^3> * <T>: either T^n with
// n != 0 or R^e with e in {1, 2}.
struct Letter {
  bool is_r = false;
  std::int64_t exp = 0;

  friend bool operator==(const Letter& x, const Letter& y) {
    return x.is_r == y.is_r && x.exp == y.exp;
  }
};

// Word in normal form: adjacent letters never come from the same factor,
// R exponents reduced mod 3 into {1,2}, T exponents nonzero. The empty word
// is the identity. Appending/prepending keeps the normal form, so two words
// are equal iff they name the same group element.
class GroupWord {
 public:
  GroupWord() = default;

  bool empty() const { return letters_.empty(); }
  size_t syllables() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Sum of |T exponents| plus the number of R letters (R and R^2 = R^-1
  // both count 1 against the generating set {T, T^-1, R, R^-1}).
  std::int64_t generator_length() const;

  void append_t(std::int64_t exp);
  void append_r(std::int64_t exp);
  void append(const Letter& l);
  void prepend(const Letter& l);
  // Drops the last syllable (normal form is preserved); enumeration helper.
  void pop_back();

  GroupWord inverse() const;
  static GroupWord concat(const GroupWord& x, const GroupWord& y);

  // "T^3 R T^-1 R^2"; the empty word prints as "1".
  std::string text() const;
  static GroupWord parse(const std::string& s);

  friend bool operator==(const GroupWord& x, const GroupWord& y) {
    return x.letters_ == y.letters_;
  }
  friend bool operator!=(const GroupWord& x, const GroupWord& y) {
    return !(x == y);
  }

 private:
  std::vector<Letter> letters_;
};

// Matrix of the word: product of T^n and R^e factors, left to right.
MoebiusElement evaluate(const GroupWord& word, const LadderParams& params);

}  // namespace ladder

#include "ladder/words.hpp"

#include <sstream>

namespace ladder {

std::int64_t GroupWord::generator_length() const {
  std::int64_t n = 0;
  for (const Letter& l : letters_) n += l.is_r ? 1 : std::abs(l.exp);
  return n;
}

void GroupWord::append_t(std::int64_t exp) {
  append(Letter{false, exp});
}

void GroupWord::append_r(std::int64_t exp) {
  append(Letter{true, exp});
}

void GroupWord::append(const Letter& l) {
  std::int64_t e = l.is_r ? ((l.exp % 3) + 3) % 3 : l.exp;
  if (e == 0) return;
  if (!letters_.empty() && letters_.back().is_r == l.is_r) {
    if (l.is_r) {
      std::int64_t m = (letters_.back().exp + e) % 3;
      if (m == 0)
        letters_.pop_back();
      else
        letters_.back().exp = m;
    } else {
      std::int64_t m = letters_.back().exp + e;
      if (m == 0)
        letters_.pop_back();
      else
        letters_.back().exp = m;
    }
    return;
  }
  letters_.push_back(Letter{l.is_r, e});
}

void GroupWord::prepend(const Letter& l) {
  std::int64_t e = l.is_r ? ((l.exp % 3) + 3) % 3 : l.exp;
  if (e == 0) return;
  if (!letters_.empty() && letters_.front().is_r == l.is_r) {
    std::int64_t m = l.is_r ? (letters_.front().exp + e) % 3
                            : letters_.front().exp + e;
    if (m == 0)
      letters_.erase(letters_.begin());
    else
      letters_.front().exp = m;
    return;
  }
  letters_.insert(letters_.begin(), Letter{l.is_r, e});
}

void GroupWord::pop_back() {
  if (!letters_.empty()) letters_.pop_back();
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.append(Letter{it->is_r, -it->exp});
  return out;
}

GroupWord GroupWord::concat(const GroupWord& x, const GroupWord& y) {
  GroupWord out = x;
  for (const Letter& l : y.letters_) out.append(l);
  return out;
}

std::string GroupWord::text() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << (l.is_r ? 'R' : 'T');
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

GroupWord GroupWord::parse(const std::string& s) {
  GroupWord out;
  std::istringstream is(s);
  std::string tok;
  bool any = false;
  while (is >> tok) {
    any = true;
    if (tok == "1") continue;
    if (tok.empty() || (tok[0] != 'T' && tok[0] != 'R'))
      throw parse_error("bad word letter: '" + tok + "'");
    std::int64_t exp = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() < 3)
        throw parse_error("bad word letter: '" + tok + "'");
      try {
        exp = std::stoll(tok.substr(2));
      } catch (...) {
        throw parse_error("bad exponent in '" + tok + "'");
      }
    }
    out.append(Letter{tok[0] == 'R', exp});
  }
  if (!any && !s.empty() && s.find_first_not_of(" \t") != std::string::npos)
    throw parse_error("unparsable word: '" + s + "'");
  return out;
}

MoebiusElement evaluate(const GroupWord& word, const LadderParams& params) {
  MoebiusElement acc;
  QuadExt s = params.shear();
  MoebiusElement r = rotation_R();
  for (const Letter& l : word.letters()) {
    if (l.is_r) {
      acc = acc * (l.exp == 1 ? r : r * r);
    } else {
      acc = acc * MoebiusElement(QuadExt(1), QuadExt(Rational(l.exp)) * s,
                                 QuadExt(0), QuadExt(1));
    }
  }
  return acc;
}

}  // namespace ladder

#include "monvar/word.hpp"

#include <algorithm>  // for find, reverse
#include <cctype>     // for isdigit, islower, isspace
#include <limits>     // for numeric_limits
#include <map>        // for map

namespace monvar {

  std::string to_string(Letter const& x) {
    std::string s(1, x.base);
    if (x.has_index()) {
      s += std::to_string(x.index);
    }
    return s;
  }

  Word Word::factor(size_t pos, size_t len) const {
    if (pos + len > letters_.size()) {
      throw std::out_of_range("factor out of range");
    }
    return Word(std::vector<Letter>(letters_.begin() + pos,
                                    letters_.begin() + pos + len));
  }

  Word operator*(Word const& u, Word const& v) {
    std::vector<Letter> r;
    r.reserve(u.size() + v.size());
    r.insert(r.end(), u.begin(), u.end());
    r.insert(r.end(), v.begin(), v.end());
    return Word(std::move(r));
  }

  Word power(Word const& w, size_t n) {
    std::vector<Letter> r;
    r.reserve(w.size() * n);
    for (size_t i = 0; i < n; ++i) {
      r.insert(r.end(), w.begin(), w.end());
    }
    return Word(std::move(r));
  }

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  Identity Identity::reversed() const {
    return Identity{reverse(lhs), reverse(rhs)};
  }

  LetterSet content(Word const& w) {
    return LetterSet(w.begin(), w.end());
  }

  namespace {
    std::map<Letter, size_t> counts(Word const& w) {
      std::map<Letter, size_t> c;
      for (auto const& x : w) {
        ++c[x];
      }
      return c;
    }
  }  // namespace

  LetterSet simple_letters(Word const& w) {
    LetterSet r;
    for (auto const& [x, n] : counts(w)) {
      if (n == 1) {
        r.insert(x);
      }
    }
    return r;
  }

  LetterSet multiple_letters(Word const& w) {
    LetterSet r;
    for (auto const& [x, n] : counts(w)) {
      if (n > 1) {
        r.insert(x);
      }
    }
    return r;
  }

  size_t occ(Word const& w, Letter x) {
    return static_cast<size_t>(std::count(w.begin(), w.end(), x));
  }

  size_t prefix_len(Word const& w, Letter x, size_t i) {
    if (i == 0) {
      throw std::out_of_range("occurrence index must be at least 1");
    }
    size_t seen = 0;
    for (size_t p = 0; p < w.size(); ++p) {
      if (w[p] == x && ++seen == i) {
        return p + 1;
      }
    }
    throw std::out_of_range("letter " + to_string(x) + " occurs fewer than "
                            + std::to_string(i) + " times");
  }

  Word delete_letters(Word const& w, LetterSet const& X) {
    std::vector<Letter> r;
    for (auto const& x : w) {
      if (!X.contains(x)) {
        r.push_back(x);
      }
    }
    return Word(std::move(r));
  }

  Word retain_letters(Word const& w, LetterSet const& X) {
    std::vector<Letter> r;
    for (auto const& x : w) {
      if (X.contains(x)) {
        r.push_back(x);
      }
    }
    return Word(std::move(r));
  }

  Word initial_part(Word const& w) {
    std::vector<Letter> r;
    LetterSet           seen;
    for (auto const& x : w) {
      if (seen.insert(x).second) {
        r.push_back(x);
      }
    }
    return Word(std::move(r));
  }

  Word reverse(Word const& w) {
    std::vector<Letter> r(w.begin(), w.end());
    std::reverse(r.begin(), r.end());
    return Word(std::move(r));
  }

  ParseError::ParseError(std::string const& msg, size_t pos)
      : std::runtime_error("parse error at position " + std::to_string(pos)
                           + ": " + msg),
        pos_(pos) {}

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view s) : s_(s) {}

      void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
          ++i_;
        }
      }
      bool at_end() {
        skip_ws();
        return i_ >= s_.size();
      }
      size_t pos() const {
        return i_;
      }
      char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
      }

      // Digits immediately following the current position, no leading zeros
      // unless the number is 0 itself.
      int number(bool allow_zero) {
        size_t start = i_;
        long   value = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          value = value * 10 + (s_[i_] - '0');
          if (value > std::numeric_limits<int>::max()) {
            throw ParseError("number too large", start);
          }
          ++i_;
        }
        if (i_ == start) {
          throw ParseError("expected a number", start);
        }
        if (i_ - start > 1 && s_[start] == '0') {
          throw ParseError("leading zero in number", start);
        }
        if (!allow_zero && value == 0) {
          throw ParseError("exponent must be positive", start);
        }
        return static_cast<int>(value);
      }

      Letter letter() {
        skip_ws();
        if (i_ >= s_.size() || !std::islower(static_cast<unsigned char>(s_[i_]))) {
          throw ParseError("expected a letter [a-z]", i_);
        }
        char b = s_[i_++];
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          return Letter(b, number(true));
        }
        return Letter(b);
      }

      // word := "1" | term+
      Word word(char terminator) {
        skip_ws();
        if (peek() == '1') {
          ++i_;
          skip_ws();
          if (i_ < s_.size() && s_[i_] != terminator) {
            throw ParseError("unexpected input after empty word", i_);
          }
          return Word();
        }
        std::vector<Letter> r;
        while (!at_end() && peek() != terminator) {
          Letter x = letter();
          size_t n = 1;
          if (peek() == '^') {
            ++i_;
            skip_ws();
            n = static_cast<size_t>(number(false));
          }
          r.insert(r.end(), n, x);
        }
        if (r.empty()) {
          throw ParseError("empty word must be written as 1", i_);
        }
        return Word(std::move(r));
      }

      void expect(char c) {
        if (peek() != c) {
          throw ParseError(std::string("expected '") + c + "'", i_);
        }
        ++i_;
      }

     private:
      std::string_view s_;
      size_t           i_ = 0;
    };
  }  // namespace

  Word parse_word(std::string_view text) {
    Parser p(text);
    Word   w = p.word('\0');
    if (!p.at_end()) {
      throw ParseError("unexpected character", p.pos());
    }
    return w;
  }

  Letter parse_letter(std::string_view text) {
    Parser p(text);
    Letter x = p.letter();
    if (!p.at_end()) {
      throw ParseError("unexpected character after letter", p.pos());
    }
    return x;
  }

  std::string format_word(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (size_t i = 0; i < w.size();) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      s += to_string(w[i]);
      if (j - i > 1) {
        s += '^' + std::to_string(j - i);
      }
      i = j;
    }
    return s;
  }

  Identity parse_identity(std::string_view text) {
    Parser   p(text);
    Identity id;
    id.lhs = p.word('=');
    p.expect('=');
    id.rhs = p.word('\0');
    if (!p.at_end()) {
      throw ParseError("unexpected character", p.pos());
    }
    return id;
  }

  std::string format_identity(Identity const& id) {
    return format_word(id.lhs) + " = " + format_word(id.rhs);
  }

  size_t WordHash::operator()(Word const& w) const noexcept {
    size_t h = 1469598103934665603ULL;
    for (auto const& x : w) {
      h ^= static_cast<size_t>(static_cast<unsigned char>(x.base))
           | (static_cast<size_t>(x.index + 1) << 8);
      h *= 1099511628211ULL;
    }
    return h;
  }

}  // namespace monvar

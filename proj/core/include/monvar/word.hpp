#ifndef MONVAR_WORD_HPP_
#define MONVAR_WORD_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <functional>   // for hash
#include <initializer_list>
#include <set>          // for set
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace monvar {

  // A letter is a lowercase base symbol with an optional non-negative index,
  // so x, x0 and x12 are three different letters.
  struct Letter {
    static constexpr int no_index = -1;

    char base  = 'x';
    int  index = no_index;

    constexpr Letter() = default;
    constexpr explicit Letter(char b, int i = no_index) : base(b), index(i) {}

    constexpr bool has_index() const noexcept {
      return index != no_index;
    }

    friend constexpr bool operator==(Letter const&, Letter const&) = default;
    friend constexpr std::strong_ordering operator<=>(Letter const&,
                                                      Letter const&)
        = default;
  };

  std::string to_string(Letter const& x);

  using LetterSet = std::set<Letter>;

  // Immutable finite sequence of letters. The empty word plays the role of λ.
  class Word {
   public:
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    // 0-based access; positions reported by the API are 1-based.
    Letter const& operator[](size_t i) const {
      return letters_[i];
    }
    Letter const& at(size_t i) const {
      return letters_.at(i);
    }
    const_iterator begin() const noexcept {
      return letters_.begin();
    }
    const_iterator end() const noexcept {
      return letters_.end();
    }
    std::vector<Letter> const& letters() const noexcept {
      return letters_;
    }

    // Factor of length len starting at 0-based position pos.
    Word factor(size_t pos, size_t len) const;

    friend Word operator*(Word const& u, Word const& v);

    friend bool operator==(Word const&, Word const&) = default;
    // Lexicographic on letters; use shortlex_less for the canonical order.
    friend std::strong_ordering operator<=>(Word const& u, Word const& v) {
      return u.letters_ <=> v.letters_;
    }

   private:
    std::vector<Letter> letters_;
  };

  Word power(Word const& w, size_t n);

  // Length first, then lexicographic.
  bool shortlex_less(Word const& u, Word const& v);

  struct Identity {
    Word lhs;
    Word rhs;

    bool trivial() const {
      return lhs == rhs;
    }
    Identity reversed() const;
    friend bool operator==(Identity const&, Identity const&) = default;
  };

  LetterSet content(Word const& w);
  LetterSet simple_letters(Word const& w);
  LetterSet multiple_letters(Word const& w);
  size_t    occ(Word const& w, Letter x);

  // ℓ_i(w, x): length of the shortest prefix of w containing i occurrences of
  // x. Throws std::out_of_range unless 1 <= i <= occ(w, x).
  size_t prefix_len(Word const& w, Letter x, size_t i);

  Word delete_letters(Word const& w, LetterSet const& X);
  Word retain_letters(Word const& w, LetterSet const& X);
  Word initial_part(Word const& w);
  Word reverse(Word const& w);

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& msg, size_t pos);
    size_t position() const noexcept {
      return pos_;
    }

   private:
    size_t pos_;
  };

  Word        parse_word(std::string_view text);
  std::string format_word(Word const& w);
  Letter      parse_letter(std::string_view text);

  Identity    parse_identity(std::string_view text);
  std::string format_identity(Identity const& id);

  struct WordHash {
    size_t operator()(Word const& w) const noexcept;
  };

}  // namespace monvar

#endif  // MONVAR_WORD_HPP_

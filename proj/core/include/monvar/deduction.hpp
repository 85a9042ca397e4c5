#ifndef MONVAR_DEDUCTION_HPP_
#define MONVAR_DEDUCTION_HPP_

#include <cstddef>      // for size_t
#include <map>          // for map
#include <optional>     // for optional
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "word.hpp"

namespace monvar {

  // Endomorphism of the free monoid given on finitely many letters; every
  // other letter is fixed.
  class LetterMap {
   public:
    LetterMap() = default;
    explicit LetterMap(std::map<Letter, Word> images)
        : images_(std::move(images)) {}

    void set(Letter x, Word w) {
      images_[x] = std::move(w);
    }
    Word image(Letter x) const;
    Word operator()(Word const& w) const;

    std::map<Letter, Word> const& images() const noexcept {
      return images_;
    }
    // "x->y2,t->1"
    std::string to_string() const;

    friend bool operator==(LetterMap const&, LetterMap const&) = default;

   private:
    std::map<Letter, Word> images_;
  };

  LetterMap parse_letter_map(std::string_view text);

  struct RewriteStep {
    Identity    identity;  // s = t, applied as s -> t
    std::string code;      // name of the identity, informational
    LetterMap   xi;
    Word        a;
    Word        b;

    // The same step applied t -> s.
    RewriteStep reversed() const;
  };

  class PatternMismatch : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Requires w == a ξ(s) b and returns a ξ(t) b.
  Word apply_step(Word const& w, RewriteStep const& step);

  struct Deduction {
    std::vector<Word>        words;
    std::vector<RewriteStep> steps;
  };

  struct StepDiagnostic {
    size_t      index = 0;  // 0-based step number
    bool        ok    = true;
    std::string message;
  };

  struct DeductionCheck {
    bool                        ok = true;
    std::vector<StepDiagnostic> steps;
  };

  DeductionCheck check_deduction(Deduction const& d);

  // Breadth-first search from goal.lhs to goal.rhs using the identities of
  // system in both directions. Successors of a word are visited in shortlex
  // order, so the result is deterministic and has the fewest steps. Nothing
  // returned means nothing found within the bounds.
  std::optional<Deduction> bounded_derive(std::vector<Identity> const& system,
                                          Identity const&              goal,
                                          size_t                       max_len,
                                          size_t max_steps);

  // Text format: words on their own lines, separated by annotations
  //   # id=<code> xi=<letter>-><word>,... a=<word> b=<word> [dir=lr|rl]
  // Lines starting with "##" and blank lines are ignored. Without dir both
  // directions are tried.
  struct DeductionFile {
    Deduction                 deduction;
    std::vector<std::string> direction;  // "lr", "rl" or "" per step
  };

  DeductionFile parse_deduction(std::string_view text);
  std::string   format_deduction(Deduction const& d);

  // Verifies a parsed file; steps without a fixed direction pass if either
  // direction reproduces the next word.
  DeductionCheck check_deduction_file(DeductionFile const& f);

}  // namespace monvar

#endif  // MONVAR_DEDUCTION_HPP_

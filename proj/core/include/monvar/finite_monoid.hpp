#ifndef MONVAR_FINITE_MONOID_HPP_
#define MONVAR_FINITE_MONOID_HPP_

#include <cstddef>      // for size_t
#include <functional>   // for function
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "word.hpp"

namespace monvar {

  // Multiplication table over elements 0..size()-1. The constructor checks
  // closure, the identity laws and associativity exhaustively.
  class FiniteMonoid {
   public:
    FiniteMonoid(std::string              name,
                 std::vector<std::string> labels,
                 std::vector<size_t>      table,
                 size_t                   identity,
                 std::optional<size_t>    zero,
                 std::vector<size_t>      generators);

    std::string const& name() const noexcept {
      return name_;
    }
    size_t size() const noexcept {
      return labels_.size();
    }
    size_t product(size_t a, size_t b) const noexcept {
      return table_[a * labels_.size() + b];
    }
    size_t identity() const noexcept {
      return identity_;
    }
    std::optional<size_t> zero() const noexcept {
      return zero_;
    }
    std::vector<size_t> const& generators() const noexcept {
      return generators_;
    }
    std::string const& label(size_t a) const {
      return labels_.at(a);
    }
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    // Throws std::out_of_range for unknown labels.
    size_t element(std::string_view label) const;

    // Aligned multiplication table.
    std::string dump() const;

   private:
    std::string              name_;
    std::vector<std::string> labels_;
    std::vector<size_t>      table_;
    size_t                   identity_;
    std::optional<size_t>    zero_;
    std::vector<size_t>      generators_;
  };

  // Elements: λ (labelled 1), every nonempty factor of a word of W in
  // shortlex order, then 0.
  FiniteMonoid rees_quotient(std::vector<Word> const& W);

  // "P1", "B21" or "K5"; throws std::invalid_argument otherwise.
  FiniteMonoid presentation_monoid(std::string_view name);

  // "S:<word>,<word>..." or a presentation monoid name.
  FiniteMonoid parse_monoid_spec(std::string_view spec);

  struct Substitution {
    std::vector<std::pair<Letter, size_t>> values;

    size_t      at(Letter x) const;
    std::string to_string(FiniteMonoid const& M) const;
  };

  size_t evaluate(FiniteMonoid const& M, Word const& w, Substitution const& s);

  // First substitution (in odometer order over the sorted letters of the
  // identity, elements in table order) separating the two sides.
  std::optional<Substitution> find_refutation(FiniteMonoid const& M,
                                              Identity const&     id);
  bool satisfies(FiniteMonoid const& M, Identity const& id);

  class LetterCapExceeded : public std::runtime_error {
   public:
    LetterCapExceeded(size_t letters, size_t cap);
  };

  inline constexpr size_t default_letter_cap = 4;

  // Shared, lazily built S(W); safe to call concurrently.
  std::shared_ptr<FiniteMonoid const> shared_rees_quotient(
      std::vector<Word> const& W);

  // satisfies(S(W), id), refusing identities with more than cap letters.
  bool oracle_decide(std::vector<Word> const& W,
                     Identity const&          id,
                     size_t                   cap = default_letter_cap);
  std::optional<Substitution> oracle_refutation(
      std::vector<Word> const& W,
      Identity const&          id,
      size_t                   cap = default_letter_cap);

  // Generator words: C_{n+1} = var S(x^n), D_1 = var S(xy),
  // D_{k} = var S(x y1 x y2 x ... y_{k-1} x) for k >= 2.
  Word c_generator(size_t n);
  Word d_generator(size_t k);
  Word l_generator();
  Word m_generator();

  using IdentityDecider = std::function<bool(Identity const&)>;

  struct IsotermResult {
    std::optional<Word> witness;
    size_t              candidates = 0;
    size_t              bound      = 0;
  };

  // Searches for w' != w with the same content, every letter occurring at
  // most bound times, and decide(w = w') true. Candidates are tried in
  // shortlex order. bound == 0 selects the default, two more than the
  // largest occurrence count in w. A missing witness is only evidence, not
  // proof, that w is an isoterm.
  IsotermResult isoterm_search(Word const&            w,
                               IdentityDecider const& decide,
                               size_t                 bound = 0);

  enum class SemiVerdict { holds, fails, unknown };
  std::string to_string(SemiVerdict v);

  struct SemiDecision {
    SemiVerdict verdict = SemiVerdict::unknown;
    std::string evidence;
  };

  // One-sided membership test for D: holds when B21 satisfies the identity,
  // fails when S(generator of D_j) refutes it for some j <= k.
  SemiDecision semi_decide_d(Identity const& id,
                             size_t          k,
                             size_t          cap = default_letter_cap);

}  // namespace monvar

#endif  // MONVAR_FINITE_MONOID_HPP_

#ifndef MONVAR_DECOMPOSITION_HPP_
#define MONVAR_DECOMPOSITION_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <limits>    // for numeric_limits
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "word.hpp"

namespace monvar {

  // A divider is either a letter or λ (std::nullopt).
  using Divider = std::optional<Letter>;

  std::string to_string(Divider const& d);

  class Depth {
   public:
    static constexpr uint32_t infinity_value
        = std::numeric_limits<uint32_t>::max();

    constexpr Depth() = default;
    constexpr explicit Depth(uint32_t v) : value_(v) {}
    static constexpr Depth infinity() {
      return Depth(infinity_value);
    }

    constexpr bool is_infinite() const noexcept {
      return value_ == infinity_value;
    }
    constexpr uint32_t value() const noexcept {
      return value_;
    }
    constexpr bool at_most(size_t k) const noexcept {
      return !is_infinite() && value_ <= k;
    }

    friend constexpr bool operator==(Depth, Depth) = default;
    friend constexpr std::strong_ordering operator<=>(Depth, Depth) = default;

   private:
    uint32_t value_ = 0;
  };

  std::string to_string(Depth d);

  struct KDecomposition {
    struct Part {
      Divider divider;
      Word    block;
      friend bool operator==(Part const&, Part const&) = default;
    };

    size_t            k = 0;
    std::vector<Part> parts;
    Word              source;

    // Non-λ dividers in order.
    std::vector<Letter> dividers() const;
    Word                concat() const;
    // "λ·[block]·d·[block]…" with [λ] for empty blocks.
    std::string render() const;

    friend bool operator==(KDecomposition const&, KDecomposition const&)
        = default;
  };

  // Everything the deciders need about one word, computed once: the divider
  // positions at every level up to stabilization, first/second occurrence
  // restrictors per level and depths.
  class WordProfile {
   public:
    explicit WordProfile(Word w);

    Word const& word() const noexcept {
      return word_;
    }
    size_t stabilization_level() const noexcept {
      return divider_mask_.size() - 1;
    }

    // Letters of the word in order of first occurrence.
    std::vector<Letter> const& letters() const noexcept {
      return order_;
    }
    bool   contains(Letter x) const noexcept;
    size_t occ(Letter x) const noexcept;

    KDecomposition      decomposition(size_t k) const;
    std::vector<Letter> dividers(size_t k) const;
    bool                is_divider(Letter x, size_t k) const;

    // h_i^k(w, x). Throws std::out_of_range if x is absent or i > occ(w, x).
    Divider restrictor(Letter x, size_t i, size_t k) const;
    // Fast paths for i = 1, 2; the caller guarantees the occurrence exists.
    Divider const& h1(Letter x, size_t k) const;
    Divider const& h2(Letter x, size_t k) const;

    // Throws std::invalid_argument if x is absent.
    Depth depth(Letter x) const;

   private:
    struct LetterInfo {
      Letter               letter;
      std::vector<size_t>  positions;  // 0-based
      std::vector<Divider> h1;         // per level 0..stabilization
      std::vector<Divider> h2;
      Depth                depth;
    };

    LetterInfo const* find(Letter x) const noexcept;
    LetterInfo const& info(Letter x) const;
    size_t            level(size_t k) const noexcept {
      return k < divider_mask_.size() ? k : divider_mask_.size() - 1;
    }
    Divider divider_before(size_t pos, size_t lvl) const;

    Word                           word_;
    std::vector<Letter>            order_;
    std::vector<LetterInfo>        info_;  // parallel to order_
    std::vector<std::vector<bool>> divider_mask_;
  };

  KDecomposition      zero_decompose(Word const& w);
  KDecomposition      k_decompose(Word const& w, size_t k);
  size_t              stabilization_level(Word const& w);
  std::vector<Letter> k_dividers(Word const& w, size_t k);
  Divider restrictor(Word const& w, Letter x, size_t i, size_t k);
  Depth   depth(Word const& w, Letter x);
  bool    k_equivalent(Word const& u, Word const& v, size_t k);

}  // namespace monvar

#endif  // MONVAR_DECOMPOSITION_HPP_

#ifndef MONVAR_DECIDERS_HPP_
#define MONVAR_DECIDERS_HPP_

#include <cstddef>    // for size_t
#include <functional>  // for function
#include <optional>   // for optional
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

#include "catalog.hpp"
#include "decomposition.hpp"
#include "finite_monoid.hpp"
#include "word.hpp"

namespace monvar {

  // One entry of a verdict. claim is a code such as "(1)", "(6)", "(14)",
  // "content", "ini" or "oracle"; for failures, letter/level locate the
  // violation and detail carries the two compared values.
  struct Reason {
    std::string           claim;
    std::optional<Letter> letter;
    std::optional<size_t> level;
    std::string           detail;

    std::string to_string() const;
  };

  struct Verdict {
    bool                holds = true;
    std::vector<Reason> reasons;

    std::string to_string() const;
  };

  class UnsupportedVariety : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct DecideOptions {
    size_t letter_cap = default_letter_cap;
    // Also require the second-occurrence condition for letters of small
    // depth in the right-hand side.
    bool strict_symmetric_j = false;
  };

  // Claim checks. Each returns the first failure, or nothing if the claim
  // holds. Letters are scanned in order of first occurrence in u.
  std::optional<Reason> check_sim_mul(WordProfile const& u, WordProfile const& v);
  std::optional<Reason> check_simple_skeleton(WordProfile const& u,
                                              WordProfile const& v);
  std::optional<Reason> check_h1_zero(WordProfile const& u, WordProfile const& v);
  std::optional<Reason> check_restrictor_level(WordProfile const& u,
                                               WordProfile const& v,
                                               size_t             l);
  std::optional<Reason> check_h1_small_depth(WordProfile const& u,
                                             WordProfile const& v,
                                             size_t             l);
  std::optional<Reason> check_h1_all(WordProfile const& u,
                                     WordProfile const& v,
                                     size_t             l);
  std::optional<Reason> check_h2_small_depth(WordProfile const& u,
                                             WordProfile const& v,
                                             size_t             l,
                                             size_t             m,
                                             bool               symmetric);

  bool claim_sim_mul(Word const& u, Word const& v);
  bool claim_simple_skeleton(Word const& u, Word const& v);
  bool claim_restrictor_level(Word const& u, Word const& v, size_t l);

  // True if V has an exact decider here.
  bool has_decider(VarietyDescriptor const& V);

  // Throws UnsupportedVariety for D, N, O (and their duals) and
  // LetterCapExceeded when an oracle-backed variety meets too many letters.
  Verdict decide(VarietyDescriptor const& V,
                 Identity const&          id,
                 DecideOptions const&     opts = {});
  // Same, reusing precomputed profiles of the two sides.
  Verdict decide(VarietyDescriptor const& V,
                 WordProfile const&       u,
                 WordProfile const&       v,
                 DecideOptions const&     opts = {});

  bool group_forcing(Identity const& id);

  using IdentitySampler = std::function<std::optional<Identity>()>;

  struct InclusionReport {
    size_t                  checked         = 0;
    size_t                  accepted_larger = 0;
    std::optional<Identity> counterexample;
  };

  // Draws up to N identities from sampler (stopping early when it returns
  // nothing) and checks that each one accepted for Vlarge is accepted for
  // Vsmall. Stops at the first counterexample.
  InclusionReport verify_inclusion(VarietyDescriptor const& Vsmall,
                                  VarietyDescriptor const& Vlarge,
                                  IdentitySampler const&   sampler,
                                  size_t                   N,
                                  DecideOptions const&     opts = {});

  // Identity holding in Vsmall but not in Vlarge, for adjacent members of
  // chain_of. Throws std::invalid_argument for other pairs.
  Identity separating_witness(VarietyDescriptor const& Vsmall,
                             VarietyDescriptor const& Vlarge);

}  // namespace monvar

#endif  // MONVAR_DECIDERS_HPP_

#ifndef MONVAR_HARNESS_HPP_
#define MONVAR_HARNESS_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <optional>  // for optional
#include <random>   // for mt19937_64
#include <string>   // for string
#include <vector>   // for vector

#include "catalog.hpp"
#include "deciders.hpp"
#include "word.hpp"

namespace monvar {

  struct RunConfig {
    std::string              command;  // echoed into the report
    std::vector<std::string> varieties;
    size_t                   kmax       = 2;
    size_t                   k          = 0;
    size_t                   letters    = 3;
    size_t                   max_len    = 6;
    size_t                   occ_cap    = 0;
    size_t                   samples    = 0;  // 0 selects exhaustive mode
    uint64_t                 seed       = 1;
    size_t                   workers    = 0;  // 0 selects default_workers()
    size_t                   letter_cap = default_letter_cap;
    bool                     strict_j   = false;
    bool                     timing     = false;
  };

  // From MONVAR_WORKERS if set, else the hardware concurrency (at least 1).
  size_t default_workers();

  enum class Outcome { pass, fail, unknown };
  std::string to_string(Outcome o);

  struct CheckResult {
    std::string              name;
    Outcome                  outcome = Outcome::pass;
    std::string              witness;  // identity string for failures
    std::vector<std::string> notes;
  };

  struct Report {
    static constexpr int schema_version = 1;

    std::string              command;
    std::vector<CheckResult> checks;
    std::vector<std::string> body;  // free-form payload lines
    std::optional<double>    elapsed_ms;

    Outcome     overall() const;
    int         exit_code() const;
    std::string render() const;
  };

  // The first n letters of x, y, z, t, s, u, v, w.
  std::vector<Letter> alphabet(size_t n);

  // All words of length <= max_len over letters, shortlex with letters in the
  // given order.
  std::vector<Word> words_up_to(std::vector<Letter> const& letters,
                                size_t                     max_len);

  // Every ordered pair (u, v) with u != v from words_up_to, row by row.
  IdentitySampler exhaustive_identities(std::vector<Letter> const& letters,
                                        size_t                     max_len);

  // Portable uniform draw: the standard engines are fully specified, the
  // standard distributions are not.
  size_t uniform_below(std::mt19937_64& rng, size_t n);

  Word random_word(std::mt19937_64&            rng,
                   std::vector<Letter> const& letters,
                   size_t                      min_len,
                   size_t                      max_len);

  IdentitySampler random_identities(std::vector<Letter> letters,
                                    size_t              max_len,
                                    uint64_t            seed);

  // Adjacent-pair monotonicity and witness strictness over chain_of(kmax).
  Report verify_chain(RunConfig const& cfg);

  std::string cmd_decompose(Word const& w, size_t k);
  std::string cmd_depth(Word const& w);
  std::string cmd_restrictors(Word const& w);

  Report cmd_decide(RunConfig const& cfg, Identity const& id);
  Report cmd_monoid_check(RunConfig const& cfg,
                          std::string const& monoid_spec,
                          Identity const&    id);
  Report cmd_isoterm(RunConfig const&   cfg,
                     Word const&        w,
                     std::string const& monoid_spec,
                     std::string const& variety);
  Report cmd_deduce_search(RunConfig const&   cfg,
                           std::string const& system,
                           Identity const&    goal,
                           size_t             max_len,
                           size_t             max_steps);
  Report cmd_deduce_check(RunConfig const& cfg, std::string const& text);

}  // namespace monvar

#endif  // MONVAR_HARNESS_HPP_

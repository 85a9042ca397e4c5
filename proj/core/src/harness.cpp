#include "monvar/harness.hpp"

#include <algorithm>  // for min
#include <atomic>     // for atomic
#include <chrono>     // for steady_clock
#include <cstdlib>    // for getenv, strtoul
#include <limits>     // for numeric_limits
#include <memory>     // for make_shared
#include <sstream>    // for ostringstream
#include <thread>     // for thread

#include "monvar/decomposition.hpp"
#include "monvar/deduction.hpp"
#include "monvar/finite_monoid.hpp"

namespace monvar {

  size_t default_workers() {
    if (char const* env = std::getenv("MONVAR_WORKERS")) {
      unsigned long n = std::strtoul(env, nullptr, 10);
      if (n > 0) {
        return n;
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  std::string to_string(Outcome o) {
    switch (o) {
      case Outcome::pass:
        return "pass";
      case Outcome::fail:
        return "fail";
      case Outcome::unknown:
        break;
    }
    return "unknown";
  }

  Outcome Report::overall() const {
    Outcome r = Outcome::pass;
    for (auto const& c : checks) {
      if (c.outcome == Outcome::fail) {
        return Outcome::fail;
      }
      if (c.outcome == Outcome::unknown) {
        r = Outcome::unknown;
      }
    }
    return r;
  }

  int Report::exit_code() const {
    return overall() == Outcome::fail ? 1 : 0;
  }

  std::string Report::render() const {
    std::ostringstream out;
    out << "# monvar report v" << schema_version << '\n';
    out << "command: " << command << '\n';
    for (auto const& line : body) {
      out << line << '\n';
    }
    for (auto const& c : checks) {
      out << "check: " << c.name << ' ' << to_string(c.outcome) << '\n';
      if (!c.witness.empty()) {
        out << "  witness: " << c.witness << '\n';
      }
      for (auto const& n : c.notes) {
        out << "  note: " << n << '\n';
      }
    }
    size_t counts[3] = {0, 0, 0};
    for (auto const& c : checks) {
      ++counts[static_cast<int>(c.outcome)];
    }
    out << "summary: pass=" << counts[0] << " fail=" << counts[1]
        << " unknown=" << counts[2] << '\n';
    if (elapsed_ms) {
      out << "elapsed-ms: " << static_cast<long long>(*elapsed_ms) << '\n';
    }
    out << "result: " << to_string(overall()) << '\n';
    return out.str();
  }

  std::vector<Letter> alphabet(size_t n) {
    static constexpr char bases[] = {'x', 'y', 'z', 't', 's', 'u', 'v', 'w'};
    if (n > sizeof(bases)) {
      throw std::invalid_argument("alphabet supports at most 8 letters");
    }
    std::vector<Letter> r;
    for (size_t i = 0; i < n; ++i) {
      r.emplace_back(bases[i]);
    }
    return r;
  }

  std::vector<Word> words_up_to(std::vector<Letter> const& letters,
                                size_t                     max_len) {
    std::vector<Word> r = {Word()};
    if (letters.empty()) {
      return r;
    }
    size_t prev_begin = 0;
    for (size_t len = 1; len <= max_len; ++len) {
      size_t prev_end = r.size();
      for (size_t i = prev_begin; i < prev_end; ++i) {
        for (auto const& x : letters) {
          r.push_back(r[i] * Word({x}));
        }
      }
      prev_begin = prev_end;
    }
    return r;
  }

  IdentitySampler exhaustive_identities(std::vector<Letter> const& letters,
                                        size_t                     max_len) {
    auto   words = std::make_shared<std::vector<Word>>(words_up_to(letters, max_len));
    size_t i = 0, j = 0;
    return [words, i, j]() mutable -> std::optional<Identity> {
      while (i < words->size()) {
        if (j == words->size()) {
          ++i;
          j = 0;
          continue;
        }
        size_t jj = j++;
        if (jj != i) {
          return Identity{(*words)[i], (*words)[jj]};
        }
      }
      return std::nullopt;
    };
  }

  size_t uniform_below(std::mt19937_64& rng, size_t n) {
    // rejection sampling keeps the draw unbiased and portable
    uint64_t const limit
        = std::numeric_limits<uint64_t>::max()
          - std::numeric_limits<uint64_t>::max() % n;
    uint64_t v;
    do {
      v = rng();
    } while (v >= limit);
    return static_cast<size_t>(v % n);
  }

  Word random_word(std::mt19937_64&           rng,
                   std::vector<Letter> const& letters,
                   size_t                     min_len,
                   size_t                     max_len) {
    size_t              len = min_len + uniform_below(rng, max_len - min_len + 1);
    std::vector<Letter> r;
    for (size_t i = 0; i < len; ++i) {
      r.push_back(letters[uniform_below(rng, letters.size())]);
    }
    return Word(std::move(r));
  }

  IdentitySampler random_identities(std::vector<Letter> letters,
                                    size_t              max_len,
                                    uint64_t            seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng, letters = std::move(letters), max_len]() -> std::optional<Identity> {
      Word u = random_word(*rng, letters, 0, max_len);
      Word v = random_word(*rng, letters, 0, max_len);
      return Identity{std::move(u), std::move(v)};
    };
  }

  namespace {
    // Runs fn(i) for i in [0, n) on the given number of threads. Callers
    // keep results per index, so the outcome never depends on scheduling.
    template <typename F>
    void parallel_for(size_t n, size_t workers, F&& fn) {
      workers = std::max<size_t>(1, std::min(workers, n));
      if (workers == 1) {
        for (size_t i = 0; i < n; ++i) {
          fn(i);
        }
        return;
      }
      std::atomic<size_t>      next{0};
      std::vector<std::thread> pool;
      for (size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
          for (size_t i = next++; i < n; i = next++) {
            fn(i);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    struct Stopwatch {
      std::chrono::steady_clock::time_point start
          = std::chrono::steady_clock::now();
      double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
      }
    };

    DecideOptions options_of(RunConfig const& cfg) {
      return DecideOptions{cfg.letter_cap, cfg.strict_j};
    }

    size_t workers_of(RunConfig const& cfg) {
      return cfg.workers == 0 ? default_workers() : cfg.workers;
    }
  }  // namespace

  Report verify_chain(RunConfig const& cfg) {
    Stopwatch   clock;
    Report      report;
    auto const  chain = chain_of(cfg.kmax);
    auto const  opts  = options_of(cfg);
    size_t const P    = chain.size() - 1;
    report.command    = cfg.command;

    // Identities are numbered; each adjacent pair keeps its lowest-numbered
    // violation, which makes the report independent of thread interleaving.
    std::vector<Word>        words;
    std::vector<WordProfile> profiles;
    std::vector<std::pair<size_t, size_t>> sampled;
    if (cfg.samples == 0) {
      words = words_up_to(alphabet(cfg.letters), cfg.max_len);
    } else {
      std::mt19937_64 rng(cfg.seed);
      auto            letters = alphabet(cfg.letters);
      for (size_t s = 0; s < cfg.samples; ++s) {
        words.push_back(random_word(rng, letters, 0, cfg.max_len));
        words.push_back(random_word(rng, letters, 0, cfg.max_len));
        sampled.emplace_back(2 * s, 2 * s + 1);
      }
    }
    profiles.reserve(words.size());
    for (auto const& w : words) {
      profiles.emplace_back(w);
    }

    size_t const rows = cfg.samples == 0 ? words.size() : sampled.size();
    size_t const none = std::numeric_limits<size_t>::max();
    // per row: first violating column for each pair, and checked counts
    std::vector<std::vector<size_t>> first_bad(rows, std::vector<size_t>(P, none));
    std::vector<size_t>              checked(rows, 0);

    auto check_pair = [&](size_t row, size_t col, WordProfile const& u,
                          WordProfile const& v) {
      std::vector<char> holds(chain.size());
      for (size_t c = 0; c < chain.size(); ++c) {
        holds[c] = decide(chain[c], u, v, opts).holds;
      }
      for (size_t p = 0; p < P; ++p) {
        if (holds[p + 1] && !holds[p] && first_bad[row][p] == none) {
          first_bad[row][p] = col;
        }
      }
      ++checked[row];
    };

    parallel_for(rows, workers_of(cfg), [&](size_t row) {
      if (cfg.samples == 0) {
        for (size_t col = 0; col < words.size(); ++col) {
          if (col != row) {
            check_pair(row, col, profiles[row], profiles[col]);
          }
        }
      } else {
        auto [a, b] = sampled[row];
        check_pair(row, 0, profiles[a], profiles[b]);
      }
    });

    size_t total = 0;
    for (size_t n : checked) {
      total += n;
    }
    report.body.push_back("chain: kmax=" + std::to_string(cfg.kmax) + " size="
                          + std::to_string(chain.size()));
    if (cfg.samples == 0) {
      report.body.push_back("space: exhaustive letters=" + std::to_string(cfg.letters)
                            + " maxlen=" + std::to_string(cfg.max_len));
    } else {
      report.body.push_back("space: sampled letters=" + std::to_string(cfg.letters)
                            + " maxlen=" + std::to_string(cfg.max_len)
                            + " samples=" + std::to_string(cfg.samples)
                            + " seed=" + std::to_string(cfg.seed));
    }
    report.body.push_back("identities: " + std::to_string(total));

    for (size_t p = 0; p < P; ++p) {
      std::string pair = to_string(chain[p]) + "<" + to_string(chain[p + 1]);
      CheckResult mono{"monotone " + pair, Outcome::pass, "", {}};
      for (size_t row = 0; row < rows; ++row) {
        if (first_bad[row][p] != none) {
          Identity id = cfg.samples == 0
                            ? Identity{words[row], words[first_bad[row][p]]}
                            : Identity{words[sampled[row].first],
                                       words[sampled[row].second]};
          mono.outcome = Outcome::fail;
          mono.witness = format_identity(id);
          mono.notes.push_back("accepted by " + to_string(chain[p + 1])
                               + ", rejected by " + to_string(chain[p]));
          break;
        }
      }
      report.checks.push_back(std::move(mono));

      Identity    w = separating_witness(chain[p], chain[p + 1]);
      auto        small = decide(chain[p], w, opts);
      auto        large = decide(chain[p + 1], w, opts);
      CheckResult sep{"separates " + pair, Outcome::pass, "", {}};
      sep.notes.push_back("identity " + format_identity(w));
      if (!small.holds || large.holds) {
        sep.outcome = Outcome::fail;
        sep.witness = format_identity(w);
      } else {
        sep.notes.push_back("rejected by " + large.reasons.front().to_string());
      }
      report.checks.push_back(std::move(sep));
    }
    if (cfg.timing) {
      report.elapsed_ms = clock.ms();
    }
    return report;
  }

  std::string cmd_decompose(Word const& w, size_t k) {
    return k_decompose(w, k).render() + "\n";
  }

  std::string cmd_depth(Word const& w) {
    WordProfile p(w);
    std::string s;
    for (auto const& x : p.letters()) {
      if (!s.empty()) {
        s += ' ';
      }
      s += to_string(x) + ":" + to_string(p.depth(x));
    }
    return s + "\n";
  }

  std::string cmd_restrictors(Word const& w) {
    WordProfile  p(w);
    size_t const top = p.stabilization_level();
    std::string  s   = "letter k i restrictor\n";
    for (auto const& x : p.letters()) {
      for (size_t k = 0; k <= top; ++k) {
        std::string klabel = (k == top ? "≥" : "") + std::to_string(k);
        for (size_t i = 1; i <= p.occ(x); ++i) {
          s += to_string(x) + " " + klabel + " " + std::to_string(i) + " "
               + to_string(p.restrictor(x, i, k)) + "\n";
        }
      }
    }
    return s;
  }

  Report cmd_decide(RunConfig const& cfg, Identity const& id) {
    Stopwatch clock;
    Report    report;
    report.command = cfg.command;
    for (auto const& name : cfg.varieties) {
      auto        V = parse_variety(name);
      CheckResult c{"decide " + to_string(V), Outcome::pass, "", {}};
      if (V.tag == VarietyTag::D && !V.dual) {
        auto sd   = semi_decide_d(id, cfg.k == 0 ? 3 : cfg.k, cfg.letter_cap);
        c.outcome = sd.verdict == SemiVerdict::holds
                        ? Outcome::pass
                        : (sd.verdict == SemiVerdict::fails ? Outcome::fail
                                                            : Outcome::unknown);
        c.notes.push_back("semi-decision " + to_string(sd.verdict) + ": "
                          + sd.evidence);
      } else {
        auto v = decide(V, id, options_of(cfg));
        c.outcome = v.holds ? Outcome::pass : Outcome::fail;
        c.notes.push_back(std::string("verdict ") + (v.holds ? "holds" : "fails"));
        for (auto const& r : v.reasons) {
          c.notes.push_back("reason " + r.to_string());
        }
      }
      if (c.outcome == Outcome::fail) {
        c.witness = format_identity(id);
      }
      report.checks.push_back(std::move(c));
    }
    if (cfg.timing) {
      report.elapsed_ms = clock.ms();
    }
    return report;
  }

  Report cmd_monoid_check(RunConfig const&   cfg,
                          std::string const& monoid_spec,
                          Identity const&    id) {
    Stopwatch clock;
    Report    report;
    report.command = cfg.command;
    auto        M  = parse_monoid_spec(monoid_spec);
    auto        s  = find_refutation(M, id);
    CheckResult c{"satisfies " + M.name(), s ? Outcome::fail : Outcome::pass, "", {}};
    c.notes.push_back("elements " + std::to_string(M.size()));
    if (s) {
      c.witness = format_identity(id);
      c.notes.push_back("refuted at " + s->to_string(M) + " (lhs "
                        + M.label(evaluate(M, id.lhs, *s)) + ", rhs "
                        + M.label(evaluate(M, id.rhs, *s)) + ")");
    }
    report.checks.push_back(std::move(c));
    if (cfg.timing) {
      report.elapsed_ms = clock.ms();
    }
    return report;
  }

  Report cmd_isoterm(RunConfig const&   cfg,
                     Word const&        w,
                     std::string const& monoid_spec,
                     std::string const& variety) {
    Stopwatch       clock;
    Report          report;
    IdentityDecider decider;
    std::string     against;
    report.command = cfg.command;
    if (!monoid_spec.empty()) {
      auto M  = std::make_shared<FiniteMonoid const>(parse_monoid_spec(monoid_spec));
      against = M->name();
      decider = [M](Identity const& id) { return satisfies(*M, id); };
    } else {
      auto V  = parse_variety(variety);
      against = to_string(V);
      auto o  = options_of(cfg);
      decider = [V, o](Identity const& id) { return decide(V, id, o).holds; };
    }
    auto        r = isoterm_search(w, decider, cfg.occ_cap);
    CheckResult c{"isoterm " + format_word(w) + " in " + against,
                  r.witness ? Outcome::fail : Outcome::pass, "", {}};
    c.notes.push_back("bound " + std::to_string(r.bound) + ", candidates "
                      + std::to_string(r.candidates));
    if (r.witness) {
      c.witness = format_identity(Identity{w, *r.witness});
    } else {
      c.notes.push_back("no witness within the bound");
    }
    report.checks.push_back(std::move(c));
    if (cfg.timing) {
      report.elapsed_ms = clock.ms();
    }
    return report;
  }

  Report cmd_deduce_search(RunConfig const&   cfg,
                           std::string const& system,
                           Identity const&    goal,
                           size_t             max_len,
                           size_t             max_steps) {
    Stopwatch clock;
    Report    report;
    report.command = cfg.command;
    auto ids       = named_system(system);
    if (max_len == 0) {
      max_len = std::max(goal.lhs.size(), goal.rhs.size()) + 2;
    }
    auto        d = bounded_derive(ids, goal, max_len, max_steps);
    CheckResult c{"derive " + format_identity(goal), Outcome::unknown, "", {}};
    c.notes.push_back("bounds maxlen=" + std::to_string(max_len)
                      + " maxsteps=" + std::to_string(max_steps));
    if (d) {
      auto check = check_deduction(*d);
      c.outcome  = check.ok ? Outcome::pass : Outcome::fail;
      c.notes.push_back("found " + std::to_string(d->steps.size()) + " steps");
      std::istringstream lines(format_deduction(*d));
      std::string        line;
      while (std::getline(lines, line)) {
        report.body.push_back(line);
      }
    } else {
      c.notes.push_back("inconclusive: nothing found within the bounds");
    }
    report.checks.push_back(std::move(c));
    if (cfg.timing) {
      report.elapsed_ms = clock.ms();
    }
    return report;
  }

  Report cmd_deduce_check(RunConfig const& cfg, std::string const& text) {
    Stopwatch clock;
    Report    report;
    report.command = cfg.command;
    auto file      = parse_deduction(text);
    auto check     = check_deduction_file(file);
    for (auto const& s : check.steps) {
      CheckResult c{"step " + std::to_string(s.index + 1),
                    s.ok ? Outcome::pass : Outcome::fail, "", {}};
      if (!s.message.empty()) {
        c.notes.push_back(s.message);
      }
      if (!s.ok) {
        c.witness = format_identity(Identity{file.deduction.words[s.index],
                                             file.deduction.words[s.index + 1]});
      }
      report.checks.push_back(std::move(c));
    }
    auto const& words = file.deduction.words;
    report.body.push_back("endpoints: "
                          + format_identity(Identity{words.front(), words.back()}));
    if (cfg.timing) {
      report.elapsed_ms = clock.ms();
    }
    return report;
  }

}  // namespace monvar

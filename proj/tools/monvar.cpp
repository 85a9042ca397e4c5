// Command-line front end for the monvar library.

#include <fstream>   // for ifstream
#include <iostream>  // for cout, cerr
#include <sstream>   // for stringstream
#include <string>    // for string

#include "CLI11.hpp"
#include "monvar/catalog.hpp"
#include "monvar/deciders.hpp"
#include "monvar/finite_monoid.hpp"
#include "monvar/harness.hpp"
#include "monvar/word.hpp"

namespace {

  std::string echo(int argc, char** argv) {
    std::string s = "monvar";
    for (int i = 1; i < argc; ++i) {
      std::string a = argv[i];
      bool        quote = a.empty() || a.find_first_of(" \t\"") != std::string::npos;
      s += ' ';
      s += quote ? "\"" + a + "\"" : a;
    }
    return s;
  }

  int emit(monvar::Report const& r) {
    std::cout << r.render();
    return r.exit_code();
  }

}  // namespace

int main(int argc, char** argv) {
  using namespace monvar;

  CLI::App app{"Word combinatorics and word-problem deciders for monoid varieties"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.command = echo(argc, argv);
  app.add_option("--workers", cfg.workers, "worker threads (default: MONVAR_WORKERS or all cores)");
  app.add_flag("--timing", cfg.timing, "append elapsed time to reports");

  std::string word_text, identity_text, variety, monoid_spec, words_text;
  std::string system, file;
  size_t      k = 0, max_steps = 6, max_len = 0;

  auto* decompose = app.add_subcommand("decompose", "print the k-decomposition of a word");
  decompose->add_option("word", word_text)->required();
  decompose->add_option("--k", k, "level")->capture_default_str();

  auto* depth = app.add_subcommand("depth", "print the depth of every letter");
  depth->add_option("word", word_text)->required();

  auto* restrictors = app.add_subcommand("restrictors", "print h_i^k for every letter, occurrence and level");
  restrictors->add_option("word", word_text)->required();

  auto* decide_cmd = app.add_subcommand("decide", "decide an identity in one or more varieties");
  decide_cmd->add_option("--variety", cfg.varieties, "variety name, e.g. H2, J1.1, K~")->required();
  decide_cmd->add_option("--identity", identity_text)->required();
  decide_cmd->add_option("--letter-cap", cfg.letter_cap)->capture_default_str();
  decide_cmd->add_option("--k", cfg.k, "search depth for the D semi-decision (default 3)");
  decide_cmd->add_flag("--strict-j", cfg.strict_j, "symmetric second-occurrence condition for J");

  auto* chain = app.add_subcommand("verify-chain", "check monotonicity and strictness along the chain");
  chain->add_option("--kmax", cfg.kmax)->capture_default_str();
  chain->add_option("--letters", cfg.letters)->capture_default_str();
  chain->add_option("--maxlen,--exhaustive-len", cfg.max_len)->capture_default_str();
  chain->add_option("--samples", cfg.samples, "random identities instead of the exhaustive space");
  chain->add_option("--seed", cfg.seed)->capture_default_str();
  chain->add_flag("--strict-j", cfg.strict_j);

  auto* monoid = app.add_subcommand("monoid", "finite monoids");
  monoid->require_subcommand(1);
  auto* build = monoid->add_subcommand("build", "print the table of S(W)");
  build->add_option("--words", words_text, "comma-separated words")->required();
  auto* check = monoid->add_subcommand("check", "check an identity in a finite monoid");
  check->add_option("--monoid", monoid_spec, "S:<words>, P1, B21 or K5")->required();
  check->add_option("--identity", identity_text)->required();
  auto* dump = monoid->add_subcommand("dump", "print a monoid table");
  dump->add_option("--monoid", monoid_spec)->required();

  auto* isoterm = app.add_subcommand("isoterm", "search for w = w' within an occurrence bound");
  isoterm->add_option("--word", word_text)->required();
  auto* iso_monoid = isoterm->add_option("--monoid", monoid_spec);
  auto* iso_variety = isoterm->add_option("--variety", variety);
  iso_monoid->excludes(iso_variety);
  isoterm->add_option("--cap", cfg.occ_cap, "occurrence bound per letter");
  isoterm->add_option("--letter-cap", cfg.letter_cap)->capture_default_str();

  auto* deduce = app.add_subcommand("deduce", "search for or check a deduction");
  auto* sys_opt = deduce->add_option("--system", system, "identity codes, e.g. phi,sigma2,(20)");
  auto* goal_opt = deduce->add_option("--goal", identity_text);
  auto* file_opt = deduce->add_option("--check", file, "deduction file to verify");
  deduce->add_option("--max-steps", max_steps)->capture_default_str();
  deduce->add_option("--max-len", max_len, "default: longest goal side + 2");
  file_opt->excludes(sys_opt)->excludes(goal_opt);
  sys_opt->needs(goal_opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decompose) {
      std::cout << cmd_decompose(parse_word(word_text), k);
    } else if (*depth) {
      std::cout << cmd_depth(parse_word(word_text));
    } else if (*restrictors) {
      std::cout << cmd_restrictors(parse_word(word_text));
    } else if (*decide_cmd) {
      return emit(cmd_decide(cfg, parse_identity(identity_text)));
    } else if (*chain) {
      return emit(verify_chain(cfg));
    } else if (*build) {
      std::cout << parse_monoid_spec("S:" + words_text).dump();
    } else if (*check) {
      return emit(cmd_monoid_check(cfg, monoid_spec, parse_identity(identity_text)));
    } else if (*dump) {
      std::cout << parse_monoid_spec(monoid_spec).dump();
    } else if (*isoterm) {
      if (monoid_spec.empty() && variety.empty()) {
        throw std::invalid_argument("isoterm needs --monoid or --variety");
      }
      return emit(cmd_isoterm(cfg, parse_word(word_text), monoid_spec, variety));
    } else if (*deduce) {
      if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
          throw std::runtime_error("cannot read " + file);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return emit(cmd_deduce_check(cfg, buf.str()));
      }
      if (system.empty() || identity_text.empty()) {
        throw std::invalid_argument("deduce needs --system and --goal, or --check");
      }
      return emit(cmd_deduce_search(cfg, system, parse_identity(identity_text), max_len, max_steps));
    }
  } catch (std::exception const& e) {
    std::cerr << "monvar: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

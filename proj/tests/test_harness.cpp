#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "monvar/catalog.hpp"
#include "monvar/harness.hpp"

using namespace monvar;

namespace {
  Word W(char const* s) {
    return parse_word(s);
  }
  RunConfig small_chain(size_t workers) {
    RunConfig cfg;
    cfg.command = "test";
    cfg.kmax    = 1;
    cfg.letters = 2;
    cfg.max_len = 4;
    cfg.workers = workers;
    return cfg;
  }
}  // namespace

TEST_CASE("word spaces", "[harness]") {
  auto ws = words_up_to(alphabet(2), 2);
  std::vector<Word> expected = {Word(), W("x"), W("y"), W("x^2"), W("xy"),
                                W("yx"), W("y^2")};
  CHECK(ws == expected);
  CHECK(words_up_to(alphabet(3), 6).size() == 1093);
  CHECK(alphabet(8).back() == Letter('w'));
  CHECK_THROWS_AS(alphabet(9), std::invalid_argument);

  auto next  = exhaustive_identities(alphabet(1), 2);
  size_t seen = 0;
  while (auto id = next()) {
    CHECK(id->lhs != id->rhs);
    ++seen;
  }
  CHECK(seen == 3 * 2);
}

TEST_CASE("seeded sampling is reproducible", "[harness]") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    size_t n = 1 + static_cast<size_t>(i % 37);
    size_t x = uniform_below(a, n);
    CHECK(x < n);
    CHECK(x == uniform_below(b, n));
  }
  auto s1 = random_identities(alphabet(3), 6, 9);
  auto s2 = random_identities(alphabet(3), 6, 9);
  for (int i = 0; i < 100; ++i) {
    auto p = s1();
    auto q = s2();
    REQUIRE(p.has_value());
    CHECK(*p == *q);
  }
}

TEST_CASE("chain report is deterministic and worker independent", "[harness]") {
  auto one   = verify_chain(small_chain(1)).render();
  auto three = verify_chain(small_chain(3)).render();
  CHECK(one == three);
  CHECK(one == verify_chain(small_chain(1)).render());
  CHECK(one.starts_with("# monvar report v1\ncommand: test\nchain: kmax=1"));
  CHECK(one.find("check: monotone E<F1 pass") != std::string::npos);
  CHECK(one.find("check: separates J1.1<F2 pass") != std::string::npos);
  CHECK(one.ends_with("result: pass\n"));
  CHECK(one.find("elapsed-ms") == std::string::npos);

  auto timed   = small_chain(1);
  timed.timing = true;
  CHECK(verify_chain(timed).render().find("elapsed-ms: ") != std::string::npos);

  auto sampled    = small_chain(2);
  sampled.samples = 500;
  sampled.seed    = 7;
  auto r          = verify_chain(sampled);
  CHECK(r.overall() == Outcome::pass);
  CHECK(r.render() == verify_chain(sampled).render());
}

TEST_CASE("report outcomes and exit codes", "[harness]") {
  Report r;
  r.command = "x";
  CHECK(r.exit_code() == 0);
  r.checks.push_back({"a", Outcome::pass, "", {}});
  r.checks.push_back({"b", Outcome::unknown, "", {}});
  CHECK(r.overall() == Outcome::unknown);
  CHECK(r.exit_code() == 0);
  r.checks.push_back({"c", Outcome::fail, "x = y", {"why"}});
  CHECK(r.overall() == Outcome::fail);
  CHECK(r.exit_code() == 1);
  CHECK(r.render()
        == "# monvar report v1\ncommand: x\ncheck: a pass\ncheck: b unknown\n"
           "check: c fail\n  witness: x = y\n  note: why\n"
           "summary: pass=1 fail=1 unknown=1\nresult: fail\n");
}

TEST_CASE("text commands", "[harness]") {
  CHECK(cmd_decompose(W("xyxzytszxs"), 1) == "λ·[xyx]·z·[y]·t·[szxs]\n");
  CHECK(cmd_depth(W("xyxzytszxs")) == "x:3 y:2 z:1 t:0 s:inf\n");
  auto table = cmd_restrictors(W("xyxzytszxs"));
  CHECK(table.starts_with("letter k i restrictor\nx 0 1 λ\n"));
  CHECK(table.find("x 2 2 y\n") != std::string::npos);
  CHECK(table.find("z 1 2 t\n") != std::string::npos);
  CHECK(table.find("s ≥3 1 t\n") != std::string::npos);
}

TEST_CASE("report commands", "[harness]") {
  RunConfig cfg;
  cfg.command   = "decide";
  cfg.varieties = {"F1", "H1"};
  auto d        = cmd_decide(cfg, alpha(1));
  CHECK(d.exit_code() == 1);
  auto text = d.render();
  CHECK(text.find("check: decide F1 pass") != std::string::npos);
  CHECK(text.find("check: decide H1 fail") != std::string::npos);
  CHECK(text.find("note: reason (14) level=1 letter=x1: h1^1: λ vs y1")
        != std::string::npos);

  cfg.varieties = {"D"};
  auto semi     = cmd_decide(cfg, parse_identity("x^2 = x^3"));
  CHECK(semi.overall() == Outcome::pass);
  cfg.varieties = {"Q"};
  CHECK_THROWS(cmd_decide(cfg, parse_identity("x = x")));

  auto m = cmd_monoid_check(cfg, "S:xy", parse_identity("xy = yx"));
  CHECK(m.overall() == Outcome::fail);
  CHECK(m.render().find("refuted at x->x,y->y (lhs xy, rhs 0)") != std::string::npos);

  cfg.occ_cap = 3;
  auto iso    = cmd_isoterm(cfg, W("x^2"), "S:x", "");
  CHECK(iso.overall() == Outcome::fail);
  CHECK(iso.render().find("witness: x^2 = x^3") != std::string::npos);

  std::ifstream in(std::string(MONVAR_TEST_DATA) + "/delta22.ded");
  std::stringstream buf;
  buf << in.rdbuf();
  auto ded = cmd_deduce_check(cfg, buf.str());
  CHECK(ded.overall() == Outcome::pass);
  CHECK(ded.checks.size() == 8);

  auto search = cmd_deduce_search(cfg, "(19)", parse_identity("xyx = x^2y"), 0, 2);
  CHECK(search.overall() == Outcome::pass);
}

TEST_CASE("a failing chain check reproduces through decide", "[harness]") {
  // J1.1 < F2 is separated by delta_1^1; re-running that identity through
  // the decide command gives the same rejection reason
  auto report = verify_chain(small_chain(1));
  std::string sep;
  for (auto const& c : report.checks) {
    if (c.name == "separates J1.1<F2") {
      sep = c.notes.back();
    }
  }
  REQUIRE(sep.starts_with("rejected by "));
  RunConfig cfg;
  cfg.varieties = {"F2"};
  auto again    = cmd_decide(cfg, delta(1, 1)).render();
  CHECK(again.find("note: reason " + sep.substr(12)) != std::string::npos);
}

TEST_CASE("worker count from the environment", "[harness]") {
  ::setenv("MONVAR_WORKERS", "3", 1);
  CHECK(default_workers() == 3);
  ::unsetenv("MONVAR_WORKERS");
  CHECK(default_workers() >= 1);
}

#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>

#include "monvar/catalog.hpp"
#include "monvar/finite_monoid.hpp"
#include "monvar/harness.hpp"

using namespace monvar;

namespace {
  Word W(char const* s) {
    return parse_word(s);
  }
  Identity I(char const* l, char const* r) {
    return Identity{W(l), W(r)};
  }

  // Factors of plain single-character words, as strings.
  std::set<std::string> factors(std::vector<std::string> const& ws) {
    std::set<std::string> r;
    for (auto const& w : ws) {
      for (size_t i = 0; i < w.size(); ++i) {
        for (size_t n = 1; i + n <= w.size(); ++n) {
          r.insert(w.substr(i, n));
        }
      }
    }
    return r;
  }

  std::string flat(Word const& w) {
    std::string r;
    for (auto const& a : w) {
      r += a.base;
    }
    return r;
  }

  // S(W) evaluation by string concatenation: the value is the concatenated
  // word if it is a factor (or empty), otherwise "0".
  std::string string_eval(std::set<std::string> const&        F,
                          Word const&                           w,
                          std::map<Letter, std::string> const& s) {
    std::string r;
    for (auto const& a : w) {
      auto const& v = s.at(a);
      if (v == "0") {
        return "0";
      }
      r += v;
      if (!r.empty() && !F.contains(r)) {
        return "0";
      }
    }
    return r;
  }

  bool string_satisfies(std::vector<std::string> const& gens,
                        Identity const&                 id) {
    auto                F = factors(gens);
    std::vector<std::string> values = {""};
    values.insert(values.end(), F.begin(), F.end());
    values.push_back("0");
    LetterSet con = content(id.lhs);
    for (auto const& a : content(id.rhs)) {
      con.insert(a);
    }
    std::vector<Letter> ls(con.begin(), con.end());
    std::vector<size_t> idx(ls.size(), 0);
    while (true) {
      std::map<Letter, std::string> s;
      for (size_t i = 0; i < ls.size(); ++i) {
        s[ls[i]] = values[idx[i]];
      }
      if (string_eval(F, id.lhs, s) != string_eval(F, id.rhs, s)) {
        return false;
      }
      size_t i = 0;
      while (i < idx.size() && ++idx[i] == values.size()) {
        idx[i++] = 0;
      }
      if (i == idx.size()) {
        return true;
      }
    }
  }
}  // namespace

TEST_CASE("Rees quotients of small words", "[monoid]") {
  auto M = rees_quotient({W("xy")});
  REQUIRE(M.size() == 5);
  CHECK(M.labels() == std::vector<std::string>{"1", "x", "y", "xy", "0"});
  auto x = M.element("x"), y = M.element("y"), xy = M.element("xy");
  auto z = *M.zero();
  CHECK(M.product(x, y) == xy);
  CHECK(M.product(y, x) == z);
  CHECK(M.product(x, x) == z);
  CHECK(M.product(M.identity(), xy) == xy);
  CHECK(M.product(xy, M.identity()) == xy);
  CHECK(M.product(z, x) == z);
  CHECK_THROWS_AS(M.element("yx"), std::out_of_range);

  auto S = rees_quotient({W("x")});
  CHECK(S.size() == 3);
  CHECK(S.product(S.element("x"), S.element("x")) == *S.zero());
  CHECK(S.dump().starts_with("# monoid S(x) (3 elements)\n"));

  CHECK(parse_monoid_spec("S:xy,yx").size() == 6);
  CHECK(parse_monoid_spec("S:x^2").size() == 4);
  CHECK_THROWS_AS(parse_monoid_spec("Q7"), std::invalid_argument);
}

TEST_CASE("S(xzxyty) has 21 elements", "[monoid]") {
  auto F = factors({"xzxyty"});
  CHECK(F.size() == 19);
  CHECK(rees_quotient({l_generator()}).size() == F.size() + 2);
  CHECK(rees_quotient({m_generator()}).size() == factors({"xyzxty"}).size() + 2);
}

TEST_CASE("presentation monoids", "[monoid]") {
  auto P = presentation_monoid("P1");
  CHECK(P.size() == 4);
  auto e = P.element("e"), a = P.element("a");
  CHECK(P.product(e, e) == e);
  CHECK(P.product(a, e) == a);
  CHECK(P.product(e, a) == *P.zero());

  auto B = presentation_monoid("B21");
  CHECK(B.size() == 6);
  auto ba = B.element("a"), bb = B.element("b");
  CHECK(B.product(ba, ba) == *B.zero());
  CHECK(B.product(bb, bb) == *B.zero());
  CHECK(B.product(B.product(ba, bb), ba) == ba);
  CHECK(B.product(B.product(bb, ba), bb) == bb);

  auto K = presentation_monoid("K5");
  CHECK(K.size() == 5);
  auto ka = K.element("a"), kb = K.element("b"), kb2 = K.element("b^2");
  CHECK(K.product(ka, ka) == ka);
  CHECK(K.product(ka, kb) == ka);
  CHECK(K.product(kb2, ka) == kb2);
  CHECK(K.product(kb, kb) == kb2);
  CHECK(K.product(kb, ka) == K.element("ba"));

  CHECK_THROWS_AS(presentation_monoid("B2"), std::invalid_argument);
}

TEST_CASE("constructor rejects non-monoids", "[monoid]") {
  // Z3 with b*b changed to b: (aa)b = b but a(ab) = a
  std::vector<size_t> t = {0, 1, 2, 1, 2, 0, 2, 0, 2};
  CHECK_THROWS(FiniteMonoid("bad", {"1", "a", "b"}, t, 0, std::nullopt, {1}));
  std::vector<size_t> open = {0, 1, 1, 3};
  CHECK_THROWS(FiniteMonoid("open", {"1", "a"}, open, 0, std::nullopt, {1}));
}

TEST_CASE("identity checking in finite monoids", "[monoid]") {
  auto P = presentation_monoid("P1");
  auto r = find_refutation(P, I("xyx", "yx^2"));
  REQUIRE(r.has_value());
  CHECK(r->to_string(P) == "x->e,y->a");
  CHECK(satisfies(P, I("x^2", "x")) == false);
  CHECK(satisfies(P, I("x^2y", "yx^2")) == false);
  CHECK(satisfies(P, I("xyx", "x^2y")) == true);
  CHECK(satisfies(P, I("x", "x")));

  auto K = presentation_monoid("K5");
  // K5 generates var{(20), sigma2}, which contains K but is strictly larger:
  // x^2y^2 = y^2x^2 fails at x=a, y=b (a vs b^2)
  CHECK(satisfies(K, sigma2()));
  CHECK(satisfies(K, named_identity("(20)")));
  CHECK(satisfies(K, named_identity("phi1")));
  CHECK(satisfies(K, named_identity("phi3")));
  CHECK_FALSE(satisfies(K, named_identity("phi2")));
  Substitution ab{{{Letter('x'), K.element("a")}, {Letter('y'), K.element("b")}}};
  CHECK(evaluate(K, W("x^2y^2"), ab) == K.element("a"));
  CHECK(evaluate(K, W("y^2x^2"), ab) == K.element("b^2"));
  CHECK_FALSE(satisfies(K, I("xy", "yx")));

  auto S = rees_quotient({W("xy")});
  CHECK(satisfies(S, I("xyx", "x^2y")));
  CHECK_FALSE(satisfies(S, I("xy", "yx")));
  CHECK(evaluate(S, W("xy"), Substitution{{{Letter('x'), S.element("x")},
                                           {Letter('y'), S.element("y")}}})
        == S.element("xy"));
}

TEST_CASE("Rees evaluation agrees with string concatenation",
          "[monoid][property]") {
  std::mt19937_64 rng(3);
  std::vector<std::vector<std::string>> gens = {
      {"xy"}, {"xzxyty"}, {"xyzxty"}, {"xx"}, {"xyx"}, {"xy", "yx"}};
  auto letters = alphabet(2);
  for (auto const& g : gens) {
    std::vector<Word> ws;
    for (auto const& s : g) {
      ws.push_back(parse_word(s));
    }
    auto M = rees_quotient(ws);
    auto F = factors(g);
    for (int trial = 0; trial < 300; ++trial) {
      Word                          w = random_word(rng, letters, 0, 5);
      Substitution                  sub;
      std::map<Letter, std::string> smap;
      for (auto const& a : letters) {
        size_t e = uniform_below(rng, M.size());
        sub.values.emplace_back(a, e);
        std::string lab = M.label(e);
        smap[a] = lab == "1" ? "" : lab == "0" ? "0" : flat(parse_word(lab));
      }
      std::string expect = string_eval(F, w, smap);
      std::string got    = M.label(evaluate(M, w, sub));
      std::string got_flat = got == "1" ? "" : got == "0" ? "0" : flat(parse_word(got));
      CHECK(got_flat == expect);
    }
  }

  // satisfaction over every 2-letter identity up to length 4
  auto words = words_up_to(letters, 4);
  for (auto const& g : {std::vector<std::string>{"xy"}, {"xx"}, {"xyx"}}) {
    std::vector<Word> ws;
    for (auto const& s : g) {
      ws.push_back(parse_word(s));
    }
    auto   M        = rees_quotient(ws);
    size_t disagree = 0;
    for (auto const& u : words) {
      for (auto const& v : words) {
        disagree += satisfies(M, Identity{u, v}) != string_satisfies(g, Identity{u, v});
      }
    }
    CHECK(disagree == 0);
  }
}

TEST_CASE("oracles", "[monoid]") {
  std::vector<Word> L = {l_generator()};
  CHECK_FALSE(oracle_decide(L, I("xzxyty", "xzyxty")));
  // square-free generator: every square evaluates to 0 or 1
  CHECK(oracle_decide(L, I("x^2", "x^3")));
  CHECK_FALSE(oracle_decide({m_generator()}, sigma1()));
  CHECK(c_generator(3) == W("x^3"));
  CHECK(d_generator(1) == W("xy"));
  CHECK(d_generator(3) == W("x y1 x y2 x"));
  CHECK_THROWS_AS(oracle_decide(L, I("xyzts", "xyzts")), LetterCapExceeded);
  CHECK(oracle_decide(L, I("xyzts", "xyzts"), 5));

  auto a = shared_rees_quotient(L);
  auto b = shared_rees_quotient(L);
  CHECK(a.get() == b.get());
}

TEST_CASE("isoterm search", "[monoid]") {
  std::vector<Word> S1 = {W("x")};
  auto r = isoterm_search(W("x^2"), [&](Identity const& id) {
    return oracle_decide(S1, id);
  }, 3);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == W("x^3"));
  CHECK(r.bound == 3);

  std::vector<Word> L = {l_generator()};
  auto none = isoterm_search(l_generator(), [&](Identity const& id) {
    return oracle_decide(L, id);
  }, 2);
  CHECK_FALSE(none.witness.has_value());
  // every arrangement of x^2 z y^2 t except xzxyty itself: 6!/(2!2!) - 1
  CHECK(none.candidates > 0);

  // default bound is max occurrence + 2
  auto d = isoterm_search(W("xy"), [](Identity const&) { return false; });
  CHECK(d.bound == 3);
}

TEST_CASE("one-sided decision for D", "[monoid]") {
  CHECK(semi_decide_d(I("x^2", "x^3"), 3).verdict == SemiVerdict::holds);
  auto f = semi_decide_d(I("xy", "yx"), 3);
  CHECK(f.verdict == SemiVerdict::fails);
  CHECK(f.evidence.starts_with("refuted by S(xy)"));
  CHECK_THROWS_AS(semi_decide_d(I("xy", "yx"), 0), std::invalid_argument);
}

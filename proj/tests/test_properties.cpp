// Cross-module properties: deciders against oracles, member monoids and
// consequences of defining identities.
#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "monvar/catalog.hpp"
#include "monvar/deciders.hpp"
#include "monvar/deduction.hpp"
#include "monvar/finite_monoid.hpp"
#include "monvar/harness.hpp"

using namespace monvar;

namespace {
  // u = a ξ(s) b, v = a ξ(t) b for a random ξ and context.
  Identity random_consequence(std::mt19937_64& rng, Identity const& st,
                              std::vector<Letter> const& letters) {
    LetterMap xi;
    for (auto const& x : content(st.lhs)) {
      xi.set(x, random_word(rng, letters, 0, 2));
    }
    for (auto const& x : content(st.rhs)) {
      xi.set(x, random_word(rng, letters, 0, 2));
    }
    Word a = random_word(rng, letters, 0, 2), b = random_word(rng, letters, 0, 2);
    return Identity{a * xi(st.lhs) * b, a * xi(st.rhs) * b};
  }
}  // namespace

TEST_CASE("structural deciders match their generating monoids",
          "[properties]") {
  auto words = words_up_to(alphabet(2), 5);
  for (size_t n = 1; n <= 3; ++n) {
    std::vector<Word> gen = {c_generator(n)};
    size_t            disagree = 0;
    for (auto const& u : words) {
      for (auto const& v : words) {
        Identity id{u, v};
        disagree += decide(VarietyDescriptor::C(n + 1), id).holds
                    != oracle_decide(gen, id);
      }
    }
    INFO("n=" << n);
    CHECK(disagree == 0);
  }
  std::vector<Word> xy = {d_generator(1)};
  size_t            disagree = 0;
  for (auto const& u : words) {
    for (auto const& v : words) {
      Identity id{u, v};
      disagree += decide(VarietyDescriptor::D(1), id).holds != oracle_decide(xy, id);
    }
  }
  CHECK(disagree == 0);
}

TEST_CASE("accepted identities hold in member monoids", "[properties]") {
  auto P    = presentation_monoid("P1");
  auto K5   = presentation_monoid("K5");
  auto next = random_identities(alphabet(3), 7, 2024);
  size_t bad = 0, acceptedE = 0, inK5 = 0;
  for (int i = 0; i < 2000; ++i) {
    auto id = *next();
    if (decide(VarietyDescriptor::E(), id).holds) {
      ++acceptedE;
      bad += !satisfies(P, id);
    }
    // K5 generates a variety containing K, so the implication runs this way
    if (satisfies(K5, id)) {
      ++inK5;
      bad += !decide(VarietyDescriptor::K(), id).holds;
    }
  }
  CHECK(bad == 0);
  CHECK(acceptedE > 0);
  CHECK(inK5 > 0);
}

TEST_CASE("consequences of the defining identities are accepted",
          "[properties]") {
  std::mt19937_64 rng(99);
  auto            letters = alphabet(4);
  size_t          rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    for (auto const& st : phi_system()) {
      auto id = random_consequence(rng, st, letters);
      rejected += !decide(VarietyDescriptor::F(1), id).holds;
      rejected += !decide(VarietyDescriptor::K(), id).holds;
    }
    for (auto const& st : {sigma2(), named_identity("(20)")}) {
      rejected += !decide(VarietyDescriptor::K(), random_consequence(rng, st, letters)).holds;
    }
    for (size_t k = 1; k <= 2; ++k) {
      auto id = random_consequence(rng, xxkxbk(k), letters);
      rejected += !decide(VarietyDescriptor::J(k, k), id).holds;
      auto a = random_consequence(rng, alpha(k), letters);
      rejected += !decide(VarietyDescriptor::F(k), a).holds;
    }
  }
  CHECK(rejected == 0);
}

TEST_CASE("decisions are symmetric and reflexive", "[properties]") {
  auto next = random_identities(alphabet(3), 7, 5);
  auto vs   = chain_of(2);
  vs.push_back(VarietyDescriptor::K());
  vs.push_back(VarietyDescriptor::of(VarietyTag::LRB));
  size_t asym = 0;
  for (int i = 0; i < 1500; ++i) {
    auto id = *next();
    for (auto const& V : vs) {
      asym += decide(V, id).holds != decide(V, Identity{id.rhs, id.lhs}).holds;
      asym += !decide(V, Identity{id.lhs, id.lhs}).holds;
    }
  }
  CHECK(asym == 0);
}

TEST_CASE("K accepts identities whose letters all repeat", "[properties]") {
  std::mt19937_64 rng(31);
  auto            letters = alphabet(4);
  size_t          rejected = 0;
  for (int i = 0; i < 300; ++i) {
    // shuffle two copies of a multiset with every count >= 2
    std::vector<Letter> pool;
    for (auto const& a : letters) {
      size_t c = 2 + uniform_below(rng, 2);
      if (uniform_below(rng, 4) != 0) {
        pool.insert(pool.end(), c, a);
      }
    }
    if (pool.empty()) {
      continue;
    }
    auto u = pool, v = pool;
    std::shuffle(u.begin(), u.end(), rng);
    std::shuffle(v.begin(), v.end(), rng);
    v.insert(v.end(), u.begin(), u.begin() + 1);
    rejected += !decide(VarietyDescriptor::K(), Identity{Word(u), Word(v)}).holds;
  }
  CHECK(rejected == 0);
}

TEST_CASE("adjacent chain members are monotone on a small space",
          "[properties]") {
  auto chain = chain_of(1);
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    auto r = verify_inclusion(chain[i], chain[i + 1],
                              exhaustive_identities(alphabet(2), 5), 1u << 30);
    INFO(to_string(chain[i]) << " < " << to_string(chain[i + 1]));
    CHECK_FALSE(r.counterexample.has_value());
  }
}

#include "monvar/finite_monoid.hpp"

#include <algorithm>      // for sort, next_permutation, max
#include <map>            // for map
#include <mutex>          // for mutex, lock_guard
#include <sstream>        // for ostringstream
#include <unordered_map>  // for unordered_map

namespace monvar {

  FiniteMonoid::FiniteMonoid(std::string              name,
                             std::vector<std::string> labels,
                             std::vector<size_t>      table,
                             size_t                   identity,
                             std::optional<size_t>    zero,
                             std::vector<size_t>      generators)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        table_(std::move(table)),
        identity_(identity),
        zero_(zero),
        generators_(std::move(generators)) {
    size_t const n = labels_.size();
    auto fail = [&](std::string const& what) {
      throw std::invalid_argument("monoid " + name_ + ": " + what);
    };
    if (n == 0 || table_.size() != n * n) {
      fail("table size does not match element count");
    }
    if (identity_ >= n || (zero_ && *zero_ >= n)) {
      fail("identity or zero out of range");
    }
    for (size_t v : table_) {
      if (v >= n) {
        fail("table not closed");
      }
    }
    for (size_t a = 0; a < n; ++a) {
      if (product(identity_, a) != a || product(a, identity_) != a) {
        fail("identity law fails at " + labels_[a]);
      }
      if (zero_ && (product(*zero_, a) != *zero_ || product(a, *zero_) != *zero_)) {
        fail("zero is not absorbing at " + labels_[a]);
      }
    }
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        size_t ab = product(a, b);
        for (size_t c = 0; c < n; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            fail("not associative at (" + labels_[a] + "," + labels_[b] + ","
                 + labels_[c] + ")");
          }
        }
      }
    }
  }

  size_t FiniteMonoid::element(std::string_view label) const {
    for (size_t a = 0; a < labels_.size(); ++a) {
      if (labels_[a] == label) {
        return a;
      }
    }
    throw std::out_of_range("monoid " + name_ + " has no element '"
                            + std::string(label) + "'");
  }

  std::string FiniteMonoid::dump() const {
    size_t width = 1;
    for (auto const& l : labels_) {
      width = std::max(width, l.size());
    }
    auto pad = [&](std::string const& s) {
      return s + std::string(width - s.size() + 1, ' ');
    };
    std::ostringstream out;
    out << "# monoid " << name_ << " (" << size() << " elements)\n";
    out << pad("*") << "|";
    for (auto const& l : labels_) {
      out << ' ' << pad(l);
    }
    out << '\n' << std::string(width + 1, '-') << '+'
        << std::string((width + 2) * size(), '-') << '\n';
    for (size_t a = 0; a < size(); ++a) {
      out << pad(labels_[a]) << "|";
      for (size_t b = 0; b < size(); ++b) {
        out << ' ' << pad(labels_[product(a, b)]);
      }
      out << '\n';
    }
    std::string s = out.str();
    // strip trailing blanks per line
    std::string r;
    size_t      start = 0;
    while (start < s.size()) {
      size_t end  = s.find('\n', start);
      auto   line = s.substr(start, end - start);
      line.erase(line.find_last_not_of(' ') + 1);
      r += line + '\n';
      start = end + 1;
    }
    return r;
  }

  FiniteMonoid rees_quotient(std::vector<Word> const& W) {
    std::vector<Word> factors;
    {
      std::unordered_map<Word, bool, WordHash> seen;
      for (auto const& w : W) {
        for (size_t i = 0; i < w.size(); ++i) {
          for (size_t len = 1; i + len <= w.size(); ++len) {
            Word f = w.factor(i, len);
            if (seen.emplace(f, true).second) {
              factors.push_back(std::move(f));
            }
          }
        }
      }
    }
    std::sort(factors.begin(), factors.end(), shortlex_less);

    size_t const                             n = factors.size() + 2;
    std::unordered_map<Word, size_t, WordHash> index;
    std::vector<std::string>                 labels;
    std::vector<Word>                        words;
    labels.push_back("1");
    words.push_back(Word());
    index.emplace(Word(), 0);
    std::vector<size_t> generators;
    for (auto& f : factors) {
      index.emplace(f, labels.size());
      if (f.size() == 1) {
        generators.push_back(labels.size());
      }
      labels.push_back(format_word(f));
      words.push_back(f);
    }
    size_t const zero = labels.size();
    labels.push_back("0");

    std::vector<size_t> table(n * n, zero);
    for (size_t a = 0; a < zero; ++a) {
      for (size_t b = 0; b < zero; ++b) {
        auto it = index.find(words[a] * words[b]);
        if (it != index.end()) {
          table[a * n + b] = it->second;
        }
      }
    }
    std::string name = "S(";
    for (size_t i = 0; i < W.size(); ++i) {
      name += (i ? "," : "") + format_word(W[i]);
    }
    name += ")";
    return FiniteMonoid(std::move(name),
                        std::move(labels),
                        std::move(table),
                        0,
                        zero,
                        std::move(generators));
  }

  namespace {
    FiniteMonoid make_p1() {
      // 1 e a 0 with e^2 = e, ae = a, ea = 0 (so a^2 = aea = 0)
      std::vector<size_t> t = {
          0, 1, 2, 3,  // 1
          1, 1, 3, 3,  // e
          2, 2, 3, 3,  // a
          3, 3, 3, 3,  // 0
      };
      return FiniteMonoid("P1", {"1", "e", "a", "0"}, t, 0, 3, {1, 2});
    }

    FiniteMonoid make_b21() {
      // 2x2 matrix units: a = E12, b = E21, ab = E11, ba = E22.
      struct M2 {
        int m[2][2];
      };
      std::vector<M2> el = {
          {{{1, 0}, {0, 1}}},
          {{{0, 1}, {0, 0}}},
          {{{0, 0}, {1, 0}}},
          {{{1, 0}, {0, 0}}},
          {{{0, 0}, {0, 1}}},
          {{{0, 0}, {0, 0}}},
      };
      auto mul = [](M2 const& x, M2 const& y) {
        M2 r{};
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
          }
        }
        return r;
      };
      auto find = [&](M2 const& x) {
        for (size_t i = 0; i < el.size(); ++i) {
          bool eq = true;
          for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
              eq = eq && el[i].m[r][c] == x.m[r][c];
            }
          }
          if (eq) {
            return i;
          }
        }
        throw std::logic_error("B21 not closed");
      };
      std::vector<size_t> t;
      for (auto const& x : el) {
        for (auto const& y : el) {
          t.push_back(find(mul(x, y)));
        }
      }
      return FiniteMonoid(
          "B21", {"1", "a", "b", "ab", "ba", "0"}, t, 0, 5, {1, 2});
    }

    FiniteMonoid make_k5() {
      // 1 a b ba b^2 subject to a^2 = ab = a, b^2a = b^2.
      std::vector<size_t> t = {
          0, 1, 2, 3, 4,  // 1
          1, 1, 1, 1, 1,  // a
          2, 3, 4, 4, 4,  // b
          3, 3, 3, 3, 3,  // ba
          4, 4, 4, 4, 4,  // b^2
      };
      return FiniteMonoid(
          "K5", {"1", "a", "b", "ba", "b^2"}, t, 0, std::nullopt, {1, 2});
    }
  }  // namespace

  FiniteMonoid presentation_monoid(std::string_view name) {
    if (name == "P1") {
      return make_p1();
    } else if (name == "B21") {
      return make_b21();
    } else if (name == "K5") {
      return make_k5();
    }
    throw std::invalid_argument("unknown presentation monoid '"
                                + std::string(name) + "'");
  }

  namespace {
    std::vector<Word> parse_word_list(std::string_view s) {
      std::vector<Word> W;
      size_t            start = 0;
      while (start <= s.size()) {
        size_t end = s.find(',', start);
        if (end == std::string_view::npos) {
          end = s.size();
        }
        W.push_back(parse_word(s.substr(start, end - start)));
        start = end + 1;
      }
      return W;
    }
  }  // namespace

  FiniteMonoid parse_monoid_spec(std::string_view spec) {
    if (spec.starts_with("S:")) {
      return rees_quotient(parse_word_list(spec.substr(2)));
    }
    return presentation_monoid(spec);
  }

  size_t Substitution::at(Letter x) const {
    for (auto const& [y, a] : values) {
      if (x == y) {
        return a;
      }
    }
    throw std::out_of_range("substitution does not assign "
                            + monvar::to_string(x));
  }

  std::string Substitution::to_string(FiniteMonoid const& M) const {
    std::string s;
    for (auto const& [x, a] : values) {
      if (!s.empty()) {
        s += ",";
      }
      s += monvar::to_string(x) + "->" + M.label(a);
    }
    return s;
  }

  size_t evaluate(FiniteMonoid const& M, Word const& w, Substitution const& s) {
    size_t v = M.identity();
    for (auto const& x : w) {
      v = M.product(v, s.at(x));
    }
    return v;
  }

  namespace {
    struct Compiled {
      std::vector<Letter> letters;
      std::vector<size_t> lhs, rhs;
    };

    Compiled compile(Identity const& id) {
      Compiled c;
      auto     con = content(id.lhs);
      auto     cr  = content(id.rhs);
      con.insert(cr.begin(), cr.end());
      c.letters.assign(con.begin(), con.end());
      auto idx = [&](Letter x) {
        return static_cast<size_t>(
            std::lower_bound(c.letters.begin(), c.letters.end(), x)
            - c.letters.begin());
      };
      for (auto const& x : id.lhs) {
        c.lhs.push_back(idx(x));
      }
      for (auto const& x : id.rhs) {
        c.rhs.push_back(idx(x));
      }
      return c;
    }

    inline size_t eval(FiniteMonoid const&        M,
                       std::vector<size_t> const& word,
                       std::vector<size_t> const& assignment) {
      size_t v    = M.identity();
      auto   zero = M.zero();
      for (size_t i : word) {
        v = M.product(v, assignment[i]);
        if (zero && v == *zero) {
          break;
        }
      }
      return v;
    }
  }  // namespace

  std::optional<Substitution> find_refutation(FiniteMonoid const& M,
                                              Identity const&     id) {
    if (id.trivial()) {
      return std::nullopt;
    }
    Compiled const      c = compile(id);
    size_t const        n = c.letters.size();
    std::vector<size_t> a(n, 0);
    while (true) {
      if (eval(M, c.lhs, a) != eval(M, c.rhs, a)) {
        Substitution s;
        for (size_t i = 0; i < n; ++i) {
          s.values.emplace_back(c.letters[i], a[i]);
        }
        return s;
      }
      size_t i = n;
      while (i > 0) {
        --i;
        if (++a[i] < M.size()) {
          break;
        }
        a[i] = 0;
        if (i == 0) {
          return std::nullopt;
        }
      }
      if (n == 0) {
        return std::nullopt;
      }
    }
  }

  bool satisfies(FiniteMonoid const& M, Identity const& id) {
    return !find_refutation(M, id).has_value();
  }

  LetterCapExceeded::LetterCapExceeded(size_t letters, size_t cap)
      : std::runtime_error("identity has " + std::to_string(letters)
                           + " letters, above the oracle cap of "
                           + std::to_string(cap)) {}

  std::shared_ptr<FiniteMonoid const> shared_rees_quotient(
      std::vector<Word> const& W) {
    static std::mutex                                                mtx;
    static std::map<std::vector<Word>, std::shared_ptr<FiniteMonoid const>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto                        it = cache.find(W);
    if (it == cache.end()) {
      it = cache.emplace(W, std::make_shared<FiniteMonoid const>(rees_quotient(W)))
               .first;
    }
    return it->second;
  }

  std::optional<Substitution> oracle_refutation(std::vector<Word> const& W,
                                                Identity const&          id,
                                                size_t                   cap) {
    auto con = content(id.lhs);
    auto cr  = content(id.rhs);
    con.insert(cr.begin(), cr.end());
    if (con.size() > cap) {
      throw LetterCapExceeded(con.size(), cap);
    }
    return find_refutation(*shared_rees_quotient(W), id);
  }

  bool oracle_decide(std::vector<Word> const& W,
                     Identity const&          id,
                     size_t                   cap) {
    return !oracle_refutation(W, id, cap).has_value();
  }

  Word c_generator(size_t n) {
    if (n == 0) {
      throw std::invalid_argument("C generator requires n >= 1");
    }
    return power(Word({Letter('x')}), n);
  }

  Word d_generator(size_t k) {
    if (k == 0) {
      throw std::invalid_argument("D generator requires k >= 1");
    }
    if (k == 1) {
      return Word({Letter('x'), Letter('y')});
    }
    std::vector<Letter> r = {Letter('x')};
    for (size_t j = 1; j < k; ++j) {
      r.push_back(Letter('y', static_cast<int>(j)));
      r.push_back(Letter('x'));
    }
    return Word(std::move(r));
  }

  Word l_generator() {
    return parse_word("xzxyty");
  }

  Word m_generator() {
    return parse_word("xyzxty");
  }

  IsotermResult isoterm_search(Word const&            w,
                               IdentityDecider const& decide,
                               size_t                 bound) {
    IsotermResult result;
    auto          con = content(w);
    size_t        max_occ = 0;
    for (auto const& x : con) {
      max_occ = std::max(max_occ, occ(w, x));
    }
    if (bound == 0) {
      bound = max_occ + 2;
    }
    if (bound < max_occ) {
      throw std::invalid_argument("isoterm bound below an occurrence count of "
                                  + format_word(w));
    }
    result.bound = bound;
    if (con.empty()) {
      return result;
    }
    std::vector<Letter> letters(con.begin(), con.end());
    std::vector<Word>   candidates;
    std::vector<size_t> counts(letters.size(), 1);
    while (true) {
      std::vector<Letter> multiset;
      for (size_t i = 0; i < letters.size(); ++i) {
        multiset.insert(multiset.end(), counts[i], letters[i]);
      }
      do {
        Word c(multiset);
        if (c != w) {
          candidates.push_back(std::move(c));
        }
      } while (std::next_permutation(multiset.begin(), multiset.end()));
      size_t i = letters.size();
      while (i > 0 && counts[i - 1] == bound) {
        counts[--i] = 1;
      }
      if (i == 0) {
        break;
      }
      ++counts[i - 1];
    }
    std::sort(candidates.begin(), candidates.end(), shortlex_less);
    for (auto const& c : candidates) {
      ++result.candidates;
      if (decide(Identity{w, c})) {
        result.witness = c;
        break;
      }
    }
    return result;
  }

  std::string to_string(SemiVerdict v) {
    switch (v) {
      case SemiVerdict::holds:
        return "holds";
      case SemiVerdict::fails:
        return "fails";
      case SemiVerdict::unknown:
        break;
    }
    return "unknown";
  }

  SemiDecision semi_decide_d(Identity const& id, size_t k, size_t cap) {
    if (k == 0) {
      throw std::invalid_argument("semi_decide_d requires k >= 1");
    }
    auto con = content(id.lhs);
    auto cr  = content(id.rhs);
    con.insert(cr.begin(), cr.end());
    if (con.size() > cap) {
      throw LetterCapExceeded(con.size(), cap);
    }
    static FiniteMonoid const b21 = presentation_monoid("B21");
    auto                      ref = find_refutation(b21, id);
    if (!ref) {
      return {SemiVerdict::holds, "satisfied by B21"};
    }
    for (size_t j = 1; j <= k; ++j) {
      std::vector<Word> W = {d_generator(j)};
      if (auto s = oracle_refutation(W, id, cap)) {
        auto M = shared_rees_quotient(W);
        return {SemiVerdict::fails,
                "refuted by " + M->name() + " at " + s->to_string(*M)};
      }
    }
    return {SemiVerdict::unknown,
            "refuted by B21 at " + ref->to_string(b21)
                + " but not by S(D_j generators) for j <= "
                + std::to_string(k)};
  }

}  // namespace monvar

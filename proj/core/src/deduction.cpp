#include "monvar/deduction.hpp"

#include <algorithm>      // for sort
#include <deque>          // for deque
#include <sstream>        // for istringstream, ostringstream
#include <unordered_map>  // for unordered_map

#include "monvar/catalog.hpp"

namespace monvar {

  Word LetterMap::image(Letter x) const {
    auto it = images_.find(x);
    return it == images_.end() ? Word({x}) : it->second;
  }

  Word LetterMap::operator()(Word const& w) const {
    std::vector<Letter> r;
    for (auto const& x : w) {
      auto it = images_.find(x);
      if (it == images_.end()) {
        r.push_back(x);
      } else {
        r.insert(r.end(), it->second.begin(), it->second.end());
      }
    }
    return Word(std::move(r));
  }

  std::string LetterMap::to_string() const {
    std::string s;
    for (auto const& [x, w] : images_) {
      if (!s.empty()) {
        s += ",";
      }
      s += monvar::to_string(x) + "->" + format_word(w);
    }
    return s;
  }

  LetterMap parse_letter_map(std::string_view text) {
    LetterMap xi;
    size_t    start = 0;
    while (start < text.size()) {
      size_t end = text.find(',', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto entry = text.substr(start, end - start);
      auto arrow = entry.find("->");
      if (arrow == std::string_view::npos) {
        throw ParseError("expected <letter>-><word> in substitution", start);
      }
      xi.set(parse_letter(entry.substr(0, arrow)),
             parse_word(entry.substr(arrow + 2)));
      start = end + 1;
    }
    return xi;
  }

  RewriteStep RewriteStep::reversed() const {
    RewriteStep r = *this;
    std::swap(r.identity.lhs, r.identity.rhs);
    return r;
  }

  Word apply_step(Word const& w, RewriteStep const& step) {
    Word expected = step.a * step.xi(step.identity.lhs) * step.b;
    if (expected != w) {
      throw PatternMismatch("word " + format_word(w) + " is not a.xi(s).b = "
                            + format_word(expected));
    }
    return step.a * step.xi(step.identity.rhs) * step.b;
  }

  DeductionCheck check_deduction(Deduction const& d) {
    DeductionCheck result;
    if (d.words.empty() || d.steps.size() + 1 != d.words.size()) {
      result.ok = false;
      result.steps.push_back(
          {0, false, "a deduction needs exactly one more word than steps"});
      return result;
    }
    for (size_t i = 0; i < d.steps.size(); ++i) {
      StepDiagnostic diag{i, true, ""};
      try {
        Word next = apply_step(d.words[i], d.steps[i]);
        if (next != d.words[i + 1]) {
          diag.ok      = false;
          diag.message = "step yields " + format_word(next) + ", expected "
                         + format_word(d.words[i + 1]);
        }
      } catch (PatternMismatch const& e) {
        diag.ok      = false;
        diag.message = e.what();
      }
      result.ok = result.ok && diag.ok;
      result.steps.push_back(std::move(diag));
    }
    return result;
  }

  namespace {
    // All ways of writing a factor of w starting at position start as ξ(s),
    // reported through emit(end, ξ).
    template <typename F>
    void match(Word const&            s,
               size_t                 p,
               Word const&            w,
               size_t                 q,
               std::map<Letter, Word>& xi,
               F&&                     emit) {
      if (p == s.size()) {
        emit(q, xi);
        return;
      }
      Letter x  = s[p];
      auto   it = xi.find(x);
      if (it != xi.end()) {
        Word const& img = it->second;
        if (q + img.size() <= w.size()
            && std::equal(img.begin(), img.end(), w.begin() + q)) {
          match(s, p + 1, w, q + img.size(), xi, emit);
        }
        return;
      }
      for (size_t len = 0; q + len <= w.size(); ++len) {
        xi[x] = w.factor(q, len);
        match(s, p + 1, w, q + len, xi, emit);
      }
      xi.erase(x);
    }

    std::string code_for(Identity const& id) {
      std::string s = format_word(id.lhs) + "=" + format_word(id.rhs);
      return s;
    }

    struct Edge {
      Word        parent;
      RewriteStep step;
    };
  }  // namespace

  std::optional<Deduction> bounded_derive(std::vector<Identity> const& system,
                                          Identity const&              goal,
                                          size_t                       max_len,
                                          size_t max_steps) {
    if (max_len == 0 || max_steps == 0) {
      throw std::invalid_argument("bounded_derive requires positive bounds");
    }
    if (goal.lhs.size() > max_len || goal.rhs.size() > max_len) {
      return std::nullopt;
    }
    auto build = [&](std::unordered_map<Word, Edge, WordHash> const& parent,
                     Word const&                                     end) {
      Deduction d;
      Word      cur = end;
      while (cur != goal.lhs) {
        auto const& e = parent.at(cur);
        d.words.push_back(cur);
        d.steps.push_back(e.step);
        cur = e.parent;
      }
      d.words.push_back(goal.lhs);
      std::reverse(d.words.begin(), d.words.end());
      std::reverse(d.steps.begin(), d.steps.end());
      return d;
    };
    if (goal.trivial()) {
      return Deduction{{goal.lhs}, {}};
    }

    std::vector<RewriteStep> rules;
    for (auto const& id : system) {
      RewriteStep r{id, code_for(id), {}, {}, {}};
      rules.push_back(r);
      rules.push_back(r.reversed());
    }

    std::unordered_map<Word, Edge, WordHash> parent;
    parent.emplace(goal.lhs, Edge{goal.lhs, {}});
    std::vector<Word> frontier = {goal.lhs};
    for (size_t depth = 0; depth < max_steps && !frontier.empty(); ++depth) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        std::vector<std::pair<Word, RewriteStep>> succ;
        for (auto const& rule : rules) {
          Word const& s = rule.identity.lhs;
          Word const& t = rule.identity.rhs;
          for (size_t start = 0; start <= w.size(); ++start) {
            std::map<Letter, Word> xi;
            match(s, 0, w, start, xi, [&](size_t end,
                                          std::map<Letter, Word> const& m) {
              LetterMap lm(m);
              for (auto const& x : t) {
                if (!m.contains(x)) {
                  lm.set(x, Word());
                }
              }
              Word a = w.factor(0, start);
              Word b = w.factor(end, w.size() - end);
              Word r = a * lm(t) * b;
              if (r == w || r.size() > max_len) {
                return;
              }
              RewriteStep step = rule;
              step.xi          = std::move(lm);
              step.a           = std::move(a);
              step.b           = std::move(b);
              succ.emplace_back(std::move(r), std::move(step));
            });
          }
        }
        std::stable_sort(succ.begin(), succ.end(), [](auto const& x, auto const& y) {
          return shortlex_less(x.first, y.first);
        });
        for (auto& [r, step] : succ) {
          if (parent.contains(r)) {
            continue;
          }
          parent.emplace(r, Edge{w, std::move(step)});
          if (r == goal.rhs) {
            return build(parent, r);
          }
          next.push_back(r);
        }
      }
      frontier = std::move(next);
    }
    return std::nullopt;
  }

  namespace {
    std::string trim(std::string_view s) {
      size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string_view::npos) {
        return "";
      }
      size_t b = s.find_last_not_of(" \t\r");
      return std::string(s.substr(a, b - a + 1));
    }

    Identity resolve_identity(std::string const& code) {
      if (code.find('=') != std::string::npos) {
        return parse_identity(code);
      }
      return named_identity(code);
    }
  }  // namespace

  DeductionFile parse_deduction(std::string_view text) {
    DeductionFile f;
    bool          expect_word = true;
    size_t        lineno      = 0;
    std::istringstream in{std::string(text)};
    std::string        raw;
    auto fail = [&](std::string const& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg, lineno);
    };
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = trim(raw);
      if (line.empty() || line.starts_with("##")) {
        continue;
      }
      if (line[0] != '#') {
        if (!expect_word) {
          fail("expected a step annotation");
        }
        f.deduction.words.push_back(parse_word(line));
        expect_word = false;
        continue;
      }
      if (expect_word) {
        fail("expected a word");
      }
      RewriteStep step;
      std::string dir;
      bool        have_id = false;
      std::istringstream fields(line.substr(1));
      std::string        field;
      while (fields >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) {
          fail("malformed field '" + field + "'");
        }
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "id") {
          step.code     = value;
          step.identity = resolve_identity(value);
          have_id       = true;
        } else if (key == "xi") {
          step.xi = parse_letter_map(value);
        } else if (key == "a") {
          step.a = parse_word(value);
        } else if (key == "b") {
          step.b = parse_word(value);
        } else if (key == "dir") {
          if (value != "lr" && value != "rl") {
            fail("dir must be lr or rl");
          }
          dir = value;
        } else {
          fail("unknown field '" + key + "'");
        }
      }
      if (!have_id) {
        fail("step annotation without id");
      }
      if (dir == "rl") {
        step = step.reversed();
      }
      f.deduction.steps.push_back(std::move(step));
      f.direction.push_back(dir);
      expect_word = true;
    }
    if (f.deduction.words.empty() || expect_word) {
      fail("a deduction must start and end with a word");
    }
    return f;
  }

  std::string format_deduction(Deduction const& d) {
    std::ostringstream out;
    for (size_t i = 0; i < d.words.size(); ++i) {
      out << format_word(d.words[i]) << '\n';
      if (i < d.steps.size()) {
        auto const& s    = d.steps[i];
        std::string code = s.code.empty() ? code_for(s.identity) : s.code;
        out << "# id=" << code;
        if (!s.xi.images().empty()) {
          out << " xi=" << s.xi.to_string();
        }
        out << " a=" << format_word(s.a) << " b=" << format_word(s.b);
        // a code names the identity as printed, so say which way it was used
        bool forward = s.code.empty()
                       || resolve_identity(s.code) == s.identity;
        out << " dir=" << (forward ? "lr" : "rl") << '\n';
      }
    }
    return out.str();
  }

  DeductionCheck check_deduction_file(DeductionFile const& f) {
    DeductionCheck fixed = check_deduction(f.deduction);
    if (fixed.ok || f.deduction.steps.size() + 1 != f.deduction.words.size()) {
      return fixed;
    }
    DeductionCheck result;
    for (size_t i = 0; i < f.deduction.steps.size(); ++i) {
      StepDiagnostic diag = fixed.steps[i];
      if (!diag.ok && f.direction[i].empty()) {
        Deduction one{{f.deduction.words[i], f.deduction.words[i + 1]},
                      {f.deduction.steps[i].reversed()}};
        auto      again = check_deduction(one);
        if (again.ok) {
          diag = StepDiagnostic{i, true, "applied right to left"};
        }
      }
      result.ok = result.ok && diag.ok;
      result.steps.push_back(std::move(diag));
    }
    return result;
  }

}  // namespace monvar

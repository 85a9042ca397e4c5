#include "monvar/deciders.hpp"

#include <algorithm>  // for max, min

namespace monvar {

  std::string Reason::to_string() const {
    std::string s = claim;
    if (level) {
      s += " level=" + std::to_string(*level);
    }
    if (letter) {
      s += " letter=" + monvar::to_string(*letter);
    }
    if (!detail.empty()) {
      s += ": " + detail;
    }
    return s;
  }

  std::string Verdict::to_string() const {
    std::string s = holds ? "holds" : "fails";
    for (auto const& r : reasons) {
      s += "\n  " + r.to_string();
    }
    return s;
  }

  namespace {
    Reason fail_at(std::string claim,
                   Letter      x,
                   std::optional<size_t> level,
                   std::string detail) {
      return Reason{std::move(claim), x, level, std::move(detail)};
    }

    std::string versus(Divider const& a, Divider const& b) {
      return to_string(a) + " vs " + to_string(b);
    }

    std::string occurrence_kind(size_t n) {
      return n == 0 ? "absent" : (n == 1 ? "simple" : "multiple");
    }

    // First letter, in order of first occurrence in u then in v, that lies
    // in exactly one of the two contents.
    std::optional<Letter> content_mismatch(WordProfile const& u,
                                           WordProfile const& v) {
      for (auto const& x : u.letters()) {
        if (!v.contains(x)) {
          return x;
        }
      }
      for (auto const& x : v.letters()) {
        if (!u.contains(x)) {
          return x;
        }
      }
      return std::nullopt;
    }

    std::optional<Reason> check_content(WordProfile const& u,
                                        WordProfile const& v) {
      if (auto x = content_mismatch(u, v)) {
        return fail_at("content",
                       *x,
                       std::nullopt,
                       "occurs in " + std::string(u.contains(*x) ? "lhs" : "rhs")
                           + " only");
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<Reason> check_sim_mul(WordProfile const& u,
                                      WordProfile const& v) {
    auto check = [&](WordProfile const& p) -> std::optional<Reason> {
      for (auto const& x : p.letters()) {
        size_t a = u.occ(x), b = v.occ(x);
        if ((a == 1) != (b == 1) || (a >= 2) != (b >= 2)) {
          return fail_at("(1)",
                         x,
                         std::nullopt,
                         occurrence_kind(a) + " vs " + occurrence_kind(b));
        }
      }
      return std::nullopt;
    };
    if (auto r = check(u)) {
      return r;
    }
    return check(v);
  }

  std::optional<Reason> check_simple_skeleton(WordProfile const& u,
                                              WordProfile const& v) {
    LetterSet mul;
    for (auto const& x : u.letters()) {
      if (u.occ(x) > 1) {
        mul.insert(x);
      }
    }
    Word a = delete_letters(u.word(), mul);
    Word b = delete_letters(v.word(), mul);
    if (a != b) {
      size_t i = 0;
      while (i < a.size() && i < b.size() && a[i] == b[i]) {
        ++i;
      }
      Letter x = i < a.size() ? a[i] : b[i];
      return fail_at("(2)",
                     x,
                     std::nullopt,
                     format_word(a) + " vs " + format_word(b));
    }
    return std::nullopt;
  }

  std::optional<Reason> check_h1_zero(WordProfile const& u,
                                      WordProfile const& v) {
    for (auto const& x : u.letters()) {
      if (u.h1(x, 0) != v.h1(x, 0)) {
        return fail_at("(5)", x, 0, "h1: " + versus(u.h1(x, 0), v.h1(x, 0)));
      }
    }
    return std::nullopt;
  }

  std::optional<Reason> check_restrictor_level(WordProfile const& u,
                                               WordProfile const& v,
                                               size_t             l) {
    if (l == 0) {
      throw std::invalid_argument("restrictor level claim requires l >= 1");
    }
    if (auto r = check_content(u, v)) {
      r->claim = "(6)";
      r->level = l;
      return r;
    }
    size_t const k = l - 1;
    for (auto const& x : u.letters()) {
      if (u.h1(x, k) != v.h1(x, k)) {
        return fail_at("(6)", x, l, "h1^" + std::to_string(k) + ": "
                                        + versus(u.h1(x, k), v.h1(x, k)));
      }
      size_t a = u.occ(x), b = v.occ(x);
      if (a >= 2 || b >= 2) {
        if (a < 2 || b < 2) {
          return fail_at("(6)", x, l, "no second occurrence on one side");
        }
        if (u.h2(x, k) != v.h2(x, k)) {
          return fail_at("(6)", x, l, "h2^" + std::to_string(k) + ": "
                                          + versus(u.h2(x, k), v.h2(x, k)));
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Reason> check_h1_small_depth(WordProfile const& u,
                                             WordProfile const& v,
                                             size_t             l) {
    for (auto const& x : u.letters()) {
      if (u.depth(x).at_most(l) || v.depth(x).at_most(l)) {
        if (u.h1(x, l) != v.h1(x, l)) {
          return fail_at("(14)", x, l, "h1^" + std::to_string(l) + ": "
                                           + versus(u.h1(x, l), v.h1(x, l)));
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Reason> check_h1_all(WordProfile const& u,
                                     WordProfile const& v,
                                     size_t             l) {
    for (auto const& x : u.letters()) {
      if (u.h1(x, l) != v.h1(x, l)) {
        return fail_at("(15)", x, l, "h1^" + std::to_string(l) + ": "
                                         + versus(u.h1(x, l), v.h1(x, l)));
      }
    }
    return std::nullopt;
  }

  std::optional<Reason> check_h2_small_depth(WordProfile const& u,
                                             WordProfile const& v,
                                             size_t             l,
                                             size_t             m,
                                             bool               symmetric) {
    for (auto const& x : u.letters()) {
      if (u.occ(x) < 2 || v.occ(x) < 2) {
        continue;
      }
      bool applies = u.depth(x).at_most(m)
                     || (symmetric && v.depth(x).at_most(m));
      if (applies && u.h2(x, l) != v.h2(x, l)) {
        return fail_at("(16)", x, l, "h2^" + std::to_string(l) + ": "
                                         + versus(u.h2(x, l), v.h2(x, l)));
      }
    }
    return std::nullopt;
  }

  bool claim_sim_mul(Word const& u, Word const& v) {
    return !check_sim_mul(WordProfile(u), WordProfile(v));
  }

  bool claim_simple_skeleton(Word const& u, Word const& v) {
    return !check_simple_skeleton(WordProfile(u), WordProfile(v));
  }

  bool claim_restrictor_level(Word const& u, Word const& v, size_t l) {
    return !check_restrictor_level(WordProfile(u), WordProfile(v), l);
  }

  bool has_decider(VarietyDescriptor const& V) {
    return V.tag != VarietyTag::D && V.tag != VarietyTag::N
           && V.tag != VarietyTag::O;
  }

  namespace {
    Verdict oracle_verdict(Word const&          generator,
                           WordProfile const&   u,
                           WordProfile const&   v,
                           DecideOptions const& opts) {
      std::vector<Word> W = {generator};
      Identity          id{u.word(), v.word()};
      auto              s = oracle_refutation(W, id, opts.letter_cap);
      auto              M = shared_rees_quotient(W);
      if (s) {
        return Verdict{false,
                       {Reason{"oracle",
                               std::nullopt,
                               std::nullopt,
                               M->name() + " refutes at " + s->to_string(*M)}}};
      }
      return Verdict{true, {Reason{"oracle", std::nullopt, std::nullopt,
                                   "satisfied by " + M->name()}}};
    }

    Reason accepted(std::string claim, std::optional<size_t> level = {}) {
      return Reason{std::move(claim), std::nullopt, level, ""};
    }

    // Runs the claim checks in order; the first failure decides.
    class ClaimRun {
     public:
      template <typename F>
      ClaimRun& then(std::string const& claim, std::optional<size_t> level,
                     F&& check) {
        if (verdict_.holds) {
          if (auto r = check()) {
            verdict_.holds = false;
            verdict_.reasons.assign(1, std::move(*r));
          } else {
            verdict_.reasons.push_back(accepted(claim, level));
          }
        }
        return *this;
      }
      Verdict result() && {
        return std::move(verdict_);
      }

     private:
      Verdict verdict_;
    };

    Verdict decide_direct(VarietyDescriptor const& V,
                          WordProfile const&       u,
                          WordProfile const&       v,
                          DecideOptions const&     opts) {
      if (V.tag == VarietyTag::T) {
        return Verdict{true, {accepted("T")}};
      }
      if (!has_decider(V)) {
        throw UnsupportedVariety("no exact decider for " + to_string(V));
      }
      if (u.word() == v.word()) {
        return Verdict{true, {accepted("trivial")}};
      }
      if (auto r = check_content(u, v)) {
        return Verdict{false, {*r}};
      }
      if (V.tag == VarietyTag::SL) {
        return Verdict{true, {accepted("content")}};
      }

      size_t const k = V.k;
      ClaimRun     run;
      auto sim_mul = [&] { return check_sim_mul(u, v); };
      auto level6  = [&](size_t l) {
        return [&, l] { return check_restrictor_level(u, v, l); };
      };

      switch (V.tag) {
        case VarietyTag::C: {
          if (V.n == 2) {
            run.then("(1)", {}, sim_mul);
            break;
          }
          run.then("occ", {}, [&]() -> std::optional<Reason> {
            for (auto const& x : u.letters()) {
              size_t a = u.occ(x), b = v.occ(x);
              if (a != b && (a < V.n || b < V.n)) {
                return fail_at("occ", x, std::nullopt,
                               std::to_string(a) + " vs " + std::to_string(b));
              }
            }
            return std::nullopt;
          });
          break;
        }
        case VarietyTag::Dk:
          if (V.k >= 2) {
            return oracle_verdict(d_generator(V.k), u, v, opts);
          }
          run.then("(1)", {}, sim_mul).then("(2)", {}, [&] {
            return check_simple_skeleton(u, v);
          });
          break;
        case VarietyTag::E:
          run.then("(1)", {}, sim_mul).then("(5)", 0, [&] {
            return check_h1_zero(u, v);
          });
          break;
        case VarietyTag::F:
          run.then("(1)", {}, sim_mul).then("(6)", k, level6(k));
          break;
        case VarietyTag::K: {
          run.then("(1)", {}, sim_mul);
          size_t top = std::max(u.stabilization_level(), v.stabilization_level())
                       + 1;
          for (size_t l = 1; l <= top; ++l) {
            run.then("(6)", l, level6(l));
          }
          break;
        }
        case VarietyTag::H:
          run.then("(1)", {}, sim_mul)
              .then("(6)", k, level6(k))
              .then("(14)", k, [&] { return check_h1_small_depth(u, v, k); });
          break;
        case VarietyTag::I:
          run.then("(1)", {}, sim_mul)
              .then("(6)", k, level6(k))
              .then("(15)", k, [&] { return check_h1_all(u, v, k); });
          break;
        case VarietyTag::J:
          run.then("(1)", {}, sim_mul)
              .then("(6)", k, level6(k))
              .then("(15)", k, [&] { return check_h1_all(u, v, k); })
              .then("(16)", k, [&] {
                return check_h2_small_depth(
                    u, v, k, V.m, opts.strict_symmetric_j);
              });
          break;
        case VarietyTag::LRB:
          run.then("ini", {}, [&]() -> std::optional<Reason> {
            Word a = initial_part(u.word()), b = initial_part(v.word());
            if (a == b) {
              return std::nullopt;
            }
            size_t i = 0;
            while (a[i] == b[i]) {
              ++i;
            }
            return fail_at("ini", a[i], std::nullopt,
                           format_word(a) + " vs " + format_word(b));
          });
          break;
        case VarietyTag::L:
          return oracle_verdict(l_generator(), u, v, opts);
        case VarietyTag::M:
          return oracle_verdict(m_generator(), u, v, opts);
        default:
          throw UnsupportedVariety("no exact decider for " + to_string(V));
      }
      return std::move(run).result();
    }
  }  // namespace

  Verdict decide(VarietyDescriptor const& V,
                 WordProfile const&       u,
                 WordProfile const&       v,
                 DecideOptions const&     opts) {
    VarietyDescriptor base = V;
    bool              flip = V.dual;
    if (base.tag == VarietyTag::RRB) {
      base.tag = VarietyTag::LRB;
      flip     = !flip;
    }
    base.dual = false;
    if (!flip) {
      return decide_direct(base, u, v, opts);
    }
    if (!has_decider(base)) {
      throw UnsupportedVariety("no exact decider for " + to_string(V));
    }
    return decide_direct(
        base, WordProfile(reverse(u.word())), WordProfile(reverse(v.word())), opts);
  }

  Verdict decide(VarietyDescriptor const& V,
                 Identity const&          id,
                 DecideOptions const&     opts) {
    return decide(V, WordProfile(id.lhs), WordProfile(id.rhs), opts);
  }

  bool group_forcing(Identity const& id) {
    return content(id.lhs) != content(id.rhs);
  }

  InclusionReport verify_inclusion(VarietyDescriptor const& Vsmall,
                                   VarietyDescriptor const& Vlarge,
                                   IdentitySampler const&   sampler,
                                   size_t                   N,
                                   DecideOptions const&     opts) {
    InclusionReport report;
    while (report.checked < N) {
      auto id = sampler();
      if (!id) {
        break;
      }
      ++report.checked;
      WordProfile u(id->lhs), v(id->rhs);
      if (decide(Vlarge, u, v, opts).holds) {
        ++report.accepted_larger;
        if (!decide(Vsmall, u, v, opts).holds) {
          report.counterexample = *id;
          break;
        }
      }
    }
    return report;
  }

  Identity separating_witness(VarietyDescriptor const& Vsmall,
                              VarietyDescriptor const& Vlarge) {
    auto bad = [&]() {
      return std::invalid_argument(to_string(Vsmall) + " and "
                                   + to_string(Vlarge)
                                   + " are not adjacent in the chain");
    };
    if (Vsmall.dual || Vlarge.dual) {
      throw bad();
    }
    using VT = VarietyTag;
    auto is  = [](VarietyDescriptor const& V, VT t) {
      return V.tag == t;
    };
    if (is(Vsmall, VT::T) && is(Vlarge, VT::SL)) {
      return parse_identity("x = 1");
    }
    if (is(Vsmall, VT::SL) && Vlarge == VarietyDescriptor::C(2)) {
      return parse_identity("x = x^2");
    }
    if (Vsmall == VarietyDescriptor::C(2) && Vlarge == VarietyDescriptor::D(1)) {
      return parse_identity("xy = yx");
    }
    if (Vsmall == VarietyDescriptor::D(1) && is(Vlarge, VT::E)) {
      return parse_identity("x^2y = yx^2");
    }
    if (is(Vsmall, VT::E) && Vlarge == VarietyDescriptor::F(1)) {
      return parse_identity("xyx = x^2y");
    }
    size_t const k = Vsmall.k;
    if (is(Vsmall, VT::F) && Vlarge == VarietyDescriptor::H(k)) {
      return alpha(k);
    }
    if (is(Vsmall, VT::H) && Vlarge == VarietyDescriptor::I(k)) {
      return beta(k);
    }
    if (is(Vsmall, VT::I) && Vlarge == VarietyDescriptor::J(k, 1)) {
      return gamma(k);
    }
    if (is(Vsmall, VT::J)) {
      if (Vsmall.m < k && Vlarge == VarietyDescriptor::J(k, Vsmall.m + 1)) {
        return delta(k, Vsmall.m);
      }
      if (Vsmall.m == k && Vlarge == VarietyDescriptor::F(k + 1)) {
        return delta(k, k);
      }
    }
    throw bad();
  }

}  // namespace monvar

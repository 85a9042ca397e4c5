#include "monvar/catalog.hpp"

#include <algorithm>  // for sort
#include <cctype>     // for isdigit
#include <stdexcept>  // for invalid_argument

namespace monvar {

  namespace {
    void require(bool cond, std::string const& msg) {
      if (!cond) {
        throw std::invalid_argument(msg);
      }
    }

    Letter z_(size_t i) {
      return Letter('z', static_cast<int>(i));
    }
    Letter t_(size_t i) {
      return Letter('t', static_cast<int>(i));
    }

    Word cat(std::initializer_list<Word> ws) {
      std::vector<Letter> r;
      for (auto const& w : ws) {
        r.insert(r.end(), w.begin(), w.end());
      }
      return Word(std::move(r));
    }

    Word letters(std::initializer_list<Letter> xs) {
      return Word(xs);
    }

    Identity id(char const* lhs, char const* rhs) {
      return Identity{parse_word(lhs), parse_word(rhs)};
    }

    bool parse_size(std::string_view s, size_t& out) {
      if (s.empty() || s.size() > 9) {
        return false;
      }
      size_t v = 0;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
        v = v * 10 + static_cast<size_t>(c - '0');
      }
      out = v;
      return true;
    }
  }  // namespace

  VarietyDescriptor VarietyDescriptor::C(size_t n) {
    require(n >= 2, "C_n requires n >= 2");
    VarietyDescriptor v{VarietyTag::C};
    v.n = n;
    return v;
  }

  VarietyDescriptor VarietyDescriptor::D(size_t k) {
    require(k >= 1, "D_k requires k >= 1");
    VarietyDescriptor v{VarietyTag::Dk};
    v.k = k;
    return v;
  }

  VarietyDescriptor VarietyDescriptor::F(size_t k) {
    require(k >= 1, "F_k requires k >= 1");
    VarietyDescriptor v{VarietyTag::F};
    v.k = k;
    return v;
  }

  VarietyDescriptor VarietyDescriptor::H(size_t k) {
    require(k >= 1, "H_k requires k >= 1");
    VarietyDescriptor v{VarietyTag::H};
    v.k = k;
    return v;
  }

  VarietyDescriptor VarietyDescriptor::I(size_t k) {
    require(k >= 1, "I_k requires k >= 1");
    VarietyDescriptor v{VarietyTag::I};
    v.k = k;
    return v;
  }

  VarietyDescriptor VarietyDescriptor::J(size_t k, size_t m) {
    require(k >= 1 && m >= 1 && m <= k, "J_k^m requires 1 <= m <= k");
    VarietyDescriptor v{VarietyTag::J};
    v.k = k;
    v.m = m;
    return v;
  }

  VarietyDescriptor parse_variety(std::string_view name) {
    std::string_view s    = name;
    bool             dual = false;
    if (!s.empty() && s.back() == '~') {
      dual = true;
      s.remove_suffix(1);
    }
    VarietyDescriptor v;
    size_t            a = 0, b = 0;
    auto              bad = [&]() {
      return std::invalid_argument("unknown variety name '"
                                   + std::string(name) + "'");
    };
    if (s == "T") {
      v = VarietyDescriptor::trivial();
    } else if (s == "SL") {
      v = VarietyDescriptor::semilattices();
    } else if (s == "D") {
      v = VarietyDescriptor::of(VarietyTag::D);
    } else if (s == "E") {
      v = VarietyDescriptor::E();
    } else if (s == "K") {
      v = VarietyDescriptor::K();
    } else if (s == "LRB") {
      v = VarietyDescriptor::of(VarietyTag::LRB);
    } else if (s == "RRB") {
      v = VarietyDescriptor::of(VarietyTag::RRB);
    } else if (s == "L") {
      v = VarietyDescriptor::of(VarietyTag::L);
    } else if (s == "M") {
      v = VarietyDescriptor::of(VarietyTag::M);
    } else if (s == "N") {
      v = VarietyDescriptor::of(VarietyTag::N);
    } else if (s == "O") {
      v = VarietyDescriptor::of(VarietyTag::O);
    } else if (s.size() >= 2 && s[0] == 'J') {
      auto dot = s.find('.');
      if (dot == std::string_view::npos || !parse_size(s.substr(1, dot - 1), a)
          || !parse_size(s.substr(dot + 1), b)) {
        throw bad();
      }
      v = VarietyDescriptor::J(a, b);
    } else if (s.size() >= 2 && parse_size(s.substr(1), a)) {
      switch (s[0]) {
        case 'C':
          v = VarietyDescriptor::C(a);
          break;
        case 'D':
          v = VarietyDescriptor::D(a);
          break;
        case 'F':
          v = VarietyDescriptor::F(a);
          break;
        case 'H':
          v = VarietyDescriptor::H(a);
          break;
        case 'I':
          v = VarietyDescriptor::I(a);
          break;
        default:
          throw bad();
      }
    } else {
      throw bad();
    }
    v.dual = dual;
    return v;
  }

  std::string to_string(VarietyDescriptor const& v) {
    std::string s;
    switch (v.tag) {
      case VarietyTag::T:
        s = "T";
        break;
      case VarietyTag::SL:
        s = "SL";
        break;
      case VarietyTag::C:
        s = "C" + std::to_string(v.n);
        break;
      case VarietyTag::Dk:
        s = "D" + std::to_string(v.k);
        break;
      case VarietyTag::D:
        s = "D";
        break;
      case VarietyTag::E:
        s = "E";
        break;
      case VarietyTag::F:
        s = "F" + std::to_string(v.k);
        break;
      case VarietyTag::H:
        s = "H" + std::to_string(v.k);
        break;
      case VarietyTag::I:
        s = "I" + std::to_string(v.k);
        break;
      case VarietyTag::J:
        s = "J" + std::to_string(v.k) + "." + std::to_string(v.m);
        break;
      case VarietyTag::K:
        s = "K";
        break;
      case VarietyTag::LRB:
        s = "LRB";
        break;
      case VarietyTag::RRB:
        s = "RRB";
        break;
      case VarietyTag::L:
        s = "L";
        break;
      case VarietyTag::M:
        s = "M";
        break;
      case VarietyTag::N:
        s = "N";
        break;
      case VarietyTag::O:
        s = "O";
        break;
    }
    return v.dual ? s + "~" : s;
  }

  Permutation::Permutation(std::vector<size_t> images)
      : images_(std::move(images)) {
    std::vector<size_t> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
      require(sorted[i] == i + 1, "not a permutation of 1..n");
    }
  }

  Permutation Permutation::identity(size_t n) {
    std::vector<size_t> im(n);
    for (size_t i = 0; i < n; ++i) {
      im[i] = i + 1;
    }
    return Permutation(std::move(im));
  }

  Word b_word(size_t s, size_t q) {
    if (s == 0) {
      return Word();
    }
    require(q >= 1 && q <= s, "b_{s,q} requires 1 <= q <= s");
    std::vector<Letter> r;
    for (size_t j = s; j >= q; --j) {
      r.push_back(x_(j - 1));
      r.push_back(x_(j));
    }
    return Word(std::move(r));
  }

  Word b_word(size_t s) {
    return s == 0 ? Word() : b_word(s, 1);
  }

  Identity alpha(size_t k) {
    require(k >= 1, "alpha_k requires k >= 1");
    Word tail = cat({letters({x_(k - 1), x_(k), y_(k)}), b_word(k - 1)});
    return Identity{cat({letters({x_(k), y_(k)}), tail}),
                    cat({letters({y_(k), x_(k)}), tail})};
  }

  Identity beta(size_t k) {
    require(k >= 1, "beta_k requires k >= 1");
    Letter x('x');
    return Identity{cat({letters({x, x_(k), x}), b_word(k)}),
                    cat({letters({x_(k), x, x}), b_word(k)})};
  }

  Identity gamma(size_t k) {
    require(k >= 1, "gamma_k requires k >= 1");
    return Identity{
        cat({letters({y_(1), y_(0), x_(k), y_(1)}), b_word(k)}),
        cat({letters({y_(1), y_(0), y_(1), x_(k)}), b_word(k)})};
  }

  Identity delta(size_t k, size_t m) {
    require(k >= 1 && m >= 1 && m <= k, "delta_k^m requires 1 <= m <= k");
    Word tail = cat({b_word(k, m), letters({y_(m)}), b_word(m - 1)});
    return Identity{
        cat({letters({y_(m + 1), y_(m), x_(k), y_(m + 1)}), tail}),
        cat({letters({y_(m + 1), y_(m), y_(m + 1), x_(k)}), tail})};
  }

  Identity xxkxbk(size_t k) {
    require(k >= 1, "x x_k x b_k requires k >= 1");
    Letter x('x');
    return Identity{cat({letters({x, x_(k), x}), b_word(k)}),
                    cat({letters({x, x, x_(k)}), b_word(k)})};
  }

  Identity sigma1() {
    return id("xyzxty", "yxzxty");
  }

  Identity sigma2() {
    return id("xtyzxy", "xtyzyx");
  }

  std::vector<Identity> phi_system() {
    return {id("xyx", "xyx^2"), id("x^2y^2", "y^2x^2"), id("x^2y", "x^2yx")};
  }

  Identity named_identity(std::string_view code) {
    auto bad = [&]() {
      return std::invalid_argument("unknown identity code '"
                                   + std::string(code) + "'");
    };
    if (code == "sigma1") {
      return sigma1();
    } else if (code == "sigma2") {
      return sigma2();
    } else if (code == "phi1" || code == "phi2" || code == "phi3") {
      return phi_system()[static_cast<size_t>(code[3] - '1')];
    } else if (code == "(17)") {
      return id("xyxzx", "x^2yz");
    } else if (code == "(18)") {
      return id("x^2y", "yx^2");
    } else if (code == "(19)") {
      return id("xyx", "x^2y");
    } else if (code == "(20)") {
      return id("xyxzx", "xyxz");
    }
    size_t k = 0, m = 0;
    auto   param = [&](std::string_view prefix) {
      return code.starts_with(prefix)
             && parse_size(code.substr(prefix.size()), k) && k >= 1;
    };
    if (param("alpha")) {
      return alpha(k);
    } else if (param("beta")) {
      return beta(k);
    } else if (param("gamma")) {
      return gamma(k);
    } else if (param("(21).")) {
      return xxkxbk(k);
    } else if (code.starts_with("delta")) {
      auto rest = code.substr(5);
      auto dot  = rest.find('.');
      if (dot != std::string_view::npos && parse_size(rest.substr(0, dot), k)
          && parse_size(rest.substr(dot + 1), m)) {
        return delta(k, m);
      }
    }
    throw bad();
  }

  std::vector<Identity> named_system(std::string_view codes) {
    std::vector<Identity> r;
    size_t                start = 0;
    while (start <= codes.size()) {
      size_t end = codes.find(',', start);
      if (end == std::string_view::npos) {
        end = codes.size();
      }
      auto code = codes.substr(start, end - start);
      while (!code.empty() && code.front() == ' ') {
        code.remove_prefix(1);
      }
      while (!code.empty() && code.back() == ' ') {
        code.remove_suffix(1);
      }
      if (code == "phi") {
        auto phi = phi_system();
        r.insert(r.end(), phi.begin(), phi.end());
      } else if (!code.empty()) {
        r.push_back(named_identity(code));
      }
      start = end + 1;
    }
    return r;
  }

  namespace {
    Word head(size_t n) {
      std::vector<Letter> r;
      for (size_t i = 1; i <= n; ++i) {
        r.push_back(z_(i));
        r.push_back(t_(i));
      }
      return Word(std::move(r));
    }

    Word tail(size_t from, size_t to) {
      std::vector<Letter> r;
      for (size_t i = from; i <= to; ++i) {
        r.push_back(t_(i));
        r.push_back(z_(i));
      }
      return Word(std::move(r));
    }

    Word pairs(size_t             n,
               size_t             from,
               size_t             to,
               Permutation const& pi,
               Permutation const& tau) {
      std::vector<Letter> r;
      for (size_t i = from; i <= to; ++i) {
        r.push_back(z_(pi(i)));
        r.push_back(z_(n + tau(i)));
      }
      return Word(std::move(r));
    }

    void check_sizes(size_t n, Permutation const& pi, Permutation const& tau) {
      require(n >= 1, "n must be positive");
      require(pi.size() == n && tau.size() == n,
              "permutation sizes must equal n");
    }
  }  // namespace

  Word w_n(size_t n, Permutation const& pi, Permutation const& tau) {
    check_sizes(n, pi, tau);
    Word x({Letter('x')});
    return cat({head(n), x, pairs(n, 1, n, pi, tau), x, tail(n + 1, 2 * n)});
  }

  Word w_n_prime(size_t n, Permutation const& pi, Permutation const& tau) {
    check_sizes(n, pi, tau);
    Word xx({Letter('x'), Letter('x')});
    return cat({head(n), xx, pairs(n, 1, n, pi, tau), tail(n + 1, 2 * n)});
  }

  namespace {
    Word theta_word(size_t n, size_t m, Permutation const& theta) {
      require(n >= 1, "n must be positive");
      require(theta.size() == n + m, "theta must have size n + m");
      std::vector<Letter> r;
      for (size_t i = 1; i <= n + m; ++i) {
        r.push_back(z_(theta(i)));
      }
      return Word(std::move(r));
    }
  }  // namespace

  Word w_nm(size_t n, size_t m, Permutation const& theta) {
    Word x({Letter('x')});
    return cat({head(n), x, theta_word(n, m, theta), x, tail(n + 1, n + m)});
  }

  Word w_nm_prime(size_t n, size_t m, Permutation const& theta) {
    Word xx({Letter('x'), Letter('x')});
    return cat({head(n), xx, theta_word(n, m, theta), tail(n + 1, n + m)});
  }

  Word w_nkl(size_t             n,
             size_t             k,
             size_t             l,
             Permutation const& pi,
             Permutation const& tau) {
    check_sizes(n, pi, tau);
    require(k <= l && l <= n, "w_n^{k,l} requires 0 <= k <= l <= n");
    Word x({Letter('x')});
    return cat({head(n),
                pairs(n, 1, k, pi, tau),
                x,
                pairs(n, k + 1, l, pi, tau),
                x,
                pairs(n, l + 1, n, pi, tau),
                tail(n + 1, 2 * n)});
  }

  std::vector<VarietyDescriptor> chain_of(size_t kmax) {
    require(kmax >= 1, "chain_of requires kmax >= 1");
    std::vector<VarietyDescriptor> r = {VarietyDescriptor::trivial(),
                                        VarietyDescriptor::semilattices(),
                                        VarietyDescriptor::C(2),
                                        VarietyDescriptor::D(1),
                                        VarietyDescriptor::E()};
    for (size_t k = 1; k <= kmax; ++k) {
      r.push_back(VarietyDescriptor::F(k));
      r.push_back(VarietyDescriptor::H(k));
      r.push_back(VarietyDescriptor::I(k));
      for (size_t m = 1; m <= k; ++m) {
        r.push_back(VarietyDescriptor::J(k, m));
      }
    }
    r.push_back(VarietyDescriptor::F(kmax + 1));
    return r;
  }

}  // namespace monvar

#ifndef MONVAR_CATALOG_HPP_
#define MONVAR_CATALOG_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "word.hpp"

namespace monvar {

  enum class VarietyTag { T, SL, C, Dk, D, E, F, H, I, J, K, LRB, RRB, L, M, N, O };

  // One variety of the catalog. Parameter use by tag:
  //   C: n >= 2;  Dk: k >= 1;  F, H, I: k >= 1;  J: 1 <= m <= k.
  struct VarietyDescriptor {
    VarietyTag tag  = VarietyTag::T;
    size_t     n    = 0;
    size_t     k    = 0;
    size_t     m    = 0;
    bool       dual = false;

    static VarietyDescriptor trivial() {
      return {VarietyTag::T};
    }
    static VarietyDescriptor semilattices() {
      return {VarietyTag::SL};
    }
    static VarietyDescriptor C(size_t n);
    static VarietyDescriptor D(size_t k);
    static VarietyDescriptor E() {
      return {VarietyTag::E};
    }
    static VarietyDescriptor F(size_t k);
    static VarietyDescriptor H(size_t k);
    static VarietyDescriptor I(size_t k);
    static VarietyDescriptor J(size_t k, size_t m);
    static VarietyDescriptor K() {
      return {VarietyTag::K};
    }
    static VarietyDescriptor of(VarietyTag tag) {
      return {tag};
    }

    VarietyDescriptor dualized() const {
      VarietyDescriptor r = *this;
      r.dual              = !dual;
      return r;
    }

    friend bool operator==(VarietyDescriptor const&, VarietyDescriptor const&)
        = default;
  };

  // Names: T SL C2 C3 .. D1 D2 .. D E F1 H1 I1 J1.1 .. K LRB RRB L M N O, with
  // an optional trailing "~" for the dual.
  VarietyDescriptor parse_variety(std::string_view name);
  std::string       to_string(VarietyDescriptor const& v);

  class Permutation {
   public:
    // 1-based images; throws std::invalid_argument unless bijective on 1..n.
    explicit Permutation(std::vector<size_t> images);
    static Permutation identity(size_t n);

    size_t size() const noexcept {
      return images_.size();
    }
    size_t operator()(size_t i) const {
      return images_.at(i - 1);
    }

   private:
    std::vector<size_t> images_;
  };

  inline Letter x_(size_t i) {
    return Letter('x', static_cast<int>(i));
  }
  inline Letter y_(size_t i) {
    return Letter('y', static_cast<int>(i));
  }

  // b_{s,q} = x_{s-1}x_s x_{s-2}x_{s-1} ... x_{q-1}x_q; b_s = b_{s,1}; b_0 = λ.
  Word b_word(size_t s, size_t q);
  Word b_word(size_t s);

  Identity alpha(size_t k);
  Identity beta(size_t k);
  Identity gamma(size_t k);
  Identity delta(size_t k, size_t m);
  // x x_k x b_k = x^2 x_k b_k
  Identity xxkxbk(size_t k);

  Identity              sigma1();
  Identity              sigma2();
  std::vector<Identity> phi_system();

  // Codes: sigma1 sigma2 phi1 phi2 phi3 (17) (18) (19) (20), and parametric
  // alpha<k> beta<k> gamma<k> delta<k>.<m> (21).<k>. Throws
  // std::invalid_argument for unknown codes.
  Identity named_identity(std::string_view code);
  // Comma-separated codes; "phi" expands to the three identities of Φ.
  std::vector<Identity> named_system(std::string_view codes);

  Word w_n(size_t n, Permutation const& pi, Permutation const& tau);
  Word w_n_prime(size_t n, Permutation const& pi, Permutation const& tau);
  Word w_nm(size_t n, size_t m, Permutation const& theta);
  Word w_nm_prime(size_t n, size_t m, Permutation const& theta);
  Word w_nkl(size_t             n,
             size_t             k,
             size_t             l,
             Permutation const& pi,
             Permutation const& tau);

  // T ⊂ SL ⊂ C2 ⊂ D1 ⊂ E ⊂ F1 ⊂ H1 ⊂ I1 ⊂ J1.1 ⊂ F2 ⊂ ... ⊂ F_{kmax+1}.
  std::vector<VarietyDescriptor> chain_of(size_t kmax);

}  // namespace monvar

#endif  // MONVAR_CATALOG_HPP_

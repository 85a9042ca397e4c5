// Expected k-decompositions of the sides of alpha_k, beta_k, gamma_k and
// delta_k^m, written out as rendering patterns independent of the library's
// decomposition code. Shared by the unit tests and the acceptance binary.
#ifndef MONVAR_TESTS_TABLE2_HPP_
#define MONVAR_TESTS_TABLE2_HPP_

#include <string>
#include <vector>

#include "monvar/catalog.hpp"
#include "monvar/decomposition.hpp"

namespace monvar {

  struct Table2Row {
    std::string name;
    size_t      m = 0;
    Identity    identity;
    std::string lhs;
    std::string rhs;
  };

  inline std::string tab_x(size_t i) {
    return "x" + std::to_string(i);
  }
  inline std::string tab_y(size_t i) {
    return "y" + std::to_string(i);
  }

  // "·x_{j-1}·[x_j]" for j = from down to 1; the block of x_special gets
  // extra appended.
  inline std::string tab_tail(size_t from, size_t special = 0,
                              std::string const& extra = "") {
    std::string r;
    for (size_t j = from; j >= 1; --j) {
      r += "·" + tab_x(j - 1) + "·[" + tab_x(j);
      if (j == special) {
        r += extra;
      }
      r += "]";
    }
    return r;
  }

  inline std::vector<Table2Row> table2_rows(size_t k) {
    std::string            xk = tab_x(k), yk = tab_y(k), xk1 = tab_x(k - 1);
    std::vector<Table2Row> rows;
    rows.push_back({"alpha", 0, alpha(k),
                    "λ·[λ]·" + xk + "·[λ]·" + yk + "·[λ]·" + xk1 + "·[" + xk + yk
                        + "]" + tab_tail(k - 1),
                    "λ·[λ]·" + yk + "·[λ]·" + xk + "·[λ]·" + xk1 + "·[" + xk + yk
                        + "]" + tab_tail(k - 1)});
    rows.push_back({"beta", 0, beta(k),
                    "λ·[x]·" + xk + "·[x]" + tab_tail(k),
                    "λ·[λ]·" + xk + "·[x^2]" + tab_tail(k)});
    rows.push_back({"gamma", 0, gamma(k),
                    "λ·[λ]·y1·[λ]·y0·[λ]·" + xk + "·[y1]" + tab_tail(k),
                    "λ·[λ]·y1·[λ]·y0·[y1]·" + xk + "·[λ]" + tab_tail(k)});
    for (size_t m = 1; m < k; ++m) {
      std::string ym = tab_y(m), ym1 = tab_y(m + 1);
      rows.push_back({"delta", m, delta(k, m),
                      "λ·[λ]·" + ym1 + "·[λ]·" + ym + "·[λ]·" + xk + "·[" + ym1
                          + "]" + tab_tail(k, m, ym),
                      "λ·[λ]·" + ym1 + "·[λ]·" + ym + "·[" + ym1 + "]·" + xk
                          + "·[λ]" + tab_tail(k, m, ym)});
    }
    std::string yk1 = tab_y(k + 1);
    rows.push_back({"delta", k, delta(k, k),
                    "λ·[" + yk1 + "]·" + yk + "·[λ]·" + xk + "·[" + yk1 + "]"
                        + tab_tail(k, k, yk),
                    "λ·[" + yk1 + "]·" + yk + "·[" + yk1 + "]·" + xk + "·[λ]"
                        + tab_tail(k, k, yk)});
    return rows;
  }

  // Counts letters whose depth differs from the index law: x_i has depth i,
  // y_j depth j, and for beta the plain x has depth k+1 on the left and
  // infinity on the right.
  inline size_t depth_index_violations(Identity const& id, bool is_beta,
                                       size_t k) {
    size_t bad = 0;
    for (int side = 0; side < 2; ++side) {
      WordProfile p(side == 0 ? id.lhs : id.rhs);
      for (auto const& a : p.letters()) {
        Depth d = p.depth(a);
        if (a.index >= 0) {
          bad += d != Depth(static_cast<uint32_t>(a.index));
        } else if (is_beta && a.base == 'x') {
          bad += side == 0 ? d != Depth(static_cast<uint32_t>(k + 1))
                           : !d.is_infinite();
        } else {
          ++bad;
        }
      }
    }
    return bad;
  }

}  // namespace monvar

#endif  // MONVAR_TESTS_TABLE2_HPP_

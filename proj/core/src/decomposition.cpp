#include "monvar/decomposition.hpp"

#include <algorithm>  // for find_if
#include <map>        // for map
#include <stdexcept>  // for out_of_range, invalid_argument

namespace monvar {

  std::string to_string(Divider const& d) {
    return d ? to_string(*d) : std::string("λ");
  }

  std::string to_string(Depth d) {
    return d.is_infinite() ? std::string("inf") : std::to_string(d.value());
  }

  std::vector<Letter> KDecomposition::dividers() const {
    std::vector<Letter> r;
    for (auto const& p : parts) {
      if (p.divider) {
        r.push_back(*p.divider);
      }
    }
    return r;
  }

  Word KDecomposition::concat() const {
    std::vector<Letter> r;
    for (auto const& p : parts) {
      if (p.divider) {
        r.push_back(*p.divider);
      }
      r.insert(r.end(), p.block.begin(), p.block.end());
    }
    return Word(std::move(r));
  }

  std::string KDecomposition::render() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) {
        s += "·";
      }
      s += to_string(parts[i].divider);
      s += "·[";
      s += parts[i].block.empty() ? std::string("λ")
                                  : format_word(parts[i].block);
      s += "]";
    }
    return s;
  }

  namespace {
    std::vector<bool> next_level(Word const&              w,
                                 std::vector<bool> const& mask,
                                 std::vector<bool> const& first_occ) {
      std::vector<bool> next = mask;
      size_t            n    = w.size();
      size_t            p    = 0;
      while (p < n) {
        if (mask[p]) {
          ++p;
          continue;
        }
        size_t q = p;
        while (q < n && !mask[q]) {
          ++q;
        }
        // block is [p, q)
        std::map<Letter, size_t> count;
        for (size_t r = p; r < q; ++r) {
          ++count[w[r]];
        }
        for (size_t r = p; r < q; ++r) {
          if (count[w[r]] == 1 && first_occ[r]) {
            next[r] = true;
          }
        }
        p = q;
      }
      return next;
    }
  }  // namespace

  WordProfile::WordProfile(Word w) : word_(std::move(w)) {
    size_t const n = word_.size();

    std::vector<bool> first_occ(n, false);
    for (size_t p = 0; p < n; ++p) {
      auto it = std::find_if(info_.begin(), info_.end(), [&](auto const& li) {
        return li.letter == word_[p];
      });
      if (it == info_.end()) {
        order_.push_back(word_[p]);
        info_.push_back(LetterInfo{word_[p], {}, {}, {}, Depth()});
        it           = info_.end() - 1;
        first_occ[p] = true;
      }
      it->positions.push_back(p);
    }

    std::vector<bool> mask(n, false);
    for (auto const& li : info_) {
      if (li.positions.size() == 1) {
        mask[li.positions[0]] = true;
      }
    }
    divider_mask_.push_back(mask);
    while (true) {
      auto next = next_level(word_, divider_mask_.back(), first_occ);
      if (next == divider_mask_.back()) {
        break;
      }
      divider_mask_.push_back(std::move(next));
    }

    for (size_t lvl = 0; lvl < divider_mask_.size(); ++lvl) {
      std::vector<Divider> prev(n + 1);
      Divider              current;
      for (size_t p = 0; p < n; ++p) {
        prev[p] = current;
        if (divider_mask_[lvl][p]) {
          current = word_[p];
        }
      }
      for (auto& li : info_) {
        li.h1.push_back(prev[li.positions[0]]);
        li.h2.push_back(li.positions.size() > 1 ? prev[li.positions[1]]
                                                : Divider());
      }
    }

    // Depth straight from the restrictor definition; divider membership is
    // computed independently above, which keeps the two routes checkable
    // against each other.
    for (auto& li : info_) {
      if (li.positions.size() == 1) {
        li.depth = Depth(0);
        continue;
      }
      li.depth = Depth::infinity();
      for (size_t k = 1; k <= divider_mask_.size(); ++k) {
        if (li.h1[k - 1] != li.h2[k - 1]) {
          li.depth = Depth(static_cast<uint32_t>(k));
          break;
        }
      }
    }
  }

  WordProfile::LetterInfo const* WordProfile::find(Letter x) const noexcept {
    for (auto const& li : info_) {
      if (li.letter == x) {
        return &li;
      }
    }
    return nullptr;
  }

  WordProfile::LetterInfo const& WordProfile::info(Letter x) const {
    auto const* li = find(x);
    if (li == nullptr) {
      throw std::out_of_range("letter " + to_string(x) + " does not occur in "
                              + format_word(word_));
    }
    return *li;
  }

  bool WordProfile::contains(Letter x) const noexcept {
    return find(x) != nullptr;
  }

  size_t WordProfile::occ(Letter x) const noexcept {
    auto const* li = find(x);
    return li == nullptr ? 0 : li->positions.size();
  }

  KDecomposition WordProfile::decomposition(size_t k) const {
    auto const&    mask = divider_mask_[level(k)];
    KDecomposition d;
    d.k      = k;
    d.source = word_;
    d.parts.push_back({Divider(), Word()});
    std::vector<Letter> block;
    for (size_t p = 0; p < word_.size(); ++p) {
      if (mask[p]) {
        d.parts.back().block = Word(std::move(block));
        block.clear();
        d.parts.push_back({word_[p], Word()});
      } else {
        block.push_back(word_[p]);
      }
    }
    d.parts.back().block = Word(std::move(block));
    return d;
  }

  std::vector<Letter> WordProfile::dividers(size_t k) const {
    auto const&         mask = divider_mask_[level(k)];
    std::vector<Letter> r;
    for (size_t p = 0; p < word_.size(); ++p) {
      if (mask[p]) {
        r.push_back(word_[p]);
      }
    }
    return r;
  }

  bool WordProfile::is_divider(Letter x, size_t k) const {
    auto const* li = find(x);
    return li != nullptr && divider_mask_[level(k)][li->positions[0]];
  }

  Divider WordProfile::divider_before(size_t pos, size_t lvl) const {
    auto const& mask = divider_mask_[lvl];
    for (size_t p = pos; p-- > 0;) {
      if (mask[p]) {
        return word_[p];
      }
    }
    return Divider();
  }

  Divider WordProfile::restrictor(Letter x, size_t i, size_t k) const {
    auto const& li = info(x);
    if (i == 0 || i > li.positions.size()) {
      throw std::out_of_range("occurrence " + std::to_string(i) + " of "
                              + to_string(x) + " does not exist");
    }
    if (i <= 2) {
      return i == 1 ? li.h1[level(k)] : li.h2[level(k)];
    }
    return divider_before(li.positions[i - 1], level(k));
  }

  Divider const& WordProfile::h1(Letter x, size_t k) const {
    return info(x).h1[level(k)];
  }

  Divider const& WordProfile::h2(Letter x, size_t k) const {
    return info(x).h2[level(k)];
  }

  Depth WordProfile::depth(Letter x) const {
    auto const* li = find(x);
    if (li == nullptr) {
      throw std::invalid_argument("letter " + to_string(x)
                                  + " does not occur in "
                                  + format_word(word_));
    }
    return li->depth;
  }

  KDecomposition zero_decompose(Word const& w) {
    return WordProfile(w).decomposition(0);
  }

  KDecomposition k_decompose(Word const& w, size_t k) {
    return WordProfile(w).decomposition(k);
  }

  size_t stabilization_level(Word const& w) {
    return WordProfile(w).stabilization_level();
  }

  std::vector<Letter> k_dividers(Word const& w, size_t k) {
    return WordProfile(w).dividers(k);
  }

  Divider restrictor(Word const& w, Letter x, size_t i, size_t k) {
    return WordProfile(w).restrictor(x, i, k);
  }

  Depth depth(Word const& w, Letter x) {
    return WordProfile(w).depth(x);
  }

  bool k_equivalent(Word const& u, Word const& v, size_t k) {
    return k_dividers(u, k) == k_dividers(v, k);
  }

}  // namespace monvar

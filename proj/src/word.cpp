#include "groupk/word.hpp"

#include <algorithm>

namespace groupk {

  Word Word::reduce(std::span<Letter const> letters) {
    Letters stack;
    stack.reserve(letters.size());
    for (Letter l : letters) {
      if (l.sign != 1 && l.sign != -1) {
        throw std::invalid_argument("letter sign must be +1 or -1");
      }
      if (!stack.empty() && stack.back().cancels(l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  Word Word::rotate(std::size_t i) const {
    if (_letters.empty()) {
      return *this;
    }
    i %= _letters.size();
    Letters out;
    out.reserve(_letters.size());
    out.insert(out.end(), _letters.begin() + i, _letters.end());
    out.insert(out.end(), _letters.begin(), _letters.begin() + i);
    // a cyclic shift of a non-cyclically-reduced word may cancel
    return reduce(out);
  }

  Word free_reduce(std::span<Letter const> letters) {
    return Word::reduce(letters);
  }

  Word invert(Word const& w) {
    Letters out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word::reduce(out);
  }

  Word operator*(Word const& u, Word const& v) {
    Letters out(u.letters());
    out.insert(out.end(), v.begin(), v.end());
    return Word::reduce(out);
  }

  Word power(Word const& w, long long exponent) {
    Word const base = exponent < 0 ? invert(w) : w;
    Letters    out;
    auto const reps = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent);
    out.reserve(base.size() * reps);
    for (std::size_t i = 0; i < reps; ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return Word::reduce(out);
  }

  CyclicReduction cyclic_reduce(Word const& w) {
    std::size_t lo = 0;
    std::size_t hi = w.size();
    while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
      ++lo;
      --hi;
    }
    Letters core(w.begin() + lo, w.begin() + hi);
    Letters conj(w.begin(), w.begin() + lo);
    return {Word::reduce(core), Word::reduce(conj)};
  }

  Root maximal_root(Word const& w) {
    if (w.empty()) {
      throw std::invalid_argument("maximal_root: empty word");
    }
    std::size_t const n = w.size();
    // divisors e of n in decreasing order; the first period that tiles wins
    for (std::size_t e = n; e >= 1; --e) {
      if (n % e != 0) {
        continue;
      }
      std::size_t const period = n / e;
      bool              tiles  = true;
      for (std::size_t i = period; i < n && tiles; ++i) {
        tiles = w[i] == w[i - period];
      }
      if (tiles) {
        Letters root(w.begin(), w.begin() + period);
        return {Word::reduce(root), e};
      }
    }
    return {w, 1};  // unreachable: e = 1 always tiles
  }

  std::vector<long long> abelianize(Word const& w, std::size_t n) {
    std::vector<long long> v(n, 0);
    for (Letter l : w) {
      if (l.generator >= n) {
        throw std::out_of_range("abelianize: generator index out of range");
      }
      v[l.generator] += l.sign;
    }
    return v;
  }

  std::set<Word> symmetrize(std::span<Word const> relators) {
    std::set<Word> out;
    for (Word const& r : relators) {
      Word const inv = invert(r);
      for (std::size_t i = 0; i < r.size(); ++i) {
        out.insert(r.rotate(i));
        out.insert(inv.rotate(i));
      }
    }
    return out;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a over (generator, sign)
    std::size_t h = 1469598103934665603ULL;
    for (Letter l : w) {
      h ^= (static_cast<std::size_t>(l.generator) << 1) | (l.sign < 0 ? 1u : 0u);
      h *= 1099511628211ULL;
    }
    return h;
  }

}  // namespace groupk

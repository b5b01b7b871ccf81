#include "groupk/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace groupk {

  namespace {
    std::size_t index_of(std::span<Word const> sym, Word const& w) {
      auto it = std::lower_bound(sym.begin(), sym.end(), w);
      if (it == sym.end() || *it != w) {
        return std::numeric_limits<std::size_t>::max();
      }
      return static_cast<std::size_t>(it - sym.begin());
    }

    using Bits = std::vector<std::uint64_t>;

    bool test(Bits const& b, std::size_t i) {
      return (b[i >> 6] >> (i & 63)) & 1u;
    }
    void set(Bits& b, std::size_t i) {
      b[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }  // namespace

  std::vector<Word> sorted_elements(std::set<Word> const& sym) {
    return {sym.begin(), sym.end()};
  }

  std::size_t common_prefix_length(Word const& a, Word const& b) noexcept {
    std::size_t const n = std::min(a.size(), b.size());
    std::size_t       i = 0;
    while (i < n && a[i] == b[i]) {
      ++i;
    }
    return i;
  }

  std::vector<std::size_t> max_piece_prefix(std::span<Word const> sym) {
    // In lexicographic order the longest common prefix of s_i with any other
    // element is attained at a neighbour.
    auto const               n = static_cast<std::ptrdiff_t>(sym.size());
    std::vector<std::size_t> out(sym.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      if (i > 0) {
        best = common_prefix_length(sym[i - 1], sym[i]);
      }
      if (i + 1 < n) {
        best = std::max(best, common_prefix_length(sym[i], sym[i + 1]));
      }
      out[i] = best;
    }
    return out;
  }

  std::vector<std::optional<std::size_t>> min_piece_counts(std::span<Word const>        sym,
                                                           std::span<std::size_t const> prefix) {
    auto const                              n = static_cast<std::ptrdiff_t>(sym.size());
    std::vector<std::optional<std::size_t>> out(sym.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
      Word const&       s   = sym[idx];
      std::size_t const len = s.size();
      // reach[i]: least number of pieces spelling s[0, i)
      constexpr auto           inf = std::numeric_limits<std::size_t>::max();
      std::vector<std::size_t> reach(len + 1, inf);
      reach[0] = 0;
      for (std::size_t i = 0; i < len; ++i) {
        if (reach[i] == inf) {
          continue;
        }
        // pieces are closed under prefixes, so every length up to the
        // longest piece starting at i is available
        std::size_t const at    = index_of(sym, s.rotate(i));
        std::size_t const reach_len = std::min(prefix[at], len - i);
        for (std::size_t l = 1; l <= reach_len; ++l) {
          reach[i + l] = std::min(reach[i + l], reach[i] + 1);
        }
      }
      if (reach[len] != inf) {
        out[idx] = reach[len];
      }
    }
    return out;
  }

  std::vector<bool> cancellation_cycle_lengths(std::span<Word const> sym, std::size_t max_length) {
    std::size_t const n     = sym.size();
    std::size_t const words = (n + 63) / 64;

    std::vector<std::vector<std::size_t>> successors(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t const inv = index_of(sym, invert(sym[s]));
      for (std::size_t t = 0; t < n; ++t) {
        if (t != inv && sym[s].back().cancels(sym[t].front())) {
          successors[s].push_back(t);
        }
      }
    }

    // found[start][h]: start lies in the h-th BFS layer from itself
    std::vector<std::vector<char>> found(n, std::vector<char>(max_length + 1, 0));
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t start = 0; start < static_cast<std::ptrdiff_t>(n); ++start) {
      Bits layer(words, 0);
      set(layer, static_cast<std::size_t>(start));
      found[start][0] = 1;
      for (std::size_t h = 1; h <= max_length; ++h) {
        Bits next(words, 0);
        bool any = false;
        for (std::size_t v = 0; v < n; ++v) {
          if (!test(layer, v)) {
            continue;
          }
          for (std::size_t t : successors[v]) {
            set(next, t);
            any = true;
          }
        }
        if (!any) {
          break;
        }
        layer = std::move(next);
        found[start][h] = test(layer, static_cast<std::size_t>(start)) ? 1 : 0;
      }
    }

    std::vector<bool> closed(max_length + 1, false);
    for (std::size_t h = 0; h <= max_length; ++h) {
      for (std::size_t s = 0; s < n && !closed[h]; ++s) {
        closed[h] = found[s][h] != 0;
      }
    }
    return closed;
  }

}  // namespace groupk

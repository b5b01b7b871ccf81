#include <algorithm>
#include <limits>

#include "groupk/kernels.hpp"

namespace groupk::reference {

  std::set<Word> pieces(std::span<Word const> sym) {
    std::set<Word> out;
    for (std::size_t i = 0; i < sym.size(); ++i) {
      for (std::size_t j = 0; j < sym.size(); ++j) {
        if (i == j) {
          continue;
        }
        std::size_t const l = common_prefix_length(sym[i], sym[j]);
        for (std::size_t len = 1; len <= l; ++len) {
          Letters prefix(sym[i].begin(), sym[i].begin() + len);
          out.insert(free_reduce(prefix));
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> max_piece_prefix(std::span<Word const> sym) {
    std::vector<std::size_t> out(sym.size(), 0);
    for (std::size_t i = 0; i < sym.size(); ++i) {
      for (std::size_t j = 0; j < sym.size(); ++j) {
        if (i != j) {
          out[i] = std::max(out[i], common_prefix_length(sym[i], sym[j]));
        }
      }
    }
    return out;
  }

  std::vector<std::optional<std::size_t>> min_piece_counts(std::span<Word const> sym) {
    std::set<Word> const                    piece_set = pieces(sym);
    std::vector<std::optional<std::size_t>> out;
    out.reserve(sym.size());
    constexpr auto inf = std::numeric_limits<std::size_t>::max();
    for (Word const& s : sym) {
      std::vector<std::size_t> dist(s.size() + 1, inf);
      dist[0] = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (dist[i] == inf) {
          continue;
        }
        for (std::size_t j = i + 1; j <= s.size(); ++j) {
          Letters sub(s.begin() + i, s.begin() + j);
          if (piece_set.contains(free_reduce(sub))) {
            dist[j] = std::min(dist[j], dist[i] + 1);
          }
        }
      }
      out.push_back(dist.back() == inf ? std::nullopt : std::optional(dist.back()));
    }
    return out;
  }

  std::vector<bool> cancellation_cycle_lengths(std::span<Word const> sym, std::size_t max_length) {
    std::size_t const              n = sym.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t s = 0; s < n; ++s) {
      Word const inv = invert(sym[s]);
      for (std::size_t t = 0; t < n; ++t) {
        bool const cancels = sym[s].back() == sym[t].front().inverse();
        adj[s][t]          = (cancels && sym[t] != inv) ? 1 : 0;
      }
    }
    std::vector<bool>              closed(max_length + 1, false);
    std::vector<std::vector<char>> power(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      power[i][i] = 1;
    }
    closed[0] = n > 0;
    for (std::size_t h = 1; h <= max_length; ++h) {
      std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!power[i][k]) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            next[i][j] |= adj[k][j];
          }
        }
      }
      power = std::move(next);
      for (std::size_t i = 0; i < n && !closed[h]; ++i) {
        closed[h] = power[i][i] != 0;
      }
    }
    return closed;
  }

}  // namespace groupk::reference

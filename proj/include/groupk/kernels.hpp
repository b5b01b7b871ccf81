#ifndef GROUPK_KERNELS_HPP_
#define GROUPK_KERNELS_HPP_

// Data-parallel kernels over a symmetrized relator set.
//
// The symmetrized set is passed as a sorted, duplicate-free span (the
// iteration order of std::set<Word>).  Each kernel in `groupk` is OpenMP
// parallel; the namespace `groupk::reference` holds a serial brute-force
// implementation with the same contract, kept for cross-checking and
// benchmarking.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "groupk/word.hpp"

namespace groupk {

  //! Returns the sorted vector view of a symmetrized set.
  std::vector<Word> sorted_elements(std::set<Word> const& sym);

  //! Length of the common prefix of two words.
  std::size_t common_prefix_length(Word const& a, Word const& b) noexcept;

  //! For each s in sym, the length of the longest piece that is a prefix of
  //! s, i.e. max over t != s of lcp(s, t).
  std::vector<std::size_t> max_piece_prefix(std::span<Word const> sym);

  //! For each s in sym, the least number of pieces whose concatenation is s
  //! (nullopt when s admits no such decomposition).  `prefix` is the output
  //! of max_piece_prefix on the same sym.
  std::vector<std::optional<std::size_t>> min_piece_counts(std::span<Word const>       sym,
                                                           std::span<std::size_t const> prefix);

  //! closed[h] is true iff the cancellation digraph on sym has a closed
  //! walk of length exactly h, for 0 <= h <= max_length.  There is an edge
  //! s -> t iff t != s^-1 and the last letter of s cancels the first of t.
  std::vector<bool> cancellation_cycle_lengths(std::span<Word const> sym, std::size_t max_length);

  namespace reference {

    //! Every common prefix of two distinct elements (all ordered pairs).
    std::set<Word> pieces(std::span<Word const> sym);

    std::vector<std::size_t> max_piece_prefix(std::span<Word const> sym);

    //! Shortest-path decomposition of each s into subwords drawn from the
    //! explicit piece set.
    std::vector<std::optional<std::size_t>> min_piece_counts(std::span<Word const> sym);

    //! Boolean adjacency matrix powers; closed[h] iff trace(M^h) != 0.
    std::vector<bool> cancellation_cycle_lengths(std::span<Word const> sym,
                                                 std::size_t           max_length);

  }  // namespace reference

}  // namespace groupk

#endif  // GROUPK_KERNELS_HPP_

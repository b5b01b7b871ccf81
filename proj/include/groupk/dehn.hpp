#ifndef GROUPK_DEHN_HPP_
#define GROUPK_DEHN_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "groupk/presentation.hpp"
#include "groupk/word.hpp"

namespace groupk {

  enum class Verdict { trivial, nontrivial, unknown };

  std::string to_string(Verdict v);

  //! One Dehn rewrite: in the cyclic word, the subword of length
  //! `match_length` starting at `position` is a prefix u of `relator` = u v
  //! with 2|u| > |relator|; it is replaced by v^-1.
  struct DehnStep {
    std::size_t position;
    Word        relator;
    std::size_t match_length;
    Word        result;  // cyclically reduced, strictly shorter
  };

  struct TriState {
    Verdict               value;
    Word                  start;  // cyclic reduction of the query
    std::vector<DehnStep> trace;
  };

  //! Single rewrite of the cyclically reduced word w over the sorted
  //! symmetrized set.  Positions are scanned left to right, and at each
  //! position the longest majority match wins (ties: first in sorted order).
  std::optional<DehnStep> dehn_step(Word const& w, std::span<Word const> sym);

  //! Dehn's algorithm bound to one presentation.  NONTRIVIAL verdicts are
  //! issued only when the presentation carries a C'(1/6) certificate.
  class DehnSolver {
   public:
    explicit DehnSolver(Presentation const& p);

    bool complete() const noexcept {
      return _complete;
    }
    std::span<Word const> symmetrized() const noexcept {
      return _sym;
    }

    TriState is_trivial(Word const& w) const;

   private:
    std::vector<Word> _sym;
    bool              _complete;
  };

  TriState is_trivial(Word const& w, Presentation const& p);

}  // namespace groupk

#endif  // GROUPK_DEHN_HPP_

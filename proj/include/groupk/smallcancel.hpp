#ifndef GROUPK_SMALLCANCEL_HPP_
#define GROUPK_SMALLCANCEL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "groupk/presentation.hpp"
#include "groupk/word.hpp"

namespace groupk {

  using Rational = mpq_class;

  //! A piece count; nullopt stands for UNBOUNDED (no decomposition exists).
  using PieceCount = std::optional<std::size_t>;

  struct RelatorPieces {
    std::size_t relator_index;
    std::size_t relator_length;
    std::size_t max_piece_length;
    PieceCount  min_piece_count;
    Rational    metric_ratio;  // max_piece_length / relator_length
  };

  //! Piece statistics per relator, over all cyclic permutations of the
  //! relator and its inverse.
  struct PieceReport {
    std::vector<RelatorPieces> relators;
  };

  enum class ClaVerdict { yes_one_relator, yes_c6, yes_c4t4, yes_c3t6, unknown };
  enum class BccStatus { known_one_relator, known_c7, known_c14t4, conditional };

  std::string to_string(ClaVerdict v);
  std::string to_string(BccStatus v);

  struct SmallCancellationReport {
    PieceReport piece_report;
    //! Largest p with C(p); nullopt means C(p) for every p.
    PieceCount c_max;
    //! C'(lambda) holds exactly for lambda > metric_lambda_star.
    Rational metric_lambda_star;
    //! q -> T(q) for 3 <= q <= q_max.
    std::map<std::size_t, bool> t_flags;
    ClaVerdict                  cla;
    BccStatus                   bcc_status;

    bool satisfies_c(std::size_t p) const noexcept {
      return !c_max || p <= *c_max;
    }
    bool satisfies_metric(Rational const& lambda) const {
      return metric_lambda_star < lambda;
    }
  };

  //! Every nonempty common prefix of two distinct elements of sym.
  std::set<Word> pieces(std::set<Word> const& sym);

  //! C'(lambda): |u| < lambda |r| for every piece u occurring in r in sym.
  bool check_metric(std::set<Word> const& sym, Rational const& lambda);

  //! Minimum over r in sym of the least number of pieces spelling r.
  PieceCount check_nonmetric(std::set<Word> const& sym);

  //! T(q): no cancellation cycle r_1, ..., r_h in sym with 3 <= h < q.
  bool check_triangle(std::set<Word> const& sym, std::size_t q);

  PieceReport piece_report(Presentation const& p);

  constexpr std::size_t default_max_q = 8;

  //! Small-cancellation data plus the CLA and Baum-Connes verdicts.
  //! T(q) is decided for q <= max(q_max, 6); t_flags lists 3..q_max.
  SmallCancellationReport classify(Presentation const& p, std::size_t q_max = default_max_q);

}  // namespace groupk

#endif  // GROUPK_SMALLCANCEL_HPP_

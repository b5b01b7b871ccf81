#include "groupk/smallcancel.hpp"

#include <algorithm>
#include <stdexcept>

#include "groupk/kernels.hpp"

namespace groupk {

  std::string to_string(ClaVerdict v) {
    switch (v) {
      case ClaVerdict::yes_one_relator: return "YES_ONE_RELATOR";
      case ClaVerdict::yes_c6: return "YES_C6";
      case ClaVerdict::yes_c4t4: return "YES_C4T4";
      case ClaVerdict::yes_c3t6: return "YES_C3T6";
      case ClaVerdict::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
  }

  std::string to_string(BccStatus v) {
    switch (v) {
      case BccStatus::known_one_relator: return "KNOWN_ONE_RELATOR";
      case BccStatus::known_c7: return "KNOWN_C7";
      case BccStatus::known_c14t4: return "KNOWN_C14T4";
      case BccStatus::conditional: return "CONDITIONAL";
    }
    return "CONDITIONAL";
  }

  std::set<Word> pieces(std::set<Word> const& sym) {
    auto const elems  = sorted_elements(sym);
    auto const prefix = max_piece_prefix(elems);
    std::set<Word> out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t len = 1; len <= prefix[i]; ++len) {
        Letters head(elems[i].begin(), elems[i].begin() + len);
        out.insert(free_reduce(head));
      }
    }
    return out;
  }

  bool check_metric(std::set<Word> const& sym, Rational const& lambda) {
    if (lambda <= 0) {
      throw std::invalid_argument("check_metric: lambda must be positive");
    }
    auto const elems  = sorted_elements(sym);
    auto const prefix = max_piece_prefix(elems);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (Rational(static_cast<unsigned long>(prefix[i]))
          >= lambda * static_cast<unsigned long>(elems[i].size())) {
        return false;
      }
    }
    return true;
  }

  PieceCount check_nonmetric(std::set<Word> const& sym) {
    auto const elems  = sorted_elements(sym);
    auto const prefix = max_piece_prefix(elems);
    PieceCount best;
    for (auto const& c : min_piece_counts(elems, prefix)) {
      if (c && (!best || *c < *best)) {
        best = c;
      }
    }
    return best;
  }

  bool check_triangle(std::set<Word> const& sym, std::size_t q) {
    if (q < 3) {
      throw std::invalid_argument("check_triangle: q must be at least 3");
    }
    if (q == 3) {
      return true;
    }
    auto const closed = cancellation_cycle_lengths(sorted_elements(sym), q - 1);
    return std::none_of(closed.begin() + 3, closed.end(), [](bool b) { return b; });
  }

  namespace {
    struct SymData {
      std::vector<Word>       elems;
      std::vector<std::size_t> prefix;
      std::vector<PieceCount>  counts;
    };

    SymData sym_data(Presentation const& p) {
      SymData d;
      d.elems  = sorted_elements(symmetrize(p.relators()));
      d.prefix = max_piece_prefix(d.elems);
      d.counts = min_piece_counts(d.elems, d.prefix);
      return d;
    }

    PieceReport piece_report(Presentation const& p, SymData const& d) {
      PieceReport report;
      for (std::size_t i = 0; i < p.num_relators(); ++i) {
        Word const&   r = p.relators()[i];
        RelatorPieces rp{i, r.size(), 0, std::nullopt, Rational(0)};
        bool          unbounded = false;
        for (std::size_t k = 0; k < r.size(); ++k) {
          auto it = std::lower_bound(d.elems.begin(), d.elems.end(), r.rotate(k));
          auto at = static_cast<std::size_t>(it - d.elems.begin());
          rp.max_piece_length = std::max(rp.max_piece_length, d.prefix[at]);
          auto const& c       = d.counts[at];
          if (!c) {
            unbounded = true;
          } else if (!rp.min_piece_count || *c < *rp.min_piece_count) {
            rp.min_piece_count = c;
          }
        }
        if (unbounded && rp.min_piece_count) {
          throw std::logic_error("piece decomposability differs across cyclic shifts");
        }
        if (r.size() > 0) {
          rp.metric_ratio = Rational(static_cast<unsigned long>(rp.max_piece_length),
                                     static_cast<unsigned long>(r.size()));
          rp.metric_ratio.canonicalize();
        }
        report.relators.push_back(std::move(rp));
      }
      return report;
    }
  }  // namespace

  PieceReport piece_report(Presentation const& p) {
    return piece_report(p, sym_data(p));
  }

  SmallCancellationReport classify(Presentation const& p, std::size_t q_max) {
    if (q_max < 4) {
      throw std::invalid_argument("classify: q_max must be at least 4");
    }
    auto const              d = sym_data(p);
    SmallCancellationReport out;
    out.piece_report       = piece_report(p, d);
    out.metric_lambda_star = 0;
    for (auto const& rp : out.piece_report.relators) {
      if (!rp.min_piece_count) {
        continue;
      }
      if (!out.c_max || *rp.min_piece_count < *out.c_max) {
        out.c_max = rp.min_piece_count;
      }
    }
    for (auto const& rp : out.piece_report.relators) {
      out.metric_lambda_star = std::max(out.metric_lambda_star, rp.metric_ratio);
    }

    std::size_t const q_top  = std::max<std::size_t>(q_max, 6);
    auto const        closed = cancellation_cycle_lengths(d.elems, q_top - 1);
    auto              t_holds = [&](std::size_t q) {
      for (std::size_t h = 3; h < q; ++h) {
        if (closed[h]) {
          return false;
        }
      }
      return true;
    };
    for (std::size_t q = 3; q <= q_max; ++q) {
      out.t_flags[q] = t_holds(q);
    }

    std::size_t const k = p.num_relators();
    if (k == 1) {
      out.cla = ClaVerdict::yes_one_relator;
    } else if (out.satisfies_c(6)) {
      out.cla = ClaVerdict::yes_c6;
    } else if (out.satisfies_c(4) && t_holds(4)) {
      out.cla = ClaVerdict::yes_c4t4;
    } else if (out.satisfies_c(3) && t_holds(6)) {
      out.cla = ClaVerdict::yes_c3t6;
    } else {
      out.cla = ClaVerdict::unknown;
    }

    if (k == 1) {
      out.bcc_status = BccStatus::known_one_relator;
    } else if (out.satisfies_c(7)) {
      out.bcc_status = BccStatus::known_c7;
    } else if (out.satisfies_metric(Rational(1, 4)) && t_holds(4)) {
      out.bcc_status = BccStatus::known_c14t4;
    } else {
      out.bcc_status = BccStatus::conditional;
    }
    return out;
  }

}  // namespace groupk

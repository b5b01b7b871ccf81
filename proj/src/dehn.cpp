#include "groupk/dehn.hpp"

#include <stdexcept>

#include "groupk/kernels.hpp"
#include "groupk/smallcancel.hpp"

namespace groupk {

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::trivial: return "TRIVIAL";
      case Verdict::nontrivial: return "NONTRIVIAL";
      case Verdict::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
  }

  std::optional<DehnStep> dehn_step(Word const& w, std::span<Word const> sym) {
    if (!w.is_cyclically_reduced()) {
      throw std::invalid_argument("dehn_step: word is not cyclically reduced");
    }
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      Word const   rotated = w.rotate(pos);
      Word const*  best    = nullptr;
      std::size_t  best_len = 0;
      for (Word const& r : sym) {
        std::size_t const len = common_prefix_length(rotated, r);
        if (2 * len > r.size() && len > best_len) {
          best     = &r;
          best_len = len;
        }
      }
      if (best == nullptr) {
        continue;
      }
      Letters rest(rotated.begin() + best_len, rotated.end());
      Letters tail(best->begin() + best_len, best->end());
      Word    replaced = invert(free_reduce(tail)) * free_reduce(rest);
      return DehnStep{pos, *best, best_len, cyclic_reduce(replaced).core};
    }
    return std::nullopt;
  }

  DehnSolver::DehnSolver(Presentation const& p) {
    auto sym  = symmetrize(p.relators());
    _complete = check_metric(sym, Rational(1, 6));
    _sym      = sorted_elements(sym);
  }

  TriState DehnSolver::is_trivial(Word const& w) const {
    TriState out{Verdict::unknown, cyclic_reduce(w).core, {}};
    Word     current = out.start;
    while (!current.empty()) {
      auto step = dehn_step(current, _sym);
      if (!step) {
        break;
      }
      if (step->result.size() >= current.size()) {
        throw std::logic_error("Dehn rewrite did not shorten the word");
      }
      current = step->result;
      out.trace.push_back(std::move(*step));
    }
    if (current.empty()) {
      out.value = Verdict::trivial;
    } else if (_complete) {
      out.value = Verdict::nontrivial;
    }
    return out;
  }

  TriState is_trivial(Word const& w, Presentation const& p) {
    return DehnSolver(p).is_trivial(w);
  }

}  // namespace groupk

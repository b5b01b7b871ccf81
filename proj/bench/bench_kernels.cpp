// Times the OpenMP kernels against the serial reference on random
// symmetrized sets of increasing size, and checks they agree.
//
//   groupk_bench [max_relators]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "groupk/kernels.hpp"

using namespace groupk;

namespace {
  std::vector<Word> random_sym(std::mt19937_64& rng, std::size_t n, std::size_t k,
                               std::size_t length) {
    std::uniform_int_distribution<std::uint32_t> g(0, static_cast<std::uint32_t>(n - 1));
    std::bernoulli_distribution                  s(0.5);
    std::vector<Word>                            rels;
    while (rels.size() < k) {
      Letters ls;
      for (std::size_t i = 0; i < length; ++i) {
        ls.push_back(gen(g(rng), s(rng) ? 1 : -1));
      }
      Word w = cyclic_reduce(free_reduce(ls)).core;
      if (!w.empty()) {
        rels.push_back(std::move(w));
      }
    }
    return sorted_elements(symmetrize(rels));
  }

  template <typename F>
  double seconds(F&& f) {
    auto const t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
}  // namespace

int main(int argc, char** argv) {
  std::size_t const max_k = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 32;
  std::mt19937_64   rng(1);

  std::cout << std::left << std::setw(8) << "|sym|" << std::setw(20) << "kernel"
            << std::setw(14) << "reference s" << std::setw(14) << "parallel s"
            << "speedup\n";
  for (std::size_t k = 4; k <= max_k; k *= 2) {
    auto const sym = random_sym(rng, 4, k, 20);

    std::vector<std::size_t>                prefix, prefix_ref;
    std::vector<std::optional<std::size_t>> counts, counts_ref;
    std::vector<bool>                       closed, closed_ref;

    struct Row {
      char const* name;
      double      ref;
      double      par;
    };
    Row const rows[] = {
        {"max_piece_prefix", seconds([&] { prefix_ref = reference::max_piece_prefix(sym); }),
         seconds([&] { prefix = max_piece_prefix(sym); })},
        {"min_piece_counts", seconds([&] { counts_ref = reference::min_piece_counts(sym); }),
         seconds([&] { counts = min_piece_counts(sym, prefix); })},
        {"cycle_lengths",
         seconds([&] { closed_ref = reference::cancellation_cycle_lengths(sym, 8); }),
         seconds([&] { closed = cancellation_cycle_lengths(sym, 8); })},
    };
    if (prefix != prefix_ref || counts != counts_ref || closed != closed_ref) {
      std::cerr << "mismatch between reference and parallel kernels at |sym| = " << sym.size()
                << '\n';
      return 1;
    }
    for (auto const& r : rows) {
      std::cout << std::setw(8) << sym.size() << std::setw(20) << r.name << std::setw(14)
                << r.ref << std::setw(14) << r.par << std::setprecision(3)
                << (r.par > 0 ? r.ref / r.par : 0.0) << '\n'
                << std::setprecision(6);
    }
  }
}

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  Expected values come from the oracles in support/.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "groupk/cli.hpp"
#include "groupk/dehn.hpp"
#include "groupk/kernels.hpp"
#include "groupk/ktheory.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace groupk;
namespace oracle = groupk::testing;

namespace {

  struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, std::string const& what) {
      if (!ok && failures.size() < 5) {
        failures.push_back(what);
      }
    }
  };

  int failed = 0;

  void criterion(char const* id, char const* title, double limit_seconds,
                 std::function<void(Check&)> const& body) {
    Check      c;
    auto const t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (std::exception const& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
      c.failures.push_back("took " + std::to_string(secs) + " s, limit "
                           + std::to_string(limit_seconds) + " s");
    }
    bool const ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << "  " << title << "  ("
              << std::to_string(secs).substr(0, 5) << " s)\n";
    for (auto const& f : c.failures) {
      std::cout << "         " << f << '\n';
    }
  }

  std::string str(AbelianGroup const& g) { return to_string(g); }

  std::vector<fs::path> corpus_files() {
    std::vector<fs::path> files;
    for (auto const& e : fs::directory_iterator(GROUPK_CORPUS_DIR)) {
      if (e.path().extension() == ".grp") {
        files.push_back(e.path());
      }
    }
    std::sort(files.begin(), files.end());
    return files;
  }

  Presentation load(fs::path const& f) {
    std::ifstream      in(f);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
  }

  // Relators after renaming generator i to perm[i].
  std::vector<Word> permute_generators(std::vector<Word> const& rels,
                                       std::vector<std::uint32_t> const& perm) {
    std::vector<Word> out;
    for (Word const& r : rels) {
      Letters ls;
      for (Letter l : r) {
        ls.push_back(gen(perm[l.generator], l.sign));
      }
      out.push_back(free_reduce(ls));
    }
    return out;
  }

  std::string batch_json() {
    std::string const        dir = GROUPK_CORPUS_DIR;
    std::vector<char const*> argv{"groupk", "--format", "json", "batch", dir.c_str()};
    std::ostringstream       out, err;
    cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
  }

}  // namespace

int main() {
  criterion("AC1", "cyclic groups <a|a^n>, n = 2..12", 1.0, [](Check& c) {
    for (int n = 2; n <= 12; ++n) {
      auto const r = compute_ktheory(
          parse_presentation("gens: a; rels: a^" + std::to_string(n) + ";"));
      // R(Z/n) = Z^n from the n characters; Z/n has no free abelian part
      c.expect(r.k0 == AbelianGroup::free(static_cast<std::size_t>(n)),
               "n=" + std::to_string(n) + " K0=" + str(r.k0));
      c.expect(r.k1.is_trivial(), "n=" + std::to_string(n) + " K1=" + str(r.k1));
    }
  });

  criterion("AC2", "torus and genus-g surface groups, g = 1..5", 1.0, [](Check& c) {
    for (std::size_t g = 1; g <= 5; ++g) {
      std::string gens, rel;
      for (std::size_t i = 0; i < g; ++i) {
        gens += " a" + std::to_string(i) + " b" + std::to_string(i);
        rel += " [a" + std::to_string(i) + ",b" + std::to_string(i) + "]";
      }
      auto const r = compute_ktheory(parse_presentation("gens:" + gens + "; rels:" + rel + ";"));
      c.expect(r.k0 == AbelianGroup::free(2), "g=" + std::to_string(g) + " K0=" + str(r.k0));
      c.expect(r.k1 == AbelianGroup::free(2 * g), "g=" + std::to_string(g) + " K1=" + str(r.k1));
    }
  });

  criterion("AC3", "torus knots (2,3), (3,5), (2,7)", 0, [](Check& c) {
    for (auto [p, q] : {std::pair{2, 3}, {3, 5}, {2, 7}}) {
      auto const text = "gens: a b; rels: a^" + std::to_string(p) + " b^-" + std::to_string(q) + ";";
      auto const r    = compute_ktheory(parse_presentation(text));
      // a single column (p, -q) of content gcd(p, q) = 1 has cokernel Z
      IntMatrix  col{{p}, {-q}};
      c.expect(oracle::maximal_minors(col).gcd == 1, text + " oracle content");
      c.expect(r.k0 == AbelianGroup::free(1), text + " K0=" + str(r.k0));
      c.expect(r.k1 == AbelianGroup::free(1), text + " K1=" + str(r.k1));
    }
  });

  criterion("AC4", "torsion one-relator <a,b|(ab)^3>", 0, [](Check& c) {
    auto const r = compute_ktheory(parse_presentation("gens: a b; rels: (a b)^3;"));
    // d = 3 characters, A column (1,1) of rank 1: K0 = Z^3, K1 = Z^2/(1,1) = Z
    c.expect(r.k0 == AbelianGroup::free(3), "K0=" + str(r.k0));
    c.expect(r.k1 == AbelianGroup::free(1), "K1=" + str(r.k1));
  });

  criterion("AC5", "rank identities on corpus and 200 random presentations", 30.0, [](Check& c) {
    std::vector<std::pair<std::string, Presentation>> cases;
    for (auto const& f : corpus_files()) {
      cases.emplace_back(f.filename().string(), load(f));
    }
    std::mt19937_64                            rng(2024);
    std::uniform_int_distribution<std::size_t> n(1, 5), k(2, 4);
    for (int t = 0; t < 200; ++t) {
      cases.emplace_back("random#" + std::to_string(t),
                         oracle::random_presentation(rng, n(rng), k(rng), 16));
    }
    for (auto const& [name, p] : cases) {
      auto const r = compute_ktheory(p);
      if (p.num_relators() == 0) {
        c.expect(r.k0 == AbelianGroup::free(1) && r.k1 == AbelianGroup::free(p.num_generators()),
                 name + " free group");
        continue;
      }
      // root columns and exponents straight from the letters: the smallest
      // period of a relator gives its root, its abelianisation counts letters
      std::size_t const n_gens = p.num_generators(), k_rels = p.num_relators();
      IntMatrix         A(n_gens, k_rels), relator_cols(n_gens, k_rels);
      std::size_t       sum_d = 0;
      for (std::size_t i = 0; i < k_rels; ++i) {
        Word const& r      = p.relators()[i];
        std::size_t period = 1;
        while (r.size() % period != 0
               || !std::equal(r.begin() + period, r.end(), r.begin())) {
          ++period;
        }
        sum_d += r.size() / period;
        for (std::size_t j = 0; j < r.size(); ++j) {
          Integer const s = r[j].sign;
          relator_cols(r[j].generator, i) += s;
          if (j < period) {
            A(r[j].generator, i) += s;
          }
        }
      }
      c.expect(A == build_A(p), name + " A matrix");
      std::size_t const rank_A = oracle::maximal_minors(A).rank;
      c.expect(r.k0.rank == sum_d + 1 - rank_A, name + " rank K0");
      c.expect(r.k0.is_free(), name + " K0 torsion");
      c.expect(r.k1.rank == p.num_generators() - rank_A, name + " rank K1");
      // the relator columns are d_i times the root columns, so adding them
      // must not change the cokernel
      c.expect(cokernel(A) == cokernel(A.hconcat(relator_cols)), name + " G^ab consistency");
      c.expect(r.k1 == cokernel(A), name + " K1 = coker A");
    }
  });

  criterion("AC6", "Tietze stability on 100 random instances", 0, [](Check& c) {
    std::mt19937_64                            rng(77);
    std::uniform_int_distribution<std::size_t> n(1, 4), k(1, 4);
    for (int t = 0; t < 100; ++t) {
      auto const p    = oracle::random_presentation(rng, n(rng), k(rng), 12);
      auto const base = compute_ktheory(p);
      auto const tag  = "instance " + std::to_string(t);

      std::vector<Word> rels = p.relators();
      std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
      std::size_t const i = pick(rng);
      rels[i]             = rels[i].rotate(rng() % rels[i].size());

      std::vector<std::string> names;
      for (auto const& g : p.generators()) {
        names.push_back(g.name);
      }
      auto same = [&](Presentation const& q, char const* move) {
        auto const r = compute_ktheory(q);
        c.expect(r.k0 == base.k0 && r.k1 == base.k1, tag + " " + move);
      };

      same(Presentation(names, rels), "cyclic shift");

      rels    = p.relators();
      rels[i] = invert(rels[i]);
      same(Presentation(names, rels), "inversion");

      rels = p.relators();
      std::shuffle(rels.begin(), rels.end(), rng);
      same(Presentation(names, rels), "relator permutation");

      std::vector<std::uint32_t> perm(p.num_generators());
      std::iota(perm.begin(), perm.end(), 0u);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::string> renamed;
      for (std::size_t g = 0; g < names.size(); ++g) {
        renamed.push_back("t" + std::to_string(g));
      }
      same(Presentation(renamed, permute_generators(p.relators(), perm)),
           "generator renaming");
    }
  });

  criterion("AC7", "Smith normal form on 1000 random matrices up to 5x5", 0, [](Check& c) {
    std::mt19937_64                    rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int t = 0; t < 1000; ++t) {
      IntMatrix A(dim(rng), dim(rng));
      for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
          A(i, j) = entry(rng);
        }
      }
      auto const  s   = smith_normal_form(A);
      auto const  tag = "case " + std::to_string(t);
      c.expect(s.U * A * s.V == s.D, tag + " UAV != D");
      c.expect(abs(oracle::determinant(s.U)) == 1, tag + " U not unimodular");
      c.expect(abs(oracle::determinant(s.V)) == 1, tag + " V not unimodular");
      bool diagonal = true;
      for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
          diagonal = diagonal && (i == j || s.D(i, j) == 0);
        }
      }
      c.expect(diagonal, tag + " D not diagonal");
      auto const d    = s.diagonal();
      Integer    prod = 1;
      for (std::size_t i = 0; i < d.size(); ++i) {
        c.expect(d[i] > 0, tag + " nonpositive invariant factor");
        c.expect(i + 1 == d.size() || d[i + 1] % d[i] == 0, tag + " divisibility");
        prod *= d[i];
      }
      auto const minors = oracle::maximal_minors(A);
      c.expect(s.rank == minors.rank, tag + " rank");
      c.expect(prod == minors.gcd, tag + " minor gcd");
    }
  });

  criterion("AC8", "small-cancellation oracle on <a,b|aabb>", 0, [](Check& c) {
    auto const p   = parse_presentation("gens: a b; rels: a a b b;");
    auto const sym = symmetrize(p.relators());
    auto const rep = classify(p);

    std::size_t oracle_max = 0;
    for (Word const& u : oracle::brute_force_pieces(sym)) {
      oracle_max = std::max(oracle_max, u.size());
    }
    auto const oracle_c = oracle::brute_force_c_max(sym);
    c.expect(oracle_max == 1, "oracle max piece length");
    c.expect(rep.piece_report.relators.at(0).max_piece_length == oracle_max,
             "max piece length");
    c.expect(rep.satisfies_c(4) == (oracle_c && *oracle_c >= 4), "C(4) vs oracle");
    c.expect(rep.satisfies_c(5) == (oracle_c && *oracle_c >= 5), "C(5) vs oracle");
    c.expect(rep.satisfies_c(4), "C(4) true");
    c.expect(!rep.satisfies_c(5), "C(5) false");
    // C'(lambda): every piece shorter than lambda * 4
    c.expect(!rep.satisfies_metric(Rational(1, 4)), "C'(1/4) false");
    c.expect(rep.satisfies_metric(Rational(1, 3)), "C'(1/3) true");
    c.expect(Rational(static_cast<long>(oracle_max)) < Rational(1, 3) * 4
                 && !(Rational(static_cast<long>(oracle_max)) < Rational(1, 4) * 4),
             "oracle metric bounds");
  });

  criterion("AC9", "Dehn's algorithm on C'(1/6) corpus instances", 10.0, [](Check& c) {
    std::mt19937_64 rng(99);
    std::size_t     certified = 0;
    for (auto const& f : corpus_files()) {
      auto const p    = load(f);
      auto const name = f.filename().string();
      DehnSolver solver(p);
      bool const cert = check_metric(symmetrize(p.relators()), Rational(1, 6));
      c.expect(solver.complete() == cert, name + " certificate mismatch");

      // no NONTRIVIAL verdict without a certificate, on any corpus entry
      for (int t = 0; t < 50; ++t) {
        auto const v = solver.is_trivial(oracle::random_word(rng, p.num_generators(), 12)).value;
        c.expect(cert || v != Verdict::nontrivial, name + " uncertified NONTRIVIAL");
      }
      if (!cert) {
        continue;
      }
      ++certified;
      for (Word const& r : p.relators()) {
        c.expect(solver.is_trivial(r).value == Verdict::trivial, name + " relator");
      }
      if (p.num_relators() > 0) {
        std::uniform_int_distribution<std::size_t> count(1, 3), pick(0, p.num_relators() - 1);
        for (int t = 0; t < 50; ++t) {
          Word w;
          for (std::size_t j = count(rng); j > 0; --j) {
            Word const g = oracle::random_word(rng, p.num_generators(), 6);
            Word       r = p.relators()[pick(rng)];
            if (rng() % 2) {
              r = invert(r);
            }
            w = w * g * r * invert(g);
          }
          c.expect(solver.is_trivial(w).value == Verdict::trivial, name + " conjugate product");
        }
      }
      for (std::uint32_t g = 0; g < p.num_generators(); ++g) {
        Letter const l = gen(g);
        c.expect(solver.is_trivial(free_reduce(std::span<Letter const>(&l, 1))).value
                     == Verdict::nontrivial,
                 name + " generator " + p.generators()[g].name);
      }
    }
    c.expect(certified > 0, "no certified corpus instance");
  });

  criterion("AC10", "byte-identical batch JSON across 3 runs", 0, [](Check& c) {
    auto const first = batch_json();
    c.expect(first.size() > 2, "empty batch output");
    for (int run = 0; run < 2; ++run) {
      c.expect(batch_json() == first, "run " + std::to_string(run + 2) + " differs");
    }
  });

  return failed == 0 ? 0 : 1;
}

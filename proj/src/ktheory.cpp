#include "groupk/ktheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace groupk {

  RepRingBlock RepRingBlock::cyclic(std::size_t relator_index, std::size_t d) {
    if (d == 0) {
      throw std::invalid_argument("RepRingBlock: order must be positive");
    }
    return {relator_index, d, std::vector<long long>(d, 1)};
  }

  std::string to_string(Certificate c) {
    switch (c) {
      case Certificate::one_relator: return "ONE_RELATOR";
      case Certificate::c6: return "C6";
      case Certificate::c4t4: return "C4T4";
      case Certificate::c3t6: return "C3T6";
      case Certificate::not_certified: return "NOT_CERTIFIED";
      case Certificate::free_group: return "FREE_GROUP";
    }
    return "NOT_CERTIFIED";
  }

  IntMatrix build_A(Presentation const& p) {
    if (p.num_relators() == 0) {
      throw std::invalid_argument("build_A: presentation has no relators");
    }
    std::vector<std::vector<long long>> columns;
    for (auto& rd : relator_data(p)) {
      columns.push_back(std::move(rd.abelianized_root));
    }
    return IntMatrix::from_columns(p.num_generators(), columns);
  }

  RepRingQuotient compute_R(std::vector<RepRingBlock> const& blocks) {
    if (blocks.empty()) {
      throw std::invalid_argument("compute_R: no representation ring blocks");
    }
    std::vector<std::size_t> offset(blocks.size() + 1, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].regular_class.size() != blocks[i].d) {
        throw std::invalid_argument("compute_R: regular class has wrong length");
      }
      offset[i + 1] = offset[i] + blocks[i].d;
    }
    std::size_t const ambient = offset.back();

    // column i: [lambda_i] - [lambda_{i+1}]
    IntMatrix gens(ambient, blocks.size() - 1);
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      for (std::size_t c = 0; c < blocks[i].d; ++c) {
        gens(offset[i] + c, i) = static_cast<long>(blocks[i].regular_class[c]);
      }
      for (std::size_t c = 0; c < blocks[i + 1].d; ++c) {
        gens(offset[i + 1] + c, i) = -static_cast<long>(blocks[i + 1].regular_class[c]);
      }
    }
    AbelianGroup R = quotient_lattice(ambient, gens);
    if (!R.is_free()) {
      throw std::logic_error("compute_R: quotient by regular-class differences has torsion");
    }
    if (R.rank != ambient - (blocks.size() - 1)) {
      throw std::logic_error("compute_R: regular-class differences are not independent");
    }
    return {std::move(R), std::move(gens)};
  }

  namespace {
    Certificate certificate_for(ClaVerdict v) {
      switch (v) {
        case ClaVerdict::yes_one_relator: return Certificate::one_relator;
        case ClaVerdict::yes_c6: return Certificate::c6;
        case ClaVerdict::yes_c4t4: return Certificate::c4t4;
        case ClaVerdict::yes_c3t6: return Certificate::c3t6;
        case ClaVerdict::unknown: return Certificate::not_certified;
      }
      return Certificate::not_certified;
    }

    void ensure(bool condition, char const* what) {
      if (!condition) {
        throw std::logic_error(std::string("ktheory consistency check failed: ") + what);
      }
    }
  }  // namespace

  KTheoryResult compute_ktheory(Presentation const& p, SmallCancellationReport const& report) {
    require_valid(p);
    std::size_t const n = p.num_generators();
    std::size_t const k = p.num_relators();

    KTheoryResult out;
    out.eligibility = report;
    out.conditional = report.bcc_status == BccStatus::conditional;

    if (k == 0) {
      // K_*(BG) for G free of rank n
      out.certificate    = Certificate::free_group;
      out.k0             = AbelianGroup::free(1);
      out.k1             = AbelianGroup::free(n);
      out.R              = AbelianGroup::free(1);
      out.R_presentation = IntMatrix(1, 0);
      out.ker_term       = AbelianGroup::free(0);
      out.relative_k0    = out.k0;
      out.relative_k1    = out.k1;
      out.rank_A         = 0;
      return out;
    }

    out.certificate = certificate_for(report.cla);

    auto const                          data = relator_data(p);
    std::vector<std::vector<long long>> roots, relators;
    std::vector<RepRingBlock>           blocks;
    for (auto const& rd : data) {
      roots.push_back(rd.abelianized_root);
      relators.push_back(rd.abelianized_relator);
      blocks.push_back(RepRingBlock::cyclic(rd.relator_index, rd.exponent));
    }
    IntMatrix const A   = IntMatrix::from_columns(n, roots);
    auto const      snf = smith_normal_form(A);
    ensure(snf.U * A * snf.V == snf.D, "U A V = D");
    out.rank_A = snf.rank;

    out.k1 = AbelianGroup{n - snf.rank, {}};
    for (auto const& d : snf.diagonal()) {
      if (d != 1) {
        out.k1.invariant_factors.push_back(d);
      }
    }
    out.ker_term = AbelianGroup::free(k - snf.rank);

    auto Rq            = compute_R(blocks);
    out.R              = std::move(Rq.group);
    out.R_presentation = std::move(Rq.presentation);

    out.k0          = direct_sum(out.R, out.ker_term);
    out.relative_k0 = out.ker_term;
    out.relative_k1 = direct_sum(out.k1, AbelianGroup::free(k - 1));

    // closed-form cross-checks
    std::size_t const sum_d = std::accumulate(
        data.begin(), data.end(), std::size_t{0},
        [](std::size_t acc, RelatorData const& rd) { return acc + rd.exponent; });
    ensure(out.k0.rank == sum_d + 1 - snf.rank, "rank K_0 = sum d_i + 1 - rank A");
    ensure(out.k0.is_free(), "K_0 torsion-free");
    ensure(out.k1.rank == n - snf.rank, "rank K_1 = n - rank A");
    ensure(kernel_basis(A).cols() == k - snf.rank, "rank ker A = k - rank A");
    ensure(cokernel(A.hconcat(IntMatrix::from_columns(n, relators))) == out.k1,
           "coker A agrees with coker [pi(r_i') | pi(r_i)]");
    bool const relators_vanish = std::all_of(data.begin(), data.end(), [](RelatorData const& rd) {
      return std::all_of(rd.abelianized_relator.begin(), rd.abelianized_relator.end(),
                         [](long long x) { return x == 0; });
    });
    if (relators_vanish) {
      ensure(out.k1 == AbelianGroup::free(n) && out.ker_term == AbelianGroup::free(k),
             "pi(r_i) = 0 gives K_1 = Z^n and ker = Z^k");
    }
    return out;
  }

  KTheoryResult compute_ktheory(Presentation const& p, std::size_t q_max) {
    require_valid(p);
    return compute_ktheory(p, classify(p, q_max));
  }

}  // namespace groupk

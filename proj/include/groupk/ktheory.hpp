#ifndef GROUPK_KTHEORY_HPP_
#define GROUPK_KTHEORY_HPP_

// K-theory of the reduced group C*-algebra of a Cohen-Lyndon aspherical
// presentation <s_1..s_n | r_1..r_k> with r_i = (r_i')^{d_i}:
//
//   K_0 = R + ker(Z^k -> Z^n),   K_1 = Z^n / span(pi(r_i')),
//
// where Z^k -> Z^n is the matrix A whose i-th column is the abelianised
// root pi(r_i'), and R is the direct sum of the representation rings
// R(Z/d_i) = Z^{d_i} modulo the differences of the regular classes.

#include <cstddef>
#include <string>
#include <vector>

#include "groupk/intlinalg.hpp"
#include "groupk/presentation.hpp"
#include "groupk/relator_data.hpp"
#include "groupk/smallcancel.hpp"

namespace groupk {

  //! R(Z/d) in the character basis; the regular representation is the sum
  //! of all d characters.
  struct RepRingBlock {
    std::size_t            relator_index;
    std::size_t            d;
    std::vector<long long> regular_class;  // all ones, length d

    static RepRingBlock cyclic(std::size_t relator_index, std::size_t d);
  };

  struct RepRingQuotient {
    AbelianGroup group;
    //! Columns are the identified differences of regular classes, as
    //! vectors in Z^{d_1 + ... + d_k}.
    IntMatrix presentation;
  };

  enum class Certificate { one_relator, c6, c4t4, c3t6, not_certified, free_group };

  std::string to_string(Certificate c);

  struct KTheoryResult {
    AbelianGroup k0;
    AbelianGroup k1;
    AbelianGroup R;
    IntMatrix    R_presentation;
    AbelianGroup ker_term;     // ker(+H_i -> G^ab)
    AbelianGroup relative_k0;  // K_0(BG, BH)
    AbelianGroup relative_k1;  // K_1(BG, BH)
    std::size_t  rank_A = 0;
    SmallCancellationReport eligibility;
    bool         conditional = true;
    Certificate  certificate = Certificate::not_certified;
  };

  //! n x k matrix, column i = abelianised maximal root of relator i.
  IntMatrix build_A(Presentation const& p);

  RepRingQuotient compute_R(std::vector<RepRingBlock> const& blocks);

  //! Evaluates the K-theory formulas.  An UNKNOWN CLA verdict still yields
  //! the combinatorial values, labelled NOT_CERTIFIED.  With no relators
  //! the free-group values K_0 = Z, K_1 = Z^n are returned.
  //!
  //! Throws InvalidPresentation if validate(p) reports errors, and
  //! std::logic_error if an internal consistency identity fails.
  KTheoryResult compute_ktheory(Presentation const& p, SmallCancellationReport const& report);

  KTheoryResult compute_ktheory(Presentation const& p, std::size_t q_max = default_max_q);

}  // namespace groupk

#endif  // GROUPK_KTHEORY_HPP_

#ifndef GROUPK_RELATOR_DATA_HPP_
#define GROUPK_RELATOR_DATA_HPP_

#include <cstddef>
#include <vector>

#include "groupk/presentation.hpp"
#include "groupk/word.hpp"

namespace groupk {

  //! Per-relator root data: r_i = root^exponent with root not a proper
  //! power.  <root> is the normaliser of <r_i> in the free group.
  struct RelatorData {
    std::size_t            relator_index;
    Word                   root;
    std::size_t            exponent;
    std::vector<long long> abelianized_root;
    std::vector<long long> abelianized_relator;
  };

  std::vector<RelatorData> relator_data(Presentation const& p);

}  // namespace groupk

#endif  // GROUPK_RELATOR_DATA_HPP_

#include "groupk/relator_data.hpp"

namespace groupk {

  std::vector<RelatorData> relator_data(Presentation const& p) {
    std::vector<RelatorData> out;
    out.reserve(p.num_relators());
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      auto [root, d] = maximal_root(p.relators()[i]);
      auto ab_root   = abelianize(root, p.num_generators());
      auto ab_rel    = ab_root;
      for (auto& x : ab_rel) {
        x *= static_cast<long long>(d);
      }
      out.push_back({i, std::move(root), d, std::move(ab_root), std::move(ab_rel)});
    }
    return out;
  }

}  // namespace groupk

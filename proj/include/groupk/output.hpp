#ifndef GROUPK_OUTPUT_HPP_
#define GROUPK_OUTPUT_HPP_

#include <string>

#include "json.hpp"

#include "groupk/dehn.hpp"
#include "groupk/intlinalg.hpp"
#include "groupk/ktheory.hpp"
#include "groupk/presentation.hpp"
#include "groupk/smallcancel.hpp"

namespace groupk {

  using Json = nlohmann::ordered_json;

  inline constexpr char const* tool_version = "groupk 0.1.0";

  //! {"rank": r, "torsion": [t_1, ...]}; torsion entries that do not fit a
  //! signed 64-bit integer are emitted as decimal strings.
  Json to_json(AbelianGroup const& g);
  Json to_json(SmallCancellationReport const& report);
  Json to_json(TriState const& t, Presentation const& p);

  //! OutputDocument: tool_version, presentation_echo, relators,
  //! classification and (when `k` is non-null) ktheory, in that order.
  Json output_document(Presentation const&            p,
                       SmallCancellationReport const& report,
                       KTheoryResult const*           k);

  //! Aligned human-readable rendering of an OutputDocument.  Every value is
  //! read back from the JSON document, so both formats agree.
  std::string render_text(Json const& document);

}  // namespace groupk

#endif  // GROUPK_OUTPUT_HPP_

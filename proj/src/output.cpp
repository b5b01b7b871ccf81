#include "groupk/output.hpp"

#include <algorithm>
#include <sstream>

#include "groupk/relator_data.hpp"

namespace groupk {

  namespace {
    Json integer_json(Integer const& x) {
      if (x.fits_slong_p()) {
        return x.get_si();
      }
      return x.get_str();
    }

    Json count_json(PieceCount const& c) {
      if (!c) {
        return "UNBOUNDED";
      }
      return *c;
    }

    std::string scalar(Json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      return v.dump();
    }

    std::string group_text(Json const& g) {
      AbelianGroup out{g.at("rank").get<std::size_t>(), {}};
      for (auto const& t : g.at("torsion")) {
        out.invariant_factors.emplace_back(scalar(t));
      }
      return to_string(out);
    }

    // Left-aligned columns, two-space gutter, two-space indent.
    class Table {
     public:
      void row(std::vector<std::string> cells) {
        _rows.push_back(std::move(cells));
      }
      void print(std::ostream& os) const {
        std::vector<std::size_t> width;
        for (auto const& r : _rows) {
          width.resize(std::max(width.size(), r.size()), 0);
          for (std::size_t c = 0; c < r.size(); ++c) {
            width[c] = std::max(width[c], r[c].size());
          }
        }
        for (auto const& r : _rows) {
          std::string line = " ";
          for (std::size_t c = 0; c < r.size(); ++c) {
            line += ' ' + r[c];
            if (c + 1 < r.size()) {
              line += std::string(width[c] - r[c].size() + 1, ' ');
            }
          }
          os << line << '\n';
        }
      }

     private:
      std::vector<std::vector<std::string>> _rows;
    };
  }  // namespace

  Json to_json(AbelianGroup const& g) {
    Json torsion = Json::array();
    for (auto const& t : g.invariant_factors) {
      torsion.push_back(integer_json(t));
    }
    return Json{{"rank", g.rank}, {"torsion", std::move(torsion)}};
  }

  Json to_json(SmallCancellationReport const& report) {
    Json pieces = Json::array();
    for (auto const& rp : report.piece_report.relators) {
      pieces.push_back(Json{{"relator", rp.relator_index + 1},
                            {"relator_length", rp.relator_length},
                            {"max_piece_length", rp.max_piece_length},
                            {"min_piece_count", count_json(rp.min_piece_count)},
                            {"metric_ratio", rp.metric_ratio.get_str()}});
    }
    Json t_flags = Json::object();
    for (auto const& [q, holds] : report.t_flags) {
      t_flags[std::to_string(q)] = holds;
    }
    return Json{{"piece_report", std::move(pieces)},
                {"c_max", count_json(report.c_max)},
                {"metric_lambda_star", report.metric_lambda_star.get_str()},
                {"t_flags", std::move(t_flags)},
                {"cla", to_string(report.cla)},
                {"bcc_status", to_string(report.bcc_status)}};
  }

  Json to_json(TriState const& t, Presentation const& p) {
    Json trace = Json::array();
    for (auto const& step : t.trace) {
      trace.push_back(Json{{"position", step.position},
                           {"relator", format_word(step.relator, p)},
                           {"match_length", step.match_length},
                           {"result", format_word(step.result, p)}});
    }
    return Json{{"word", format_word(t.start, p)},
                {"verdict", to_string(t.value)},
                {"trace", std::move(trace)}};
  }

  Json output_document(Presentation const&            p,
                       SmallCancellationReport const& report,
                       KTheoryResult const*           k) {
    Json relators = Json::array();
    for (auto const& rd : relator_data(p)) {
      relators.push_back(Json{{"root", format_word(rd.root, p)},
                              {"exponent", rd.exponent},
                              {"abelianized_root", rd.abelianized_root}});
    }
    Json doc{{"tool_version", tool_version},
             {"presentation_echo", format_presentation(p)},
             {"relators", std::move(relators)},
             {"classification", to_json(report)}};
    if (k != nullptr) {
      doc["ktheory"] = Json{{"k0", to_json(k->k0)},
                            {"k1", to_json(k->k1)},
                            {"R", to_json(k->R)},
                            {"relative_k0", to_json(k->relative_k0)},
                            {"relative_k1", to_json(k->relative_k1)},
                            {"rank_A", k->rank_A},
                            {"conditional", k->conditional},
                            {"certificate", to_string(k->certificate)}};
    }
    return doc;
  }

  std::string render_text(Json const& doc) {
    std::ostringstream os;
    os << doc.at("tool_version").get<std::string>() << "\n\npresentation\n";
    std::istringstream echo(doc.at("presentation_echo").get<std::string>());
    for (std::string line; std::getline(echo, line);) {
      os << "  " << line << '\n';
    }

    os << "\nrelators\n";
    Table rel;
    rel.row({"#", "root", "exponent", "abelianized_root"});
    std::size_t i = 0;
    for (auto const& r : doc.at("relators")) {
      std::string ab = "(";
      for (auto const& x : r.at("abelianized_root")) {
        ab += (ab.size() > 1 ? ", " : "") + x.dump();
      }
      rel.row({std::to_string(++i), r.at("root").get<std::string>(), r.at("exponent").dump(),
               ab + ")"});
    }
    rel.print(os);

    auto const& cls = doc.at("classification");
    os << "\nclassification\n";
    Table pieces;
    pieces.row({"relator", "length", "max_piece", "min_pieces", "ratio"});
    for (auto const& rp : cls.at("piece_report")) {
      pieces.row({rp.at("relator").dump(), rp.at("relator_length").dump(),
                  rp.at("max_piece_length").dump(), scalar(rp.at("min_piece_count")),
                  scalar(rp.at("metric_ratio"))});
    }
    pieces.print(os);
    std::string tq;
    for (auto const& [q, holds] : cls.at("t_flags").items()) {
      tq += (tq.empty() ? "" : " ") + q + ":" + (holds.get<bool>() ? "yes" : "no");
    }
    Table summary;
    summary.row({"c_max", scalar(cls.at("c_max"))});
    summary.row({"metric_lambda_star", scalar(cls.at("metric_lambda_star"))});
    summary.row({"T(q)", tq});
    summary.row({"cla", scalar(cls.at("cla"))});
    summary.row({"bcc_status", scalar(cls.at("bcc_status"))});
    summary.print(os);

    if (doc.contains("ktheory")) {
      auto const& kt = doc.at("ktheory");
      os << "\nktheory\n";
      Table t;
      t.row({"K0", group_text(kt.at("k0"))});
      t.row({"K1", group_text(kt.at("k1"))});
      t.row({"R", group_text(kt.at("R"))});
      t.row({"relative_K0", group_text(kt.at("relative_k0"))});
      t.row({"relative_K1", group_text(kt.at("relative_k1"))});
      t.row({"rank_A", kt.at("rank_A").dump()});
      t.row({"conditional", kt.at("conditional").dump()});
      t.row({"certificate", scalar(kt.at("certificate"))});
      t.print(os);
    }
    return os.str();
  }

}  // namespace groupk

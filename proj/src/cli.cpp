#include "groupk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "groupk/dehn.hpp"
#include "groupk/ktheory.hpp"
#include "groupk/output.hpp"
#include "groupk/presentation.hpp"

namespace groupk::cli {

  namespace fs = std::filesystem;

  namespace {

    class InputError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    std::string read_file(fs::path const& file) {
      std::ifstream in(file, std::ios::binary);
      if (!in || fs::is_directory(file)) {
        throw InputError("cannot read '" + file.string() + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    // Parses and validates; warnings go to `warnings`, errors throw.
    Presentation load(fs::path const& file, std::vector<std::string>& warnings) {
      Presentation p;
      try {
        p = parse_presentation(read_file(file));
      } catch (ParseError const& e) {
        throw InputError(file.string() + ":" + e.what());
      }
      auto const report = validate(p);
      std::string errors;
      for (auto const& issue : report.issues) {
        if (issue.severity == Severity::error) {
          errors += (errors.empty() ? "" : "; ") + issue.message;
        } else {
          warnings.push_back(file.string() + ": warning: " + issue.message);
        }
      }
      if (!report.ok) {
        throw InputError(file.string() + ": invalid presentation: " + errors);
      }
      return p;
    }

    Json ktheory_document(Presentation const& p, Options const& opts) {
      auto const report = classify(p, opts.max_q);
      auto const k      = compute_ktheory(p, report);
      return output_document(p, report, &k);
    }

    void emit(Json const& doc, Options const& opts, std::ostream& out) {
      if (opts.format == Format::json) {
        out << doc.dump() << '\n';
      } else {
        out << render_text(doc);
      }
    }

    template <typename F>
    int guarded(std::ostream& err, F&& body) {
      try {
        return body();
      } catch (InputError const& e) {
        err << "groupk: " << e.what() << '\n';
      } catch (std::invalid_argument const& e) {
        err << "groupk: " << e.what() << '\n';
      }
      return exit_input_error;
    }

    std::string group_summary(Json const& g) {
      AbelianGroup out{g.at("rank").get<std::size_t>(), {}};
      for (auto const& t : g.at("torsion")) {
        out.invariant_factors.emplace_back(t.is_string() ? t.get<std::string>() : t.dump());
      }
      return to_string(out);
    }

  }  // namespace

  int cmd_classify(fs::path const& file, Options const& opts, std::ostream& out,
                   std::ostream& err) {
    return guarded(err, [&] {
      std::vector<std::string> warnings;
      auto const               p = load(file, warnings);
      for (auto const& w : warnings) {
        err << w << '\n';
      }
      emit(output_document(p, classify(p, opts.max_q), nullptr), opts, out);
      return exit_ok;
    });
  }

  int cmd_ktheory(fs::path const& file, Options const& opts, std::ostream& out,
                  std::ostream& err) {
    return guarded(err, [&] {
      std::vector<std::string> warnings;
      auto const               p = load(file, warnings);
      for (auto const& w : warnings) {
        err << w << '\n';
      }
      emit(ktheory_document(p, opts), opts, out);
      return exit_ok;
    });
  }

  int cmd_word(fs::path const& file, std::string const& word, Options const& opts,
               std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      std::vector<std::string> warnings;
      auto const               p = load(file, warnings);
      for (auto const& w : warnings) {
        err << w << '\n';
      }
      Word w;
      try {
        w = parse_word(word, p);
      } catch (ParseError const& e) {
        throw InputError(std::string("--word:") + e.what());
      }
      auto const result = is_trivial(w, p);
      if (opts.format == Format::json) {
        Json doc = to_json(result, p);
        if (!opts.trace) {
          doc.erase("trace");
        }
        out << doc.dump() << '\n';
        return exit_ok;
      }
      out << to_string(result.value) << '\n';
      if (opts.trace) {
        out << "  start: " << format_word(result.start, p) << '\n';
        for (std::size_t i = 0; i < result.trace.size(); ++i) {
          auto const& s = result.trace[i];
          out << "  step " << i + 1 << ": position " << s.position << ", relator "
              << format_word(s.relator, p) << ", match " << s.match_length << " -> "
              << format_word(s.result, p) << '\n';
        }
      }
      return exit_ok;
    });
  }

  int cmd_batch(fs::path const& dir, Options const& opts, std::ostream& out, std::ostream& err) {
    std::vector<fs::path> files;
    try {
      for (auto const& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".grp") {
          files.push_back(entry.path());
        }
      }
    } catch (fs::filesystem_error const& e) {
      err << "groupk: cannot read directory '" << dir.string() << "': " << e.code().message()
          << '\n';
      return exit_input_error;
    }
    std::sort(files.begin(), files.end(),
              [](fs::path const& a, fs::path const& b) { return a.filename() < b.filename(); });

    struct Outcome {
      bool                     ok = false;
      Json                     doc;
      std::string              error;
      std::vector<std::string> warnings;
    };
    std::vector<Outcome> outcomes(files.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(files.size()); ++i) {
      try {
        auto const p   = load(files[i], outcomes[i].warnings);
        outcomes[i].doc = ktheory_document(p, opts);
        outcomes[i].ok  = true;
      } catch (std::exception const& e) {
        outcomes[i].error = e.what();
      }
    }

    bool all_ok = true;
    Json documents = Json::object();
    Json summary   = Json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
      auto const  name = files[i].filename().string();
      auto const& o    = outcomes[i];
      for (auto const& w : o.warnings) {
        err << w << '\n';
      }
      if (o.ok) {
        auto const& kt = o.doc.at("ktheory");
        documents[name] = o.doc;
        summary.push_back(Json{{"file", name},
                               {"certificate", kt.at("certificate")},
                               {"k0", kt.at("k0")},
                               {"k1", kt.at("k1")}});
      } else {
        all_ok = false;
        err << "groupk: " << o.error << '\n';
        documents[name] = Json{{"error", o.error}};
        summary.push_back(Json{{"file", name}, {"certificate", "ERROR"}, {"error", o.error}});
      }
    }

    if (opts.format == Format::json) {
      out << Json{{"documents", documents}, {"summary", summary}}.dump() << '\n';
    } else {
      for (auto const& [name, doc] : documents.items()) {
        out << "== " << name << " ==\n";
        if (doc.contains("error")) {
          out << "  ERROR: " << doc.at("error").get<std::string>() << "\n\n";
        } else {
          out << render_text(doc) << '\n';
        }
      }
      out << "summary\n";
      std::vector<std::vector<std::string>> rows{{"file", "certificate", "K0", "K1"}};
      for (auto const& s : summary) {
        if (s.at("certificate") == "ERROR") {
          rows.push_back({s.at("file").get<std::string>(), "ERROR", "-", "-"});
        } else {
          rows.push_back({s.at("file").get<std::string>(), s.at("certificate").get<std::string>(),
                          group_summary(s.at("k0")), group_summary(s.at("k1"))});
        }
      }
      std::vector<std::size_t> width(4, 0);
      for (auto const& r : rows) {
        for (std::size_t c = 0; c < 4; ++c) {
          width[c] = std::max(width[c], r[c].size());
        }
      }
      for (auto const& r : rows) {
        std::string line = " ";
        for (std::size_t c = 0; c < 4; ++c) {
          line += ' ' + r[c] + (c < 3 ? std::string(width[c] - r[c].size() + 1, ' ') : "");
        }
        out << line << '\n';
      }
    }
    return all_ok ? exit_ok : exit_batch_partial;
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohen-Lyndon aspherical presentations: classification and K-theory", "groupk"};
    app.fallthrough();
    app.require_subcommand(1);

    Options     opts;
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-q", opts.max_q, "largest q for the T(q) sweep")
        ->check(CLI::Range(std::size_t{4}, std::size_t{64}))
        ->capture_default_str();
    app.add_flag("--trace", opts.trace, "print the Dehn rewrite trace");

    fs::path file, dir;
    std::string word;

    auto* classify_cmd = app.add_subcommand("classify", "small-cancellation and CLA verdicts");
    classify_cmd->add_option("file", file, "presentation (.grp)")->required();
    auto* ktheory_cmd = app.add_subcommand("ktheory", "K_0 and K_1 of the reduced C*-algebra");
    ktheory_cmd->add_option("file", file, "presentation (.grp)")->required();
    auto* word_cmd = app.add_subcommand("word", "decide triviality with Dehn's algorithm");
    word_cmd->add_option("file", file, "presentation (.grp)")->required();
    word_cmd->add_option("--word", word, "word over the generators")->required();
    auto* batch_cmd = app.add_subcommand("batch", "run ktheory over every .grp file");
    batch_cmd->add_option("dir", dir, "directory")->required();

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_input_error;
    }
    opts.format = format == "json" ? Format::json : Format::text;

    if (classify_cmd->parsed()) {
      return cmd_classify(file, opts, out, err);
    }
    if (ktheory_cmd->parsed()) {
      return cmd_ktheory(file, opts, out, err);
    }
    if (word_cmd->parsed()) {
      return cmd_word(file, word, opts, out, err);
    }
    return cmd_batch(dir, opts, out, err);
  }

}  // namespace groupk::cli

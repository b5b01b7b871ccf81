#ifndef GROUPK_CLI_HPP_
#define GROUPK_CLI_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "groupk/smallcancel.hpp"

namespace groupk::cli {

  enum class Format { text, json };

  struct Options {
    Format      format = Format::text;
    std::size_t max_q  = default_max_q;
    bool        trace  = false;
  };

  // Exit codes.
  inline constexpr int exit_ok            = 0;
  inline constexpr int exit_batch_partial = 1;
  inline constexpr int exit_input_error   = 2;

  int cmd_classify(std::filesystem::path const& file, Options const& opts, std::ostream& out,
                   std::ostream& err);
  int cmd_ktheory(std::filesystem::path const& file, Options const& opts, std::ostream& out,
                  std::ostream& err);
  int cmd_word(std::filesystem::path const& file, std::string const& word, Options const& opts,
               std::ostream& out, std::ostream& err);
  //! Processes every *.grp file in `dir` (files may run concurrently);
  //! output is ordered by file name.
  int cmd_batch(std::filesystem::path const& dir, Options const& opts, std::ostream& out,
                std::ostream& err);

  //! Entry point shared by the `groupk` executable and the tests.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace groupk::cli

#endif  // GROUPK_CLI_HPP_

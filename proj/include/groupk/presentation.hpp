#ifndef GROUPK_PRESENTATION_HPP_
#define GROUPK_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "groupk/word.hpp"

namespace groupk {

  struct Generator {
    std::size_t index;
    std::string name;
    friend bool operator==(Generator const&, Generator const&) = default;
  };

  //! A finite presentation < s_1, ..., s_n | r_1, ..., r_k >.
  //!
  //! Relators are stored freely and cyclically reduced.  Duplicate or
  //! mutually inverse relators are representable; validate() reports them.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

    std::vector<Generator> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::size_t num_generators() const noexcept {
      return _generators.size();
    }
    std::size_t num_relators() const noexcept {
      return _relators.size();
    }

    std::optional<std::size_t> generator_index(std::string_view name) const;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    std::vector<Generator> _generators;
    std::vector<Word>      _relators;
  };

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  //! Parses the `gens: ...; rels: ...;` grammar.  Relators are freely and
  //! cyclically reduced; `[u,v]` expands to u v u^-1 v^-1 and `u^m` to the
  //! m-th power.  A relator that reduces to the empty word is an error.
  Presentation parse_presentation(std::string_view text);

  //! Parses a single word over the generators of `p` (same term grammar).
  //! The result is freely reduced and may be empty.
  Word parse_word(std::string_view text, Presentation const& p);

  std::string format_word(Word const& w, Presentation const& p);
  std::string format_presentation(Presentation const& p);

  enum class Severity { error, warning };

  struct ValidationIssue {
    Severity                   severity;
    std::string                message;
    std::optional<std::size_t> relator;  // 0-based
  };

  struct ValidationReport {
    bool                         ok = true;
    std::vector<ValidationIssue> issues;
  };

  ValidationReport validate(Presentation const& p);

  class InvalidPresentation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Throws InvalidPresentation listing the errors of validate(p).
  void require_valid(Presentation const& p);

}  // namespace groupk

#endif  // GROUPK_PRESENTATION_HPP_

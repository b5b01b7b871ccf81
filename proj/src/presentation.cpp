#include "groupk/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace groupk {

  namespace {
    bool is_identifier(std::string_view s) {
      if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    std::string where(std::size_t line, std::size_t col) {
      return std::to_string(line) + ":" + std::to_string(col);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(std::vector<std::string> generator_names,
                             std::vector<Word>        relators)
      : _relators(std::move(relators)) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < generator_names.size(); ++i) {
      auto& name = generator_names[i];
      if (!is_identifier(name)) {
        throw std::invalid_argument("invalid generator name '" + name + "'");
      }
      if (!seen.insert(name).second) {
        throw std::invalid_argument("duplicate generator name '" + name + "'");
      }
      _generators.push_back({i, std::move(name)});
    }
    for (Word const& r : _relators) {
      for (Letter l : r) {
        if (l.generator >= _generators.size()) {
          throw std::invalid_argument("relator references generator index "
                                      + std::to_string(l.generator) + " >= "
                                      + std::to_string(_generators.size()));
        }
      }
    }
  }

  std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
    for (auto const& g : _generators) {
      if (g.name == name) {
        return g.index;
      }
    }
    return std::nullopt;
  }

  ParseError::ParseError(std::string const& what, std::size_t line, std::size_t column)
      : std::runtime_error(where(line, column) + ": " + what), _line(line), _column(column) {}

  ////////////////////////////////////////////////////////////////////////
  // Tokenizer + recursive-descent parser
  ////////////////////////////////////////////////////////////////////////

  namespace {

    enum class Tok { name, integer, colon, semicolon, comma, caret, minus, lparen, rparen,
                     lbracket, rbracket, end };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t line;
      std::size_t col;
    };

    std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> out;
      std::size_t        line = 1, col = 1;
      std::size_t        i    = 0;
      auto               advance = [&](std::size_t count) {
        for (std::size_t j = 0; j < count; ++j, ++i) {
          if (text[i] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
      };
      while (i < text.size()) {
        char const c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          advance(1);
        } else if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            advance(1);
          }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t j = i;
          while (j < text.size()
                 && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
            ++j;
          }
          out.push_back({Tok::name, std::string(text.substr(i, j - i)), line, col});
          advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t j = i;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
          }
          out.push_back({Tok::integer, std::string(text.substr(i, j - i)), line, col});
          advance(j - i);
        } else {
          Tok kind;
          switch (c) {
            case ':': kind = Tok::colon; break;
            case ';': kind = Tok::semicolon; break;
            case ',': kind = Tok::comma; break;
            case '^': kind = Tok::caret; break;
            case '-': kind = Tok::minus; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '[': kind = Tok::lbracket; break;
            case ']': kind = Tok::rbracket; break;
            default:
              throw ParseError(std::string("unexpected character '") + c + "'", line, col);
          }
          out.push_back({kind, std::string(1, c), line, col});
          advance(1);
        }
      }
      out.push_back({Tok::end, "", line, col});
      return out;
    }

    char const* describe(Tok t) {
      switch (t) {
        case Tok::name: return "identifier";
        case Tok::integer: return "integer";
        case Tok::colon: return "':'";
        case Tok::semicolon: return "';'";
        case Tok::comma: return "','";
        case Tok::caret: return "'^'";
        case Tok::minus: return "'-'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbracket: return "'['";
        case Tok::rbracket: return "']'";
        case Tok::end: return "end of input";
      }
      return "token";
    }

    constexpr long long max_exponent = 1'000'000;

    class Parser {
     public:
      Parser(std::vector<Token> tokens, std::vector<std::string> const* names)
          : _tokens(std::move(tokens)), _names(names) {}

      void set_names(std::vector<std::string> const* names) {
        _names = names;
      }

      Token const& peek() const {
        return _tokens[_pos];
      }

      Token const& expect(Tok kind, char const* context) {
        Token const& t = peek();
        if (t.kind != kind) {
          throw ParseError(std::string("expected ") + describe(kind) + " " + context + ", found "
                               + (t.kind == Tok::end ? describe(Tok::end) : "'" + t.text + "'"),
                           t.line, t.col);
        }
        ++_pos;
        return t;
      }

      bool accept(Tok kind) {
        if (peek().kind == kind) {
          ++_pos;
          return true;
        }
        return false;
      }

      void expect_keyword(char const* kw) {
        Token const& t = peek();
        if (t.kind != Tok::name || t.text != kw) {
          throw ParseError(std::string("expected '") + kw + ":'", t.line, t.col);
        }
        ++_pos;
        expect(Tok::colon, (std::string("after '") + kw + "'").c_str());
      }

      bool starts_term() const {
        auto k = peek().kind;
        return k == Tok::name || k == Tok::lparen || k == Tok::lbracket;
      }

      // word := term+
      Word word() {
        if (!starts_term()) {
          Token const& t = peek();
          throw ParseError(std::string("expected a word, found ")
                               + (t.kind == Tok::end ? describe(Tok::end) : "'" + t.text + "'"),
                           t.line, t.col);
        }
        Letters letters;
        while (starts_term()) {
          Word t = term();
          letters.insert(letters.end(), t.begin(), t.end());
        }
        return Word::reduce(letters);
      }

      // term := atom ("^" integer)?
      Word term() {
        Word a = atom();
        if (accept(Tok::caret)) {
          bool const   negative = accept(Tok::minus);
          Token const& t        = expect(Tok::integer, "after '^'");
          long long    m        = 0;
          auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), m);
          if (ec != std::errc() || m > max_exponent) {
            throw ParseError("exponent out of range", t.line, t.col);
          }
          return power(a, negative ? -m : m);
        }
        return a;
      }

      // atom := name | "(" word ")" | "[" word "," word "]"
      Word atom() {
        Token const& t = peek();
        if (t.kind == Tok::name) {
          ++_pos;
          auto it = std::find(_names->begin(), _names->end(), t.text);
          if (it == _names->end()) {
            throw ParseError("unknown generator '" + t.text + "'", t.line, t.col);
          }
          Letter l = gen(static_cast<std::uint32_t>(it - _names->begin()));
          return Word::reduce(std::span<Letter const>(&l, 1));
        }
        if (accept(Tok::lparen)) {
          Word w = word();
          expect(Tok::rparen, "to close '('");
          return w;
        }
        if (accept(Tok::lbracket)) {
          Word u = word();
          expect(Tok::comma, "inside commutator");
          Word v = word();
          expect(Tok::rbracket, "to close '['");
          return u * v * invert(u) * invert(v);
        }
        throw ParseError(std::string("expected a generator, '(' or '[', found ")
                             + (t.kind == Tok::end ? describe(Tok::end) : "'" + t.text + "'"),
                         t.line, t.col);
      }

      std::vector<Token> _tokens;
      std::size_t        _pos = 0;
      std::vector<std::string> const* _names;
    };

  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    std::vector<std::string> names;
    Parser                   parser(tokenize(text), &names);

    parser.expect_keyword("gens");
    while (parser.peek().kind == Tok::name) {
      Token const& t = parser.peek();
      if (std::find(names.begin(), names.end(), t.text) != names.end()) {
        throw ParseError("duplicate generator '" + t.text + "'", t.line, t.col);
      }
      names.push_back(t.text);
      parser.accept(Tok::name);
    }
    if (names.empty()) {
      Token const& t = parser.peek();
      throw ParseError("expected at least one generator", t.line, t.col);
    }
    parser.expect(Tok::semicolon, "after generator list");

    parser.expect_keyword("rels");
    std::vector<Word> relators;
    if (parser.starts_term()) {
      do {
        Token const start = parser.peek();
        Word        w     = cyclic_reduce(parser.word()).core;
        if (w.empty()) {
          throw ParseError("relator reduces to the empty word", start.line, start.col);
        }
        relators.push_back(std::move(w));
      } while (parser.accept(Tok::comma));
    }
    parser.accept(Tok::semicolon);
    if (parser.peek().kind != Tok::end) {
      Token const& t = parser.peek();
      throw ParseError("unexpected '" + t.text + "' after relator list", t.line, t.col);
    }
    return Presentation(std::move(names), std::move(relators));
  }

  Word parse_word(std::string_view text, Presentation const& p) {
    std::vector<std::string> names;
    for (auto const& g : p.generators()) {
      names.push_back(g.name);
    }
    Parser parser(tokenize(text), &names);
    Word   w = parser.word();
    if (parser.peek().kind != Tok::end) {
      Token const& t = parser.peek();
      throw ParseError("unexpected '" + t.text + "' after word", t.line, t.col);
    }
    return w;
  }

  std::string format_word(Word const& w, Presentation const& p) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += p.generators().at(w[i].generator).name;
      if (w[i].sign < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  std::string format_presentation(Presentation const& p) {
    std::string out = "gens:";
    for (auto const& g : p.generators()) {
      out += ' ' + g.name;
    }
    out += ";\nrels:";
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      out += (i == 0 ? " " : ",\n      ") + format_word(p.relators()[i], p);
    }
    out += ";\n";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  ValidationReport validate(Presentation const& p) {
    ValidationReport report;
    auto             add = [&](Severity s, std::string msg, std::size_t i) {
      if (s == Severity::error) {
        report.ok = false;
      }
      report.issues.push_back({s, std::move(msg), i});
    };

    auto const&               rels = p.relators();
    std::vector<std::set<Word>> classes;
    classes.reserve(rels.size());
    for (std::size_t i = 0; i < rels.size(); ++i) {
      Word const& r     = rels[i];
      auto const  label = "relator " + std::to_string(i + 1);
      if (r.empty()) {
        add(Severity::error, label + " is empty", i);
      } else if (!r.is_cyclically_reduced()) {
        add(Severity::error, label + " is not cyclically reduced", i);
      }
      Word const inv = invert(r);
      classes.push_back(symmetrize(std::span<Word const>(&r, 1)));
      bool hard = false;
      for (std::size_t j = 0; j < i; ++j) {
        auto const other = "relator " + std::to_string(j + 1);
        if (rels[j] == r) {
          add(Severity::error, label + " duplicates " + other, i);
          hard = true;
        } else if (rels[j] == inv) {
          add(Severity::error, label + " is the inverse of " + other, i);
          hard = true;
        }
      }
      if (hard || r.empty()) {
        continue;
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (rels[j] != r && rels[j] != inv && classes[j].contains(r)) {
          add(Severity::warning,
              label + " shares a symmetrized class with relator " + std::to_string(j + 1), i);
        }
      }
    }
    return report;
  }

  void require_valid(Presentation const& p) {
    auto report = validate(p);
    if (report.ok) {
      return;
    }
    std::string msg = "invalid presentation:";
    for (auto const& issue : report.issues) {
      if (issue.severity == Severity::error) {
        msg += " " + issue.message + ";";
      }
    }
    msg.pop_back();
    throw InvalidPresentation(msg);
  }

}  // namespace groupk

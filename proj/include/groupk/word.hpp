#ifndef GROUPK_WORD_HPP_
#define GROUPK_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace groupk {

  // A signed generator s_g or s_g^-1.
  struct Letter {
    std::uint32_t generator = 0;
    std::int8_t   sign      = 1;  // +1 or -1

    constexpr Letter inverse() const noexcept {
      return {generator, static_cast<std::int8_t>(-sign)};
    }
    constexpr bool cancels(Letter other) const noexcept {
      return generator == other.generator && sign == -other.sign;
    }
    friend constexpr auto operator<=>(Letter, Letter) = default;
  };

  constexpr Letter gen(std::uint32_t g, int sign = 1) noexcept {
    return {g, static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
  }

  using Letters = std::vector<Letter>;

  //! A freely reduced word in the free group on some generators.
  //!
  //! The only way to obtain a Word is through free reduction, so every
  //! instance satisfies the reducedness invariant.  Words are ordered
  //! lexicographically on their letters, which is the canonical order used
  //! for symmetrized sets and the Dehn scan.
  class Word {
   public:
    using const_iterator = Letters::const_iterator;

    Word() = default;

    //! Freely reduces an arbitrary letter sequence.
    static Word reduce(std::span<Letter const> letters);

    Letters const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    Letter front() const noexcept {
      return _letters.front();
    }
    Letter back() const noexcept {
      return _letters.back();
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }

    bool is_cyclically_reduced() const noexcept {
      return _letters.size() < 2 || !_letters.front().cancels(_letters.back());
    }

    //! Cyclic shift: letters [i, n) followed by [0, i).  Requires a
    //! cyclically reduced word for the result to stay reduced.
    Word rotate(std::size_t i) const;

    friend auto operator<=>(Word const&, Word const&) = default;
    friend bool operator==(Word const&, Word const&)  = default;

   private:
    explicit Word(Letters&& reduced) : _letters(std::move(reduced)) {}
    Letters _letters;
  };

  Word free_reduce(std::span<Letter const> letters);
  Word invert(Word const& w);
  Word operator*(Word const& u, Word const& v);
  Word power(Word const& w, long long exponent);

  struct CyclicReduction {
    Word core;
    Word conjugator;
  };

  //! Returns (core, conjugator) with w == conjugator * core *
  //! conjugator^-1 and core cyclically reduced.
  CyclicReduction cyclic_reduce(Word const& w);

  struct Root {
    Word        root;
    std::size_t exponent;
  };

  //! Writes a nonempty cyclically reduced word as root^d with d maximal.
  Root maximal_root(Word const& w);

  std::vector<long long> abelianize(Word const& w, std::size_t n);

  //! All cyclic permutations of the relators and their inverses.
  std::set<Word> symmetrize(std::span<Word const> relators);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace groupk

#endif  // GROUPK_WORD_HPP_

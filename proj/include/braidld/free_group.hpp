#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidld {

  // Generators g_0, g_1, ... of F_G and x_0, x_1, ... of F_X.
  enum class Alphabet : std::uint8_t { G, X };

  using Index = std::uint64_t;

  inline constexpr std::size_t kDefaultMaxWordLength = 1'000'000;

  char alphabet_char(Alphabet a) noexcept;

  struct Letter {
    Alphabet alphabet = Alphabet::G;
    Index    index    = 0;
    int      sign     = 1;

    static Letter g(Index i, int sign = 1) noexcept {
      return {Alphabet::G, i, sign};
    }
    static Letter x(Index i, int sign = 1) noexcept {
      return {Alphabet::X, i, sign};
    }

    Letter inverse() const noexcept {
      return {alphabet, index, -sign};
    }

    bool cancels(Letter const& other) const noexcept {
      return alphabet == other.alphabet && index == other.index
             && sign == -other.sign;
    }

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  // A freely reduced word over a single alphabet. The empty word still
  // carries an alphabet tag; concatenation treats an empty operand as
  // compatible with either alphabet.
  class FreeWord {
   public:
    FreeWord() = default;
    explicit FreeWord(Alphabet a) noexcept : _alphabet(a) {}

    // Free reduction by a single stack pass. The alphabet is taken from the
    // first letter (G for empty input).
    static FreeWord reduce(std::span<Letter const> letters,
                           std::size_t max_length = kDefaultMaxWordLength);
    static FreeWord reduce(Alphabet                a,
                           std::span<Letter const> letters,
                           std::size_t max_length = kDefaultMaxWordLength);

    static FreeWord generator(Alphabet a, Index i, int sign = 1);

    Alphabet alphabet() const noexcept {
      return _alphabet;
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    // Empty words compare equal whatever their tag.
    friend bool operator==(FreeWord const& a, FreeWord const& b) noexcept {
      return a._letters == b._letters
             && (a._letters.empty() || a._alphabet == b._alphabet);
    }

   private:
    friend class WordBuilder;

    Alphabet            _alphabet = Alphabet::G;
    std::vector<Letter> _letters;
  };

  // Accumulates letters with on-the-fly free cancellation. The stack never
  // holds a cancelling adjacent pair, so finish() is already reduced.
  class WordBuilder {
   public:
    explicit WordBuilder(Alphabet    a,
                         std::size_t max_length = kDefaultMaxWordLength);

    void push(Letter l);
    void append(FreeWord const& w);
    void append_inverse(FreeWord const& w);

    std::size_t size() const noexcept {
      return _word._letters.size();
    }

    // Throws ResourceCapExceeded if the current reduced length is over cap.
    void check_cap() const;

    FreeWord finish() &&;

   private:
    FreeWord    _word;
    std::size_t _max_length;
  };

  FreeWord concat(FreeWord const& a, FreeWord const& b);
  FreeWord invert(FreeWord const& a);

  struct Leading {
    Letter                first;
    std::optional<Letter> second;
  };

  std::optional<Leading> leading(FreeWord const& a);

  std::string   to_string(Letter const& l);
  std::string   to_string(FreeWord const& w);
  std::ostream& operator<<(std::ostream& os, FreeWord const& w);

  // Whitespace-separated tokens g<k>, -g<k>, x<k>, -x<k>; empty text is the
  // identity. If `expected` is set, every token must use that alphabet and
  // the empty word is tagged with it.
  FreeWord parse_free_word(std::string_view        text,
                           std::optional<Alphabet> expected = std::nullopt);

}  // namespace braidld

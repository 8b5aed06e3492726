#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidld {

  // sigma_index^sign, index >= 1.
  struct BraidLetter {
    std::uint64_t index = 1;
    int           sign  = 1;

    BraidLetter inverse() const noexcept {
      return {index, -sign};
    }

    friend bool operator==(BraidLetter const&, BraidLetter const&) = default;
  };

  // A written word in the braid generators. No relation, not even free
  // cancellation, is ever applied implicitly: two different words may be
  // the same braid, and braid_equal() in action.hpp decides that.
  class BraidWord {
   public:
    BraidWord() = default;
    explicit BraidWord(std::vector<BraidLetter> letters);

    // Signed-integer shorthand: k is sigma_k, -k is sigma_k^{-1}.
    BraidWord(std::initializer_list<int> signed_indices);
    static BraidWord from_signed(std::span<std::int64_t const> signed_indices);

    std::span<BraidLetter const> letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    BraidLetter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    BraidWord operator*(BraidWord const& other) const;

    friend bool operator==(BraidWord const&, BraidWord const&) = default;

   private:
    std::vector<BraidLetter> _letters;
  };

  // Witness that p = p1 * sigma_n * p2 with no sigma_n^{+-1} in p1 and no
  // sigma_n^{-1} in p2.
  struct PositiveDecomposition {
    BraidWord     p1;
    std::uint64_t n = 1;
    BraidWord     p2;

    BraidWord reassemble() const;
  };

  BraidWord shift(BraidWord const& p, std::uint64_t k = 1);
  BraidWord reverse(BraidWord const& p);
  BraidWord invert(BraidWord const& p);

  // p[q] = p * s(q) * sigma_1 * s(p)^{-1}
  BraidWord bracket(BraidWord const& p, BraidWord const& q);

  // Splits at the first sigma_n if p has one and no sigma_n^{-1}.
  std::optional<PositiveDecomposition> sigma_decompose(BraidWord const& p,
                                                       std::uint64_t    n);

  std::uint64_t max_index(BraidWord const& p) noexcept;

  // Explicit free cancellation of adjacent sigma_i sigma_i^{-1} pairs.
  // Never called by the other operations.
  BraidWord free_cancel(BraidWord const& p);

  std::string   to_string(BraidWord const& p);
  std::ostream& operator<<(std::ostream& os, BraidWord const& p);

  // Whitespace-separated nonzero signed integers; empty text is the
  // identity.
  BraidWord parse_braid(std::string_view text);

}  // namespace braidld

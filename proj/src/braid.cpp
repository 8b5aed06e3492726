#include "braidld/braid.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "braidld/error.hpp"
#include "text.hpp"

namespace braidld {

  namespace {
    void validate(BraidLetter const& l) {
      if (l.index == 0) {
        throw InvalidArgument("braid generator index must be >= 1");
      }
      if (l.sign != 1 && l.sign != -1) {
        throw InvalidArgument("braid letter sign must be +1 or -1");
      }
    }

    BraidLetter from_signed_index(std::int64_t k) {
      if (k == 0) {
        throw InvalidArgument("braid generator index must be >= 1");
      }
      if (k > 0) {
        return {static_cast<std::uint64_t>(k), 1};
      }
      // -k without overflow for INT64_MIN
      return {static_cast<std::uint64_t>(-(k + 1)) + 1, -1};
    }
  }  // namespace

  BraidWord::BraidWord(std::vector<BraidLetter> letters)
      : _letters(std::move(letters)) {
    std::for_each(_letters.begin(), _letters.end(), validate);
  }

  BraidWord::BraidWord(std::initializer_list<int> signed_indices) {
    _letters.reserve(signed_indices.size());
    for (int k : signed_indices) {
      _letters.push_back(from_signed_index(k));
    }
  }

  BraidWord BraidWord::from_signed(std::span<std::int64_t const> signed_indices) {
    std::vector<BraidLetter> letters;
    letters.reserve(signed_indices.size());
    for (auto k : signed_indices) {
      letters.push_back(from_signed_index(k));
    }
    return BraidWord(std::move(letters));
  }

  BraidWord BraidWord::operator*(BraidWord const& other) const {
    std::vector<BraidLetter> out;
    out.reserve(_letters.size() + other._letters.size());
    out.insert(out.end(), _letters.begin(), _letters.end());
    out.insert(out.end(), other._letters.begin(), other._letters.end());
    BraidWord w;
    w._letters = std::move(out);
    return w;
  }

  BraidWord PositiveDecomposition::reassemble() const {
    return p1 * BraidWord(std::vector<BraidLetter>{{n, 1}}) * p2;
  }

  BraidWord shift(BraidWord const& p, std::uint64_t k) {
    std::vector<BraidLetter> out(p.letters().begin(), p.letters().end());
    for (auto& l : out) {
      if (l.index > std::numeric_limits<std::uint64_t>::max() - k) {
        throw InvalidArgument("shift overflows the generator index");
      }
      l.index += k;
    }
    return BraidWord(std::move(out));
  }

  BraidWord reverse(BraidWord const& p) {
    return BraidWord(
        std::vector<BraidLetter>(p.letters().rbegin(), p.letters().rend()));
  }

  BraidWord invert(BraidWord const& p) {
    std::vector<BraidLetter> out;
    out.reserve(p.size());
    for (auto it = p.letters().rbegin(); it != p.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return BraidWord(std::move(out));
  }

  BraidWord bracket(BraidWord const& p, BraidWord const& q) {
    return p * shift(q, 1) * BraidWord{1} * invert(shift(p, 1));
  }

  std::optional<PositiveDecomposition> sigma_decompose(BraidWord const& p,
                                                       std::uint64_t    n) {
    if (n == 0) {
      throw InvalidArgument("sigma_decompose: n must be >= 1");
    }
    auto letters = p.letters();
    auto is_n    = [n](BraidLetter const& l) { return l.index == n; };
    if (std::any_of(letters.begin(), letters.end(), [&](auto const& l) {
          return is_n(l) && l.sign < 0;
        })) {
      return std::nullopt;
    }
    auto first = std::find_if(letters.begin(), letters.end(), is_n);
    if (first == letters.end()) {
      return std::nullopt;
    }
    return PositiveDecomposition{
        BraidWord(std::vector<BraidLetter>(letters.begin(), first)),
        n,
        BraidWord(std::vector<BraidLetter>(first + 1, letters.end()))};
  }

  std::uint64_t max_index(BraidWord const& p) noexcept {
    std::uint64_t m = 0;
    for (auto const& l : p.letters()) {
      m = std::max(m, l.index);
    }
    return m;
  }

  BraidWord free_cancel(BraidWord const& p) {
    std::vector<BraidLetter> stack;
    for (auto const& l : p.letters()) {
      if (!stack.empty() && stack.back() == l.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return BraidWord(std::move(stack));
  }

  std::string to_string(BraidWord const& p) {
    if (p.empty()) {
      return "ε";
    }
    std::string s;
    for (auto const& l : p.letters()) {
      if (!s.empty()) {
        s += ' ';
      }
      if (l.sign < 0) {
        s += '-';
      }
      s += std::to_string(l.index);
    }
    return s;
  }

  std::ostream& operator<<(std::ostream& os, BraidWord const& p) {
    return os << to_string(p);
  }

  BraidWord parse_braid(std::string_view text) {
    std::vector<BraidLetter> letters;
    for (auto tok : detail::split_whitespace(text)) {
      std::string_view digits = tok;
      int              sign   = 1;
      if (!digits.empty() && digits.front() == '-') {
        sign = -1;
        digits.remove_prefix(1);
      }
      auto idx = detail::parse_unsigned(digits);
      if (!idx || *idx == 0) {
        throw ParseError("malformed braid letter '" + std::string(tok)
                         + "' (expected a nonzero signed integer)");
      }
      letters.push_back({*idx, sign});
    }
    return BraidWord(std::move(letters));
  }

}  // namespace braidld

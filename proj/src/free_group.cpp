#include "braidld/free_group.hpp"

#include <ostream>

#include "braidld/error.hpp"
#include "text.hpp"

namespace braidld {

  char alphabet_char(Alphabet a) noexcept {
    return a == Alphabet::G ? 'g' : 'x';
  }

  namespace {
    [[noreturn]] void throw_mismatch(Alphabet expected, Letter const& l) {
      throw AlphabetMismatch(std::string("letter ") + to_string(l)
                             + " does not belong to alphabet "
                             + alphabet_char(expected));
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // WordBuilder
  ////////////////////////////////////////////////////////////////////////

  WordBuilder::WordBuilder(Alphabet a, std::size_t max_length)
      : _word(a), _max_length(max_length) {}

  void WordBuilder::push(Letter l) {
    if (l.alphabet != _word._alphabet) {
      throw_mismatch(_word._alphabet, l);
    }
    auto& stack = _word._letters;
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }

  void WordBuilder::append(FreeWord const& w) {
    for (auto const& l : w.letters()) {
      push(l);
    }
  }

  void WordBuilder::append_inverse(FreeWord const& w) {
    auto ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      push(it->inverse());
    }
  }

  void WordBuilder::check_cap() const {
    if (_word._letters.size() > _max_length) {
      throw ResourceCapExceeded(_word._letters.size(), _max_length);
    }
  }

  FreeWord WordBuilder::finish() && {
    check_cap();
    return std::move(_word);
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeWord
  ////////////////////////////////////////////////////////////////////////

  FreeWord FreeWord::reduce(std::span<Letter const> letters,
                            std::size_t             max_length) {
    Alphabet a = letters.empty() ? Alphabet::G : letters.front().alphabet;
    return reduce(a, letters, max_length);
  }

  FreeWord FreeWord::reduce(Alphabet                a,
                            std::span<Letter const> letters,
                            std::size_t             max_length) {
    WordBuilder b(a, max_length);
    for (auto const& l : letters) {
      b.push(l);
    }
    return std::move(b).finish();
  }

  FreeWord FreeWord::generator(Alphabet a, Index i, int sign) {
    FreeWord w(a);
    w._letters.push_back(Letter{a, i, sign < 0 ? -1 : 1});
    return w;
  }

  FreeWord concat(FreeWord const& a, FreeWord const& b) {
    if (a.empty()) {
      return b;
    }
    if (b.empty()) {
      return a;
    }
    if (a.alphabet() != b.alphabet()) {
      throw_mismatch(a.alphabet(), b[0]);
    }
    // Concatenation of two reduced words only cancels at the seam, so no
    // cap is applied beyond what the operands already satisfy.
    WordBuilder out(a.alphabet(), a.size() + b.size());
    out.append(a);
    out.append(b);
    return std::move(out).finish();
  }

  FreeWord invert(FreeWord const& a) {
    WordBuilder out(a.alphabet(), a.size());
    out.append_inverse(a);
    return std::move(out).finish();
  }

  std::optional<Leading> leading(FreeWord const& a) {
    if (a.empty()) {
      return std::nullopt;
    }
    Leading result{a[0], std::nullopt};
    if (a.size() > 1) {
      result.second = a[1];
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Letter const& l) {
    std::string s = l.sign < 0 ? "-" : "";
    s += alphabet_char(l.alphabet);
    s += std::to_string(l.index);
    return s;
  }

  std::string to_string(FreeWord const& w) {
    if (w.empty()) {
      return "ε";
    }
    std::string s;
    for (auto const& l : w.letters()) {
      if (!s.empty()) {
        s += ' ';
      }
      s += to_string(l);
    }
    return s;
  }

  std::ostream& operator<<(std::ostream& os, FreeWord const& w) {
    return os << to_string(w);
  }

  FreeWord parse_free_word(std::string_view        text,
                           std::optional<Alphabet> expected) {
    std::vector<Letter> letters;
    for (auto tok : detail::split_whitespace(text)) {
      std::string_view rest = tok;
      int              sign = 1;
      if (!rest.empty() && rest.front() == '-') {
        sign = -1;
        rest.remove_prefix(1);
      }
      if (rest.size() < 2 || (rest.front() != 'g' && rest.front() != 'x')) {
        throw ParseError("malformed free-group letter '" + std::string(tok)
                         + "'");
      }
      Alphabet a   = rest.front() == 'g' ? Alphabet::G : Alphabet::X;
      auto     idx = detail::parse_unsigned(rest.substr(1));
      if (!idx) {
        throw ParseError("malformed generator index in '" + std::string(tok)
                         + "'");
      }
      if (expected && a != *expected) {
        throw AlphabetMismatch("letter '" + std::string(tok)
                               + "' does not belong to alphabet "
                               + alphabet_char(*expected));
      }
      letters.push_back(Letter{a, *idx, sign});
    }
    if (expected) {
      return FreeWord::reduce(*expected, letters);
    }
    return FreeWord::reduce(letters);
  }

}  // namespace braidld

#include "braidld/action.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "braidld/error.hpp"

namespace braidld {

  namespace {

    // Image of a single positive generator under one braid letter; at most
    // three letters.
    struct Image {
      std::array<Letter, 3> letters;
      std::size_t           size = 0;

      void add(Letter l) {
        letters[size++] = l;
      }
    };

    // Pushes (l)image onto `out`, inverting the image for negative letters.
    void push_image(WordBuilder& out, Image const& img, int sign) {
      if (sign > 0) {
        for (std::size_t k = 0; k < img.size; ++k) {
          out.push(img.letters[k]);
        }
      } else {
        for (std::size_t k = img.size; k-- > 0;) {
          out.push(img.letters[k].inverse());
        }
      }
    }

    // Returns false when the generator is fixed by the braid letter.
    bool g_image(Index j, BraidLetter const& s, Image& img) {
      Index const i = s.index;
      if (j != i && j != i + 1) {
        return false;
      }
      if (s.sign > 0) {
        if (j == i) {
          img.add(Letter::g(i));
          img.add(Letter::g(i + 1));
          img.add(Letter::g(i, -1));
        } else {
          img.add(Letter::g(i));
        }
      } else {
        if (j == i) {
          img.add(Letter::g(i + 1));
        } else {
          img.add(Letter::g(i + 1, -1));
          img.add(Letter::g(i));
          img.add(Letter::g(i + 1));
        }
      }
      return true;
    }

    bool x_image(Index j, BraidLetter const& s, Image& img) {
      Index const i = s.index;
      if (j != i) {
        return false;
      }
      Index const up = i + 1, down = i - 1;
      img.add(Letter::x(s.sign > 0 ? up : down));
      img.add(Letter::x(i, -1));
      img.add(Letter::x(s.sign > 0 ? down : up));
      return true;
    }

    template <typename ImageFn>
    FreeWord act(FreeWord const&     f,
                 BraidWord const&    p,
                 ActionConfig const& cfg,
                 Alphabet            alphabet,
                 ImageFn&&           image_of) {
      cfg.validate();
      if (!f.empty() && f.alphabet() != alphabet) {
        throw AlphabetMismatch(std::string("expected a word over ")
                               + alphabet_char(alphabet) + ", got "
                               + to_string(f));
      }
      FreeWord current = f.empty() ? FreeWord(alphabet) : f;
      for (auto const& s : p.letters()) {
        WordBuilder out(alphabet, cfg.max_word_length);
        for (auto const& l : current.letters()) {
          Image img;
          if (image_of(l.index, s, img)) {
            push_image(out, img, l.sign);
          } else {
            out.push(l);
          }
        }
        current = std::move(out).finish();
      }
      return current;
    }

  }  // namespace

  void ActionConfig::validate() const {
    if (max_word_length == 0) {
      throw InvalidArgument("max_word_length must be >= 1");
    }
  }

  FreeWord act_g(FreeWord const& f, BraidWord const& p, ActionConfig const& cfg) {
    return act(f, p, cfg, Alphabet::G, g_image);
  }

  FreeWord act_x(FreeWord const& f, BraidWord const& p, ActionConfig const& cfg) {
    return act(f, p, cfg, Alphabet::X, x_image);
  }

  FreeWord phi(FreeWord const& f) {
    if (!f.empty() && f.alphabet() != Alphabet::X) {
      throw AlphabetMismatch("phi expects a word over x, got " + to_string(f));
    }
    WordBuilder out(Alphabet::G, std::numeric_limits<std::size_t>::max());
    for (auto const& l : f.letters()) {
      if (l.sign > 0) {
        for (Index n = 0; n <= l.index; ++n) {
          out.push(Letter::g(n));
        }
      } else {
        for (Index n = l.index + 1; n-- > 0;) {
          out.push(Letter::g(n, -1));
        }
      }
    }
    return std::move(out).finish();
  }

  FreeWord phi_inv(FreeWord const& f) {
    if (!f.empty() && f.alphabet() != Alphabet::G) {
      throw AlphabetMismatch("phi_inv expects a word over g, got "
                             + to_string(f));
    }
    WordBuilder out(Alphabet::X, std::numeric_limits<std::size_t>::max());
    for (auto const& l : f.letters()) {
      if (l.index == 0) {
        out.push(Letter::x(0, l.sign));
        continue;
      }
      // g_{i+1} -> x_i^{-1} x_{i+1}
      Letter const a = Letter::x(l.index - 1, -1), b = Letter::x(l.index);
      if (l.sign > 0) {
        out.push(a);
        out.push(b);
      } else {
        out.push(b.inverse());
        out.push(a.inverse());
      }
    }
    return std::move(out).finish();
  }

  bool braid_is_identity(BraidWord const& p, ActionConfig const& cfg) {
    Index const top = max_index(p) + 1;
    for (Index j = 1; j <= top; ++j) {
      auto gj = FreeWord::generator(Alphabet::G, j);
      if (act_g(gj, p, cfg) != gj) {
        return false;
      }
    }
    return true;
  }

  bool braid_equal(BraidWord const& p, BraidWord const& q, ActionConfig const& cfg) {
    Index const top = std::max(max_index(p), max_index(q)) + 1;
    for (Index j = 1; j <= top; ++j) {
      auto gj = FreeWord::generator(Alphabet::G, j);
      if (act_g(gj, p, cfg) != act_g(gj, q, cfg)) {
        return false;
      }
    }
    return true;
  }

  bool leans_right_at(FreeWord const& f, std::uint64_t n) {
    auto lead = leading(f);
    if (!lead || lead->first.alphabet != Alphabet::X || lead->first.sign < 0) {
      return false;
    }
    if (lead->first.index > n) {
      return true;
    }
    return lead->first.index == n && lead->second && lead->second->sign < 0
           && lead->second->index > n;
  }

  std::vector<FreeWord> act_conj_sequence(std::span<FreeWord const> fs,
                                          BraidWord const&          p,
                                          ActionConfig const&       cfg) {
    cfg.validate();
    std::vector<FreeWord> seq(fs.begin(), fs.end());
    auto conj = [&](FreeWord const& a, FreeWord const& b) {
      WordBuilder out(Alphabet::G, cfg.max_word_length);
      out.append(a);
      out.append(b);
      out.append_inverse(a);
      return std::move(out).finish();
    };
    for (auto const& s : p.letters()) {
      if (s.index + 1 > seq.size()) {
        throw PositionOutOfRange("braid letter sigma_" + std::to_string(s.index)
                                 + " needs position " + std::to_string(s.index + 1)
                                 + " but the sequence has "
                                 + std::to_string(seq.size()) + " entries");
      }
      auto& a = seq[s.index - 1];
      auto& b = seq[s.index];
      if (s.sign > 0) {
        FreeWord next = conj(a, b);
        b             = std::move(a);
        a             = std::move(next);
      } else {
        FreeWord next = conj(invert(b), a);
        a             = std::move(b);
        b             = std::move(next);
      }
    }
    return seq;
  }

}  // namespace braidld

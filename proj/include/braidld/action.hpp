#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "braidld/braid.hpp"
#include "braidld/free_group.hpp"

namespace braidld {

  struct ActionConfig {
    // Cap on every intermediate reduced image word.
    std::size_t max_word_length = kDefaultMaxWordLength;

    // Throws InvalidArgument when max_word_length is 0.
    void validate() const;
  };

  // Artin action of braid words on F_G, applied letter by letter from the
  // left, so (f)p1p2 = ((f)p1)p2:
  //
  //   (g_i)s_i     = g_i g_{i+1} g_i^{-1}     (g_i)s_i^{-1}     = g_{i+1}
  //   (g_{i+1})s_i = g_i                      (g_{i+1})s_i^{-1} = g_{i+1}^{-1} g_i g_{i+1}
  //
  // and every other generator is fixed. g_0 is never moved. The image is
  // reduced after each braid letter.
  FreeWord act_g(FreeWord const&     f,
                 BraidWord const&    p,
                 ActionConfig const& cfg = {});

  // The isomorphism F_X -> F_G, (x_i) -> g_0 g_1 ... g_i.
  FreeWord phi(FreeWord const& f);

  // Its inverse, g_0 -> x_0, g_{i+1} -> x_i^{-1} x_{i+1}.
  FreeWord phi_inv(FreeWord const& f);

  // The induced action on F_X, computed directly from
  //   (x_i)s_i^{+-1} = x_{i+-1} x_i^{-1} x_{i-+1},  (x_j)s_i^{+-1} = x_j.
  FreeWord act_x(FreeWord const&     f,
                 BraidWord const&    p,
                 ActionConfig const& cfg = {});

  // True iff p is the identity braid: p fixes g_1 .. g_{max_index(p)+1}.
  // Relies on faithfulness of the Artin action.
  bool braid_is_identity(BraidWord const& p, ActionConfig const& cfg = {});

  // Same answer as braid_is_identity(p * invert(q)), computed by comparing
  // the images of g_1 .. g_{M+1} under p and under q separately.
  bool braid_equal(BraidWord const&    p,
                   BraidWord const&    q,
                   ActionConfig const& cfg = {});

  // f begins with x_m, or with x_n x_m^{-1}, for some m > n.
  bool leans_right_at(FreeWord const& f, std::uint64_t n);

  // Braid action on a finite sequence in F_G with the conjugation LD
  // operation a * b = a b a^{-1}; positions are 1-based:
  //   s_i      : (a_i, a_{i+1}) -> (a_i a_{i+1} a_i^{-1}, a_i)
  //   s_i^{-1} : (a_i, a_{i+1}) -> (a_{i+1}, a_{i+1}^{-1} a_i a_{i+1})
  // Throws PositionOutOfRange if some letter needs position i+1 > size.
  std::vector<FreeWord> act_conj_sequence(std::span<FreeWord const> fs,
                                          BraidWord const&          p,
                                          ActionConfig const&       cfg = {});

}  // namespace braidld

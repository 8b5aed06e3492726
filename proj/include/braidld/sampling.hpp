#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "braidld/braid.hpp"
#include "braidld/free_group.hpp"
#include "braidld/ld_term.hpp"

namespace braidld {

  // splitmix64 finaliser; derives independent per-case seeds.
  std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

  // Random words and terms for the property suites.
  class Sampler {
   public:
    explicit Sampler(std::uint64_t seed) : _rng(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
    int           sign();

    // Length uniform in [0, max_length], indices in [1, max_index].
    BraidWord braid_word(std::size_t max_length, std::uint64_t max_index);

    // Length uniform in [1, max_length]; at least one sigma_n and no
    // sigma_n^{-1}. Requires 1 <= n <= max_index.
    BraidWord sigma_positive(std::uint64_t n,
                             std::size_t   max_length,
                             std::uint64_t max_index);

    // Reduced word with indices in [0, max_index]. When `prefix` is given
    // the word starts with exactly those letters (which must be reduced)
    // and has total length in [prefix.size(), max(prefix.size(), max_length)].
    FreeWord free_word(Alphabet                  a,
                       std::size_t               max_length,
                       std::uint64_t             max_index,
                       std::vector<Letter> const& prefix = {});

    // Uniformly chosen leaf count in [1, max_size], random shape.
    LdTerm term(std::size_t max_size);
    LdTerm term_of_size(std::size_t size);

   private:
    std::mt19937_64 _rng;
  };

}  // namespace braidld

#include "braidld/sampling.hpp"

#include <algorithm>

#include "braidld/error.hpp"

namespace braidld {

  std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t Sampler::uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(_rng);
  }

  int Sampler::sign() {
    return uniform(0, 1) == 0 ? 1 : -1;
  }

  BraidWord Sampler::braid_word(std::size_t max_length, std::uint64_t max_index) {
    std::size_t              len = uniform(0, max_length);
    std::vector<BraidLetter> letters;
    letters.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
      letters.push_back({uniform(1, max_index), sign()});
    }
    return BraidWord(std::move(letters));
  }

  BraidWord Sampler::sigma_positive(std::uint64_t n,
                                    std::size_t   max_length,
                                    std::uint64_t max_index) {
    if (n == 0 || n > max_index || max_length == 0) {
      throw InvalidArgument("sigma_positive: need 1 <= n <= max_index");
    }
    std::size_t              len    = uniform(1, max_length);
    std::size_t              forced = uniform(0, len - 1);
    std::vector<BraidLetter> letters;
    letters.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
      if (k == forced) {
        letters.push_back({n, 1});
        continue;
      }
      std::uint64_t i = uniform(1, max_index);
      letters.push_back({i, i == n ? 1 : sign()});
    }
    return BraidWord(std::move(letters));
  }

  FreeWord Sampler::free_word(Alphabet                   a,
                              std::size_t                max_length,
                              std::uint64_t              max_index,
                              std::vector<Letter> const& prefix) {
    std::size_t lo  = prefix.size();
    std::size_t len = uniform(lo, std::max(lo, max_length));
    std::vector<Letter> letters(prefix);
    while (letters.size() < len) {
      Letter l{a, uniform(0, max_index), sign()};
      if (!letters.empty() && letters.back().cancels(l)) {
        continue;
      }
      letters.push_back(l);
    }
    return FreeWord::reduce(a, letters);
  }

  LdTerm Sampler::term(std::size_t max_size) {
    return term_of_size(uniform(1, std::max<std::size_t>(1, max_size)));
  }

  LdTerm Sampler::term_of_size(std::size_t size) {
    if (size <= 1) {
      return LdTerm::leaf();
    }
    std::size_t left = uniform(1, size - 1);
    LdTerm      l    = term_of_size(left);
    return l * term_of_size(size - left);
  }

}  // namespace braidld

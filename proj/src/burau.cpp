#include "burau.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace braidld::detail {

  namespace {

    __extension__ typedef unsigned __int128 Wide;

    constexpr std::uint64_t kModulus = (std::uint64_t(1) << 61) - 1;

    // Two arbitrary evaluation points; a collision at both is negligible.
    constexpr std::array<std::uint64_t, 2> kPoints = {0x1d872b41c3a5f0e9 % kModulus,
                                                      0x0b5ad4eceda1ce2b % kModulus};

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
      auto r = static_cast<Wide>(a) * b;
      auto s = static_cast<std::uint64_t>(r & kModulus) + static_cast<std::uint64_t>(r >> 61);
      return s >= kModulus ? s - kModulus : s;
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) {
      auto s = a + b;
      return s >= kModulus ? s - kModulus : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
      return a >= b ? a - b : a + kModulus - b;
    }
    std::uint64_t inverse(std::uint64_t a) {
      std::uint64_t r = 1, e = kModulus - 2;
      while (e) {
        if (e & 1) {
          r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
      }
      return r;
    }

    using Matrix = std::vector<std::uint64_t>;  // row-major, n x n

    Matrix burau(BraidWord const& p, std::size_t n, std::uint64_t t) {
      std::uint64_t const ti = inverse(t);
      Matrix              m(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = 1;
      }
      for (auto const& l : p.letters()) {
        // Right multiplication by the 2x2 block [[a b] [c d]] at (i, i+1).
        std::size_t const i = l.index - 1;
        std::uint64_t     a, b, c, d;
        if (l.sign > 0) {
          a = sub(1, t), b = t, c = 1, d = 0;
        } else {
          a = 0, b = 1, c = ti, d = sub(1, ti);
        }
        for (std::size_t r = 0; r < n; ++r) {
          auto& x = m[r * n + i];
          auto& y = m[r * n + i + 1];
          auto  nx = add(mul(x, a), mul(y, c));
          auto  ny = add(mul(x, b), mul(y, d));
          x = nx, y = ny;
        }
      }
      return m;
    }

  }  // namespace

  bool burau_separates(BraidWord const& p, BraidWord const& q) {
    std::size_t const n = std::max(max_index(p), max_index(q)) + 1;
    for (auto t : kPoints) {
      if (burau(p, n, t) != burau(q, n, t)) {
        return true;
      }
    }
    return false;
  }

}  // namespace braidld::detail

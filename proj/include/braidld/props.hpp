#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "braidld/action.hpp"

namespace braidld {

  struct SampleBounds {
    std::size_t   braid_length = 12;
    std::uint64_t braid_index  = 6;
    std::size_t   word_length  = 12;
    std::uint64_t word_index   = 6;
    std::size_t   term_size    = 7;
  };

  struct RunReport {
    std::string                suite;
    std::size_t                cases        = 0;
    std::size_t                failures     = 0;
    // Cases abandoned because a word hit the length cap.
    std::size_t                inconclusive = 0;
    std::uint64_t              seed         = 0;
    std::optional<std::string> first_failure;

    bool ok() const noexcept {
      return failures == 0;
    }
  };

  std::span<std::string_view const> suite_names() noexcept;
  bool                              is_suite(std::string_view name) noexcept;

  // Runs one named property suite. Deterministic in (suite, cases, seed,
  // cfg, bounds): case k draws from its own generator seeded with
  // mix_seed(seed, k). The `relations` suite is exhaustive and ignores
  // `cases`. Throws InvalidArgument for an unknown suite name.
  RunReport prop_run(std::string_view    suite,
                     std::size_t         cases,
                     std::uint64_t       seed,
                     ActionConfig const& cfg    = {},
                     SampleBounds const& bounds = {});

  std::string render(RunReport const& report);

}  // namespace braidld

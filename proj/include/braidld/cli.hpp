#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include "braidld/free_group.hpp"

namespace braidld::cli {

  enum ExitCode : int {
    kYes           = 0,
    kNo            = 1,
    kParseError    = 2,
    kResourceCap   = 3,
    kUnknown       = 4,
    kNotApplicable = 5,
  };

  // Environment variable holding the default word-length cap.
  inline constexpr char const* kMaxLengthEnv = "BRAIDLD_MAX_WORD_LENGTH";

  struct Options {
    std::size_t default_max_word_length = kDefaultMaxWordLength;
  };

  // Reads kMaxLengthEnv if set; malformed values are ignored.
  Options options_from_environment();

  // Dispatches one command line (without the program name). Text or JSON
  // goes to `out`, diagnostics to `err`; the return value is the exit code.
  int run(std::span<std::string const> args,
          std::ostream&                out,
          std::ostream&                err,
          Options const&               options = {});

  std::string usage();

}  // namespace braidld::cli

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "zdg/limits.hpp"
#include "zdg/spectra.hpp"

namespace zdg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kUsageError = 2,
  kResourceCap = 3,
};

enum class Format { Json, Csv, Text, Dot };

std::optional<Format> parse_format(std::string_view s);
std::string_view to_string(Format f);

/// Inclusive integer interval written "a..b" (or a single "a").
struct Range {
  std::int64_t lo = 2;
  std::int64_t hi = 2;
};

/// Throws zdg::InvalidArgument on malformed text.
Range parse_range(std::string_view text);

struct RunConfig {
  Range m_range{2, 4};
  Range n_range{2, 6};
  Limits limits;
  Tolerances tolerances;
  double match_tolerance = 1e-8;
  Format format = Format::Text;

  /// Ranges non-empty with lower bounds >= 2, dense_cap <= size_cap.
  void validate() const;
};

/// Caps from ZDG_SIZE_CAP / ZDG_DENSE_CAP when set, built-in defaults otherwise.
Limits default_limits();

}  // namespace zdg::cli

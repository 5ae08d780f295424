#pragma once

#include <cstdint>

namespace zdg {

/// Resource caps on explicit graph construction and dense eigen-analysis.
struct Limits {
  std::uint64_t size_cap = 20000;
  std::uint64_t dense_cap = 3000;
};

}  // namespace zdg

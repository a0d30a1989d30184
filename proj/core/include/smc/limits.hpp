#pragma once

#include <cstddef>

namespace smc {

/// Process-wide size caps. Set once at startup (CLI flags, test fixtures);
/// reads are atomic so concurrent evaluation is safe.
struct Limits {
  /// Max entries in any single differential or chain-map block.
  std::size_t block_entries = 4096;
  /// Max number of unknowns in an assembled linear system.
  std::size_t system_unknowns = 6000;
};

Limits limits();
void set_limits(const Limits& l);

/// Throws ResourceError if a rows x cols block exceeds the block cap.
void check_block(std::size_t rows, std::size_t cols, const char* what);

/// RAII override used by tests.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace smc

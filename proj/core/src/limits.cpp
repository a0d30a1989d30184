#include "smc/limits.hpp"

#include <atomic>
#include <string>

#include "smc/error.hpp"

namespace smc {
namespace {
std::atomic<std::size_t> g_block_entries{Limits{}.block_entries};
std::atomic<std::size_t> g_system_unknowns{Limits{}.system_unknowns};
}  // namespace

Limits limits() {
  return Limits{g_block_entries.load(std::memory_order_relaxed),
                g_system_unknowns.load(std::memory_order_relaxed)};
}

void set_limits(const Limits& l) {
  g_block_entries.store(l.block_entries, std::memory_order_relaxed);
  g_system_unknowns.store(l.system_unknowns, std::memory_order_relaxed);
}

void check_block(std::size_t rows, std::size_t cols, const char* what) {
  const std::size_t cap = g_block_entries.load(std::memory_order_relaxed);
  if (rows * cols > cap) {
    throw ResourceError(std::string(what) + ": block " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds cap of " + std::to_string(cap) +
                        " entries");
  }
}

ScopedLimits::ScopedLimits(const Limits& l) : saved_(limits()) { set_limits(l); }
ScopedLimits::~ScopedLimits() { set_limits(saved_); }

}  // namespace smc

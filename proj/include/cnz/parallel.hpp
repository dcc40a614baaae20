#pragma once

#include <cstdint>
#include <exception>
#include <vector>

#include <omp.h>

namespace cnz {

/// Thread count for the OpenMP kernels; 0 keeps the OpenMP default.
void set_thread_count(int threads);
int thread_count();

/// Splits [0, count) into one contiguous block per thread and calls
/// body(begin, end, block) for each; block b covers lower indices than
/// block b + 1, so per-block results concatenate in index order.
/// Returns the number of blocks. Exceptions are rethrown on the caller.
template <class Body>
int parallel_blocks(std::uint64_t count, Body&& body) {
  int blocks = thread_count();
  if (count < static_cast<std::uint64_t>(blocks)) blocks = count == 0 ? 1 : static_cast<int>(count);
  std::vector<std::exception_ptr> errors(blocks);
#pragma omp parallel for num_threads(blocks) schedule(static, 1)
  for (int b = 0; b < blocks; ++b) {
    std::uint64_t begin = count * b / blocks;
    std::uint64_t end = count * (b + 1) / blocks;
    try {
      body(begin, end, b);
    } catch (...) {
      errors[b] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return blocks;
}

}  // namespace cnz

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kasami {

unsigned default_workers() noexcept;

/// Splits [0, total) into a fixed number of chunks (independent of `workers`),
/// runs `work(state, begin, end)` on each, and folds the chunk states left to
/// right with `merge(acc, chunk)`. Chunk boundaries and merge order do not
/// depend on the worker count, so results are schedule-independent.
template <class State, class Init, class Work, class Merge>
State parallel_chunks(std::uint64_t total, unsigned workers, Init init, Work work, Merge merge) {
  constexpr std::uint64_t kMaxChunks = 256;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(total, kMaxChunks));
  std::vector<State> states;
  states.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) states.push_back(init());

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        work(states[c], total * c / chunks, total * (c + 1) / chunks);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, chunks));
  if (threads == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  State acc = std::move(states[0]);
  for (std::uint64_t c = 1; c < chunks; ++c) merge(acc, states[c]);
  return acc;
}

}  // namespace kasami

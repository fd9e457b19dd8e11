#pragma once

// Process-wide search settings and deterministic parallel helpers.
//
// Parallel loops always report the result of the smallest successful index,
// so answers do not depend on the thread count. Loops started from inside a
// worker run serially.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace wittlab {

void set_search_threads(unsigned threads);
unsigned search_threads();

/// Wall-clock cap for searches started after this call; nullopt disables it.
void set_search_budget(std::optional<std::chrono::milliseconds> budget);
/// Throws ResourceError once the budget is spent.
void check_budget();

namespace detail {
bool in_search_worker();
struct WorkerScope {
  WorkerScope();
  ~WorkerScope();
  bool previous;
};
}  // namespace detail

/// Smallest index i in [0, count) for which body(i) yields a value.
template <class T, class Body>
std::optional<std::pair<std::size_t, T>> parallel_first(std::size_t count, Body&& body) {
  unsigned threads = std::min<std::size_t>(search_threads(), count);
  if (threads <= 1 || detail::in_search_worker()) {
    for (std::size_t i = 0; i < count; ++i) {
      if (std::optional<T> r = body(i)) return std::pair{i, std::move(*r)};
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mutex;
  std::optional<std::pair<std::size_t, T>> result;
  std::exception_ptr error;
  std::size_t error_index = count;

  auto worker = [&] {
    detail::WorkerScope scope;
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      try {
        std::optional<T> r = body(i);
        if (!r) continue;
        std::lock_guard lock(mutex);
        if (i < best.load()) {
          best.store(i);
          result.emplace(i, std::move(*r));
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        if (i < best.load()) best.store(i);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error && (!result || error_index < result->first)) std::rethrow_exception(error);
  return result;
}

/// body(i) for every i, results in index order.
template <class T, class Body>
std::vector<T> parallel_map(std::size_t count, Body&& body) {
  std::vector<std::optional<T>> slots(count);
  unsigned threads = std::min<std::size_t>(search_threads(), count);
  if (threads <= 1 || detail::in_search_worker()) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(body(i));
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::exception_ptr error;
    std::size_t error_index = count;
    auto worker = [&] {
      detail::WorkerScope scope;
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          slots[i].emplace(body(i));
        } catch (...) {
          std::lock_guard lock(mutex);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace wittlab

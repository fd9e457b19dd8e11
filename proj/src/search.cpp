#include "wittlab/search.hpp"

#include "wittlab/errors.hpp"

namespace wittlab {

namespace {

std::atomic<unsigned> g_threads{1};
// steady_clock ticks; 0 means no deadline.
std::atomic<std::chrono::steady_clock::rep> g_deadline{0};
thread_local bool t_in_worker = false;

}  // namespace

void set_search_threads(unsigned threads) { g_threads.store(threads == 0 ? 1 : threads); }

unsigned search_threads() { return g_threads.load(); }

void set_search_budget(std::optional<std::chrono::milliseconds> budget) {
  if (!budget) {
    g_deadline.store(0);
    return;
  }
  auto deadline = std::chrono::steady_clock::now() + *budget;
  g_deadline.store(deadline.time_since_epoch().count());
}

void check_budget() {
  auto deadline = g_deadline.load(std::memory_order_relaxed);
  if (deadline == 0) return;
  if (std::chrono::steady_clock::now().time_since_epoch().count() > deadline) {
    throw ResourceError("search budget exhausted");
  }
}

namespace detail {

bool in_search_worker() { return t_in_worker; }

WorkerScope::WorkerScope() : previous(t_in_worker) { t_in_worker = true; }

WorkerScope::~WorkerScope() { t_in_worker = previous; }

}  // namespace detail

}  // namespace wittlab

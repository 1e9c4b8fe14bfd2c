#include "mrlab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace mrlab {

namespace {

std::atomic<unsigned> g_threads{1};
thread_local bool t_inside = false;

unsigned resolve(unsigned count) {
  if (count != 0) return count;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

void set_thread_count(unsigned count) { g_threads.store(resolve(count)); }

unsigned thread_count() { return g_threads.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1 || t_inside || n < 64) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, &errors, w, begin, end] {
      t_inside = true;
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  t_inside = true;
  try {
    body(0, std::min(n, chunk));
  } catch (...) {
    errors[0] = std::current_exception();
  }
  t_inside = false;
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double parallel_max(std::size_t n, const std::function<double(std::size_t)>& f) {
  std::vector<double> partial(n, 0.0);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) partial[i] = f(i);
  });
  double m = n ? partial.front() : 0.0;
  for (double v : partial) m = std::max(m, v);
  return m;
}

}  // namespace mrlab

#pragma once

#include <cstddef>
#include <functional>

namespace mrlab {

/// Worker count used by parallel_for; 0 selects hardware concurrency.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Runs body(begin, end) over a static partition of [0, n). Work items must
/// be independent; reductions are left to the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

/// max_i f(i), order independent and therefore identical for every thread count.
double parallel_max(std::size_t n, const std::function<double(std::size_t)>& f);

}  // namespace mrlab

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace spanv {

// Worker count for parallel_map; 0 means std::thread::hardware_concurrency().
inline std::atomic<unsigned>& parallelism() {
  static std::atomic<unsigned> n{0};
  return n;
}

// f(0), ..., f(n-1) evaluated on a small thread pool. Results come back in
// index order and the first exception (by index) is rethrown, so callers see
// the same outcome as a serial loop.
template <class F>
auto parallel_map(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  unsigned workers = parallelism().load();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

  std::vector<R> out;
  out.reserve(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
    return out;
  }
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
          try {
            slots[i].emplace(f(i));
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace spanv

#ifndef HANPIECE_PARALLEL_H_
#define HANPIECE_PARALLEL_H_

#include <algorithm>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace hanpiece {

// Applies fn to every element with up to `jobs` threads over contiguous
// chunks. Results keep input order. If several elements throw, the
// exception of the lowest-indexed chunk is rethrown.
template <typename T, typename Fn>
auto ParallelMap(const std::vector<T>& items, Fn fn, int jobs)
    -> std::vector<std::invoke_result_t<Fn, const T&>> {
  using R = std::invoke_result_t<Fn, const T&>;
  std::vector<R> out(items.size());
  const size_t workers =
      std::min<size_t>(std::max(jobs, 1), std::max<size_t>(items.size(), 1));
  if (workers <= 1) {
    for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const size_t chunk = (items.size() + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      const size_t begin = w * chunk;
      const size_t end = std::min(items.size(), begin + chunk);
      try {
        for (size_t i = begin; i < end; ++i) out[i] = fn(items[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace hanpiece

#endif  // HANPIECE_PARALLEL_H_

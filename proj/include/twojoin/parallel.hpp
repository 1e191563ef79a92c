#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace twojoin::detail {

// Smallest index i in [0, count) with fn(i) engaged, together with that
// value. Workers claim indices in increasing order and stop once past the
// best hit, so every index below the answer is evaluated and the result
// equals the sequential scan.
template <class Fn>
auto first_hit(std::size_t count, unsigned threads, Fn&& fn)
    -> std::optional<std::pair<std::size_t, typename std::invoke_result_t<Fn&, std::size_t>::value_type>> {
  using Value = typename std::invoke_result_t<Fn&, std::size_t>::value_type;
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto r = fn(i)) return std::pair{i, std::move(*r)};
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mu;
  std::optional<Value> result;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      if (auto r = fn(i)) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best.store(i);
          result = std::move(r);
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (!result) return std::nullopt;
  return std::pair{best.load(), std::move(*result)};
}

// Runs fn(i) for every i in [0, count), spreading indices over `threads`
// workers. fn receives (i, worker id).
template <class Fn>
void for_each_index(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i, t);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace twojoin::detail

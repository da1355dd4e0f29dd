#pragma once

// Static block partitioning of index ranges across std::thread workers.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace belsf {

/// Calls body(worker, begin, end) on `jobs` contiguous blocks of [0, total).
/// Exceptions from workers are rethrown (lowest worker index first).
template <class Body>
void parallel_blocks(std::size_t total, unsigned jobs, Body&& body) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (jobs == 1) {
    body(0U, std::size_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  const std::size_t chunk = (total + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t b = std::min(total, w * chunk), e = std::min(total, b + chunk);
    threads.emplace_back([&, w, b, e] {
      try {
        body(w, b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// True iff pred(i) holds for every i in [0, total).
template <class Pred>
bool parallel_all(std::size_t total, unsigned jobs, Pred&& pred) {
  std::vector<char> ok(std::max(1U, jobs), 1);
  parallel_blocks(total, jobs, [&](unsigned w, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      if (!pred(i)) {
        ok[w] = 0;
        return;
      }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

}  // namespace belsf

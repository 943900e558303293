#include "kekulattice/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace kekulattice {

namespace {

std::atomic<int> g_threads{0};

std::size_t resolve_threads(std::size_t work_items) {
  int requested = g_threads.load();
  if (requested <= 0) {
    requested = static_cast<int>(std::thread::hardware_concurrency());
  }
  const auto n = static_cast<std::size_t>(std::max(requested, 1));
  return std::min(n, std::max<std::size_t>(work_items, 1));
}

}  // namespace

void set_worker_threads(int threads) { g_threads.store(std::max(threads, 0)); }

int worker_threads() { return static_cast<int>(resolve_threads(~std::size_t{0})); }

double pairwise_sum(std::vector<double>& values) {
  if (values.empty()) {
    return 0.0;
  }
  std::size_t n = values.size();
  while (n > 1) {
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) {
      values[i] += values[i + half];
    }
    n = half;
  }
  return values.front();
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = resolve_threads(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      body(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    pool.emplace_back(run);
  }
  run();
  for (auto& th : pool) {
    th.join();
  }
}

double block_sum(std::size_t count, const std::function<double(std::size_t)>& f) {
  const std::size_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t begin = b * kReductionBlock;
    const std::size_t end = std::min(count, begin + kReductionBlock);
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      acc += f(i);
    }
    partial[b] = acc;
  });
  return pairwise_sum(partial);
}

}  // namespace kekulattice

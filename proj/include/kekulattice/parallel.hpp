#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace kekulattice {

// Worker count used by the grid reductions. 0 selects
// std::thread::hardware_concurrency().
void set_worker_threads(int threads);
int worker_threads();

// Points per reduction block. Block partial sums are formed sequentially and
// then combined pairwise in block order, so the result does not depend on
// how many workers took part.
inline constexpr std::size_t kReductionBlock = 256;

double pairwise_sum(std::vector<double>& values);

// Sum of f(i) for i in [0, count), evaluated block-wise on the worker pool.
double block_sum(std::size_t count, const std::function<double(std::size_t)>& f);

// Runs body(i) for i in [0, count) on the worker pool. body must only write
// to slot i of any shared output.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace kekulattice

#include "hapsim/parallel.hpp"

#include <future>
#include <thread>
#include <vector>

namespace hapsim {

unsigned default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

void parallel_chunks(std::size_t n, unsigned jobs,
                     const std::function<void(std::size_t, std::size_t)>& chunk_fn) {
  if (n == 0) return;
  if (jobs == 0) jobs = default_jobs();
  const std::size_t workers = std::min<std::size_t>(jobs, n);
  if (workers <= 1) {
    chunk_fn(0, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(begin + chunk, n);
    futures.push_back(std::async(std::launch::async, chunk_fn, begin, end));
  }
  for (auto& f : futures) f.get();  // rethrows worker exceptions in order
}

}  // namespace hapsim

#include "gps/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gps {

namespace {

unsigned thread_cap() {
  static const unsigned cap = [] {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GPS_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
  }();
  return cap;
}

constexpr std::size_t kMinItemsPerWorker = 64;

}  // namespace

unsigned worker_count(std::size_t items) {
  if (items == 0) return 1;
  std::size_t by_items = (items + kMinItemsPerWorker - 1) / kMinItemsPerWorker;
  return static_cast<unsigned>(std::min<std::size_t>(thread_cap(), by_items));
}

void parallel_chunks(std::size_t n,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
  const unsigned workers = worker_count(n);
  if (workers <= 1) {
    body(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t per = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, static_cast<std::size_t>(w) * per);
    const std::size_t end = std::min(n, begin + per);
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace gps

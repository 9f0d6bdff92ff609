#include "random_functions.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace gr::testing {

namespace {

VertexId origin(const Graph& g) { return g.family() == Family::RegularTree ? 0 : g.at({0, 0}); }

std::vector<VertexId> candidate_pool(const Graph& g) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<VertexId> queue{origin(g)};
  dist[queue.front()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    if (dist[v] == 5) continue;
    for (VertexId u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  std::vector<VertexId> pool;
  for (VertexId v : queue)
    if (g.interior(v)) pool.push_back(v);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

LatticeFunction random_function(const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexId> pool = candidate_pool(g);
  const std::size_t cap = std::min<std::size_t>(20, pool.size());
  const std::size_t size = std::uniform_int_distribution<std::size_t>(1, cap)(rng);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uniform_int_distribution<int> numerator(1, 64);
  std::vector<std::pair<VertexId, Rational>> values;
  for (std::size_t i = 0; i < size; ++i) values.emplace_back(pool[i], Rational(numerator(rng), 64));
  return LatticeFunction(g, values);
}

std::vector<LatticeFunction> random_suite(const Graph& g, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LatticeFunction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_function(g, rng));
  return out;
}

std::vector<std::size_t> parallel_failures(std::size_t count, const std::function<bool(std::size_t)>& check) {
  std::atomic<std::size_t> next{0};
  std::mutex lock;
  std::vector<std::size_t> failures;
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++)
          if (!check(i)) {
            std::lock_guard guard(lock);
            failures.push_back(i);
          }
      });
  }
  std::sort(failures.begin(), failures.end());
  return failures;
}

}  // namespace gr::testing

#pragma once

#include "goesv/rand.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace goesv {

/// Runs f(stream, index) for index = 0..samples-1 on `shards` threads, each
/// index with its own stream RandStream(key, index), and returns the results
/// in index order. Output does not depend on the shard count.
template <typename R, typename F>
std::vector<R> map_samples(std::size_t samples, int shards, std::uint64_t key, F f) {
  std::vector<R> out(samples);
  const std::size_t workers = std::clamp<std::size_t>(shards < 1 ? 1 : shards, 1, std::max<std::size_t>(samples, 1));
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      RandStream stream(key, i);
      out[i] = f(stream, i);
    }
  };
  if (workers == 1) {
    run(0, samples);
    return out;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex guard;
  const std::size_t chunk = (samples + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk, hi = std::min(samples, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      try {
        run(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace goesv

#include "parallel.hpp"

#include "advect/errors.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace advect::cli {

std::size_t thread_limit(std::optional<std::string_view> env_value) {
  if (env_value) {
    std::size_t n = 0;
    const char* end = env_value->data() + env_value->size();
    const auto [ptr, ec] = std::from_chars(env_value->data(), end, n);
    if (ec != std::errc() || ptr != end || n == 0) {
      throw InvalidInput("ADVECT_SPECTRA_THREADS must be a positive integer, got '" +
                         std::string(*env_value) + "'");
    }
    return n;
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::size_t thread_limit() {
  const char* env = std::getenv("ADVECT_SPECTRA_THREADS");
  return thread_limit(env ? std::optional<std::string_view>(env) : std::nullopt);
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace advect::cli

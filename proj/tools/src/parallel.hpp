#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

namespace advect::cli {

/// ADVECT_SPECTRA_THREADS if set (a positive integer, else InvalidInput), otherwise the
/// hardware concurrency; never below 1.
std::size_t thread_limit();
/// Same rule applied to an explicit environment value.
std::size_t thread_limit(std::optional<std::string_view> env_value);

/// Runs task(0 .. count-1) on up to `threads` workers. Tasks write into their own slots, so
/// output order never depends on scheduling. The first exception is rethrown after all
/// workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& task);

}  // namespace advect::cli

#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <utility>

namespace econokit::parallel {

/// Execution policy for the data-parallel kernels (QLR candidate scans,
/// Monte Carlo batches). Results are identical under both policies; the
/// serial path is the reference implementation the tests compare against.
enum class Exec { serial, openmp };

[[nodiscard]] inline Exec default_exec() {
#ifdef _OPENMP
    return Exec::openmp;
#else
    return Exec::serial;
#endif
}

/// Runs fn(i) for i in [0, n). Exceptions thrown by fn are captured and the
/// first one is rethrown after the loop completes.
template <typename Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace econokit::parallel

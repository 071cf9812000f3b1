// Predicate sweeps over index ranges: a serial reference and an OpenMP kernel.
// Both return the smallest failing index, so reports do not depend on scheduling.
#pragma once

#include <cstddef>
#include <optional>

namespace prefund {

template <class Pred>
std::optional<std::size_t> first_failure_serial(std::size_t count, Pred&& fails) {
    for (std::size_t k = 0; k < count; ++k)
        if (fails(k)) return k;
    return std::nullopt;
}

template <class Pred>
std::optional<std::size_t> first_failure_parallel(std::size_t count, Pred&& fails) {
    std::size_t best = count;
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (long long k = 0; k < n; ++k) {
        if (static_cast<std::size_t>(k) < best && fails(static_cast<std::size_t>(k)))
            best = static_cast<std::size_t>(k);
    }
    if (best == count) return std::nullopt;
    return best;
}

enum class SweepMode { Serial, Parallel };

template <class Pred>
std::optional<std::size_t> first_failure(SweepMode mode, std::size_t count, Pred&& fails) {
    return mode == SweepMode::Serial ? first_failure_serial(count, fails) : first_failure_parallel(count, fails);
}

}  // namespace prefund

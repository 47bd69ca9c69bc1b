#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "charsum/character.hpp"

namespace charsum::par {

/// Worker cap: CHARSUM_THREADS if it is a positive integer, else the OpenMP
/// default. Always 1 without OpenMP.
inline int worker_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("CHARSUM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// [begin, end) of block `id` when `total` items are cut into `parts` blocks
/// whose sizes differ by at most one.
inline std::pair<std::uint64_t, std::uint64_t> block_range(std::uint64_t total, std::uint64_t parts,
                                                           std::uint64_t id) {
    const std::uint64_t base = total / parts, extra = total % parts;
    const std::uint64_t begin = id * base + (id < extra ? id : extra);
    return {begin, begin + base + (id < extra ? 1 : 0)};
}

/// Runs body(begin, end, acc) over a static partition of [0, total), one
/// accumulator per block, and merges the blocks. Counts are integers, so the
/// result does not depend on the worker count or the schedule.
template <class Body>
SumAccumulator reduce_range(std::uint64_t total, std::uint64_t root_order, Body&& body) {
    const int workers = worker_count();
    const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, workers));
    std::vector<SumAccumulator> partial(parts, SumAccumulator(root_order));

#pragma omp parallel for schedule(static) num_threads(workers) if (parts > 1)
    for (std::int64_t id = 0; id < static_cast<std::int64_t>(parts); ++id) {
        const auto [begin, end] = block_range(total, parts, static_cast<std::uint64_t>(id));
        body(begin, end, partial[id]);
    }

    SumAccumulator out(root_order);
    for (const auto& acc : partial) out.merge(acc);
    return out;
}

}  // namespace charsum::par

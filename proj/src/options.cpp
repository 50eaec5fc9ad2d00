#include "simflow/options.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "simflow/error.hpp"

namespace simflow {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::InvalidSimplex: return "InvalidSimplex";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotABase: return "NotABase";
    case ErrorKind::FacetInBase: return "FacetInBase";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::HasBridge: return "HasBridge";
    case ErrorKind::NotAFlow: return "NotAFlow";
    case ErrorKind::LiftFailed: return "LiftFailed";
    case ErrorKind::RelationMismatch: return "RelationMismatch";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::size_t default_subset_cap()
{
    const char* env = std::getenv("SIMFLOW_SUBSET_CAP");
    if (env == nullptr) return kDefaultSubsetCap;
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) return kDefaultSubsetCap;
    return value;
}

void require_subset_cap(std::size_t facet_count, const ComputeOptions& options)
{
    if (facet_count > 64) {
        throw Error(ErrorKind::CapExceeded,
                    "subset expansion over " + std::to_string(facet_count) +
                        " facets is beyond the 64-facet bitmask limit");
    }
    if (!options.force && facet_count > options.subset_cap) {
        throw Error(ErrorKind::CapExceeded,
                    "complex has " + std::to_string(facet_count) + " facets, above the subset cap of " +
                        std::to_string(options.subset_cap) +
                        " (set SIMFLOW_SUBSET_CAP or pass --force)");
    }
}

void parallel_ranges(unsigned jobs, std::uint64_t begin, std::uint64_t end,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body)
{
    if (end <= begin) return;
    const std::uint64_t total = end - begin;
    const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, total));
    if (workers == 1) {
        body(begin, end, 0);
        return;
    }

    std::vector<std::thread> threads;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = begin + w * chunk;
        const std::uint64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi, w] {
            try {
                body(lo, hi, w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace simflow

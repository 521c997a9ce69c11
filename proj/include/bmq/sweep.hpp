#ifndef BMQ_SWEEP_HPP
#define BMQ_SWEEP_HPP

#include "bmq/bm.hpp"
#include "bmq/compare.hpp"

#include <cstdint>
#include <exception>
#include <span>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bmq {

enum class SweepMode : std::uint8_t { Exhaustive, Sampled };

struct SweepConfig {
    int max_k = 3;
    int max_k_prime = 3;
    int max_chain_len = 1;
    int xi_max_k = 3;
    int max_m = 3;
    SweepMode mode = SweepMode::Exhaustive;
    int samples = 0;
    std::uint64_t seed = 0;
    int jobs = 0; // 0: OpenMP default
};

/// Throws Error(Validation) on negative bounds or a sampled run without samples.
void validate(const SweepConfig& config);

enum class Suite : std::uint8_t {
    Cardinality,
    Constancy,
    Naturality,
    Identification,
    Decomposition,
    Gluing,
    Xi,
    Audit,
};

const char* to_string(Suite suite);
std::vector<Suite> all_suites();

struct SuiteReport {
    std::string suite;
    std::vector<std::pair<std::string, int>> bounds;
    std::vector<VerificationReport> instances;

    std::size_t failed() const;
    std::size_t warned() const;
};

// Instance lists, in deterministic enumeration order.
std::vector<BmEdge> edge_instances(int max_k, int max_k_prime);
std::vector<BmObject> object_instances(int min_k, int max_k);
std::vector<BmChain> chain_instances(int max_length, int max_k);

/// `count` draws (with replacement) from {0,...,n-1}, sorted and deduplicated.
std::vector<std::size_t> sample_indices(std::size_t n, int count, std::uint64_t seed);

struct XiInstance {
    BmChain chain;
    int m;
};

std::string to_string(const XiInstance& instance);
std::vector<XiInstance> xi_instances(int max_k, int max_m);

/// Warn on a |J| formula mismatch for beta' = 1, fail on one for beta' = 0.
VerificationReport audit_report(const BmEdge& edge);

namespace detail {

template <class Instance, class Check>
VerificationReport run_one(const Instance& instance, Check& check) {
    try {
        return check(instance);
    } catch (const std::exception& err) {
        VerificationReport report{to_string(instance)};
        report.fail(std::string("exception: ") + err.what());
        return report;
    }
}

} // namespace detail

/// Reference kernel: one instance after another.
template <class Instance, class Check>
std::vector<VerificationReport> run_serial(std::span<const Instance> instances, Check check) {
    std::vector<VerificationReport> out;
    out.reserve(instances.size());
    for (const auto& instance : instances)
        out.push_back(detail::run_one(instance, check));
    return out;
}

/// Same results as run_serial, in the same order; instances are spread over
/// OpenMP threads and each writes only its own slot.
template <class Instance, class Check>
std::vector<VerificationReport> run_parallel(std::span<const Instance> instances, Check check, int jobs = 0) {
    std::vector<VerificationReport> out(instances.size());
    const long long n = static_cast<long long>(instances.size());
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#else
    (void)jobs;
#endif
    for (long long i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = detail::run_one(instances[static_cast<std::size_t>(i)], check);
    return out;
}

enum class Kernel : std::uint8_t { Serial, Parallel };

SuiteReport run_suite(Suite suite, const SweepConfig& config, Kernel kernel = Kernel::Parallel);
std::vector<SuiteReport> run_all(const SweepConfig& config, Kernel kernel = Kernel::Parallel);

/// 0 if no suite failed (warnings allowed), 1 otherwise.
int exit_code(const std::vector<SuiteReport>& reports);

} // namespace bmq

#endif // BMQ_SWEEP_HPP

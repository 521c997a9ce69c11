#include "bmq/sweep.hpp"

#include "bmq/error.hpp"

#include <algorithm>
#include <random>

namespace bmq {

void validate(const SweepConfig& config) {
    if (config.max_k < 0 || config.max_k_prime < 0 || config.max_chain_len < 0 || config.xi_max_k < 0 ||
        config.max_m < 0)
        throw Error(ErrorKind::Validation, "sweep bounds must be non-negative");
    if (config.mode == SweepMode::Sampled && config.samples < 1)
        throw Error(ErrorKind::Validation, "sampled mode needs --samples >= 1");
    if (config.jobs < 0)
        throw Error(ErrorKind::Validation, "--jobs must be non-negative");
}

const char* to_string(Suite suite) {
    switch (suite) {
        case Suite::Cardinality: return "cardinality";
        case Suite::Constancy: return "constancy";
        case Suite::Naturality: return "naturality";
        case Suite::Identification: return "identification";
        case Suite::Decomposition: return "decomposition";
        case Suite::Gluing: return "gluing";
        case Suite::Xi: return "xi";
        case Suite::Audit: return "audit";
    }
    return "?";
}

std::vector<Suite> all_suites() {
    return {Suite::Cardinality, Suite::Constancy,   Suite::Naturality, Suite::Identification,
            Suite::Decomposition, Suite::Gluing, Suite::Xi,         Suite::Audit};
}

std::size_t SuiteReport::failed() const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                  [](const auto& r) { return r.status == Status::Fail; }));
}

std::size_t SuiteReport::warned() const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                  [](const auto& r) { return r.status == Status::Warn; }));
}

std::vector<BmEdge> edge_instances(int max_k, int max_k_prime) {
    std::vector<BmEdge> out;
    const auto sources = enumerate_objects(max_k);
    const auto targets = enumerate_objects(max_k_prime);
    for (const auto& phi : sources)
        for (const auto& phi_prime : targets)
            for (auto& e : enumerate_edges(phi, phi_prime))
                out.push_back(std::move(e));
    return out;
}

std::vector<BmObject> object_instances(int min_k, int max_k) {
    std::vector<BmObject> out;
    for (int k = std::max(min_k, 0); k <= max_k; ++k)
        for (auto& phi : enumerate_objects_of_size(k))
            out.push_back(std::move(phi));
    return out;
}

std::vector<BmChain> chain_instances(int max_length, int max_k) { return enumerate_chains(max_length, max_k); }

std::string to_string(const XiInstance& instance) {
    return to_string(instance.chain) + "#m=" + std::to_string(instance.m);
}

std::vector<XiInstance> xi_instances(int max_k, int max_m) {
    std::vector<XiInstance> out;
    for (auto& chain : enumerate_chains(1, max_k))
        for (int m = 0; m <= max_m; ++m)
            out.push_back({chain, m});
    return out;
}

std::vector<std::size_t> sample_indices(std::size_t n, int count, std::uint64_t seed) {
    std::vector<std::size_t> out;
    if (n == 0)
        return out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i)
        out.push_back(static_cast<std::size_t>(rng() % n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VerificationReport audit_report(const BmEdge& edge) {
    VerificationReport report{to_string(edge)};
    const JAudit audit = j_cardinality_audit(edge);
    report.checks = 1;
    std::string record = "raw=" + std::to_string(audit.raw) + " effective=" + std::to_string(audit.effective) +
                         " self=" + std::to_string(audit.self_pairs) + " formula=" +
                         (audit.formula ? std::to_string(*audit.formula) : std::string("none")) +
                         " betaPrime=" + std::to_string(audit.beta_prime) +
                         " boundary=" + (audit.boundary ? "yes" : "no");
    if (audit.raw_match)
        return report;
    if (audit.beta_prime == 0)
        report.fail("beta' = 0 count mismatch: " + record);
    else {
        report.status = Status::Warn;
        report.witnesses.push_back(record);
    }
    return report;
}

namespace {

template <class Instance, class Check>
std::vector<VerificationReport> dispatch(const std::vector<Instance>& all, const SweepConfig& config, Kernel kernel,
                                         Check check) {
    std::vector<Instance> chosen;
    if (config.mode == SweepMode::Sampled) {
        for (std::size_t i : sample_indices(all.size(), config.samples, config.seed))
            chosen.push_back(all[i]);
    }
    const std::vector<Instance>& run = config.mode == SweepMode::Sampled ? chosen : all;
    std::span<const Instance> view(run);
    return kernel == Kernel::Serial ? run_serial(view, check) : run_parallel(view, check, config.jobs);
}

} // namespace

SuiteReport run_suite(Suite suite, const SweepConfig& config, Kernel kernel) {
    validate(config);
    SuiteReport report;
    report.suite = to_string(suite);
    const int chain_k = std::min(config.max_k, config.max_k_prime);
    switch (suite) {
        case Suite::Cardinality:
            report.bounds = {{"maxK", config.max_k}};
            report.instances = dispatch(object_instances(0, config.max_k), config, kernel,
                                        [](const BmObject& phi) { return verify_cardinality(phi); });
            break;
        case Suite::Decomposition:
            report.bounds = {{"minK", 1}, {"maxK", config.max_k}};
            report.instances = dispatch(object_instances(1, config.max_k), config, kernel,
                                        [](const BmObject& phi) { return verify_decomposition(phi); });
            break;
        case Suite::Constancy:
        case Suite::Naturality:
        case Suite::Identification:
        case Suite::Audit: {
            report.bounds = {{"maxK", config.max_k}, {"maxKPrime", config.max_k_prime}};
            const auto edges = edge_instances(config.max_k, config.max_k_prime);
            if (suite == Suite::Constancy)
                report.instances = dispatch(edges, config, kernel, [](const BmEdge& e) { return verify_constancy(e); });
            else if (suite == Suite::Naturality)
                report.instances = dispatch(edges, config, kernel,
                                            [](const BmEdge& e) { return verify_naturality(BmChain::from_edge(e)); });
            else if (suite == Suite::Identification)
                report.instances =
                    dispatch(edges, config, kernel, [](const BmEdge& e) { return verify_identification(e); });
            else
                report.instances = dispatch(edges, config, kernel, [](const BmEdge& e) { return audit_report(e); });
            break;
        }
        case Suite::Gluing:
            report.bounds = {{"maxChainLen", config.max_chain_len}, {"maxK", chain_k}};
            report.instances = dispatch(chain_instances(config.max_chain_len, chain_k), config, kernel,
                                        [](const BmChain& c) {
                                            auto r = verify_gluing(c);
                                            if (r.status == Status::Pass) {
                                                auto n = verify_naturality(c);
                                                r.checks += n.checks;
                                                for (auto& w : n.witnesses)
                                                    r.fail(std::move(w));
                                            }
                                            return r;
                                        });
            break;
        case Suite::Xi:
            report.bounds = {{"maxChainLen", 1}, {"maxK", config.xi_max_k}, {"maxM", config.max_m}};
            report.instances = dispatch(xi_instances(config.xi_max_k, config.max_m), config, kernel,
                                        [](const XiInstance& x) { return verify_xi_naturality(x.chain, x.m); });
            break;
    }
    return report;
}

std::vector<SuiteReport> run_all(const SweepConfig& config, Kernel kernel) {
    std::vector<SuiteReport> out;
    for (Suite suite : all_suites())
        out.push_back(run_suite(suite, config, kernel));
    return out;
}

int exit_code(const std::vector<SuiteReport>& reports) {
    for (const auto& r : reports)
        if (r.failed() > 0)
            return 1;
    return 0;
}

} // namespace bmq

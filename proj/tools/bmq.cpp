// bmq: evaluate F, G and gamma on instances of BM, and run verification sweeps.

#include "bmq/bm.hpp"
#include "bmq/compare.hpp"
#include "bmq/error.hpp"
#include "bmq/quiverf.hpp"
#include "bmq/report.hpp"
#include "bmq/sweep.hpp"
#include "bmq/wfib.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <string>

namespace {

using namespace bmq;

int cmd_eval(const std::string& entity, const std::string& instance, Format format) {
    if (entity == "F") {
        BmChain chain = parse_chain(instance);
        if (chain.length() == 0)
            std::cout << render_labels(f_object(chain.vertex(0)), format);
        else
            std::cout << render_quotient(f_chain(chain).classes(), format);
    } else if (entity == "G") {
        std::cout << render_gset(g_chain(parse_chain(instance)), format);
    } else if (entity == "gamma") {
        GammaComponent gamma = gamma_chain(parse_chain(instance), false);
        std::cout << render_gamma(gamma, format);
        if (!gamma.well_defined())
            return 1;
    } else if (entity == "pairs") {
        std::cout << render_pairs(pairing_set(parse_edge(instance)), format);
    } else if (entity == "audit") {
        std::cout << render_audit(j_cardinality_audit(parse_edge(instance)), format);
    } else {
        throw Error(ErrorKind::Parse, "unknown entity '" + entity + "'");
    }
    return 0;
}

int cmd_verify(const SweepConfig& config, const std::vector<std::string>& suites, Format format) {
    validate(config);
    std::vector<SuiteReport> reports;
    if (suites.empty()) {
        reports = run_all(config);
    } else {
        std::map<std::string, Suite> by_name;
        for (Suite s : all_suites())
            by_name.emplace(to_string(s), s);
        for (const auto& name : suites) {
            auto it = by_name.find(name);
            if (it == by_name.end())
                throw Error(ErrorKind::Parse, "unknown suite '" + name + "'");
            reports.push_back(run_suite(it->second, config));
        }
    }
    std::cout << (format == Format::Json ? dump(to_json(reports, config)) : render_text(reports));
    return exit_code(reports);
}

int cmd_enumerate(const std::string& kind, int max_k, int max_chain_len, const std::string& phi,
                  const std::string& phi_prime) {
    if (max_k < 0 || max_chain_len < 0)
        throw Error(ErrorKind::Validation, "bounds must be non-negative");
    std::size_t count = 0;
    if (kind == "objects") {
        for (const auto& o : enumerate_objects(max_k)) {
            std::cout << to_string(o) << "\n";
            ++count;
        }
    } else if (kind == "edges") {
        if (phi.empty() || phi_prime.empty())
            throw Error(ErrorKind::Validation, "enumerate edges needs --phi and --phiPrime");
        for (const auto& e : enumerate_edges(parse_object(phi), parse_object(phi_prime))) {
            std::cout << to_string(e) << "\n";
            ++count;
        }
    } else if (kind == "chains") {
        for (const auto& c : enumerate_chains(max_chain_len, max_k)) {
            std::cout << to_string(c) << "\n";
            ++count;
        }
    } else {
        throw Error(ErrorKind::Parse, "unknown kind '" + kind + "'");
    }
    std::cout << "count: " << count << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quiver comparison over BM: F, G, gamma and their verification"};
    app.require_subcommand(1);

    std::string format_name = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* eval = app.add_subcommand("eval", "Evaluate F, G, gamma, pairs or audit on an instance");
    std::string entity, instance;
    eval->add_option("entity", entity, "F | G | gamma | pairs | audit")->required();
    eval->add_option("instance", instance, "Object bit string, edge or chain encoding")->required();
    add_format(eval);

    auto* verify = app.add_subcommand("verify", "Run verification sweeps");
    SweepConfig config;
    bool exhaustive = false;
    std::vector<std::string> suites;
    verify->add_option("--max-k", config.max_k, "Largest k of a source object")->capture_default_str();
    verify->add_option("--max-kprime", config.max_k_prime, "Largest k' of a target object")->capture_default_str();
    verify->add_option("--max-chain-len", config.max_chain_len, "Longest chain in the gluing suite")
        ->capture_default_str();
    verify->add_option("--xi-max-k", config.xi_max_k, "Largest k in the xi suite")->capture_default_str();
    verify->add_option("--max-m", config.max_m, "Largest target set in the xi suite")->capture_default_str();
    auto* exhaustive_flag = verify->add_flag("--exhaustive", exhaustive, "Check every instance (default)");
    auto* samples_opt = verify->add_option("--samples", config.samples, "Check this many random instances per suite");
    auto* seed_opt = verify->add_option("--seed", config.seed, "Seed for sampled mode");
    samples_opt->excludes(exhaustive_flag)->needs(seed_opt);
    seed_opt->needs(samples_opt);
    verify->add_option("--jobs", config.jobs, "Worker threads (0: all)");
    verify->add_option("--suite", suites, "Restrict to these suites");
    add_format(verify);

    auto* enumerate = app.add_subcommand("enumerate", "List objects, edges or chains");
    std::string kind, phi, phi_prime;
    int max_k = 1, max_chain_len = 1;
    enumerate->add_option("kind", kind, "objects | edges | chains")->required();
    enumerate->add_option("--max-k", max_k, "Largest k")->capture_default_str();
    enumerate->add_option("--max-chain-len", max_chain_len, "Longest chain")->capture_default_str();
    enumerate->add_option("--phi", phi, "Source object of the edges");
    enumerate->add_option("--phiPrime", phi_prime, "Target object of the edges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Format format = format_name == "json" ? Format::Json : Format::Text;
    try {
        if (*eval)
            return cmd_eval(entity, instance, format);
        if (*verify) {
            if (*samples_opt)
                config.mode = SweepMode::Sampled;
            return cmd_verify(config, suites, format);
        }
        return cmd_enumerate(kind, max_k, max_chain_len, phi, phi_prime);
    } catch (const Error& e) {
        std::cerr << "bmq: " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Validation || e.kind() == ErrorKind::Range ? 2 : 1;
    }
}

#include "bmq/report.hpp"

#include "doctest.h"

using namespace bmq;
using nlohmann::json;

TEST_CASE("verify reports follow the record schema") {
    SweepConfig config;
    config.max_k = 2;
    config.max_k_prime = 2;
    auto reports = run_all(config);
    json doc = to_json(reports, config);
    CHECK(doc["mode"] == "exhaustive");
    REQUIRE(doc["reports"].size() == all_suites().size());
    for (const auto& r : doc["reports"]) {
        CHECK(r["suite"].is_string());
        CHECK(r["bounds"].is_object());
        CHECK(r["summary"]["total"] == r["instances"].size());
        for (const auto& inst : r["instances"]) {
            CHECK(inst["key"].is_string());
            const auto status = inst["status"].get<std::string>();
            CHECK((status == "pass" || status == "fail" || status == "warn"));
            CHECK(inst["witnesses"].is_array());
        }
    }
    CHECK(doc["reports"][0]["bounds"]["maxK"] == 2);
}

TEST_CASE("json output round-trips byte for byte") {
    SweepConfig config;
    config.mode = SweepMode::Sampled;
    config.samples = 40;
    config.seed = 3;
    const std::string text = dump(to_json(run_all(config), config));
    CHECK(dump(json::parse(text)) == text);
    CHECK(text == dump(to_json(run_all(config), config)));

    const std::string pairs = render_pairs(pairing_set(parse_edge("phi=001;phiPrime=01;map=1,2")), Format::Json);
    CHECK(dump(json::parse(pairs)) == pairs);
    CHECK(json::parse(pairs)["count"] == 2);
}

TEST_CASE("value renderers") {
    const auto labels = render_labels(f_object(parse_object("0001")), Format::Text);
    CHECK(labels.find("count: 5") != std::string::npos);
    CHECK(labels.find("v0:xm") != std::string::npos);

    const auto g = render_gset(g_chain(parse_chain("phi=001;phiPrime=01;map=1,2")), Format::Text);
    CHECK(g == "{(0,0)}\n{(0,1), (1,0)}\nv0: [0,1]\nv1: [1]\nclasses: 2\n");

    const auto quotient = render_quotient(f_edge(BmEdge::identity(parse_object("00"))).classes(), Format::Json);
    CHECK(json::parse(quotient)["classes"] ==
          json::array({json::array({"v0:x1(1)", "v1:x1(1)"}), json::array({"v0:x2(1)", "v1:x2(1)"})}));

    const auto gamma = render_gamma(gamma_chain(BmChain::from_edge(BmEdge::identity(parse_object("00")))), Format::Text);
    CHECK(gamma == "{v0:x1(1), v1:x1(1)} -> {(0,1), (1,1)}\n{v0:x2(1), v1:x2(1)} -> {(0,0), (1,0)}\nclasses: 2\n");

    const auto audit = json::parse(render_audit(j_cardinality_audit(BmEdge::identity(parse_object("11"))), Format::Json));
    CHECK(audit["formula"].is_null());

    std::vector<SuiteReport> reports{run_suite(Suite::Cardinality, SweepConfig{})};
    CHECK(render_text(reports) == "cardinality: 14 instances, 0 failed, 0 warned\nPASS\n");
}

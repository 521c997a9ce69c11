#include "bmq/report.hpp"

#include <sstream>

namespace bmq {

using nlohmann::json;

namespace {

json label_blocks(const Quotient<QuiverLabel>& q) {
    json blocks = json::array();
    for (const auto& block : q.blocks()) {
        json b = json::array();
        for (const auto& label : block)
            b.push_back(to_string(label));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

json point_blocks(const GSet& g) {
    json blocks = json::array();
    for (const auto& block : g.classes.blocks()) {
        json b = json::array();
        for (const auto& p : block)
            b.push_back(to_string(p));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::string blocks_text(const json& blocks) {
    std::string out;
    for (const auto& block : blocks) {
        out += "{";
        for (std::size_t i = 0; i < block.size(); ++i)
            out += (i ? ", " : "") + block[i].get<std::string>();
        out += "}\n";
    }
    return out;
}

} // namespace

json to_json(const VerificationReport& report) {
    return json{{"key", report.key}, {"status", to_string(report.status)}, {"witnesses", report.witnesses}};
}

json to_json(const SuiteReport& report) {
    json bounds = json::object();
    for (const auto& [name, value] : report.bounds)
        bounds[name] = value;
    json instances = json::array();
    for (const auto& r : report.instances)
        instances.push_back(to_json(r));
    return json{{"suite", report.suite},
                {"bounds", std::move(bounds)},
                {"instances", std::move(instances)},
                {"summary", {{"total", report.instances.size()}, {"failed", report.failed()}, {"warned", report.warned()}}}};
}

json to_json(const std::vector<SuiteReport>& reports, const SweepConfig& config) {
    json doc;
    doc["mode"] = config.mode == SweepMode::Sampled ? "sampled" : "exhaustive";
    if (config.mode == SweepMode::Sampled) {
        doc["samples"] = config.samples;
        doc["seed"] = config.seed;
    }
    std::size_t total = 0, failed = 0, warned = 0;
    doc["reports"] = json::array();
    for (const auto& r : reports) {
        doc["reports"].push_back(to_json(r));
        total += r.instances.size();
        failed += r.failed();
        warned += r.warned();
    }
    doc["summary"] = {{"total", total}, {"failed", failed}, {"warned", warned}};
    return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string render_text(const std::vector<SuiteReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << r.suite << ": " << r.instances.size() << " instances, " << r.failed() << " failed, " << r.warned()
            << " warned\n";
        for (const auto& inst : r.instances) {
            if (inst.status == Status::Pass)
                continue;
            out << "  " << to_string(inst.status) << " " << inst.key << "\n";
            for (const auto& w : inst.witnesses)
                out << "    " << w << "\n";
        }
    }
    out << (exit_code(reports) == 0 ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string render_labels(const std::vector<QuiverLabel>& labels, Format format) {
    json list = json::array();
    for (const auto& label : labels)
        list.push_back(to_string(label));
    if (format == Format::Json)
        return dump(json{{"labels", list}, {"count", labels.size()}});
    std::string out;
    for (const auto& l : list)
        out += l.get<std::string>() + "\n";
    return out + "count: " + std::to_string(labels.size()) + "\n";
}

std::string render_quotient(const Quotient<QuiverLabel>& q, Format format) {
    json blocks = label_blocks(q);
    if (format == Format::Json)
        return dump(json{{"classes", blocks}, {"count", q.class_count()}});
    return blocks_text(blocks) + "classes: " + std::to_string(q.class_count()) + "\n";
}

std::string render_gset(const GSet& g, Format format) {
    json blocks = point_blocks(g);
    if (format == Format::Json)
        return dump(json{{"classes", blocks}, {"count", g.class_count()}, {"vertexMaps", g.vertex_maps}});
    std::string out = blocks_text(blocks);
    for (std::size_t t = 0; t < g.vertex_maps.size(); ++t) {
        out += "v" + std::to_string(t) + ": [";
        for (std::size_t j = 0; j < g.vertex_maps[t].size(); ++j)
            out += (j ? "," : "") + std::to_string(g.vertex_maps[t][j]);
        out += "]\n";
    }
    return out + "classes: " + std::to_string(g.class_count()) + "\n";
}

std::string render_gamma(const GammaComponent& gamma, Format format) {
    json rows = json::array();
    const auto& f_blocks = gamma.f.classes().blocks();
    for (std::size_t c = 0; c < f_blocks.size(); ++c) {
        json members = json::array();
        for (const auto& label : f_blocks[c])
            members.push_back(to_string(label));
        json target = json::array();
        for (const auto& p : gamma.g.classes.blocks()[gamma.assignment[c]])
            target.push_back(to_string(p));
        rows.push_back(json{{"from", members}, {"to", target}});
    }
    if (format == Format::Json)
        return dump(json{{"assignment", rows}, {"wellDefined", gamma.well_defined()}});
    std::string out;
    for (const auto& row : rows) {
        std::string from, to;
        for (const auto& m : row["from"])
            from += (from.empty() ? "" : ", ") + m.get<std::string>();
        for (const auto& p : row["to"])
            to += (to.empty() ? "" : ", ") + p.get<std::string>();
        out += "{" + from + "} -> {" + to + "}\n";
    }
    return out + "classes: " + std::to_string(rows.size()) + "\n";
}

std::string render_pairs(const PairingList& pairs, Format format) {
    json list = json::array();
    for (const auto& p : pairs)
        list.push_back(json{{"first", to_string(p.first)},
                            {"second", to_string(p.second)},
                            {"rawFirst", to_string(p.raw_first)},
                            {"rawSecond", to_string(p.raw_second)},
                            {"rule", to_string(p.rule)},
                            {"step", p.step}});
    if (format == Format::Json)
        return dump(json{{"pairs", list}, {"count", pairs.size()}});
    std::string out;
    for (const auto& p : pairs)
        out += "(" + to_string(p.first) + ", " + to_string(p.second) + ")  " + to_string(p.rule) + "\n";
    return out + "pairs: " + std::to_string(pairs.size()) + "\n";
}

std::string render_audit(const JAudit& audit, Format format) {
    json doc{{"raw", audit.raw},
             {"effective", audit.effective},
             {"selfPairs", audit.self_pairs},
             {"duplicates", audit.duplicates},
             {"formula", audit.formula ? json(*audit.formula) : json(nullptr)},
             {"rawMatch", audit.raw_match},
             {"effectiveMatch", audit.effective_match},
             {"betaPrime", audit.beta_prime},
             {"boundary", audit.boundary}};
    if (format == Format::Json)
        return dump(doc);
    std::string out;
    for (const auto& [k, v] : doc.items())
        out += k + ": " + v.dump() + "\n";
    return out;
}

} // namespace bmq

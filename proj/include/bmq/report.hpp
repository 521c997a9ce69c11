#ifndef BMQ_REPORT_HPP
#define BMQ_REPORT_HPP

#include "bmq/compare.hpp"
#include "bmq/quiverf.hpp"
#include "bmq/sweep.hpp"
#include "bmq/wfib.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace bmq {

enum class Format : std::uint8_t { Text, Json };

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const SuiteReport& report);
nlohmann::json to_json(const std::vector<SuiteReport>& reports, const SweepConfig& config);

/// JSON documents are dumped with sorted keys and two-space indent, so
/// parsing a dump and dumping again reproduces it byte for byte.
std::string dump(const nlohmann::json& doc);

std::string render_text(const std::vector<SuiteReport>& reports);

// Renderers for single values.
std::string render_labels(const std::vector<QuiverLabel>& labels, Format format);
std::string render_quotient(const Quotient<QuiverLabel>& q, Format format);
std::string render_gset(const GSet& g, Format format);
std::string render_gamma(const GammaComponent& gamma, Format format);
std::string render_pairs(const PairingList& pairs, Format format);
std::string render_audit(const JAudit& audit, Format format);

} // namespace bmq

#endif // BMQ_REPORT_HPP

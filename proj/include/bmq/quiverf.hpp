#ifndef BMQ_QUIVERF_HPP
#define BMQ_QUIVERF_HPP

#include "bmq/bm.hpp"
#include "bmq/quotient.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bmq {

enum class LabelKind : std::uint8_t { One, Two, Mid };

/// A generator of F at chain vertex `vertex`: x1(i), x2(i) or the middle
/// element xm. For Mid the index is unused and kept at 0.
struct QuiverLabel {
    int vertex = 0;
    LabelKind kind = LabelKind::Mid;
    int index = 0;

    static QuiverLabel one(int i, int vertex = 0) { return {vertex, LabelKind::One, i}; }
    static QuiverLabel two(int i, int vertex = 0) { return {vertex, LabelKind::Two, i}; }
    static QuiverLabel mid(int vertex = 0) { return {vertex, LabelKind::Mid, 0}; }

    friend bool operator==(const QuiverLabel&, const QuiverLabel&) = default;
    friend auto operator<=>(const QuiverLabel&, const QuiverLabel&) = default;
};

std::string to_string(const QuiverLabel& label);
QuiverLabel parse_label(std::string_view text);

/// The 2*ell + beta generators of F(phi): x1(1), x2(1), ..., x1(ell), x2(ell), then xm if beta = 1.
std::vector<QuiverLabel> f_object(const BmObject& phi, int vertex = 0);

/// Rewrites the out-of-range names used by the pairing rules: x1(0) stands
/// for x2(1), and x2(ell+1) stands for xm.
///
/// Throws Error(Range) for indices outside {0,...,ell+1} and
/// Error(UnresolvableLabel) when the rewrite does not name a generator.
QuiverLabel resolve_label(const BmObject& phi, QuiverLabel raw);

/// Which clause of the pairing rules produced a pair.
enum class PairRule : std::uint8_t {
    Flat,          // phi(i-1) = phi(i): (y1_i, y2_i)
    StrictOne,     // (y1_i, x1_phi(i))
    StrictTwo,     // (x2_{phi(i-1)+1}, y2_i)
    StrictInner,   // (x2_j, x1_{j-1}) for phi(i-1)+2 <= j <= phi(i)
    CrossMid,      // (x_{ell+1}, x1_ell)
    CrossTwo,      // (x2_{phi(ell')+1}, y_{ell'+1})
    CrossInner,    // (x2_j, x1_{j-1}) for phi(ell')+2 <= j <= ell
};

const char* to_string(PairRule rule);

struct Pairing {
    QuiverLabel first;
    QuiverLabel second;
    QuiverLabel raw_first;
    QuiverLabel raw_second;
    PairRule rule;
    int step; // i for the per-step rules, j for the inner rules, 0 otherwise

    bool is_self_pair() const noexcept { return first == second; }
};

/// One entry per element of J, in rule order.
using PairingList = std::vector<Pairing>;

/// Pairs for an edge whose source sits at chain vertex x_vertex and whose
/// target sits at y_vertex. Empty when ell' = -1.
PairingList pairing_set(const BmEdge& edge, int x_vertex = 0, int y_vertex = 1);

/// F of a chain: the generators of every vertex glued along every edge.
class FSet {
public:
    explicit FSet(const BmChain& chain);

    const Quotient<QuiverLabel>& classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.class_count(); }
    int length() const noexcept { return length_; }

    /// The inclusion of F(phi_t): generator -> class index.
    std::size_t include(int t, QuiverLabel local) const;

private:
    Quotient<QuiverLabel> classes_;
    int length_;
};

FSet f_edge(const BmEdge& edge);
FSet f_chain(const BmChain& chain);

struct SegmentLabel {
    int segment;        // 1..k
    QuiverLabel local;  // generator of F on the segment
    QuiverLabel global; // the corresponding generator of F(phi)
};

/// F(phi) assembled from the F of its segments. Throws
/// Error(DegenerateDecomposition) for k = 0.
std::vector<SegmentLabel> f_object_via_segments(const BmObject& phi);

struct JAudit {
    int raw = 0;
    int effective = 0;   // distinct non-self pairs, unordered
    int self_pairs = 0;
    int duplicates = 0;
    std::optional<int> formula; // ell' + phi(ell'+beta') - phi(0); absent when ell' = -1
    bool raw_match = false;
    bool effective_match = false;
    int beta_prime = 0;
    bool boundary = false; // beta' = 1 and phi(ell'+1) = ell+1
};

JAudit j_cardinality_audit(const BmEdge& edge);

} // namespace bmq

#endif // BMQ_QUIVERF_HPP

#ifndef BMQ_COMPARE_HPP
#define BMQ_COMPARE_HPP

#include "bmq/bm.hpp"
#include "bmq/quiverf.hpp"
#include "bmq/wfib.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bmq {

/// Fiber index a generator of F(phi) is sent to: x1(i) -> i, x2(j) -> j-1,
/// xm -> ell. Also accepts the out-of-range names x1(0) and x2(ell+1) used
/// by the pairing rules, which land on 0 and ell.
int gamma_index(const BmObject& phi, const QuiverLabel& label);

/// The component of gamma: F(c) -> G(c) on one chain.
struct GammaComponent {
    BmChain chain;
    FSet f;
    GSet g;
    /// F-class -> G-class, read off each class representative.
    std::vector<std::size_t> assignment;
    /// Every generator with its G-class, before quotienting.
    std::vector<std::pair<QuiverLabel, std::size_t>> witness;
    /// Pairs of generators in one F-class with different images.
    std::vector<std::pair<QuiverLabel, QuiverLabel>> conflicts;

    bool well_defined() const noexcept { return conflicts.empty(); }
};

GammaComponent gamma_object(const BmObject& phi);

/// Throws Error(IllDefinedComponent) if some F-class has two images,
/// unless `strict` is false, in which case the conflicts are recorded.
GammaComponent gamma_chain(const BmChain& chain, bool strict = true);

enum class Status : std::uint8_t { Pass, Fail, Warn };

const char* to_string(Status status);

struct VerificationReport {
    VerificationReport() = default;
    explicit VerificationReport(std::string instance_key) : key(std::move(instance_key)) {}

    std::string key;
    Status status = Status::Pass;
    std::vector<std::string> witnesses; // why an instance failed or warned
    std::vector<std::string> evidence;  // supporting data for passes
    int checks = 0;

    void fail(std::string witness) {
        status = Status::Fail;
        witnesses.push_back(std::move(witness));
    }
    void expect(bool ok, const std::string& witness) {
        ++checks;
        if (!ok)
            fail(witness);
    }
};

/// Every pair of the pairing list has a single G-image, and every chain of
/// identities the pairing rules are justified by lands in a single G-class.
VerificationReport verify_constancy(const BmEdge& edge);

/// The squares over vertex inclusions and (for edges of a chain) segment
/// inclusions commute element-wise.
VerificationReport verify_naturality(const BmChain& chain);

/// F and G of phi agree with their assembly from segments, and gamma is
/// compatible with both presentations. Requires k >= 1.
VerificationReport verify_decomposition(const BmObject& phi);

/// Gluing G along the edges of the chain reproduces G of the chain, and G of
/// the chain is {0,...,ell_0} by an order-preserving identification.
VerificationReport verify_gluing(const BmChain& chain);

/// The G-classes of (1, i) and (0, map(i)) coincide for 0 <= i <= ell'.
VerificationReport verify_identification(const BmEdge& edge);

/// |F(phi)| = max(0, 2 ell + beta), |G(phi)| = ell + 1, and the gamma image
/// is all of G(phi) whenever F(phi) is non-empty.
VerificationReport verify_cardinality(const BmObject& phi);

/// Precomposition Map(G(c), X) -> Map(F(c), X) for X = {0,...,m-1}.
struct HomTable {
    int m = 0;
    std::size_t g_size = 0;
    std::size_t f_size = 0;
    /// Every function G(c) -> X in lexicographic order, with its image.
    std::vector<std::vector<int>> domain;
    std::vector<std::vector<int>> image;
};

HomTable xi_component(const BmChain& chain, int m);

/// Precomposition commutes with restriction to each vertex of the chain.
VerificationReport verify_xi_naturality(const BmChain& chain, int m);

} // namespace bmq

#endif // BMQ_COMPARE_HPP

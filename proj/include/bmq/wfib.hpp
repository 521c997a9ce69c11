#ifndef BMQ_WFIB_HPP
#define BMQ_WFIB_HPP

#include "bmq/bm.hpp"
#include "bmq/quotient.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bmq {

/// A point (t, j) of the pullback of a chain along W: chain position t and
/// j in the fiber over 0 of phi_t.
struct FiberPoint {
    int t = 0;
    int j = 0;

    friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
    friend auto operator<=>(const FiberPoint&, const FiberPoint&) = default;
};

std::string to_string(const FiberPoint& p);

/// The fiber of W over phi: {0,...,ell}.
std::vector<int> w_fiber(const BmObject& phi);

struct PullbackGraph {
    int length = 0;
    std::vector<FiberPoint> vertices;
    /// ((t+1, j), (t, map_{t+1}(j))) for each edge and each j in the source fiber.
    std::vector<std::pair<FiberPoint, FiberPoint>> cross_edges;
};

PullbackGraph pullback_graph(const BmChain& chain);

/// A value of G: a finite set of classes together with, for each chain
/// position t, the map {0,...,ell_t} -> classes.
struct GSet {
    Quotient<FiberPoint> classes;
    std::vector<std::vector<std::size_t>> vertex_maps;

    std::size_t class_count() const noexcept { return classes.class_count(); }
};

/// Connected components of the underlying undirected graph.
GSet components(const PullbackGraph& graph);

GSet g_chain(const BmChain& chain);

/// G of a chain of length >= 1 assembled by pushouts of G of its edges
/// along G of the shared vertices. The carrier points here are
/// (edge s, class c of G(edge s)) rather than pullback vertices.
/// Throws Error(DegenerateDecomposition) for length 0.
GSet g_glued(const BmChain& chain);

/// G(phi) assembled from the fibers of the segments of phi glued along the
/// shared vertices; carrier points are (segment s, j). Throws for k = 0.
GSet g_object_via_segments(const BmObject& phi);

/// A bijection between the classes of a and b that commutes with every
/// vertex map, if one exists. Such a bijection is unique when it exists.
std::optional<std::vector<std::size_t>> g_isomorphism(const GSet& a, const GSet& b);

} // namespace bmq

#endif // BMQ_WFIB_HPP

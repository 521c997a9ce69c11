#include "bmq/wfib.hpp"

#include "bmq/error.hpp"

#include <algorithm>

namespace bmq {

namespace {

std::size_t point_index(const std::vector<FiberPoint>& sorted, FiberPoint p) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    if (it == sorted.end() || !(*it == p))
        throw Error(ErrorKind::Range, "point " + to_string(p) + " is not a pullback vertex");
    return static_cast<std::size_t>(it - sorted.begin());
}

} // namespace

std::string to_string(const FiberPoint& p) { return "(" + std::to_string(p.t) + "," + std::to_string(p.j) + ")"; }

std::vector<int> w_fiber(const BmObject& phi) {
    std::vector<int> out;
    for (int j = 0; j <= phi.ell(); ++j)
        out.push_back(j);
    return out;
}

PullbackGraph pullback_graph(const BmChain& chain) {
    PullbackGraph g;
    g.length = chain.length();
    for (int t = 0; t <= chain.length(); ++t)
        for (int j : w_fiber(chain.vertex(t)))
            g.vertices.push_back({t, j});
    for (int t = 1; t <= chain.length(); ++t) {
        const auto& map = chain.edge(t).map();
        for (int j : w_fiber(chain.vertex(t)))
            g.cross_edges.emplace_back(FiberPoint{t, j}, FiberPoint{t - 1, map(j)});
    }
    return g;
}

GSet components(const PullbackGraph& graph) {
    // vertices are generated sorted, but a caller may hand in a permuted graph
    std::vector<FiberPoint> sorted = graph.vertices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<IndexPair> identifications;
    identifications.reserve(graph.cross_edges.size());
    for (const auto& [a, b] : graph.cross_edges)
        identifications.emplace_back(point_index(sorted, a), point_index(sorted, b));

    GSet out{Quotient<FiberPoint>(sorted, identifications), {}};
    out.vertex_maps.resize(static_cast<std::size_t>(graph.length) + 1);
    for (const auto& p : sorted)
        out.vertex_maps.at(static_cast<std::size_t>(p.t)).push_back(out.classes.class_of(p));
    return out;
}

GSet g_chain(const BmChain& chain) { return components(pullback_graph(chain)); }

GSet g_glued(const BmChain& chain) {
    if (chain.length() < 1)
        throw Error(ErrorKind::DegenerateDecomposition, "gluing needs a chain with at least one edge");

    std::vector<GSet> pieces;
    std::vector<FiberPoint> carrier;
    std::vector<std::size_t> offset;
    for (int s = 1; s <= chain.length(); ++s) {
        pieces.push_back(g_chain(BmChain::from_edge(chain.edge(s))));
        offset.push_back(carrier.size());
        for (std::size_t c = 0; c < pieces.back().class_count(); ++c)
            carrier.push_back({s, static_cast<int>(c)});
    }
    // glue piece s (its vertex 1) to piece s+1 (its vertex 0) along G(phi_s)
    std::vector<IndexPair> identifications;
    for (std::size_t s = 0; s + 1 < pieces.size(); ++s) {
        const auto& left = pieces[s].vertex_maps[1];
        const auto& right = pieces[s + 1].vertex_maps[0];
        for (std::size_t j = 0; j < left.size(); ++j)
            identifications.emplace_back(offset[s] + left[j], offset[s + 1] + right[j]);
    }

    GSet out{Quotient<FiberPoint>(carrier, identifications), {}};
    auto glued_class = [&](std::size_t s, std::size_t local) {
        return out.classes.class_of_index(offset[s] + local);
    };
    out.vertex_maps.emplace_back();
    for (std::size_t local : pieces[0].vertex_maps[0])
        out.vertex_maps.back().push_back(glued_class(0, local));
    for (std::size_t s = 0; s < pieces.size(); ++s) {
        out.vertex_maps.emplace_back();
        for (std::size_t local : pieces[s].vertex_maps[1])
            out.vertex_maps.back().push_back(glued_class(s, local));
    }
    return out;
}

GSet g_object_via_segments(const BmObject& phi) {
    auto segments = segment_decompose(phi);
    std::vector<FiberPoint> carrier;
    std::vector<std::size_t> offset;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        offset.push_back(carrier.size());
        for (int j : w_fiber(segments[s]))
            carrier.push_back({static_cast<int>(s) + 1, j});
    }
    // segment s ends at vertex s+1 of phi, which is where segment s+1
    // starts; a shared vertex lies in the fiber iff it is 0 on both sides
    std::vector<IndexPair> identifications;
    for (std::size_t s = 0; s + 1 < segments.size(); ++s)
        if (segments[s].ell() == 1 && segments[s + 1].ell() >= 0)
            identifications.emplace_back(offset[s] + 1, offset[s + 1]);

    GSet out{Quotient<FiberPoint>(carrier, identifications), {}};
    // a single vertex map: fiber point j of phi sits in segment j+1 at 0,
    // or at the end of segment j when that is the last segment
    out.vertex_maps.emplace_back();
    for (int j : w_fiber(phi)) {
        std::size_t s = static_cast<std::size_t>(std::min(j, static_cast<int>(segments.size()) - 1));
        int local = j - static_cast<int>(s);
        out.vertex_maps.back().push_back(out.classes.class_of({static_cast<int>(s) + 1, local}));
    }
    return out;
}

std::optional<std::vector<std::size_t>> g_isomorphism(const GSet& a, const GSet& b) {
    if (a.class_count() != b.class_count() || a.vertex_maps.size() != b.vertex_maps.size())
        return std::nullopt;
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> forward(a.class_count(), unset);
    std::vector<std::size_t> backward(b.class_count(), unset);
    for (std::size_t t = 0; t < a.vertex_maps.size(); ++t) {
        if (a.vertex_maps[t].size() != b.vertex_maps[t].size())
            return std::nullopt;
        for (std::size_t j = 0; j < a.vertex_maps[t].size(); ++j) {
            std::size_t x = a.vertex_maps[t][j], y = b.vertex_maps[t][j];
            if (forward[x] == unset && backward[y] == unset) {
                forward[x] = y;
                backward[y] = x;
            } else if (forward[x] != y || backward[y] != x) {
                return std::nullopt;
            }
        }
    }
    if (std::find(forward.begin(), forward.end(), unset) != forward.end())
        return std::nullopt;
    return forward;
}

} // namespace bmq

#include "bmq/compare.hpp"

#include "bmq/error.hpp"

#include <algorithm>
#include <set>

namespace bmq {

namespace {

using Term = QuiverLabel;

std::string describe(const BmObject& owner, const QuiverLabel& label, std::size_t cls) {
    return to_string(label) + "@" + to_string(owner) + "->c" + std::to_string(cls);
}

// G-class of a (possibly out-of-range) generator name sitting at chain vertex label.vertex
std::size_t image_in(const BmChain& chain, const GSet& g, const QuiverLabel& label) {
    return g.vertex_maps.at(static_cast<std::size_t>(label.vertex))
        .at(static_cast<std::size_t>(gamma_index(chain.vertex(label.vertex), label)));
}

// The identities behind each pairing rule, one chain of names per rule
// instance. Every name in a chain must have the same image.
std::vector<std::vector<Term>> identity_chains(const BmEdge& edge) {
    const auto& map = edge.map();
    const int ell = edge.phi().ell();
    const int ell_prime = edge.phi_prime().ell();
    auto x1 = [](int i) { return QuiverLabel::one(i, 0); };
    auto x2 = [](int i) { return QuiverLabel::two(i, 0); };
    auto y1 = [](int i) { return QuiverLabel::one(i, 1); };
    auto y2 = [](int i) { return QuiverLabel::two(i, 1); };

    std::vector<std::vector<Term>> chains;
    for (int i = 1; i <= ell_prime; ++i) {
        const int lo = map(i - 1), hi = map(i);
        if (lo == hi) {
            chains.push_back({y1(i), x1(hi), x1(lo), y1(i - 1), y2(i)});
            continue;
        }
        chains.push_back({y1(i), x1(hi)});
        chains.push_back({x2(lo + 1), x1(lo), y1(i - 1), y2(i)});
        for (int j = lo + 2; j <= hi; ++j)
            chains.push_back({x2(j), x1(j - 1)});
    }
    if (edge.phi_prime().beta() == 1) {
        const int top = map(ell_prime);
        chains.push_back({QuiverLabel::mid(0), x1(ell)});
        chains.push_back({x2(top + 1), x1(top), y1(ell_prime), QuiverLabel::mid(1)});
        for (int j = top + 2; j <= ell; ++j)
            chains.push_back({x2(j), x1(j - 1)});
    }
    return chains;
}

} // namespace

int gamma_index(const BmObject& phi, const QuiverLabel& label) {
    const int ell = phi.ell();
    int j = 0;
    switch (label.kind) {
        case LabelKind::One: j = label.index; break;
        case LabelKind::Two: j = label.index - 1; break;
        case LabelKind::Mid:
            if (phi.beta() != 1)
                throw Error(ErrorKind::UnresolvableLabel, "xm on " + to_string(phi) + " with beta = 0");
            j = ell;
            break;
    }
    if (j < 0 || j > ell)
        throw Error(ErrorKind::Range, to_string(label) + " has no image in the fiber of " + to_string(phi));
    return j;
}

const char* to_string(Status status) {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Warn: return "warn";
    }
    return "?";
}

GammaComponent gamma_object(const BmObject& phi) { return gamma_chain(BmChain(phi)); }

GammaComponent gamma_chain(const BmChain& chain, bool strict) {
    GammaComponent out{chain, f_chain(chain), g_chain(chain), {}, {}, {}};
    const auto& classes = out.f.classes();
    for (const auto& label : classes.elements())
        out.witness.emplace_back(label, image_in(chain, out.g, label));

    out.assignment.resize(classes.class_count());
    for (std::size_t c = 0; c < classes.class_count(); ++c) {
        const auto& block = classes.blocks()[c];
        const std::size_t image = image_in(chain, out.g, block.front());
        out.assignment[c] = image;
        for (const auto& other : block)
            if (image_in(chain, out.g, other) != image)
                out.conflicts.emplace_back(block.front(), other);
    }
    if (strict && !out.conflicts.empty())
        throw Error(ErrorKind::IllDefinedComponent,
                    to_string(chain) + ": " + to_string(out.conflicts.front().first) + " and " +
                        to_string(out.conflicts.front().second) + " share a class but not an image");
    return out;
}

VerificationReport verify_constancy(const BmEdge& edge) {
    VerificationReport report{to_string(edge)};
    const BmChain chain = BmChain::from_edge(edge);
    const GSet g = g_chain(chain);

    for (const auto& p : pairing_set(edge)) {
        const std::size_t a = image_in(chain, g, p.first);
        const std::size_t b = image_in(chain, g, p.second);
        report.expect(a == b, std::string(to_string(p.rule)) + "[" + std::to_string(p.step) + "]: " +
                                  describe(chain.vertex(p.first.vertex), p.first, a) + " vs " +
                                  describe(chain.vertex(p.second.vertex), p.second, b));
    }
    for (const auto& terms : identity_chains(edge)) {
        std::string text;
        bool same = true;
        const std::size_t first = image_in(chain, g, terms.front());
        for (const auto& term : terms) {
            const std::size_t cls = image_in(chain, g, term);
            same = same && cls == first;
            text += (text.empty() ? "" : " = ") + to_string(term) + "[c" + std::to_string(cls) + "]";
        }
        report.expect(same, "identity chain breaks: " + text);
        report.evidence.push_back(text);
    }
    return report;
}

VerificationReport verify_naturality(const BmChain& chain) {
    VerificationReport report{to_string(chain)};
    const GammaComponent gamma = gamma_chain(chain, false);
    for (const auto& [a, b] : gamma.conflicts)
        report.fail("ill-defined on class of " + to_string(a) + ": " + to_string(b));

    // vertex inclusions: F(phi_t) -> F(c) -> G(c) against F(phi_t) -> G(phi_t) -> G(c)
    for (int t = 0; t <= chain.length(); ++t) {
        const BmObject& phi = chain.vertex(t);
        for (const auto& local : f_object(phi)) {
            const std::size_t via_f = gamma.assignment[gamma.f.include(t, local)];
            const std::size_t via_g =
                gamma.g.vertex_maps[static_cast<std::size_t>(t)][static_cast<std::size_t>(gamma_index(phi, local))];
            report.expect(via_f == via_g, "vertex " + std::to_string(t) + " square fails at " + to_string(local) +
                                              ": c" + std::to_string(via_f) + " vs c" + std::to_string(via_g));
        }
    }

    // segment inclusions: edge s of the chain, positions s-1 and s
    for (int s = 1; s <= chain.length(); ++s) {
        const GammaComponent piece = gamma_chain(BmChain::from_edge(chain.edge(s)), false);
        const auto& blocks = piece.f.classes().blocks();
        for (std::size_t c = 0; c < blocks.size(); ++c) {
            // F-inclusion of the class, through every member
            std::set<std::size_t> f_targets;
            for (const auto& member : blocks[c])
                f_targets.insert(gamma.f.include(s - 1 + member.vertex, QuiverLabel{0, member.kind, member.index}));
            report.expect(f_targets.size() == 1, "segment " + std::to_string(s) + ": F-inclusion splits class of " +
                                                     to_string(blocks[c].front()));
            // G-inclusion of gamma(piece)(c), through every point of that class
            std::set<std::size_t> g_targets;
            for (const auto& point : piece.g.classes.blocks()[piece.assignment[c]])
                g_targets.insert(gamma.g.vertex_maps[static_cast<std::size_t>(s - 1 + point.t)]
                                                    [static_cast<std::size_t>(point.j)]);
            report.expect(g_targets.size() == 1, "segment " + std::to_string(s) + ": G-inclusion splits a class");
            const std::size_t via_f = gamma.assignment[*f_targets.begin()];
            report.expect(via_f == *g_targets.begin(),
                          "segment " + std::to_string(s) + " square fails at " + to_string(blocks[c].front()));
        }
    }
    return report;
}

VerificationReport verify_decomposition(const BmObject& phi) {
    VerificationReport report{to_string(phi)};

    const auto direct = f_object(phi);
    const auto via = f_object_via_segments(phi);
    std::vector<QuiverLabel> globals;
    for (const auto& s : via)
        globals.push_back(s.global);
    std::vector<QuiverLabel> sorted_direct = direct;
    std::sort(globals.begin(), globals.end());
    std::sort(sorted_direct.begin(), sorted_direct.end());
    report.expect(std::adjacent_find(globals.begin(), globals.end()) == globals.end(),
                  "segment relabeling is not injective");
    report.expect(globals == sorted_direct, "segment relabeling does not hit F(phi): " + std::to_string(via.size()) +
                                                " vs " + std::to_string(direct.size()));

    const GSet g_direct = g_chain(BmChain(phi));
    const GSet g_via = g_object_via_segments(phi);
    report.expect(g_isomorphism(g_via, g_direct).has_value(), "segment gluing of G disagrees with G(phi)");

    const auto segments = segment_decompose(phi);
    for (const auto& s : via) {
        const int local = gamma_index(segments[static_cast<std::size_t>(s.segment - 1)], s.local);
        const int global = gamma_index(phi, s.global);
        report.expect(local + s.segment - 1 == global, "gamma disagrees on segment " + std::to_string(s.segment) +
                                                           " at " + to_string(s.local));
    }
    report.evidence.push_back("|F| = " + std::to_string(direct.size()) + ", |G| = " +
                              std::to_string(g_direct.class_count()));
    return report;
}

VerificationReport verify_gluing(const BmChain& chain) {
    VerificationReport report{to_string(chain)};
    const GSet direct = g_chain(chain);
    const int ell0 = chain.vertex(0).ell();

    report.expect(direct.class_count() == static_cast<std::size_t>(ell0 + 1),
                  "|G| = " + std::to_string(direct.class_count()) + " but ell_0 + 1 = " + std::to_string(ell0 + 1));
    bool ordered = true;
    for (std::size_t j = 0; j < direct.vertex_maps[0].size(); ++j)
        ordered = ordered && direct.vertex_maps[0][j] == j;
    report.expect(ordered, "G is not identified with {0,...,ell_0} in order");

    for (int t = 1; t <= chain.length(); ++t) {
        const auto& map = chain.edge(t).map();
        for (int j = 0; j <= chain.vertex(t).ell(); ++j)
            report.expect(direct.vertex_maps[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] ==
                              direct.vertex_maps[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(map(j))],
                          "vertex map " + std::to_string(t) + " is not the previous one after the edge map");
    }

    if (chain.length() >= 1)
        report.expect(g_isomorphism(g_glued(chain), direct).has_value(),
                      "gluing along edges disagrees with G of the chain");
    return report;
}

VerificationReport verify_identification(const BmEdge& edge) {
    VerificationReport report{to_string(edge)};
    const GSet g = g_chain(BmChain::from_edge(edge));
    for (int i = 0; i <= edge.phi_prime().ell(); ++i) {
        const int target = edge.map()(i);
        report.expect(g.vertex_maps[1][static_cast<std::size_t>(i)] == g.vertex_maps[0][static_cast<std::size_t>(target)],
                      "(1," + std::to_string(i) + ") and (0," + std::to_string(target) + ") lie in different classes");
    }
    return report;
}

VerificationReport verify_cardinality(const BmObject& phi) {
    VerificationReport report{to_string(phi)};
    const int ell = phi.ell(), beta = phi.beta();
    const auto f = f_object(phi);
    const GSet g = g_chain(BmChain(phi));
    const int f_expected = std::max(0, 2 * ell + beta);
    report.expect(static_cast<int>(f.size()) == f_expected,
                  "|F| = " + std::to_string(f.size()) + ", expected " + std::to_string(f_expected));
    report.expect(static_cast<int>(g.class_count()) == ell + 1,
                  "|G| = " + std::to_string(g.class_count()) + ", expected " + std::to_string(ell + 1));

    std::set<int> image;
    for (const auto& label : f)
        image.insert(gamma_index(phi, label));
    const bool covers = ell >= 1 || beta == 1;
    report.expect(static_cast<int>(image.size()) == (covers ? ell + 1 : 0),
                  "gamma image has " + std::to_string(image.size()) + " elements");
    return report;
}

HomTable xi_component(const BmChain& chain, int m) {
    const GammaComponent gamma = gamma_chain(chain);
    HomTable table;
    table.m = m;
    table.g_size = gamma.g.class_count();
    table.f_size = gamma.f.class_count();
    if (m < 0)
        throw Error(ErrorKind::Range, "target set size must be >= 0");
    if (m == 0 && table.g_size > 0)
        return table; // Map(G, {}) is empty

    std::vector<int> fn(table.g_size, 0);
    while (true) {
        std::vector<int> pulled(table.f_size);
        for (std::size_t c = 0; c < table.f_size; ++c)
            pulled[c] = fn[gamma.assignment[c]];
        table.domain.push_back(fn);
        table.image.push_back(std::move(pulled));
        std::size_t pos = fn.size();
        while (pos > 0 && fn[pos - 1] == m - 1)
            fn[--pos] = 0;
        if (pos == 0)
            break;
        ++fn[pos - 1];
    }
    return table;
}

VerificationReport verify_xi_naturality(const BmChain& chain, int m) {
    VerificationReport report{to_string(chain) + "#m=" + std::to_string(m)};
    const GammaComponent gamma = gamma_chain(chain);
    const HomTable whole = xi_component(chain, m);

    for (int t = 0; t <= chain.length(); ++t) {
        const BmObject& phi = chain.vertex(t);
        const GammaComponent at_vertex = gamma_object(phi);
        const HomTable local = xi_component(BmChain(phi), m);
        const auto generators = f_object(phi);
        const auto& vertex_map = gamma.g.vertex_maps[static_cast<std::size_t>(t)];

        for (std::size_t row = 0; row < whole.domain.size(); ++row) {
            // restrict the G-function to the vertex, then pull back along gamma(phi_t)
            std::vector<int> restricted(vertex_map.size());
            for (std::size_t j = 0; j < vertex_map.size(); ++j)
                restricted[j] = whole.domain[row][vertex_map[j]];
            const auto it = std::find(local.domain.begin(), local.domain.end(), restricted);
            if (it == local.domain.end()) {
                report.fail("restriction of row " + std::to_string(row) + " is missing at vertex " + std::to_string(t));
                continue;
            }
            const auto& pulled_local = local.image[static_cast<std::size_t>(it - local.domain.begin())];
            for (const auto& label : generators) {
                const int lhs = whole.image[row][gamma.f.include(t, label)];
                const int rhs = pulled_local[at_vertex.f.include(0, label)];
                report.expect(lhs == rhs, "vertex " + std::to_string(t) + ", row " + std::to_string(row) + ", " +
                                              to_string(label) + ": " + std::to_string(lhs) + " vs " +
                                              std::to_string(rhs));
            }
        }
    }
    return report;
}

} // namespace bmq

#include "bmq/bm.hpp"

#include "bmq/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bmq {

namespace {

int count_zeros(const std::vector<std::uint8_t>& values) {
    return static_cast<int>(std::count(values.begin(), values.end(), std::uint8_t{0}));
}

const BmObject& first_source(const std::vector<BmEdge>& edges) {
    if (edges.empty())
        throw Error(ErrorKind::Validation, "an edge list needs at least one edge");
    return edges.front().phi();
}

} // namespace

BmObject::BmObject(std::vector<std::uint8_t> values) : values_(std::move(values)), ell_(-1) {
    if (values_.empty())
        throw Error(ErrorKind::Validation, "an object of BM needs k >= 0");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] > 1)
            throw Error(ErrorKind::Validation, "values must lie in {0,1}");
        if (i > 0 && values_[i - 1] > values_[i])
            throw Error(ErrorKind::Validation, "values must be non-decreasing");
    }
    ell_ = count_zeros(values_) - 1;
}

int fiber_zero(const BmObject& phi) { return phi.ell(); }

int crossing_count(const BmObject& phi) {
    int count = 0;
    for (int i = 1; i <= phi.top(); ++i)
        if (phi(i - 1) < phi(i))
            ++count;
    return count;
}

BmObject named_object(std::string_view name) {
    if (name == "a" || name == "\xF0\x9D\x94\x9E") // 𝔞
        return BmObject({0, 0});
    if (name == "b" || name == "\xF0\x9D\x94\x9F") // 𝔟
        return BmObject({1, 1});
    if (name == "m" || name == "\xF0\x9D\x94\xAA") // 𝔪
        return BmObject({0, 1});
    throw Error(ErrorKind::Name, "unknown object name '" + std::string(name) + "'");
}

std::vector<BmObject> enumerate_objects_of_size(int k) {
    std::vector<BmObject> out;
    if (k < 0)
        return out;
    // ell = k, k-1, ..., -1 gives lexicographic order of the bit strings
    for (int ell = k; ell >= -1; --ell) {
        std::vector<std::uint8_t> values(static_cast<std::size_t>(k) + 1, 1);
        std::fill_n(values.begin(), ell + 1, std::uint8_t{0});
        out.emplace_back(std::move(values));
    }
    return out;
}

std::vector<BmObject> enumerate_objects(int k_max) {
    std::vector<BmObject> out;
    for (int k = 0; k <= k_max; ++k) {
        auto level = enumerate_objects_of_size(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

BmEdge::BmEdge(BmObject phi, BmObject phi_prime, DeltaMap map)
    : phi_(std::move(phi)), phi_prime_(std::move(phi_prime)), map_(std::move(map)) {
    if (map_.source_top() != phi_prime_.top() || map_.target_top() != phi_.top())
        throw Error(ErrorKind::Validation,
                    "map must go [" + std::to_string(phi_prime_.top()) + "]->[" + std::to_string(phi_.top()) + "]");
    for (int i = 0; i <= phi_prime_.top(); ++i)
        if (phi_(map_(i)) != phi_prime_(i))
            throw Error(ErrorKind::Validation, "map " + to_string(map_) + " does not lie over [1]");
}

BmEdge BmEdge::identity(const BmObject& phi) { return BmEdge(phi, phi, DeltaMap::identity(phi.top())); }

std::vector<BmEdge> enumerate_edges(const BmObject& phi, const BmObject& phi_prime) {
    std::vector<BmEdge> out;
    for (auto& map : enumerate_maps(phi_prime.top(), phi.top())) {
        bool over = true;
        for (int i = 0; i <= phi_prime.top() && over; ++i)
            over = phi(map(i)) == phi_prime(i);
        if (over)
            out.emplace_back(phi, phi_prime, std::move(map));
    }
    return out;
}

BmChain::BmChain(BmObject base) : base_(std::move(base)) {}

BmChain::BmChain(std::vector<BmEdge> edges) : base_(first_source(edges)), edges_(std::move(edges)) {
    for (std::size_t t = 1; t < edges_.size(); ++t)
        if (!(edges_[t - 1].phi_prime() == edges_[t].phi()))
            throw Error(ErrorKind::Validation, "edge " + std::to_string(t + 1) + " does not start where edge " +
                                                   std::to_string(t) + " ends");
}

const BmObject& BmChain::vertex(int t) const {
    if (t < 0 || t > length())
        throw Error(ErrorKind::Range, "chain vertex " + std::to_string(t) + " out of range");
    return t == 0 ? base_ : edges_[static_cast<std::size_t>(t - 1)].phi_prime();
}

std::vector<BmChain> enumerate_chains(int max_length, int k_max) {
    auto objects = enumerate_objects(k_max);
    std::vector<BmChain> out;
    for (const auto& obj : objects)
        out.emplace_back(obj);
    if (max_length < 1)
        return out;

    // outgoing[i] lists every edge leaving objects[i]
    std::map<BmObject, std::size_t> index;
    for (std::size_t i = 0; i < objects.size(); ++i)
        index.emplace(objects[i], i);
    std::vector<std::vector<BmEdge>> outgoing(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (const auto& target : objects)
            for (auto& e : enumerate_edges(objects[i], target))
                outgoing[i].push_back(std::move(e));

    std::vector<BmEdge> path;
    std::function<void(std::size_t, int)> extend = [&](std::size_t from, int remaining) {
        for (const auto& e : outgoing[from]) {
            path.push_back(e);
            if (remaining == 1)
                out.emplace_back(path);
            else
                extend(index.at(e.phi_prime()), remaining - 1);
            path.pop_back();
        }
    };
    for (int n = 1; n <= max_length; ++n)
        for (std::size_t i = 0; i < objects.size(); ++i)
            extend(i, n);
    return out;
}

std::vector<BmObject> segment_decompose(const BmObject& phi) {
    if (phi.top() < 1)
        throw Error(ErrorKind::DegenerateDecomposition, "object " + to_string(phi) + " has no segments");
    std::vector<BmObject> out;
    out.reserve(static_cast<std::size_t>(phi.top()));
    for (int i = 1; i <= phi.top(); ++i)
        out.emplace_back(std::vector<std::uint8_t>{phi.values()[static_cast<std::size_t>(i - 1)],
                                                   phi.values()[static_cast<std::size_t>(i)]});
    return out;
}

std::string to_string(const BmObject& phi) {
    std::string out;
    for (auto v : phi.values())
        out += v ? '1' : '0';
    return out;
}

std::string to_string(const BmEdge& edge) {
    return "phi=" + to_string(edge.phi()) + ";phiPrime=" + to_string(edge.phi_prime()) + ";map=" +
           to_string(edge.map());
}

std::string to_string(const BmChain& chain) {
    if (chain.length() == 0)
        return to_string(chain.vertex(0));
    std::string out;
    for (const auto& e : chain.edges()) {
        if (!out.empty())
            out += '|';
        out += to_string(e);
    }
    return out;
}

BmObject parse_object(std::string_view text) {
    std::vector<std::uint8_t> values;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw Error(ErrorKind::Parse, "object '" + std::string(text) + "' is not a bit string");
        values.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (values.empty())
        throw Error(ErrorKind::Parse, "empty object");
    return BmObject(std::move(values));
}

BmEdge parse_edge(std::string_view text) {
    std::string_view phi, phi_prime, map;
    bool has_phi = false, has_prime = false, has_map = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        std::string_view field = text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
        std::size_t eq = field.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::Parse, "edge field '" + std::string(field) + "' lacks '='");
        std::string_view key = field.substr(0, eq), value = field.substr(eq + 1);
        bool* seen = nullptr;
        if (key == "phi") {
            phi = value;
            seen = &has_phi;
        } else if (key == "phiPrime") {
            phi_prime = value;
            seen = &has_prime;
        } else if (key == "map") {
            map = value;
            seen = &has_map;
        } else {
            throw Error(ErrorKind::Parse, "unknown edge field '" + std::string(key) + "'");
        }
        if (*seen)
            throw Error(ErrorKind::Parse, "duplicate edge field '" + std::string(key) + "'");
        *seen = true;
        if (semi == std::string_view::npos)
            break;
        pos = semi + 1;
    }
    if (!has_phi || !has_prime || !has_map)
        throw Error(ErrorKind::Parse, "edge '" + std::string(text) + "' needs phi, phiPrime and map");
    BmObject source = parse_object(phi);
    BmObject target = parse_object(phi_prime);
    DeltaMap m = parse_delta_map(map, source.top());
    return BmEdge(std::move(source), std::move(target), std::move(m));
}

BmChain parse_chain(std::string_view text) {
    if (text.find('=') == std::string_view::npos)
        return BmChain(parse_object(text));
    std::vector<BmEdge> edges;
    std::size_t pos = 0;
    while (true) {
        std::size_t bar = text.find('|', pos);
        edges.push_back(parse_edge(text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos)));
        if (bar == std::string_view::npos)
            break;
        pos = bar + 1;
    }
    return BmChain(std::move(edges));
}

} // namespace bmq

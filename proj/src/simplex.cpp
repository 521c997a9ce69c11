#include "bmq/simplex.hpp"

#include "bmq/error.hpp"

#include <charconv>

namespace bmq {

DeltaMap::DeltaMap(int target_top, std::vector<int> images)
    : target_top_(target_top), images_(std::move(images)) {
    if (target_top_ < 0)
        throw Error(ErrorKind::Validation, "negative target [" + std::to_string(target_top_) + "]");
    if (images_.empty())
        throw Error(ErrorKind::Validation, "a map must have a non-empty source");
    int prev = 0;
    for (int v : images_) {
        if (v < 0 || v > target_top_)
            throw Error(ErrorKind::Validation,
                        "image " + std::to_string(v) + " outside [" + std::to_string(target_top_) + "]");
        if (v < prev)
            throw Error(ErrorKind::Validation, "images are not non-decreasing");
        prev = v;
    }
}

DeltaMap DeltaMap::identity(int top) {
    std::vector<int> images(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i)
        images[static_cast<std::size_t>(i)] = i;
    return DeltaMap(top, std::move(images));
}

DeltaMap compose(const DeltaMap& g, const DeltaMap& f) {
    if (f.target_top() != g.source_top())
        throw Error(ErrorKind::Composition,
                    "cannot compose [" + std::to_string(g.source_top()) + "]->[" +
                        std::to_string(g.target_top()) + "] after map into [" +
                        std::to_string(f.target_top()) + "]");
    std::vector<int> images;
    images.reserve(f.images().size());
    for (int v : f.images())
        images.push_back(g(v));
    return DeltaMap(g.target_top(), std::move(images));
}

std::vector<DeltaMap> enumerate_maps(int k_prime, int k) {
    std::vector<DeltaMap> out;
    if (k_prime < 0 || k < 0)
        return out;
    out.reserve(static_cast<std::size_t>(count_maps(k_prime, k)));
    std::vector<int> images(static_cast<std::size_t>(k_prime) + 1, 0);
    // odometer over non-decreasing sequences
    while (true) {
        out.emplace_back(k, images);
        int pos = k_prime;
        while (pos >= 0 && images[static_cast<std::size_t>(pos)] == k)
            --pos;
        if (pos < 0)
            break;
        int next = images[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i <= k_prime; ++i)
            images[static_cast<std::size_t>(i)] = next;
    }
    return out;
}

long long count_maps(int k_prime, int k) {
    if (k_prime < 0 || k < 0)
        return 0;
    // C(n, r) with n = k+k'+1, r = k'+1
    long long n = k + k_prime + 1, r = k_prime + 1, c = 1;
    for (long long i = 1; i <= r; ++i)
        c = c * (n - r + i) / i;
    return c;
}

std::string to_string(const DeltaMap& map) {
    std::string out;
    for (std::size_t i = 0; i < map.images().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(map.images()[i]);
    }
    return out;
}

DeltaMap parse_delta_map(std::string_view text, int target_top) {
    std::vector<int> images;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(ErrorKind::Parse, "bad map entry '" + std::string(tok) + "' in '" + std::string(text) + "'");
        images.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return DeltaMap(target_top, std::move(images));
}

} // namespace bmq

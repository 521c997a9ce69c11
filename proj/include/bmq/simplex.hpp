#ifndef BMQ_SIMPLEX_HPP
#define BMQ_SIMPLEX_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bmq {

/// A monotone map [k'] -> [k] in the simplex category. Objects [n] are
/// identified with their top index n, so images() has k'+1 entries, each
/// in {0,...,k}.
class DeltaMap {
public:
    /// Throws Error(Validation) unless images is non-empty, non-decreasing
    /// and bounded by target_top.
    DeltaMap(int target_top, std::vector<int> images);

    static DeltaMap identity(int top);

    int source_top() const noexcept { return static_cast<int>(images_.size()) - 1; }
    int target_top() const noexcept { return target_top_; }
    const std::vector<int>& images() const noexcept { return images_; }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }

    friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
    friend auto operator<=>(const DeltaMap&, const DeltaMap&) = default;

private:
    int target_top_;
    std::vector<int> images_;
};

/// g after f. Throws Error(Composition) if f does not land in g's source.
DeltaMap compose(const DeltaMap& g, const DeltaMap& f);

/// Every monotone map [k_prime] -> [k], lexicographic in the image sequence.
std::vector<DeltaMap> enumerate_maps(int k_prime, int k);

/// Number of monotone maps [k_prime] -> [k], i.e. C(k+k'+1, k'+1).
long long count_maps(int k_prime, int k);

// "0,2,2"; the target is not part of the text.
std::string to_string(const DeltaMap& map);
DeltaMap parse_delta_map(std::string_view text, int target_top);

} // namespace bmq

#endif // BMQ_SIMPLEX_HPP

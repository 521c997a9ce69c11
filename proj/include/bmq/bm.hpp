#ifndef BMQ_BM_HPP
#define BMQ_BM_HPP

#include "bmq/simplex.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bmq {

/// An object of BM: a monotone map [k] -> [1], stored as its values.
///
/// The fiber over 0 is {0,...,ell} (empty for ell = -1); beta records
/// whether the map crosses from 0 to 1.
class BmObject {
public:
    /// Throws Error(Validation) unless values is a non-empty, non-decreasing 0/1 sequence.
    explicit BmObject(std::vector<std::uint8_t> values);

    int top() const noexcept { return static_cast<int>(values_.size()) - 1; }
    int ell() const noexcept { return ell_; }
    int beta() const noexcept { return (ell_ > -1 && ell_ < top()) ? 1 : 0; }
    int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::uint8_t>& values() const noexcept { return values_; }

    friend bool operator==(const BmObject&, const BmObject&) = default;
    friend auto operator<=>(const BmObject&, const BmObject&) = default;

private:
    std::vector<std::uint8_t> values_;
    int ell_;
};

/// Top index of the fiber over 0.
int fiber_zero(const BmObject& phi);
/// Number of i with phi(i-1) < phi(i); 0 or 1.
int crossing_count(const BmObject& phi);

/// "a" -> 00, "b" -> 11, "m" -> 01. The fraktur letters are accepted as well.
BmObject named_object(std::string_view name);

/// All objects with 0 <= k <= k_max, ordered by k then by bit string.
std::vector<BmObject> enumerate_objects(int k_max);
std::vector<BmObject> enumerate_objects_of_size(int k);

/// A morphism phi -> phi_prime of BM, given by a map [k'] -> [k] over [1].
class BmEdge {
public:
    /// Throws Error(Validation) if the map has the wrong shape or does not lie over [1].
    BmEdge(BmObject phi, BmObject phi_prime, DeltaMap map);

    static BmEdge identity(const BmObject& phi);

    const BmObject& phi() const noexcept { return phi_; }
    const BmObject& phi_prime() const noexcept { return phi_prime_; }
    const DeltaMap& map() const noexcept { return map_; }

    friend bool operator==(const BmEdge&, const BmEdge&) = default;

private:
    BmObject phi_;
    BmObject phi_prime_;
    DeltaMap map_;
};

std::vector<BmEdge> enumerate_edges(const BmObject& phi, const BmObject& phi_prime);

/// A functor [n] -> BM. Vertex t is phi_t; edge t (1 <= t <= n) runs from
/// phi_{t-1} to phi_t.
class BmChain {
public:
    explicit BmChain(BmObject base);
    /// Throws Error(Validation) if the edges do not share endpoints or the list is empty.
    explicit BmChain(std::vector<BmEdge> edges);

    static BmChain from_edge(const BmEdge& edge) { return BmChain(std::vector<BmEdge>{edge}); }

    int length() const noexcept { return static_cast<int>(edges_.size()); }
    const BmObject& vertex(int t) const;
    /// Edge t for 1 <= t <= length().
    const BmEdge& edge(int t) const { return edges_.at(static_cast<std::size_t>(t - 1)); }
    const std::vector<BmEdge>& edges() const noexcept { return edges_; }

private:
    BmObject base_;
    std::vector<BmEdge> edges_;
};

/// Every chain of length <= max_length whose vertices all have k <= k_max,
/// ordered by length, then depth-first in enumeration order.
std::vector<BmChain> enumerate_chains(int max_length, int k_max);

/// Restrictions of phi to the segments {i-1 < i}, i = 1..k.
/// Throws Error(DegenerateDecomposition) when k = 0.
std::vector<BmObject> segment_decompose(const BmObject& phi);

// Text forms: "0011"; "phi=0011;phiPrime=01;map=1,3"; chains join edges with '|'
// and a length-0 chain is the bare object.
std::string to_string(const BmObject& phi);
std::string to_string(const BmEdge& edge);
std::string to_string(const BmChain& chain);
BmObject parse_object(std::string_view text);
BmEdge parse_edge(std::string_view text);
BmChain parse_chain(std::string_view text);

} // namespace bmq

#endif // BMQ_BM_HPP

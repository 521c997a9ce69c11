#ifndef BMQ_QUOTIENT_HPP
#define BMQ_QUOTIENT_HPP

#include "bmq/error.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bmq {

/// Union-find over {0,...,n-1} with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A finite set modulo the equivalence relation generated by a list of
/// identifications: the pushout of sets used for both F and G.
///
/// Blocks are sorted and ordered by their least element, which is also the
/// canonical representative. T needs a strict total order via operator<.
template <class T>
class Quotient {
public:
    Quotient() = default;

    Quotient(std::vector<T> elements, std::span<const IndexPair> identifications)
        : elements_(std::move(elements)), class_of_(elements_.size()) {
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (!index_.emplace(elements_[i], i).second)
                throw Error(ErrorKind::Construction, "duplicate element in quotient carrier");
        DisjointSets sets(elements_.size());
        for (auto [a, b] : identifications) {
            if (a >= elements_.size() || b >= elements_.size())
                throw Error(ErrorKind::Range, "identification refers to a missing element");
            sets.unite(a, b);
        }
        // a block is keyed by its least element, so sorting the indices
        // first makes block order and member order come out sorted
        std::vector<std::size_t> order(elements_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return elements_[a] < elements_[b]; });
        std::map<std::size_t, std::size_t> root_to_block;
        for (std::size_t i : order) {
            auto [it, fresh] = root_to_block.emplace(sets.find(i), blocks_.size());
            if (fresh)
                blocks_.emplace_back();
            blocks_[it->second].push_back(elements_[i]);
            class_of_[i] = it->second;
        }
    }

    /// Discrete quotient.
    explicit Quotient(std::vector<T> elements) : Quotient(std::move(elements), std::span<const IndexPair>{}) {}

    const std::vector<T>& elements() const noexcept { return elements_; }
    const std::vector<std::vector<T>>& blocks() const noexcept { return blocks_; }
    std::size_t class_count() const noexcept { return blocks_.size(); }

    bool contains(const T& e) const { return index_.count(e) != 0; }

    std::size_t index_of(const T& e) const {
        auto it = index_.find(e);
        if (it == index_.end())
            throw Error(ErrorKind::Range, "element is not in the quotient carrier");
        return it->second;
    }

    /// Block index of an element.
    std::size_t class_of(const T& e) const { return class_of_[index_of(e)]; }
    std::size_t class_of_index(std::size_t i) const { return class_of_.at(i); }

    const T& representative(std::size_t block) const { return blocks_.at(block).front(); }
    const T& find(const T& e) const { return representative(class_of(e)); }

private:
    std::vector<T> elements_;
    std::map<T, std::size_t> index_;
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<T>> blocks_;
};

} // namespace bmq

#endif // BMQ_QUOTIENT_HPP

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include "flagbal/errors.hpp"

namespace flagbal {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

// A finite set of positive vertex labels, kept strictly ascending.
class Face {
public:
    using Storage = boost::container::small_vector<Vertex, 8>;

    Face() = default;
    Face(std::initializer_list<Vertex> vs) : Face(std::span<const Vertex>(vs.begin(), vs.size())) {}
    explicit Face(std::span<const Vertex> vs) : vertices_(vs.begin(), vs.end()) { normalize(); }

    // Trusted constructor for callers that already hold a strictly ascending list.
    static Face from_sorted(std::span<const Vertex> vs) {
        Face f;
        f.vertices_.assign(vs.begin(), vs.end());
        return f;
    }

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    Vertex max() const { return vertices_.back(); }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }
    std::span<const Vertex> span() const { return {vertices_.data(), vertices_.size()}; }

    bool contains(Vertex v) const { return std::binary_search(begin(), end(), v); }
    bool includes(const Face& other) const { return std::includes(begin(), end(), other.begin(), other.end()); }
    bool disjoint(const Face& other) const {
        auto a = begin();
        auto b = other.begin();
        while (a != end() && b != other.end()) {
            if (*a == *b) return false;
            if (*a < *b)
                ++a;
            else
                ++b;
        }
        return true;
    }

    Face without_index(std::size_t i) const {
        Face f;
        f.vertices_.reserve(size() - 1);
        for (std::size_t j = 0; j < size(); ++j)
            if (j != i) f.vertices_.push_back(vertices_[j]);
        return f;
    }

    Face with(Vertex v) const {
        detail::require(v >= 1 && !contains(v), "Face::with: vertex already present");
        Face f = *this;
        f.vertices_.insert(std::upper_bound(f.vertices_.begin(), f.vertices_.end(), v), v);
        return f;
    }

    Face set_union(const Face& other) const {
        Face f;
        std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(f.vertices_));
        return f;
    }

    Face set_difference(const Face& other) const {
        Face f;
        std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(f.vertices_));
        return f;
    }

    Storage& raw() { return vertices_; }

    friend bool operator==(const Face& a, const Face& b) { return a.vertices_ == b.vertices_; }

private:
    void normalize() {
        std::sort(vertices_.begin(), vertices_.end());
        detail::require(std::adjacent_find(vertices_.begin(), vertices_.end()) == vertices_.end(),
                        "Face: repeated vertex");
        detail::require(vertices_.empty() || vertices_.front() >= 1, "Face: labels must be positive");
    }

    Storage vertices_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const { return boost::hash_range(f.begin(), f.end()); }
};

// Rev-lex (colex) order on equal-size sets: a precedes b iff the largest
// element of their symmetric difference lies in b.
inline std::strong_ordering revlex_compare(const Face& a, const Face& b) {
    detail::require(a.size() == b.size(), "revlex_compare: faces differ in size");
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// Total order used for every printed face list: by size, then rev-lex.
struct SizeRevlexLess {
    bool operator()(const Face& a, const Face& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return revlex_compare(a, b) < 0;
    }
};

// (c_0, c_1, ..., c_d): number of faces with i vertices.
class FaceVector {
public:
    FaceVector() = default;
    explicit FaceVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) { trim(); }

    std::size_t size() const { return counts_.size(); }
    bool empty() const { return counts_.empty(); }
    // c_i, or 0 beyond the top dimension.
    std::uint64_t operator[](std::size_t i) const { return i < counts_.size() ? counts_[i] : 0; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    // Largest face size d (the complex has dimension d - 1).
    std::size_t top() const { return counts_.empty() ? 0 : counts_.size() - 1; }

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto c : counts_) s += c;
        return s;
    }

    friend bool operator==(const FaceVector&, const FaceVector&) = default;

private:
    void trim() {
        while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    }

    std::vector<std::uint64_t> counts_;
};

}  // namespace flagbal

#pragma once

// Simple graphs on at most 64 vertices, stored as neighbourhood bit masks.
// Vertices are labelled 1..n; a graph may remember, per vertex, the label it
// carried in an ancestor graph (after taking links or deleting vertices).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagbal/errors.hpp"
#include "flagbal/face.hpp"

namespace flagbal {

using VertexMask = std::uint64_t;

class Graph {
public:
    static constexpr std::size_t kMaxVertices = 64;

    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, 0), origin_(n) {
        detail::require(n <= kMaxVertices, "Graph: at most 64 vertices are supported");
        for (std::size_t i = 0; i < n; ++i) origin_[i] = static_cast<Vertex>(i + 1);
    }

    static Graph complete(std::size_t n) {
        Graph g(n);
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph cycle(std::size_t n) {
        detail::require(n >= 3, "Graph::cycle: need at least 3 vertices");
        Graph g(n);
        for (Vertex v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
        return g;
    }

    static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    // Bit e of the mask is the pair (i,j), 1 <= i < j <= n, with
    // e = (j-1)(j-2)/2 + (i-1): the column order graph6 uses.
    static Graph from_edge_mask(std::size_t n, std::uint64_t mask) {
        detail::require(n * (n - (n > 0)) / 2 <= 64, "Graph::from_edge_mask: too many vertices");
        Graph g(n);
        std::size_t e = 0;
        for (Vertex j = 2; j <= n; ++j)
            for (Vertex i = 1; i < j; ++i, ++e)
                if ((mask >> e) & 1U) g.add_edge(i, j);
        return g;
    }

    std::uint64_t edge_mask() const {
        detail::require(order() * (order() - (order() > 0)) / 2 <= 64, "Graph::edge_mask: too many vertices");
        std::uint64_t mask = 0;
        std::size_t e = 0;
        for (Vertex j = 2; j <= order(); ++j)
            for (Vertex i = 1; i < j; ++i, ++e)
                if (adjacent(i, j)) mask |= std::uint64_t{1} << e;
        return mask;
    }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        detail::require(u != v, "Graph: self-loops are not allowed");
        adj_[u - 1] |= bit(v);
        adj_[v - 1] |= bit(u);
    }

    std::size_t order() const { return adj_.size(); }
    VertexMask all_vertices() const {
        return order() == 64 ? ~VertexMask{0} : (VertexMask{1} << order()) - 1;
    }
    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u - 1] & bit(v)) != 0;
    }
    VertexMask neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v - 1];
    }
    std::size_t degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(neighbors(v))); }
    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
        return twice / 2;
    }

    // Label of v in the graph this one was derived from.
    Vertex origin(Vertex v) const {
        check_vertex(v);
        return origin_[v - 1];
    }
    const std::vector<Vertex>& origins() const { return origin_; }

    Graph with_origins(std::vector<Vertex> labels) const {
        detail::require(labels.size() == order(), "Graph::with_origins: one label per vertex");
        Graph g = *this;
        g.origin_ = std::move(labels);
        return g;
    }

    static constexpr VertexMask bit(Vertex v) { return VertexMask{1} << (v - 1); }

    void check_vertex(Vertex v) const {
        if (v < 1 || v > order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }

    // Induced subgraph on the vertices of `keep`, relabelled 1..|keep| in
    // increasing order and carrying their origin labels.
    Graph induced(VertexMask keep) const {
        keep &= all_vertices();
        Graph h(static_cast<std::size_t>(std::popcount(keep)));
        std::vector<Vertex> old_of_new;
        std::vector<Vertex> new_of_old(order() + 1, 0);
        for (VertexMask m = keep; m != 0; m &= m - 1) {
            const auto v = static_cast<Vertex>(std::countr_zero(m) + 1);
            old_of_new.push_back(v);
            new_of_old[v] = static_cast<Vertex>(old_of_new.size());
        }
        for (std::size_t i = 0; i < old_of_new.size(); ++i) {
            const Vertex old = old_of_new[i];
            h.origin_[i] = origin_[old - 1];
            for (VertexMask m = adj_[old - 1] & keep; m != 0; m &= m - 1) {
                const auto w = static_cast<Vertex>(std::countr_zero(m) + 1);
                h.adj_[i] |= bit(new_of_old[w]);
            }
        }
        return h;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<VertexMask> adj_;
    std::vector<Vertex> origin_;
};

// Turan graph T(n,r): vertices dealt into r parts of sizes as equal as
// possible (vertex v goes to part (v-1) mod r), edges between distinct parts.
inline Graph turan_graph(std::size_t n, std::size_t r) {
    detail::require(r > 0, "turan_graph: r must be positive");
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if ((u - 1) % r != (v - 1) % r) g.add_edge(u, v);
    return g;
}

namespace detail {

// Ordered extension: each clique is reached once, from its smallest vertex up.
// Visit returns false to stop descending below the current clique.
template <class Visit>
void extend_cliques(const Graph& g, VertexMask candidates, std::size_t depth, Visit& visit) {
    while (candidates != 0) {
        const auto v = static_cast<Vertex>(std::countr_zero(candidates) + 1);
        candidates &= candidates - 1;
        const VertexMask next = candidates & g.neighbors(v);
        if (visit(v, depth + 1, next)) extend_cliques(g, next, depth + 1, visit);
    }
}

}  // namespace detail

// Clique vector (c_0, ..., c_omega) of the clique complex; c_0 = 1 always.
inline FaceVector clique_vector(const Graph& g, std::uint64_t guard = default_guard()) {
    std::vector<std::uint64_t> counts(2, 0);
    counts[0] = 1;
    std::uint64_t total = 1;
    auto visit = [&](Vertex, std::size_t size, VertexMask) {
        if (size >= counts.size()) counts.resize(size + 1, 0);
        ++counts[size];
        if (++total > guard) throw GuardExceeded("clique enumeration exceeds guard of " + std::to_string(guard));
        return true;
    };
    detail::extend_cliques(g, g.all_vertices(), 0, visit);
    return FaceVector(std::move(counts));
}

// Number of cliques with exactly `size` vertices inside `within`.
inline std::uint64_t count_cliques(const Graph& g, VertexMask within, std::size_t size) {
    within &= g.all_vertices();
    if (size == 0) return 1;
    std::uint64_t count = 0;
    auto visit = [&](Vertex, std::size_t depth, VertexMask next) {
        if (depth == size) {
            ++count;
            return false;
        }
        return depth + static_cast<std::size_t>(std::popcount(next)) >= size;
    };
    detail::extend_cliques(g, within, 0, visit);
    return count;
}

inline std::uint64_t count_cliques(const Graph& g, std::size_t size) {
    return count_cliques(g, g.all_vertices(), size);
}

inline std::size_t clique_number(const Graph& g) {
    std::size_t best = 0;
    auto visit = [&](Vertex, std::size_t depth, VertexMask next) {
        best = std::max(best, depth);
        return depth + static_cast<std::size_t>(std::popcount(next)) > best;
    };
    detail::extend_cliques(g, g.all_vertices(), 0, visit);
    return best;
}

// Every clique (including the empty one) as a face on g's own labels.
inline std::vector<Face> cliques(const Graph& g, std::uint64_t guard = default_guard()) {
    std::vector<Face> out{Face{}};
    std::vector<Vertex> stack;
    std::function<void(VertexMask)> rec = [&](VertexMask candidates) {
        while (candidates != 0) {
            const auto v = static_cast<Vertex>(std::countr_zero(candidates) + 1);
            candidates &= candidates - 1;
            stack.push_back(v);
            out.push_back(Face::from_sorted(stack));
            if (out.size() > guard) throw GuardExceeded("clique enumeration exceeds guard of " + std::to_string(guard));
            rec(candidates & g.neighbors(v));
            stack.pop_back();
        }
    };
    rec(g.all_vertices());
    return out;
}

// Induced subgraph on the neighbourhood of v.
inline Graph graph_link(const Graph& g, Vertex v) { return g.induced(g.neighbors(v)); }

inline Graph remove_vertices(const Graph& g, std::span<const Vertex> vs) {
    VertexMask drop = 0;
    for (Vertex v : vs) {
        g.check_vertex(v);
        drop |= Graph::bit(v);
    }
    return g.induced(g.all_vertices() & ~drop);
}

// All 2^C(n,2) labelled graphs on n <= 8 vertices, by edge mask. Ranges of
// masks can be handed to independent workers.
class GraphRange {
public:
    static constexpr std::size_t kMaxOrder = 8;

    explicit GraphRange(std::size_t n) : n_(n) {
        detail::require(n <= kMaxOrder, "all_graphs: n must be at most 8");
        end_ = std::uint64_t{1} << (n * (n - (n > 0)) / 2);
    }
    GraphRange(std::size_t n, std::uint64_t first, std::uint64_t last) : GraphRange(n) {
        detail::require(first <= last && last <= end_, "GraphRange: bad mask range");
        begin_ = first;
        end_ = last;
    }

    std::size_t order() const { return n_; }
    std::uint64_t first_mask() const { return begin_; }
    std::uint64_t last_mask() const { return end_; }
    std::uint64_t size() const { return end_ - begin_; }

    // The i-th of `parts` contiguous, disjoint sub-ranges.
    GraphRange part(std::uint64_t i, std::uint64_t parts) const {
        const std::uint64_t len = size();
        return GraphRange(n_, begin_ + len * i / parts, begin_ + len * (i + 1) / parts);
    }

    class iterator {
    public:
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
        Graph operator*() const { return Graph::from_edge_mask(n_, mask_); }
        std::uint64_t mask() const { return mask_; }
        iterator& operator++() {
            ++mask_;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++mask_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

    private:
        std::size_t n_ = 0;
        std::uint64_t mask_ = 0;
    };

    iterator begin() const { return {n_, begin_}; }
    iterator end() const { return {n_, end_}; }

private:
    std::size_t n_;
    std::uint64_t begin_ = 0;
    std::uint64_t end_ = 0;
};

inline GraphRange all_graphs(std::size_t n) { return GraphRange(n); }

}  // namespace flagbal

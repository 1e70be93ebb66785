#pragma once

// Simplicial complexes stored by their facets, with on-demand closure.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "flagbal/errors.hpp"
#include "flagbal/face.hpp"
#include "flagbal/graph.hpp"

namespace flagbal {

// A simplicial complex given by its facets. The default value is the void
// complex (no faces at all); Complex::trivial() is {empty face}.
class Complex {
public:
    Complex() = default;

    // Drops duplicates and every face contained in another; facets end up
    // sorted by size, then rev-lex.
    static Complex from_facets(std::vector<Face> faces) {
        Complex c;
        c.facets_ = normalize(std::move(faces));
        return c;
    }

    static Complex trivial() { return from_facets({Face{}}); }

    const std::vector<Face>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }

    // Size of the largest face, i.e. dimension + 1.
    std::size_t top_size() const { return facets_.empty() ? 0 : facets_.back().size(); }
    int dimension() const { return static_cast<int>(top_size()) - 1; }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> vs;
        for (const auto& f : facets_) vs.insert(vs.end(), f.begin(), f.end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    bool has_face(const Face& f) const {
        return std::any_of(facets_.begin(), facets_.end(), [&](const Face& F) { return F.includes(f); });
    }

    friend bool operator==(const Complex&, const Complex&) = default;

private:
    static std::vector<Face> normalize(std::vector<Face> faces) {
        std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return SizeRevlexLess{}(b, a); });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

        // Faces arrive largest first; a face can only be dominated by an
        // already kept, strictly larger one sharing its rarest vertex.
        std::vector<Face> kept;
        std::unordered_map<Vertex, std::vector<std::uint32_t>> incident;
        std::size_t batch_start = 0;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const Face& f = faces[i];
            if (i > 0 && f.size() != faces[i - 1].size()) {
                for (std::size_t j = batch_start; j < kept.size(); ++j)
                    for (Vertex v : kept[j]) incident[v].push_back(static_cast<std::uint32_t>(j));
                batch_start = kept.size();
            }
            bool dominated = false;
            if (f.empty()) {
                dominated = !kept.empty();
            } else {
                const std::vector<std::uint32_t>* rarest = nullptr;
                for (Vertex v : f) {
                    auto it = incident.find(v);
                    if (it == incident.end()) {
                        rarest = nullptr;
                        break;
                    }
                    if (rarest == nullptr || it->second.size() < rarest->size()) rarest = &it->second;
                }
                if (rarest != nullptr)
                    dominated = std::any_of(rarest->begin(), rarest->end(),
                                            [&](std::uint32_t j) { return j < batch_start && kept[j].includes(f); });
            }
            if (!dominated) kept.push_back(f);
        }
        std::reverse(kept.begin(), kept.end());
        return kept;
    }

    std::vector<Face> facets_;
};

// A complex with a vertex coloring in 1..colors.
struct ColoredComplex {
    Complex complex;
    Color colors = 0;
    std::map<Vertex, Color> coloring;
};

namespace detail {

using FaceLevels = std::vector<std::unordered_set<Face, FaceHash>>;

// Faces of the closure bucketed by size; levels[i] holds the i-vertex faces.
inline FaceLevels closure_levels(const Complex& c, std::uint64_t guard) {
    FaceLevels levels;
    if (c.is_void()) return levels;
    levels.resize(c.top_size() + 1);
    std::uint64_t total = 0;
    auto check = [&] {
        if (total > guard) throw GuardExceeded("closure exceeds guard of " + std::to_string(guard) + " faces");
    };
    for (const auto& f : c.facets()) {
        total += levels[f.size()].insert(f).second ? 1 : 0;
    }
    check();
    for (std::size_t s = levels.size() - 1; s >= 1; --s) {
        for (const auto& f : levels[s]) {
            for (std::size_t i = 0; i < f.size(); ++i) total += levels[s - 1].insert(f.without_index(i)).second ? 1 : 0;
            check();
        }
    }
    return levels;
}

}  // namespace detail

// Every face of the complex (the empty face included), by size then rev-lex.
inline std::vector<Face> closure(const Complex& c, std::uint64_t guard = default_guard()) {
    auto levels = detail::closure_levels(c, guard);
    std::vector<Face> out;
    for (auto& level : levels) {
        const std::size_t from = out.size();
        out.insert(out.end(), level.begin(), level.end());
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(from), out.end(), SizeRevlexLess{});
    }
    return out;
}

inline FaceVector face_vector(const Complex& c, std::uint64_t guard = default_guard()) {
    const auto levels = detail::closure_levels(c, guard);
    std::vector<std::uint64_t> counts;
    counts.reserve(levels.size());
    for (const auto& level : levels) counts.push_back(level.size());
    return FaceVector(std::move(counts));
}

// lk(f) = {G : G and f disjoint, G u f a face}; its facets are F \ f for the
// facets F containing f.
inline Complex link(const Complex& c, const Face& f) {
    std::vector<Face> faces;
    for (const auto& F : c.facets())
        if (F.includes(f)) faces.push_back(F.set_difference(f));
    detail::require(!faces.empty(), "link: the given set is not a face of the complex");
    return Complex::from_facets(std::move(faces));
}

// Underlying graph. Vertex i of the result is the i-th smallest label of c,
// and Graph::origin recovers the label.
inline Graph one_skeleton(const Complex& c) {
    const auto vs = c.vertices();
    detail::require(vs.size() <= Graph::kMaxVertices, "one_skeleton: more than 64 vertices");
    auto index = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin() + 1);
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& F : c.facets())
        for (std::size_t i = 0; i < F.size(); ++i)
            for (std::size_t j = i + 1; j < F.size(); ++j) edges.emplace_back(index(F[i]), index(F[j]));
    return Graph::from_edges(vs.size(), edges).with_origins(vs);
}

// Clique complex of g, on g's labels 1..n.
inline Complex clique_complex(const Graph& g, std::uint64_t guard = default_guard()) {
    return Complex::from_facets(cliques(g, guard));
}

// Flag iff the complex equals the clique complex of its 1-skeleton. Faces are
// always cliques of the skeleton, so comparing counts suffices.
inline bool is_flag(const Complex& c, std::uint64_t guard = default_guard()) {
    if (c.is_void()) return true;
    return clique_vector(one_skeleton(c), guard) == face_vector(c, guard);
}

namespace detail {

inline bool color_rec(const Graph& g, const std::vector<Vertex>& order, std::size_t at, std::vector<VertexMask>& classes,
                      std::size_t used, std::size_t limit) {
    if (at == order.size()) return true;
    const Vertex v = order[at];
    const VertexMask nbrs = g.neighbors(v);
    // A vertex may open at most one new class: classes are interchangeable.
    const std::size_t options = std::min(limit, used + 1);
    for (std::size_t c = 0; c < options; ++c) {
        if ((classes[c] & nbrs) != 0) continue;
        classes[c] |= Graph::bit(v);
        if (color_rec(g, order, at + 1, classes, std::max(used, c + 1), limit)) return true;
        classes[c] &= ~Graph::bit(v);
    }
    return false;
}

}  // namespace detail

// Exact test for a proper coloring with at most `colors` colors.
inline bool is_colorable(const Graph& g, std::size_t colors) {
    if (g.order() == 0) return true;
    if (colors == 0) return false;
    std::vector<Vertex> order(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Vertex>(i + 1);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<VertexMask> classes(colors, 0);
    return detail::color_rec(g, order, 0, classes, 0, colors);
}

inline constexpr std::size_t kChromaticVertexCap = 20;

// Exact chromatic number; 0 for the graph without vertices.
inline std::size_t chromatic_number(const Graph& g) {
    detail::require(g.order() <= kChromaticVertexCap, "chromatic_number: at most 20 vertices");
    if (g.order() == 0) return 0;
    for (std::size_t c = std::max<std::size_t>(1, clique_number(g));; ++c)
        if (is_colorable(g, c)) return c;
}

// Balanced: chromatic number of the skeleton equals dim + 1. A largest facet
// is a clique on dim + 1 vertices, so only colorability with that many colors
// needs checking. The void complex counts as balanced.
inline bool is_balanced(const Complex& c) {
    if (c.is_void()) return true;
    return is_colorable(one_skeleton(c), c.top_size());
}

// Total, within 1..colors, and proper on every edge.
inline bool check_coloring(const ColoredComplex& cc) {
    for (const auto& F : cc.complex.facets()) {
        std::vector<Color> seen;
        seen.reserve(F.size());
        for (Vertex v : F) {
            auto it = cc.coloring.find(v);
            if (it == cc.coloring.end()) return false;
            if (it->second < 1 || it->second > cc.colors) return false;
            seen.push_back(it->second);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

}  // namespace flagbal

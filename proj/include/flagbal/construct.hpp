#pragma once

// Turning the clique counts of a graph into an r-colorable complex.
//
// construct_pair(g, r, k) realises c_k(g) and c_{k+1}(g) by induction: pick
// the vertex v_0 lying in the most (k+1)-cliques, realise its link with r-1
// colors as a colored rev-lex complex B, then delete v_0 and every non-neighbour
// v_1..v_s one at a time, and for each deleted v_i add a fresh vertex of color
// r whose link is the initial segment of B with a_i k-faces and b_i
// (k-1)-faces, where a_i and b_i count the k- and (k-1)-cliques in the link of
// v_i at the moment it is deleted.
//
// construct_balanced(g) realises the whole clique vector at once with the
// multi-level colored rev-lex complex, r = clique number.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "flagbal/combinat.hpp"
#include "flagbal/complex.hpp"
#include "flagbal/errors.hpp"
#include "flagbal/graph.hpp"
#include "flagbal/revlex.hpp"

namespace flagbal {

// One deleted vertex v_i and the fresh vertex v'_i standing in for it.
struct PairStep {
    std::size_t index = 0;       // i
    Vertex vertex = 0;           // v_i, as an origin label of the input graph
    std::uint64_t a = 0;         // k-cliques in the link of v_i inside G_i
    std::uint64_t b = 0;         // (k-1)-cliques in that link
    Vertex added = 0;            // label of v'_i in the output
    LevelSpec link_levels;       // colored rev-lex complex used as the link of v'_i
};

struct ConstructionTrace {
    enum class Case { NoFaces, EmptyBase, NoUpperFaces, Inductive };

    Case kind = Case::NoFaces;
    std::uint64_t r = 0;
    std::uint32_t k = 0;
    std::uint64_t c_k = 0;        // c_k of the input graph
    std::uint64_t c_k_next = 0;   // c_{k+1} of the input graph
    std::uint64_t c_k_prev = 0;   // c_{k-1} of the input graph (0 when k = 0)

    // Inductive case only.
    Vertex pivot = 0;
    std::uint64_t pivot_cliques = 0;
    std::vector<Vertex> non_neighbors;
    std::uint64_t link_c_k = 0;       // c_k(G_{s+1})
    std::uint64_t link_c_k_next = 0;  // c_{k+1}(G_{s+1})
    std::uint64_t base_c_k_prev = 0;  // c_{k-1} of the base complex, >= c_k_prev
    LevelSpec base_levels;            // base complex with r-1 colors (or the whole answer in other cases)
    std::vector<PairStep> steps;      // i = 0..s
    std::vector<ConstructionTrace> link_trace;  // recursion on the link of v_0, budget r-1
};

struct PairResult {
    ColoredComplex complex;
    ConstructionTrace trace;
};

namespace detail {

inline LevelSpec two_levels(std::uint32_t k, std::uint64_t lower, std::uint64_t upper) {
    // Level 0 is the empty face, which every rev-lex complex already has.
    if (k <= 1) return LevelSpec{{k, upper}};
    return LevelSpec{{k - 1, lower}, {k, upper}};
}

inline Vertex position_in(VertexMask alive, Vertex v) {
    return static_cast<Vertex>(std::popcount(alive & (Graph::bit(v) - 1)) + 1);
}

}  // namespace detail

// An r-colorable complex with the same numbers of k- and (k+1)-faces as the
// clique complex of g. Requires clique number <= r.
inline PairResult construct_pair(const Graph& g, std::uint64_t r, std::uint32_t k,
                                 std::uint64_t guard = default_guard()) {
    detail::require(r > 0, "construct_pair: r must be positive");
    detail::require(count_cliques(g, r + 1) == 0,
                    "construct_pair: graph has a clique on more than r = " + std::to_string(r) + " vertices");

    PairResult out;
    ConstructionTrace& trace = out.trace;
    trace.r = r;
    trace.k = k;
    trace.c_k = count_cliques(g, k);
    trace.c_k_next = count_cliques(g, k + 1);
    trace.c_k_prev = k == 0 ? 0 : count_cliques(g, k - 1);

    ColoredComplex& result = out.complex;
    result.colors = static_cast<Color>(r);

    if (k == 0) {
        // Every vertex isolated, all of one color.
        trace.kind = g.order() == 0 ? ConstructionTrace::Case::NoFaces : ConstructionTrace::Case::EmptyBase;
        std::vector<Face> facets{Face{}};
        for (Vertex v = 1; v <= g.order(); ++v) {
            facets.push_back(Face{v});
            result.coloring.emplace(v, 1);
        }
        result.complex = Complex::from_facets(std::move(facets));
        return out;
    }

    if (trace.c_k_next == 0) {
        trace.kind = ConstructionTrace::Case::NoUpperFaces;
        trace.base_levels = LevelSpec{{k, trace.c_k}};
        result = colored_revlex_complex(trace.base_levels, r, guard);
        return out;
    }

    trace.kind = ConstructionTrace::Case::Inductive;
    const std::uint64_t budget = r - 1;  // c_{k+1} > 0 forces r >= k + 1

    // v_0: the vertex in the most (k+1)-cliques, lowest label on ties.
    Vertex pivot = 0;
    std::uint64_t best = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
        const std::uint64_t through = count_cliques(g, g.neighbors(v), k);
        if (pivot == 0 || through > best) {
            pivot = v;
            best = through;
        }
    }
    trace.pivot = g.origin(pivot);
    trace.pivot_cliques = best;

    std::vector<Vertex> order{pivot};
    for (Vertex v = 1; v <= g.order(); ++v)
        if (v != pivot && !g.adjacent(pivot, v)) order.push_back(v);
    for (std::size_t i = 1; i < order.size(); ++i) trace.non_neighbors.push_back(g.origin(order[i]));

    // G_{s+1} = link of v_0. The recursive call is kept for the trace; the
    // base complex only needs its clique counts.
    const Graph link_graph = graph_link(g, pivot);
    trace.link_c_k = count_cliques(link_graph, k);
    trace.link_c_k_next = count_cliques(link_graph, k + 1);
    trace.link_trace.push_back(construct_pair(link_graph, budget, k, guard).trace);

    detail::ensure(trace.link_c_k_next <= ffk_bound(BigInt(trace.link_c_k), k, budget),
                   "link counts violate the colored shadow bound");

    // Base complex B: the (r-1)-colored rev-lex complex on the link's counts,
    // padded at level k-1 up to c_{k-1}(g).
    std::uint64_t base_prev = trace.c_k_prev;
    if (k >= 2) {
        const auto upper = colored_revlex_complex(LevelSpec{{k, trace.link_c_k}, {k + 1, trace.link_c_k_next}}, budget, guard);
        base_prev = std::max(base_prev, face_vector(upper.complex, guard)[k - 1]);
        trace.base_levels = LevelSpec{{k - 1, base_prev}, {k, trace.link_c_k}, {k + 1, trace.link_c_k_next}};
    } else {
        trace.base_levels = LevelSpec{{k, trace.link_c_k}, {k + 1, trace.link_c_k_next}};
    }
    trace.base_c_k_prev = base_prev;
    const ColoredComplex base = colored_revlex_complex(trace.base_levels, budget, guard);

    std::vector<Face> facets = base.complex.facets();
    result.coloring = base.coloring;

    // a_i and b_i along G_0 = g, G_{i+1} = G_i - v_i.
    VertexMask alive = g.all_vertices();
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        const Graph current = g.induced(alive);
        const Graph lk = graph_link(current, detail::position_in(alive, v));
        PairStep step;
        step.index = i;
        step.vertex = g.origin(v);
        step.a = count_cliques(lk, k);
        step.b = count_cliques(lk, k - 1);
        detail::ensure(step.a <= trace.link_c_k, "a_i exceeds c_k of the link of v_0");
        detail::ensure(step.b <= base_prev, "b_i exceeds c_{k-1} of the base complex");
        if (k >= 2)
            detail::ensure(step.a <= ffk_bound(BigInt(step.b), k - 1, budget), "(b_i, a_i) violate the colored shadow bound");
        step.link_levels = detail::two_levels(k, step.b, step.a);
        trace.steps.push_back(std::move(step));
        alive &= ~Graph::bit(v);
    }

    // Fresh vertices are added for i = s down to 0, labelled past B.
    const auto base_vertices = base.complex.vertices();
    Vertex next_label = base_vertices.empty() ? 1 : base_vertices.back() + 1;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        it->added = next_label++;
        const auto cone = colored_revlex_complex(it->link_levels, budget, guard);
        for (const auto& F : cone.complex.facets()) facets.push_back(F.with(it->added));
        result.coloring.emplace(it->added, static_cast<Color>(r));
    }
    result.complex = Complex::from_facets(std::move(facets));

    const FaceVector fv = face_vector(result.complex, guard);
    detail::ensure(fv[k] == trace.c_k && fv[k + 1] == trace.c_k_next,
                   "constructed complex misses the target face numbers");
    return out;
}

struct BalancedReport {
    std::size_t r = 0;
    FaceVector clique_vector;
    FaceVector face_vector;
    // margins[i-1] = ffk_bound(c_i, i, r) - c_{i+1} for 1 <= i < r.
    std::vector<BigInt> margins;
    LevelSpec levels;
};

struct BalancedResult {
    ColoredComplex complex;
    BalancedReport report;
};

// The r-colored rev-lex complex on the whole clique vector of g, r = clique
// number. Every consecutive pair of clique counts must obey the colored shadow
// bound; a violation would mean a bug, and is reported as one.
inline BalancedResult construct_balanced(const Graph& g, std::uint64_t guard = default_guard()) {
    BalancedResult out;
    BalancedReport& report = out.report;
    report.clique_vector = clique_vector(g, guard);
    report.r = report.clique_vector.top();
    const auto& cv = report.clique_vector;

    for (std::size_t i = 1; i < report.r; ++i) {
        const BigInt margin = ffk_bound(BigInt(cv[i]), static_cast<std::uint32_t>(i), report.r) - BigInt(cv[i + 1]);
        detail::ensure(margin >= 0, "clique counts c_" + std::to_string(i) + ", c_" + std::to_string(i + 1) +
                                        " exceed the colored shadow bound");
        report.margins.push_back(margin);
    }

    if (report.r == 0) {
        out.complex.complex = Complex::trivial();
    } else {
        std::vector<LevelSpec::Level> levels;
        for (std::size_t i = 1; i <= report.r; ++i) levels.push_back({static_cast<std::uint32_t>(i), cv[i]});
        report.levels = LevelSpec(std::move(levels));
        out.complex = colored_revlex_complex(report.levels, report.r, guard);
    }
    report.face_vector = face_vector(out.complex.complex, guard);
    return out;
}

}  // namespace flagbal

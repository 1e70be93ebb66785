#pragma once

// Brute-force checking harness: build the balanced complex for a graph, close
// it completely, recount, and compare against the clique vector.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <atomic>
#include <exception>
#include <iterator>
#include <thread>
#include <vector>

#include "flagbal/combinat.hpp"
#include "flagbal/complex.hpp"
#include "flagbal/construct.hpp"
#include "flagbal/errors.hpp"
#include "flagbal/graph.hpp"
#include "flagbal/graph_io.hpp"
#include "flagbal/revlex.hpp"

namespace flagbal {

struct VerificationRecord {
    std::string graph;                  // graph6
    std::optional<std::uint64_t> mask;  // edge mask, exhaustive runs only
    std::size_t order = 0;
    FaceVector clique_vector;
    std::size_t r = 0;
    std::vector<BigInt> margins;
    FaceVector face_vector;
    bool equal = false;
    bool coloring = false;
    bool balanced = false;
    std::string error;  // set when construction itself failed

    bool passed() const { return error.empty() && equal && coloring && balanced; }
};

struct VerificationReport {
    std::uint64_t graphs = 0;
    std::uint64_t passed = 0;
    std::uint64_t guard_exceeded = 0;
    // Every record when requested, otherwise empty.
    std::vector<VerificationRecord> records;
    std::vector<VerificationRecord> failures;

    std::uint64_t failed() const { return graphs - passed; }
    bool ok() const { return failures.empty(); }

    void add(VerificationRecord rec, bool keep) {
        ++graphs;
        if (rec.passed()) {
            ++passed;
        } else {
            failures.push_back(rec);
        }
        if (keep) records.push_back(std::move(rec));
    }

    void merge(VerificationReport other) {
        graphs += other.graphs;
        passed += other.passed;
        guard_exceeded += other.guard_exceeded;
        std::move(other.records.begin(), other.records.end(), std::back_inserter(records));
        std::move(other.failures.begin(), other.failures.end(), std::back_inserter(failures));
    }
};

struct VerifyOptions {
    bool keep_records = false;
    unsigned threads = 0;  // 0: hardware concurrency
    std::uint64_t guard = default_guard();
};

// Runs the construction on g and checks the output from scratch. Problems are
// recorded on the returned record, never thrown (except GuardExceeded).
inline VerificationRecord verify_graph(const Graph& g, std::uint64_t guard = default_guard()) {
    VerificationRecord rec;
    rec.graph = to_graph6(g);
    rec.order = g.order();
    rec.clique_vector = clique_vector(g, guard);
    rec.r = rec.clique_vector.top();
    try {
        const auto built = construct_balanced(g, guard);
        rec.margins = built.report.margins;
        rec.face_vector = face_vector(built.complex.complex, guard);
        rec.equal = rec.face_vector == rec.clique_vector;
        rec.coloring = built.complex.colors == rec.r && check_coloring(built.complex);
        rec.balanced = built.complex.complex.top_size() == rec.r && is_balanced(built.complex.complex);
    } catch (const InvariantViolation& e) {
        rec.error = e.what();
    } catch (const PreconditionError& e) {
        rec.error = e.what();
    }
    return rec;
}

namespace detail {

inline unsigned worker_count(unsigned requested, std::uint64_t jobs) {
    unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(n, std::max<std::uint64_t>(jobs, 1)));
}

// Splits [0, jobs) into chunks, runs `work(first, last)` on worker threads and
// merges the per-chunk reports in chunk order.
template <class Work>
VerificationReport run_chunked(std::uint64_t jobs, unsigned threads, Work&& work) {
    const unsigned workers = worker_count(threads, jobs);
    const std::uint64_t chunks = std::min<std::uint64_t>(jobs, std::uint64_t{workers} * 16);
    std::vector<VerificationReport> parts(chunks);
    std::vector<std::exception_ptr> errors(workers);
    std::atomic<std::uint64_t> next{0};
    auto run = [&](unsigned w) {
        try {
            for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;)
                parts[c] = work(jobs * c / chunks, jobs * (c + 1) / chunks);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    VerificationReport total;
    for (auto& p : parts) total.merge(std::move(p));
    return total;
}

}  // namespace detail

inline constexpr std::size_t kExhaustiveMaxOrder = 7;

// Every labelled graph on n vertices, in edge-mask order.
inline VerificationReport exhaustive_verify(std::size_t n, const VerifyOptions& options = {}) {
    detail::require(n <= kExhaustiveMaxOrder, "exhaustive_verify: n must be at most 7");
    const GraphRange all = all_graphs(n);
    return detail::run_chunked(all.size(), options.threads, [&](std::uint64_t first, std::uint64_t last) {
        VerificationReport part;
        for (std::uint64_t mask = first; mask < last; ++mask) {
            auto rec = verify_graph(Graph::from_edge_mask(n, mask), options.guard);
            rec.mask = mask;
            part.add(std::move(rec), options.keep_records);
        }
        return part;
    });
}

// SplitMix64; stream(seed, i) gives trial i its own reproducible generator.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 outer(seed);
        const std::uint64_t base = outer.next();
        SplitMix64 inner(base ^ (0xD1B54A32D192ED03ULL * (index + 1)));
        inner.next();
        return inner;
    }

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// An edge probability num/den in [0, 1].
struct Probability {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    // Accepts "a/b", a decimal such as "0.25", or an integer 0 or 1.
    static Probability parse(std::string_view text) {
        auto digits = [](std::string_view s) {
            if (s.empty() || s.size() > 18) throw ParseError("probability: bad number '" + std::string(s) + "'");
            std::uint64_t v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') throw ParseError("probability: bad number '" + std::string(s) + "'");
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
            }
            return v;
        };
        Probability p;
        if (const auto slash = text.find('/'); slash != std::string_view::npos) {
            p = {digits(text.substr(0, slash)), digits(text.substr(slash + 1))};
        } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
            const auto frac = text.substr(dot + 1);
            std::uint64_t den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            p = {digits(text.substr(0, dot).empty() ? "0" : text.substr(0, dot)) * den + digits(frac), den};
        } else {
            p = {digits(text), 1};
        }
        if (p.den == 0 || p.num > p.den) throw ParseError("probability must lie in [0, 1]");
        return p;
    }
};

inline Graph random_graph(std::size_t n, Probability p, SplitMix64& rng) {
    Graph g(n);
    for (Vertex j = 2; j <= n; ++j)
        for (Vertex i = 1; i < j; ++i)
            if (rng.next() % p.den < p.num) g.add_edge(i, j);
    return g;
}

inline constexpr std::size_t kRandomMaxOrder = 24;

// `trials` random graphs G(n, p); trial t draws from SplitMix64::stream(seed, t).
inline VerificationReport random_verify(std::size_t n, Probability p, std::uint64_t trials, std::uint64_t seed,
                                        const VerifyOptions& options = {}) {
    detail::require(n <= kRandomMaxOrder, "random_verify: n must be at most 24");
    return detail::run_chunked(trials, options.threads, [&](std::uint64_t first, std::uint64_t last) {
        VerificationReport part;
        for (std::uint64_t t = first; t < last; ++t) {
            auto rng = SplitMix64::stream(seed, t);
            const Graph g = random_graph(n, p, rng);
            VerificationRecord rec;
            try {
                rec = verify_graph(g, options.guard);
            } catch (const GuardExceeded& e) {
                rec.graph = to_graph6(g);
                rec.order = n;
                rec.error = e.what();
                ++part.guard_exceeded;
            }
            part.add(std::move(rec), options.keep_records);
        }
        return part;
    });
}

// Builds the (colored) rev-lex complex for the given levels and counts every face of its
// closure; independent of the bound formulas.
inline FaceVector oracle_face_count(const LevelSpec& spec, ColorBudget budget, std::uint64_t guard = default_guard()) {
    if (budget.bounded()) return face_vector(colored_revlex_complex(spec, budget.colors(), guard).complex, guard);
    return face_vector(revlex_complex(spec, guard), guard);
}

}  // namespace flagbal

#pragma once

// Rev-lex (colex) enumeration of k-sets of positive integers, r-permissible
// sets, and the (colored) rev-lex complexes built from initial segments.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagbal/combinat.hpp"
#include "flagbal/complex.hpp"
#include "flagbal/errors.hpp"
#include "flagbal/face.hpp"

namespace flagbal {

// Requested face counts per size, sizes strictly increasing and positive.
class LevelSpec {
public:
    struct Level {
        std::uint32_t size;
        std::uint64_t count;
        friend bool operator==(const Level&, const Level&) = default;
    };

    LevelSpec() = default;
    LevelSpec(std::initializer_list<Level> levels) : LevelSpec(std::vector<Level>(levels)) {}
    explicit LevelSpec(std::vector<Level> levels) : levels_(std::move(levels)) {
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            detail::require(levels_[i].size > 0, "LevelSpec: face sizes must be positive");
            detail::require(i == 0 || levels_[i - 1].size < levels_[i].size,
                            "LevelSpec: face sizes must be strictly increasing");
        }
    }

    const std::vector<Level>& levels() const { return levels_; }
    auto begin() const { return levels_.begin(); }
    auto end() const { return levels_.end(); }
    std::size_t size() const { return levels_.size(); }

    friend bool operator==(const LevelSpec&, const LevelSpec&) = default;

private:
    std::vector<Level> levels_;
};

// Parses "i1:m1,i2:m2,...".
inline LevelSpec parse_level_spec(std::string_view text) {
    std::vector<LevelSpec::Level> levels;
    auto number = [](std::string_view part) {
        if (part.empty()) throw ParseError("levels: empty number");
        std::uint64_t v = 0;
        for (char c : part) {
            if (c < '0' || c > '9') throw ParseError("levels: bad number '" + std::string(part) + "'");
            const auto digit = static_cast<std::uint64_t>(c - '0');
            if (v > (UINT64_MAX - digit) / 10) throw ParseError("levels: number too large");
            v = v * 10 + digit;
        }
        return v;
    };
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) throw ParseError("levels: expected size:count, got '" + std::string(item) + "'");
        const auto size = number(item.substr(0, colon));
        if (size == 0 || size > UINT32_MAX) throw ParseError("levels: face size out of range");
        levels.push_back({static_cast<std::uint32_t>(size), number(item.substr(colon + 1))});
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (text.empty()) throw ParseError("levels: trailing comma");
    }
    try {
        return LevelSpec(std::move(levels));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

// Color of vertex v in an r-colored rev-lex complex: its residue, in 1..r.
constexpr Color residue_color(Vertex v, std::uint64_t r) { return static_cast<Color>((v - 1) % r + 1); }

inline Face first_kset(std::uint32_t k) {
    std::vector<Vertex> vs(k);
    for (std::uint32_t i = 0; i < k; ++i) vs[i] = i + 1;
    return Face::from_sorted(vs);
}

// Steps f to the next k-set in rev-lex order.
inline void next_kset(Face& f) {
    auto& a = f.raw();
    detail::require(!a.empty(), "next_kset: empty set has no successor");
    std::size_t i = 0;
    while (i + 1 < a.size() && a[i] + 1 == a[i + 1]) ++i;
    ++a[i];
    for (std::size_t j = 0; j < i; ++j) a[j] = static_cast<Vertex>(j + 1);
}

inline std::vector<Face> first_ksets(std::uint64_t m, std::uint32_t k) {
    detail::require(k > 0, "first_ksets: k must be positive");
    std::vector<Face> out;
    if (m == 0) return out;
    out.reserve(m);
    Face f = first_kset(k);
    out.push_back(f);
    while (out.size() < m) {
        next_kset(f);
        out.push_back(f);
    }
    return out;
}

// No two elements congruent mod r.
inline bool is_permissible(const Face& f, std::uint64_t r) {
    detail::require(r > 0, "is_permissible: r must be positive");
    if (f.size() > r) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if ((f[j] - f[i]) % r == 0) return false;
    return true;
}

// Steps a permissible k-set (k <= r) to the next permissible k-set in rev-lex
// order. Keeps the longest possible top part, raises the element below it as
// little as possible, and refills the bottom with the smallest labels whose
// residues are still free.
inline void next_permissible_kset(Face& f, std::uint64_t r) {
    auto& a = f.raw();
    const std::size_t k = a.size();
    detail::require(k > 0 && k <= r, "next_permissible_kset: need 0 < k <= r");
    std::vector<char> used(r, 0);
    std::vector<Vertex> filler;
    for (std::size_t j = 0; j < k; ++j) {
        std::fill(used.begin(), used.end(), 0);
        for (std::size_t t = j + 1; t < k; ++t) used[(a[t] - 1) % r] = 1;
        for (Vertex x = a[j] + 1; j + 1 == k || x < a[j + 1]; ++x) {
            const std::size_t rx = (x - 1) % r;
            if (used[rx]) continue;
            filler.clear();
            for (Vertex v = 1; filler.size() < j && v <= r; ++v) {
                const std::size_t rv = (v - 1) % r;
                if (!used[rv] && rv != rx) filler.push_back(v);
            }
            if (filler.size() < j || (!filler.empty() && filler.back() >= x)) continue;
            for (std::size_t t = 0; t < j; ++t) a[t] = filler[t];
            a[j] = x;
            return;
        }
    }
    detail::invariant_failed("next_permissible_kset: no successor found");
}

inline std::vector<Face> first_permissible_ksets(std::uint64_t m, std::uint32_t k, std::uint64_t r) {
    detail::require(k > 0 && r > 0, "first_permissible_ksets: k and r must be positive");
    std::vector<Face> out;
    if (m == 0) return out;
    detail::require(k <= r, "first_permissible_ksets: no " + std::to_string(r) + "-permissible " + std::to_string(k) +
                                "-sets exist");
    out.reserve(m);
    Face f = first_kset(k);
    out.push_back(f);
    while (out.size() < m) {
        next_permissible_kset(f, r);
        out.push_back(f);
    }
    return out;
}

// Zero-based position of f among all |f|-sets in rev-lex order:
// sum_i C(a_i - 1, i) over the elements a_1 < ... < a_k.
inline BigInt revlex_rank(const Face& f) {
    BigInt rank = 0;
    for (std::size_t i = 0; i < f.size(); ++i) rank += binom<BigInt>(BigInt(f[i] - 1), static_cast<std::uint32_t>(i + 1));
    return rank;
}

inline Face revlex_unrank(const BigInt& rank, std::uint32_t k) {
    detail::require(rank >= 0, "revlex_unrank: negative rank");
    std::vector<Vertex> vs(k);
    BigInt rest = rank;
    for (std::uint32_t i = k; i >= 1; --i) {
        auto value = [i](const BigInt& c) { return binom<BigInt>(c, i); };
        const BigInt c = detail::largest_at_most<BigInt>(value, rest, BigInt(i - 1), std::nullopt, std::nullopt);
        rest -= value(c);
        detail::require(c < BigInt(UINT32_MAX), "revlex_unrank: label overflow");
        vs[i - 1] = static_cast<Vertex>(c) + 1;
    }
    return Face::from_sorted(vs);
}

namespace detail {

inline void check_spec_size(const LevelSpec& spec, std::uint64_t guard) {
    std::uint64_t total = 0;
    for (const auto& level : spec) {
        total += level.count;
        if (total > guard) throw GuardExceeded("rev-lex complex exceeds guard of " + std::to_string(guard) + " facets");
    }
}

}  // namespace detail

// Union of the rev-lex complexes C_i(m_i) over the levels of spec. Always
// contains the empty face.
inline Complex revlex_complex(const LevelSpec& spec, std::uint64_t guard = default_guard()) {
    detail::check_spec_size(spec, guard);
    std::vector<Face> facets{Face{}};
    for (const auto& level : spec) {
        auto faces = first_ksets(level.count, level.size);
        facets.insert(facets.end(), faces.begin(), faces.end());
    }
    return Complex::from_facets(std::move(facets));
}

// Union of the r-colored rev-lex complexes C_i^r(m_i), colored by residue.
inline ColoredComplex colored_revlex_complex(const LevelSpec& spec, std::uint64_t r,
                                             std::uint64_t guard = default_guard()) {
    detail::require(r > 0 && r <= UINT32_MAX, "colored_revlex_complex: r out of range");
    detail::check_spec_size(spec, guard);
    std::vector<Face> facets{Face{}};
    for (const auto& level : spec) {
        auto faces = first_permissible_ksets(level.count, level.size, r);
        facets.insert(facets.end(), faces.begin(), faces.end());
    }
    ColoredComplex cc;
    cc.complex = Complex::from_facets(std::move(facets));
    cc.colors = static_cast<Color>(r);
    for (Vertex v : cc.complex.vertices()) cc.coloring.emplace(v, residue_color(v, r));
    return cc;
}

}  // namespace flagbal

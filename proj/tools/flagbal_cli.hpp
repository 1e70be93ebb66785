#pragma once

// Command-line front end. run() is kept separate from main() so tests can
// drive it with in-memory streams.
//
// Exit statuses: 0 success, 1 verification failure, 2 usage error, 3 input
// format error, 4 resource guard exceeded, 5 internal invariant violation.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagbal/flagbal.hpp"

namespace flagbal::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kInputFormat = 3,
    kGuard = 4,
    kInternal = 5,
};

using Json = nlohmann::ordered_json;

namespace detail {

class UsageError : public Error {
public:
    using Error::Error;
};

class InputError : public Error {
public:
    using Error::Error;
};

inline std::string join(const std::vector<std::uint64_t>& xs, char sep = ' ') {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

inline std::string format_vector(const FaceVector& fv) { return join(fv.counts()); }

inline std::string format_face(const Face& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(f[i]);
    }
    return s;
}

inline std::string format_colored_face(const Face& f, const ColoredComplex& cc) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(f[i]) + ':' + std::to_string(cc.coloring.at(f[i]));
    }
    return s;
}

inline std::string format_levels(const LevelSpec& spec) {
    std::string s;
    for (const auto& level : spec) {
        if (!s.empty()) s += ',';
        s += std::to_string(level.size) + ':' + std::to_string(level.count);
    }
    return s;
}

// "C(9,3) + C(6,2)", or with color budgets "C(31,3)_3 + C(12,2)_2".
inline std::string format_rep(const CanonicalRep<BigInt>& rep) {
    if (rep.terms.empty()) return "0";
    std::string s;
    for (const auto& t : rep.terms) {
        if (!s.empty()) s += " + ";
        s += "C(" + t.n.str() + ',' + std::to_string(t.index) + ')';
        if (rep.budget.bounded()) s += '_' + std::to_string(rep.budget_at(t.index));
    }
    return s;
}

inline std::string format_terms(const CanonicalRep<BigInt>& rep) {
    std::string s;
    for (const auto& t : rep.terms) {
        if (!s.empty()) s += ' ';
        s += t.n.str() + ':' + std::to_string(t.index);
    }
    return s;
}

inline BigInt parse_count(const std::string& text, const char* name) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError(std::string("--") + name + " must be a nonnegative integer");
    return BigInt(text);
}

inline Json big_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(v));
    return Json(v.str());
}

inline Json record_json(const VerificationRecord& rec) {
    Json j;
    j["graph"] = rec.graph;
    if (rec.mask) j["mask"] = *rec.mask;
    j["n"] = rec.order;
    j["clique_vector"] = rec.clique_vector.counts();
    j["r"] = rec.r;
    Json margins = Json::array();
    for (const auto& m : rec.margins) margins.push_back(big_json(m));
    j["margins"] = std::move(margins);
    j["face_vector"] = rec.face_vector.counts();
    j["equal"] = rec.equal;
    j["coloring"] = rec.coloring;
    j["balanced"] = rec.balanced;
    if (!rec.error.empty()) j["error"] = rec.error;
    return j;
}

inline const char* case_name(ConstructionTrace::Case c) {
    switch (c) {
        case ConstructionTrace::Case::NoFaces: return "no-vertices";
        case ConstructionTrace::Case::EmptyBase: return "isolated-vertices";
        case ConstructionTrace::Case::NoUpperFaces: return "no-upper-faces";
        case ConstructionTrace::Case::Inductive: return "inductive";
    }
    return "?";
}

inline void print_trace(std::ostream& out, const ConstructionTrace& t, std::size_t depth) {
    const std::string pad(depth * 2, ' ');
    out << pad << "pair k=" << t.k << " r=" << t.r << " case=" << case_name(t.kind) << " c_k=" << t.c_k
        << " c_k+1=" << t.c_k_next << '\n';
    if (t.kind == ConstructionTrace::Case::NoUpperFaces) out << pad << "  levels " << format_levels(t.base_levels) << '\n';
    if (t.kind != ConstructionTrace::Case::Inductive) return;
    out << pad << "  pivot " << t.pivot << " cliques " << t.pivot_cliques << '\n';
    out << pad << "  non_neighbors";
    for (Vertex v : t.non_neighbors) out << ' ' << v;
    out << '\n';
    out << pad << "  base " << format_levels(t.base_levels) << '\n';
    for (const auto& s : t.steps)
        out << pad << "  step " << s.index << " vertex " << s.vertex << " a " << s.a << " b " << s.b << " added "
            << s.added << " link " << format_levels(s.link_levels) << '\n';
    for (const auto& sub : t.link_trace) print_trace(out, sub, depth + 1);
}

inline std::string read_input(const std::string& source, std::istream& in) {
    if (source == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream file(source, std::ios::binary);
    if (!file) throw InputError("cannot read '" + source + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

inline GraphFormat parse_format(const std::string& name) {
    if (name == "auto") return GraphFormat::Auto;
    if (name == "edgelist") return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
}

inline ParsedGraphs load_graphs(const std::string& source, const std::string& format, std::istream& in,
                                std::ostream& err) {
    auto parsed = parse_graphs(read_input(source, in), parse_format(format));
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
    return parsed;
}

inline Graph load_one_graph(const std::string& source, const std::string& format, std::istream& in,
                            std::ostream& err) {
    auto parsed = load_graphs(source, format, in, err);
    if (parsed.graphs.size() != 1) throw InputError("expected exactly one graph in '" + source + "'");
    return std::move(parsed.graphs.front());
}

inline void print_colored(std::ostream& out, const ColoredComplex& cc) {
    out << "facets\n";
    for (const auto& f : cc.complex.facets()) out << format_colored_face(f, cc) << '\n';
}

inline Json colored_json(const ColoredComplex& cc) {
    Json facets = Json::array();
    for (const auto& f : cc.complex.facets()) facets.push_back(std::vector<Vertex>(f.begin(), f.end()));
    Json coloring = Json::array();
    for (const auto& [v, c] : cc.coloring) coloring.push_back({v, c});
    Json j;
    j["colors"] = cc.colors;
    j["facets"] = std::move(facets);
    j["coloring"] = std::move(coloring);
    return j;
}

inline int report_exit(const VerificationReport& report) {
    if (report.ok()) return kSuccess;
    if (report.guard_exceeded == report.failures.size()) return kGuard;
    return kVerificationFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    using namespace detail;

    CLI::App app{"Clique vectors, shadow bounds and balanced complexes with the same face numbers", "flagbal"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const std::vector<std::string> formats{"auto", "edgelist", "graph6"};
    std::string format = "auto";
    std::string output = "plain";
    auto add_input = [&](CLI::App* sub, std::string& source, bool required) {
        auto* opt = sub->add_option("graph", source, "Graph file, or - for standard input");
        if (required) opt->required();
        sub->add_option("--format", format, "Input format")->check(CLI::IsMember(formats));
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output, "Output style")->check(CLI::IsMember({"plain", "records"}));
    };

    std::string source;
    std::string m_text;
    std::uint32_t k = 0;
    std::uint64_t r = 0;

    auto* cliquevec = app.add_subcommand("cliquevec", "Print the clique vector (c_0 ... c_d) of each graph");
    add_input(cliquevec, source, true);

    auto* kk = app.add_subcommand("kk-bound", "k-canonical representation of m and the largest possible c_{k+1}");
    kk->add_option("--m", m_text, "Number of k-faces")->required();
    kk->add_option("--k", k, "Face size")->required()->check(CLI::PositiveNumber);

    auto* ffk = app.add_subcommand("ffk-bound", "(k,r)-canonical representation of m and the r-colorable bound");
    ffk->add_option("--m", m_text, "Number of k-faces")->required();
    ffk->add_option("--k", k, "Face size")->required()->check(CLI::PositiveNumber);
    ffk->add_option("--r", r, "Number of colors")->required()->check(CLI::PositiveNumber);

    auto* canonical = app.add_subcommand("canonical", "Print the canonical term list n:j ...");
    canonical->add_option("--m", m_text, "Integer to represent")->required();
    canonical->add_option("--k", k, "Top index")->required()->check(CLI::PositiveNumber);
    auto* canonical_r = canonical->add_option("--r", r, "Color budget")->check(CLI::PositiveNumber);

    std::string levels_text;
    std::uint64_t colors = 0;
    bool emit_faces = false;
    auto* revlex = app.add_subcommand("revlex", "Build a (colored) rev-lex complex from size:count levels");
    revlex->add_option("--levels", levels_text, "Levels as \"i1:m1,i2:m2,...\"")->required();
    auto* revlex_colors = revlex->add_option("--colors", colors, "Use r-permissible sets, r colors")->check(CLI::PositiveNumber);
    revlex->add_flag("--emit-faces", emit_faces, "Also print the facets");

    bool trace = false;
    auto* construct = app.add_subcommand("construct", "Balanced complex with the clique vector of the graph");
    add_input(construct, source, true);
    construct->add_flag("--trace", trace, "Print the two-level construction trace for every k");
    add_output(construct);

    auto* pair = app.add_subcommand("construct-pair", "r-colorable complex matching c_k and c_{k+1} of the graph");
    add_input(pair, source, true);
    pair->add_option("--k", k, "Lower face size")->required();
    auto* pair_r = pair->add_option("--r", r, "Number of colors (default: clique number)")->check(CLI::PositiveNumber);
    pair->add_flag("--trace", trace, "Print the construction trace");
    add_output(pair);

    std::size_t exhaustive_n = 0;
    std::vector<std::string> random_args;
    unsigned threads = 0;
    auto* verify = app.add_subcommand("verify", "Check the construction against brute-force recounts");
    add_input(verify, source, false);
    auto* verify_exhaustive = verify->add_option("--exhaustive", exhaustive_n, "All labelled graphs on N <= 7 vertices");
    auto* verify_random = verify->add_option("--random", random_args, "N P TRIALS SEED")->expected(4);
    verify->add_option("--threads", threads, "Worker threads (default: all cores)");
    add_output(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (cliquevec->parsed()) {
            for (const auto& g : load_graphs(source, format, in, err).graphs) out << format_vector(clique_vector(g)) << '\n';
            return kSuccess;
        }

        if (kk->parsed()) {
            const BigInt m = parse_count(m_text, "m");
            const auto rep = kk_canonical(m, k);
            out << m << " = " << format_rep(rep) << "; bound = " << successor_bound(rep) << '\n';
            return kSuccess;
        }

        if (ffk->parsed()) {
            const BigInt m = parse_count(m_text, "m");
            if (r < k) throw UsageError("--r must be at least --k");
            const auto rep = ffk_canonical(m, k, r);
            out << m << " = " << format_rep(rep) << "; bound = " << successor_bound(rep) << '\n';
            return kSuccess;
        }

        if (canonical->parsed()) {
            const BigInt m = parse_count(m_text, "m");
            if (canonical_r->count() > 0 && r < k) throw UsageError("--r must be at least --k");
            const auto rep = canonical_r->count() > 0 ? ffk_canonical(m, k, r) : kk_canonical(m, k);
            out << format_terms(rep) << '\n';
            return kSuccess;
        }

        if (revlex->parsed()) {
            const LevelSpec spec = parse_level_spec(levels_text);
            if (revlex_colors->count() > 0) {
                const auto cc = colored_revlex_complex(spec, colors);
                out << format_vector(face_vector(cc.complex)) << '\n';
                if (emit_faces) print_colored(out, cc);
            } else {
                const auto c = revlex_complex(spec);
                out << format_vector(face_vector(c)) << '\n';
                if (emit_faces) {
                    out << "facets\n";
                    for (const auto& f : c.facets()) out << format_face(f) << '\n';
                }
            }
            return kSuccess;
        }

        if (construct->parsed()) {
            const Graph g = load_one_graph(source, format, in, err);
            const auto built = construct_balanced(g);
            const auto& rep = built.report;
            if (output == "records") {
                Json j;
                j["r"] = rep.r;
                j["clique_vector"] = rep.clique_vector.counts();
                j["face_vector"] = rep.face_vector.counts();
                Json margins = Json::array();
                for (const auto& m : rep.margins) margins.push_back(big_json(m));
                j["margins"] = std::move(margins);
                j["complex"] = colored_json(built.complex);
                out << j.dump() << '\n';
            } else {
                out << "r " << rep.r << '\n';
                out << "clique_vector " << format_vector(rep.clique_vector) << '\n';
                out << "face_vector " << format_vector(rep.face_vector) << '\n';
                out << "margins";
                for (const auto& m : rep.margins) out << ' ' << m;
                out << '\n';
                print_colored(out, built.complex);
            }
            if (trace) {
                out << "trace\n";
                for (std::uint32_t i = 1; i < rep.r; ++i) print_trace(out, construct_pair(g, rep.r, i).trace, 1);
            }
            return kSuccess;
        }

        if (pair->parsed()) {
            const Graph g = load_one_graph(source, format, in, err);
            const std::uint64_t budget = pair_r->count() > 0 ? r : std::max<std::size_t>(clique_number(g), 1);
            const auto result = construct_pair(g, budget, k);
            const FaceVector fv = face_vector(result.complex.complex);
            if (output == "records") {
                Json j;
                j["r"] = budget;
                j["k"] = k;
                j["c_k"] = result.trace.c_k;
                j["c_k+1"] = result.trace.c_k_next;
                j["face_vector"] = fv.counts();
                j["complex"] = colored_json(result.complex);
                out << j.dump() << '\n';
            } else {
                out << "r " << budget << '\n';
                out << "k " << k << '\n';
                out << "targets " << result.trace.c_k << ' ' << result.trace.c_k_next << '\n';
                out << "face_vector " << format_vector(fv) << '\n';
                print_colored(out, result.complex);
            }
            if (trace) {
                out << "trace\n";
                print_trace(out, result.trace, 1);
            }
            return kSuccess;
        }

        if (verify->parsed()) {
            const int modes = (verify_exhaustive->count() > 0) + (verify_random->count() > 0) + !source.empty();
            if (modes != 1) throw UsageError("verify takes exactly one of: a graph, --exhaustive N, --random N P TRIALS SEED");
            VerifyOptions options;
            options.keep_records = output == "records";
            options.threads = threads;

            VerificationReport report;
            if (verify_exhaustive->count() > 0) {
                if (exhaustive_n > kExhaustiveMaxOrder) throw UsageError("--exhaustive accepts N <= 7");
                report = exhaustive_verify(exhaustive_n, options);
            } else if (verify_random->count() > 0) {
                auto integer = [](const std::string& s, const char* what) {
                    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
                        throw UsageError(std::string("--random: bad ") + what);
                    return std::stoull(s);
                };
                const auto n = integer(random_args[0], "N");
                if (n > kRandomMaxOrder) throw UsageError("--random accepts N <= 24");
                Probability p;
                try {
                    p = Probability::parse(random_args[1]);
                } catch (const ParseError& e) {
                    throw UsageError(std::string("--random: ") + e.what());
                }
                report = random_verify(n, p, integer(random_args[2], "TRIALS"), integer(random_args[3], "SEED"), options);
            } else {
                for (const auto& g : load_graphs(source, format, in, err).graphs)
                    report.add(verify_graph(g), options.keep_records);
            }

            if (output == "records") {
                for (const auto& rec : report.records) out << record_json(rec).dump() << '\n';
                Json summary;
                summary["graphs"] = report.graphs;
                summary["passed"] = report.passed;
                summary["failures"] = report.failed();
                out << summary.dump() << '\n';
            } else {
                out << "graphs " << report.graphs << '\n';
                out << "passed " << report.passed << '\n';
                out << "failures " << report.failed() << '\n';
                for (const auto& rec : report.failures) out << "failure " << record_json(rec).dump() << '\n';
            }
            return report_exit(report);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputFormat;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputFormat;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kGuard;
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace flagbal::cli

#pragma once

#include "io.hpp"
#include "vhx.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace vhx {

struct RunConfig {
    std::string command;
    std::string input;
    std::vector<int> n{2};
    bool n_given = false;
    bool two_var = false;
    bool json = false;
    bool verify_paths = false;
    bool no_memo = false;
    bool any_valence = false;
    int threads = 0;
    int max_vertices = 12;   // homology cap
    int state_cap = 30;      // state enumeration cap
};

namespace cli_detail {

inline std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size() || v < 1) throw std::invalid_argument("bad value for --n: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("--n needs at least one value");
    return out;
}

inline std::string join(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

inline std::string edge_list(const std::vector<int>& es) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < es.size(); ++i) os << (i ? "," : "") << "e" << es[i] + 1;
    os << "}";
    return os.str();
}

struct Checker {
    std::ostream& out;
    bool ok = true;
    json rows = json::array();
    bool quiet = false;
    void report(const std::string& name, bool pass, const std::string& detail = "") {
        ok = ok && pass;
        rows.push_back(json{{"check", name}, {"pass", pass}, {"detail", detail}});
        if (!quiet) out << (pass ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : "  (" + detail + ")") << "\n";
    }
};

inline int run_check(const RotationSystem& rs, const RunConfig& cfg, std::ostream& out) {
    Checker ck{out};
    ck.quiet = cfg.json;
    auto st = genus_and_orientability(rs);
    auto hist = state_histogram(rs, cfg.threads);
    IntPoly V = vertex_from_histogram(hist);
    auto g = AbstractGraph::from(rs);
    bool plane = st.orientable && st.genus == 0;
    std::vector<int> ns = cfg.n_given ? cfg.n : std::vector<int>{2, 3};
    for (int n : ns) {
        std::string tag = " [n=" + std::to_string(n) + "]";
        LaurentPoly P = ncolor_from_histogram(hist, n);
        ck.report("specialization q=1" + tag, at_one(P) == V.eval(n));
        if (n >= 2 && rs.vertex_count() <= cfg.max_vertices) {
            VertexComplexOptions o;
            o.verify_paths = cfg.verify_paths;
            o.max_vertices = cfg.max_vertices;
            try {
                auto C = build_vertex_complex(rs, n, o);
                if (cfg.verify_paths) ck.report("six-path independence" + tag, true);
                auto H = bigraded_homology(C);
                ck.report("graded Euler characteristic of homology" + tag, graded_euler(H) == P);
                if (rs.vertex_count() <= 8) {
                    auto bad = graded_square_failures(C);
                    bool sq = std::find(bad.begin(), bad.end(), 0) == bad.end();
                    ck.report("differential squares to zero" + tag, sq);
                    ck.report("graded pieces compose to zero" + tag, bad.empty());
                }
            } catch (const std::logic_error& e) {
                ck.report("vertex complex construction" + tag, false, e.what());
            }
        }
        FilteredOptions fo;
        fo.memo = !cfg.no_memo;
        fo.threads = cfg.threads;
        fo.keep_per_state = false;
        auto f = filtered_ranks(rs, n, fo);
        ck.report("filtered Euler characteristic = V(G,n)" + tag, f.euler() == V.eval(n),
                  "euler " + f.euler().str() + ", V " + V.eval(n).str());
        if (st.orientable) {
            bool sym = true;
            for (std::size_t i = 0; i < f.ranks.size(); ++i) sym = sym && f.ranks[i] == f.ranks[f.ranks.size() - 1 - i];
            ck.report("filtered rank symmetry" + tag, sym);
        }
        if (n == 2) {
            auto pms = perfect_matchings(g);
            BigInt scale = BigInt(1) << (rs.vertex_count() / 2);
            bool have_pm = !pms.empty();
            bool tm_pos = f.total() > 0;
            bool some_rank = false;
            for (auto& r : f.ranks) some_rank = some_rank || r > 0;
            ck.report("perfect matching <=> TM > 0 <=> nonzero homology", have_pm == tm_pos && tm_pos == some_rank);
            ck.report("rank0 <= 2 #PM", f.ranks[0] <= BigInt(2 * pms.size()));
            if (rs.edge_count() <= 36) {
                BigInt tait = count_tait_colorings(g);
                ck.report("TM >= 2^{|V|/2} #Tait", f.total() >= scale * tait);
                BigInt tm_formula = 0;
                bool all_even = true;
                for (auto& M : pms) {
                    auto prof = classify_matching(g, M);
                    all_even = all_even && prof.even;
                    tm_formula += scale * (BigInt(1) << prof.cycle_lengths.size());
                }
                if (all_even) ck.report("TM = 2^{|V|/2} #Tait when every matching is even", f.total() == scale * tait);
                if (plane) {
                    ck.report("plane: rank0 = 2 #PM", f.ranks[0] == BigInt(2 * pms.size()));
                    ck.report("plane: euler = 2^{|V|/2} #Tait", f.euler() == scale * tait);
                    BigInt b = bridges(g).size();
                    ck.report("plane: rank1 = 4 m b", f.ranks.size() > 1 && f.ranks[1] == 4 * BigInt(pms.size()) * b);
                    ck.report("plane: TM = 2^{|V|/2} sum 2^{#cycles}", f.total() == tm_formula);
                }
            }
        }
    }
    if (st.orientable) {
        bool par = (rs.vertex_count() / 2) % 2 == 0 ? is_even_function(V) : is_odd_function(V);
        ck.report("parity of V(G,n)", par || V.is_zero());
    }
    if (cfg.json) out << json{{"pass", ck.ok}, {"checks", ck.rows}}.dump(2) << "\n";
    else out << (ck.ok ? "all checks passed" : "some checks FAILED") << "\n";
    return ck.ok ? 0 : 3;
}

}  // namespace cli_detail

/// Full command-line entry point.  Exit codes: 0 ok, 1 usage or runtime
/// error, 2 VPD parse error, 3 check failure.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"vertex homology toolkit for trivalent ribbon graphs"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string nstr;
    auto add_common = [&](CLI::App* sub, bool with_n) {
        sub->add_option("input", cfg.input, "diagram file (.vpd)")->required();
        sub->add_flag("--json", cfg.json, "JSON output");
        sub->add_option("--threads", cfg.threads, "worker threads (VHX_THREADS overrides)");
        sub->add_option("--state-cap", cfg.state_cap, "largest vertex count for state enumeration");
        if (with_n) sub->add_option("--n", nstr, "number of colors, or a list like 2,3,4");
    };
    auto* faces = app.add_subcommand("faces", "boundary circles, genus and orientability");
    add_common(faces, false);
    auto* ncolor = app.add_subcommand("ncolor-poly", "n-color vertex polynomial in q");
    add_common(ncolor, true);
    auto* vpoly = app.add_subcommand("vertex-poly", "vertex polynomial in n");
    add_common(vpoly, false);
    vpoly->add_flag("--any-valence", cfg.any_valence, "accept any valence; compute through the blowup");
    auto* hom = app.add_subcommand("homology", "bigraded homology ranks");
    add_common(hom, true);
    hom->add_flag("--verify-paths", cfg.verify_paths, "compare all six paths per hypercube edge");
    hom->add_option("--max-vertices", cfg.max_vertices, "vertex cap for building the complex");
    auto* filt = app.add_subcommand("filtered", "filtered homology ranks from partial colorings");
    add_common(filt, true);
    filt->add_flag("--no-memo", cfg.no_memo, "count every state from scratch");
    auto* tm = app.add_subcommand("tm-poly", "total matching polynomial");
    add_common(tm, true);
    tm->add_flag("--two-var", cfg.two_var, "coefficients of t^i as polynomials in n");
    tm->add_flag("--no-memo", cfg.no_memo, "count every state from scratch");
    auto* mat = app.add_subcommand("matchings", "perfect matchings and their cycle profiles");
    add_common(mat, false);
    auto* tait = app.add_subcommand("tait", "number of Tait colorings");
    add_common(tait, false);
    auto* chk = app.add_subcommand("check", "run the invariant suite on the input");
    add_common(chk, true);
    chk->add_flag("--verify-paths", cfg.verify_paths, "compare all six paths per hypercube edge");
    chk->add_flag("--no-memo", cfg.no_memo, "count every state from scratch");
    chk->add_option("--max-vertices", cfg.max_vertices, "vertex cap for building complexes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();

    RotationSystem rs;
    try {
        if (!nstr.empty()) {
            cfg.n = cli_detail::parse_n_list(nstr);
            cfg.n_given = true;
        }
        std::string text = read_file(cfg.input);
        rs = parse_vpd(text, cfg.any_valence);
        validate(rs, cfg.any_valence);
        if (!is_connected(rs)) throw ParseError("diagram is disconnected", 1, 1);
    } catch (const ParseError& e) {
        err << cfg.input << ":" << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        bool needs_states = cfg.command != "faces" && cfg.command != "matchings" && cfg.command != "tait";
        if (needs_states && rs.vertex_count() > cfg.state_cap)
            throw std::runtime_error("diagram has " + std::to_string(rs.vertex_count()) +
                                     " vertices, above the state cap of " + std::to_string(cfg.state_cap) +
                                     " (raise it with --state-cap)");
        if (cfg.command == "faces") {
            auto st = genus_and_orientability(rs);
            auto d = trace_boundary(rs);
            if (cfg.json) {
                json circles = json::array();
                for (auto& c : d.circles) {
                    json toks = json::array();
                    for (int t : c) toks.push_back(json::array({tok_half(t) + 1, (t & 1) ? "in" : "out"}));
                    circles.push_back(toks);
                }
                out << json{{"vertices", rs.vertex_count()}, {"edges", rs.edge_count()}, {"faces", st.faces},
                            {"orientable", st.orientable}, {st.orientable ? "genus" : "crosscaps", st.genus},
                            {"corner_map", d.corner_map}, {"circles", circles}}
                           .dump(2)
                    << "\n";
            } else {
                out << "vertices " << rs.vertex_count() << "\nedges " << rs.edge_count() << "\nfaces " << st.faces
                    << "\n"
                    << (st.orientable ? "orientable, genus " : "non-orientable, crosscaps ") << st.genus << "\n";
            }
        } else if (cfg.command == "ncolor-poly") {
            if (!rs.trivalent()) throw std::invalid_argument("trivalent input required");
            auto hist = state_histogram(rs, cfg.threads);
            json arr = json::array();
            for (int n : cfg.n) {
                auto p = ncolor_from_histogram(hist, n);
                if (cfg.json) arr.push_back(json{{"n", n}, {"poly", poly_json(p)}});
                else out << (cfg.n.size() > 1 ? "n=" + std::to_string(n) + ": " : "") << p.str() << "\n";
            }
            if (cfg.json) out << (arr.size() == 1 ? arr[0]["poly"] : arr).dump() << "\n";
        } else if (cfg.command == "vertex-poly") {
            if (cfg.any_valence) {
                auto r = abstract_vertex_polynomial(rs, cfg.threads);
                if (cfg.json)
                    out << json{{"poly", poly_json(r.poly)}, {"negated", r.negated},
                                {"negative_powers", r.negative_powers}}
                               .dump()
                        << "\n";
                else {
                    out << r.poly.str() << "\n";
                    if (r.negated) err << "note: sign flipped to make the leading coefficient positive\n";
                    if (r.negative_powers) err << "note: negative powers of n remain\n";
                }
            } else {
                auto p = vertex_polynomial(rs, cfg.threads);
                out << (cfg.json ? poly_json(p).dump() : p.str()) << "\n";
            }
        } else if (cfg.command == "homology") {
            if (rs.vertex_count() > cfg.max_vertices)
                throw std::runtime_error("diagram exceeds the homology vertex cap (--max-vertices)");
            json arr = json::array();
            for (int n : cfg.n) {
                if (n < 2) throw std::invalid_argument("homology needs n >= 2");
                VertexComplexOptions o;
                o.verify_paths = cfg.verify_paths;
                o.max_vertices = cfg.max_vertices;
                auto H = bigraded_homology(build_vertex_complex(rs, n, o));
                if (cfg.json) arr.push_back(rank_table_json(n, H));
                else out << "n=" << n << "\n" << rank_table_text(H);
            }
            if (cfg.json) out << (arr.size() == 1 ? arr[0] : arr).dump() << "\n";
        } else if (cfg.command == "filtered") {
            json arr = json::array();
            for (int n : cfg.n) {
                FilteredOptions fo;
                fo.memo = !cfg.no_memo;
                fo.threads = cfg.threads;
                fo.keep_per_state = false;
                auto f = filtered_ranks(rs, n, fo);
                if (cfg.json) arr.push_back(filtered_json(f));
                else
                    out << "n=" << n << "\nranks " << cli_detail::join(f.ranks) << "\neuler " << f.euler() << "\ntm "
                        << f.total() << "\n";
            }
            if (cfg.json) out << (arr.size() == 1 ? arr[0] : arr).dump() << "\n";
        } else if (cfg.command == "tm-poly") {
            FilteredOptions fo;
            fo.memo = !cfg.no_memo;
            fo.threads = cfg.threads;
            fo.keep_per_state = false;
            if (cfg.two_var) {
                auto polys = filtered_rank_polynomials(rs, fo);
                if (cfg.json) {
                    json arr = json::array();
                    for (std::size_t i = 0; i < polys.size(); ++i)
                        arr.push_back(json{{"t", static_cast<int>(i)}, {"coeff", poly_json(polys[i])}});
                    out << json{{"var", "t"}, {"terms", arr}}.dump() << "\n";
                } else {
                    for (std::size_t i = 0; i < polys.size(); ++i)
                        if (!polys[i].is_zero()) out << "t^" << i << ": " << polys[i].str() << "\n";
                }
            } else {
                json arr = json::array();
                for (int n : cfg.n) {
                    auto f = filtered_ranks(rs, n, fo);
                    auto p = total_matching_polynomial(f);
                    if (cfg.json) arr.push_back(json{{"n", n}, {"poly", poly_json(p)}, {"tm", big_json(f.total())}});
                    else out << "n=" << n << ": " << p.str() << "\nTM = " << f.total() << "\n";
                }
                if (cfg.json) out << (arr.size() == 1 ? arr[0] : arr).dump() << "\n";
            }
        } else if (cfg.command == "matchings") {
            auto g = AbstractGraph::from(rs);
            auto pms = perfect_matchings(g);
            json arr = json::array();
            for (auto& M : pms) {
                auto prof = classify_matching(g, M);
                if (cfg.json) {
                    std::vector<int> e1;
                    for (int e : M) e1.push_back(e + 1);
                    arr.push_back(json{{"edges", e1}, {"even", prof.even}, {"cycles", prof.cycle_lengths}});
                } else {
                    out << cli_detail::edge_list(M) << (prof.even ? " even" : " odd") << " cycles";
                    for (int l : prof.cycle_lengths) out << " " << l;
                    out << "\n";
                }
            }
            if (cfg.json) out << json{{"count", pms.size()}, {"matchings", arr}}.dump() << "\n";
            else out << "count " << pms.size() << "\n";
        } else if (cfg.command == "tait") {
            auto c = count_tait_colorings(AbstractGraph::from(rs));
            out << (cfg.json ? json{{"tait", c}}.dump() : std::to_string(c)) << "\n";
        } else if (cfg.command == "check") {
            if (!rs.trivalent()) throw std::invalid_argument("trivalent input required");
            return cli_detail::run_check(rs, cfg, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace vhx

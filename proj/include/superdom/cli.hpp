#pragma once

// Command-line front end. All output formats here are part of the tool's
// contract and are exercised byte-for-byte by the tests.

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "superdom/formulas.hpp"
#include "superdom/generators.hpp"
#include "superdom/graph_io.hpp"
#include "superdom/products.hpp"
#include "superdom/solver.hpp"

namespace superdom::cli {

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer list element '" + item + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("bad integer list element '" + item + "'");
        out.push_back(value);
    }
    return out;
}

inline std::string join_members(const VertexSet& s) {
    std::string out;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

inline VertexSet set_from_list(const std::vector<int>& vs, int n) {
    VertexSet s(n);
    for (int v : vs) s.add(v);  // range-checked by VertexSet
    return s;
}

inline void emit_graph(const Graph& g, const std::string& path,
                       std::ostream& out) {
    if (path.empty())
        write_graph(out, g);
    else
        write_graph_file(path, g);
}

inline std::pair<int, int> parse_edge_arg(const std::string& text,
                                          const char* flag) {
    const auto vs = parse_int_list(text);
    if (vs.size() != 2)
        throw std::invalid_argument(std::string(flag) +
                                    " expects exactly two vertices");
    return {vs[0], vs[1]};
}

// One BoundReport line; returns 0 on PASS, 1 on FAIL.
inline int report(std::ostream& out, const BoundInterval& iv, int value,
                  bool pass) {
    out << (pass ? "PASS" : "FAIL") << " lo=" << iv.lo << " value=" << value
        << " hi=" << iv.hi << "\n";
    return pass ? 0 : 1;
}

inline bool isolate_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return false;
    return true;
}

inline bool connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

}  // namespace detail

// Runs one invocation. argv excludes the program name. Exit codes: 0 success,
// 1 a verify check failed, 2 parse or validation error.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"exact super domination toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen
    std::string gen_class, gen_out;
    std::vector<int> gen_params;
    auto* gen = app.add_subcommand("gen", "generate a graph class");
    gen->add_option("class", gen_class,
                    "path|cycle|complete|complete_bipartite|star|friendship")
        ->required();
    gen->add_option("params", gen_params, "class parameters");
    gen->add_option("-o,--output", gen_out, "output file (default: stdout)");
    gen->callback([&] {
        detail::emit_graph(generate(parse_graph_class(gen_class), gen_params),
                           gen_out, out);
    });

    // solve
    std::string solve_file;
    auto* solve = app.add_subcommand("solve", "minimum super dominating set");
    solve->add_option("file", solve_file, "graph file")->required();
    solve->callback([&] {
        const auto res = super_domination_number(read_graph_file(solve_file));
        out << "gamma_sp=" << res.value << "\n";
        out << "witness=" << detail::join_members(res.witness) << "\n";
    });

    // gamma
    std::string gamma_file;
    auto* gamma = app.add_subcommand("gamma", "domination number");
    gamma->add_option("file", gamma_file, "graph file")->required();
    gamma->callback([&] {
        const auto res = domination_number(read_graph_file(gamma_file));
        out << "gamma=" << res.value << "\n";
    });

    // count
    std::string count_file;
    int count_threads = 1;
    bool count_force = false;
    auto* count = app.add_subcommand("count", "number of minimum sets");
    count->add_option("file", count_file, "graph file")->required();
    count->add_option("--threads", count_threads, "worker threads")
        ->check(CLI::PositiveNumber);
    count->add_flag("--force", count_force, "override the size guard");
    count->callback([&] {
        const Graph g = read_graph_file(count_file);
        if (g.order() > kCountGuard && count_force)
            err << "warning: counting on " << g.order()
                << " vertices may take a long time\n";
        const uint64_t n = count_min_super_dom(g, count_threads, count_force);
        out << "N_sp=" << n << "\n";
    });

    // enumerate
    std::string enum_file;
    bool enum_force = false;
    auto* enumerate = app.add_subcommand("enumerate", "all minimum sets");
    enumerate->add_option("file", enum_file, "graph file")->required();
    enumerate->add_flag("--force", enum_force, "override the size guard");
    enumerate->callback([&] {
        const Graph g = read_graph_file(enum_file);
        if (g.order() > kCountGuard && enum_force)
            err << "warning: enumeration on " << g.order()
                << " vertices may take a long time\n";
        for (const auto& s : enumerate_min_super_dom(g, enum_force))
            out << detail::join_members(s) << "\n";
    });

    // decompose
    std::string dec_file, dec_set;
    auto* decompose =
        app.add_subcommand("decompose", "replacement decomposition (S', D, f)");
    decompose->add_option("file", dec_file, "graph file")->required();
    decompose->add_option("--set", dec_set, "super dominating set, e.g. 0,1,2")
        ->required();
    decompose->callback([&] {
        const Graph g = read_graph_file(dec_file);
        const VertexSet s =
            detail::set_from_list(detail::parse_int_list(dec_set), g.order());
        const auto pd = partition_decomposition(g, s);
        out << "S'=" << detail::join_members(pd.s_prime) << "\n";
        out << "D=" << detail::join_members(pd.d) << "\n";
        std::string pairs;
        for (const auto& [a, b] : pd.f) {
            if (!pairs.empty()) pairs += ',';
            pairs += std::to_string(a) + "->" + std::to_string(b);
        }
        out << "f=" << pairs << "\n";
    });

    // product
    auto* product = app.add_subcommand("product", "composite constructions");
    product->require_subcommand(1);

    std::string pa, pb, p_out, p_left, p_right, p_e1, p_e2, p_anchors;
    std::vector<std::string> chain_files;

    auto* pcorona = product->add_subcommand("corona", "corona product");
    pcorona->add_option("gfile", pa)->required();
    pcorona->add_option("hfile", pb)->required();
    pcorona->add_option("-o,--output", p_out);
    pcorona->callback([&] {
        detail::emit_graph(corona(read_graph_file(pa), read_graph_file(pb)),
                           p_out, out);
    });

    auto* pncorona =
        product->add_subcommand("ncorona", "neighbourhood corona product");
    pncorona->add_option("gfile", pa)->required();
    pncorona->add_option("hfile", pb)->required();
    pncorona->add_option("-o,--output", p_out);
    pncorona->callback([&] {
        detail::emit_graph(
            neighbourhood_corona(read_graph_file(pa), read_graph_file(pb)),
            p_out, out);
    });

    auto* pglue = product->add_subcommand("glue", "r-gluing");
    pglue->add_option("g1", pa)->required();
    pglue->add_option("g2", pb)->required();
    pglue->add_option("--left", p_left, "clique vertices in g1, e.g. 0,1");
    pglue->add_option("--right", p_right, "clique vertices in g2");
    pglue->add_option("-o,--output", p_out);
    pglue->callback([&] {
        const GlueSpec spec{detail::parse_int_list(p_left),
                            detail::parse_int_list(p_right)};
        detail::emit_graph(
            r_glue(read_graph_file(pa), read_graph_file(pb), spec), p_out, out);
    });

    auto* phajos = product->add_subcommand("hajos", "Hajos sum");
    phajos->add_option("g1", pa)->required();
    phajos->add_option("g2", pb)->required();
    phajos->add_option("--e1", p_e1, "edge of g1 as x,y")->required();
    phajos->add_option("--e2", p_e2, "edge of g2 as x,y")->required();
    phajos->add_option("-o,--output", p_out);
    phajos->callback([&] {
        const auto [x1, y1] = detail::parse_edge_arg(p_e1, "--e1");
        const auto [x2, y2] = detail::parse_edge_arg(p_e2, "--e2");
        detail::emit_graph(hajos_sum(read_graph_file(pa), read_graph_file(pb),
                                     HajosSpec{x1, y1, x2, y2}),
                           p_out, out);
    });

    auto* pchain = product->add_subcommand("chain", "chain of graphs");
    pchain->add_option("files", chain_files, "graph files, left to right")
        ->required();
    pchain
        ->add_option("--anchors", p_anchors,
                     "x1,y1,x2,y2,... one pair per graph")
        ->required();
    pchain->add_option("-o,--output", p_out);
    pchain->callback([&] {
        const auto flat = detail::parse_int_list(p_anchors);
        if (flat.size() != 2 * chain_files.size())
            throw std::invalid_argument(
                "--anchors needs exactly one x,y pair per graph");
        std::vector<Graph> graphs;
        std::vector<std::pair<int, int>> anchors;
        for (size_t i = 0; i < chain_files.size(); ++i) {
            graphs.push_back(read_graph_file(chain_files[i]));
            anchors.emplace_back(flat[2 * i], flat[2 * i + 1]);
        }
        detail::emit_graph(chain(graphs, anchors), p_out, out);
    });

    // formula
    std::string f_which, f_class;
    std::vector<int> f_params;
    auto* formula = app.add_subcommand("formula", "closed-form values");
    formula->add_option("which", f_which, "gamma_sp|nsp")->required();
    formula->add_option("class", f_class, "graph class")->required();
    formula->add_option("params", f_params, "class parameters");
    formula->callback([&] {
        const GraphClass cls = parse_graph_class(f_class);
        if (f_which == "gamma_sp")
            out << gamma_sp_formula(cls, f_params) << "\n";
        else if (f_which == "nsp")
            out << nsp_formula(cls, f_params) << "\n";
        else
            throw std::invalid_argument("formula expects gamma_sp or nsp");
    });

    // verify
    auto* verify = app.add_subcommand("verify", "check a theorem instance");
    verify->require_subcommand(1);

    std::string va, vb, v_left, v_right, v_e1, v_e2, v_anchors;

    auto* vthm1 = verify->add_subcommand(
        "thm1", "domination chain gamma <= n/2 <= gamma_sp <= n-1");
    vthm1->add_option("file", va)->required();
    vthm1->callback([&] {
        const Graph g = read_graph_file(va);
        if (!detail::isolate_free(g))
            throw std::invalid_argument("thm1 requires an isolate-free graph");
        const int n = g.order();
        const int gam = domination_number(g).value;
        const int gsp = super_domination_number(g).value;
        const bool pass =
            gam >= 1 && 2 * gam <= n && 2 * gsp >= n && gsp <= n - 1;
        exit_code = detail::report(
            out, BoundInterval{(n + 1) / 2, n - 1, "thm1"}, gsp, pass);
    });

    auto* vprop = verify->add_subcommand(
        "prop-disconnect", "additivity over a disjoint union");
    vprop->add_option("g1", va)->required();
    vprop->add_option("g2", vb)->required();
    vprop->callback([&] {
        const Graph a = read_graph_file(va), b = read_graph_file(vb);
        const int sum = super_domination_number(a).value +
                        super_domination_number(b).value;
        const int got = super_domination_number(disjoint_union(a, b)).value;
        exit_code = detail::report(
            out, BoundInterval{sum, sum, "prop-disconnect"}, got, got == sum);
    });

    auto* vchain2 = verify->add_subcommand("chain2", "two-graph chain bounds");
    vchain2->add_option("g1", va)->required();
    vchain2->add_option("g2", vb)->required();
    vchain2->add_option("--anchors", v_anchors, "x1,y1,x2,y2")->required();
    vchain2->callback([&] {
        const Graph a = read_graph_file(va), b = read_graph_file(vb);
        if (!detail::connected(a) || !detail::connected(b))
            throw std::invalid_argument("chain2 requires connected graphs");
        const auto flat = detail::parse_int_list(v_anchors);
        if (flat.size() != 4)
            throw std::invalid_argument("--anchors needs x1,y1,x2,y2");
        const Graph c =
            chain({a, b}, {{flat[0], flat[1]}, {flat[2], flat[3]}});
        const auto iv = chain_bounds(super_domination_number(a).value,
                                     super_domination_number(b).value);
        const int got = super_domination_number(c).value;
        exit_code = detail::report(out, iv, got, iv.contains(got));
    });

    auto* vglue = verify->add_subcommand("glue", "r-gluing bounds");
    vglue->add_option("g1", va)->required();
    vglue->add_option("g2", vb)->required();
    vglue->add_option("--left", v_left);
    vglue->add_option("--right", v_right);
    vglue->callback([&] {
        const Graph a = read_graph_file(va), b = read_graph_file(vb);
        const GlueSpec spec{detail::parse_int_list(v_left),
                            detail::parse_int_list(v_right)};
        const Graph c = r_glue(a, b, spec);
        const auto iv = glue_bounds(super_domination_number(a).value,
                                    super_domination_number(b).value,
                                    static_cast<int>(spec.left_clique.size()));
        const int got = super_domination_number(c).value;
        exit_code = detail::report(out, iv, got, iv.contains(got));
    });

    auto* vhajos = verify->add_subcommand("hajos", "Hajos sum bounds");
    vhajos->add_option("g1", va)->required();
    vhajos->add_option("g2", vb)->required();
    vhajos->add_option("--e1", v_e1, "edge of g1 as x,y")->required();
    vhajos->add_option("--e2", v_e2, "edge of g2 as x,y")->required();
    vhajos->callback([&] {
        const Graph a = read_graph_file(va), b = read_graph_file(vb);
        const auto [x1, y1] = detail::parse_edge_arg(v_e1, "--e1");
        const auto [x2, y2] = detail::parse_edge_arg(v_e2, "--e2");
        const Graph c = hajos_sum(a, b, HajosSpec{x1, y1, x2, y2});
        const auto iv = hajos_bounds(super_domination_number(a).value,
                                     super_domination_number(b).value);
        const int got = super_domination_number(c).value;
        exit_code = detail::report(out, iv, got, iv.contains(got));
    });

    auto* vncorona = verify->add_subcommand(
        "ncorona", "neighbourhood corona exact value / bounds");
    vncorona->add_option("gfile", va)->required();
    vncorona->add_option("hfile", vb)->required();
    vncorona->callback([&] {
        const Graph g = read_graph_file(va), h = read_graph_file(vb);
        const Graph prod = neighbourhood_corona(g, h);
        const int total = prod.order();
        const int got = super_domination_number(prod).value;
        BoundInterval iv{0, 0, "ncorona"};
        if (ncorona_hypotheses(g, h)) {
            const int v = static_cast<int>(
                ncorona_value(g.order(), super_domination_number(h).value));
            iv.lo = iv.hi = v;
        } else if (detail::connected(g) && detail::connected(h)) {
            // the upper bound needs only connectivity
            iv.lo = (total + 1) / 2;
            iv.hi = static_cast<int>(
                ncorona_value(g.order(), super_domination_number(h).value));
        } else {
            iv.lo = (total + 1) / 2;
            iv.hi = detail::isolate_free(prod) ? total - 1 : total;
        }
        exit_code = detail::report(out, iv, got, iv.contains(got));
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace superdom::cli

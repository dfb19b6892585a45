// Command-line driver: verification runs, family sweeps, oracle
// cross-checks.  Exit codes: 0 all agreements hold, 1 disagreement,
// 2 parse/usage failure, 3 a required check hit its brute-force cap.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "matchfree/even_conn.hpp"
#include "matchfree/homology.hpp"
#include "matchfree/ideal.hpp"
#include "matchfree/io.hpp"
#include "matchfree/oracles.hpp"
#include "matchfree/report.hpp"
#include "matchfree/theorems.hpp"

using namespace matchfree;

namespace {

struct QRange {
    bool all = false;
    int lo = 1, hi = 1;
};

QRange parse_q(const std::string& s) {
    QRange r;
    if (s == "all") {
        r.all = true;
        return r;
    }
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(s);
    } else {
        r.lo = std::stoi(s.substr(0, dots));
        r.hi = std::stoi(s.substr(dots + 2));
    }
    if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("bad q range");
    return r;
}

std::set<std::string> parse_checks(const std::string& s) {
    if (s == "all") return VerifyOptions::all_checks();
    std::set<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (!VerifyOptions::all_checks().count(tok))
            throw std::invalid_argument("unknown check: " + tok);
        out.insert(tok);
    }
    if (out.empty()) throw std::invalid_argument("empty check list");
    return out;
}

Matching parse_matching(const std::string& s) {
    std::vector<Edge> edges;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("matching needs u-v pairs");
        edges.push_back(make_edge(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))));
    }
    return Matching(edges);
}

std::string file_stem(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

int jobs_from_env(int flag_value) {
    if (const char* env = std::getenv("MATCHFREE_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return flag_value;
}

struct Job {
    std::string id;
    Graph graph;
    bool whiskered = true;  // whisker mode: graph is the base H
    int q = 1;
};

int emit_reports(const std::vector<Job>& jobs, const VerifyOptions& opts,
                 const std::string& format, int jobs_n) {
    std::vector<VerificationReport> reports(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            const Job& j = jobs[i];
            reports[i] = j.whiskered ? run_verification(j.id, j.graph, j.q, opts)
                                     : run_verification_raw(j.id, j.graph, j.q, opts);
        }
    };
    int threads = std::max(1, jobs_n);
    if (threads == 1 || jobs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (format == "csv")
        std::cout << "graph,n,m,ell,nu,q,check,expected,computed,agree,elapsed_ms\n";
    for (const auto& rep : reports) {
        if (format == "json") {
            std::cout << report_to_json_line(rep) << "\n";
        } else if (format == "csv") {
            for (const auto& row : report_to_csv_rows(rep)) std::cout << row << "\n";
        } else {
            std::cout << report_to_text(rep);
        }
    }
    return exit_code_for(reports);
}

int run_oracle(const std::string& kind, const Graph& g, int q, const std::string& matching_spec) {
    auto print_sets = [](const std::string& label, const std::vector<VertexSet>& sets) {
        std::cout << label << " (" << sets.size() << "):";
        for (VertexSet s : sets) {
            std::cout << " {";
            bool first = true;
            for (int v : elements(s)) {
                if (!first) std::cout << ",";
                std::cout << v;
                first = false;
            }
            std::cout << "}";
        }
        std::cout << "\n";
    };
    auto diff_exit = [&](const std::vector<VertexSet>& a, const std::vector<VertexSet>& b,
                         const std::string& la, const std::string& lb) {
        if (a == b) {
            std::cout << "match: " << a.size() << " elements\n";
            return 0;
        }
        std::cout << "MISMATCH\n";
        print_sets(la, a);
        print_sets(lb, b);
        return 1;
    };

    if (kind == "facets") {
        auto structured = mf_complex(g, q).facets();
        auto brute = oracle::mf_facets(g, q);
        return diff_exit(structured, brute, "structured", "subset-filter");
    }
    if (kind == "sr") {
        auto lhs = stanley_reisner(mf_complex(g, q)).generators();
        auto rhs = sf_power(g, q).generators();
        return diff_exit(lhs, rhs, "stanley-reisner", "squarefree-power");
    }
    if (kind == "colon") {
        Matching m = parse_matching(matching_spec);
        auto structured = edge_ideal(even_conn_graph(g, m)).generators();
        auto brute = oracle::colon_generators_by_membership(g, m);
        for (VertexSet gen : brute)
            if (gen.size() != 2) {
                std::cout << "MISMATCH: colon generator of degree " << gen.size() << "\n";
                return 1;
            }
        return diff_exit(structured, brute, "even-connection graph", "colon membership sweep");
    }
    if (kind == "even-conn") {
        Matching m = parse_matching(matching_spec);
        Graph ec = even_conn_graph(g, m);
        std::vector<VertexSet> structured;
        for (auto [u, v] : ec.edges()) structured.push_back(VertexSet::of({u, v}));
        std::vector<VertexSet> brute;
        auto vs = ec.verts().to_vector();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (g.has_edge(vs[i], vs[j]) ||
                    oracle::even_connected_by_walks(g, m, vs[i], vs[j]))
                    brute.push_back(VertexSet::of({vs[i], vs[j]}));
        std::sort(structured.begin(), structured.end(), size_lex_less);
        std::sort(brute.begin(), brute.end(), size_lex_less);
        return diff_exit(structured, brute, "state search", "walk enumeration");
    }
    throw std::invalid_argument("unknown oracle kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squarefree powers of whisker edge ideals: verification tools"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run checks on one graph (or family entry)");
    std::string v_family, v_graph, v_q = "all", v_checks = "purity,dim", v_format = "json";
    std::string v_field = "gf2";
    bool v_raw = false, v_whisker = false, v_timing = false;
    int v_jobs = 1, v_cap = 12, v_colon_cap = 8;
    verify->add_option("--family", v_family, "family spec, e.g. cycle:5 (whiskered by default)");
    verify->add_option("--graph", v_graph, "graph file (.g6 or edge list; raw by default)");
    verify->add_option("--q", v_q, "q range: N, A..B or all");
    verify->add_option("--checks", v_checks, "comma list or `all`");
    verify->add_option("--format", v_format, "json | csv | text");
    verify->add_option("--field", v_field, "gf2 | rationals | both");
    verify->add_flag("--raw", v_raw, "analyze the graph itself (no whiskering)");
    verify->add_flag("--whisker", v_whisker, "whisker a file graph");
    verify->add_flag("--timing", v_timing, "fill elapsed_ms (off keeps output byte-stable)");
    verify->add_option("--jobs", v_jobs, "worker threads (env MATCHFREE_JOBS overrides)");
    verify->add_option("--shelling-cap", v_cap, "facet cap for brute-force shellability");
    verify->add_option("--colon-cap", v_colon_cap, "matching-size cap for colon checks");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "run a family sweep over n and q");
    std::string s_family = "cycle", s_n = "3..5", s_q = "all", s_checks = "purity,dim";
    std::string s_format = "csv", s_field = "gf2";
    bool s_timing = false;
    int s_jobs = 1, s_cap = 12, s_colon_cap = 8;
    sweep->add_option("--family", s_family, "cycle | path | complete | star | all_connected");
    sweep->add_option("--n", s_n, "range of base sizes, e.g. 3..7");
    sweep->add_option("--q", s_q, "q policy: all or A..B");
    sweep->add_option("--checks", s_checks, "comma list or `all`");
    sweep->add_option("--format", s_format, "csv | json | text");
    sweep->add_option("--field", s_field, "gf2 | rationals | both");
    sweep->add_flag("--timing", s_timing, "fill elapsed_ms");
    sweep->add_option("--jobs", s_jobs, "worker threads (env MATCHFREE_JOBS overrides)");
    sweep->add_option("--shelling-cap", s_cap, "facet cap for brute-force shellability");
    sweep->add_option("--colon-cap", s_colon_cap, "matching-size cap for colon checks");

    // ---- oracle ----
    auto* orc = app.add_subcommand("oracle", "compare a brute-force oracle with the computation");
    std::string o_kind, o_family, o_graph, o_matching;
    int o_q = 1;
    bool o_raw = false, o_whisker = false;
    orc->add_option("kind", o_kind, "colon | sr | even-conn | facets")->required();
    orc->add_option("--family", o_family, "family spec (whiskered by default)");
    orc->add_option("--graph", o_graph, "graph file (raw by default)");
    orc->add_option("--q", o_q, "power for sr/facets");
    orc->add_option("--matching", o_matching, "matching, e.g. 0-1,2-3");
    orc->add_flag("--raw", o_raw, "do not whisker the family graph");
    orc->add_flag("--whisker", o_whisker, "whisker the file graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed() || sweep->parsed()) {
            bool is_sweep = sweep->parsed();
            VerifyOptions opts;
            opts.checks = parse_checks(is_sweep ? s_checks : v_checks);
            std::string field = is_sweep ? s_field : v_field;
            opts.use_gf2 = field == "gf2" || field == "both";
            opts.use_rationals = field == "rationals" || field == "both";
            if (!opts.use_gf2 && !opts.use_rationals)
                throw std::invalid_argument("unknown field: " + field);
            opts.shelling_facet_cap = is_sweep ? s_cap : v_cap;
            opts.colon_size_cap = is_sweep ? s_colon_cap : v_colon_cap;
            opts.timing = is_sweep ? s_timing : v_timing;
            QRange qr = parse_q(is_sweep ? s_q : v_q);
            int jobs_n = jobs_from_env(is_sweep ? s_jobs : v_jobs);
            std::string format = is_sweep ? s_format : v_format;

            std::vector<Job> jobs;
            auto push_graph = [&](const std::string& id, const Graph& g, bool whiskered) {
                int nu_cap = whiskered ? g.num_verts() : matching_number(g);
                int lo = qr.all ? 1 : qr.lo;
                int hi = qr.all ? std::max(nu_cap, 1) : qr.hi;
                for (int q = lo; q <= hi; ++q) jobs.push_back({id, g, whiskered, q});
            };

            if (is_sweep) {
                auto dots = s_n.find("..");
                int n_lo = std::stoi(dots == std::string::npos ? s_n : s_n.substr(0, dots));
                int n_hi = dots == std::string::npos ? n_lo : std::stoi(s_n.substr(dots + 2));
                for (int n = n_lo; n <= n_hi; ++n)
                    for (auto& [id, g] : parse_family_spec(s_family + ":" + std::to_string(n)))
                        push_graph(id, g, true);
            } else {
                if (v_family.empty() == v_graph.empty())
                    throw std::invalid_argument("verify needs exactly one of --family / --graph");
                if (!v_family.empty()) {
                    for (auto& [id, g] : parse_family_spec(v_family)) push_graph(id, g, !v_raw);
                } else {
                    Graph g = load_graph_file(v_graph);
                    push_graph(file_stem(v_graph), g, v_whisker);
                }
            }
            return emit_reports(jobs, opts, format, jobs_n);
        }

        // oracle
        if (o_family.empty() == o_graph.empty())
            throw std::invalid_argument("oracle needs exactly one of --family / --graph");
        Graph g = o_family.empty() ? load_graph_file(o_graph) : parse_family_spec(o_family)[0].second;
        bool whiskered = o_family.empty() ? o_whisker : !o_raw;
        if (whiskered) g = whisker(g).graph();
        return run_oracle(o_kind, g, o_q, o_matching);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

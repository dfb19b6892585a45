#include "matchfree/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace matchfree {

using nlohmann::json;

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (n < 0) {
            n = std::stoi(first);
            if (n < 0 || n > 64) throw std::invalid_argument("edge list: bad vertex count");
            continue;
        }
        int u = std::stoi(first), v;
        if (!(ls >> v)) throw std::invalid_argument("edge list: expected `u v`");
        edges.push_back(make_edge(u, v));
    }
    if (n < 0) throw std::invalid_argument("edge list: missing vertex count");
    return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph parse_graph6(const std::string& raw) {
    std::string s = raw;
    const std::string marker = ">>graph6<<";
    if (s.rfind(marker, 0) == 0) s = s.substr(marker.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6: only the short form (n <= 62) is supported");
    size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() < 1 + need) throw std::invalid_argument("graph6: truncated input");
    std::vector<Edge> edges;
    size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = s[1 + bit / 6] - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad character");
            if (c >> (5 - bit % 6) & 1) edges.push_back({i, j});
        }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6: only n <= 62 is supported");
    std::string out(1 + (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6, 63);
    out[0] = static_cast<char>(63 + n);
    size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) out[1 + bit / 6] += 1 << (5 - bit % 6);
    return out;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") {
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return parse_graph6(line);
        throw std::invalid_argument("graph6 file is empty: " + path);
    }
    return parse_edge_list(in);
}

namespace {

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

std::vector<std::pair<std::string, Graph>> parse_family_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("family spec needs name:params");
    std::string name = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    std::vector<std::pair<std::string, Graph>> out;
    if (name == "path") {
        out.emplace_back(spec, make_path(std::stoi(params)));
    } else if (name == "cycle") {
        out.emplace_back(spec, make_cycle(std::stoi(params)));
    } else if (name == "complete") {
        out.emplace_back(spec, make_complete(std::stoi(params)));
    } else if (name == "kbip") {
        auto ab = parse_ints(params, ',');
        if (ab.size() != 2) throw std::invalid_argument("kbip needs a,b");
        out.emplace_back(spec, make_complete_bipartite(ab[0], ab[1]));
    } else if (name == "star") {
        out.emplace_back(spec, make_star(std::stoi(params)));
    } else if (name == "all_connected") {
        int n = std::stoi(params);
        if (n > 6)
            throw std::invalid_argument("all_connected spec is capped at n = 6 "
                                        "(n = 7 is streaming-only via for_each_connected_graph)");
        int idx = 0;
        for_each_connected_graph(n, [&](const Graph& g) {
            out.emplace_back(spec + "#" + std::to_string(idx++), g);
        });
    } else if (name == "tree") {
        std::vector<Edge> edges;
        int n = 0;
        std::istringstream in(params);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            auto dash = tok.find('-');
            if (dash == std::string::npos) throw std::invalid_argument("tree spec needs u-v pairs");
            int u = std::stoi(tok.substr(0, dash)), v = std::stoi(tok.substr(dash + 1));
            edges.push_back(make_edge(u, v));
            n = std::max({n, u + 1, v + 1});
        }
        Graph g(std::max(n, 1), edges);
        if (!g.is_connected() || !girth(g).is_infinite())
            throw std::invalid_argument("tree spec does not describe a tree");
        out.emplace_back(spec, g);
    } else {
        throw std::invalid_argument("unsupported family: " + name);
    }
    return out;
}

namespace {

json set_to_json(VertexSet s) {
    json a = json::array();
    for (int v : elements(s)) a.push_back(v);
    return a;
}

json matching_to_json(const Matching& m) {
    json a = json::array();
    for (auto [u, v] : m.edges()) a.push_back(json::array({u, v}));
    return a;
}

}  // namespace

std::string complex_to_json(const SimplicialComplex& c) {
    json j;
    j["n"] = c.vertex_count();
    json facets = json::array();
    for (VertexSet f : c.facets()) facets.push_back(set_to_json(f));
    j["facets"] = facets;
    return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<VertexSet> facets;
    for (const auto& f : j.at("facets")) {
        VertexSet s;
        for (int v : f) s.add(v);
        facets.push_back(s);
    }
    return SimplicialComplex::from_facets(j.at("n").get<int>(), std::move(facets));
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
    json j;
    j["variables"] = ideal.variable_count();
    json gens = json::array();
    for (VertexSet g : ideal.generators()) gens.push_back(set_to_json(g));
    j["generators"] = gens;
    return j.dump();
}

namespace {

json certificate_json_rec(const ShellingCertificate& cert) {
    json j;
    j["q"] = cert.q;
    if (cert.pivot_vertex >= 0) j["pivot"] = cert.pivot_vertex;
    json matchings = json::array();
    for (const auto& m : cert.matching_order) matchings.push_back(matching_to_json(m));
    j["matching_order"] = matchings;
    json supports = json::array();
    for (VertexSet s : cert.supports) supports.push_back(set_to_json(s));
    j["supports"] = supports;
    json swaps = json::array();
    for (const auto& s : cert.swap_sets) swaps.push_back(set_to_json(s.vertices));
    j["swap_sets"] = swaps;
    j["route"] = cert.route;
    // 1 = held, 0 = failed, 2 = vacuous (support no longer under a facet)
    json shed = json::array(), lid = json::array();
    for (char b : cert.shedding_ok) shed.push_back(static_cast<int>(b));
    for (char b : cert.link_identity_ok) lid.push_back(static_cast<int>(b));
    j["shedding_ok"] = shed;
    j["link_identity_ok"] = lid;
    json links = json::array();
    for (const auto& l : cert.links) links.push_back(json::parse(complex_to_json(l)));
    j["links"] = links;
    json order = json::array();
    for (VertexSet f : cert.facet_order) order.push_back(set_to_json(f));
    j["facet_order"] = order;
    if (cert.recursion) j["recursion"] = certificate_json_rec(*cert.recursion);
    return j;
}

}  // namespace

std::string certificate_to_json(const ShellingCertificate& cert) {
    return certificate_json_rec(cert).dump();
}

}  // namespace matchfree

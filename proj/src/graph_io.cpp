#include "linkbomb/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

namespace linkbomb {

namespace {

std::runtime_error parse_error(std::size_t line_no, const std::string& what) {
    return std::runtime_error("edge list line " + std::to_string(line_no) + ": " + what);
}

} // namespace

DirectedMultigraph read_edge_list(std::istream& in) {
    std::vector<std::tuple<Node, Node, std::size_t>> edges;
    std::size_t declared_nodes = 0;
    std::size_t max_id = 0;
    bool any_edge = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream directive(line.substr(hash + 1));
            std::string key;
            std::size_t value = 0;
            if (directive >> key && key == "nodes" && directive >> value) {
                declared_nodes = value;
            }
            line.erase(hash);
        }
        std::istringstream fields(line);
        long long u = 0;
        long long v = 0;
        if (!(fields >> u)) {
            if (!fields.eof()) throw parse_error(line_no, "expected node id");
            continue;
        }
        if (!(fields >> v)) throw parse_error(line_no, "expected two node ids");
        long long mult = 1;
        if (!(fields >> mult)) {
            if (!fields.eof()) throw parse_error(line_no, "bad multiplicity");
            mult = 1;
        }
        std::string extra;
        if (fields >> extra) throw parse_error(line_no, "trailing field '" + extra + "'");
        if (u < 0 || v < 0) throw parse_error(line_no, "negative node id");
        if (mult < 1) throw parse_error(line_no, "multiplicity must be >= 1");
        if (u == v) throw parse_error(line_no, "self-loop");
        edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v), static_cast<std::size_t>(mult));
        max_id = std::max({max_id, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
        any_edge = true;
    }

    std::size_t n = any_edge ? max_id + 1 : 1;
    if (declared_nodes != 0) {
        if (any_edge && declared_nodes <= max_id) {
            throw std::runtime_error("edge list declares " + std::to_string(declared_nodes) +
                                     " nodes but uses id " + std::to_string(max_id));
        }
        n = declared_nodes;
    }
    DirectedMultigraph g(n);
    for (const auto& [u, v, mult] : edges) {
        g.add_edge(u, v, mult);
    }
    return g;
}

DirectedMultigraph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const DirectedMultigraph& g) {
    out << "# nodes " << g.node_count() << '\n';
    for (Node u = 0; u < g.node_count(); ++u) {
        for (const auto& [v, mult] : g.out_edges(u)) {
            out << u << ' ' << v;
            if (mult != 1) out << ' ' << mult;
            out << '\n';
        }
    }
}

void save_edge_list(const std::filesystem::path& path, const DirectedMultigraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_edge_list(out, g);
}

} // namespace linkbomb

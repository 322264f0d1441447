#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nuclique/errors.hpp"
#include "nuclique/graph.hpp"

namespace nuclique {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_index(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw InvalidInput(std::string("planted-graph: bad ") + what + " '" + tok + "'");
    }
    if (pos != tok.size() || v < 0)
        throw InvalidInput(std::string("planted-graph: bad ") + what + " '" + tok + "'");
    return v;
}

std::vector<int> parse_indices(const std::vector<std::string>& toks, std::size_t from) {
    std::vector<int> out;
    for (std::size_t k = from; k < toks.size(); ++k)
        out.push_back(parse_index(toks[k], "vertex index"));
    return out;
}

}  // namespace

PlantedInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            throw InvalidInput("planted-graph: CR line ending (format is LF)");
        lines.push_back(line);
    }
    std::size_t at = 0;
    auto next = [&]() -> const std::string& {
        if (at >= lines.size()) throw InvalidInput("planted-graph: truncated file");
        return lines[at++];
    };

    if (next() != "# planted-graph v1")
        throw InvalidInput("planted-graph: missing '# planted-graph v1' header");

    auto type_toks = tokenize(next());
    if (type_toks.size() != 2 || type_toks[0] != "type")
        throw InvalidInput("planted-graph: expected 'type clique|biclique'");

    PlantedInstance inst;
    std::vector<std::pair<int, int>> edges;

    if (type_toks[1] == "clique") {
        inst.kind = ProblemKind::Clique;
        auto nodes = tokenize(next());
        if (nodes.size() != 2 || nodes[0] != "nodes")
            throw InvalidInput("planted-graph: expected 'nodes N'");
        const int n = parse_index(nodes[1], "node count");
        auto planted = tokenize(next());
        if (planted.empty() || planted[0] != "planted")
            throw InvalidInput("planted-graph: expected 'planted ...'");
        inst.planted_left = VertexSet(parse_indices(planted, 1), n);
        while (at < lines.size()) {
            auto toks = tokenize(next());
            if (toks.size() != 3 || toks[0] != "edge")
                throw InvalidInput("planted-graph: expected 'edge u v'");
            edges.emplace_back(parse_index(toks[1], "endpoint"), parse_index(toks[2], "endpoint"));
        }
        inst.graph = Graph(n, edges);
        inst.planted_right = VertexSet({}, 0);
        if (!is_clique(*inst.graph, inst.planted_left))
            throw InvalidInput("planted-graph: planted set does not induce a clique");
    } else if (type_toks[1] == "biclique") {
        inst.kind = ProblemKind::Biclique;
        auto nodes = tokenize(next());
        if (nodes.size() != 3 || nodes[0] != "nodes")
            throw InvalidInput("planted-graph: expected 'nodes M N'");
        const int m = parse_index(nodes[1], "node count");
        const int n = parse_index(nodes[2], "node count");
        auto pl = tokenize(next());
        if (pl.empty() || pl[0] != "planted-left")
            throw InvalidInput("planted-graph: expected 'planted-left ...'");
        auto pr = tokenize(next());
        if (pr.empty() || pr[0] != "planted-right")
            throw InvalidInput("planted-graph: expected 'planted-right ...'");
        inst.planted_left = VertexSet(parse_indices(pl, 1), m);
        inst.planted_right = VertexSet(parse_indices(pr, 1), n);
        while (at < lines.size()) {
            auto toks = tokenize(next());
            if (toks.size() != 3 || toks[0] != "edge")
                throw InvalidInput("planted-graph: expected 'edge u v'");
            edges.emplace_back(parse_index(toks[1], "endpoint"), parse_index(toks[2], "endpoint"));
        }
        inst.bigraph = BipartiteGraph(m, n, edges);
        if (!is_biclique(*inst.bigraph, inst.planted_left, inst.planted_right))
            throw InvalidInput("planted-graph: planted sets do not induce a biclique");
    } else {
        throw InvalidInput("planted-graph: unknown type '" + type_toks[1] + "'");
    }
    return inst;
}

std::string format_instance(const PlantedInstance& inst) {
    std::ostringstream out;
    out << "# planted-graph v1\n";
    if (inst.kind == ProblemKind::Clique) {
        const Graph& g = inst.clique_graph();
        out << "type clique\n";
        out << "nodes " << g.num_vertices() << "\n";
        out << "planted";
        for (int v : inst.planted_left.members()) out << " " << v;
        out << "\n";
        for (auto [i, j] : g.edges()) out << "edge " << i << " " << j << "\n";
    } else {
        const BipartiteGraph& g = inst.biclique_graph();
        out << "type biclique\n";
        out << "nodes " << g.left_count() << " " << g.right_count() << "\n";
        out << "planted-left";
        for (int v : inst.planted_left.members()) out << " " << v;
        out << "\n";
        out << "planted-right";
        for (int v : inst.planted_right.members()) out << " " << v;
        out << "\n";
        for (auto [u, v] : g.edges()) out << "edge " << u << " " << v << "\n";
    }
    return out.str();
}

PlantedInstance read_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance(const std::string& path, const PlantedInstance& inst) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
    out << format_instance(inst);
}

}  // namespace nuclique

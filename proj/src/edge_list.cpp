#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "resweep/errors.hpp"
#include "resweep/graph.hpp"

namespace resweep {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

Weight parse_weight(std::string_view tok, std::size_t line_no) {
    Weight w = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw FormatError("weight '" + std::string(tok) + "' is not an integer", line_no);
    if (w <= 0) throw FormatError("weight '" + std::string(tok) + "' is not positive", line_no);
    return w;
}

}  // namespace

LabeledGraph load_edge_list(std::istream& in) {
    struct Line {
        VertexId u, v;
        Weight w;
    };
    LabeledGraph out;
    std::vector<Line> lines;
    auto intern = [&](std::string_view label) {
        auto [it, inserted] = out.index.try_emplace(std::string(label), static_cast<VertexId>(out.labels.size()));
        if (inserted) out.labels.emplace_back(label);
        return it->second;
    };

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 2 || tokens.size() > 3)
            throw FormatError("expected 'u v [w]', got " + std::to_string(tokens.size()) + " fields", line_no);
        Weight w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1;
        VertexId u = intern(tokens[0]);
        VertexId v = intern(tokens[1]);
        lines.push_back({u, v, w});
    }
    if (out.labels.empty()) throw FormatError("edge list contains no edges");

    GraphBuilder b(out.labels.size());
    for (const Line& l : lines) b.add_edge(l.u, l.v, l.w);  // loops become m(v,v) += 2w
    out.graph = std::move(b).build();
    return out;
}

LabeledGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const LabeledGraph& lg) {
    const Graph& g = lg.graph;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.target < u) continue;
            Weight w = nb.weight;
            if (nb.target == u) {
                if (w % 2 != 0)
                    throw std::invalid_argument("write_edge_list: odd diagonal at '" + lg.labels[u] + "'");
                w /= 2;
            }
            out << lg.labels[u] << ' ' << lg.labels[nb.target];
            if (w != 1) out << ' ' << w;
            out << '\n';
        }
    }
}

}  // namespace resweep

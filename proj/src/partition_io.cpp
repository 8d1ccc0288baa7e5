#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "resweep/errors.hpp"
#include "resweep/partition.hpp"

namespace resweep {

void write_partition(std::ostream& out, const LabeledGraph& g, const Partition& p) {
    if (p.num_vertices() != g.graph.num_vertices())
        throw std::invalid_argument("write_partition: partition does not match graph");
    for (VertexId v = 0; v < p.num_vertices(); ++v) out << g.labels[v] << ' ' << p.community_of(v) << '\n';
}

Partition read_partition(std::istream& in, const LabeledGraph& g) {
    constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> labels(g.graph.num_vertices(), kUnset);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream fields(raw);
        std::string label, id, extra;
        if (!(fields >> label)) continue;
        if (!(fields >> id) || (fields >> extra))
            throw FormatError("expected 'vertexLabel communityId'", line_no);
        auto it = g.index.find(label);
        if (it == g.index.end()) throw FormatError("unknown vertex '" + label + "'", line_no);
        std::uint64_t c = 0;
        auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), c);
        if (ec != std::errc() || ptr != id.data() + id.size() || c == kUnset)
            throw FormatError("community id '" + id + "' is not a non-negative integer", line_no);
        if (labels[it->second] != kUnset) throw FormatError("vertex '" + label + "' listed twice", line_no);
        labels[it->second] = c;
    }
    for (VertexId v = 0; v < labels.size(); ++v)
        if (labels[v] == kUnset) throw FormatError("vertex '" + g.labels[v] + "' has no community");
    return Partition::from_labels(labels);
}

Partition read_partition_file(const std::string& path, const LabeledGraph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_partition(in, g);
}

}  // namespace resweep

#include "resweep/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "resweep/engine.hpp"
#include "resweep/errors.hpp"
#include "resweep/generators.hpp"
#include "resweep/graph.hpp"
#include "resweep/modularity.hpp"
#include "resweep/oracle.hpp"
#include "resweep/partition.hpp"

namespace resweep::cli {

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Error tied to an input file, reported as "path:line: message".
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string where(const std::string& path, std::size_t line) {
    std::string name = path == "-" ? "<stdin>" : path;
    return line ? name + ":" + std::to_string(line) : name;
}

LabeledGraph read_graph(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return load_edge_list(in);
        std::ifstream file(path);
        if (!file) throw InputError("cannot open '" + path + "'");
        return load_edge_list(file);
    } catch (const FormatError& e) {
        throw InputError(where(path, e.line()) + ": " + e.what());
    } catch (const IsolatedVertexError& e) {
        throw InputError(where(path, 0) + ": " + e.what());
    }
}

Partition read_partition_at(const std::string& path, const LabeledGraph& g) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    try {
        return read_partition(file, g);
    } catch (const FormatError& e) {
        throw InputError(where(path, e.line()) + ": " + e.what());
    }
}

/// Output stream for an optional path; falls back to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw InputError("cannot write '" + path + "'");
        stream_ = file_.get();
    }
    std::ostream& get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

int run_detect(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto g = read_graph(cfg.input, in);
    DetectOptions opts;
    opts.t_min = cfg.t_min;
    opts.ensure_connected = cfg.ensure_connected;
    const auto result = detect(g.graph, opts);

    if (!cfg.trace.empty()) {
        Sink trace(cfg.trace, out);
        write_trace_csv(trace.get(), result.trace);
    }
    std::ostream& summary = cfg.output.empty() ? err : out;
    if (!cfg.output.empty()) {
        Sink part(cfg.output, out);
        write_partition(part.get(), g, result.partition);
    } else {
        write_partition(out, g, result.partition);
    }

    const auto& last = result.trace.back();
    summary << "communities " << result.partition.size() << '\n'
            << "q_1 " << fmt12(q_t(g.graph, result.partition, 1.0)) << '\n'
            << "q_t_min " << fmt12(q_t(g.graph, result.partition, cfg.t_min.to_double())) << '\n'
            << "resolution " << fmt12(last.t.to_double()) << '\n'
            << "sweeps " << result.trace.size() - 1 << '\n';
    if (cfg.exact_report) {
        summary << "resolution_exact " << last.t.to_string() << '\n';
        for (std::size_t i = 0; i < result.trace.size(); ++i)
            summary << "t_exact " << i << ' ' << result.trace[i].t.to_string() << '\n';
    }
    return kSuccess;
}

int run_score(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const auto g = read_graph(cfg.input, in);
    const auto p = read_partition_at(cfg.partition_path, g);
    const auto agg = CommunityAggregates::build(g.graph, p);
    const double t = cfg.t.to_double();
    out << "q_t " << fmt12(q_t(agg, t)) << '\n'
        << "q_bar_t " << fmt12(q_bar_t_exact(agg, cfg.t).convert_to<double>()) << '\n'
        << "communities " << p.size() << '\n'
        << "alpha " << fmt12(diagonal_product_mass(agg).to_double()) << '\n';
    if (cfg.exact_report) out << "q_t_exact " << q_t_exact(agg, cfg.t) << '\n';
    return kSuccess;
}

int run_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const auto g = read_graph(cfg.input, in);
    const auto p = read_partition_at(cfg.partition_path, g);
    const auto report = bounds_report(g.graph, p, cfg.t);
    write_bounds_report(out, report);
    return report.all_pass() ? kSuccess : kVerificationFailure;
}

int run_gen(const RunConfig& cfg, std::ostream& out) {
    Sink sink(cfg.output, out);
    if (cfg.generator == "daisy") {
        write_edge_list(sink.get(), LabeledGraph::with_index_labels(gen_daisy(cfg.r)));
    } else if (cfg.generator == "tree") {
        write_edge_list(sink.get(), LabeledGraph::with_index_labels(gen_complete_binary_tree(cfg.height)));
    } else if (cfg.generator == "tree-partition") {
        const auto g = LabeledGraph::with_index_labels(gen_complete_binary_tree(cfg.height));
        write_partition(sink.get(), g, tree_reference_partition(cfg.height));
    } else {
        throw InputError("unknown generator '" + cfg.generator + "'");
    }
    return kSuccess;
}

int run_oracle(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const auto g = read_graph(cfg.input, in);
    const auto best = optimal_q(g.graph, cfg.t);
    out << "best_q " << fmt12(best.best_q) << '\n'
        << "communities " << best.best_partition.size() << '\n'
        << "partitions_examined " << best.partitions_examined << '\n';
    if (cfg.exact_report) out << "best_q_exact " << best.best_q_exact << '\n';
    Sink part(cfg.output, out);
    write_partition(part.get(), g, best.best_partition);
    return kSuccess;
}

int run_mincut(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const auto g = read_graph(cfg.input, in);
    out << "min_cut " << min_cut(g.graph) << '\n';
    return kSuccess;
}

}  // namespace

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.subcommand == "detect") return run_detect(cfg, in, out, err);
        if (cfg.subcommand == "score") return run_score(cfg, in, out);
        if (cfg.subcommand == "verify") return run_verify(cfg, in, out);
        if (cfg.subcommand == "gen") return run_gen(cfg, out);
        if (cfg.subcommand == "oracle") return run_oracle(cfg, in, out);
        if (cfg.subcommand == "mincut") return run_mincut(cfg, in, out);
        err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kInputError;
}

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Community detection by resolution sweep over weakly optimal partitions"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string t_text = "1", t_min_text = "1";

    auto* detect_cmd = app.add_subcommand("detect", "Build a submodular partition by sweeping the resolution down");
    detect_cmd->add_option("graph", cfg.input, "Edge list ('-' for stdin)");
    detect_cmd->add_option("--t-min", t_min_text, "Stop once the resolution drops below this value");
    detect_cmd->add_option("--trace", cfg.trace, "Write the trace CSV (step,t,k,q_t,q_1,alpha)");
    detect_cmd->add_option("--output,-o", cfg.output, "Write the partition here (default stdout)");
    detect_cmd->add_flag("--ensure-connected", cfg.ensure_connected, "Split communities into connected parts");
    detect_cmd->add_flag("--exact-report", cfg.exact_report, "Also print resolutions as exact fractions");

    auto* score_cmd = app.add_subcommand("score", "Print Q_t, its complement, community count and alpha");
    score_cmd->add_option("graph", cfg.input, "Edge list")->required();
    score_cmd->add_option("partition", cfg.partition_path, "Partition file")->required();
    score_cmd->add_option("--t", t_text, "Resolution");
    score_cmd->add_flag("--exact-report", cfg.exact_report, "Also print Q_t as an exact fraction");

    auto* verify_cmd = app.add_subcommand("verify", "Certify weak optimality and check the modularity bounds");
    verify_cmd->add_option("graph", cfg.input, "Edge list")->required();
    verify_cmd->add_option("partition", cfg.partition_path, "Partition file")->required();
    verify_cmd->add_option("--t", t_text, "Resolution");

    auto* gen_cmd = app.add_subcommand("gen", "Write an example graph or reference partition");
    gen_cmd->require_subcommand(1);
    auto* gen_daisy_cmd = gen_cmd->add_subcommand("daisy", "Daisy graph");
    gen_daisy_cmd->add_option("--r", cfg.r, "Petal multiplier (25r petals)")->required();
    gen_daisy_cmd->add_option("--output,-o", cfg.output, "Output path");
    auto* gen_tree_cmd = gen_cmd->add_subcommand("tree", "Complete binary tree");
    gen_tree_cmd->add_option("--height", cfg.height, "Height")->required();
    gen_tree_cmd->add_option("--output,-o", cfg.output, "Output path");
    auto* gen_part_cmd = gen_cmd->add_subcommand("tree-partition", "Root-subtree reference partition of a tree");
    gen_part_cmd->add_option("--height", cfg.height, "Height")->required();
    gen_part_cmd->add_option("--output,-o", cfg.output, "Output path");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum of Q_t (at most 12 vertices)");
    oracle_cmd->add_option("graph", cfg.input, "Edge list ('-' for stdin)");
    oracle_cmd->add_option("--t", t_text, "Resolution");
    oracle_cmd->add_option("--output,-o", cfg.output, "Write the partition here (default stdout)");
    oracle_cmd->add_flag("--exact-report", cfg.exact_report, "Also print the optimum as an exact fraction");

    auto* mincut_cmd = app.add_subcommand("mincut", "Global minimum cut weight");
    mincut_cmd->add_option("graph", cfg.input, "Edge list ('-' for stdin)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
    for (auto* sub : gen_cmd->get_subcommands()) cfg.generator = sub->get_name();
    try {
        cfg.t = ExactRatio::parse(t_text);
        cfg.t_min = ExactRatio::parse(t_min_text);
        if (cfg.t.is_zero() || cfg.t_min.is_zero()) throw std::invalid_argument("resolution must be positive");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return run(cfg, in, out, err);
}

}  // namespace resweep::cli

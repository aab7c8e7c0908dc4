#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "swapmc/connectivity.hpp"
#include "swapmc/enumerate.hpp"
#include "swapmc/gog.hpp"
#include "swapmc/graph.hpp"
#include "swapmc/mcmc.hpp"

using json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream in(normalized);
    std::vector<int> values;
    int v = 0;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw swapmc::InvalidInput("malformed integer list: " + text);
    return values;
}

// Inline comma list, or a path to a whitespace/comma separated file.
std::vector<int> load_int_list(const std::string& arg) {
    std::ifstream file(arg);
    if (file.good()) {
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return parse_int_list(buffer.str());
    }
    return parse_int_list(arg);
}

swapmc::Graph load_graph(const std::string& path) {
    if (path == "-") return swapmc::parse_graph(std::cin);
    std::ifstream file(path);
    if (!file.good()) throw swapmc::InvalidInput("cannot open graph file: " + path);
    return swapmc::parse_graph(file);
}

json graph_to_json(const swapmc::Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

struct EnumerateOptions {
    std::string space;
    std::string degseq;
    std::optional<long> triangles;
    std::string triangle_seq;
    bool count_only = false;
    std::string histogram;
    bool classes = false;
    bool summary = false;
    std::size_t max_census = swapmc::kDefaultCensusCap;
    unsigned jobs = 1;
};

swapmc::EnumFilter build_filter(const std::optional<long>& triangles, const std::string& seq) {
    swapmc::EnumFilter filter;
    if (triangles) filter.triangle_count = *triangles;
    if (!seq.empty()) filter.triangle_seq = load_int_list(seq);
    return filter;
}

int run_enumerate(const EnumerateOptions& opt) {
    const auto space = swapmc::GraphSpace::from_name(opt.space);
    const auto degrees = load_int_list(opt.degseq);
    const auto filter = build_filter(opt.triangles, opt.triangle_seq);
    const auto census = swapmc::enumerate_graphs(space, degrees, filter, opt.max_census, opt.jobs);

    if (opt.count_only) {
        std::cout << census.size() << '\n';
        return 0;
    }
    if (!opt.histogram.empty()) {
        std::map<long, long> counts;
        for (const auto& g : census) ++counts[swapmc::triangle_count(g)];
        json out = json::object();
        for (const auto& [tri, count] : counts) out[std::to_string(tri)] = count;
        std::cout << out.dump() << '\n';
        return 0;
    }
    if (opt.classes || opt.summary) {
        const auto classes = swapmc::isomorphism_classes(census);
        json out;
        out["total"] = classes.total;
        if (opt.summary && space == swapmc::GraphSpace::simple()) {
            std::map<long, long> counts;
            for (const auto& g : census) ++counts[swapmc::triangle_count(g)];
            json hist = json::object();
            for (const auto& [tri, count] : counts) hist[std::to_string(tri)] = count;
            out["triangle_histogram"] = std::move(hist);
        }
        if (opt.summary) {
            json sizes = json::array();
            for (const auto& cls : classes.classes) sizes.push_back(cls.size);
            out["class_sizes"] = std::move(sizes);
        } else {
            json rows = json::array();
            for (const auto& cls : classes.classes)
                rows.push_back({{"size", cls.size}, {"representative", graph_to_json(cls.representative)}});
            out["classes"] = std::move(rows);
        }
        std::cout << out.dump() << '\n';
        return 0;
    }
    for (const auto& g : census) std::cout << graph_to_json(g).dump() << '\n';
    return 0;
}

struct SampleOptions {
    std::string space;
    std::string input = "-";
    long count = 0;
    std::uint64_t seed = 0;
    long burn_in = -1;
    long thin = -1;
};

int run_sample(const SampleOptions& opt) {
    const auto space = swapmc::GraphSpace::from_name(opt.space);
    const auto start = load_graph(opt.input);
    const long burn_in = opt.burn_in >= 0 ? opt.burn_in : swapmc::default_burn_in(start.edge_count());
    const long thin = opt.thin >= 1 ? opt.thin : std::max(1, start.edge_count());

    swapmc::Chain chain(start, space, opt.seed);
    chain.run(burn_in);
    for (long s = 0; s < opt.count; ++s) {
        chain.run(thin);
        json edges = json::array();
        for (const auto& [u, v] : chain.current().edges()) edges.push_back({u, v});
        json line{{"edges", std::move(edges)}, {"step", chain.steps_taken()}};
        std::cout << line.dump() << '\n';
    }
    return 0;
}

struct GogOptions {
    std::string space;
    std::string degseq;
    int k = 2;
    std::optional<long> fix_triangles;
    std::string fix_triangle_seq;
    std::size_t max_census = swapmc::kDefaultCensusCap;
    unsigned jobs = 1;
    bool classes = false;
};

int run_gog(const GogOptions& opt) {
    swapmc::GogSpec spec;
    spec.space = swapmc::GraphSpace::from_name(opt.space);
    spec.degseq = load_int_list(opt.degseq);
    spec.swap_arity = opt.k;
    spec.keep = build_filter(opt.fix_triangles, opt.fix_triangle_seq);
    spec.max_census = opt.max_census;
    spec.jobs = opt.jobs;
    const auto report = swapmc::build_gog(spec);

    json out;
    out["vertices"] = report.vertex_count;
    out["component_sizes"] = report.component_sizes;
    out["frozen_count"] = report.frozen_count;
    if (opt.classes) {
        const auto classes = swapmc::isomorphism_classes(report.census);
        const auto matrix = swapmc::components_intersect_classes(report, classes);
        json rows = json::array();
        for (const auto& row : matrix) {
            json cells = json::array();
            for (bool cell : row) cells.push_back(cell);
            rows.push_back(std::move(cells));
        }
        out["class_sizes"] = json::array();
        for (const auto& cls : classes.classes) out["class_sizes"].push_back(cls.size);
        out["class_component_matrix"] = std::move(rows);
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int run_check(const std::string& space_name, const std::string& degseq) {
    const auto verdict = swapmc::space_connectivity(swapmc::GraphSpace::from_name(space_name),
                                                    load_int_list(degseq));
    std::cout << swapmc::to_string(verdict.status);
    if (!verdict.witness.empty()) std::cout << ": " << verdict.witness;
    std::cout << '\n';
    return 0;
}

int run_canon(const std::string& input) {
    const auto g = load_graph(input);
    const auto canon = swapmc::canonical_form(g);
    json out = graph_to_json(canon.graph);
    out["relabeling"] = canon.relabeling;
    std::cout << out.dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-preserving edge-swap sampling, enumeration and graph-of-graphs analysis"};
    app.require_subcommand(1);

    std::string check_space, check_degseq;
    auto* check = app.add_subcommand("check", "connectivity verdict for a space and degree sequence");
    check->add_option("--space", check_space, "graph space name")->required();
    check->add_option("--degseq", check_degseq, "degree sequence (comma list or file)")->required();

    EnumerateOptions enum_opt;
    auto* enumerate = app.add_subcommand("enumerate", "census of a space for a degree sequence");
    enumerate->add_option("--space", enum_opt.space)->required();
    enumerate->add_option("--degseq", enum_opt.degseq)->required();
    enumerate->add_option("--triangles", enum_opt.triangles, "keep graphs with this triangle count");
    enumerate->add_option("--triangle-seq", enum_opt.triangle_seq, "keep graphs with this triangle sequence");
    enumerate->add_flag("--count-only", enum_opt.count_only, "print only the census size");
    enumerate->add_option("--histogram", enum_opt.histogram, "print a histogram (supported: triangles)")
        ->check(CLI::IsMember({"triangles"}));
    enumerate->add_flag("--classes", enum_opt.classes, "print isomorphism classes");
    enumerate->add_flag("--summary", enum_opt.summary, "print totals, histogram and class sizes");
    enumerate->add_option("--max-census", enum_opt.max_census, "census size cap");
    enumerate->add_option("--jobs", enum_opt.jobs, "parallel workers");

    SampleOptions sample_opt;
    auto* sample = app.add_subcommand("sample", "MCMC samples with the start graph's degree sequence");
    sample->add_option("--space", sample_opt.space)->required();
    sample->add_option("--input", sample_opt.input, "graph file ('-' for stdin)");
    sample->add_option("--count", sample_opt.count, "number of retained samples")->required();
    sample->add_option("--seed", sample_opt.seed, "64-bit RNG seed");
    sample->add_option("--burn-in", sample_opt.burn_in, "burn-in steps (default 20 m ln m + 1000)");
    sample->add_option("--thin", sample_opt.thin, "steps between samples (default m)");

    GogOptions gog_opt;
    auto* gog = app.add_subcommand("gog", "connected components of the graph of graphs");
    gog->add_option("--space", gog_opt.space)->required();
    gog->add_option("--degseq", gog_opt.degseq)->required();
    gog->add_option("--k", gog_opt.k, "swap arity");
    gog->add_option("--fix-triangles", gog_opt.fix_triangles, "restrict to a triangle count");
    gog->add_option("--fix-triangle-seq", gog_opt.fix_triangle_seq, "restrict to a triangle sequence");
    gog->add_option("--max-census", gog_opt.max_census, "census size cap");
    gog->add_option("--jobs", gog_opt.jobs, "parallel workers");
    gog->add_flag("--classes", gog_opt.classes, "include the class/component incidence matrix");

    std::string canon_input = "-";
    auto* canon = app.add_subcommand("canon", "canonical form and relabeling of a graph");
    canon->add_option("--input", canon_input, "graph file ('-' for stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(check_space, check_degseq);
        if (*enumerate) return run_enumerate(enum_opt);
        if (*sample) return run_sample(sample_opt);
        if (*gog) return run_gog(gog_opt);
        if (*canon) return run_canon(canon_input);
    } catch (const swapmc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
